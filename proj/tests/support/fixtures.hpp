#ifndef WMSD_TESTS_FIXTURES_HPP_
#define WMSD_TESTS_FIXTURES_HPP_

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "wmsd/model.hpp"

namespace fx {

inline std::string data_path(const std::string& name) {
  return std::string(WMSD_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline wmsd::cli::RunConfig config(const std::string& name) {
  return wmsd::cli::parse_config(read_data(name));
}

inline wmsd::cli::Run run(const std::string& csv, const std::string& cfg) {
  return wmsd::cli::load_run(read_data(csv), config(cfg));
}

inline wmsd::WeightVector weights(std::initializer_list<double> raw) {
  std::vector<double> v(raw);
  return wmsd::WeightVector::from_raw(v);
}

inline wmsd::WeightVector weights(const std::vector<double>& raw) {
  return wmsd::WeightVector::from_raw(raw);
}

}  // namespace fx

#endif  // WMSD_TESTS_FIXTURES_HPP_
