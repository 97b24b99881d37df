#ifndef WMSD_CLI_APP_HPP_
#define WMSD_CLI_APP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wmsd::cli {

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out is given; errors are written to `err` as one JSON
/// object per line. Returns 0 on success, 1 for validation errors, 2 for
/// computation errors and 3 for I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmsd::cli

#endif  // WMSD_CLI_APP_HPP_
