#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binperm {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (args[0] is the program name).
///
///   search  --n N [--tester auto|direct|agw|hermite|cross-check] [--skip-linearized]
///           [--i LO-HI] [--a-reduction] [--workers W] [--out PATH] [--format json|csv]
///   verify  --case f1|f2|h2|f3|f4 --base-n B [--tester auto|direct|agw] [--out PATH]
///   index   --n N --i I
///   hermite --n N --i I --a HEX [--t T|all]
///   test    --n N --i I --a HEX
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binperm
