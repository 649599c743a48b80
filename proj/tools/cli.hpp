#pragma once

#include <iosfwd>

namespace segver::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  ///< certificate rejected or none found
inline constexpr int kSpecial = 2;   ///< special system or defective secant variety
inline constexpr int kInconclusive = 3;
inline constexpr int kUsage = 64;    ///< malformed arguments or input

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace segver::cli
