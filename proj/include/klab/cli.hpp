/**
 * @file cli.hpp
 * @brief Command-line front end shared by the klab tool and the tests.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klab::cli {

inline constexpr const char* kSchema = "klab-report/1";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInvalidInput = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace klab::cli
