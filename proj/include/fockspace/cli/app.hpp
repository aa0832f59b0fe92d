#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs one fockctl invocation. args excludes the program name. Reports go to
/// `out` unless --report names a file; warnings and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockspace::cli
