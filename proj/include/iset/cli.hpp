#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iset::cli {

// exit codes: 0 ok, 1 internal/violated verdicts, 2 parse error,
// 3 budget exhausted, 4 degenerate input
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitDegenerate = 4;

inline constexpr const char* kArtifactName = "isetlab";
inline constexpr const char* kArtifactVersion = "0.1.0";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace iset::cli
