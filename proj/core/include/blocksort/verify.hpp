#ifndef BLOCKSORT_VERIFY_HPP
#define BLOCKSORT_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace blocksort {

/// Depth of the verification run. `smoke` trims every enumeration to run in
/// seconds; `desk` is the full acceptance suite; `deep` extends the
/// exhaustive ranges one degree where memory and patience allow.
enum class VerifyLevel { smoke, desk, deep };

VerifyLevel parse_verify_level(const std::string& s);  // throws on bad name
const char* to_string(VerifyLevel level);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::desk;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct CheckResult {
  int criterion = 0;  // 1..8
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every check of the acceptance suite at the requested level. When
/// `progress` is non-null each check is reported there as it finishes.
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          std::ostream* progress = nullptr);

/// One pass/fail line per criterion (1..8); false if any criterion failed.
bool print_criterion_summary(const std::vector<CheckResult>& results,
                             std::ostream& out);

}  // namespace blocksort

#endif  // BLOCKSORT_VERIFY_HPP
