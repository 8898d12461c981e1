#ifndef INFOTHERM_ACCEPTANCE_HPP
#define INFOTHERM_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace infotherm::acceptance {

struct CriterionResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 0xA11CE;
  unsigned threads = 0;
  // test hook: name of a criterion whose tolerance is deliberately corrupted
  std::string inject_fault;
  // run only the named criterion (empty = all)
  std::string only;
};

// Runs every criterion, printing one pass/fail line per criterion to `log`.
std::vector<CriterionResult> run_all(const Options& opts, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace infotherm::acceptance

#endif
