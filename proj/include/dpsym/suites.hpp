// Invariant suites run by `dpsym verify`.

#ifndef DPSYM_SUITES_HPP_
#define DPSYM_SUITES_HPP_

#include <string>
#include <vector>

#include "dpsym/serialize.hpp"

namespace dpsym {

struct SuiteOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  int max_word_length = 12;
  int random_words = 200;
};

struct SuiteCheck {
  std::string name;
  bool passed = false;
  Json detail;  // counterexample or summary; null when there is nothing to say
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool passed() const;
};

SuiteReport run_coxeter_suite(const SuiteOptions& opts);
SuiteReport run_birational_suite(const SuiteOptions& opts);
SuiteReport run_period_suite(const SuiteOptions& opts);
SuiteReport run_equivalence_suite(const SuiteOptions& opts);

/// "coxeter", "birational", "period", "equivalence" or "all".
std::vector<SuiteReport> run_suites(const std::string& which, const SuiteOptions& opts);

/// Uniform random word over all twelve symbols.
Word random_word(std::mt19937_64& rng, int max_len);

Json to_json(const SuiteReport& r);

}  // namespace dpsym

#endif  // DPSYM_SUITES_HPP_
