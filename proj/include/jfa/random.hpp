#pragma once

// Seeded generators for the randomized suites. Draws use only the raw engine
// output, so a seed yields the same objects on every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "jfa/core.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/reductions.hpp"

namespace jfa {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  // Independent stream for a sub-suite.
  Rng fork() { return Rng(engine_()); }

 private:
  std::mt19937_64 engine_;
};

Expr random_regex(Rng& rng, const Alphabet& a, std::size_t depth);
Expr random_alpha_shuf(Rng& rng, const Alphabet& a, std::size_t depth);
FiniteLanguage random_finite_language(Rng& rng, const Alphabet& a,
                                      std::size_t max_words,
                                      std::size_t max_length);
// States 1..max_states, letter rules with probability 1/3 per (p, a, q),
// occasional ε-rules, start 0, random finals.
Machine random_machine(Rng& rng, const Alphabet& a, std::size_t max_states);
CnfFormula random_cnf(Rng& rng, std::size_t n, std::size_t m);

// Every formula with n variables and m clauses, clauses and formulas taken
// as multisets (so literal repetition inside a clause is included).
std::vector<CnfFormula> all_cnf(std::size_t n, std::size_t m);

// All binary words of length <= n.
std::vector<Word> all_bit_strings(std::size_t n);

}  // namespace jfa
