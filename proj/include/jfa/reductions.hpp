#pragma once

// Hardness gadgets and the brute-force oracles they are checked against.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jfa/core.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"

namespace jfa {

struct Literal {
  std::size_t var;  // 1-based
  bool positive;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;  // exactly three literals

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  // Throws DomainError unless every clause has three in-range literals.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;  // 0-based

  bool operator==(const CnfFormula&) const = default;
};

// DIMACS: `c` comment lines, `p cnf n m`, clauses of signed integers ended
// by 0. Every clause must have exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string print_dimacs(const CnfFormula& f);

struct Ebc2Instance {
  std::vector<Word> blocks;  // over binary_alphabet()
  Word target;

  bool operator==(const Ebc2Instance&) const = default;
};

// `v: <bits>` then one `u: <bits>` line per block; `@` is the empty word.
Ebc2Instance parse_ebc2(std::string_view text);
std::string print_ebc2(const Ebc2Instance& inst);

inline constexpr std::size_t kDefaultSatCap = 20;
inline constexpr std::size_t kDefaultEbc2Cap = 8;
inline constexpr std::size_t kDefaultSmCap = 6;

// Satisfying assignment (0-based) or nullopt. ResourceError past the cap.
std::optional<std::vector<bool>> brute_sat(const CnfFormula& f,
                                           std::size_t cap = kDefaultSatCap);
// Block order π with v = u_π(1) ... u_π(k), or nullopt.
std::optional<std::vector<std::size_t>> brute_ebc2(
    const Ebc2Instance& inst, std::size_t cap = kDefaultEbc2Cap);

// JFA over {c1..cm} with states q0, qi^T, qi^F and the word c1...cm:
// accepted iff f is satisfiable.
std::pair<Machine, Word> sat_to_jfa(const CnfFormula& f);

// Unary regular expression over `letter` of `alphabet` (default {a}) whose
// language is a* iff f is unsatisfiable. Length ℓ encodes x_i := (ℓ mod p_i
// = 1) for the first n primes.
Expr stockmeyer_meyer_expr(const CnfFormula& f, std::size_t cap = kDefaultSmCap);
Expr stockmeyer_meyer_expr(const CnfFormula& f, const Alphabet& alphabet,
                           Symbol letter, std::size_t cap = kDefaultSmCap);
std::vector<std::size_t> first_primes(std::size_t n);

// Machine over {a, b} with JFA language (b^{⧢,*} ⧢ Ê) ∪ (a ⧢ b)^{⧢,*}.
Machine build_nonregularity_jfa(const CnfFormula& f,
                                std::size_t cap = kDefaultSmCap);
// NFA over {a, b} for ({b}* ⧢ L(E)) ∪ a*b; commutative iff f unsatisfiable.
Machine build_noncommutativity_nfa(const CnfFormula& f,
                                   std::size_t cap = kDefaultSmCap);

// Fixed GJFA for binary exact block cover, tokens 0 1 0b 1b c cb st.
const Alphabet& ebc2_alphabet();
Machine ebc2_fixed_machine();
Word ebc2_to_word(const Ebc2Instance& inst);

struct SatGjfaLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> occurrences;  // p_i, sums to 3m
  std::size_t code_length = 0;           // ⌈log2 n⌉
  std::vector<Word> codes;               // binary of i-1, padded

  static SatGjfaLayout of(const CnfFormula& f);
};

// Fixed GJFA for 3SAT, tokens 0 1 0b 1b cT cF cb st hash stb hashb.
const Alphabet& sat_gjfa_alphabet();
Machine sat_fixed_gjfa();
Word sat_aux_word(const SatGjfaLayout& layout);
Word sat_formula_word(const CnfFormula& f, const SatGjfaLayout& layout);
Word sat_to_gjfa_word(const CnfFormula& f, const SatGjfaLayout& layout);
Word sat_to_gjfa_word(const CnfFormula& f);

// Binary GJFA and encoded word via the homomorphism h(x_i) = 1 0^i 1.
std::pair<Machine, Word> binary_wrap(const Machine& m, const Word& w);

}  // namespace jfa
