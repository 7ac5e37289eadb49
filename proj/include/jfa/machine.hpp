#pragma once

// (General) finite machines read three ways: as classical automata (move
// relation), as jumping finite automata, and as general jumping automata.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jfa/core.hpp"

namespace jfa {

using StateId = std::uint32_t;

struct Rule {
  StateId from;
  Word label;  // may be empty (ε-rule)
  StateId to;

  bool operator==(const Rule&) const = default;
};

enum class MachineKind { FiniteMachine, GeneralFiniteMachine };

enum class Semantics { FA, JFA, GJFA };

const char* to_string(Semantics s) noexcept;

class Machine {
 public:
  explicit Machine(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  // Adds a state and returns its id; names must be unique.
  StateId add_state(std::string name);
  void add_rule(StateId from, Word label, StateId to);
  void set_start(StateId s);
  void add_final(StateId s);
  void set_finals(std::vector<StateId> finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  const std::string& state_name(StateId s) const { return names_.at(s); }
  std::optional<StateId> find_state(std::string_view name) const;
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  StateId start() const;
  bool has_start() const noexcept { return start_.has_value(); }
  bool is_final(StateId s) const { return finals_.at(s); }
  std::vector<StateId> finals() const;

  MachineKind kind() const noexcept;
  // Outgoing rule indices per state.
  const std::vector<std::vector<std::size_t>>& outgoing() const;

  bool operator==(const Machine& other) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::map<std::string, StateId, std::less<>> by_name_;
  std::vector<Rule> rules_;
  std::optional<StateId> start_;
  std::vector<bool> finals_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

// Machine file format:
//   alphabet: a b c
//   states: s r t
//   start: s
//   final: s          (zero or more final lines, each may list several)
//   rule: s a r       (label is a word literal; `@` is ε)
Machine parse_machine(std::string_view text);
std::string print_machine(const Machine& m);

bool fa_accepts(const Machine& m, const Word& w);
// Finite machines only; DomainError otherwise.
bool jfa_accepts(const Machine& m, const Word& w);
bool gjfa_accepts(const Machine& m, const Word& w);
bool accepts(const Machine& m, Semantics sem, const Word& w);

// Bounded enumeration {w : |w| <= n, accepted}. The default entry points
// filter Σ^{<=n} in parallel; the *_serial variants are the single-threaded
// reference implementations kept for cross-checking.
FiniteLanguage fa_language_upto(const Machine& m, std::size_t n);
FiniteLanguage jfa_language_upto(const Machine& m, std::size_t n);
FiniteLanguage gjfa_language_upto(const Machine& m, std::size_t n);
FiniteLanguage language_upto(const Machine& m, Semantics sem, std::size_t n);
FiniteLanguage language_upto_serial(const Machine& m, Semantics sem,
                                    std::size_t n);
// JFA enumeration by Parikh vectors: one acceptance test per vector, then
// expansion of the accepted permutation classes.
FiniteLanguage jfa_language_upto_by_parikh(const Machine& m, std::size_t n);

// Complete deterministic automaton over the machine's alphabet.
struct Dfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  StateId start = 0;
  std::vector<StateId> delta;  // delta[q * |Σ| + a]
  std::vector<bool> accepting;

  StateId next(StateId q, Symbol a) const {
    return delta[q * alphabet.size() + a];
  }
  StateId run(StateId q, const Word& w) const;
  bool accepts(const Word& w) const { return accepting[run(start, w)]; }
  Machine to_machine() const;
};

// Subset construction (ε-closures included). Finite machines only.
Dfa determinize_dfa(const Machine& m);
// Partition refinement; states renumbered in breadth-first discovery order
// from the start state, unreachable states dropped.
Dfa minimize_dfa(const Dfa& d);
Dfa dfa_of_machine(const Machine& m);  // DFA-shaped machine -> Dfa

Machine determinize(const Machine& m);
Machine minimize(const Machine& m);

// Product machine with L_FA = L_FA(m1) ⧢ L_FA(m2).
Machine shuffle_product(const Machine& m1, const Machine& m2);
// Fresh start state with ε-rules into both operands.
Machine machine_union(const Machine& m1, const Machine& m2);
// Path machine for w; its JFA language is perm(w).
Machine word_to_jfa(const Alphabet& alphabet, const Word& w);

struct BinaryEncoding {
  Machine machine;                 // over {0, 1}
  std::vector<std::string> image;  // image[i] = h(x_{i+1}) as a bit string

  Word encode(const Word& w) const;
};

// h(x_i) = 1 0^i 1 with i the 1-based alphabet position.
BinaryEncoding binary_encode_gjfa(const Machine& m);
const Alphabet& binary_alphabet();

// Lengths ℓ <= max_len with a^ℓ accepted (FA semantics) over a one-symbol
// view of the machine: only rules labelled by `letter` or ε are used.
std::vector<bool> unary_lengths_accepted(const Machine& m, Symbol letter,
                                         std::size_t max_len);

}  // namespace jfa
