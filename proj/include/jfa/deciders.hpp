#pragma once

// Exact and bounded decision procedures. Bounded answers always carry the
// bound they were computed at.

#include <cstddef>
#include <optional>
#include <string>

#include "jfa/core.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"

namespace jfa {

enum class Answer { Yes, No, BoundedYes };

const char* to_string(Answer a) noexcept;

// Minimal-DFA state q and letters a, b with δ(q, ab) != δ(q, ba).
struct TranspositionWitness {
  StateId state;
  Symbol a;
  Symbol b;
};

struct Verdict {
  Answer answer = Answer::No;
  // A word in the language whose companion is not, or a shared member.
  std::optional<Word> witness;
  std::optional<Word> companion;
  std::optional<TranspositionWitness> transposition;
  std::optional<std::size_t> bound;
};

// One-line rendering, e.g. "BoundedYes(6)" or "No witness=a,b companion=b,a".
std::string describe(const Verdict& v, const Alphabet& alphabet);

// Exact: L_FA(m) is commutative iff δ(q,ab) = δ(q,ba) for every state q of the
// minimal complete DFA and every letter pair. A No verdict carries the state
// pair plus words u·ab·z (in L) and u·ba·z (not in L), or the reverse.
Verdict is_commutative_regular(const Machine& m);

// BoundedYes(n) iff the slice is perm-closed; otherwise No with a member
// `witness` and a permutation `companion` outside the slice.
Verdict is_perm_closed_bounded(const FiniteLanguage& slice, std::size_t n);
Verdict is_perm_closed_bounded(const Machine& m, Semantics sem, std::size_t n);
Verdict is_perm_closed_bounded(const Expr& e, std::size_t n);

// Yes iff L_FA(m) is in JFA ∩ REG, i.e. regular and commutative.
Verdict jfa_membership_of_regular(const Machine& m);

// No (the JFA languages intersect) with the shortlex-least common word of
// length <= n, else BoundedYes(n).
Verdict jfa_disjointness_bounded(const Machine& m1, const Machine& m2,
                                 std::size_t n);

}  // namespace jfa
