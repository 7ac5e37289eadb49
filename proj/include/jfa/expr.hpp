#pragma once

// One AST for regular, SHUF and α-SHUF expressions (and hybrids of them).
//
// Text grammar, loosest binding first:
//
//   expr    := term ('+' term)*
//   term    := postfix (('.' | '&') postfix)*      left-associative
//   postfix := primary ('*' | '&*')*
//   primary := '(' expr ')' | '#E' | '#e' | word
//   word    := token (',' token)*
//
// `#E` is the empty set, `#e` the empty word, `.` catenation, `&` shuffle,
// `*` Kleene star, `&*` iterated shuffle, `+` union.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "jfa/core.hpp"

namespace jfa {

class Machine;

enum class ExprKind {
  EmptySet,
  Epsilon,
  Atom,
  Union,
  Concat,
  Shuffle,
  Star,
  IterShuffle,
};

enum class ExprFlavor { Regular, Shuf, AlphaShuf, Mixed };

const char* to_string(ExprFlavor flavor) noexcept;

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  Word atom;      // Atom only; never empty
  ExprPtr left;   // binary operand, or the operand of Star / IterShuffle
  ExprPtr right;  // binary operand
};

// An immutable expression tree bound to an alphabet. Subtrees are shared.
class Expr {
 public:
  Expr(Alphabet alphabet, ExprPtr root);

  static Expr empty_set(const Alphabet& a);
  static Expr epsilon(const Alphabet& a);
  static Expr atom(const Alphabet& a, Word w);  // w must be non-empty
  static Expr symbol(const Alphabet& a, Symbol s) { return atom(a, Word{s}); }
  // Shuffle of the single letters of w; ε for the empty word.
  static Expr letterized(const Alphabet& a, const Word& w);

  Expr operator+(const Expr& rhs) const;  // union
  Expr concat(const Expr& rhs) const;
  Expr shuffle(const Expr& rhs) const;
  Expr star() const;
  Expr iter_shuffle() const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const ExprNode& node() const noexcept { return *root_; }
  const ExprPtr& root() const noexcept { return root_; }
  ExprKind kind() const noexcept { return root_->kind; }
  Expr left() const { return Expr(alphabet_, root_->left); }
  Expr right() const { return Expr(alphabet_, root_->right); }

  // Structural equality.
  bool operator==(const Expr& other) const;

 private:
  Expr binary(ExprKind kind, const Expr& rhs) const;

  Alphabet alphabet_;
  ExprPtr root_;
};

Expr parse_expr(std::string_view text, const Alphabet& alphabet);
// Alphabet of the tokens an expression text mentions, in order of first use.
Alphabet expr_alphabet(std::string_view text);
// Fully parenthesized rendering that parse_expr reads back structurally.
std::string print_expr(const Expr& e);

// Flavour predicates. Operator-free expressions satisfy several of them.
bool has_shuffle_ops(const Expr& e);      // Shuffle or IterShuffle present
bool has_regular_ops(const Expr& e);      // Concat or Star present
bool has_long_atoms(const Expr& e);       // some atom of length >= 2
bool is_regular_expr(const Expr& e);      // !has_shuffle_ops
bool is_shuf_expr(const Expr& e);         // !has_regular_ops
bool is_alpha_shuf_expr(const Expr& e);   // shuf and single-letter atoms

// Most specific flavour: AlphaShuf, then Shuf, then Regular, else Mixed.
ExprFlavor classify(const Expr& e);

std::size_t star_height(const Expr& e);
std::size_t expr_size(const Expr& e);

// L(e) ∩ Σ^{<=n}.
FiniteLanguage eval_upto(const Expr& e, std::size_t n);

// Catenation -> shuffle, star -> iterated shuffle, long atoms letterized.
Expr regex_to_alpha_shuf(const Expr& e);
// Shuffle -> catenation, iterated shuffle -> star; atoms kept.
Expr alpha_shuf_to_regex(const Expr& e);
// Star-free α-SHUF expression for a finite perm-closed language.
Expr finite_permclosed_to_alpha_shuf(const FiniteLanguage& lang);

// Thompson construction reading shuffle as catenation and iterated shuffle
// as star. Always yields a finite machine (long atoms become letter chains).
Machine thompson_machine(const Expr& e);
// Regular expression with L(E) = L_FA(m) by state elimination. Finite
// machines only; states are eliminated in id order.
Expr state_elimination(const Machine& m);

// Rebinds an expression to a larger alphabet that contains every token of
// the original one.
Expr rebind(const Expr& e, const Alphabet& target);

// Smart constructors that fold ∅ and ε units; used by state elimination.
Expr simplified_union(const Expr& a, const Expr& b);
Expr simplified_concat(const Expr& a, const Expr& b);
Expr simplified_star(const Expr& a);

}  // namespace jfa
