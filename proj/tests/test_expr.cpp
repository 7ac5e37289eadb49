#include <doctest.h>

#include "jfa/error.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/random.hpp"
#include "oracles.hpp"

using namespace jfa;

namespace {
const Alphabet abc{"a", "b", "c"};
const Alphabet abcd{"a", "b", "c", "d"};
Expr px(const char* text, const Alphabet& a = abc) { return parse_expr(text, a); }

// Random AST using every operator, for round-trip tests.
Expr random_any(Rng& rng, const Alphabet& a, std::size_t depth) {
  if (depth == 0 || rng.chance(1, 5)) {
    switch (rng.below(4)) {
      case 0: return Expr::empty_set(a);
      case 1: return Expr::epsilon(a);
      case 2: return Expr::atom(a, Word{static_cast<Symbol>(rng.below(a.size())),
                                         static_cast<Symbol>(rng.below(a.size()))});
      default: return Expr::symbol(a, static_cast<Symbol>(rng.below(a.size())));
    }
  }
  Expr l = random_any(rng, a, depth - 1);
  switch (rng.below(6)) {
    case 0: return l + random_any(rng, a, depth - 1);
    case 1: return l.concat(random_any(rng, a, depth - 1));
    case 2: return l.shuffle(random_any(rng, a, depth - 1));
    case 3: return l.star();
    case 4: return l.iter_shuffle();
    default: return l;
  }
}
}  // namespace

TEST_SUITE("expr") {

TEST_CASE("parser builds the documented trees") {
  Expr e = px("(a&b&c)&*");
  REQUIRE(e.kind() == ExprKind::IterShuffle);
  Expr body = e.left();
  REQUIRE(body.kind() == ExprKind::Shuffle);
  CHECK(body.left().kind() == ExprKind::Shuffle);
  CHECK(body.right() == px("c"));
  CHECK(body.left() == px("a").shuffle(px("b")));

  CHECK(px("#e").kind() == ExprKind::Epsilon);
  CHECK(px("#E").kind() == ExprKind::EmptySet);

  Expr ab_cd = px("(a,b & c,d)&*", abcd);
  CHECK(ab_cd == Expr::atom(abcd, word_of("ab", abcd))
                     .shuffle(Expr::atom(abcd, word_of("cd", abcd)))
                     .iter_shuffle());
}

TEST_CASE("precedence: postfix, then . and & left to right, then +") {
  CHECK(px("a+b.c") == px("a") + px("b").concat(px("c")));
  CHECK(px("a.b&c") == px("a").concat(px("b")).shuffle(px("c")));
  CHECK(px("a&b.c") == px("a").shuffle(px("b")).concat(px("c")));
  CHECK(px("a.b*") == px("a").concat(px("b").star()));
  CHECK(px("a&*&*") == px("a").iter_shuffle().iter_shuffle());
  CHECK(px("a,b*") == Expr::atom(abc, word_of("ab", abc)).star());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(px("(a+b"), ParseError);
  CHECK_THROWS_AS(px("a+"), ParseError);
  CHECK_THROWS_AS(px("a,z"), ParseError);
  CHECK_THROWS_AS(px("@"), ParseError);
  CHECK_THROWS_AS(px("#x"), ParseError);
  try {
    px("a+\n  )");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("print/parse round trip on random trees") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    Expr e = random_any(rng, abc, 6);
    CHECK(parse_expr(print_expr(e), abc) == e);
  }
}

TEST_CASE("expr_alphabet collects tokens in order of use") {
  CHECK(expr_alphabet("(c,a & b)&* + c").tokens() == std::vector<std::string>{"c", "a", "b"});
  CHECK(expr_alphabet("#E").empty());
  CHECK(expr_alphabet("(x1 & 0b)").tokens() == std::vector<std::string>{"x1", "0b"});
}

TEST_CASE("classify and star height") {
  CHECK(classify(px("(a,b.c,d)*", abcd)) == ExprFlavor::Regular);
  CHECK(classify(px("(a,b&c,d)&*", abcd)) == ExprFlavor::Shuf);
  CHECK(classify(px("(a&b&c)&*")) == ExprFlavor::AlphaShuf);
  CHECK(classify(px("a.b&c")) == ExprFlavor::Mixed);
  CHECK(star_height(px("a")) == 0);
  CHECK(star_height(px("(a&b&c)&*")) == 1);
  CHECK(star_height(px("((a&*)&b)&*")) == 2);
  CHECK(star_height(px("(a*+b&*)")) == 1);
}

TEST_CASE("eval_upto examples") {
  CHECK(eval_upto(px("(a&b&c)&*"), 3) ==
        FiniteLanguage(abc, {Word{}}).unite(perm_word(abc, word_of("abc", abc))));
  CHECK(eval_upto(px("#E"), 9).empty());
  CHECK(eval_upto(px("(a,b&c,d)&*", abcd), 4).contains(word_of("acbd", abcd)));
  // cabd puts c before a, which breaks the atom a,c.
  FiniteLanguage acbd = eval_upto(px("(a,c&b,d)&*", abcd), 4);
  CHECK(acbd.contains(word_of("acbd", abcd)));
  CHECK_FALSE(acbd.contains(word_of("cabd", abcd)));
}

TEST_CASE("eval_upto truncation is sound") {
  Rng rng(22);
  for (int i = 0; i < 80; ++i) {
    Expr e = random_any(rng, abc, 4);
    std::size_t n = rng.between(0, 5), k = rng.between(1, 3);
    CHECK(eval_upto(e, n) == eval_upto(e, n + k).truncate(n));
  }
}

TEST_CASE("regex_to_alpha_shuf") {
  CHECK(regex_to_alpha_shuf(px("(a.b.c)*")) == px("(a&b&c)&*"));
  CHECK(regex_to_alpha_shuf(px("#e")) == px("#e"));
  CHECK_THROWS_AS(regex_to_alpha_shuf(px("a&b")), DomainError);
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    Expr e = random_regex(rng, abc, 4);
    Expr s = regex_to_alpha_shuf(e);
    CHECK(classify(s) == ExprFlavor::AlphaShuf);
    CHECK(eval_upto(s, 5) == perm_closure(eval_upto(e, 5)));
  }
}

TEST_CASE("alpha_shuf_to_regex") {
  CHECK(alpha_shuf_to_regex(px("(a&b&c)&*")) == px("(a.b.c)*"));
  CHECK(alpha_shuf_to_regex(px("a")) == px("a"));
  CHECK(alpha_shuf_to_regex(px("(a&b)+c")) == px("(a.b)+c"));
  CHECK_THROWS_AS(alpha_shuf_to_regex(px("a.b")), DomainError);
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    Expr e = random_alpha_shuf(rng, abc, 4);
    Expr r = alpha_shuf_to_regex(e);
    CHECK(is_regular_expr(r));
    CHECK(perm_closure(eval_upto(r, 5)) == eval_upto(e, 5));
  }
}

TEST_CASE("finite_permclosed_to_alpha_shuf") {
  CHECK(finite_permclosed_to_alpha_shuf(perm_word(abc, word_of("ab", abc))) == px("a&b"));
  CHECK(finite_permclosed_to_alpha_shuf(FiniteLanguage(abc, {Word{}})) == px("#e"));
  FiniteLanguage l = perm_closure(FiniteLanguage(abc, {word_of("abc", abc), word_of("ab", abc)}));
  Expr e = finite_permclosed_to_alpha_shuf(l);
  CHECK(star_height(e) == 0);
  CHECK(eval_upto(e, l.max_length()) == l);
  CHECK_THROWS_AS(finite_permclosed_to_alpha_shuf(FiniteLanguage(abc, {word_of("ab", abc)})),
                  DomainError);
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    FiniteLanguage r = perm_closure(random_finite_language(rng, abc, 4, 4));
    CHECK(eval_upto(finite_permclosed_to_alpha_shuf(r), 4) == r);
  }
}

TEST_CASE("thompson_machine reads shuffle as catenation") {
  Expr ex1 = px("(a&b&c)&*");
  Machine m = thompson_machine(ex1);
  CHECK(m.kind() == MachineKind::FiniteMachine);
  CHECK(jfa_language_upto(m, 6) == eval_upto(ex1, 6));
  Machine eps = thompson_machine(px("#e"));
  CHECK(fa_language_upto(eps, 3) == FiniteLanguage(abc, {Word{}}));
  CHECK(fa_language_upto(thompson_machine(px("a+b")), 3) ==
        FiniteLanguage(abc, {word_of("a", abc), word_of("b", abc)}));
  Rng rng(26);
  for (int i = 0; i < 60; ++i) {
    Expr e = random_regex(rng, abc, 4);
    CHECK(fa_language_upto(thompson_machine(e), 5) == eval_upto(e, 5));
  }
}

TEST_CASE("state_elimination preserves the FA language") {
  Rng rng(27);
  for (int i = 0; i < 60; ++i) {
    Machine m = random_machine(rng, abc, 4);
    Expr e = state_elimination(m);
    CHECK(is_regular_expr(e));
    CHECK(eval_upto(e, 5) == fa_language_upto(m, 5));
  }
}

}  // TEST_SUITE
