#include <doctest.h>

#include "jfa/error.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/random.hpp"
#include "jfa/selftest.hpp"
#include "jfa/semilinear.hpp"
#include "oracles.hpp"

using namespace jfa;

namespace {

const Alphabet abc{"a", "b", "c"};
using PV = ParikhVector;

SemilinearSet compile(const char* text, const Alphabet& a = abc) {
  return alpha_shuf_to_semilinear(parse_expr(text, a));
}

// Membership predicate of S must equal that of the oracle on the box.
void check_against_oracle(const SemilinearSet& s, std::uint32_t b) {
  for (const PV& x : oracle::box(s.dim(), b))
    CHECK(sl_member(s, x) == oracle::semilinear_member(s, x));
}

SemilinearSet random_set(Rng& rng, std::size_t dim) {
  std::vector<LinearSet> cs;
  for (auto k = rng.between(0, 3); k > 0; --k) {
    auto vec = [&] {
      PV v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = static_cast<std::uint32_t>(rng.below(3));
      return v;
    };
    std::vector<PV> ps;
    for (auto j = rng.between(0, 2); j > 0; --j) ps.push_back(vec());
    cs.emplace_back(vec(), ps);
  }
  return SemilinearSet(dim, cs);
}

}  // namespace

TEST_SUITE("semilinear") {

TEST_CASE("linear set invariants") {
  LinearSet l(PV{1, 0}, {PV{0, 0}, PV{2, 0}, PV{2, 0}, PV{0, 3}});
  CHECK(l.periods == std::vector<PV>{PV{0, 3}, PV{2, 0}});
  CHECK_THROWS_AS(LinearSet(PV{1, 0}, {PV{1}}), MismatchError);
}

TEST_CASE("membership") {
  SemilinearSet diag(2, {LinearSet(PV{0, 0}, {PV{1, 1}})});
  CHECK(sl_member(diag, PV{3, 3}));
  CHECK_FALSE(sl_member(diag, PV{2, 3}));
  SemilinearSet ex1(3, {LinearSet(PV{0, 0, 0}, {PV{1, 1, 1}})});
  CHECK(sl_member(ex1, PV{2, 2, 2}));
  CHECK_THROWS_AS(sl_member(ex1, PV{1, 1}), MismatchError);
  Rng rng(41);
  for (int i = 0; i < 40; ++i) check_against_oracle(random_set(rng, 2), 7);
}

TEST_CASE("union and sum") {
  SemilinearSet s = random_set(*std::make_unique<Rng>(42), 2);
  CHECK(sl_union(SemilinearSet::empty(2), s) == s);
  CHECK(sl_union(SemilinearSet::singleton(PV{1, 0}), SemilinearSet::singleton(PV{0, 1}))
            .components()
            .size() == 2);
  CHECK(sl_sum(SemilinearSet::singleton(PV{1, 0}), SemilinearSet::singleton(PV{0, 1})) ==
        SemilinearSet::singleton(PV{1, 1}));
  CHECK(sl_sum(SemilinearSet::zero(2), s) == s);

  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    SemilinearSet a = random_set(rng, 2), b = random_set(rng, 2);
    SemilinearSet u = sl_union(a, b), p = sl_sum(a, b);
    for (const PV& x : oracle::box(2, 6)) {
      CHECK(sl_member(u, x) == (sl_member(a, x) || sl_member(b, x)));
      // x ∈ A+B iff x = y + (x-y) with y ∈ A, x-y ∈ B.
      bool want = false;
      for (const PV& y : oracle::box(2, 6)) {
        auto rest = x.minus(y);
        if (rest && sl_member(a, y) && sl_member(b, *rest)) want = true;
      }
      CHECK(sl_member(p, x) == want);
    }
  }
}

TEST_CASE("sum is the Parikh image of shuffle") {
  const Alphabet abcd{"a", "b", "c", "d"};
  FiniteLanguage l = shuffle_words(abcd, word_of("ab", abcd), word_of("cd", abcd));
  SemilinearSet s = sl_sum(SemilinearSet::singleton(parikh(word_of("ab", abcd), abcd)),
                           SemilinearSet::singleton(parikh(word_of("cd", abcd), abcd)));
  for (const Word& w : l) CHECK(sl_member(s, parikh(w, abcd)));
  CHECK(s.components().size() == 1);
}

TEST_CASE("star") {
  CHECK(sl_star(SemilinearSet::zero(3)) == SemilinearSet::zero(3));
  SemilinearSet one = SemilinearSet::singleton(PV{1, 1, 1});
  SemilinearSet st = sl_star(one);
  CHECK(st == SemilinearSet(3, {LinearSet(PV{0, 0, 0}, {}), LinearSet(PV{1, 1, 1}, {PV{1, 1, 1}})}));
  for (const PV& x : oracle::box(3, 4)) CHECK(sl_member(st, x) == (x[0] == x[1] && x[1] == x[2]));

  SemilinearSet units = sl_union(SemilinearSet::singleton(PV{1, 0}), SemilinearSet::singleton(PV{0, 1}));
  SemilinearSet all = sl_star(units);
  for (const PV& x : oracle::box(2, 6)) CHECK(sl_member(all, x));

  Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    SemilinearSet s = random_set(rng, 2);
    SemilinearSet s1 = sl_star(s);
    CHECK(sl_bounded_equal(sl_star(s1), s1, {6, 6}));
    check_against_oracle(s1, 5);
  }
}

TEST_CASE("star respects the component cap") {
  std::vector<LinearSet> cs;
  for (std::uint32_t i = 1; i <= 20; ++i) cs.emplace_back(PV{i, 0}, std::vector<PV>{});
  CHECK_THROWS_AS(sl_star(SemilinearSet(2, cs), 1000), ResourceError);
}

TEST_CASE("simplify keeps the set") {
  SemilinearSet s(3, {LinearSet(PV{0, 0, 0}, {}), LinearSet(PV{1, 1, 1}, {}),
                      LinearSet(PV{2, 2, 2}, {PV{1, 1, 1}})});
  SemilinearSet t = sl_simplify(s);
  CHECK(t == SemilinearSet(3, {LinearSet(PV{0, 0, 0}, {PV{1, 1, 1}})}));
  Rng rng(45);
  for (int i = 0; i < 60; ++i) {
    SemilinearSet r = sl_star(random_set(rng, 2));
    SemilinearSet q = sl_simplify(r);
    CHECK(q.components().size() <= r.components().size());
    CHECK(sl_bounded_equal(q, r, {8, 8}));
  }
}

TEST_CASE("compiling alpha-SHUF expressions") {
  SemilinearSet ex1 = compile("(a&b&c)&*");
  for (const PV& x : oracle::box(3, 4)) CHECK(sl_member(ex1, x) == (x[0] == x[1] && x[1] == x[2]));
  CHECK(compile("#e") == SemilinearSet::zero(3));
  CHECK(compile("#E").is_empty());
  CHECK_THROWS_AS(compile("a.b"), DomainError);

  const Alphabet abcd{"a", "b", "c", "d"};
  SemilinearSet shuf = compile("(a,b & c,d)&*", abcd);
  std::set<PV> image;
  for (const Word& w : eval_upto(parse_expr("(a,b & c,d)&*", abcd), 8)) image.insert(parikh(w, abcd));
  for (const PV& x : oracle::box(4, 2)) CHECK(sl_member(shuf, x) == image.contains(x));

  Rng rng(46);
  for (int i = 0; i < 60; ++i) {
    Expr e = random_alpha_shuf(rng, abc, 4);
    SemilinearSet s = alpha_shuf_to_semilinear(e);
    std::set<PV> img;
    for (const Word& w : eval_upto(e, 5)) img.insert(parikh(w, abc));
    for (const PV& x : oracle::box(3, 5))
      if (x.total() <= 5) CHECK(sl_member(s, x) == img.contains(x));
  }
}

TEST_CASE("shuffle of expressions maps to the sum of their images") {
  Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    Expr e1 = random_alpha_shuf(rng, abc, 3), e2 = random_alpha_shuf(rng, abc, 3);
    SemilinearSet sum = sl_sum(alpha_shuf_to_semilinear(e1), alpha_shuf_to_semilinear(e2));
    std::set<PV> img;
    for (const Word& w : eval_upto(e1.shuffle(e2), 6)) img.insert(parikh(w, abc));
    for (const PV& x : img) CHECK(sl_member(sum, x));
    for (const PV& x : oracle::box(3, 6))
      if (x.total() <= 6 && sl_member(sum, x)) CHECK(img.contains(x));
  }
}

TEST_CASE("normal form") {
  CHECK(semilinear_to_normalform(SemilinearSet::zero(3), abc) == parse_expr("#e", abc));
  SemilinearSet ex1 = compile("(a&b&c)&*");
  Expr nf = semilinear_to_normalform(ex1, abc);
  CHECK(star_height(nf) <= 1);
  for (const PV& x : oracle::box(3, 3))
    CHECK(sl_member(alpha_shuf_to_semilinear(nf), x) == sl_member(ex1, x));

  SemilinearSet two(2, {LinearSet(PV{1, 0}, {}), LinearSet(PV{0, 1}, {PV{0, 2}})});
  Expr t = semilinear_to_normalform(two, Alphabet{"a", "b"});
  CHECK(t.kind() == ExprKind::Union);

  Rng rng(48);
  for (int i = 0; i < 40; ++i) {
    SemilinearSet s = random_set(rng, 3);
    Expr e = semilinear_to_normalform(s, abc);
    CHECK(star_height(e) <= 1);
    CHECK(sl_bounded_equal(s, alpha_shuf_to_semilinear(e), {6, 6, 6}));
  }
}

TEST_CASE("nfa_to_semilinear") {
  Machine abc_cycle = parse_machine(builtin_corpus_text("abc-cycle"));
  CHECK(nfa_to_semilinear(abc_cycle) == SemilinearSet(3, {LinearSet(PV{0, 0, 0}, {PV{1, 1, 1}})}));
  Machine eps = parse_machine("alphabet: a b c\nstates: s\nstart: s\nfinal: s\n");
  CHECK(nfa_to_semilinear(eps) == SemilinearSet::zero(3));
  CHECK_THROWS_AS(nfa_to_semilinear(parse_machine(builtin_corpus_text("abcd-blocks"))), DomainError);

  Rng rng(49);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> toks{"a", "b", "c"};
    toks.resize(rng.between(1, 3));
    Alphabet a(toks);
    Machine m = random_machine(rng, a, 3);
    SemilinearSet s = nfa_to_semilinear(m);
    for (const Word& w : all_words_upto(a, 5)) CHECK(sl_member(s, parikh(w, a)) == jfa_accepts(m, w));
  }
}

TEST_CASE("periodic form") {
  SemilinearSet p(2, {LinearSet(PV{1, 0}, {PV{2, 0}, PV{0, 3}})});
  auto got = is_periodic_form(p);
  REQUIRE(got.has_value());
  REQUIRE(got->size() == 1);
  CHECK((*got)[0].base == PV{1, 0});
  CHECK((*got)[0].unit_periods == std::map<Symbol, std::uint32_t>{{0, 2}, {1, 3}});
  CHECK_FALSE(is_periodic_form(compile("(a&b&c)&*")).has_value());
  auto empty = is_periodic_form(SemilinearSet::empty(2));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
  CHECK_FALSE(is_periodic_form(SemilinearSet(1, {LinearSet(PV{0}, {PV{2}, PV{3}})})).has_value());
}

TEST_CASE("bounded equality") {
  SemilinearSet s = compile("(a&b)&*+c");
  CHECK(sl_bounded_equal(s, s, {6, 6, 6}));
  CHECK_FALSE(sl_bounded_equal(SemilinearSet::zero(1), SemilinearSet::empty(1), {1}));
  auto diff = sl_bounded_difference(SemilinearSet::zero(1), SemilinearSet::empty(1), {1});
  REQUIRE(diff.has_value());
  CHECK(*diff == PV{0});
  CHECK_THROWS_AS(sl_bounded_equal(s, SemilinearSet::zero(2), {1, 1}), MismatchError);
  Rng rng(50);
  for (int i = 0; i < 40; ++i) {
    SemilinearSet a = random_set(rng, 3), b = random_set(rng, 3);
    CHECK(sl_bounded_equal(a, b, {4, 4, 4}) == sl_bounded_equal_serial(a, b, {4, 4, 4}));
  }
}

TEST_CASE("semilinear files") {
  auto f = parse_semilinear("alphabet: a b c\n# comment\nbase: 1 0 2 ; periods: (1 1 0) (0 0 3)\nbase: 0 0 0\n");
  CHECK(f.alphabet == abc);
  CHECK(f.set.components().size() == 2);
  CHECK(parse_semilinear(print_semilinear(f.set, f.alphabet)).set == f.set);
  CHECK_THROWS_AS(parse_semilinear("base: 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_semilinear("alphabet: a b\nbase: 1 0 2\n"), ParseError);
}

}  // TEST_SUITE
