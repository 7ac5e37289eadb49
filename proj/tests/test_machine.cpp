#include <doctest.h>

#include "jfa/error.hpp"
#include "jfa/expr.hpp"
#include "jfa/machine.hpp"
#include "jfa/random.hpp"
#include "jfa/selftest.hpp"
#include "oracles.hpp"

using namespace jfa;

namespace {

Machine corpus(const char* name) { return parse_machine(builtin_corpus_text(name)); }

// Random machine whose labels have length 0..2.
Machine random_general(Rng& rng, const Alphabet& a, std::size_t max_states) {
  Machine m(a);
  const std::size_t n = rng.between(1, max_states);
  for (std::size_t q = 0; q < n; ++q) m.add_state("q" + std::to_string(q));
  m.set_start(0);
  for (StateId p = 0; p < n; ++p) {
    if (rng.chance(1, 2)) m.add_final(p);
    for (StateId q = 0; q < n; ++q)
      for (int r = 0; r < 2; ++r) {
        if (!rng.chance(1, 3)) continue;
        Word label;
        for (auto k = rng.between(0, 2); k > 0; --k)
          label.push_back(static_cast<Symbol>(rng.below(a.size())));
        m.add_rule(p, label, q);
      }
  }
  return m;
}

}  // namespace

TEST_SUITE("machine") {

TEST_CASE("machine files") {
  Machine abc_cycle = corpus("abc-cycle");
  CHECK(abc_cycle.num_states() == 3);
  CHECK(abc_cycle.kind() == MachineKind::FiniteMachine);
  CHECK(abc_cycle.is_final(abc_cycle.start()));
  Machine abcd_blocks = corpus("abcd-blocks");
  CHECK(abcd_blocks.kind() == MachineKind::GeneralFiniteMachine);
  CHECK(parse_machine(print_machine(abcd_blocks)) == abcd_blocks);

  Machine bare = parse_machine("alphabet: a b\nstates: s\nstart: s\nfinal: s\n");
  for (Semantics sem : {Semantics::FA, Semantics::JFA, Semantics::GJFA})
    CHECK(language_upto(bare, sem, 3) == FiniteLanguage(bare.alphabet(), {Word{}}));

  CHECK_THROWS_AS(parse_machine("alphabet: a\nstates: s\nstart: t\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("alphabet: a\nstates: s s\nstart: s\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("alphabet: a\nstates: s\nfinal: s\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("alphabet: a\nstates: s\nstart: s\nrule: s b s\n"), ParseError);
  CHECK_THROWS_AS(parse_machine("alphabet: a\nstates: s\nstart: s\nrule: s a\n"), ParseError);
}

TEST_CASE("random machines round-trip through the file format") {
  Rng rng(31);
  const Alphabet a{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    Machine m = random_general(rng, a, 4);
    CHECK(parse_machine(print_machine(m)) == m);
  }
}

TEST_CASE("FA acceptance") {
  Machine m = corpus("abc-cycle");
  const Alphabet& a = m.alphabet();
  CHECK(fa_accepts(m, word_of("abcabc", a)));
  CHECK_FALSE(fa_accepts(m, word_of("acb", a)));
  CHECK(fa_accepts(m, Word{}));
  CHECK(fa_language_upto(corpus("abcd-blocks"), 4) ==
        FiniteLanguage(corpus("abcd-blocks").alphabet(), {Word{}, word_of("abcd", corpus("abcd-blocks").alphabet())}));
}

TEST_CASE("JFA acceptance") {
  Machine m = corpus("abc-cycle");
  const Alphabet& a = m.alphabet();
  CHECK(jfa_accepts(m, word_of("aabbcc", a)));
  CHECK_FALSE(jfa_accepts(m, word_of("aab", a)));
  CHECK(jfa_language_upto(m, 3) ==
        FiniteLanguage(a, {Word{}}).unite(perm_word(a, word_of("abc", a))));
  CHECK_THROWS_AS(jfa_accepts(corpus("abcd-blocks"), Word{}), DomainError);

  Machine f3 = corpus("ab-split");
  const Alphabet& ab = f3.alphabet();
  CHECK(jfa_accepts(f3, word_of("bbab", ab)));
  CHECK(jfa_accepts(f3, word_of("aa", ab)));
  f3.set_finals({*f3.find_state("s"), *f3.find_state("t")});
  CHECK(jfa_accepts(f3, word_of("bbab", ab)));
  CHECK_FALSE(jfa_accepts(f3, word_of("aa", ab)));
}

TEST_CASE("ab-split: swapping final states does not complement the language") {
  Machine f3 = corpus("ab-split");
  const Alphabet& ab = f3.alphabet();
  FiniteLanguage r = jfa_language_upto(f3, 4);
  f3.set_finals({*f3.find_state("s"), *f3.find_state("t")});
  FiniteLanguage st = jfa_language_upto(f3, 4);
  FiniteLanguage all = all_words_upto(ab, 4);
  CHECK_FALSE(all.minus(r) == st);
  CHECK_FALSE(r.intersect(st).empty());
}

TEST_CASE("JFA agrees with the permutation oracle and the Parikh route") {
  Rng rng(32);
  const Alphabet a{"a", "b", "c"};
  for (int i = 0; i < 60; ++i) {
    Machine m = random_machine(rng, a, 4);
    FiniteLanguage got = jfa_language_upto(m, 5);
    FiniteLanguage fa = fa_language_upto(m, 5);
    CHECK(got == perm_closure(fa));
    CHECK(is_perm_closed(got));
    CHECK(got == jfa_language_upto_by_parikh(m, 5));
    for (const Word& w : all_words_upto(a, 4)) CHECK(jfa_accepts(m, w) == oracle::jfa_by_permutations(m, w));
  }
}

TEST_CASE("GJFA acceptance") {
  Machine f2 = corpus("abcd-blocks");
  const Alphabet& a = f2.alphabet();
  CHECK_FALSE(gjfa_accepts(f2, word_of("bacd", a)));
  CHECK(gjfa_accepts(f2, word_of("abcd", a)));
  Machine loop = parse_machine("alphabet: a b c d\nstates: s\nstart: s\nfinal: s\nrule: s a,b s\n");
  CHECK_FALSE(gjfa_accepts(loop, word_of("acbd", a)));
  Machine ab = corpus("ab-loop");
  FiniteLanguage four = gjfa_language_upto(ab, 4);
  CHECK(four == FiniteLanguage(ab.alphabet(), {Word{}, word_of("ab", ab.alphabet()),
                                                word_of("aabb", ab.alphabet()),
                                                word_of("abab", ab.alphabet())}));
  CHECK(four == eval_upto(parse_expr("a,b&*", ab.alphabet()), 4));
}

TEST_CASE("GJFA agrees with the naive jumping relation") {
  Rng rng(33);
  const Alphabet a{"a", "b"};
  for (int i = 0; i < 80; ++i) {
    Machine m = random_general(rng, a, 3);
    for (const Word& w : all_words_upto(a, 5)) {
      bool got = gjfa_accepts(m, w);
      CHECK(got == oracle::gjfa_naive(m, w));
      if (fa_accepts(m, w)) CHECK(got);
    }
  }
}

TEST_CASE("GJFA equals JFA on finite machines") {
  Rng rng(34);
  const Alphabet a{"a", "b", "c"};
  for (int i = 0; i < 40; ++i) {
    Machine m = random_machine(rng, a, 4);
    CHECK(gjfa_language_upto(m, 5) == jfa_language_upto(m, 5));
  }
}

TEST_CASE("determinize and minimize") {
  Machine abc_cycle = corpus("abc-cycle");
  Dfa d = minimize_dfa(determinize_dfa(abc_cycle));
  CHECK(d.num_states == 4);
  CHECK(fa_language_upto(d.to_machine(), 8) == fa_language_upto(abc_cycle, 8));
  CHECK(minimize(abc_cycle).num_states() == 4);

  Machine none = parse_machine("alphabet: a b\nstates: s\nstart: s\n");
  CHECK(minimize_dfa(determinize_dfa(none)).num_states == 1);

  Rng rng(35);
  const Alphabet a{"a", "b"};
  for (int i = 0; i < 60; ++i) {
    Machine m = random_machine(rng, a, 4);
    Dfa md = minimize_dfa(determinize_dfa(m));
    for (const Word& w : all_words_upto(a, 6)) CHECK(md.accepts(w) == oracle::fa_run(m, w));
    // An equivalent machine with a disconnected copy minimizes to the same DFA.
    Machine twin = machine_union(m, parse_machine("alphabet: a b\nstates: z\nstart: z\n"));
    Dfa td = minimize_dfa(determinize_dfa(twin));
    CHECK(td.num_states == md.num_states);
    CHECK(td.delta == md.delta);
    CHECK(td.accepting == md.accepting);
  }
}

TEST_CASE("shuffle_product") {
  const Alphabet abc{"a", "b", "c"};
  Machine ma = thompson_machine(parse_expr("a", abc));
  Machine mb = thompson_machine(parse_expr("b", abc));
  CHECK(fa_language_upto(shuffle_product(ma, mb), 3) ==
        FiniteLanguage(abc, {word_of("ab", abc), word_of("ba", abc)}));
  Machine ab = thompson_machine(parse_expr("(a.b)*", abc));
  Machine cs = thompson_machine(parse_expr("c*", abc));
  FiniteLanguage got = fa_language_upto(shuffle_product(ab, cs), 5);
  CHECK(got == shuffle_langs(fa_language_upto(ab, 5), fa_language_upto(cs, 5)).truncate(5));
  Machine eps = thompson_machine(parse_expr("#e", abc));
  CHECK(fa_language_upto(shuffle_product(ab, eps), 5) == fa_language_upto(ab, 5));
  CHECK_THROWS_AS(shuffle_product(ab, corpus("ab-split")), MismatchError);
}

TEST_CASE("word_to_jfa") {
  const Alphabet abc{"a", "b", "c"};
  Machine e = word_to_jfa(abc, Word{});
  CHECK(e.num_states() == 1);
  CHECK(jfa_language_upto(e, 3) == FiniteLanguage(abc, {Word{}}));
  CHECK(jfa_language_upto(word_to_jfa(abc, word_of("ab", abc)), 3) == perm_word(abc, word_of("ab", abc)));
  CHECK(jfa_language_upto(word_to_jfa(abc, word_of("abc", abc)), 3) ==
        oracle::lang(abc, oracle::permutations(word_of("abc", abc))));
}

TEST_CASE("binary encoding") {
  Machine ab = corpus("ab-loop");
  BinaryEncoding enc = binary_encode_gjfa(ab);
  CHECK(enc.image == std::vector<std::string>{"101", "1001"});
  CHECK(enc.encode(Word{}).empty());
  CHECK(enc.machine.alphabet() == binary_alphabet());

  Machine f2 = corpus("abcd-blocks");
  BinaryEncoding e2 = binary_encode_gjfa(f2);
  CHECK(gjfa_accepts(e2.machine, e2.encode(word_of("abcd", f2.alphabet()))));
  CHECK_FALSE(gjfa_accepts(e2.machine, e2.encode(word_of("bacd", f2.alphabet()))));

  Rng rng(36);
  const Alphabet a{"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    Machine m = random_general(rng, a, 3);
    BinaryEncoding be = binary_encode_gjfa(m);
    Word w;
    for (auto k = rng.between(0, 4); k > 0; --k) w.push_back(static_cast<Symbol>(rng.below(3)));
    CHECK(gjfa_accepts(m, w) == gjfa_accepts(be.machine, be.encode(w)));
  }
}

TEST_CASE("unary lengths") {
  const Alphabet a1{"a"};
  Machine m = thompson_machine(parse_expr("(a,a,a)*+a,a", a1));
  std::vector<bool> got = unary_lengths_accepted(m, 0, 9);
  for (std::size_t l = 0; l <= 9; ++l) CHECK(got[l] == (l % 3 == 0 || l == 2));
}

}  // TEST_SUITE
