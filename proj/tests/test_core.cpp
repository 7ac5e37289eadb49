#include <doctest.h>

#include "jfa/core.hpp"
#include "jfa/error.hpp"
#include "jfa/random.hpp"
#include "oracles.hpp"

using namespace jfa;

namespace {
const Alphabet abc{"a", "b", "c"};
const Alphabet abcd{"a", "b", "c", "d"};
Word w3(const char* s) { return word_of(s, abc); }
Word w4(const char* s) { return word_of(s, abcd); }
Word random_word(Rng& rng, const Alphabet& a, std::size_t max_len) {
  Word w;
  for (auto k = rng.between(0, max_len); k > 0; --k) w.push_back(static_cast<Symbol>(rng.below(a.size())));
  return w;
}
}  // namespace

TEST_SUITE("core") {

TEST_CASE("alphabet rejects reserved characters and duplicates") {
  for (const char* bad : {"a,b", "@", "#", "(", "x y", "a+", "a.b", "*", "&", ""})
    CHECK_THROWS_AS(Alphabet({std::string(bad)}), ParseError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), ParseError);
  Alphabet bars{"0", "0b", "st", "hash"};
  CHECK(bars.symbol("0b") == 1);
  CHECK_FALSE(bars.find("c").has_value());
}

TEST_CASE("word literals") {
  CHECK(parse_word("@", abc).empty());
  CHECK(parse_word("a,b,c", abc) == w3("abc"));
  CHECK(format_word(Word{}, abc) == "@");
  CHECK(format_word(w3("cab"), abc) == "c,a,b");
  CHECK_THROWS_AS(parse_word("a,,b", abc), ParseError);
  CHECK_THROWS_AS(parse_word("a,z", abc), ParseError);
}

TEST_CASE("parikh") {
  CHECK(parikh(Word{}, abc) == ParikhVector{0, 0, 0});
  CHECK(parikh(w3("abcabc"), abc) == ParikhVector{2, 2, 2});
  CHECK(parikh(w3("aab"), abc) == ParikhVector{2, 1, 0});
  CHECK(canonical_word(ParikhVector{2, 1, 0}) == w3("aab"));
}

TEST_CASE("shuffle_words matches the position-choice oracle") {
  CHECK(shuffle_words(abcd, w4("ab"), Word{}) == FiniteLanguage(abcd, {w4("ab")}));
  CHECK(shuffle_words(abcd, w4("a"), w4("b")) == FiniteLanguage(abcd, {w4("ab"), w4("ba")}));
  FiniteLanguage six = shuffle_words(abcd, w4("ab"), w4("cd"));
  CHECK(six == oracle::lang(abcd, oracle::interleavings(w4("ab"), w4("cd"))));
  CHECK(six.size() == 6);
  CHECK(six.contains(w4("acbd")));

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, abc, 4);
    Word v = random_word(rng, abc, 4);
    FiniteLanguage got = shuffle_words(abc, u, v);
    CHECK(got == oracle::lang(abc, oracle::interleavings(u, v)));
    CHECK(got.size() <= binomial(u.size() + v.size(), u.size()));
  }
}

TEST_CASE("shuffle is exact in size for disjoint symbol sets") {
  Alphabet six{"a", "b", "c", "x", "y", "z"};
  for (const char* u : {"", "a", "ab", "abc", "aab"})
    for (const char* v : {"", "x", "xy", "zyx"}) {
      Word wu = word_of(u, six), wv = word_of(v, six);
      CHECK(shuffle_words(six, wu, wv).size() == binomial(wu.size() + wv.size(), wu.size()));
    }
}

TEST_CASE("shuffle_langs") {
  FiniteLanguage a(abcd, {w4("a")}), b(abcd, {w4("b")});
  CHECK(shuffle_langs(a, b) == FiniteLanguage(abcd, {w4("ab"), w4("ba")}));
  CHECK(shuffle_langs(FiniteLanguage(abcd, {w4("ab")}), FiniteLanguage(abcd, {w4("cd")})) ==
        shuffle_words(abcd, w4("ab"), w4("cd")));
  CHECK(shuffle_langs(FiniteLanguage(abcd), FiniteLanguage(abcd, {w4("ab")})).empty());
  CHECK_THROWS_AS(shuffle_langs(FiniteLanguage(abc), FiniteLanguage(abcd)), MismatchError);
}

TEST_CASE("iter_shuffle_upto") {
  CHECK(iter_shuffle_upto(FiniteLanguage(abc), 5) == FiniteLanguage(abc, {Word{}}));
  Alphabet ab{"a", "b"};
  FiniteLanguage got = iter_shuffle_upto(FiniteLanguage(ab, {word_of("ab", ab)}), 4);
  // {ab}^0, {ab}^1 and {ab}^2 truncated at 4.
  std::set<Word> want{Word{}, word_of("ab", ab)};
  for (const Word& w : oracle::interleavings(word_of("ab", ab), word_of("ab", ab))) want.insert(w);
  CHECK(got == oracle::lang(ab, want));
  // abba is not an interleaving of ab with ab: its last a follows both b's.
  CHECK(got.size() == 4);
  CHECK_FALSE(got.contains(word_of("abba", ab)));
  CHECK_FALSE(got.contains(word_of("ba", ab)));
  Alphabet a1{"a"};
  CHECK(iter_shuffle_upto(FiniteLanguage(a1, {word_of("a", a1)}), 3).size() == 4);
}

TEST_CASE("perm_word and perm_closure") {
  CHECK(perm_word(abc, Word{}) == FiniteLanguage(abc, {Word{}}));
  CHECK(perm_word(abc, w3("ab")).size() == 2);
  CHECK(perm_word(abc, w3("abc")) == oracle::lang(abc, oracle::permutations(w3("abc"))));
  CHECK(perm_word(abc, w3("abc")).size() == 6);
  CHECK(perm_word(abc, w3("aab")).size() == 3);
  CHECK(perm_closure(FiniteLanguage(abcd, {w4("ab"), w4("cd")})) ==
        FiniteLanguage(abcd, {w4("ab"), w4("ba"), w4("cd"), w4("dc")}));
  CHECK(is_perm_closed(FiniteLanguage(abc, {w3("ab"), w3("ba")})));
  CHECK_FALSE(is_perm_closed(FiniteLanguage(abc, {w3("ab")})));
  CHECK(is_perm_closed(FiniteLanguage(abc, {Word{}})));
}

TEST_CASE("perm_closure is a hull operator") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    FiniteLanguage l1 = random_finite_language(rng, abc, 4, 4);
    FiniteLanguage l2 = l1.unite(random_finite_language(rng, abc, 3, 4));
    FiniteLanguage c1 = perm_closure(l1);
    CHECK(l1.subset_of(c1));
    CHECK(c1.subset_of(perm_closure(l2)));
    CHECK(perm_closure(c1) == c1);
  }
}

TEST_CASE("permutation classes partition words by Parikh vector") {
  const Alphabet ab{"a", "b"};
  const FiniteLanguage all = all_words_upto(ab, 5);
  for (const Word& u : all)
    for (const Word& v : all) {
      FiniteLanguage pu = perm_word(ab, u), pv = perm_word(ab, v);
      bool same = parikh(u, ab) == parikh(v, ab);
      CHECK((pu == pv) == same);
      if (!same) CHECK(pu.intersect(pv).empty());
    }
}

TEST_CASE("shuffle semiring laws on random languages") {
  Rng rng(13);
  const std::size_t n = 6;
  for (int i = 0; i < 60; ++i) {
    FiniteLanguage a = random_finite_language(rng, abc, 3, 3);
    FiniteLanguage b = random_finite_language(rng, abc, 3, 3);
    FiniteLanguage c = random_finite_language(rng, abc, 3, 3);
    CHECK(shuffle_langs(a, b) == shuffle_langs(b, a));
    CHECK(shuffle_langs(shuffle_langs(a, b), c) == shuffle_langs(a, shuffle_langs(b, c)));
    CHECK(shuffle_langs(a, b.unite(c)) == shuffle_langs(a, b).unite(shuffle_langs(a, c)));
    auto it = [&](const FiniteLanguage& x) { return iter_shuffle_upto(x, n); };
    CHECK(it(a.unite(b)) == shuffle_langs_upto(it(a), it(b), n));
    CHECK(it(it(a)) == it(a));
    CHECK(it(shuffle_langs_upto(a, it(b), n)) ==
          shuffle_langs_upto(a, it(a.unite(b)), n).unite(FiniteLanguage(abc, {Word{}})));
  }
}

TEST_CASE("perm is a morphism from catenation to shuffle") {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    FiniteLanguage a = random_finite_language(rng, abc, 3, 3);
    FiniteLanguage b = random_finite_language(rng, abc, 3, 3);
    // Catenation computed directly, not through the library.
    std::set<Word> cat;
    for (const Word& x : a)
      for (const Word& y : b) cat.insert(x.concat(y));
    CHECK(perm_closure(oracle::lang(abc, cat)) == shuffle_langs(perm_closure(a), perm_closure(b)));
    CHECK(perm_closure(star_upto(a, 6)) == iter_shuffle_upto(perm_closure(a), 6));
  }
}

TEST_CASE("all_words_upto is shortlex ordered") {
  FiniteLanguage all = all_words_upto(abc, 3);
  CHECK(all.size() == 1 + 3 + 9 + 27);
  std::vector<Word> ws(all.begin(), all.end());
  CHECK(ws.front().empty());
  CHECK(ws[1] == w3("a"));
  CHECK(ws[4] == w3("aa"));
  CHECK(ws.back() == w3("ccc"));
}

TEST_CASE("language files") {
  FiniteLanguage l = parse_language("# comment\n@\na,b\n\nb,a  # trailing\n", abc);
  CHECK(l == FiniteLanguage(abc, {Word{}, w3("ab"), w3("ba")}));
  CHECK(parse_language(format_language(l), abc) == l);
}

}  // TEST_SUITE
