#include "jfa/random.hpp"

namespace jfa {

namespace {

Expr random_letter(Rng& rng, const Alphabet& a) {
  return Expr::symbol(a, static_cast<Symbol>(rng.below(a.size())));
}

}  // namespace

Expr random_regex(Rng& rng, const Alphabet& a, std::size_t depth) {
  if (depth == 0 || rng.chance(1, 4)) {
    if (rng.chance(1, 10)) return Expr::epsilon(a);
    if (rng.chance(1, 5)) {
      Word w;
      for (std::uint64_t i = rng.between(2, 3); i > 0; --i)
        w.push_back(static_cast<Symbol>(rng.below(a.size())));
      return Expr::atom(a, std::move(w));
    }
    return random_letter(rng, a);
  }
  switch (rng.below(3)) {
    case 0: return random_regex(rng, a, depth - 1) + random_regex(rng, a, depth - 1);
    case 1: return random_regex(rng, a, depth - 1).concat(random_regex(rng, a, depth - 1));
    default: return random_regex(rng, a, depth - 1).star();
  }
}

Expr random_alpha_shuf(Rng& rng, const Alphabet& a, std::size_t depth) {
  if (depth == 0 || rng.chance(1, 4)) {
    if (rng.chance(1, 10)) return Expr::epsilon(a);
    return random_letter(rng, a);
  }
  switch (rng.below(3)) {
    case 0:
      return random_alpha_shuf(rng, a, depth - 1) + random_alpha_shuf(rng, a, depth - 1);
    case 1:
      return random_alpha_shuf(rng, a, depth - 1)
          .shuffle(random_alpha_shuf(rng, a, depth - 1));
    default: return random_alpha_shuf(rng, a, depth - 1).iter_shuffle();
  }
}

FiniteLanguage random_finite_language(Rng& rng, const Alphabet& a,
                                      std::size_t max_words,
                                      std::size_t max_length) {
  FiniteLanguage lang(a);
  for (std::uint64_t i = rng.between(0, max_words); i > 0; --i) {
    Word w;
    for (std::uint64_t j = rng.between(0, max_length); j > 0; --j)
      w.push_back(static_cast<Symbol>(rng.below(a.size())));
    lang.insert(std::move(w));
  }
  return lang;
}

Machine random_machine(Rng& rng, const Alphabet& a, std::size_t max_states) {
  Machine m(a);
  const std::size_t n = rng.between(1, max_states);
  for (std::size_t q = 0; q < n; ++q) m.add_state("q" + std::to_string(q));
  m.set_start(0);
  for (StateId p = 0; p < n; ++p) {
    if (rng.chance(1, 2)) m.add_final(p);
    for (StateId q = 0; q < n; ++q) {
      for (Symbol s = 0; s < a.size(); ++s)
        if (rng.chance(1, 3)) m.add_rule(p, Word{s}, q);
      if (p != q && rng.chance(1, 12)) m.add_rule(p, {}, q);
    }
  }
  return m;
}

CnfFormula random_cnf(Rng& rng, std::size_t n, std::size_t m) {
  CnfFormula f{n, {}};
  for (std::size_t j = 0; j < m; ++j) {
    Clause c;
    for (int r = 0; r < 3; ++r)
      c.push_back(Literal{static_cast<std::size_t>(rng.between(1, n)), rng.chance(1, 2)});
    f.clauses.push_back(std::move(c));
  }
  return f;
}

std::vector<CnfFormula> all_cnf(std::size_t n, std::size_t m) {
  // Literals indexed 0..2n-1: var = i/2 + 1, positive iff i is even.
  std::vector<Clause> clauses;
  const std::size_t L = 2 * n;
  auto lit = [](std::size_t i) { return Literal{i / 2 + 1, i % 2 == 0}; };
  for (std::size_t x = 0; x < L; ++x)
    for (std::size_t y = x; y < L; ++y)
      for (std::size_t z = y; z < L; ++z) clauses.push_back({lit(x), lit(y), lit(z)});
  std::vector<CnfFormula> out;
  std::vector<std::size_t> pick(m, 0);
  auto rec = [&](auto&& self, std::size_t j, std::size_t from) -> void {
    if (j == m) {
      CnfFormula f{n, {}};
      for (std::size_t c : pick) f.clauses.push_back(clauses[c]);
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t c = from; c < clauses.size(); ++c) {
      pick[j] = c;
      self(self, j + 1, c);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Word> all_bit_strings(std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == n) continue;
    for (Symbol b : {Symbol{0}, Symbol{1}}) out.push_back(out[i].concat(Word{b}));
  }
  return out;
}

}  // namespace jfa
