#include "jfa/selftest.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "jfa/deciders.hpp"
#include "jfa/error.hpp"
#include "jfa/expr.hpp"
#include "jfa/random.hpp"
#include "jfa/reductions.hpp"
#include "jfa/semilinear.hpp"

namespace jfa {

// ----------------------------------------------------------------- corpus

namespace {

const std::map<std::string, std::string>& builtin_corpus() {
  static const std::map<std::string, std::string> texts{
      {"abc-cycle",
       "# FA language (abc)*; JFA language: equal numbers of a, b, c\n"
       "alphabet: a b c\n"
       "states: s r t\n"
       "start: s\n"
       "final: s\n"
       "rule: s a r\n"
       "rule: r b t\n"
       "rule: t c s\n"},
      {"abcd-blocks",
       "# general finite machine; FA language (abcd)*\n"
       "alphabet: a b c d\n"
       "states: s r\n"
       "start: s\n"
       "final: s\n"
       "rule: s a,b r\n"
       "rule: r c,d s\n"},
      {"ab-split",
       "# complementation counterexample, final set {r}\n"
       "alphabet: a b\n"
       "states: s r t\n"
       "start: s\n"
       "final: r\n"
       "rule: s a r\n"
       "rule: s b t\n"
       "rule: r a r\n"
       "rule: r b r\n"
       "rule: t a t\n"
       "rule: t b t\n"},
      {"ab-loop",
       "# GJFA language {ab} iterated shuffle\n"
       "alphabet: a b\n"
       "states: s\n"
       "start: s\n"
       "final: s\n"
       "rule: s a,b s\n"},
  };
  return texts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"abc-cycle", "abcd-blocks", "ab-split", "ab-loop"};
  return names;
}

const std::string& builtin_corpus_text(const std::string& name) {
  return builtin_corpus().at(name);
}

Corpus load_corpus(const std::string& dir) {
  auto get = [&](const std::string& name) {
    std::string text = dir.empty() ? builtin_corpus_text(name)
                                   : read_file(dir + "/" + name + ".machine");
    try {
      return parse_machine(text);
    } catch (const Error& e) {
      throw Error(name + ".machine: " + e.what());
    }
  };
  return Corpus{get("abc-cycle"), get("abcd-blocks"), get("ab-split"), get("ab-loop")};
}

// -------------------------------------------------------------- reporting

std::string format_result(const CriterionResult& r) {
  std::string out = std::string(r.pass ? "PASS" : "FAIL") + " " + r.kind + " " +
                    std::to_string(r.id) + " " + r.title;
  if (!r.detail.empty()) out += ": " + r.detail;
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) out += format_result(r) + "\n";
  return out;
}

namespace {

// Counts cases and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what();
    }
  }
  bool pass() const { return failures_ == 0 && cases_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(cases_) + " checks, " +
                    std::to_string(failures_) + " failures";
    if (!first_.empty()) s += "; first: " + first_;
    return s;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

CriterionResult finish(int id, std::string title, const Tally& t) {
  return CriterionResult{id, std::move(title), t.pass(), t.summary()};
}

FiniteLanguage filter(const Alphabet& a, std::size_t n,
                      const std::function<bool(const Word&)>& keep) {
  FiniteLanguage out(a);
  for (const Word& w : all_words_upto(a, n))
    if (keep(w)) out.insert(w);
  return out;
}

std::size_t count(const Word& w, Symbol s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

std::string words_of(const FiniteLanguage& l) {
  std::string s = "{";
  bool first = true;
  for (const Word& w : l) {
    if (!first) s += " ";
    first = false;
    s += format_word(w, l.alphabet());
    if (s.size() > 80) {
      s += " ...";
      break;
    }
  }
  return s + "}";
}

std::string diff_note(const FiniteLanguage& got, const FiniteLanguage& want) {
  return "extra " + words_of(got.minus(want)) + " missing " +
         words_of(want.minus(got));
}

// 1 -----------------------------------------------------------------------
CriterionResult criterion1(const Corpus& c) {
  Tally t;
  const Machine& m = c.abc_cycle;
  const Alphabet& a = m.alphabet();
  FiniteLanguage fa_want(a, {Word{}, word_of("abc", a), word_of("abcabc", a),
                             word_of("abcabcabc", a)});
  FiniteLanguage fa_got = fa_language_upto(m, 9);
  t.check(fa_got == fa_want, [&] { return "fa n=9 " + diff_note(fa_got, fa_want); });
  FiniteLanguage jfa_want = filter(a, 6, [](const Word& w) {
    return count(w, 0) == count(w, 1) && count(w, 1) == count(w, 2);
  });
  FiniteLanguage jfa_got = jfa_language_upto(m, 6);
  t.check(jfa_got == jfa_want, [&] { return "jfa n=6 " + diff_note(jfa_got, jfa_want); });
  return finish(1, "abc-cycle-languages", t);
}

// 2 -----------------------------------------------------------------------
CriterionResult criterion2(const Corpus& c) {
  Tally t;
  const Alphabet& a4 = c.abcd_blocks.alphabet();
  t.check(!gjfa_accepts(c.abcd_blocks, word_of("bacd", a4)), [] { return "abcd_blocks accepts bacd"; });
  Word acbd = word_of("acbd", a4);
  FiniteLanguage e = eval_upto(parse_expr("(a,b&c,d)&*", a4), 4);
  FiniteLanguage g = gjfa_language_upto(c.abcd_blocks, 4);
  t.check(e.contains(acbd), [] { return "acbd not in L((a,b&c,d)&*)"; });
  t.check(!g.contains(acbd), [] { return "acbd in abcd_blocks gjfa slice"; });
  const Alphabet& a2 = c.ab_loop.alphabet();
  FiniteLanguage l = gjfa_language_upto(c.ab_loop, 2);
  t.check(!l.contains(word_of("ba", a2)), [] { return "ba accepted by s-ab->s"; });
  t.check(l.contains(word_of("ab", a2)), [] { return "ab rejected by s-ab->s"; });
  return finish(2, "gjfa-separations", t);
}

// 3 -----------------------------------------------------------------------
CriterionResult criterion3(const Corpus& c) {
  Tally t;
  Machine m = c.ab_split;
  const Alphabet& a = m.alphabet();
  auto r = m.find_state("r"), s = m.find_state("s"), tt = m.find_state("t");
  if (!r || !s || !tt) {
    t.check(false, [] { return "ab_split machine lacks states s, r, t"; });
    return finish(3, "ab-split-complement", t);
  }
  m.set_finals({*r});
  FiniteLanguage want_r = filter(a, 4, [](const Word& w) { return count(w, 0) >= 1; });
  FiniteLanguage got_r = jfa_language_upto(m, 4);
  t.check(got_r == want_r, [&] { return "F={r} " + diff_note(got_r, want_r); });
  m.set_finals({*s, *tt});
  FiniteLanguage want_st =
      filter(a, 4, [](const Word& w) { return w.empty() || count(w, 1) >= 1; });
  FiniteLanguage got_st = jfa_language_upto(m, 4);
  t.check(got_st == want_st, [&] { return "F={s,t} " + diff_note(got_st, want_st); });
  return finish(3, "ab-split-complement", t);
}

// 4 -----------------------------------------------------------------------
CriterionResult criterion4(Rng rng) {
  Tally t;
  const Alphabet a{"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    Expr e = random_regex(rng, a, 4);
    FiniteLanguage lhs = eval_upto(regex_to_alpha_shuf(e), 6);
    FiniteLanguage rhs = perm_closure(eval_upto(e, 6));
    t.check(lhs == rhs, [&] { return print_expr(e) + " " + diff_note(lhs, rhs); });
  }
  return finish(4, "regex-to-alpha-shuf", t);
}

// 5 -----------------------------------------------------------------------
CriterionResult criterion5(Rng rng) {
  Tally t;
  const Alphabet a{"a", "b", "c"};
  const std::size_t n = 6;
  FiniteLanguage eps(a, {Word{}});
  for (int i = 0; i < 100; ++i) {
    FiniteLanguage m1 = random_finite_language(rng, a, 3, 3);
    FiniteLanguage m2 = random_finite_language(rng, a, 3, 3);
    FiniteLanguage m3 = random_finite_language(rng, a, 3, 2);
    auto tag = [&](const char* law) {
      return std::string(law) + " M1=" + words_of(m1) + " M2=" + words_of(m2) +
             " M3=" + words_of(m3);
    };
    auto sh = [](const FiniteLanguage& x, const FiniteLanguage& y) { return shuffle_langs(x, y); };
    auto it = [&](const FiniteLanguage& x) { return iter_shuffle_upto(x, n); };
    auto shn = [&](const FiniteLanguage& x, const FiniteLanguage& y) {
      return shuffle_langs_upto(x, y, n);
    };
    t.check(sh(m1, m2) == sh(m2, m1), [&] { return tag("law1"); });
    t.check(sh(sh(m1, m2), m3) == sh(m1, sh(m2, m3)), [&] { return tag("law2"); });
    t.check(sh(m1, m2.unite(m3)) == sh(m1, m2).unite(sh(m1, m3)), [&] { return tag("law3"); });
    t.check(it(m1.unite(m2)) == shn(it(m1), it(m2)), [&] { return tag("law4"); });
    t.check(it(it(m1)) == it(m1), [&] { return tag("law5"); });
    t.check(it(shn(m1, it(m2))) == shn(m1, it(m1.unite(m2))).unite(eps),
            [&] { return tag("law6"); });
    // perm as a morphism from the catenation to the shuffle structure.
    t.check(perm_closure(m1.unite(m2)) == perm_closure(m1).unite(perm_closure(m2)),
            [&] { return tag("perm-union"); });
    t.check(perm_closure(concat_langs(m1, m2)) == sh(perm_closure(m1), perm_closure(m2)),
            [&] { return tag("perm-concat"); });
    t.check(perm_closure(star_upto(m1, n)) == it(perm_closure(m1)),
            [&] { return tag("perm-star"); });
    t.check(perm_closure(eps) == eps && perm_closure(FiniteLanguage(a)).empty(),
            [&] { return tag("perm-units"); });
  }
  return finish(5, "shuffle-laws-and-perm-morphism", t);
}

// 6 -----------------------------------------------------------------------
CriterionResult criterion6(Rng rng) {
  Tally t;
  const Alphabet a{"a", "b", "c"};
  const std::vector<std::uint32_t> box(a.size(), 6);
  for (int i = 0; i < 50; ++i) {
    Expr e = random_alpha_shuf(rng, a, 4);
    SemilinearSet s = alpha_shuf_to_semilinear(e);
    Expr nf = semilinear_to_normalform(s, a);
    t.check(star_height(nf) <= 1, [&] { return "star height of " + print_expr(nf); });
    SemilinearSet back = alpha_shuf_to_semilinear(nf);
    auto diff = sl_bounded_difference(s, back, box);
    t.check(!diff, [&] {
      return print_expr(e) + " differs at " + format_word(canonical_word(*diff), a);
    });
  }
  return finish(6, "normal-form-round-trip", t);
}

// 7 -----------------------------------------------------------------------
Machine machine_of(const std::string& expr, const Alphabet& a) {
  return thompson_machine(parse_expr(expr, a));
}

void criterion7_fixed(Tally& t) {
  const Alphabet ab{"a", "b"};
  t.check(is_commutative_regular(machine_of("a*.b*", ab)).answer == Answer::No,
          [] { return "a*b* judged commutative"; });
  t.check(is_commutative_regular(machine_of("(a+b)*", ab)).answer == Answer::Yes,
          [] { return "(a+b)* judged non-commutative"; });
  const Alphabet u{"a"};
  t.check(is_commutative_regular(machine_of("(a,a,a)*+a,a", u)).answer == Answer::Yes,
          [] { return "unary machine judged non-commutative"; });
}

CriterionResult criterion7(Rng rng, Level level) {
  Tally t;
  criterion7_fixed(t);
  if (level == Level::Quick) return finish(7, "commutativity-decider (fixed cases)", t);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::string> toks{"a", "b", "c"};
    toks.resize(rng.between(1, 3));
    const Alphabet a(toks);
    Machine m = random_machine(rng, a, 4);
    Verdict exact = is_commutative_regular(m);
    const std::size_t bound = 2 * minimize_dfa(determinize_dfa(m)).num_states;
    Verdict bounded = is_perm_closed_bounded(m, Semantics::FA, bound);
    auto tag = [&] { return "machine #" + std::to_string(i) + "\n" + print_machine(m); };
    if (exact.answer == Answer::Yes) {
      t.check(bounded.answer == Answer::BoundedYes, [&] { return "exact Yes, bounded No: " + tag(); });
    } else {
      bool short_witness = exact.witness && exact.witness->size() <= bound;
      bool witness_ok = exact.witness && exact.companion &&
                        fa_accepts(m, *exact.witness) && !fa_accepts(m, *exact.companion) &&
                        parikh(*exact.witness, a) == parikh(*exact.companion, a);
      t.check(short_witness && witness_ok, [&] { return "bad exact witness: " + tag(); });
      t.check(bounded.answer == Answer::No, [&] { return "exact No, bounded Yes: " + tag(); });
    }
  }
  return finish(7, "commutativity-decider", t);
}

// 8 -----------------------------------------------------------------------
CriterionResult criterion8(Rng rng) {
  Tally t;
  auto run = [&](const CnfFormula& f) {
    auto [m, w] = sat_to_jfa(f);
    t.check(m.num_states() == 2 * f.num_vars + 1,
            [&] { return "state count for\n" + print_dimacs(f); });
    bool sat = brute_sat(f).has_value();
    t.check(jfa_accepts(m, w) == sat, [&] { return "verdict for\n" + print_dimacs(f); });
  };
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      for (const CnfFormula& f : all_cnf(n, m)) run(f);
  for (int i = 0; i < 50; ++i)
    run(random_cnf(rng, rng.between(1, 6), rng.between(1, 8)));
  return finish(8, "sat-to-jfa", t);
}

// 9 -----------------------------------------------------------------------
CriterionResult criterion9() {
  Tally t;
  const Machine m = ebc2_fixed_machine();
  const BinaryEncoding enc = binary_encode_gjfa(m);
  const std::vector<Word> blocks = all_bit_strings(2);
  std::vector<Ebc2Instance> instances;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (pick.size() == k) {
      std::size_t total = 0;
      Ebc2Instance inst;
      for (std::size_t i : pick) {
        inst.blocks.push_back(blocks[i]);
        total += blocks[i].size();
      }
      for (const Word& v : all_bit_strings(total + 1)) {
        inst.target = v;
        instances.push_back(inst);
      }
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      pick.push_back(i);
      self(self, k);
      pick.pop_back();
    }
  };
  for (std::size_t k = 0; k <= 3; ++k) rec(rec, k);
  for (const Ebc2Instance& inst : instances) {
    bool want = brute_ebc2(inst).has_value();
    Word w = ebc2_to_word(inst);
    t.check(gjfa_accepts(m, w) == want, [&] { return "plain\n" + print_ebc2(inst); });
    t.check(gjfa_accepts(enc.machine, enc.encode(w)) == want,
            [&] { return "binary\n" + print_ebc2(inst); });
  }
  return finish(9, "ebc2-gjfa", t);
}

// 10 ----------------------------------------------------------------------
CriterionResult criterion10(Rng rng) {
  Tally t;
  const Machine m = sat_fixed_gjfa();
  auto run = [&](const CnfFormula& f) {
    Word w = sat_to_gjfa_word(f);
    bool sat = brute_sat(f).has_value();
    t.check(gjfa_accepts(m, w) == sat, [&] { return "verdict for\n" + print_dimacs(f); });
    auto [bm, bw] = binary_wrap(m, w);
    t.check(bw.size() <= 13 * w.size(), [&] { return "|h(w)| > 13|w| for\n" + print_dimacs(f); });
  };
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t k = 1; k <= 2; ++k)
      for (const CnfFormula& f : all_cnf(n, k)) run(f);
  for (int i = 0; i < 20; ++i) run(random_cnf(rng, rng.between(1, 4), rng.between(1, 4)));
  return finish(10, "sat-fixed-gjfa", t);
}

// 11 ----------------------------------------------------------------------
CriterionResult criterion11() {
  Tally t;
  for (std::size_t n = 1; n <= 2; ++n) {
    std::size_t product = 1;
    for (std::size_t p : first_primes(n)) product *= p;
    // ℓ = 0 (all variables false) is masked by ε ∈ (a ⧢ b)^{⧢,*}; the next
    // length with the same residues is the prime product.
    const std::size_t level = std::max<std::size_t>(4, product);
    for (std::size_t k = 1; k <= 2; ++k)
      for (const CnfFormula& f : all_cnf(n, k)) {
        const bool unsat = !brute_sat(f).has_value();
        Verdict v = is_commutative_regular(build_noncommutativity_nfa(f));
        t.check((v.answer == Answer::Yes) == unsat,
                [&] { return "non-commutativity gadget for\n" + print_dimacs(f); });
        Machine nr = build_nonregularity_jfa(f);
        FiniteLanguage slice = jfa_language_upto(nr, level);
        bool full = slice == all_words_upto(nr.alphabet(), level);
        t.check(full == unsat, [&] {
          return "non-regularity gadget at n=" + std::to_string(level) + " for\n" +
                 print_dimacs(f);
        });
      }
  }
  return finish(11, "hardness-gadgets", t);
}

template <typename F>
CriterionResult guarded(int id, const char* title, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CriterionResult{id, title, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_criteria(const SelftestOptions& opts) {
  std::vector<CriterionResult> out;
  Corpus corpus{Machine(Alphabet{}), Machine(Alphabet{}), Machine(Alphabet{}),
                Machine(Alphabet{})};
  try {
    corpus = load_corpus(opts.corpus_dir);
  } catch (const std::exception& e) {
    for (int id = 1; id <= 3; ++id)
      out.push_back({id, "corpus", false, std::string("corpus: ") + e.what()});
    return out;
  }
  // Each randomized criterion draws from its own stream of the seed.
  Rng root(opts.seed);
  std::vector<Rng> streams;
  for (int i = 0; i <= 11; ++i) streams.push_back(root.fork());

  auto want = [&](int id) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
  };
  auto run = [&](int id, const char* title, auto&& body) {
    if (want(id)) out.push_back(guarded(id, title, body));
  };
  const bool full = opts.level == Level::Full;
  run(1, "abc-cycle-languages", [&] { return criterion1(corpus); });
  run(2, "gjfa-separations", [&] { return criterion2(corpus); });
  run(3, "ab-split-complement", [&] { return criterion3(corpus); });
  if (full) {
    run(4, "regex-to-alpha-shuf", [&] { return criterion4(streams[4]); });
    run(5, "shuffle-laws-and-perm-morphism", [&] { return criterion5(streams[5]); });
    run(6, "normal-form-round-trip", [&] { return criterion6(streams[6]); });
  }
  run(7, "commutativity-decider", [&] { return criterion7(streams[7], opts.level); });
  if (full) {
    run(8, "sat-to-jfa", [&] { return criterion8(streams[8]); });
    run(9, "ebc2-gjfa", [&] { return criterion9(); });
    run(10, "sat-fixed-gjfa", [&] { return criterion10(streams[10]); });
    run(11, "hardness-gadgets", [&] { return criterion11(); });
  }
  return out;
}

// ------------------------------------------------------------- invariants

namespace {

Machine machine_of_words(const FiniteLanguage& l) {
  std::optional<Expr> e;
  for (const Word& w : l) {
    Expr t = w.empty() ? Expr::epsilon(l.alphabet()) : Expr::atom(l.alphabet(), w);
    e = e ? *e + t : t;
  }
  return thompson_machine(e ? *e : Expr::empty_set(l.alphabet()));
}

Alphabet prefix_alphabet(Rng& rng) {
  std::vector<std::string> toks{"a", "b", "c"};
  toks.resize(rng.between(1, 3));
  return Alphabet(toks);
}

CriterionResult invariants_core(Rng& rng) {
  Tally t;
  const Alphabet abc{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    FiniteLanguage a = random_finite_language(rng, abc, 3, 3);
    FiniteLanguage b = random_finite_language(rng, abc, 3, 3);
    t.check(shuffle_langs(a, b) == shuffle_langs(b, a), [] { return "shuffle not commutative"; });
    FiniteLanguage c = perm_closure(a);
    t.check(a.subset_of(c) && perm_closure(c) == c, [] { return "perm_closure not a hull"; });
    for (const Word& u : a)
      for (const Word& v : b) {
        FiniteLanguage s = shuffle_words(abc, u, v);
        bool ok = s.size() <= binomial(u.size() + v.size(), u.size());
        for (const Word& w : s) ok = ok && parikh(w, abc) == parikh(u.concat(v), abc);
        t.check(ok, [&] { return "shuffle of " + format_word(u, abc) + " and " + format_word(v, abc); });
      }
  }
  return finish(1, "core", t);
}

CriterionResult invariants_expr(Rng& rng) {
  Tally t;
  const Alphabet abc{"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    Expr e = random_regex(rng, abc, 4);
    t.check(parse_expr(print_expr(e), abc) == e, [&] { return "round trip " + print_expr(e); });
    FiniteLanguage five = eval_upto(e, 5);
    t.check(eval_upto(e, 6).truncate(5) == five, [&] { return "truncation " + print_expr(e); });
    t.check(fa_language_upto(thompson_machine(e), 5) == five, [&] { return "thompson " + print_expr(e); });
  }
  return finish(2, "expr", t);
}

CriterionResult invariants_machine(Rng& rng) {
  Tally t;
  for (int i = 0; i < 50; ++i) {
    Alphabet a = prefix_alphabet(rng);
    Machine m = random_machine(rng, a, 4);
    FiniteLanguage j = jfa_language_upto(m, 5);
    t.check(j == perm_closure(fa_language_upto(m, 5)), [] { return "jfa != perm(fa)"; });
    t.check(gjfa_language_upto(m, 5) == j, [] { return "gjfa != jfa on a finite machine"; });
    t.check(parse_machine(print_machine(m)) == m, [] { return "machine round trip"; });
    Dfa d = minimize_dfa(determinize_dfa(m));
    for (const Word& w : all_words_upto(a, 5))
      t.check(d.accepts(w) == fa_accepts(m, w), [&] { return "min dfa differs on " + format_word(w, a); });
  }
  return finish(3, "machine", t);
}

CriterionResult invariants_semilinear(Rng& rng) {
  Tally t;
  const Alphabet abc{"a", "b", "c"};
  for (int i = 0; i < 30; ++i) {
    Expr e = random_alpha_shuf(rng, abc, 3);
    SemilinearSet once = alpha_shuf_to_semilinear(e.iter_shuffle());
    SemilinearSet twice = alpha_shuf_to_semilinear(e.iter_shuffle().iter_shuffle());
    t.check(sl_bounded_equal(once, twice, {4, 4, 4}), [&] { return "star fixed point " + print_expr(e); });
  }
  for (int i = 0; i < 50; ++i) {
    Alphabet a = prefix_alphabet(rng);
    Machine m = random_machine(rng, a, 3);
    SemilinearSet s = nfa_to_semilinear(m);
    for (const Word& w : all_words_upto(a, 5))
      t.check(sl_member(s, parikh(w, a)) == jfa_accepts(m, w),
              [&] { return "nfa_to_semilinear differs on " + format_word(w, a); });
  }
  return finish(4, "semilinear", t);
}

CriterionResult invariants_deciders(Rng& rng) {
  Tally t;
  const Alphabet abc{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    FiniteLanguage l = perm_closure(random_finite_language(rng, abc, 4, 3));
    t.check(is_commutative_regular(machine_of_words(l)).answer == Answer::Yes,
            [&] { return "perm closure " + words_of(l) + " judged noncommutative"; });
  }
  return finish(5, "deciders", t);
}

CriterionResult invariants_reductions(Rng& rng) {
  Tally t;
  auto round_trip = [&](const Machine& m, const char* what) {
    t.check(parse_machine(print_machine(m)) == m, [&] { return std::string(what) + " round trip"; });
  };
  round_trip(ebc2_fixed_machine(), "block cover machine");
  round_trip(sat_fixed_gjfa(), "3sat machine");
  round_trip(binary_wrap(ebc2_fixed_machine(), Word{}).first, "binary block cover machine");
  for (int i = 0; i < 20; ++i) {
    CnfFormula f = random_cnf(rng, rng.between(1, 2), rng.between(1, 3));
    round_trip(sat_to_jfa(f).first, "sat-to-jfa machine");
    round_trip(build_nonregularity_jfa(f), "non-regularity machine");
    round_trip(build_noncommutativity_nfa(f), "non-commutativity machine");
  }
  return finish(6, "reductions", t);
}

}  // namespace

std::vector<CriterionResult> run_invariants(const SelftestOptions& opts) {
  std::vector<CriterionResult> out;
  if (opts.level != Level::Full) return out;
  Rng root(opts.seed);
  for (int i = 0; i <= 11; ++i) root.fork();
  const std::vector<std::pair<const char*, CriterionResult (*)(Rng&)>> suites{
      {"core", invariants_core},           {"expr", invariants_expr},
      {"machine", invariants_machine},     {"semilinear", invariants_semilinear},
      {"deciders", invariants_deciders},   {"reductions", invariants_reductions}};
  int id = 0;
  for (const auto& [name, body] : suites) {
    Rng rng = root.fork();
    CriterionResult r = guarded(++id, name, [&] { return body(rng); });
    r.kind = "invariant";
    out.push_back(std::move(r));
  }
  return out;
}

CriterionResult check_determinism(const SelftestOptions& opts) {
  return guarded(12, "determinism", [&] {
    std::string first = format_report(run_criteria(opts));
    std::string second = format_report(run_criteria(opts));
    bool same = first == second;
    return CriterionResult{12, "determinism", same,
                           "two runs at seed " + std::to_string(opts.seed) + ", " +
                               std::to_string(first.size()) + " bytes, " +
                               (same ? "identical" : "different")};
  });
}

}  // namespace jfa
