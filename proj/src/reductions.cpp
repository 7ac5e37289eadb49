#include "jfa/reductions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <tuple>

#include "jfa/error.hpp"
#include "text.hpp"

namespace jfa {

// -------------------------------------------------------------------- CNF

void CnfFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].size() != 3)
      throw DomainError("clause " + std::to_string(j + 1) +
                        " does not have exactly three literals");
    for (const Literal& l : clauses[j])
      if (l.var == 0 || l.var > num_vars)
        throw DomainError("clause " + std::to_string(j + 1) +
                          " mentions variable " + std::to_string(l.var) +
                          " outside 1.." + std::to_string(num_vars));
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
      return assignment.at(l.var - 1) == l.positive;
    });
  });
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::optional<std::size_t> declared_clauses;
  Clause current;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == 'c' || line.front() == '%') continue;
    auto fields = detail::split_ws(line);
    if (fields[0] == "p") {
      if (declared_clauses) throw ParseError("duplicate header", lineno, 1);
      if (fields.size() != 4 || fields[1] != "cnf")
        throw ParseError("expected 'p cnf <vars> <clauses>'", lineno, 1);
      std::size_t n = 0, m = 0;
      auto r1 = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), n);
      auto r2 = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), m);
      if (r1.ec != std::errc() || r2.ec != std::errc())
        throw ParseError("bad header numbers", lineno, 1);
      f.num_vars = n;
      declared_clauses = m;
      continue;
    }
    if (!declared_clauses) throw ParseError("clause before 'p cnf' header", lineno, 1);
    for (std::string_view field : fields) {
      long long x = 0;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
      if (ec != std::errc() || p != field.data() + field.size())
        throw ParseError("expected an integer literal, got '" + std::string(field) + "'",
                         lineno, 1);
      if (x == 0) {
        if (current.size() != 3)
          throw ParseError("clause needs exactly three literals", lineno, 1);
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      std::size_t var = static_cast<std::size_t>(x < 0 ? -x : x);
      if (var > f.num_vars)
        throw ParseError("variable " + std::to_string(var) + " exceeds header", lineno, 1);
      current.push_back(Literal{var, x > 0});
    }
  }
  if (!declared_clauses) throw ParseError("missing 'p cnf' header", 0, 0);
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", lineno, 1);
  if (f.clauses.size() != *declared_clauses)
    throw ParseError("header declares " + std::to_string(*declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()),
                     0, 0);
  return f;
}

std::string print_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c)
      out += (l.positive ? "" : "-") + std::to_string(l.var) + " ";
    out += "0\n";
  }
  return out;
}

// ------------------------------------------------------------------- EBC2

namespace {

Word parse_bits(std::string_view s, std::size_t line) {
  Word w;
  if (s == "@") return w;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw ParseError("expected a bit string, got '" + std::string(s) + "'", line, 1);
    w.push_back(c == '0' ? 0 : 1);
  }
  return w;
}

std::string format_bits(const Word& w) {
  if (w.empty()) return "@";
  std::string s;
  for (Symbol b : w) s += b ? '1' : '0';
  return s;
}

}  // namespace

Ebc2Instance parse_ebc2(std::string_view text) {
  Ebc2Instance inst;
  bool have_target = false;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++lineno;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    std::string_view key, value;
    if (!detail::split_key(line, key, value))
      throw ParseError("expected 'v:' or 'u:' line", lineno, 1);
    value = detail::trim(value);
    if (key == "v") {
      if (have_target) throw ParseError("duplicate 'v:' line", lineno, 1);
      if (!inst.blocks.empty()) throw ParseError("'v:' must come first", lineno, 1);
      inst.target = parse_bits(value, lineno);
      have_target = true;
    } else if (key == "u") {
      if (!have_target) throw ParseError("'u:' before 'v:'", lineno, 1);
      inst.blocks.push_back(parse_bits(value, lineno));
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", lineno, 1);
    }
  }
  if (!have_target) throw ParseError("missing 'v:' line", 0, 0);
  return inst;
}

std::string print_ebc2(const Ebc2Instance& inst) {
  std::string out = "v: " + format_bits(inst.target) + "\n";
  for (const Word& u : inst.blocks) out += "u: " + format_bits(u) + "\n";
  return out;
}

// ---------------------------------------------------------------- oracles

std::optional<std::vector<bool>> brute_sat(const CnfFormula& f, std::size_t cap) {
  f.validate();
  if (f.num_vars > cap)
    throw ResourceError("sat-vars", "brute_sat: " + std::to_string(f.num_vars) +
                                        " variables exceed the cap of " +
                                        std::to_string(cap));
  std::vector<bool> a(f.num_vars, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    for (std::size_t i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1;
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> brute_ebc2(const Ebc2Instance& inst,
                                                   std::size_t cap) {
  const std::size_t k = inst.blocks.size();
  if (k > cap)
    throw ResourceError("ebc2-blocks", "brute_ebc2: " + std::to_string(k) +
                                           " blocks exceed the cap of " +
                                           std::to_string(cap));
  std::size_t total = 0;
  for (const Word& u : inst.blocks) total += u.size();
  if (total != inst.target.size()) return std::nullopt;

  std::vector<bool> used(k, false);
  std::vector<std::size_t> order;
  auto fits = [&](const Word& u, std::size_t pos) {
    return std::equal(u.begin(), u.end(), inst.target.begin() + pos);
  };
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (order.size() == k) return pos == inst.target.size();
    std::set<Word> tried;
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i] || !fits(inst.blocks[i], pos)) continue;
      if (!tried.insert(inst.blocks[i]).second) continue;
      used[i] = true;
      order.push_back(i);
      if (self(self, pos + inst.blocks[i].size())) return true;
      order.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (search(search, 0)) return order;
  return std::nullopt;
}

// ----------------------------------------------------------- SAT -> JFA

std::pair<Machine, Word> sat_to_jfa(const CnfFormula& f) {
  f.validate();
  std::vector<std::string> tokens;
  for (std::size_t j = 1; j <= f.clauses.size(); ++j)
    tokens.push_back("c" + std::to_string(j));
  Alphabet sigma(std::move(tokens));
  Machine m(sigma);
  const std::size_t n = f.num_vars;
  StateId q0 = m.add_state("q0");
  // pos[i][1] is q_i^T, pos[i][0] is q_i^F (1-based i).
  std::vector<std::array<StateId, 2>> pos(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    pos[i][1] = m.add_state("q" + std::to_string(i) + "T");
    pos[i][0] = m.add_state("q" + std::to_string(i) + "F");
  }
  m.set_start(q0);
  if (n == 0) {
    m.add_final(q0);
  } else {
    m.add_final(pos[n][1]);
    m.add_final(pos[n][0]);
    for (int x : {1, 0}) m.add_rule(q0, {}, pos[1][x]);
    for (std::size_t i = 1; i < n; ++i)
      for (int x : {1, 0})
        for (int y : {1, 0}) m.add_rule(pos[i][x], {}, pos[i + 1][y]);
  }
  std::set<std::tuple<std::size_t, bool, std::size_t>> loops;
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (const Literal& l : f.clauses[j])
      if (loops.emplace(l.var, l.positive, j).second) {
        StateId q = pos[l.var][l.positive ? 1 : 0];
        m.add_rule(q, Word{static_cast<Symbol>(j)}, q);
      }
  std::vector<Symbol> w(f.clauses.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<Symbol>(j);
  return {std::move(m), Word(std::move(w))};
}

// ----------------------------------------------------- unary CRT encoding

std::vector<std::size_t> first_primes(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t c = 2; ps.size() < n; ++c)
    if (std::all_of(ps.begin(), ps.end(), [c](std::size_t p) { return c % p; }))
      ps.push_back(c);
  return ps;
}

Expr stockmeyer_meyer_expr(const CnfFormula& f, std::size_t cap) {
  static const Alphabet unary{"a"};
  return stockmeyer_meyer_expr(f, unary, 0, cap);
}

Expr stockmeyer_meyer_expr(const CnfFormula& f, const Alphabet& alphabet,
                           Symbol letter, std::size_t cap) {
  f.validate();
  if (f.num_vars > cap)
    throw ResourceError("sm-vars", "stockmeyer_meyer_expr: " +
                                       std::to_string(f.num_vars) +
                                       " variables exceed the cap of " +
                                       std::to_string(cap));
  const auto primes = first_primes(f.num_vars);
  auto power = [&](std::size_t r) {
    return Word(std::vector<Symbol>(r, letter));
  };
  // a^r (a^p)*
  auto progression = [&](std::size_t r, std::size_t p) {
    Expr head = r == 0 ? Expr::epsilon(alphabet) : Expr::atom(alphabet, power(r));
    return simplified_concat(head, Expr::atom(alphabet, power(p)).star());
  };
  Expr e = Expr::empty_set(alphabet);
  for (std::size_t p : primes)
    for (std::size_t r = 2; r < p; ++r) e = simplified_union(e, progression(r, p));
  for (const Clause& c : f.clauses) {
    std::vector<std::size_t> vars;
    for (const Literal& l : c) vars.push_back(l.var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::size_t modulus = 1;
    for (std::size_t v : vars) modulus *= primes[v - 1];
    for (std::size_t r = 0; r < modulus; ++r) {
      bool valid = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) {
        return r % primes[v - 1] <= 1;
      });
      if (!valid) continue;
      bool falsified = std::none_of(c.begin(), c.end(), [&](const Literal& l) {
        return (r % primes[l.var - 1] == 1) == l.positive;
      });
      if (falsified) e = simplified_union(e, progression(r, modulus));
    }
  }
  return e;
}

namespace {

const Alphabet& ab_alphabet() {
  static const Alphabet ab{"a", "b"};
  return ab;
}

}  // namespace

Machine build_nonregularity_jfa(const CnfFormula& f, std::size_t cap) {
  const Alphabet& ab = ab_alphabet();
  Expr hat = regex_to_alpha_shuf(stockmeyer_meyer_expr(f, ab, 0, cap));
  Expr a = Expr::symbol(ab, 0), b = Expr::symbol(ab, 1);
  Expr lphi = b.iter_shuffle().shuffle(hat) + a.shuffle(b).iter_shuffle();
  return thompson_machine(lphi);
}

Machine build_noncommutativity_nfa(const CnfFormula& f, std::size_t cap) {
  const Alphabet& ab = ab_alphabet();
  Machine bstar(ab);
  StateId s = bstar.add_state("s");
  bstar.set_start(s);
  bstar.add_final(s);
  bstar.add_rule(s, Word{1}, s);

  Machine e = thompson_machine(stockmeyer_meyer_expr(f, ab, 0, cap));

  Machine astar_b(ab);
  StateId p = astar_b.add_state("p");
  StateId t = astar_b.add_state("f");
  astar_b.set_start(p);
  astar_b.add_final(t);
  astar_b.add_rule(p, Word{0}, p);
  astar_b.add_rule(p, Word{1}, t);

  return machine_union(shuffle_product(bstar, e), astar_b);
}

// ------------------------------------------------------- EBC2 fixed GJFA

const Alphabet& ebc2_alphabet() {
  static const Alphabet a{"0", "1", "0b", "1b", "c", "cb", "st"};
  return a;
}

namespace {

Word tokens(const Alphabet& a, std::initializer_list<std::string_view> ts) {
  Word w;
  for (auto t : ts) w.push_back(a.symbol(t));
  return w;
}

void repeat(Word& w, Symbol s, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) w.push_back(s);
}

}  // namespace

Machine ebc2_fixed_machine() {
  const Alphabet& a = ebc2_alphabet();
  Machine m(a);
  StateId qc = m.add_state("qC");
  StateId qd = m.add_state("qD");
  StateId q0 = m.add_state("q0");
  StateId q1 = m.add_state("q1");
  m.set_start(qc);
  m.add_final(qc);
  m.add_rule(qc, tokens(a, {"st", "c"}), qd);
  m.add_rule(qd, tokens(a, {"st", "0b"}), q0);
  m.add_rule(q0, tokens(a, {"st", "0"}), qd);
  m.add_rule(qd, tokens(a, {"st", "1b"}), q1);
  m.add_rule(q1, tokens(a, {"st", "1"}), qd);
  m.add_rule(qd, tokens(a, {"st", "cb"}), qc);
  return m;
}

Word ebc2_to_word(const Ebc2Instance& inst) {
  const Alphabet& a = ebc2_alphabet();
  const Symbol st = a.symbol("st"), c = a.symbol("c"), cb = a.symbol("cb");
  const Symbol bit[2] = {a.symbol("0"), a.symbol("1")};
  const Symbol bar[2] = {a.symbol("0b"), a.symbol("1b")};
  Word w;
  repeat(w, st, inst.target.size());
  for (Symbol b : inst.target) w.push_back(bit[b]);
  for (const Word& u : inst.blocks) {
    repeat(w, st, u.size() + 2);
    w.push_back(c);
    for (Symbol b : u) w.push_back(bar[b]);
    w.push_back(cb);
  }
  return w;
}

// ------------------------------------------------------- 3SAT fixed GJFA

SatGjfaLayout SatGjfaLayout::of(const CnfFormula& f) {
  f.validate();
  SatGjfaLayout l;
  l.n = f.num_vars;
  l.m = f.clauses.size();
  l.occurrences.assign(l.n, 0);
  for (const Clause& c : f.clauses)
    for (const Literal& lit : c) ++l.occurrences[lit.var - 1];
  while ((std::size_t{1} << l.code_length) < l.n) ++l.code_length;
  for (std::size_t i = 0; i < l.n; ++i) {
    Word code;
    for (std::size_t bit = l.code_length; bit-- > 0;)
      code.push_back(static_cast<Symbol>((i >> bit) & 1));
    l.codes.push_back(std::move(code));
  }
  return l;
}

const Alphabet& sat_gjfa_alphabet() {
  static const Alphabet a{"0",  "1",  "0b",   "1b",  "cT",   "cF",
                          "cb", "st", "hash", "stb", "hashb"};
  return a;
}

Machine sat_fixed_gjfa() {
  const Alphabet& a = sat_gjfa_alphabet();
  Machine m(a);
  StateId qa = m.add_state("qA");
  StateId qb[2], qc[2], qy[2][2];
  const char* tag[2] = {"T", "F"};
  for (int x = 0; x < 2; ++x) qb[x] = m.add_state(std::string("qB") + tag[x]);
  for (int x = 0; x < 2; ++x) qc[x] = m.add_state(std::string("qC") + tag[x]);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x)
      qy[y][x] = m.add_state("q" + std::to_string(y) + tag[x]);
  StateId qd = m.add_state("qD");
  StateId qe = m.add_state("qE");
  StateId qf = m.add_state("qF");
  StateId qg = m.add_state("qG");
  m.set_start(qa);
  m.add_final(qe);

  // First phase: pick a value per variable and delete satisfied literals.
  const char* open[2] = {"cT", "cF"};
  const char* bits[2] = {"0", "1"};
  const char* bars[2] = {"0b", "1b"};
  for (int x = 0; x < 2; ++x) {
    m.add_rule(qa, tokens(a, {"st", "hash"}), qb[x]);
    m.add_rule(qb[x], tokens(a, {"stb", open[x]}), qc[x]);
    for (int y = 0; y < 2; ++y) {
      m.add_rule(qc[x], tokens(a, {"stb", bars[y]}), qy[y][x]);
      m.add_rule(qy[y][x], tokens(a, {"st", bits[y]}), qc[x]);
    }
    m.add_rule(qc[x], tokens(a, {"stb", "cb"}), qb[x]);
    m.add_rule(qb[x], {}, qd);
  }
  for (int y = 0; y < 2; ++y) m.add_rule(qd, tokens(a, {"st", bits[y]}), qd);
  m.add_rule(qd, {}, qa);
  m.add_rule(qd, {}, qe);

  // Second phase: left-to-right sweep allowing at most two surviving
  // literal markers per clause segment. qF/qG/qE = zero/one/two seen.
  for (StateId s : {qe, qf, qg}) {
    m.add_rule(s, tokens(a, {"st", "hashb"}), qf);
    for (const char* t : {"stb", "0b", "1b", "cb"}) m.add_rule(s, tokens(a, {"st", t}), s);
  }
  for (const char* c : open) {
    m.add_rule(qf, tokens(a, {"st", c}), qg);
    m.add_rule(qg, tokens(a, {"st", c}), qe);
  }
  m.add_rule(qf, {}, qe);
  m.add_rule(qg, {}, qe);
  // Deleted literal blocks leave surplus stars in front of the formula part.
  m.add_rule(qe, tokens(a, {"st"}), qe);
  return m;
}

Word sat_aux_word(const SatGjfaLayout& l) {
  const Alphabet& a = sat_gjfa_alphabet();
  const Symbol st = a.symbol("st"), hash = a.symbol("hash");
  const Symbol bit[2] = {a.symbol("0"), a.symbol("1")};
  Word w;
  repeat(w, st, l.n + 3 * l.m * l.code_length);
  for (std::size_t i = 0; i < l.n; ++i) {
    w.push_back(hash);
    for (std::size_t k = 0; k < l.occurrences[i]; ++k)
      for (Symbol b : l.codes[i]) w.push_back(bit[b]);
  }
  return w;
}

Word sat_formula_word(const CnfFormula& f, const SatGjfaLayout& l) {
  const Alphabet& a = sat_gjfa_alphabet();
  const Symbol st = a.symbol("st"), stb = a.symbol("stb"), hashb = a.symbol("hashb");
  const Symbol ct = a.symbol("cT"), cf = a.symbol("cF"), cb = a.symbol("cb");
  const Symbol bar[2] = {a.symbol("0b"), a.symbol("1b")};
  const std::size_t L = l.code_length;
  Word w;
  repeat(w, st, l.m + l.m * 6 * (L + 2));
  for (const Clause& c : f.clauses) {
    w.push_back(hashb);
    for (const Literal& lit : c) {
      repeat(w, stb, L + 2);
      w.push_back(lit.positive ? ct : cf);
      for (Symbol b : l.codes[lit.var - 1]) w.push_back(bar[b]);
      w.push_back(cb);
    }
  }
  return w;
}

Word sat_to_gjfa_word(const CnfFormula& f, const SatGjfaLayout& layout) {
  return sat_aux_word(layout).concat(sat_formula_word(f, layout));
}

Word sat_to_gjfa_word(const CnfFormula& f) {
  return sat_to_gjfa_word(f, SatGjfaLayout::of(f));
}

std::pair<Machine, Word> binary_wrap(const Machine& m, const Word& w) {
  BinaryEncoding enc = binary_encode_gjfa(m);
  Word image = enc.encode(w);
  return {std::move(enc.machine), std::move(image)};
}

}  // namespace jfa
