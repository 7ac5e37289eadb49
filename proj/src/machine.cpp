#include "jfa/machine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <type_traits>
#include <unordered_set>

#include "jfa/error.hpp"
#include "jfa/parallel.hpp"
#include "text.hpp"

namespace jfa {

const char* to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::FA: return "fa";
    case Semantics::JFA: return "jfa";
    case Semantics::GJFA: return "gjfa";
  }
  return "?";
}

// ----------------------------------------------------------------- Machine

StateId Machine::add_state(std::string name) {
  if (name.empty() || detail::split_ws(name).size() != 1 ||
      name.find('#') != std::string::npos)
    throw ParseError("invalid state name '" + name + "'", 0, 0);
  auto id = static_cast<StateId>(names_.size());
  if (!by_name_.emplace(name, id).second)
    throw ParseError("duplicate state '" + name + "'", 0, 0);
  names_.push_back(std::move(name));
  finals_.push_back(false);
  outgoing_.emplace_back();
  return id;
}

void Machine::add_rule(StateId from, Word label, StateId to) {
  if (from >= num_states() || to >= num_states())
    throw DomainError("rule endpoint is not a state");
  for (Symbol s : label)
    if (s >= alphabet_.size())
      throw MismatchError("rule label outside alphabet");
  outgoing_[from].push_back(rules_.size());
  rules_.push_back(Rule{from, std::move(label), to});
}

void Machine::set_start(StateId s) {
  if (s >= num_states()) throw DomainError("start is not a state");
  start_ = s;
}

void Machine::add_final(StateId s) {
  if (s >= num_states()) throw DomainError("final is not a state");
  finals_[s] = true;
}

void Machine::set_finals(std::vector<StateId> finals) {
  std::fill(finals_.begin(), finals_.end(), false);
  for (StateId f : finals) add_final(f);
}

std::optional<StateId> Machine::find_state(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

StateId Machine::start() const {
  if (!start_) throw DomainError("machine has no start state");
  return *start_;
}

std::vector<StateId> Machine::finals() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < num_states(); ++s)
    if (finals_[s]) out.push_back(s);
  return out;
}

MachineKind Machine::kind() const noexcept {
  for (const Rule& r : rules_)
    if (r.label.size() > 1) return MachineKind::GeneralFiniteMachine;
  return MachineKind::FiniteMachine;
}

const std::vector<std::vector<std::size_t>>& Machine::outgoing() const {
  return outgoing_;
}

bool Machine::operator==(const Machine& other) const {
  return alphabet_ == other.alphabet_ && names_ == other.names_ &&
         rules_ == other.rules_ && start_ == other.start_ &&
         finals_ == other.finals_;
}

// -------------------------------------------------------------- file format

Machine parse_machine(std::string_view text) {
  std::optional<Machine> m;
  std::vector<std::string> pending_states;
  std::optional<std::string> start;
  std::vector<std::pair<std::string, std::size_t>> finals;
  struct PendingRule {
    std::string from, label, to;
    std::size_t line;
  };
  std::vector<PendingRule> rules;
  std::optional<Alphabet> alphabet;
  bool saw_states = false;

  std::size_t lineno = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++lineno;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    std::string_view key, value;
    if (!detail::split_key(line, key, value))
      throw ParseError("expected 'key: value'", lineno, 1);
    auto fields = detail::split_ws(value);
    if (key == "alphabet") {
      if (alphabet) throw ParseError("duplicate alphabet line", lineno, 1);
      std::vector<std::string> toks(fields.begin(), fields.end());
      try {
        alphabet = Alphabet(std::move(toks));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else if (key == "states") {
      if (saw_states) throw ParseError("duplicate states line", lineno, 1);
      saw_states = true;
      pending_states.assign(fields.begin(), fields.end());
    } else if (key == "start") {
      if (start) throw ParseError("duplicate start line", lineno, 1);
      if (fields.size() != 1)
        throw ParseError("start takes exactly one state", lineno, 1);
      start = std::string(fields[0]);
    } else if (key == "final" || key == "finals") {
      for (auto f : fields) finals.emplace_back(std::string(f), lineno);
    } else if (key == "rule") {
      if (fields.size() != 3)
        throw ParseError("rule needs: source label target", lineno, 1);
      rules.push_back({std::string(fields[0]), std::string(fields[1]),
                       std::string(fields[2]), lineno});
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", lineno, 1);
    }
  }
  if (!alphabet) throw ParseError("missing alphabet line", 0, 0);
  if (!saw_states) throw ParseError("missing states line", 0, 0);
  if (!start) throw ParseError("missing start line", 0, 0);

  m.emplace(*alphabet);
  for (auto& s : pending_states) {
    try {
      m->add_state(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, 0);
    }
  }
  auto state = [&](const std::string& name, std::size_t line) {
    auto id = m->find_state(name);
    if (!id) throw ParseError("undeclared state '" + name + "'", line, 1);
    return *id;
  };
  m->set_start(state(*start, 0));
  for (auto& [f, line] : finals) m->add_final(state(f, line));
  for (auto& r : rules) {
    Word label;
    try {
      label = parse_word(r.label, *alphabet);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), r.line, 1);
    }
    m->add_rule(state(r.from, r.line), std::move(label), state(r.to, r.line));
  }
  return std::move(*m);
}

std::string print_machine(const Machine& m) {
  std::string out = "alphabet:";
  for (const auto& t : m.alphabet().tokens()) out += " " + t;
  out += "\nstates:";
  for (StateId s = 0; s < m.num_states(); ++s) out += " " + m.state_name(s);
  out += "\nstart: " + m.state_name(m.start()) + "\nfinal:";
  for (StateId f : m.finals()) out += " " + m.state_name(f);
  out += "\n";
  for (const Rule& r : m.rules()) {
    out += "rule: " + m.state_name(r.from) + " " +
           format_word(r.label, m.alphabet()) + " " + m.state_name(r.to) + "\n";
  }
  return out;
}

// --------------------------------------------------------------- acceptors

bool fa_accepts(const Machine& m, const Word& w) {
  const std::size_t len = w.size() + 1;
  std::vector<bool> seen(m.num_states() * len, false);
  std::vector<std::pair<StateId, std::size_t>> stack{{m.start(), 0}};
  seen[m.start() * len] = true;
  const auto& out = m.outgoing();
  while (!stack.empty()) {
    auto [q, pos] = stack.back();
    stack.pop_back();
    if (pos == w.size() && m.is_final(q)) return true;
    for (std::size_t ri : out[q]) {
      const Rule& r = m.rules()[ri];
      if (pos + r.label.size() > w.size()) continue;
      if (!std::equal(r.label.begin(), r.label.end(), w.begin() + pos)) continue;
      std::size_t np = pos + r.label.size();
      std::size_t key = r.to * len + np;
      if (!seen[key]) {
        seen[key] = true;
        stack.emplace_back(r.to, np);
      }
    }
  }
  return false;
}

namespace {

// Visited set over JFA configurations (state, remaining Parikh vector),
// keyed by a mixed-radix index of the vector.
class ConfigSet {
 public:
  explicit ConfigSet(std::uint64_t universe) {
    if (universe <= (std::uint64_t{1} << 26)) dense_.assign(universe, false);
  }
  bool insert(std::uint64_t key) {
    if (!dense_.empty()) {
      if (dense_[key]) return false;
      dense_[key] = true;
      return true;
    }
    return sparse_.insert(key).second;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace

bool jfa_accepts(const Machine& m, const Word& w) {
  if (m.kind() != MachineKind::FiniteMachine)
    throw DomainError("jfa_accepts needs a finite machine (labels of length "
                      "<= 1); use gjfa_accepts for general machines");
  const ParikhVector counts = parikh(w, m.alphabet());
  const std::size_t k = counts.dim();
  std::vector<std::uint64_t> stride(k);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = space;
    if (space > std::numeric_limits<std::uint64_t>::max() / (counts[i] + 1ull) /
                    (m.num_states() + 1ull))
      throw ResourceError("jfa-configurations",
                          "JFA configuration space too large");
    space *= counts[i] + 1ull;
  }
  std::uint64_t full = 0;
  for (std::size_t i = 0; i < k; ++i) full += counts[i] * stride[i];
  const std::uint64_t nq = m.num_states();

  ConfigSet seen(space * nq);
  // Remaining count of symbol a is (idx / stride[a]) % (counts[a] + 1).
  std::vector<std::pair<StateId, std::uint64_t>> stack{{m.start(), full}};
  seen.insert(full * nq + m.start());
  const auto& out = m.outgoing();
  while (!stack.empty()) {
    auto [q, idx] = stack.back();
    stack.pop_back();
    if (idx == 0 && m.is_final(q)) return true;
    for (std::size_t ri : out[q]) {
      const Rule& r = m.rules()[ri];
      std::uint64_t nidx = idx;
      if (!r.label.empty()) {
        Symbol a = r.label[0];
        if ((idx / stride[a]) % (counts[a] + 1ull) == 0) continue;
        nidx = idx - stride[a];
      }
      if (seen.insert(nidx * nq + r.to)) stack.emplace_back(r.to, nidx);
    }
  }
  return false;
}

namespace {

// Symbols occurring in labels of rules reachable from each state. A
// configuration whose remaining input has a symbol outside this set is dead.
std::vector<std::vector<bool>> consumable_symbols(const Machine& m) {
  const std::size_t n = m.num_states(), k = m.alphabet().size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(k, false));
  for (StateId q = 0; q < n; ++q) {
    std::vector<bool> seen(n, false);
    std::vector<StateId> stack{q};
    seen[q] = true;
    while (!stack.empty()) {
      StateId p = stack.back();
      stack.pop_back();
      for (std::size_t ri : m.outgoing()[p]) {
        const Rule& r = m.rules()[ri];
        for (Symbol s : r.label) out[q][s] = true;
        if (!seen[r.to]) {
          seen[r.to] = true;
          stack.push_back(r.to);
        }
      }
    }
  }
  return out;
}

// Configurations are keyed by the state followed by the remaining word, so
// deleting equal factors at different positions that leave the same word
// is explored once. Keys use one byte per symbol when the alphabet allows.
template <typename Char>
bool gjfa_search(const Machine& m, const Word& w) {
  using Key = std::basic_string<Char>;
  const auto consumable = consumable_symbols(m);
  const auto& out = m.outgoing();
  std::vector<Key> labels;
  labels.reserve(m.rules().size());
  for (const Rule& r : m.rules()) {
    Key l;
    for (Symbol s : r.label) l.push_back(static_cast<Char>(s));
    labels.push_back(std::move(l));
  }
  auto live = [&](StateId q, std::basic_string_view<Char> rest) {
    const auto& ok = consumable[q];
    return std::all_of(rest.begin(), rest.end(),
                       [&](Char c) { return ok[static_cast<std::make_unsigned_t<Char>>(c)]; });
  };

  std::unordered_set<Key> seen;
  std::vector<Key> stack;
  auto push = [&](StateId q, std::basic_string_view<Char> a,
                  std::basic_string_view<Char> b) {
    Key k;
    k.reserve(a.size() + b.size() + 2);
    k.push_back(static_cast<Char>(q & 0xff));
    k.push_back(static_cast<Char>(q >> 8));
    k.append(a);
    k.append(b);
    if (!live(q, std::basic_string_view<Char>(k).substr(2))) return;
    if (seen.insert(k).second) stack.push_back(std::move(k));
  };
  Key initial;
  for (Symbol s : w) initial.push_back(static_cast<Char>(s));
  push(m.start(), initial, {});

  while (!stack.empty()) {
    Key cur = std::move(stack.back());
    stack.pop_back();
    const StateId q = static_cast<StateId>(
        static_cast<std::make_unsigned_t<Char>>(cur[0]) |
        (static_cast<std::make_unsigned_t<Char>>(cur[1]) << 8));
    std::basic_string_view<Char> rest = std::basic_string_view<Char>(cur).substr(2);
    if (rest.empty() && m.is_final(q)) return true;
    // Reverse order so the first rule is explored first.
    for (auto it = out[q].rbegin(); it != out[q].rend(); ++it) {
      const Rule& r = m.rules()[*it];
      const Key& y = labels[*it];
      if (y.empty()) {
        push(r.to, rest, {});
        continue;
      }
      for (std::size_t p = rest.find(y); p != std::basic_string_view<Char>::npos;
           p = rest.find(y, p + 1))
        push(r.to, rest.substr(0, p), rest.substr(p + y.size()));
    }
  }
  return false;
}

}  // namespace

bool gjfa_accepts(const Machine& m, const Word& w) {
  if (m.num_states() > 0xffff)
    throw ResourceError("gjfa-states", "too many states for GJFA search");
  if (m.alphabet().size() <= 0x100) return gjfa_search<char>(m, w);
  return gjfa_search<char16_t>(m, w);
}

bool accepts(const Machine& m, Semantics sem, const Word& w) {
  switch (sem) {
    case Semantics::FA: return fa_accepts(m, w);
    case Semantics::JFA: return jfa_accepts(m, w);
    case Semantics::GJFA: return gjfa_accepts(m, w);
  }
  return false;
}

// ------------------------------------------------------------- enumeration

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 26;

// Number of words of each length 0..n; throws if the total is too large.
std::vector<std::uint64_t> layer_sizes(std::size_t k, std::size_t n) {
  std::vector<std::uint64_t> sizes;
  std::uint64_t layer = 1, total = 0;
  for (std::size_t len = 0; len <= n; ++len) {
    sizes.push_back(layer);
    total += layer;
    if (total > kMaxEnumeration)
      throw ResourceError("enumeration",
                          "bounded enumeration exceeds 2^26 candidate words");
    if (len < n) {
      if (k == 0) {
        layer = 0;
      } else {
        layer *= k;
      }
    }
  }
  return sizes;
}

Word decode(std::uint64_t idx, std::size_t len, std::size_t k) {
  std::vector<Symbol> syms(len);
  for (std::size_t i = len; i-- > 0;) {
    syms[i] = static_cast<Symbol>(idx % k);
    idx /= k;
  }
  return Word(std::move(syms));
}

FiniteLanguage filter_parallel(const Machine& m, Semantics sem, std::size_t n) {
  const std::size_t k = m.alphabet().size();
  auto sizes = layer_sizes(k, n);
  std::vector<std::uint64_t> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    offset[i + 1] = offset[i] + sizes[i];
  const std::uint64_t total = offset.back();
  std::vector<char> hit(total, 0);
  parallel::for_each_index(static_cast<std::int64_t>(total), [&](std::int64_t g) {
    auto gi = static_cast<std::uint64_t>(g);
    std::size_t len =
        std::upper_bound(offset.begin(), offset.end(), gi) - offset.begin() - 1;
    Word w = decode(gi - offset[len], len, k);
    hit[gi] = accepts(m, sem, w) ? 1 : 0;
  });
  std::set<Word> words;
  for (std::size_t len = 0; len < sizes.size(); ++len)
    for (std::uint64_t i = 0; i < sizes[len]; ++i)
      if (hit[offset[len] + i]) words.insert(words.end(), decode(i, len, k));
  return FiniteLanguage(m.alphabet(), std::move(words));
}

}  // namespace

FiniteLanguage language_upto(const Machine& m, Semantics sem, std::size_t n) {
  return filter_parallel(m, sem, n);
}

FiniteLanguage language_upto_serial(const Machine& m, Semantics sem,
                                    std::size_t n) {
  FiniteLanguage out(m.alphabet());
  for (const Word& w : all_words_upto(m.alphabet(), n))
    if (accepts(m, sem, w)) out.insert(w);
  return out;
}

FiniteLanguage fa_language_upto(const Machine& m, std::size_t n) {
  return language_upto(m, Semantics::FA, n);
}
FiniteLanguage jfa_language_upto(const Machine& m, std::size_t n) {
  return language_upto(m, Semantics::JFA, n);
}
FiniteLanguage gjfa_language_upto(const Machine& m, std::size_t n) {
  return language_upto(m, Semantics::GJFA, n);
}

FiniteLanguage jfa_language_upto_by_parikh(const Machine& m, std::size_t n) {
  const Alphabet& a = m.alphabet();
  FiniteLanguage out(a);
  ParikhVector v(a.size());
  // Enumerate all vectors with coordinate sum <= n.
  struct Rec {
    const Machine& m;
    const Alphabet& a;
    FiniteLanguage& out;
    void go(ParikhVector& v, std::size_t i, std::size_t budget) {
      if (i == v.dim()) {
        Word w = canonical_word(v);
        if (jfa_accepts(m, w))
          for (const Word& p : perm_word(a, w)) out.insert(p);
        return;
      }
      for (std::size_t c = 0; c <= budget; ++c) {
        v[i] = static_cast<std::uint32_t>(c);
        go(v, i + 1, budget - c);
      }
      v[i] = 0;
    }
  };
  if (a.empty()) {
    if (jfa_accepts(m, Word{})) out.insert(Word{});
    return out;
  }
  Rec{m, a, out}.go(v, 0, n);
  return out;
}

// -------------------------------------------------------------------- DFAs

StateId Dfa::run(StateId q, const Word& w) const {
  for (Symbol s : w) q = next(q, s);
  return q;
}

Machine Dfa::to_machine() const {
  Machine m(alphabet);
  for (std::size_t q = 0; q < num_states; ++q)
    m.add_state("d" + std::to_string(q));
  m.set_start(start);
  for (std::size_t q = 0; q < num_states; ++q) {
    if (accepting[q]) m.add_final(static_cast<StateId>(q));
    for (Symbol a = 0; a < alphabet.size(); ++a)
      m.add_rule(static_cast<StateId>(q), Word{a}, next(static_cast<StateId>(q), a));
  }
  return m;
}

namespace {

void require_finite(const Machine& m, const char* op) {
  if (m.kind() != MachineKind::FiniteMachine)
    throw DomainError(std::string(op) + " needs a finite machine (labels of "
                                        "length <= 1)");
}

std::vector<StateId> eps_closure(const Machine& m, std::vector<StateId> set) {
  std::vector<bool> in(m.num_states(), false);
  for (StateId s : set) in[s] = true;
  std::vector<StateId> stack = set;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (std::size_t ri : m.outgoing()[q]) {
      const Rule& r = m.rules()[ri];
      if (r.label.empty() && !in[r.to]) {
        in[r.to] = true;
        set.push_back(r.to);
        stack.push_back(r.to);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

Dfa determinize_dfa(const Machine& m) {
  require_finite(m, "determinize");
  const std::size_t k = m.alphabet().size();
  Dfa d{m.alphabet(), 0, 0, {}, {}};
  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> queue;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, fresh] = ids.emplace(set, static_cast<StateId>(ids.size()));
    if (fresh) {
      bool acc = std::any_of(set.begin(), set.end(),
                             [&](StateId s) { return m.is_final(s); });
      d.accepting.push_back(acc);
      d.delta.resize(ids.size() * k);
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  d.start = intern(eps_closure(m, {m.start()}));
  while (!queue.empty()) {
    std::vector<StateId> set = std::move(queue.front());
    queue.pop_front();
    StateId id = ids.at(set);
    for (Symbol a = 0; a < k; ++a) {
      std::vector<StateId> next;
      for (StateId q : set)
        for (std::size_t ri : m.outgoing()[q]) {
          const Rule& r = m.rules()[ri];
          if (r.label.size() == 1 && r.label[0] == a) next.push_back(r.to);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      StateId target = intern(eps_closure(m, std::move(next)));
      d.delta[id * k + a] = target;
    }
  }
  d.num_states = ids.size();
  return d;
}

Dfa minimize_dfa(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  // Reachable part only.
  std::vector<bool> reach(d.num_states, false);
  std::vector<StateId> stack{d.start};
  reach[d.start] = true;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (Symbol a = 0; a < k; ++a) {
      StateId t = d.next(q, a);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  // Moore refinement.
  std::vector<std::size_t> cls(d.num_states, 0);
  for (std::size_t q = 0; q < d.num_states; ++q) cls[q] = d.accepting[q] ? 1 : 0;
  std::size_t num_classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig_ids;
    std::vector<std::size_t> next_cls(d.num_states, 0);
    for (std::size_t q = 0; q < d.num_states; ++q) {
      if (!reach[q]) continue;
      std::vector<std::size_t> sig{cls[q]};
      for (Symbol a = 0; a < k; ++a) sig.push_back(cls[d.next(static_cast<StateId>(q), a)]);
      next_cls[q] = sig_ids.emplace(std::move(sig), sig_ids.size()).first->second;
    }
    bool stable = sig_ids.size() == num_classes;
    num_classes = sig_ids.size();
    cls = std::move(next_cls);
    if (stable) break;
  }
  // Canonical numbering: breadth-first from the start, symbols in order.
  std::vector<StateId> rep(num_classes, 0);
  for (std::size_t q = 0; q < d.num_states; ++q)
    if (reach[q]) rep[cls[q]] = static_cast<StateId>(q);
  std::vector<std::optional<StateId>> order(num_classes);
  std::deque<std::size_t> queue{cls[d.start]};
  order[cls[d.start]] = 0;
  StateId next_id = 1;
  std::vector<std::size_t> by_id{cls[d.start]};
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < k; ++a) {
      std::size_t t = cls[d.next(rep[c], a)];
      if (!order[t]) {
        order[t] = next_id++;
        by_id.push_back(t);
        queue.push_back(t);
      }
    }
  }
  Dfa out{d.alphabet, by_id.size(), 0, std::vector<StateId>(by_id.size() * k),
          std::vector<bool>(by_id.size())};
  for (std::size_t id = 0; id < by_id.size(); ++id) {
    StateId r = rep[by_id[id]];
    out.accepting[id] = d.accepting[r];
    for (Symbol a = 0; a < k; ++a)
      out.delta[id * k + a] = *order[cls[d.next(r, a)]];
  }
  return out;
}

Dfa dfa_of_machine(const Machine& m) { return determinize_dfa(m); }

Machine determinize(const Machine& m) { return determinize_dfa(m).to_machine(); }

Machine minimize(const Machine& m) {
  return minimize_dfa(determinize_dfa(m)).to_machine();
}

// ----------------------------------------------------------- constructions

Machine shuffle_product(const Machine& m1, const Machine& m2) {
  require_finite(m1, "shuffle_product");
  require_finite(m2, "shuffle_product");
  if (!(m1.alphabet() == m2.alphabet()))
    throw MismatchError("shuffle_product: alphabet mismatch");
  Machine m(m1.alphabet());
  const std::size_t n2 = m2.num_states();
  for (StateId p = 0; p < m1.num_states(); ++p)
    for (StateId q = 0; q < n2; ++q)
      m.add_state("(" + m1.state_name(p) + "," + m2.state_name(q) + ")");
  auto id = [n2](StateId p, StateId q) { return static_cast<StateId>(p * n2 + q); };
  m.set_start(id(m1.start(), m2.start()));
  for (StateId p = 0; p < m1.num_states(); ++p)
    for (StateId q = 0; q < n2; ++q)
      if (m1.is_final(p) && m2.is_final(q)) m.add_final(id(p, q));
  for (const Rule& r : m1.rules())
    for (StateId q = 0; q < n2; ++q) m.add_rule(id(r.from, q), r.label, id(r.to, q));
  for (const Rule& r : m2.rules())
    for (StateId p = 0; p < m1.num_states(); ++p)
      m.add_rule(id(p, r.from), r.label, id(p, r.to));
  return m;
}

Machine machine_union(const Machine& m1, const Machine& m2) {
  if (!(m1.alphabet() == m2.alphabet()))
    throw MismatchError("machine_union: alphabet mismatch");
  Machine m(m1.alphabet());
  StateId s = m.add_state("u");
  auto copy = [&](const Machine& src, const std::string& prefix) {
    StateId base = static_cast<StateId>(m.num_states());
    for (StateId q = 0; q < src.num_states(); ++q) {
      m.add_state(prefix + src.state_name(q));
      if (src.is_final(q)) m.add_final(base + q);
    }
    for (const Rule& r : src.rules()) m.add_rule(base + r.from, r.label, base + r.to);
    m.add_rule(s, {}, base + src.start());
  };
  copy(m1, "1:");
  copy(m2, "2:");
  m.set_start(s);
  return m;
}

Machine word_to_jfa(const Alphabet& alphabet, const Word& w) {
  Machine m(alphabet);
  for (std::size_t i = 0; i <= w.size(); ++i) m.add_state("p" + std::to_string(i));
  for (std::size_t i = 0; i < w.size(); ++i)
    m.add_rule(static_cast<StateId>(i), Word{w[i]}, static_cast<StateId>(i + 1));
  m.set_start(0);
  m.add_final(static_cast<StateId>(w.size()));
  return m;
}

const Alphabet& binary_alphabet() {
  static const Alphabet bits{"0", "1"};
  return bits;
}

Word BinaryEncoding::encode(const Word& w) const {
  Word out;
  for (Symbol s : w)
    for (char c : image.at(s)) out.push_back(c == '0' ? 0 : 1);
  return out;
}

BinaryEncoding binary_encode_gjfa(const Machine& m) {
  std::vector<std::string> image;
  for (std::size_t i = 0; i < m.alphabet().size(); ++i)
    image.push_back("1" + std::string(i + 1, '0') + "1");
  BinaryEncoding enc{Machine(binary_alphabet()), std::move(image)};
  for (StateId q = 0; q < m.num_states(); ++q) enc.machine.add_state(m.state_name(q));
  for (const Rule& r : m.rules()) enc.machine.add_rule(r.from, enc.encode(r.label), r.to);
  enc.machine.set_start(m.start());
  for (StateId f : m.finals()) enc.machine.add_final(f);
  return enc;
}

std::vector<bool> unary_lengths_accepted(const Machine& m, Symbol letter,
                                         std::size_t max_len) {
  std::vector<bool> result(max_len + 1, false);
  auto closure = [&](std::vector<StateId> set) { return eps_closure(m, std::move(set)); };
  std::vector<StateId> cur = closure({m.start()});
  for (std::size_t len = 0;; ++len) {
    result[len] = std::any_of(cur.begin(), cur.end(),
                              [&](StateId q) { return m.is_final(q); });
    if (len == max_len || cur.empty()) break;
    std::vector<StateId> next;
    for (StateId q : cur)
      for (std::size_t ri : m.outgoing()[q]) {
        const Rule& r = m.rules()[ri];
        if (r.label.size() == 1 && r.label[0] == letter) next.push_back(r.to);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = closure(std::move(next));
  }
  return result;
}

}  // namespace jfa
