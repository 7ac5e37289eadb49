#include "jfa/deciders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "jfa/error.hpp"

namespace jfa {

const char* to_string(Answer a) noexcept {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::BoundedYes: return "BoundedYes";
  }
  return "?";
}

std::string describe(const Verdict& v, const Alphabet& alphabet) {
  std::string out = to_string(v.answer);
  if (v.bound) out += "(" + std::to_string(*v.bound) + ")";
  if (v.transposition) {
    out += " state=d" + std::to_string(v.transposition->state) +
           " letters=" + alphabet.token(v.transposition->a) + "," +
           alphabet.token(v.transposition->b);
  }
  if (v.witness) out += " witness=" + format_word(*v.witness, alphabet);
  if (v.companion) out += " companion=" + format_word(*v.companion, alphabet);
  return out;
}

namespace {

// Shortest word leading from the start to each state (BFS, letters in order).
std::vector<Word> access_words(const Dfa& d) {
  std::vector<std::optional<Word>> acc(d.num_states);
  acc[d.start] = Word{};
  std::deque<StateId> queue{d.start};
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < d.alphabet.size(); ++a) {
      StateId t = d.next(q, a);
      if (!acc[t]) {
        acc[t] = acc[q]->concat(Word{a});
        queue.push_back(t);
      }
    }
  }
  std::vector<Word> out;
  for (auto& w : acc) out.push_back(w ? *w : Word{});
  return out;
}

// Shortest z with exactly one of p·z, r·z accepting.
Word distinguishing_suffix(const Dfa& d, StateId p, StateId r) {
  std::map<std::pair<StateId, StateId>, std::pair<std::pair<StateId, StateId>, Symbol>>
      parent;
  std::deque<std::pair<StateId, StateId>> queue{{p, r}};
  parent[{p, r}] = {{p, r}, 0};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (d.accepting[cur.first] != d.accepting[cur.second]) {
      std::vector<Symbol> rev;
      for (auto at = cur; at != std::make_pair(p, r);) {
        auto [prev, sym] = parent.at(at);
        rev.push_back(sym);
        at = prev;
      }
      return Word(std::vector<Symbol>(rev.rbegin(), rev.rend()));
    }
    for (Symbol a = 0; a < d.alphabet.size(); ++a) {
      std::pair<StateId, StateId> nxt{d.next(cur.first, a), d.next(cur.second, a)};
      if (parent.emplace(nxt, std::make_pair(cur, a)).second) queue.push_back(nxt);
    }
  }
  throw Error("states of a minimal DFA are not distinguishable");
}

}  // namespace

Verdict is_commutative_regular(const Machine& m) {
  if (m.kind() != MachineKind::FiniteMachine)
    throw DomainError("is_commutative_regular needs a finite machine");
  const Dfa d = minimize_dfa(determinize_dfa(m));
  const std::size_t k = d.alphabet.size();
  for (StateId q = 0; q < d.num_states; ++q)
    for (Symbol a = 0; a < k; ++a)
      for (Symbol b = a + 1; b < k; ++b) {
        StateId ab = d.next(d.next(q, a), b);
        StateId ba = d.next(d.next(q, b), a);
        if (ab == ba) continue;
        Word u = access_words(d)[q];
        Word z = distinguishing_suffix(d, ab, ba);
        Word w1 = u.concat(Word{a, b}).concat(z);
        Word w2 = u.concat(Word{b, a}).concat(z);
        if (!d.accepts(w1)) std::swap(w1, w2);
        Verdict v;
        v.answer = Answer::No;
        v.transposition = TranspositionWitness{q, a, b};
        v.witness = std::move(w1);
        v.companion = std::move(w2);
        return v;
      }
  Verdict v;
  v.answer = Answer::Yes;
  return v;
}

Verdict is_perm_closed_bounded(const FiniteLanguage& slice, std::size_t n) {
  const Alphabet& a = slice.alphabet();
  std::unordered_set<ParikhVector, ParikhHash> checked;
  for (const Word& w : slice) {
    if (w.size() > n) break;
    ParikhVector v = parikh(w, a);
    if (!checked.insert(v).second) continue;
    for (const Word& p : perm_word(a, w)) {
      if (!slice.contains(p)) {
        Verdict out;
        out.answer = Answer::No;
        out.witness = w;
        out.companion = p;
        out.bound = n;
        return out;
      }
    }
  }
  Verdict out;
  out.answer = Answer::BoundedYes;
  out.bound = n;
  return out;
}

namespace {

using StateSet = std::vector<StateId>;  // sorted

StateSet closure(const Machine& m, StateSet set) {
  std::vector<bool> in(m.num_states(), false);
  for (StateId q : set) in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t ri : m.outgoing()[set[i]]) {
      const Rule& r = m.rules()[ri];
      if (r.label.empty() && !in[r.to]) {
        in[r.to] = true;
        set.push_back(r.to);
      }
    }
  std::sort(set.begin(), set.end());
  return set;
}

StateSet step(const Machine& m, const StateSet& set, Symbol a) {
  StateSet next;
  for (StateId q : set)
    for (std::size_t ri : m.outgoing()[q]) {
      const Rule& r = m.rules()[ri];
      if (r.label.size() == 1 && r.label[0] == a) next.push_back(r.to);
    }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return closure(m, std::move(next));
}

bool accepting(const Machine& m, const StateSet& set) {
  return std::any_of(set.begin(), set.end(), [&](StateId q) { return m.is_final(q); });
}

// Shortest z, |z| <= budget, on which exactly one of the two sets accepts.
std::optional<Word> separating_suffix(const Machine& m, const StateSet& s1,
                                      const StateSet& s2, std::size_t budget) {
  std::map<std::pair<StateSet, StateSet>, Word> seen;
  std::deque<std::pair<StateSet, StateSet>> queue{{s1, s2}};
  seen[{s1, s2}] = Word{};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const Word z = seen.at(cur);
    if (accepting(m, cur.first) != accepting(m, cur.second)) return z;
    if (z.size() == budget) continue;
    for (Symbol a = 0; a < m.alphabet().size(); ++a) {
      std::pair<StateSet, StateSet> nxt{step(m, cur.first, a), step(m, cur.second, a)};
      if (seen.emplace(nxt, z.concat(Word{a})).second) queue.push_back(std::move(nxt));
    }
  }
  return std::nullopt;
}

// The slice L_FA(m) ∩ Σ^{<=n} is perm-closed iff every adjacent
// transposition u·ab·z <-> u·ba·z within length n preserves membership.
// Words u are grouped by the subset they reach, per length.
Verdict fa_slice_perm_closed(const Machine& m, std::size_t n) {
  const std::size_t k = m.alphabet().size();
  std::map<StateSet, Word> layer{{closure(m, {m.start()}), Word{}}};
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    std::vector<std::pair<Word, StateSet>> ordered;
    for (auto& [set, u] : layer) ordered.emplace_back(u, set);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [u, set] : ordered)
      for (Symbol a = 0; a < k; ++a)
        for (Symbol b = a + 1; b < k; ++b) {
          StateSet ab = step(m, step(m, set, a), b);
          StateSet ba = step(m, step(m, set, b), a);
          if (ab == ba) continue;
          auto z = separating_suffix(m, ab, ba, n - i - 2);
          if (!z) continue;
          Word w1 = u.concat(Word{a, b}).concat(*z);
          Word w2 = u.concat(Word{b, a}).concat(*z);
          if (!fa_accepts(m, w1)) std::swap(w1, w2);
          Verdict out;
          out.answer = Answer::No;
          out.witness = std::move(w1);
          out.companion = std::move(w2);
          out.bound = n;
          return out;
        }
    std::map<StateSet, Word> next;
    for (const auto& [u, set] : ordered)
      for (Symbol a = 0; a < k; ++a) next.emplace(step(m, set, a), u.concat(Word{a}));
    layer = std::move(next);
  }
  Verdict out;
  out.answer = Answer::BoundedYes;
  out.bound = n;
  return out;
}

}  // namespace

Verdict is_perm_closed_bounded(const Machine& m, Semantics sem, std::size_t n) {
  if (sem == Semantics::FA && m.kind() == MachineKind::FiniteMachine)
    return fa_slice_perm_closed(m, n);
  return is_perm_closed_bounded(language_upto(m, sem, n), n);
}

Verdict is_perm_closed_bounded(const Expr& e, std::size_t n) {
  return is_perm_closed_bounded(eval_upto(e, n), n);
}

Verdict jfa_membership_of_regular(const Machine& m) {
  return is_commutative_regular(m);
}

Verdict jfa_disjointness_bounded(const Machine& m1, const Machine& m2,
                                 std::size_t n) {
  if (!(m1.alphabet() == m2.alphabet()))
    throw MismatchError("jfa_disjointness_bounded: alphabet mismatch");
  const std::size_t k = m1.alphabet().size();
  for (std::size_t len = 0; len <= n; ++len) {
    std::optional<Word> best;
    ParikhVector v(k);
    // All vectors with coordinate sum exactly len.
    auto visit = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i + 1 >= k) {
        if (k == 0) {
          if (left != 0) return;
        } else {
          v[i] = static_cast<std::uint32_t>(left);
        }
        Word w = canonical_word(v);
        if ((!best || w < *best) && jfa_accepts(m1, w) && jfa_accepts(m2, w))
          best = w;
        return;
      }
      for (std::size_t c = 0; c <= left; ++c) {
        v[i] = static_cast<std::uint32_t>(c);
        self(self, i + 1, left - c);
      }
    };
    visit(visit, 0, len);
    if (best) {
      Verdict out;
      out.answer = Answer::No;
      out.witness = best;
      out.bound = n;
      return out;
    }
  }
  Verdict out;
  out.answer = Answer::BoundedYes;
  out.bound = n;
  return out;
}

}  // namespace jfa
