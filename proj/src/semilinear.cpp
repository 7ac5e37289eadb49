#include "jfa/semilinear.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "jfa/error.hpp"
#include "jfa/machine.hpp"
#include "jfa/parallel.hpp"
#include "text.hpp"

namespace jfa {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw MismatchError(std::string(op) + ": dimension " + std::to_string(a) +
                        " vs " + std::to_string(b));
}

void canonicalize(std::vector<LinearSet>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

}  // namespace

LinearSet::LinearSet(ParikhVector b, std::vector<ParikhVector> ps)
    : base(std::move(b)), periods(std::move(ps)) {
  for (const auto& p : periods) require_dim(p.dim(), base.dim(), "LinearSet");
  std::erase_if(periods, [](const ParikhVector& p) { return p.is_zero(); });
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
}

bool LinearSet::contains(const ParikhVector& x) const {
  require_dim(x.dim(), dim(), "sl_member");
  auto start = x.minus(base);
  if (!start) return false;
  if (start->is_zero()) return true;
  if (periods.empty()) return false;
  std::unordered_set<ParikhVector, ParikhHash> seen{*start};
  std::vector<ParikhVector> stack{*start};
  while (!stack.empty()) {
    ParikhVector r = std::move(stack.back());
    stack.pop_back();
    for (const ParikhVector& p : periods) {
      auto next = r.minus(p);
      if (!next) continue;
      if (next->is_zero()) return true;
      if (seen.insert(*next).second) stack.push_back(std::move(*next));
    }
  }
  return false;
}

SemilinearSet::SemilinearSet(std::size_t dim, std::vector<LinearSet> components)
    : dim_(dim), components_(std::move(components)) {
  for (const auto& c : components_) require_dim(c.dim(), dim_, "SemilinearSet");
  canonicalize(components_);
}

SemilinearSet SemilinearSet::zero(std::size_t dim) {
  return SemilinearSet(dim, {LinearSet(ParikhVector(dim), {})});
}

SemilinearSet SemilinearSet::singleton(const ParikhVector& v) {
  return SemilinearSet(v.dim(), {LinearSet(v, {})});
}

bool sl_member(const SemilinearSet& s, const ParikhVector& x) {
  require_dim(x.dim(), s.dim(), "sl_member");
  return std::any_of(s.components().begin(), s.components().end(),
                     [&](const LinearSet& c) { return c.contains(x); });
}

SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b) {
  require_dim(a.dim(), b.dim(), "sl_union");
  std::vector<LinearSet> cs = a.components();
  cs.insert(cs.end(), b.components().begin(), b.components().end());
  return SemilinearSet(a.dim(), std::move(cs));
}

SemilinearSet sl_sum(const SemilinearSet& a, const SemilinearSet& b,
                     std::size_t cap) {
  require_dim(a.dim(), b.dim(), "sl_sum");
  if (a.components().size() * b.components().size() > cap)
    throw ResourceError("components", "sl_sum would exceed the component cap (" +
                                          std::to_string(cap) + ")");
  std::vector<LinearSet> cs;
  for (const LinearSet& x : a.components())
    for (const LinearSet& y : b.components()) {
      std::vector<ParikhVector> ps = x.periods;
      ps.insert(ps.end(), y.periods.begin(), y.periods.end());
      cs.emplace_back(x.base + y.base, std::move(ps));
    }
  return SemilinearSet(a.dim(), std::move(cs));
}

SemilinearSet sl_star(const SemilinearSet& s, std::size_t cap) {
  SemilinearSet acc = SemilinearSet::zero(s.dim());
  for (const LinearSet& c : s.components()) {
    // (c; P)^* = {0} ∪ (c; P ∪ {c}), which is just (0; P) when c = 0.
    std::vector<LinearSet> parts;
    if (c.base.is_zero()) {
      parts.push_back(c);
    } else {
      std::vector<ParikhVector> ps = c.periods;
      ps.push_back(c.base);
      parts.emplace_back(ParikhVector(s.dim()), std::vector<ParikhVector>{});
      parts.emplace_back(c.base, std::move(ps));
    }
    acc = sl_sum(acc, SemilinearSet(s.dim(), std::move(parts)), cap);
  }
  return acc;
}

namespace {

// Sufficient test for L(x) ⊆ L(y).
bool covers(const LinearSet& y, const LinearSet& x) {
  if (!y.contains(x.base)) return false;
  const LinearSet monoid(ParikhVector(y.dim()), y.periods);
  return std::all_of(x.periods.begin(), x.periods.end(),
                     [&](const ParikhVector& p) { return monoid.contains(p); });
}

// L(b; P∖{p}) ∪ L(b+p; P) = L(b; P).
std::optional<LinearSet> merge(const LinearSet& x, const LinearSet& y) {
  for (const ParikhVector& p : y.periods) {
    if (x.base + p != y.base) continue;
    std::vector<ParikhVector> rest;
    for (const ParikhVector& q : y.periods)
      if (q != p) rest.push_back(q);
    if (rest == x.periods) return LinearSet(x.base, y.periods);
  }
  return std::nullopt;
}

}  // namespace

SemilinearSet sl_simplify(const SemilinearSet& s, std::size_t limit) {
  std::vector<LinearSet> cs = s.components();
  if (cs.size() > limit) return s;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cs.size() && !changed; ++i)
      for (std::size_t j = 0; j < cs.size() && !changed; ++j) {
        if (i == j) continue;
        if (auto m = merge(cs[i], cs[j])) {
          cs[i] = std::move(*m);
          cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        } else if (covers(cs[j], cs[i])) {
          cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
  }
  return SemilinearSet(s.dim(), std::move(cs));
}

SemilinearSet alpha_shuf_to_semilinear(const Expr& e, std::size_t cap) {
  if (!is_shuf_expr(e))
    throw DomainError(std::string("expected a SHUF or alpha-SHUF expression, "
                                  "got ") +
                      to_string(classify(e)) + "; convert it first");
  const std::size_t dim = e.alphabet().size();
  struct Rec {
    std::size_t dim;
    std::size_t cap;
    const Alphabet& a;
    SemilinearSet go(const ExprNode& n) const {
      switch (n.kind) {
        case ExprKind::EmptySet: return SemilinearSet::empty(dim);
        case ExprKind::Epsilon: return SemilinearSet::zero(dim);
        case ExprKind::Atom: return SemilinearSet::singleton(parikh(n.atom, a));
        case ExprKind::Union: return sl_simplify(sl_union(go(*n.left), go(*n.right)));
        case ExprKind::Shuffle: return sl_simplify(sl_sum(go(*n.left), go(*n.right), cap));
        case ExprKind::IterShuffle: {
          // Star one component at a time so the partial result stays small.
          const SemilinearSet body = go(*n.left);
          SemilinearSet acc = SemilinearSet::zero(dim);
          for (const LinearSet& c : body.components())
            acc = sl_simplify(sl_sum(acc, sl_star(SemilinearSet(dim, std::vector<LinearSet>{c}), cap), cap));
          return acc;
        }
        case ExprKind::Concat:
        case ExprKind::Star: break;
      }
      throw DomainError("regular operator in SHUF expression");
    }
  };
  return Rec{dim, cap, e.alphabet()}.go(e.node());
}

Expr semilinear_to_normalform(const SemilinearSet& s, const Alphabet& alphabet) {
  require_dim(s.dim(), alphabet.size(), "semilinear_to_normalform");
  std::optional<Expr> result;
  for (const LinearSet& c : s.components()) {
    std::optional<Expr> term;
    if (!c.base.is_zero() || c.periods.empty())
      term = Expr::letterized(alphabet, canonical_word(c.base));
    if (!c.periods.empty()) {
      std::optional<Expr> gen;
      for (const ParikhVector& p : c.periods) {
        Expr g = Expr::letterized(alphabet, canonical_word(p));
        gen = gen ? *gen + g : g;
      }
      Expr star = gen->iter_shuffle();
      term = term ? term->shuffle(star) : star;
    }
    result = result ? *result + *term : *term;
  }
  return result ? *result : Expr::empty_set(alphabet);
}

SemilinearSet nfa_to_semilinear(const Machine& m, std::size_t cap) {
  if (m.kind() != MachineKind::FiniteMachine)
    throw DomainError("nfa_to_semilinear needs a finite machine");
  return alpha_shuf_to_semilinear(regex_to_alpha_shuf(state_elimination(m)), cap);
}

std::optional<std::vector<PeriodicLinear>> is_periodic_form(
    const SemilinearSet& s) {
  std::vector<PeriodicLinear> out;
  for (const LinearSet& c : s.components()) {
    PeriodicLinear pl{c.base, {}};
    for (const ParikhVector& p : c.periods) {
      std::optional<Symbol> axis;
      for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] == 0) continue;
        if (axis) return std::nullopt;
        axis = static_cast<Symbol>(i);
      }
      if (!pl.unit_periods.emplace(*axis, p[*axis]).second) return std::nullopt;
    }
    out.push_back(std::move(pl));
  }
  return out;
}

// ------------------------------------------------------------- box oracles

namespace {

std::uint64_t box_volume(const std::vector<std::uint32_t>& box) {
  std::uint64_t v = 1;
  for (std::uint32_t b : box) {
    v *= b + 1ull;
    if (v > (std::uint64_t{1} << 26))
      throw ResourceError("box", "box scan exceeds 2^26 vectors");
  }
  return v;
}

ParikhVector box_vector(std::uint64_t idx, const std::vector<std::uint32_t>& box) {
  ParikhVector v(box.size());
  for (std::size_t i = box.size(); i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(idx % (box[i] + 1ull));
    idx /= box[i] + 1ull;
  }
  return v;
}

void check_box(const SemilinearSet& a, const SemilinearSet& b,
               const std::vector<std::uint32_t>& box) {
  require_dim(a.dim(), b.dim(), "sl_bounded_equal");
  require_dim(box.size(), a.dim(), "sl_bounded_equal box");
}

}  // namespace

std::optional<ParikhVector> sl_bounded_difference(
    const SemilinearSet& a, const SemilinearSet& b,
    const std::vector<std::uint32_t>& box) {
  check_box(a, b, box);
  const std::uint64_t n = box_volume(box);
  std::vector<char> differs(n, 0);
  parallel::for_each_index(static_cast<std::int64_t>(n), [&](std::int64_t i) {
    ParikhVector v = box_vector(static_cast<std::uint64_t>(i), box);
    differs[i] = sl_member(a, v) != sl_member(b, v);
  });
  auto it = std::find(differs.begin(), differs.end(), 1);
  if (it == differs.end()) return std::nullopt;
  return box_vector(static_cast<std::uint64_t>(it - differs.begin()), box);
}

bool sl_bounded_equal(const SemilinearSet& a, const SemilinearSet& b,
                      const std::vector<std::uint32_t>& box) {
  return !sl_bounded_difference(a, b, box).has_value();
}

bool sl_bounded_equal_serial(const SemilinearSet& a, const SemilinearSet& b,
                             const std::vector<std::uint32_t>& box) {
  check_box(a, b, box);
  const std::uint64_t n = box_volume(box);
  for (std::uint64_t i = 0; i < n; ++i) {
    ParikhVector v = box_vector(i, box);
    if (sl_member(a, v) != sl_member(b, v)) return false;
  }
  return true;
}

// ------------------------------------------------------------- text format

namespace {

ParikhVector parse_vector(std::string_view text, std::size_t dim,
                          std::size_t line) {
  ParikhVector v;
  for (std::string_view f : detail::split_ws(text)) {
    std::uint32_t x = 0;
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), x);
    if (ec != std::errc() || p != f.data() + f.size())
      throw ParseError("expected a non-negative integer, got '" +
                           std::string(f) + "'",
                       line, 1);
    v.counts.push_back(x);
  }
  if (v.dim() != dim)
    throw ParseError("vector has " + std::to_string(v.dim()) +
                         " entries, alphabet has " + std::to_string(dim),
                     line, 1);
  return v;
}

std::string format_vector(const ParikhVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

SemilinearFile parse_semilinear(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<LinearSet> cs;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++lineno;
    std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    std::string_view key, value;
    if (!detail::split_key(line, key, value))
      throw ParseError("expected 'key: value'", lineno, 1);
    if (key == "alphabet") {
      if (alphabet) throw ParseError("duplicate alphabet line", lineno, 1);
      auto toks = detail::split_ws(value);
      try {
        alphabet = Alphabet(std::vector<std::string>(toks.begin(), toks.end()));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      continue;
    }
    if (key != "base")
      throw ParseError("unknown key '" + std::string(key) + "'", lineno, 1);
    if (!alphabet) throw ParseError("base line before alphabet line", lineno, 1);
    const std::size_t dim = alphabet->size();
    auto semi = value.find(';');
    ParikhVector base = parse_vector(value.substr(0, semi), dim, lineno);
    std::vector<ParikhVector> periods;
    if (semi != std::string_view::npos) {
      std::string_view pk, pv;
      if (!detail::split_key(detail::trim(value.substr(semi + 1)), pk, pv) ||
          pk != "periods")
        throw ParseError("expected 'periods:' after ';'", lineno, 1);
      std::string_view rest = detail::trim(pv);
      while (!rest.empty()) {
        if (rest.front() != '(')
          throw ParseError("expected '(' in period list", lineno, 1);
        auto close = rest.find(')');
        if (close == std::string_view::npos)
          throw ParseError("unterminated period vector", lineno, 1);
        periods.push_back(parse_vector(rest.substr(1, close - 1), dim, lineno));
        rest = detail::trim(rest.substr(close + 1));
      }
    }
    cs.emplace_back(std::move(base), std::move(periods));
  }
  if (!alphabet) throw ParseError("missing alphabet line", 0, 0);
  std::size_t dim = alphabet->size();
  return SemilinearFile{*alphabet, SemilinearSet(dim, std::move(cs))};
}

std::string print_semilinear(const SemilinearSet& s, const Alphabet& alphabet) {
  require_dim(s.dim(), alphabet.size(), "print_semilinear");
  std::string out = "alphabet:";
  for (const auto& t : alphabet.tokens()) out += " " + t;
  out += "\n";
  for (const LinearSet& c : s.components()) {
    out += "base: " + format_vector(c.base) + " ; periods:";
    for (const ParikhVector& p : c.periods) out += " (" + format_vector(p) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace jfa
