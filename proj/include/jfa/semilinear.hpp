#pragma once

// Linear and semilinear subsets of N^k, the Parikh side of perm-closed
// languages.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jfa/core.hpp"
#include "jfa/expr.hpp"

namespace jfa {

class Machine;

inline constexpr std::size_t kDefaultComponentCap = std::size_t{1} << 16;

// { base + k1 p1 + ... + km pm : ki in N }. Periods are kept sorted, distinct
// and non-zero.
struct LinearSet {
  ParikhVector base;
  std::vector<ParikhVector> periods;

  LinearSet() = default;
  LinearSet(ParikhVector base, std::vector<ParikhVector> periods);

  std::size_t dim() const noexcept { return base.dim(); }
  bool contains(const ParikhVector& x) const;

  bool operator==(const LinearSet&) const = default;
  auto operator<=>(const LinearSet&) const = default;
};

// Finite union of linear sets of one dimension; components sorted and
// deduplicated (syntactically).
class SemilinearSet {
 public:
  explicit SemilinearSet(std::size_t dim) : dim_(dim) {}
  SemilinearSet(std::size_t dim, std::vector<LinearSet> components);

  static SemilinearSet empty(std::size_t dim) { return SemilinearSet(dim); }
  static SemilinearSet zero(std::size_t dim);  // { 0 }
  static SemilinearSet singleton(const ParikhVector& v);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LinearSet>& components() const noexcept {
    return components_;
  }
  bool is_empty() const noexcept { return components_.empty(); }

  bool operator==(const SemilinearSet&) const = default;

 private:
  std::size_t dim_;
  std::vector<LinearSet> components_;
};

bool sl_member(const SemilinearSet& s, const ParikhVector& x);
SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet sl_sum(const SemilinearSet& a, const SemilinearSet& b,
                     std::size_t cap = kDefaultComponentCap);
// Throws ResourceError when the expansion would exceed `cap` components.
SemilinearSet sl_star(const SemilinearSet& s,
                      std::size_t cap = kDefaultComponentCap);

// Parikh image of a SHUF / α-SHUF expression (DomainError otherwise).
// Same set, fewer components: drops components covered by another and merges
// L(b; P∖{p}) with L(b+p; P). Sets above `limit` components are returned as is.
SemilinearSet sl_simplify(const SemilinearSet& s, std::size_t limit = 256);

SemilinearSet alpha_shuf_to_semilinear(const Expr& e,
                                       std::size_t cap = kDefaultComponentCap);
// Star-height-one α-SHUF expression: one F ⧢ G^{⧢,*} term per component.
Expr semilinear_to_normalform(const SemilinearSet& s, const Alphabet& alphabet);
// Parikh image of L_JFA(m) via state elimination.
SemilinearSet nfa_to_semilinear(const Machine& m,
                                std::size_t cap = kDefaultComponentCap);

// A linear set whose periods are n(a) * e_a for distinct symbols a.
struct PeriodicLinear {
  ParikhVector base;
  std::map<Symbol, std::uint32_t> unit_periods;

  bool operator==(const PeriodicLinear&) const = default;
};

// Syntactic check: every period of every component lies on one axis, and no
// axis carries two periods within a component. nullopt when not in that form.
std::optional<std::vector<PeriodicLinear>> is_periodic_form(
    const SemilinearSet& s);

// Membership agreement on the box [0, box[0]] x ... x [0, box[k-1]].
// Bounded oracle only. The default scans the box in parallel.
bool sl_bounded_equal(const SemilinearSet& a, const SemilinearSet& b,
                      const std::vector<std::uint32_t>& box);
bool sl_bounded_equal_serial(const SemilinearSet& a, const SemilinearSet& b,
                             const std::vector<std::uint32_t>& box);
// First vector of the box (in scan order) where membership differs.
std::optional<ParikhVector> sl_bounded_difference(
    const SemilinearSet& a, const SemilinearSet& b,
    const std::vector<std::uint32_t>& box);

// Text format:
//   alphabet: a b c
//   base: 1 0 2 ; periods: (1 1 0) (0 0 3)
struct SemilinearFile {
  Alphabet alphabet;
  SemilinearSet set;
};
SemilinearFile parse_semilinear(std::string_view text);
std::string print_semilinear(const SemilinearSet& s, const Alphabet& alphabet);

}  // namespace jfa
