#pragma once

// Subalgebras and ideals of finite BCK algebras.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace bckalg {

/// A subset of a host carrier of at most 64 elements, as a bitmask.
class Subset {
 public:
  static constexpr std::size_t max_order = 64;

  Subset() = default;
  explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }
  static Subset of(const std::vector<Element>& members) {
    Subset s;
    for (Element e : members) s.insert(e);
    return s;
  }
  static Subset full(std::size_t n) { return Subset(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

  bool contains(Element e) const noexcept { return e < max_order && ((bits_ >> e) & 1U); }
  void insert(Element e) {
    if (e >= max_order) throw PreconditionError("subset element beyond 64");
    bits_ |= std::uint64_t{1} << e;
  }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }

  std::vector<Element> members() const {
    std::vector<Element> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<Element>(std::countr_zero(b)));
    return out;
  }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Size first, then lexicographic on sorted member indices.
inline bool canonical_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

inline std::string format_subset(const FiniteAlgebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.members()) {
    if (!first) out += ",";
    out += a.name(e);
    first = false;
  }
  return out + "}";
}

namespace detail {

inline void require_small(const FiniteAlgebra& a, std::size_t limit, const char* op) {
  if (a.order() > limit)
    throw PreconditionError(std::string(op) + ": order " + std::to_string(a.order()) + " exceeds " +
                            std::to_string(limit));
}

inline void require_within(const FiniteAlgebra& a, const Subset& s) {
  if (a.order() < Subset::max_order && (s.bits() >> a.order()) != 0)
    throw PreconditionError("subset is not contained in the carrier");
}

// Smallest *-closed superset of s.
inline Subset closure(const FiniteAlgebra& a, Subset s) {
  std::vector<Element> m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element v : {a.op(m[i], m[j]), a.op(m[j], m[i])})
        if (!s.contains(v)) {
          s.insert(v);
          m.push_back(v);
        }
  return s;
}

inline bool is_proper(const FiniteAlgebra& a, const Subset& s) {
  return s.size() < a.order() && !(s.size() == 1 && s.contains(a.zero()));
}

}  // namespace detail

/// Closed under *. The empty set is never a subalgebra.
inline bool is_subalgebra(const FiniteAlgebra& a, const Subset& s) {
  detail::require_small(a, Subset::max_order, "is_subalgebra");
  detail::require_within(a, s);
  if (s.empty()) return false;
  const auto m = s.members();
  for (Element x : m)
    for (Element y : m)
      if (!s.contains(a.op(x, y))) return false;
  return true;
}

/// Contains 0, and x*y in I with y in I forces x in I.
inline bool is_ideal(const FiniteAlgebra& a, const Subset& s) {
  detail::require_small(a, Subset::max_order, "is_ideal");
  detail::require_within(a, s);
  if (!s.contains(a.zero())) return false;
  const auto n = a.order();
  for (Element x = 0; x < n; ++x) {
    if (s.contains(x)) continue;
    for (Element y : s.members())
      if (s.contains(a.op(x, y))) return false;
  }
  return true;
}

/// All subalgebras, grown from single-element closures by adding one
/// generator at a time. `proper_only` drops the carrier and {0}.
inline std::vector<Subset> subalgebras(const FiniteAlgebra& a, bool proper_only = false) {
  detail::require_small(a, Subset::max_order, "subalgebras");
  const auto n = a.order();
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> found, frontier;
  auto visit = [&](Subset s) {
    if (seen.insert(s.bits()).second) {
      found.push_back(s);
      frontier.push_back(s);
    }
  };
  for (Element e = 0; e < n; ++e) visit(detail::closure(a, Subset{e}));
  while (!frontier.empty()) {
    Subset s = frontier.back();
    frontier.pop_back();
    for (Element e = 0; e < n; ++e)
      if (!s.contains(e)) {
        Subset t = s;
        t.insert(e);
        visit(detail::closure(a, t));
      }
  }
  if (proper_only) std::erase_if(found, [&](const Subset& s) { return !detail::is_proper(a, s); });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

/// All ideals by scanning subsets that contain 0, keeping only those that
/// are downward closed in the derived order before the full ideal test.
inline std::vector<Subset> ideals(const FiniteAlgebra& a, bool proper_only = false) {
  constexpr std::size_t scan_limit = 24;
  detail::require_small(a, scan_limit, "ideals");
  const auto n = a.order();
  const Element zero = a.zero();
  // below[x]: elements y with y*x = 0
  std::vector<std::uint64_t> below(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.op(y, x) == zero) below[x] |= std::uint64_t{1} << y;

  std::vector<Subset> found;
  const std::uint64_t zero_bit = std::uint64_t{1} << zero;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (!(bits & zero_bit)) continue;
    bool down_closed = true;
    for (std::uint64_t b = bits; b && down_closed; b &= b - 1)
      down_closed = (below[static_cast<Element>(std::countr_zero(b))] & ~bits) == 0;
    if (!down_closed) continue;
    Subset s(bits);
    if (is_ideal(a, s)) found.push_back(s);
  }
  if (proper_only) std::erase_if(found, [&](const Subset& s) { return !detail::is_proper(a, s); });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

/// The sub-table on `s` as a standalone BCK algebra. `s` must be a
/// subalgebra containing the zero.
inline FiniteAlgebra restrict_to(const FiniteAlgebra& a, const Subset& s) {
  if (!is_subalgebra(a, s) || !s.contains(a.zero()))
    throw PreconditionError("restrict_to requires a subalgebra containing zero");
  const auto m = s.members();
  std::vector<Element> pos(a.order(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.size(); ++i) {
    pos[m[i]] = i;
    names.push_back(a.name(m[i]));
  }
  auto t = CayleyTable::generate(m.size(), [&](Element x, Element y) { return pos[a.op(m[x], m[y])]; });
  return new_algebra(Kind::BCK, std::move(names), std::move(t), {pos[a.zero()], std::nullopt});
}

}  // namespace bckalg
