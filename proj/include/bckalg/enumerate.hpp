#pragma once

// Enumeration of finite Wajsberg algebras as products of Lukasiewicz
// chains, one per unordered factorization of the order, plus isomorphism
// search for algebras and for their derived posets.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "core.hpp"
#include "transforms.hpp"

namespace bckalg {

/// A multiset of factors >= 2 with product n, stored non-decreasing.
struct Factorization {
  std::size_t n = 1;
  std::vector<std::size_t> factors;

  /// "2x2x3"
  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += 'x';
      s += std::to_string(factors[i]);
    }
    return s;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline void collect_factorizations(std::size_t rest, std::size_t min_factor, std::vector<std::size_t>& prefix,
                                   std::size_t n, std::vector<Factorization>& out) {
  if (rest == 1) {
    out.push_back({n, prefix});
    return;
  }
  for (std::size_t f = min_factor; f <= rest; ++f) {
    if (rest % f) continue;
    // a factor below sqrt(rest) leaves room for more; otherwise only rest itself fits
    if (f != rest && f * f > rest) continue;
    prefix.push_back(f);
    collect_factorizations(rest / f, f, prefix, n, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All unordered factorizations of n, including the single factor {n}.
/// Ordered by number of factors, then lexicographically. Empty for n = 1.
inline std::vector<Factorization> factorizations(std::size_t n) {
  if (n < 1) throw PreconditionError("factorizations requires n >= 1");
  std::vector<Factorization> out;
  if (n == 1) return out;
  std::vector<std::size_t> prefix;
  detail::collect_factorizations(n, 2, prefix, n, out);
  std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  });
  return out;
}

inline std::size_t pi(std::size_t n) { return factorizations(n).size(); }

/// The n-element Lukasiewicz chain e_0 < ... < e_{n-1}:
/// e_i o e_j = e_min(n-1, n-1-i+j), complement e_i -> e_{n-1-i}.
inline FiniteAlgebra lukasiewicz_chain(std::size_t n, std::vector<std::string> names = {}) {
  if (n < 2) throw PreconditionError("lukasiewicz_chain requires n >= 2");
  if (names.empty()) names = default_names(n);
  const Element top = n - 1;
  auto imp = CayleyTable::generate(n, [&](Element i, Element j) { return std::min(top, top - i + j); });
  std::vector<Element> bar(n);
  for (Element i = 0; i < n; ++i) bar[i] = top - i;
  return new_algebra(Kind::Wajsberg, std::move(names), std::move(imp), {Element{0}, top}, std::move(bar));
}

/// Componentwise product of Wajsberg algebras. Elements are tuples in
/// lexicographic order (first component most significant), named
/// "(a,b,...)" from the component names.
inline FiniteAlgebra direct_product(const std::vector<FiniteAlgebra>& parts) {
  if (parts.empty()) throw PreconditionError("direct_product requires at least one factor");
  for (const auto& p : parts) {
    require_kind(p, Kind::Wajsberg, "direct_product");
    detail::require_passes(check_wajsberg(p), p, "direct_product");
  }
  if (parts.size() == 1) return parts.front();

  std::size_t n = 1;
  for (const auto& p : parts) n *= p.order();
  auto decode = [&](Element e) {
    std::vector<Element> t(parts.size());
    for (std::size_t k = parts.size(); k-- > 0;) {
      t[k] = e % parts[k].order();
      e /= parts[k].order();
    }
    return t;
  };
  auto encode = [&](const std::vector<Element>& t) {
    Element e = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) e = e * parts[k].order() + t[k];
    return e;
  };
  std::vector<std::vector<Element>> tuples(n);
  for (Element e = 0; e < n; ++e) tuples[e] = decode(e);

  auto imp = CayleyTable::generate(n, [&](Element x, Element y) {
    std::vector<Element> t(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) t[k] = parts[k].op(tuples[x][k], tuples[y][k]);
    return encode(t);
  });
  std::vector<Element> bar(n), one_t(parts.size());
  for (Element e = 0; e < n; ++e) {
    std::vector<Element> t(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) t[k] = (*parts[k].complement())[tuples[e][k]];
    bar[e] = encode(t);
  }
  for (std::size_t k = 0; k < parts.size(); ++k) one_t[k] = *parts[k].unit();
  std::vector<std::string> names(n);
  for (Element e = 0; e < n; ++e) {
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ',';
      s += parts[k].name(tuples[e][k]);
    }
    names[e] = s + ")";
  }
  return new_algebra(Kind::Wajsberg, std::move(names), std::move(imp), {std::nullopt, encode(one_t)}, std::move(bar));
}

struct EnumeratedAlgebra {
  Factorization factorization;
  FiniteAlgebra algebra;
};

/// One Wajsberg algebra per factorization of n: the product of chains
/// whose sizes are the factors.
inline std::vector<EnumeratedAlgebra> enumerate_wajsberg(std::size_t n) {
  if (n < 2) throw PreconditionError("enumerate_wajsberg requires n >= 2");
  std::vector<EnumeratedAlgebra> out;
  for (auto& f : factorizations(n)) {
    std::vector<FiniteAlgebra> chains;
    for (std::size_t r : f.factors) chains.push_back(lukasiewicz_chain(r));
    out.push_back({f, direct_product(chains)});
  }
  return out;
}

namespace detail {

// Isomorphism-invariant fingerprint of an element under a binary operation.
struct ElementProfile {
  bool idempotent = false;
  std::size_t row_zero = 0;  // #y with x*y = 0
  std::size_t col_zero = 0;  // #y with y*x = 0
  std::size_t row_self = 0;  // #y with x*y = x
  std::size_t col_self = 0;  // #y with y*x = x
  std::vector<std::size_t> row_multiplicities;
  std::vector<std::size_t> col_multiplicities;

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
};

inline std::vector<ElementProfile> profiles(const FiniteAlgebra& a) {
  const auto n = a.order();
  std::vector<ElementProfile> out(n);
  for (Element x = 0; x < n; ++x) {
    auto& p = out[x];
    p.idempotent = a.op(x, x) == x;
    std::vector<std::size_t> rm(n, 0), cm(n, 0);
    for (Element y = 0; y < n; ++y) {
      p.row_zero += a.op(x, y) == a.zero();
      p.col_zero += a.op(y, x) == a.zero();
      p.row_self += a.op(x, y) == x;
      p.col_self += a.op(y, x) == x;
      ++rm[a.op(x, y)];
      ++cm[a.op(y, x)];
    }
    std::sort(rm.begin(), rm.end());
    std::sort(cm.begin(), cm.end());
    p.row_multiplicities = std::move(rm);
    p.col_multiplicities = std::move(cm);
  }
  return out;
}

// Backtracking over bijections f: a -> b in source index order. `compatible`
// pre-filters candidate images; `consistent(f, assigned, x)` checks the
// newly placed element x against everything already placed.
template <class Compatible, class Consistent>
std::optional<std::vector<Element>> search_bijection(std::size_t n, const std::vector<std::optional<Element>>& fixed,
                                                     Compatible&& compatible, Consistent&& consistent) {
  std::vector<Element> f(n, 0);
  std::vector<bool> assigned(n, false), used(n, false);
  std::vector<Element> order;
  for (Element x = 0; x < n; ++x)
    if (fixed[x]) {
      if (used[*fixed[x]] || !compatible(x, *fixed[x])) return std::nullopt;
      f[x] = *fixed[x];
      assigned[x] = used[*fixed[x]] = true;
    }
  for (Element x = 0; x < n; ++x)
    if (fixed[x] && !consistent(f, assigned, x)) return std::nullopt;
  for (Element x = 0; x < n; ++x)
    if (!fixed[x]) order.push_back(x);

  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const Element x = order[depth];
    for (Element v = 0; v < n; ++v) {
      if (used[v] || !compatible(x, v)) continue;
      f[x] = v;
      assigned[x] = used[v] = true;
      if (consistent(f, assigned, x) && place(depth + 1)) return true;
      assigned[x] = used[v] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return f;
}

}  // namespace detail

/// Bijection f with f(0) = 0, f(1) = 1 (when both designate a unit),
/// f(x op y) = f(x) op f(y) and, when both carry complements,
/// f(x') = f(x)'. Returns std::nullopt if none exists.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.kind() != b.kind()) throw PreconditionError("find_isomorphism requires algebras of the same kind");
  const auto n = a.order();
  if (n != b.order()) return std::nullopt;
  const auto pa = detail::profiles(a);
  const auto pb = detail::profiles(b);
  {
    auto sa = pa, sb = pb;
    auto key = [](const detail::ElementProfile& p) {
      return std::tie(p.idempotent, p.row_zero, p.col_zero, p.row_self, p.col_self, p.row_multiplicities,
                      p.col_multiplicities);
    };
    auto less = [&](const auto& l, const auto& r) { return key(l) < key(r); };
    std::sort(sa.begin(), sa.end(), less);
    std::sort(sb.begin(), sb.end(), less);
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::optional<Element>> fixed(n);
  fixed[a.zero()] = b.zero();
  if (a.unit() && b.unit()) {
    if (fixed[*a.unit()] && *fixed[*a.unit()] != *b.unit()) return std::nullopt;
    fixed[*a.unit()] = *b.unit();
  }
  const bool with_complement = a.complement() && b.complement();
  auto consistent = [&](const std::vector<Element>& f, const std::vector<bool>& assigned, Element x) {
    for (Element y = 0; y < n; ++y) {
      if (!assigned[y]) continue;
      Element xy = a.op(x, y), yx = a.op(y, x);
      if (assigned[xy] && f[xy] != b.op(f[x], f[y])) return false;
      if (assigned[yx] && f[yx] != b.op(f[y], f[x])) return false;
    }
    if (with_complement) {
      Element c = (*a.complement())[x];
      if (assigned[c] && f[c] != (*b.complement())[f[x]]) return false;
      for (Element y = 0; y < n; ++y)
        if (assigned[y] && (*a.complement())[y] == x && f[x] != (*b.complement())[f[y]]) return false;
    }
    return true;
  };
  return detail::search_bijection(
      n, fixed, [&](Element x, Element v) { return pa[x] == pb[v]; }, consistent);
}

/// Order isomorphism between two posets, if any.
inline std::optional<std::vector<Element>> find_order_isomorphism(const OrderRelation& a, const OrderRelation& b) {
  const auto n = a.order();
  if (n != b.order()) return std::nullopt;
  auto degrees = [n](const OrderRelation& r) {
    std::vector<std::pair<std::size_t, std::size_t>> d(n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        d[x].first += r.leq(x, y);
        d[x].second += r.leq(y, x);
      }
    return d;
  };
  const auto da = degrees(a), db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::optional<Element>> fixed(n);
  auto consistent = [&](const std::vector<Element>& f, const std::vector<bool>& assigned, Element x) {
    for (Element y = 0; y < n; ++y)
      if (assigned[y] && (a.leq(x, y) != b.leq(f[x], f[y]) || a.leq(y, x) != b.leq(f[y], f[x]))) return false;
    return true;
  };
  return detail::search_bijection(
      n, fixed, [&](Element x, Element v) { return da[x] == db[v]; }, consistent);
}

/// Whether the derived orders are isomorphic as posets. Wajsberg and MV
/// algebras are compared through their BCK images.
inline bool poset_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  auto as_bck = [](const FiniteAlgebra& x) { return x.kind() == Kind::BCK ? x : convert(x, Kind::BCK); };
  return find_order_isomorphism(derived_order(as_bck(a)), derived_order(as_bck(b))).has_value();
}

}  // namespace bckalg
