#pragma once

// Constructions between algebras: the Iseki extension and the translations
// among bounded commutative BCK, MV and Wajsberg algebras.
//
// Translations keep the carrier (indices and names); only the table and the
// designated constants change, so a roundtrip is literal table equality.
// Every translation validates its input first and throws PreconditionError
// on an invalid one.

#include <string>
#include <vector>

#include "axioms.hpp"
#include "core.hpp"

namespace bckalg {

struct DerivedMvOps {
  CayleyTable odot;
  CayleyTable ominus;
};

namespace detail {

inline void require_passes(const VerificationReport& r, const FiniteAlgebra& a, const char* op) {
  if (r.passed()) return;
  std::string msg = std::string(op) + ": input fails " + to_string(r.checked);
  for (const auto& line : describe(r, a)) msg += "; " + line;
  throw PreconditionError(msg);
}

inline std::string fresh_name(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "'";
  return base;
}

}  // namespace detail

/// Adjoins a fresh top element 1 (index n) to a BCK algebra:
///   x o y = x*y   for x, y old
///   x o 1 = 0     for x old
///   1 o y = 1     for y old
///   1 o 1 = 0
inline FiniteAlgebra iseki_extension(const FiniteAlgebra& a) {
  require_kind(a, Kind::BCK, "iseki_extension");
  const std::size_t n = a.order();
  const Element top = n;
  const Element zero = a.zero();
  auto table = CayleyTable::generate(n + 1, [&](Element x, Element y) -> Element {
    if (x < n && y < n) return a.op(x, y);
    if (x < n) return zero;
    if (y < n) return top;
    return zero;
  });
  auto names = a.names();
  names.push_back(detail::fresh_name(names, "1"));
  return new_algebra(Kind::BCK, std::move(names), std::move(table), {zero, top});
}

/// x' = 1*x, x (+) y = 1*((1*x)*y).
inline FiniteAlgebra bck_to_mv(const FiniteAlgebra& a) {
  require_kind(a, Kind::BCK, "bck_to_mv");
  detail::require_passes(check_bck(a), a, "bck_to_mv");
  detail::require_passes(is_commutative(a), a, "bck_to_mv");
  const auto one = bound_element(a);
  if (!one) throw PreconditionError("bck_to_mv: algebra is not bounded");
  std::vector<Element> neg(a.order());
  for (Element x = 0; x < a.order(); ++x) neg[x] = a.op(*one, x);
  auto plus = CayleyTable::generate(a.order(), [&](Element x, Element y) { return a.op(*one, a.op(neg[x], y)); });
  return new_algebra(Kind::MV, a.names(), std::move(plus), {a.zero(), *one}, std::move(neg));
}

/// x*y = x (-) y = (x' (+) y)'.
inline FiniteAlgebra mv_to_bck(const FiniteAlgebra& a) {
  require_kind(a, Kind::MV, "mv_to_bck");
  detail::require_passes(check_mv(a), a, "mv_to_bck");
  const auto& neg = *a.complement();
  auto star = CayleyTable::generate(a.order(), [&](Element x, Element y) { return neg[a.op(neg[x], y)]; });
  return new_algebra(Kind::BCK, a.names(), std::move(star), {a.zero(), a.unit()});
}

/// x (+) y = x_bar o y; the complement carries over.
inline FiniteAlgebra wajsberg_to_mv(const FiniteAlgebra& a) {
  require_kind(a, Kind::Wajsberg, "wajsberg_to_mv");
  detail::require_passes(check_wajsberg(a), a, "wajsberg_to_mv");
  const auto& bar = *a.complement();
  auto plus = CayleyTable::generate(a.order(), [&](Element x, Element y) { return a.op(bar[x], y); });
  return new_algebra(Kind::MV, a.names(), std::move(plus), {a.zero(), a.unit()}, bar);
}

/// x o y = x' (+) y; unit is 0'.
inline FiniteAlgebra mv_to_wajsberg(const FiniteAlgebra& a) {
  require_kind(a, Kind::MV, "mv_to_wajsberg");
  detail::require_passes(check_mv(a), a, "mv_to_wajsberg");
  const auto& neg = *a.complement();
  auto imp = CayleyTable::generate(a.order(), [&](Element x, Element y) { return a.op(neg[x], y); });
  return new_algebra(Kind::Wajsberg, a.names(), std::move(imp), {a.zero(), a.unit()}, neg);
}

/// x*y = complement of (x o y), computed directly from the implication.
inline FiniteAlgebra wajsberg_to_bck(const FiniteAlgebra& a) {
  require_kind(a, Kind::Wajsberg, "wajsberg_to_bck");
  detail::require_passes(check_wajsberg(a), a, "wajsberg_to_bck");
  const auto& bar = *a.complement();
  auto star = CayleyTable::generate(a.order(), [&](Element x, Element y) { return bar[a.op(x, y)]; });
  return new_algebra(Kind::BCK, a.names(), std::move(star), {a.zero(), a.unit()});
}

inline FiniteAlgebra bck_to_wajsberg(const FiniteAlgebra& a) { return mv_to_wajsberg(bck_to_mv(a)); }

/// x (.) y = (x' (+) y')' and x (-) y = x (.) y'.
inline DerivedMvOps derive_mv_ops(const FiniteAlgebra& a) {
  require_kind(a, Kind::MV, "derive_mv_ops");
  detail::require_passes(check_mv(a), a, "derive_mv_ops");
  const auto& neg = *a.complement();
  auto odot = CayleyTable::generate(a.order(), [&](Element x, Element y) { return neg[a.op(neg[x], neg[y])]; });
  auto ominus = CayleyTable::generate(a.order(), [&](Element x, Element y) { return odot(x, neg[y]); });
  return {std::move(odot), std::move(ominus)};
}

/// Converts to `target`, routing through MV where no direct formula exists.
inline FiniteAlgebra convert(const FiniteAlgebra& a, Kind target) {
  if (a.kind() == target) return a;
  switch (a.kind()) {
    case Kind::BCK: return target == Kind::MV ? bck_to_mv(a) : bck_to_wajsberg(a);
    case Kind::MV: return target == Kind::BCK ? mv_to_bck(a) : mv_to_wajsberg(a);
    case Kind::Wajsberg: return target == Kind::BCK ? wajsberg_to_bck(a) : wajsberg_to_mv(a);
  }
  return a;
}

}  // namespace bckalg
