#pragma once

// Carrier representation for finite algebras: Cayley tables, designated
// constants, derived order and complements.
//
// Elements are dense indices 0..n-1. Names are presentation-only; every
// operation in the library works on indices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bckalg {

using Element = std::size_t;

/// Thrown when a table, name list or constant assignment is malformed.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is applied to an algebra that does not satisfy
/// its precondition (wrong kind, failed axioms, unbounded, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Kind { BCK, Wajsberg, MV };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::BCK: return "bck";
    case Kind::Wajsberg: return "wajsberg";
    case Kind::MV: return "mv";
  }
  return "?";
}

inline std::optional<Kind> kind_from_string(const std::string& s) {
  if (s == "bck") return Kind::BCK;
  if (s == "wajsberg") return Kind::Wajsberg;
  if (s == "mv") return Kind::MV;
  return std::nullopt;
}

/// Square operation table; row is the left operand, column the right one.
class CayleyTable {
 public:
  CayleyTable() = default;

  explicit CayleyTable(const std::vector<std::vector<Element>>& rows) : order_(rows.size()) {
    if (order_ == 0) throw AlgebraError("table must have order >= 1");
    entries_.reserve(order_ * order_);
    for (std::size_t r = 0; r < order_; ++r) {
      if (rows[r].size() != order_) {
        std::ostringstream msg;
        msg << "table row " << r << " has " << rows[r].size() << " entries, expected " << order_;
        throw AlgebraError(msg.str());
      }
      for (Element e : rows[r]) {
        check_entry(e);
        entries_.push_back(e);
      }
    }
  }

  CayleyTable(std::initializer_list<std::initializer_list<Element>> rows)
      : CayleyTable(std::vector<std::vector<Element>>(rows.begin(), rows.end())) {}

  /// Builds the table cell by cell from `op(x, y)`.
  template <class Op>
  static CayleyTable generate(std::size_t n, Op&& op) {
    if (n == 0) throw AlgebraError("table must have order >= 1");
    CayleyTable t;
    t.order_ = n;
    t.entries_.resize(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        Element v = op(x, y);
        t.check_entry(v);
        t.entries_[x * n + y] = v;
      }
    return t;
  }

  std::size_t order() const noexcept { return order_; }

  Element operator()(Element x, Element y) const noexcept { return entries_[x * order_ + y]; }

  std::vector<Element> row(Element x) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(x * order_),
            entries_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_)};
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out;
    for (Element x = 0; x < order_; ++x) out.push_back(row(x));
    return out;
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  void check_entry(Element e) const {
    if (e >= order_) {
      std::ostringstream msg;
      msg << "table entry " << e << " out of range for order " << order_;
      throw AlgebraError(msg.str());
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> entries_;
};

struct Constants {
  std::optional<Element> zero;
  std::optional<Element> one;
};

class FiniteAlgebra;

FiniteAlgebra new_algebra(Kind kind, std::vector<std::string> names, CayleyTable table,
                          Constants constants,
                          std::optional<std::vector<Element>> complement = std::nullopt);

/// A finite algebra of one of the three kinds, carried by a single Cayley
/// table. For BCK the table is `*`, for Wajsberg it is the implication,
/// for MV it is `(+)`. Immutable once built; use new_algebra().
class FiniteAlgebra {
 public:
  Kind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return table_.order(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }
  const CayleyTable& table() const noexcept { return table_; }
  Element op(Element x, Element y) const noexcept { return table_(x, y); }
  Element zero() const noexcept { return zero_; }
  std::optional<Element> unit() const noexcept { return unit_; }
  const std::optional<std::vector<Element>>& complement() const noexcept { return complement_; }

  std::optional<Element> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Element>(it - names_.begin());
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  friend FiniteAlgebra new_algebra(Kind, std::vector<std::string>, CayleyTable, Constants,
                                   std::optional<std::vector<Element>>);
  FiniteAlgebra() = default;

  Kind kind_ = Kind::BCK;
  std::vector<std::string> names_;
  CayleyTable table_;
  Element zero_ = 0;
  std::optional<Element> unit_;
  std::optional<std::vector<Element>> complement_;
};

/// x <= y iff x*y = 0, as a dense boolean relation.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n) : n_(n), leq_(n * n, false) {}

  std::size_t order() const noexcept { return n_; }
  bool leq(Element x, Element y) const noexcept { return leq_[x * n_ + y]; }
  void set(Element x, Element y, bool v) { leq_[x * n_ + y] = v; }

  bool is_reflexive() const {
    for (Element x = 0; x < n_; ++x)
      if (!leq(x, x)) return false;
    return true;
  }
  bool is_antisymmetric() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (x != y && leq(x, y) && leq(y, x)) return false;
    return true;
  }
  bool is_transitive() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (leq(x, y))
          for (Element z = 0; z < n_; ++z)
            if (leq(y, z) && !leq(x, z)) return false;
    return true;
  }
  bool is_partial_order() const { return is_reflexive() && is_antisymmetric() && is_transitive(); }

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t n_;
  std::vector<bool> leq_;
};

namespace detail {

inline void require_in_range(std::optional<Element> e, std::size_t n, const char* what) {
  if (e && *e >= n) {
    std::ostringstream msg;
    msg << what << " index " << *e << " out of range for order " << n;
    throw AlgebraError(msg.str());
  }
}

// Unique z with z o y = 1 for every y, if any.
inline std::optional<Element> wajsberg_bottom(const CayleyTable& t, Element one) {
  std::optional<Element> found;
  for (Element z = 0; z < t.order(); ++z) {
    bool all_one = true;
    for (Element y = 0; y < t.order() && all_one; ++y) all_one = t(z, y) == one;
    if (all_one) {
      if (found) return std::nullopt;
      found = z;
    }
  }
  return found;
}

inline std::optional<Element> top_of(const CayleyTable& t, Element zero) {
  for (Element c = 0; c < t.order(); ++c) {
    bool top = true;
    for (Element x = 0; x < t.order() && top; ++x) top = t(x, c) == zero;
    if (top) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// Validates and assembles an algebra. Checks shape, name uniqueness,
/// constant ranges and complement consistency; never checks axioms.
///
/// Constant rules per kind:
///  - BCK: zero required; one optional.
///  - Wajsberg: one required; zero is complement(one) when a complement row
///    is given, otherwise the unique z with z o y = one for all y. The
///    complement is always stored, derived as x o zero.
///  - MV: zero and complement required; one is complement(zero).
/// A given constant or complement row that disagrees with its derivation
/// is an error.
inline FiniteAlgebra new_algebra(Kind kind, std::vector<std::string> names, CayleyTable table,
                                 Constants constants, std::optional<std::vector<Element>> complement) {
  const std::size_t n = table.order();
  if (n == 0) throw AlgebraError("algebra must have at least one element");
  if (names.size() != n) {
    std::ostringstream msg;
    msg << names.size() << " element names for a table of order " << n;
    throw AlgebraError(msg.str());
  }
  {
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (nm.empty()) throw AlgebraError("empty element name");
      if (std::any_of(nm.begin(), nm.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#'; }))
        throw AlgebraError("element name '" + nm + "' contains whitespace or '#'");
      if (!seen.insert(nm).second) throw AlgebraError("duplicate element name '" + nm + "'");
    }
  }
  detail::require_in_range(constants.zero, n, "zero");
  detail::require_in_range(constants.one, n, "one");
  if (complement) {
    if (complement->size() != n) throw AlgebraError("complement row has wrong length");
    for (Element c : *complement) detail::require_in_range(c, n, "complement");
  }

  FiniteAlgebra a;
  a.kind_ = kind;
  a.names_ = std::move(names);

  auto disagree = [&](const std::string& what) {
    throw AlgebraError("given " + what + " disagrees with the one derived from the table");
  };

  switch (kind) {
    case Kind::BCK: {
      if (!constants.zero) throw AlgebraError("bck algebra requires a zero");
      a.zero_ = *constants.zero;
      a.unit_ = constants.one;
      if (complement) {
        std::optional<Element> one = constants.one ? constants.one : detail::top_of(table, a.zero_);
        if (one)
          for (Element x = 0; x < n; ++x)
            if ((*complement)[x] != table(*one, x)) disagree("complement of '" + a.names_[x] + "'");
      }
      a.complement_ = std::move(complement);
      break;
    }
    case Kind::Wajsberg: {
      if (!constants.one) throw AlgebraError("wajsberg algebra requires a one");
      const Element one = *constants.one;
      std::optional<Element> zero;
      if (complement)
        zero = (*complement)[one];
      else
        zero = detail::wajsberg_bottom(table, one);
      if (constants.zero && zero && *constants.zero != *zero) disagree("zero");
      if (!zero) zero = constants.zero;
      if (!zero) throw AlgebraError("wajsberg algebra has no derivable zero");
      std::vector<Element> derived(n);
      for (Element x = 0; x < n; ++x) derived[x] = table(x, *zero);
      if (complement && *complement != derived) {
        for (Element x = 0; x < n; ++x)
          if ((*complement)[x] != derived[x]) disagree("complement of '" + a.names_[x] + "'");
      }
      a.zero_ = *zero;
      a.unit_ = one;
      a.complement_ = std::move(derived);
      break;
    }
    case Kind::MV: {
      if (!constants.zero) throw AlgebraError("mv algebra requires a zero");
      if (!complement) throw AlgebraError("mv algebra requires a complement row");
      const Element one = (*complement)[*constants.zero];
      if (constants.one && *constants.one != one) disagree("one");
      a.zero_ = *constants.zero;
      a.unit_ = one;
      a.complement_ = std::move(complement);
      break;
    }
  }
  a.table_ = std::move(table);
  return a;
}

/// Same algebra with different element labels.
inline FiniteAlgebra with_names(const FiniteAlgebra& a, std::vector<std::string> names) {
  return new_algebra(a.kind(), std::move(names), a.table(), {a.zero(), a.unit()}, a.complement());
}

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline void require_kind(const FiniteAlgebra& a, Kind k, const char* op) {
  if (a.kind() != k)
    throw PreconditionError(std::string(op) + " requires a " + to_string(k) + " algebra, got " +
                            to_string(a.kind()));
}

inline OrderRelation derived_order(const FiniteAlgebra& a) {
  require_kind(a, Kind::BCK, "derived_order");
  OrderRelation r(a.order());
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y) r.set(x, y, a.op(x, y) == a.zero());
  return r;
}

/// The top element 1 (x <= 1 for all x), if the order has one.
inline std::optional<Element> bound_element(const FiniteAlgebra& a) {
  require_kind(a, Kind::BCK, "bound_element");
  return detail::top_of(a.table(), a.zero());
}

/// 1*x for a bounded BCK algebra; the stored complement otherwise.
inline Element complement_of(const FiniteAlgebra& a, Element x) {
  if (x >= a.order()) throw AlgebraError("element out of range");
  if (a.kind() == Kind::BCK) {
    std::optional<Element> one = a.unit() ? a.unit() : bound_element(a);
    if (one) return a.op(*one, x);
  }
  if (a.complement()) return (*a.complement())[x];
  throw PreconditionError("complement undefined: unbounded bck algebra without a complement row");
}

inline std::vector<Element> complement_map(const FiniteAlgebra& a) {
  std::vector<Element> out(a.order());
  for (Element x = 0; x < a.order(); ++x) out[x] = complement_of(a, x);
  return out;
}

/// Elements fixed by double complementation.
inline std::vector<Element> involutions(const FiniteAlgebra& a) {
  const auto c = complement_map(a);
  std::vector<Element> out;
  for (Element x = 0; x < a.order(); ++x)
    if (c[c[x]] == x) out.push_back(x);
  return out;
}

}  // namespace bckalg
