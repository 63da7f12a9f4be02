#pragma once

// Exhaustive axiom checkers. Every check loops over all tuples in index
// order and records the first violating tuple per axiom, so reports are
// deterministic. All failing axioms are reported, not just the first.

#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace bckalg {

enum class Check { BCI, BCK, Commutative, Implicative, PositiveImplicative, MV, Wajsberg, Morphism };

inline std::string to_string(Check c) {
  switch (c) {
    case Check::BCI: return "bci";
    case Check::BCK: return "bck";
    case Check::Commutative: return "commutative";
    case Check::Implicative: return "implicative";
    case Check::PositiveImplicative: return "positive-implicative";
    case Check::MV: return "mv";
    case Check::Wajsberg: return "wajsberg";
    case Check::Morphism: return "morphism";
  }
  return "?";
}

struct Failure {
  std::string axiom;
  std::vector<Element> witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  Check checked;
  std::vector<Failure> failures;

  bool passed() const noexcept { return failures.empty(); }

  const Failure* find(const std::string& axiom) const {
    for (const auto& f : failures)
      if (f.axiom == axiom) return &f;
    return nullptr;
  }

  void merge(const VerificationReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// Human-readable witness lines: "axiom (x, y, z)" using element names.
inline std::vector<std::string> describe(const VerificationReport& r, const FiniteAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& f : r.failures) {
    std::string line = f.axiom + " fails at (";
    for (std::size_t i = 0; i < f.witness.size(); ++i) {
      if (i) line += ", ";
      line += a.name(f.witness[i]);
    }
    out.push_back(line + ")");
  }
  return out;
}

namespace detail {

class ReportBuilder {
 public:
  explicit ReportBuilder(Check c) : report_{c, {}} {}

  template <class Pred>
  void for_all_1(std::size_t n, const char* axiom, Pred&& holds) {
    for (Element x = 0; x < n; ++x)
      if (!holds(x)) return fail(axiom, {x});
  }
  template <class Pred>
  void for_all_2(std::size_t n, const char* axiom, Pred&& holds) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!holds(x, y)) return fail(axiom, {x, y});
  }
  template <class Pred>
  void for_all_3(std::size_t n, const char* axiom, Pred&& holds) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!holds(x, y, z)) return fail(axiom, {x, y, z});
  }

  VerificationReport take() { return std::move(report_); }

 private:
  void fail(const char* axiom, std::vector<Element> w) { report_.failures.push_back({axiom, std::move(w)}); }
  VerificationReport report_;
};

inline void add_bci_axioms(ReportBuilder& b, const FiniteAlgebra& a) {
  const auto n = a.order();
  const Element z0 = a.zero();
  auto m = [&](Element x, Element y) { return a.op(x, y); };
  b.for_all_3(n, "bci-1", [&](Element x, Element y, Element z) { return m(m(m(x, y), m(x, z)), m(z, y)) == z0; });
  b.for_all_2(n, "bci-2", [&](Element x, Element y) { return m(m(x, m(x, y)), y) == z0; });
  b.for_all_1(n, "bci-3", [&](Element x) { return m(x, x) == z0; });
  b.for_all_2(n, "bci-4", [&](Element x, Element y) { return !(m(x, y) == z0 && m(y, x) == z0) || x == y; });
}

inline const std::vector<Element>& require_complement(const FiniteAlgebra& a, const char* op) {
  if (!a.complement()) throw PreconditionError(std::string(op) + " requires a complement");
  return *a.complement();
}

}  // namespace detail

/// BCI axioms 1-4 on the table read as `*` with the algebra's zero.
inline VerificationReport check_bci(const FiniteAlgebra& a) {
  detail::ReportBuilder b(Check::BCI);
  detail::add_bci_axioms(b, a);
  return b.take();
}

/// BCI axioms plus 0*x = 0.
inline VerificationReport check_bck(const FiniteAlgebra& a) {
  detail::ReportBuilder b(Check::BCK);
  detail::add_bci_axioms(b, a);
  b.for_all_1(a.order(), "bck-5", [&](Element x) { return a.op(a.zero(), x) == a.zero(); });
  return b.take();
}

/// x*(x*y) = y*(y*x)
inline VerificationReport is_commutative(const FiniteAlgebra& a) {
  detail::ReportBuilder b(Check::Commutative);
  b.for_all_2(a.order(), "commutative",
              [&](Element x, Element y) { return a.op(x, a.op(x, y)) == a.op(y, a.op(y, x)); });
  return b.take();
}

/// x*(y*x) = x
inline VerificationReport is_implicative(const FiniteAlgebra& a) {
  detail::ReportBuilder b(Check::Implicative);
  b.for_all_2(a.order(), "implicative", [&](Element x, Element y) { return a.op(x, a.op(y, x)) == x; });
  return b.take();
}

/// (x*y)*z = (x*z)*(y*z)
inline VerificationReport is_positive_implicative(const FiniteAlgebra& a) {
  detail::ReportBuilder b(Check::PositiveImplicative);
  b.for_all_3(a.order(), "positive-implicative", [&](Element x, Element y, Element z) {
    return a.op(a.op(x, y), z) == a.op(a.op(x, z), a.op(y, z));
  });
  return b.take();
}

/// MV axioms on the table read as (+), with the stored complement as '.
/// The abelian-monoid laws (associativity, commutativity, x (+) 0 = x) are
/// checked explicitly.
inline VerificationReport check_mv(const FiniteAlgebra& a) {
  const auto& neg = detail::require_complement(a, "check_mv");
  const auto n = a.order();
  const Element zero = a.zero();
  const Element one = neg[zero];
  auto plus = [&](Element x, Element y) { return a.op(x, y); };
  detail::ReportBuilder b(Check::MV);
  b.for_all_3(n, "mv-associative", [&](Element x, Element y, Element z) {
    return plus(plus(x, y), z) == plus(x, plus(y, z));
  });
  b.for_all_2(n, "mv-commutative", [&](Element x, Element y) { return plus(x, y) == plus(y, x); });
  b.for_all_1(n, "mv-identity", [&](Element x) { return plus(x, zero) == x; });
  b.for_all_1(n, "mv-i", [&](Element x) { return neg[neg[x]] == x; });
  b.for_all_1(n, "mv-ii", [&](Element x) { return plus(x, one) == one; });
  b.for_all_2(n, "mv-iii", [&](Element x, Element y) {
    return plus(neg[plus(neg[x], y)], y) == plus(neg[plus(neg[y], x)], x);
  });
  return b.take();
}

/// Wajsberg axioms i-iv on the table read as the implication.
inline VerificationReport check_wajsberg(const FiniteAlgebra& a) {
  const auto& bar = detail::require_complement(a, "check_wajsberg");
  if (!a.unit()) throw PreconditionError("check_wajsberg requires a unit");
  const auto n = a.order();
  const Element one = *a.unit();
  auto imp = [&](Element x, Element y) { return a.op(x, y); };
  detail::ReportBuilder b(Check::Wajsberg);
  b.for_all_1(n, "wajsberg-i", [&](Element x) { return imp(one, x) == x; });
  b.for_all_3(n, "wajsberg-ii", [&](Element x, Element y, Element z) {
    return imp(imp(x, y), imp(imp(y, z), imp(x, z))) == one;
  });
  b.for_all_2(n, "wajsberg-iii", [&](Element x, Element y) { return imp(imp(x, y), y) == imp(imp(y, x), x); });
  b.for_all_2(n, "wajsberg-iv", [&](Element x, Element y) { return imp(imp(bar[x], bar[y]), imp(y, x)) == one; });
  return b.take();
}

/// f(x op y) = f(x) op' f(y) over all source pairs. Witness is (x, y).
inline VerificationReport check_morphism(const std::vector<Element>& f, const FiniteAlgebra& source,
                                         const FiniteAlgebra& target) {
  if (f.size() != source.order()) throw PreconditionError("morphism must be total on the source");
  for (Element v : f)
    if (v >= target.order()) throw PreconditionError("morphism maps outside the target");
  detail::ReportBuilder b(Check::Morphism);
  b.for_all_2(source.order(), "morphism",
              [&](Element x, Element y) { return f[source.op(x, y)] == target.op(f[x], f[y]); });
  return b.take();
}

/// Runs the check belonging to the algebra's own kind.
inline VerificationReport check_kind(const FiniteAlgebra& a) {
  switch (a.kind()) {
    case Kind::BCK: return check_bck(a);
    case Kind::Wajsberg: return check_wajsberg(a);
    case Kind::MV: return check_mv(a);
  }
  return check_bck(a);
}

}  // namespace bckalg
