// Command-line front end for the bckalg library.
//
// Exit codes: 0 success, 1 semantic failure (axiom failure, no isomorphism,
// audit failure, precondition violated), 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bckalg/bckalg.hpp"

namespace fs = std::filesystem;
using namespace bckalg;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

Kind parse_kind(const std::string& s) {
  auto k = kind_from_string(s);
  if (!k) throw ParseError("unknown kind '" + s + "' (expected bck, wajsberg or mv)");
  return *k;
}

int print_report(const VerificationReport& r, const FiniteAlgebra& a) {
  if (r.passed()) {
    std::cout << to_string(r.checked) << ": pass\n";
    return kPass;
  }
  std::cout << to_string(r.checked) << ": FAIL\n";
  for (const auto& line : describe(r, a)) std::cout << "  " << line << '\n';
  return kFail;
}

int run_verify(const std::string& file, const std::string& kind, bool commutative, bool implicative,
               bool positive_implicative) {
  const auto a = load_algebra(file);
  if (!kind.empty() && parse_kind(kind) != a.kind())
    throw ParseError(file + " holds a " + to_string(a.kind()) + " algebra, not " + kind);
  if ((commutative || implicative || positive_implicative) && a.kind() != Kind::BCK)
    throw ParseError("--commutative/--implicative/--positive-implicative apply to bck algebras only");
  int rc = print_report(check_kind(a), a);
  if (commutative) rc = std::max(rc, print_report(is_commutative(a), a));
  if (implicative) rc = std::max(rc, print_report(is_implicative(a), a));
  if (positive_implicative) rc = std::max(rc, print_report(is_positive_implicative(a), a));
  return rc;
}

int run_convert(const std::string& file, const std::string& from, const std::string& to) {
  const auto a = load_algebra(file);
  if (!from.empty() && parse_kind(from) != a.kind())
    throw ParseError(file + " holds a " + to_string(a.kind()) + " algebra, not " + from);
  std::cout << render_algebra(convert(a, parse_kind(to)));
  return kPass;
}

int run_enumerate(std::size_t order, const std::string& kind, const std::string& out_dir) {
  const Kind k = parse_kind(kind);
  if (k == Kind::MV) throw ParseError("enumerate supports --kind wajsberg or bck");
  if (order < 2) throw ParseError("--order must be at least 2");
  const auto algebras = enumerate_wajsberg(order);
  fs::create_directories(out_dir);
  std::cout << "pi_" << order << " = " << algebras.size() << '\n';
  for (const auto& e : algebras) {
    const auto alg = k == Kind::BCK ? wajsberg_to_bck(e.algebra) : e.algebra;
    const std::string name = std::string(k == Kind::BCK ? "b" : "w") + std::to_string(order) + "_" +
                             e.factorization.label() + ".alg";
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << render_document({{"product of Lukasiewicz chains " + e.factorization.label()}, alg});
    std::cout << path.string() << '\n';
  }
  return kPass;
}

int run_sub(const std::string& file, bool want_subs, bool want_ideals, bool all) {
  const auto a = load_algebra(file);
  if (!want_subs && !want_ideals) want_subs = want_ideals = true;
  auto print = [&](const char* label, const std::vector<Subset>& sets) {
    std::cout << label << ":";
    if (sets.empty()) std::cout << " none";
    for (const auto& s : sets) std::cout << ' ' << format_subset(a, s);
    std::cout << '\n';
  };
  const char* prefix = all ? "" : "proper ";
  if (want_subs) print((std::string(prefix) + "subalgebras").c_str(), subalgebras(a, !all));
  if (want_ideals) print((std::string(prefix) + "ideals").c_str(), ideals(a, !all));
  return kPass;
}

int run_iso(const std::string& left, const std::string& right, bool poset) {
  const auto a = load_algebra(left);
  const auto b = load_algebra(right);
  std::optional<std::vector<Element>> f;
  if (poset) {
    auto as_bck = [](const FiniteAlgebra& x) { return x.kind() == Kind::BCK ? x : convert(x, Kind::BCK); };
    f = find_order_isomorphism(derived_order(as_bck(a)), derived_order(as_bck(b)));
  } else {
    if (a.kind() != b.kind()) throw ParseError("algebras have different kinds");
    f = find_isomorphism(a, b);
  }
  if (!f) {
    std::cout << "non-isomorphic\n";
    return kFail;
  }
  for (Element x = 0; x < a.order(); ++x) std::cout << a.name(x) << " -> " << b.name((*f)[x]) << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite BCK, MV and Wajsberg algebra toolkit"};
  app.require_subcommand(1);

  std::string file, kind, from, to, left, right, out_dir = ".", enum_kind = "wajsberg";
  bool commutative = false, implicative = false, positive_implicative = false;
  bool want_subs = false, want_ideals = false, all = false, poset = false;
  std::size_t order = 0;

  auto* verify = app.add_subcommand("verify", "Check the axioms of an algebra file");
  verify->add_option("--kind", kind, "Expected kind: bck, wajsberg or mv");
  verify->add_flag("--commutative", commutative);
  verify->add_flag("--implicative", implicative);
  verify->add_flag("--positive-implicative", positive_implicative);
  verify->add_option("file", file)->required();

  auto* conv = app.add_subcommand("convert", "Translate between bck, mv and wajsberg");
  conv->add_option("--from", from);
  conv->add_option("--to", to)->required();
  conv->add_option("file", file)->required();

  auto* iseki = app.add_subcommand("iseki", "Adjoin a top element to a bck algebra");
  iseki->add_option("file", file)->required();

  auto* en = app.add_subcommand("enumerate", "Write one algebra per factorization of the order");
  en->add_option("--order", order)->required();
  en->add_option("--kind", enum_kind, "wajsberg (default) or bck");
  en->add_option("--out", out_dir, "Output directory (default: .)");

  auto* sub = app.add_subcommand("sub", "List subalgebras and ideals");
  sub->add_flag("--subalgebras", want_subs);
  sub->add_flag("--ideals", want_ideals);
  sub->add_flag("--all", all, "Include {0} and the whole carrier");
  sub->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two algebras");
  iso->add_flag("--poset", poset, "Compare derived orders only");
  iso->add_option("a", left)->required();
  iso->add_option("b", right)->required();

  auto* paper = app.add_subcommand("check-paper", "Audit the ex3_* golden fixtures");
  paper->add_option("dir", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify) return run_verify(file, kind, commutative, implicative, positive_implicative);
    if (*conv) return run_convert(file, from, to);
    if (*iseki) {
      std::cout << render_algebra(iseki_extension(load_algebra(file)));
      return kPass;
    }
    if (*en) return run_enumerate(order, enum_kind, out_dir);
    if (*sub) return run_sub(file, want_subs, want_ideals, all);
    if (*iso) return run_iso(left, right, poset);
    if (*paper) return audit::run(file, std::cout) == 0 ? kPass : kFail;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
