#pragma once

// Line-oriented algebra documents.
//
//   # free-text comment
//   kind: bck|wajsberg|mv
//   order: <n>
//   elements: <n names>
//   zero: <name>
//   one: <name>
//   complement: <n names>
//   table:
//   <n rows of n names>
//
// Keys come before `table:`; `zero`, `one` and `complement` are optional
// subject to the per-kind rules of new_algebra(). Canonical form: comments
// first, keys in the order above, single spaces, '\n' line ends.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace bckalg {

class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct AlgebraDocument {
  std::vector<std::string> comments;  // without the leading "# "
  FiniteAlgebra algebra;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

}  // namespace detail

inline AlgebraDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> comments;
  std::map<std::string, std::string> keys;
  std::vector<std::vector<std::string>> rows;
  bool in_table = false;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string c = line.substr(1);
      if (!c.empty() && c.front() == ' ') c.erase(0, 1);
      comments.push_back(c);
      continue;
    }
    if (in_table) {
      rows.push_back(detail::split_ws(line));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'key: value'");
    const std::string key = detail::trim(line.substr(0, colon));
    const std::string value = detail::trim(line.substr(colon + 1));
    if (key == "table") {
      if (!value.empty()) throw fail("table rows start on the line after 'table:'");
      in_table = true;
      continue;
    }
    static const std::vector<std::string> known{"kind", "order", "elements", "zero", "one", "complement"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw fail("unknown key '" + key + "'");
    if (!keys.emplace(key, value).second) throw fail("duplicate key '" + key + "'");
  }

  line_no = 0;
  auto require = [&](const char* key) -> const std::string& {
    auto it = keys.find(key);
    if (it == keys.end()) throw fail(std::string("missing '") + key + "'");
    return it->second;
  };
  const auto kind = kind_from_string(require("kind"));
  if (!kind) throw fail("unknown kind '" + keys["kind"] + "'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const auto& o = require("order");
    n = std::stoul(o, &used);
    if (used != o.size() || n == 0) throw std::invalid_argument(o);
  } catch (const std::logic_error&) {
    throw fail("order must be a positive integer");
  }
  const auto names = detail::split_ws(require("elements"));
  if (names.size() != n)
    throw fail("order is " + std::to_string(n) + " but " + std::to_string(names.size()) + " elements are declared");
  if (!in_table) throw fail("missing 'table:'");
  if (rows.size() != n)
    throw fail("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));

  std::map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) index.emplace(names[i], i);
  auto lookup = [&](const std::string& nm) {
    auto it = index.find(nm);
    if (it == index.end()) throw fail("undeclared element '" + nm + "'");
    return it->second;
  };
  std::vector<std::vector<Element>> cells(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw fail("table row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                 " entries, expected " + std::to_string(n));
    for (const auto& nm : rows[r]) cells[r].push_back(lookup(nm));
  }
  Constants constants;
  if (keys.count("zero")) constants.zero = lookup(keys["zero"]);
  if (keys.count("one")) constants.one = lookup(keys["one"]);
  std::optional<std::vector<Element>> complement;
  if (keys.count("complement")) {
    const auto c = detail::split_ws(keys["complement"]);
    if (c.size() != n) throw fail("complement lists " + std::to_string(c.size()) + " names, expected " + std::to_string(n));
    complement.emplace();
    for (const auto& nm : c) complement->push_back(lookup(nm));
  }
  try {
    auto algebra = new_algebra(*kind, names, CayleyTable(cells), constants, std::move(complement));
    return {std::move(comments), std::move(algebra)};
  } catch (const ParseError&) {
    throw;
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
}

inline FiniteAlgebra parse_algebra(const std::string& text) { return parse_document(text).algebra; }

inline std::string render_document(const AlgebraDocument& doc) {
  const auto& a = doc.algebra;
  std::ostringstream out;
  for (const auto& c : doc.comments) out << (c.empty() ? "#" : "# " + c) << '\n';
  out << "kind: " << to_string(a.kind()) << '\n';
  out << "order: " << a.order() << '\n';
  out << "elements: " << detail::join(a.names()) << '\n';
  out << "zero: " << a.name(a.zero()) << '\n';
  if (a.unit()) out << "one: " << a.name(*a.unit()) << '\n';
  if (a.complement()) {
    std::vector<std::string> c;
    for (Element e : *a.complement()) c.push_back(a.name(e));
    out << "complement: " << detail::join(c) << '\n';
  }
  out << "table:\n";
  for (Element x = 0; x < a.order(); ++x) {
    std::vector<std::string> row;
    for (Element y = 0; y < a.order(); ++y) row.push_back(a.name(a.op(x, y)));
    out << detail::join(row) << '\n';
  }
  return out.str();
}

inline std::string render_algebra(const FiniteAlgebra& a) { return render_document({{}, a}); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraDocument load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline FiniteAlgebra load_algebra(const std::string& path) { return load_document(path).algebra; }

}  // namespace bckalg
