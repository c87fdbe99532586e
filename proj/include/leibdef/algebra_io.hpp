#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "leibdef/leibniz_algebra.hpp"

namespace leibdef {

/* Anything wrong with an algebra file or its resolution: unreadable path,
   malformed JSON, out-of-range index, unknown catalog name. Distinct from
   mathematical failures so the driver can map it to a usage exit code. */
struct AlgebraIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* A named algebra as it travels through files and reports. Labels are
   optional display names for the basis, one per dimension when present. */
struct AlgebraFile {
  std::string name;
  LeibnizAlgebra algebra{1};
  std::vector<std::string> labels;

  int dim() const { return algebra.dim(); }
};

namespace io_detail {

inline int line_of_byte(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw AlgebraIoError("algebra file: " + where + ": " + what);
}

inline long long require_int(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<long long>();
}

inline int require_index(const nlohmann::json& v, int dim, const std::string& where) {
  long long i = require_int(v, where);
  if (i < 1 || i > dim) {
    std::ostringstream os;
    os << "index " << i << " outside 1.." << dim;
    fail(where, os.str());
  }
  return int(i) - 1;
}

inline Rational require_rational(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "coefficients must be rational strings like \"2\" or \"-1/3\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

inline void reject_unknown_keys(const nlohmann::json& obj,
                                std::initializer_list<std::string_view> allowed,
                                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) fail(where, "unknown field \"" + key + "\"");
  }
}

}  // namespace io_detail

/* Reads the JSON description of an algebra. Indices are 1-based in the
   file, coefficients are exact rational strings, and every bracket not
   listed is zero. Problems raise AlgebraIoError naming the offending
   field, or the line for syntax errors. */
inline AlgebraFile parse_algebra(std::string_view text) {
  using io_detail::fail;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream os;
    os << "line " << io_detail::line_of_byte(text, e.byte) << ": " << e.what();
    throw AlgebraIoError("algebra file: " + os.str());
  }
  if (!doc.is_object()) fail("top level", "expected an object");
  io_detail::reject_unknown_keys(doc, {"name", "dim", "brackets", "labels"}, "top level");
  if (!doc.contains("name") || !doc["name"].is_string() || doc["name"].get<std::string>().empty())
    fail("name", "required non-empty string");
  if (!doc.contains("dim")) fail("dim", "required");
  long long dim = io_detail::require_int(doc["dim"], "dim");
  if (dim < 1) fail("dim", "must be at least 1");
  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    fail("brackets", "required array");

  AlgebraFile out;
  out.name = doc["name"].get<std::string>();
  out.algebra = LeibnizAlgebra(int(dim));

  std::vector<std::vector<bool>> seen(std::size_t(dim), std::vector<bool>(std::size_t(dim), false));
  int pos = 0;
  for (const auto& entry : doc["brackets"]) {
    std::string where = "brackets[" + std::to_string(pos) + "]";
    if (!entry.is_object()) fail(where, "expected an object");
    io_detail::reject_unknown_keys(entry, {"left", "right", "value"}, where);
    for (const char* req : {"left", "right", "value"})
      if (!entry.contains(req)) fail(where, std::string("missing \"") + req + "\"");
    int i = io_detail::require_index(entry["left"], int(dim), where + ".left");
    int j = io_detail::require_index(entry["right"], int(dim), where + ".right");
    if (seen[std::size_t(i)][std::size_t(j)])
      fail(where, "duplicate bracket for this basis pair");
    seen[std::size_t(i)][std::size_t(j)] = true;
    if (!entry["value"].is_array()) fail(where + ".value", "expected an array");
    Vec v(static_cast<std::size_t>(dim));
    std::vector<bool> used(std::size_t(dim), false);
    int vpos = 0;
    for (const auto& term : entry["value"]) {
      std::string twhere = where + ".value[" + std::to_string(vpos) + "]";
      if (!term.is_array() || term.size() != 2)
        fail(twhere, "expected [index, coefficient] pairs");
      int k = io_detail::require_index(term[0], int(dim), twhere);
      if (used[std::size_t(k)]) fail(twhere, "duplicate basis index in value");
      used[std::size_t(k)] = true;
      v[std::size_t(k)] = io_detail::require_rational(term[1], twhere);
      ++vpos;
    }
    out.algebra.set_bracket(i, j, std::move(v));
    ++pos;
  }

  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || static_cast<long long>(doc["labels"].size()) != dim)
      fail("labels", "must list one string per basis element");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string() || l.get<std::string>().empty())
        fail("labels", "entries must be non-empty strings");
      out.labels.push_back(l.get<std::string>());
    }
  }
  return out;
}

/* Canonical JSON form: brackets in row-major basis order, zero brackets and
   zero coefficients dropped, sparse values ascending. Serializing twice, or
   after a parse round trip, yields identical bytes. */
inline nlohmann::json algebra_to_json(const AlgebraFile& f) {
  nlohmann::json doc;
  doc["name"] = f.name;
  doc["dim"] = f.dim();
  doc["brackets"] = nlohmann::json::array();
  int n = f.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& v = f.algebra.bracket_basis(i, j);
      nlohmann::json value = nlohmann::json::array();
      for (int k = 0; k < n; ++k)
        if (!v[std::size_t(k)].is_zero())
          value.push_back(nlohmann::json::array({k + 1, v[std::size_t(k)].str()}));
      if (!value.empty())
        doc["brackets"].push_back({{"left", i + 1}, {"right", j + 1}, {"value", value}});
    }
  if (!f.labels.empty()) doc["labels"] = f.labels;
  return doc;
}

inline std::string serialize_algebra(const AlgebraFile& f) {
  return algebra_to_json(f).dump(2) + "\n";
}

/* FNV-1a over the canonical serialization, so the digest identifies the
   algebra rather than the formatting of the file it came from. */
inline std::string algebra_digest(const AlgebraFile& f) {
  std::string bytes = algebra_to_json(f).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[std::size_t(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---- built-in catalog ------------------------------------------------------

inline std::vector<std::string> catalog_names() {
  return {"abelian1", "abelian2", "abelian3", "nilp2", "nonleibniz1", "sl2"};
}

/* The algebras every installation knows by name. sl2 carries labels to
   exercise the optional field end to end. */
inline std::optional<AlgebraFile> catalog_algebra(const std::string& name) {
  auto unit = [](int n, int k, long c) { Vec v(static_cast<std::size_t>(n)); v[std::size_t(k)] = Rational(c); return v; };
  AlgebraFile f;
  f.name = name;
  if (name == "abelian1") {
    f.algebra = LeibnizAlgebra(1);
  } else if (name == "abelian2") {
    f.algebra = LeibnizAlgebra(2);
  } else if (name == "abelian3") {
    f.algebra = LeibnizAlgebra(3);
  } else if (name == "nilp2") {
    f.algebra = LeibnizAlgebra(2);
    f.algebra.set_bracket(1, 1, unit(2, 0, 1));
  } else if (name == "sl2") {
    f.algebra = LeibnizAlgebra(3);
    f.algebra.set_bracket(0, 1, unit(3, 2, 1));
    f.algebra.set_bracket(1, 0, unit(3, 2, -1));
    f.algebra.set_bracket(2, 0, unit(3, 0, 2));
    f.algebra.set_bracket(0, 2, unit(3, 0, -2));
    f.algebra.set_bracket(2, 1, unit(3, 1, -2));
    f.algebra.set_bracket(1, 2, unit(3, 1, 2));
    f.labels = {"e", "f", "h"};
  } else if (name == "nonleibniz1") {
    f.algebra = LeibnizAlgebra(1);
    f.algebra.set_bracket(0, 0, unit(1, 0, 1));
  } else {
    return std::nullopt;
  }
  return f;
}

inline AlgebraFile parse_algebra_at(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraIoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const AlgebraIoError& e) {
    throw AlgebraIoError(path.string() + ": " + e.what());
  }
}

/* Turns a command-line operand into an algebra: an existing file wins, then
   a <name>.json under $LEIBDEF_CATALOG, then the built-in catalog. */
inline AlgebraFile resolve_algebra(const std::string& operand) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(operand, ec)) return parse_algebra_at(operand);
  if (const char* dir = std::getenv("LEIBDEF_CATALOG")) {
    fs::path p = fs::path(dir) / (operand + ".json");
    if (fs::is_regular_file(p, ec)) return parse_algebra_at(p);
  }
  if (auto f = catalog_algebra(operand)) return *f;
  std::string names;
  for (const std::string& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw AlgebraIoError("no algebra named \"" + operand + "\": not a readable file, not in the catalog (" + names + ")");
}

}  // namespace leibdef
