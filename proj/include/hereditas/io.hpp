#pragma once

// JSON forms of rings, elements, matrices, modules and groups. Integers are
// written as decimal strings so values of any size round-trip.

#include "hereditas/fpmod.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace hereditas::io {

using json = nlohmann::json;

inline Int int_from_json(const json& j, const std::string& what) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw input_error(what + ": expected an integer (number or decimal string), got " + j.dump());
}

inline std::size_t size_from_json(const json& j, const std::string& what) {
  const Int v = int_from_json(j, what);
  if (v < 0 || v > Int(1000000)) throw input_error(what + ": out of range");
  return static_cast<std::size_t>(v);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw input_error(where + ": missing field '" + key + "'");
  return j.at(key);
}

// ---------------------------------------------------------------------------
// Rings

inline std::size_t basis_index(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw input_error("unknown basis element '" + name + "'");
}

/// Parses "e1+2*a-3*e2", "0" or a bare basis name into coordinates.
inline std::vector<Int> parse_expression(const std::vector<std::string>& names, const Int& p,
                                         const std::string& text) {
  std::vector<Int> e(names.size());
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw input_error("empty algebra element");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw input_error("malformed algebra element '" + text + "'");
    pos = end;
    const auto star = term.find('*');
    Int coef = 1;
    std::string name = term;
    if (star != std::string::npos) {
      coef = parse_int(term.substr(0, star));
      name = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      const Int k = parse_int(term);
      if (!k.is_zero()) throw input_error("bare scalar " + term + " in algebra element; write k*basis");
      continue;
    }
    const std::size_t i = basis_index(names, name);
    e[i] = mod(e[i] + sign * coef, p);
  }
  return e;
}

inline Ring ring_from_json(const json& j) {
  const std::string where = "ring";
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Z") return Ring::integers();
    if (s.rfind("Z/", 0) == 0) return Ring::integers_mod(parse_int(s.substr(2)));
    if (s.rfind("F_", 0) == 0) return Ring::prime_field(parse_int(s.substr(2)));
    throw input_error("unknown ring shorthand '" + s + "' (use Z, Z/n or F_p)");
  }
  const std::string type = field(j, "type", where).get<std::string>();
  if (type == "integers") return Ring::integers();
  if (type == "integers_mod") return Ring::integers_mod(int_from_json(field(j, "modulus", where), "modulus"));
  if (type == "prime_field") return Ring::prime_field(int_from_json(field(j, "p", where), "p"));
  if (type != "fin_dim_algebra") throw input_error("unknown ring type '" + type + "'");
  const Int p = int_from_json(field(j, "p", where), "p");
  const auto names = field(j, "basis", where).get<std::vector<std::string>>();
  const std::size_t dim = names.size();
  if (dim == 0) throw input_error("algebra basis is empty");
  std::vector<Int> c(dim * dim * dim);
  if (j.contains("structure_constants")) {
    const json& sc = j.at("structure_constants");
    if (!sc.is_array() || sc.size() != dim) throw input_error("structure_constants must be dim x dim x dim");
    for (std::size_t a = 0; a < dim; ++a) {
      if (!sc[a].is_array() || sc[a].size() != dim) throw input_error("structure_constants must be dim x dim x dim");
      for (std::size_t b = 0; b < dim; ++b) {
        if (!sc[a][b].is_array() || sc[a][b].size() != dim)
          throw input_error("structure_constants must be dim x dim x dim");
        for (std::size_t k = 0; k < dim; ++k) c[(a * dim + b) * dim + k] = int_from_json(sc[a][b][k], "constant");
      }
    }
  } else {
    const json& prods = field(j, "products", where);
    if (!prods.is_object()) throw input_error("products must map \"x*y\" to an element");
    for (const auto& [key, value] : prods.items()) {
      const auto star = key.find('*');
      if (star == std::string::npos) throw input_error("product key '" + key + "' is not x*y");
      const std::size_t a = basis_index(names, key.substr(0, star));
      const std::size_t b = basis_index(names, key.substr(star + 1));
      const auto v = parse_expression(names, p, value.get<std::string>());
      for (std::size_t k = 0; k < dim; ++k) c[(a * dim + b) * dim + k] = v[k];
    }
  }
  std::vector<std::size_t> idem;
  for (const auto& e : field(j, "idempotents", where)) {
    if (e.is_string()) {
      idem.push_back(basis_index(names, e.get<std::string>()));
    } else {
      idem.push_back(size_from_json(e, "idempotent index"));
    }
  }
  return Ring::algebra(p, names, std::move(c), std::move(idem));
}

inline json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::integers: return {{"type", "integers"}};
    case RingKind::integers_mod: return {{"type", "integers_mod"}, {"modulus", r.modulus().str()}};
    case RingKind::prime_field: return {{"type", "prime_field"}, {"p", r.modulus().str()}};
    default: break;
  }
  const auto& names = r.basis_names();
  const std::size_t dim = names.size();
  json prods = json::object();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const Elem v = r.mul(r.basis(a), r.basis(b));
      if (!r.is_zero(v)) prods[names[a] + "*" + names[b]] = r.format(v);
    }
  json idem = json::array();
  for (std::size_t i : r.idempotent_indices()) idem.push_back(names[i]);
  return {{"type", "fin_dim_algebra"}, {"p", r.modulus().str()}, {"basis", names}, {"products", prods},
          {"idempotents", idem}};
}

// ---------------------------------------------------------------------------
// Elements and matrices

inline Elem elem_from_json(const Ring& r, const json& j) {
  Elem e(r.width());
  if (r.kind() != RingKind::algebra) {
    e[0] = int_from_json(j, "matrix entry");
  } else if (j.is_array()) {
    if (j.size() != r.width()) throw input_error("algebra coordinate vector has wrong length");
    for (std::size_t t = 0; t < r.width(); ++t) e[t] = int_from_json(j[t], "coordinate");
  } else if (j.is_string()) {
    e = parse_expression(r.basis_names(), r.modulus(), j.get<std::string>());
  } else if (j.is_number_integer() && j.get<long long>() == 0) {
    return e;
  } else {
    throw input_error("algebra entry must be an expression string or a coordinate array");
  }
  r.reduce(e);
  return e;
}

inline json elem_to_json(const Ring& r, std::span<const Int> e) { return r.format(e); }

/// {"shape": [r, c], "entries": [[...], ...]} or a bare array of rows.
inline Mat mat_from_json(const Ring& r, const json& j) {
  const json* entries = &j;
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  if (j.is_object()) {
    entries = &field(j, "entries", "matrix");
    if (j.contains("shape")) {
      const json& s = j.at("shape");
      if (!s.is_array() || s.size() != 2) throw input_error("matrix shape must be [rows, cols]");
      shape = std::pair{size_from_json(s[0], "rows"), size_from_json(s[1], "cols")};
    }
  }
  if (!entries->is_array()) throw input_error("matrix entries must be an array of rows");
  const std::size_t rows = entries->size();
  std::size_t cols = rows ? (*entries)[0].size() : 0;
  if (shape) {
    if (shape->first != rows && !(rows == 0 && shape->first == 0))
      throw input_error("matrix has " + std::to_string(rows) + " rows, shape says " + std::to_string(shape->first));
    cols = shape->second;
  } else if (rows == 0) {
    throw input_error("an empty matrix needs an explicit shape");
  }
  Mat m(r, shape ? shape->first : rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = (*entries)[i];
    if (!row.is_array() || row.size() != cols) throw input_error("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, elem_from_json(r, row[c]));
  }
  return m;
}

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m.ring(), m.entry(i, c)));
    rows.push_back(std::move(row));
  }
  return {{"shape", {m.rows(), m.cols()}}, {"entries", rows}};
}

inline json optional_mat(const std::optional<Mat>& m) { return m ? mat_to_json(*m) : json(nullptr); }

// ---------------------------------------------------------------------------
// Modules and groups

inline Side side_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw input_error("side must be left or right, got '" + s + "'");
}

/// {"side": ..., "generators": k, "relations": matrix}; relations default to
/// none (free module). The relation matrix is over the acting ring, so a
/// right module's relations multiply in the opposite ring.
inline FpModule module_from_json(const Ring& r, const json& j, Side default_side = Side::left) {
  if (!j.is_object()) throw input_error("module must be an object");
  const Side side = j.contains("side") ? side_from_json(j.at("side")) : default_side;
  const Ring acting = side == Side::left ? r : r.opposite();
  std::size_t gens = 0;
  Mat rel;
  if (j.contains("relations")) {
    rel = mat_from_json(acting, j.at("relations"));
    gens = j.contains("generators") ? size_from_json(j.at("generators"), "generators") : rel.cols();
  } else {
    gens = size_from_json(field(j, "generators", "module"), "generators");
    rel = Mat(acting, 0, gens);
  }
  return FpModule(r, side, gens, rel);
}

inline json module_to_json(const FpModule& m) {
  return {{"side", to_string(m.side())}, {"generators", m.generators()}, {"relations", mat_to_json(m.relations())}};
}

inline json group_to_json(const FgAbGroup& g) {
  json inv = json::array();
  for (const Int& d : g.invariant_factors) inv.push_back(d.str());
  return {{"free_rank", g.free_rank}, {"invariant_factors", inv}, {"text", g.str()}};
}

inline FgAbGroup group_from_json(const json& j) {
  FgAbGroup g;
  g.free_rank = size_from_json(field(j, "free_rank", "group"), "free_rank");
  for (const auto& d : field(j, "invariant_factors", "group")) g.invariant_factors.push_back(int_from_json(d, "invariant factor"));
  return g;
}

}  // namespace hereditas::io
