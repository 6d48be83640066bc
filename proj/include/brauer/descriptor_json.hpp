#pragma once

// JSON descriptor files. One descriptor is an object
//
//   {"id": "k3", "class": "CompactGeneric", "b2": 22, "picardNumber": 20, "torsionH3": [2]}
//
// with field names of the SurfaceDescriptor alternatives. A file holds one
// or more JSON documents; each is a descriptor, an array of descriptors, or
// an envelope {"descriptors": [...], "results": [...]} as written by the json
// output format ("results" is accepted and ignored).
//
// Integers may be JSON integers or decimal strings. torsionH3 lists cyclic
// orders and is canonicalized through SNF. Hopf "G" is a cyclic order, an
// inline multiplication table, or a path to a plain-text table file;
// "extensionClass" is a residue, an inline cocycle table, or a path.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "brauer/abgroup.hpp"
#include "brauer/errors.hpp"
#include "brauer/groupcohom.hpp"
#include "brauer/surfaces.hpp"

namespace brauer::io {

using nlohmann::json;
using exactla::IntMatrix;

namespace detail {

inline BigInt to_bigint(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    return BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    try {
      return groupcohom::detail::parse_integer(s, field.c_str());
    } catch (const ParseError&) {
    }
  }
  throw ParseError("field '" + field + "' must be an integer");
}

inline std::uint64_t to_count(const json& v, const std::string& field) {
  const BigInt b = to_bigint(v, field);
  if (b < 0 || b > std::numeric_limits<std::uint64_t>::max())
    throw ParseError("field '" + field + "' must be a nonnegative count");
  return static_cast<std::uint64_t>(b);
}

inline json from_bigint(const BigInt& b) {
  if (b >= std::numeric_limits<std::int64_t>::min() && b <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(b));
  return json(b.str());
}

inline IntMatrix to_matrix(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) throw ParseError("field '" + field + "' must be a nonempty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  IntMatrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array() || v[i].size() != cols) throw ParseError("field '" + field + "' has ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_bigint(v[i][j], field);
  }
  return m;
}

inline json from_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(from_bigint(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline FgAbGroup to_finite_group(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("field '" + field + "' must be an array of cyclic orders");
  std::vector<BigInt> orders;
  for (const auto& x : v) {
    BigInt d = to_bigint(x, field);
    if (d < 1) throw ParseError("field '" + field + "' lists cyclic orders, which must be >= 1");
    orders.push_back(std::move(d));
  }
  return abgroup::from_cyclic_orders(0, orders);
}

inline json from_finite_group(const FgAbGroup& g) {
  json a = json::array();
  for (const auto& d : g.invariant_factors()) a.push_back(from_bigint(d));
  return a;
}

inline std::ifstream open_relative(const std::string& path, const std::filesystem::path& base) {
  std::filesystem::path p(path);
  if (p.is_relative()) p = base / p;
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open table file " + p.string());
  return in;
}

inline void check_fields(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& [key, unused] : obj.items()) {
    if (key == "id" || key == "class") continue;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ParseError("unknown field '" + key + "' for class " + obj["class"].get<std::string>());
  }
}

inline const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + field + "'");
  return *it;
}

}  // namespace detail

/// Parses one descriptor object. `base` resolves relative table paths.
inline surfaces::SurfaceDescriptor parse_descriptor(const json& obj, const std::filesystem::path& base = {}) {
  using namespace surfaces;
  if (!obj.is_object()) throw ParseError("descriptor must be a JSON object");
  const json& cls_v = detail::require(obj, "class");
  if (!cls_v.is_string()) throw ParseError("field 'class' must be a string");
  if (auto it = obj.find("id"); it != obj.end() && !it->is_string()) throw ParseError("field 'id' must be a string");
  const std::string cls = cls_v.get<std::string>();

  auto torsion_or_empty = [&](const char* field) {
    auto it = obj.find(field);
    return it == obj.end() ? FgAbGroup::trivial() : detail::to_finite_group(*it, field);
  };

  if (cls == "CompactGeneric") {
    detail::check_fields(obj, {"b2", "picardNumber", "torsionH3"});
    return CompactGeneric{detail::to_count(detail::require(obj, "b2"), "b2"),
                          detail::to_count(detail::require(obj, "picardNumber"), "picardNumber"),
                          torsion_or_empty("torsionH3")};
  }
  if (cls == "Hopf") {
    detail::check_fields(obj, {"G", "extensionClass"});
    Hopf h;
    const json& g = detail::require(obj, "G");
    if (g.is_array()) {
      const IntMatrix t = detail::to_matrix(g, "G");
      std::vector<std::vector<std::size_t>> mul(t.rows());
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
          if (t(i, j) < 0 || t(i, j) >= t.rows()) throw ParseError("field 'G' has an entry out of range");
          mul[i].push_back(static_cast<std::size_t>(t(i, j)));
        }
      h.G = groupcohom::GroupTable(std::move(mul));
    } else if (g.is_string() && !g.get_ref<const std::string&>().empty() &&
               !std::isdigit(static_cast<unsigned char>(g.get_ref<const std::string&>()[0]))) {
      auto in = detail::open_relative(g.get<std::string>(), base);
      h.G = groupcohom::parse_group_table(in);
    } else {
      h.G = detail::to_count(g, "G");
    }
    const json& c = detail::require(obj, "extensionClass");
    if (c.is_array()) {
      h.extensionClass = detail::to_matrix(c, "extensionClass");
    } else if (c.is_string() && !c.get_ref<const std::string&>().empty() &&
               c.get_ref<const std::string&>().find_first_not_of("+-0123456789") != std::string::npos) {
      auto in = detail::open_relative(c.get<std::string>(), base);
      h.extensionClass = groupcohom::parse_cocycle_values(in);
    } else {
      h.extensionClass = detail::to_bigint(c, "extensionClass");
    }
    return h;
  }
  if (cls == "InoueSM") {
    detail::check_fields(obj, {"M", "coefficients", "allowNonSL3"});
    InoueSM s;
    const bool has_m = obj.contains("M"), has_c = obj.contains("coefficients");
    if (has_m == has_c) throw ParseError("InoueSM needs exactly one of 'M' or 'coefficients'");
    if (has_m) {
      s.M = detail::to_matrix(obj["M"], "M");
    } else {
      const json& a = obj["coefficients"];
      if (!a.is_array() || a.size() != 3) throw ParseError("field 'coefficients' must be [a0, a1, a2]");
      s.M = std::array<BigInt, 3>{detail::to_bigint(a[0], "coefficients"), detail::to_bigint(a[1], "coefficients"),
                                  detail::to_bigint(a[2], "coefficients")};
    }
    if (auto it = obj.find("allowNonSL3"); it != obj.end()) {
      if (!it->is_boolean()) throw ParseError("field 'allowNonSL3' must be a boolean");
      s.allowNonSL3 = it->get<bool>();
    }
    return s;
  }
  if (cls == "Torus") {
    detail::check_fields(obj, {"complexDim", "picardNumber"});
    return Torus{detail::to_count(detail::require(obj, "complexDim"), "complexDim"),
                 detail::to_count(detail::require(obj, "picardNumber"), "picardNumber")};
  }
  if (cls == "ClassVII") {
    detail::check_fields(obj, {"torsionH3"});
    return ClassVII{torsion_or_empty("torsionH3")};
  }
  if (cls == "NoncompactSmooth") {
    detail::check_fields(obj, {"torsionH3"});
    return NoncompactSmooth{torsion_or_empty("torsionH3")};
  }
  if (cls == "GlobalSphericalShell") {
    detail::check_fields(obj, {});
    return GlobalSphericalShell{};
  }
  if (cls == "Stein2D") {
    detail::check_fields(obj, {});
    return Stein2D{};
  }
  if (cls == "HolomorphicallyConvex2D") {
    detail::check_fields(obj, {});
    return HolomorphicallyConvex2D{};
  }
  throw ParseError("unknown descriptor class '" + cls + "'");
}

/// Canonical JSON form of a descriptor; parse_descriptor(to_json(d)) == d.
inline json to_json(const surfaces::SurfaceDescriptor& d, const std::string& id) {
  using namespace surfaces;
  json j;
  j["id"] = id;
  j["class"] = class_name(d);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CompactGeneric>) {
          j["b2"] = s.b2;
          j["picardNumber"] = s.picardNumber;
          j["torsionH3"] = detail::from_finite_group(s.torsionH3);
        } else if constexpr (std::is_same_v<T, Hopf>) {
          if (const auto* n = std::get_if<std::uint64_t>(&s.G)) {
            j["G"] = *n;
          } else {
            const auto& t = std::get<groupcohom::GroupTable>(s.G).table();
            j["G"] = t;
          }
          if (const auto* r = std::get_if<BigInt>(&s.extensionClass)) j["extensionClass"] = detail::from_bigint(*r);
          else j["extensionClass"] = detail::from_matrix(std::get<IntMatrix>(s.extensionClass));
        } else if constexpr (std::is_same_v<T, InoueSM>) {
          if (const auto* m = std::get_if<IntMatrix>(&s.M)) {
            j["M"] = detail::from_matrix(*m);
          } else {
            const auto& a = std::get<std::array<BigInt, 3>>(s.M);
            j["coefficients"] = json::array({detail::from_bigint(a[0]), detail::from_bigint(a[1]), detail::from_bigint(a[2])});
          }
          j["allowNonSL3"] = s.allowNonSL3;
        } else if constexpr (std::is_same_v<T, Torus>) {
          j["complexDim"] = s.complexDim;
          j["picardNumber"] = s.picardNumber;
        } else if constexpr (std::is_same_v<T, ClassVII> || std::is_same_v<T, NoncompactSmooth>) {
          j["torsionH3"] = detail::from_finite_group(s.torsionH3);
        }
      },
      d);
  return j;
}

/// Reads every JSON document in `text` and flattens it into a list of
/// descriptor objects.
inline std::vector<json> read_descriptor_objects(const std::string& text) {
  std::vector<json> out;
  auto take = [&](const json& doc) {
    if (doc.is_array()) {
      for (const auto& d : doc) out.push_back(d);
    } else if (doc.is_object() && doc.contains("descriptors") && !doc.contains("class")) {
      for (const auto& [key, unused] : doc.items())
        if (key != "descriptors" && key != "results") throw ParseError("unknown top-level field '" + key + "'");
      if (!doc["descriptors"].is_array()) throw ParseError("'descriptors' must be an array");
      for (const auto& d : doc["descriptors"]) out.push_back(d);
    } else {
      out.push_back(doc);
    }
  };
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("descriptor file is empty");
  while (pos < text.size()) {
    // Parse the longest prefix that forms one JSON value.
    std::size_t consumed = 0;
    json doc;
    try {
      std::istringstream in(text.substr(pos));
      in >> doc;
      consumed = in.eof() ? text.size() - pos : static_cast<std::size_t>(in.tellg());
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    take(doc);
    pos += consumed;
    skip_ws();
  }
  return out;
}

}  // namespace brauer::io
