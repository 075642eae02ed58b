#pragma once

// JSON encodings. Complex numbers are [re, im]; exact roots of unity are
// {"root": {"num": k, "den": m}} meaning e^{2 pi i k/m}; an exact zero is 0.
//
//   group    {"name", "elements": [..], "table": [[..]]}            or "Z4" / "D8" / "Z2xZ2"
//   cocycle  {"group", "name", "entries": n x n}                    or "klein" / "d8" / "trivial:<group>"
//   rep      {"cocycle", "label", "dim", "unitary", "matrices": [d x d, ...]}
//   irrset   {"cocycle", "reps": [rep, ...]}                        (reps may omit "cocycle")
//   galpha   {"cocycle", "nu": [..]}
//   image    {"cocycle", "blocks": [{"rho", "matrix"}]}
//   frame    {"components": [{"rho", "vectors"}], "weights": [..]}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "projframe/blockdiag.hpp"
#include "projframe/builtins.hpp"
#include "projframe/cocycle.hpp"
#include "projframe/error.hpp"
#include "projframe/fourier.hpp"
#include "projframe/frames.hpp"
#include "projframe/galpha_matrix.hpp"
#include "projframe/group.hpp"
#include "projframe/repn.hpp"

namespace projframe::io {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorKind::schema_error, what); }

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::schema_error, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// --- scalars -----------------------------------------------------------------

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const RootOfUnity& r) { return {{"root", {{"num", r.num()}, {"den", r.den()}}}}; }

inline json to_json(const ExactEntry& e) { return e ? to_json(*e) : json(0); }

inline json to_json(const UnitComplex& u) { return u.is_exact() ? to_json(*u.exact()) : to_json(u.value()); }

inline bool is_root(const json& j) { return j.is_object() && j.contains("root"); }

inline RootOfUnity root_from_json(const json& j) {
  const json& r = j.at("root");
  if (r.is_array() && r.size() == 2) return RootOfUnity(r[0].get<std::int64_t>(), r[1].get<std::int64_t>());
  return RootOfUnity(r.at("num").get<std::int64_t>(), r.at("den").get<std::int64_t>());
}

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (is_root(j)) return root_from_json(j).value();
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  schema_error("expected a complex number [re, im], got " + j.dump());
}

inline UnitComplex unit_from_json(const json& j) {
  if (is_root(j)) return root_from_json(j);
  const Complex z = complex_from_json(j);
  if (z == Complex{1.0, 0.0}) return {};
  if (z == Complex{-1.0, 0.0}) return RootOfUnity::minus_one();
  return UnitComplex(z);
}

inline json to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

inline ComplexVector vector_from_json(const json& j) {
  if (!j.is_array()) schema_error("expected an array of complex numbers");
  ComplexVector v;
  for (const auto& x : j) v.push_back(complex_from_json(x));
  return v;
}

inline json to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) schema_error("expected a matrix (array of rows)");
  const std::size_t r = j.size(), c = j[0].size();
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) schema_error("matrix rows have different lengths");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

// --- group -------------------------------------------------------------------

inline json to_json(const FiniteGroup& g) {
  return {{"name", g.name()}, {"elements", g.element_names()}, {"table", g.mul_table()}};
}

inline GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  if (j.is_object() && j.contains("builtin")) return builtin_group(j.at("builtin").get<std::string>());
  if (!j.is_object() || !j.contains("table")) schema_error("group needs a \"table\"");
  try {
    auto table = j.at("table").get<std::vector<std::vector<GroupIndex>>>();
    auto names = j.value("elements", std::vector<std::string>{});
    return FiniteGroup::from_table(j.value("name", std::string("G")), std::move(table), std::move(names));
  } catch (const json::exception& e) {
    schema_error(std::string("malformed group: ") + e.what());
  }
}

// --- cocycle -----------------------------------------------------------------

inline json to_json(const Cocycle& c) {
  json entries = json::array();
  for (GroupIndex g = 0; g < c.order(); ++g) {
    json row = json::array();
    for (GroupIndex h = 0; h < c.order(); ++h) row.push_back(to_json(c.entry(g, h)));
    entries.push_back(std::move(row));
  }
  return {{"name", c.name()}, {"group", to_json(c.group())}, {"entries", std::move(entries)}};
}

inline CocyclePtr cocycle_from_json(const json& j) {
  if (j.is_string()) return builtin_cocycle(j.get<std::string>());
  if (!j.is_object()) schema_error("cocycle must be a name or an object");
  if (j.contains("builtin")) return builtin_cocycle(j.at("builtin").get<std::string>());
  if (!j.contains("group") || !j.contains("entries")) schema_error("cocycle needs \"group\" and \"entries\"");
  GroupPtr g = group_from_json(j.at("group"));
  const json& e = j.at("entries");
  const std::size_t n = g->order();
  if (!e.is_array() || e.size() != n) schema_error("cocycle entries must be an n x n array");
  std::vector<UnitComplex> t;
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != n) schema_error("cocycle entries must be an n x n array");
    for (const auto& x : row) t.push_back(unit_from_json(x));
  }
  return make_cocycle(std::move(g), std::move(t), j.value("name", std::string{}));
}

// --- representations ---------------------------------------------------------

inline json to_json(const ProjectiveRep& r, bool embed_cocycle = true) {
  json mats = json::array();
  if (r.exact()) {
    for (const auto& m : *r.exact()) {
      json rows = json::array();
      for (const auto& row : m) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(to_json(e));
        rows.push_back(std::move(jr));
      }
      mats.push_back(std::move(rows));
    }
  } else {
    for (const auto& m : r.matrices()) mats.push_back(to_json(m));
  }
  json out{{"label", r.label()}, {"dim", r.dim()}, {"unitary", r.is_unitary()}, {"matrices", std::move(mats)}};
  if (embed_cocycle) out["cocycle"] = to_json(r.cocycle());
  return out;
}

inline bool exact_entry_json(const json& x) { return is_root(x) || (x.is_number() && x.get<double>() == 0.0); }

inline ProjectiveRep rep_from_json(const json& j, CocyclePtr fallback = nullptr) {
  if (j.is_string()) return builtin_rep(j.get<std::string>());
  if (!j.is_object() || !j.contains("matrices")) schema_error("representation needs \"matrices\"");
  CocyclePtr c = j.contains("cocycle") ? cocycle_from_json(j.at("cocycle")) : fallback;
  if (!c) schema_error("representation needs a \"cocycle\"");
  const json& ms = j.at("matrices");
  if (!ms.is_array()) schema_error("\"matrices\" must be an array");
  bool exact = true;
  for (const auto& m : ms)
    for (const auto& row : m)
      for (const auto& x : row) exact = exact && exact_entry_json(x);
  const std::string label = j.value("label", std::string{});
  if (exact) {
    std::vector<ExactMatrix> em;
    for (const auto& m : ms) {
      ExactMatrix e;
      for (const auto& row : m) {
        std::vector<ExactEntry> er;
        for (const auto& x : row) er.push_back(is_root(x) ? ExactEntry(root_from_json(x)) : std::nullopt);
        e.push_back(std::move(er));
      }
      em.push_back(std::move(e));
    }
    return ProjectiveRep(std::move(c), std::move(em), label);
  }
  std::vector<ComplexMatrix> mats;
  for (const auto& m : ms) mats.push_back(matrix_from_json(m));
  return ProjectiveRep(std::move(c), std::move(mats), label);
}

inline json to_json(const IrreducibleSet& s) {
  json reps = json::array();
  for (const auto& r : s) reps.push_back(to_json(r, false));
  return {{"cocycle", to_json(s.cocycle())}, {"reps", std::move(reps)}};
}

inline IrreducibleSetPtr irrset_from_json(const json& j, CocyclePtr fallback = nullptr) {
  if (j.is_string()) return default_irreducibles(cocycle_from_json(j));
  if (!j.is_object() || !j.contains("reps")) schema_error("irreducible set needs \"reps\"");
  CocyclePtr c = j.contains("cocycle") ? cocycle_from_json(j.at("cocycle")) : fallback;
  if (!c) schema_error("irreducible set needs a \"cocycle\"");
  std::vector<ProjectiveRep> reps;
  for (const auto& r : j.at("reps")) reps.push_back(rep_from_json(r, c));
  return make_irreducible_set(c, std::move(reps));
}

// --- algebra objects ---------------------------------------------------------

inline json to_json(const GAlphaMatrix& m) { return {{"cocycle", to_json(m.cocycle())}, {"nu", to_json(m.nu())}}; }

inline GAlphaMatrix galpha_from_json(const json& j, CocyclePtr fallback = nullptr) {
  if (!j.is_object() || !j.contains("nu")) schema_error("(G,alpha)-matrix needs \"nu\"");
  CocyclePtr c = j.contains("cocycle") ? cocycle_from_json(j.at("cocycle")) : fallback;
  if (!c) schema_error("(G,alpha)-matrix needs a \"cocycle\"");
  return GAlphaMatrix(std::move(c), vector_from_json(j.at("nu")));
}

/// A function on G: a bare array, or an object with "f", "nu" or "values".
inline ComplexVector function_from_json(const json& j) {
  if (j.is_array()) return vector_from_json(j);
  for (const char* key : {"f", "nu", "values"})
    if (j.is_object() && j.contains(key)) return vector_from_json(j.at(key));
  schema_error("expected a function on G (array, or object with \"f\")");
}

inline json to_json(const FourierImage& img) {
  json blocks = json::array();
  for (std::size_t i = 0; i < img.size(); ++i)
    blocks.push_back({{"rho", img.irreducibles()[i].label()}, {"matrix", to_json(img[i])}});
  return {{"blocks", std::move(blocks)}};
}

inline FourierImage image_from_json(const json& j, const IrreducibleSetPtr& r) {
  if (!j.is_object() || !j.contains("blocks")) schema_error("Fourier image needs \"blocks\"");
  const json& b = j.at("blocks");
  if (!b.is_array() || b.size() != r->size()) schema_error("Fourier image needs one block per irreducible");
  std::vector<ComplexMatrix> blocks(r->size());
  std::vector<bool> seen(r->size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t idx = i;
    if (b[i].contains("rho")) {
      auto found = r->find(b[i].at("rho").get<std::string>());
      if (!found) schema_error("unknown irreducible label " + b[i].at("rho").dump());
      idx = *found;
    }
    if (seen[idx]) schema_error("duplicate Fourier block");
    seen[idx] = true;
    blocks[idx] = matrix_from_json(b[i].at("matrix"));
  }
  return FourierImage(r, std::move(blocks));
}

inline json to_json(const FrameVector& fv) {
  json comps = json::array(), weights = json::array();
  for (const auto& c : fv.components) {
    json vecs = json::array();
    for (const auto& v : c.vectors) vecs.push_back(to_json(v));
    comps.push_back({{"rho", c.label}, {"vectors", std::move(vecs)}});
    weights.push_back(c.weights);
  }
  return {{"components", std::move(comps)}, {"weights", std::move(weights)}};
}

inline json to_json(const ValidationReport& r) {
  json out{{"ok", r.ok}, {"message", r.message}, {"max_deviation", r.max_deviation}};
  if (!r.witness.empty()) out["witness"] = r.witness;
  return out;
}

}  // namespace projframe::io
