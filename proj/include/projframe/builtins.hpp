#pragma once

// Named groups, cocycles, representations and default irreducible sets.
//   groups:    Z<n>, Z2xZ2, D<2m>
//   cocycles:  klein, d8, trivial:<group>
//   reps:      klein.rho, klein.rho_tilde, d8.rho1, d8.rho2, regular:<cocycle>

#include <optional>
#include <string>
#include <vector>

#include "projframe/cocycle.hpp"
#include "projframe/error.hpp"
#include "projframe/group.hpp"
#include "projframe/repn.hpp"

namespace projframe {

namespace detail {
inline std::optional<std::size_t> parse_suffix(const std::string& s, const std::string& prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = prefix.size(); i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  return v;
}
}  // namespace detail

inline GroupPtr builtin_group(const std::string& name) {
  if (name == "Z2xZ2" || name == "klein") return make_klein_four();
  if (auto n = detail::parse_suffix(name, "Z")) return make_cyclic(*n);
  if (auto n = detail::parse_suffix(name, "D")) {
    if (*n == 0 || *n % 2 != 0) throw Error(ErrorKind::invalid_order, "dihedral group order must be even and positive");
    return make_dihedral(*n / 2);
  }
  throw Error(ErrorKind::invalid_input, "unknown built-in group '" + name + "'");
}

inline CocyclePtr builtin_cocycle(const std::string& name) {
  if (name == "klein") return klein_cocycle();
  if (name == "d8") return dihedral_cocycle(4);
  if (name.rfind("trivial:", 0) == 0) return trivial_cocycle(builtin_group(name.substr(8)));
  throw Error(ErrorKind::invalid_input, "unknown built-in cocycle '" + name + "'");
}

inline std::vector<std::string> builtin_cocycle_names() {
  return {"klein", "d8", "trivial:Z2xZ2", "trivial:D8", "trivial:Z<n>"};
}

inline ProjectiveRep builtin_rep(const std::string& name) {
  if (name == "klein.rho") return klein_rep();
  if (name == "klein.rho_tilde") return klein_rep_tilde();
  if (name == "d8.rho1") return dihedral8_rep(1);
  if (name == "d8.rho2") return dihedral8_rep(2);
  if (name.rfind("regular:", 0) == 0) return regular_rep(builtin_cocycle(name.substr(8)));
  throw Error(ErrorKind::invalid_input, "unknown built-in representation '" + name + "'");
}

/// The library's complete set R for a cocycle it knows: the Klein and D8
/// cocycles, and the trivial cocycle on abelian or dihedral groups.
inline IrreducibleSetPtr default_irreducibles(const CocyclePtr& c) {
  const FiniteGroup& g = c->group();
  if (c->is_trivial()) {
    if (g.is_abelian()) return abelian_trivial_irreducibles(c->group_ptr());
    if (g.order() % 2 == 0 && g.order() >= 6 && same_group(g, *make_dihedral(g.order() / 2)))
      return dihedral_ordinary_irreducibles(g.order() / 2);
  }
  const CocyclePtr k = klein_cocycle();
  if (same_group(g, k->group()) && c->same_values(*k)) return klein_irreducibles();
  if (g.order() == 8) {
    const CocyclePtr d = dihedral_cocycle(4);
    if (same_group(g, d->group()) && c->same_values(*d)) return dihedral8_irreducibles();
  }
  throw Error(ErrorKind::unsupported, "no built-in irreducible set for this (group, cocycle); supply one with --irrset");
}

struct BuiltinSetting {
  std::string name;
  IrreducibleSetPtr irreducibles;
};

/// The settings exercised by the acceptance suite: Z_n (n <= 8), Z2xZ2 with both
/// cocycles, D8 with both cocycles.
inline std::vector<BuiltinSetting> builtin_settings(std::size_t max_cyclic = 8) {
  std::vector<BuiltinSetting> out;
  for (std::size_t n = 1; n <= max_cyclic; ++n)
    out.push_back({"Z" + std::to_string(n), abelian_trivial_irreducibles(make_cyclic(n))});
  out.push_back({"Z2xZ2/trivial", abelian_trivial_irreducibles(make_klein_four())});
  out.push_back({"Z2xZ2/klein", klein_irreducibles()});
  out.push_back({"D8/trivial", dihedral_ordinary_irreducibles(4)});
  out.push_back({"D8/alpha", dihedral8_irreducibles()});
  return out;
}

}  // namespace projframe
