#pragma once

// 2-cocycles alpha : G x G -> C^x, stored as an n x n table of UnitComplex.

#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projframe/error.hpp"
#include "projframe/group.hpp"
#include "projframe/numerics.hpp"
#include "projframe/roots.hpp"

namespace projframe {

class Cocycle;
using CocyclePtr = std::shared_ptr<const Cocycle>;

/// Cocycle table over a group. Construction checks only the table shape;
/// the cocycle identity is checked by `validate_cocycle`.
class Cocycle {
 public:
  Cocycle(GroupPtr group, std::vector<UnitComplex> table, std::string name = {})
      : group_(std::move(group)), table_(std::move(table)), name_(std::move(name)) {
    if (!group_) throw Error(ErrorKind::invalid_input, "cocycle without a group");
    const std::size_t n = group_->order();
    if (table_.size() != n * n)
      throw Error(ErrorKind::dimension_mismatch, "cocycle table size does not match the group order");
    exact_ = std::all_of(table_.begin(), table_.end(), [](const UnitComplex& z) { return z.is_exact(); });
    unitary_ = std::all_of(table_.begin(), table_.end(), [](const UnitComplex& z) {
      return std::abs(std::abs(z.value()) - 1.0) <= default_tolerances().unit_modulus;
    });
  }

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return group_->order(); }
  const std::string& name() const noexcept { return name_; }

  const UnitComplex& entry(GroupIndex g, GroupIndex h) const { return table_[g * order() + h]; }
  Complex operator()(GroupIndex g, GroupIndex h) const { return entry(g, h).value(); }
  const std::vector<UnitComplex>& table() const noexcept { return table_; }

  bool is_exact() const noexcept { return exact_; }
  bool is_unitary() const noexcept { return unitary_; }

  bool is_trivial(double tol = default_tolerances().validation) const {
    const UnitComplex one{};
    return std::all_of(table_.begin(), table_.end(), [&](const UnitComplex& z) { return z.equals(one, tol); });
  }

  /// Same group table and same values (exactly when both are exact).
  bool same_values(const Cocycle& other, double tol = default_tolerances().validation) const {
    if (!same_group(group(), other.group())) return false;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (!table_[i].equals(other.table_[i], tol)) return false;
    return true;
  }

 private:
  GroupPtr group_;
  std::vector<UnitComplex> table_;
  std::string name_;
  bool exact_ = true;
  bool unitary_ = true;
};

inline CocyclePtr make_cocycle(GroupPtr group, std::vector<UnitComplex> table, std::string name = {}) {
  return std::make_shared<const Cocycle>(std::move(group), std::move(table), std::move(name));
}

/// Checks alpha(x,y) alpha(xy,z) = alpha(x,yz) alpha(y,z) on all n^3 triples,
/// exactly when every entry is exact.
inline ValidationReport validate_cocycle(const Cocycle& c, const ToleranceConfig& tol = default_tolerances()) {
  const FiniteGroup& g = c.group();
  const std::size_t n = g.order();
  ValidationReport report;
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex y = 0; y < n; ++y)
      for (GroupIndex z = 0; z < n; ++z) {
        const UnitComplex lhs = c.entry(x, y) * c.entry(g.mul(x, y), z);
        const UnitComplex rhs = c.entry(x, g.mul(y, z)) * c.entry(y, z);
        const double dev = std::abs(lhs.value() - rhs.value());
        report.max_deviation = std::max(report.max_deviation, dev);
        if (report.ok && !lhs.equals(rhs, tol.validation)) {
          report.ok = false;
          report.witness = {x, y, z};
          std::ostringstream msg;
          msg << "cocycle identity fails at (x,y,z) = (" << g.element_name(x) << ", " << g.element_name(y) << ", "
              << g.element_name(z) << ")";
          report.message = msg.str();
        }
      }
  if (report.ok) report.message = "valid cocycle";
  return report;
}

inline CocyclePtr trivial_cocycle(GroupPtr group) {
  const std::size_t n = group->order();
  return make_cocycle(std::move(group), std::vector<UnitComplex>(n * n), "trivial");
}

/// beta(g,h) = c_g c_h / c_{gh}
inline CocyclePtr coboundary(GroupPtr group, const std::vector<UnitComplex>& c_map) {
  const std::size_t n = group->order();
  if (c_map.size() != n) throw Error(ErrorKind::dimension_mismatch, "coboundary map length differs from |G|");
  std::vector<UnitComplex> t;
  t.reserve(n * n);
  for (GroupIndex g = 0; g < n; ++g)
    for (GroupIndex h = 0; h < n; ++h) t.push_back(c_map[g] * c_map[h] / c_map[group->mul(g, h)]);
  return make_cocycle(std::move(group), std::move(t), "coboundary");
}

inline void require_same_group(const Cocycle& a, const Cocycle& b) {
  if (!same_group(a.group(), b.group())) throw Error(ErrorKind::group_mismatch, "cocycles live on different groups");
}

/// Pointwise product (the group law of Z^2(G, C^x)).
inline CocyclePtr multiply(const Cocycle& a, const Cocycle& b) {
  require_same_group(a, b);
  std::vector<UnitComplex> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.table()[i] * b.table()[i];
  return make_cocycle(a.group_ptr(), std::move(t));
}

/// Pointwise reciprocal 1/alpha.
inline CocyclePtr invert(const Cocycle& a) {
  std::vector<UnitComplex> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.table()[i].inverse();
  return make_cocycle(a.group_ptr(), std::move(t), a.name().empty() ? std::string{} : "inverse(" + a.name() + ")");
}

/// alpha~(a,b) = alpha(b^{-1}, a^{-1})
inline CocyclePtr tilde(const Cocycle& a) {
  const FiniteGroup& g = a.group();
  const std::size_t n = g.order();
  std::vector<UnitComplex> t;
  t.reserve(n * n);
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex y = 0; y < n; ++y) t.push_back(a.entry(g.inv(y), g.inv(x)));
  return make_cocycle(a.group_ptr(), std::move(t));
}

/// Divides by the constant coboundary c_g = alpha(1,1), giving alpha(1,1) = 1.
inline CocyclePtr normalize(const Cocycle& a) {
  const std::vector<UnitComplex> c(a.order(), a.entry(0, 0));
  const CocyclePtr beta = coboundary(a.group_ptr(), c);
  std::vector<UnitComplex> t(a.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.table()[i] / beta->table()[i];
  return make_cocycle(a.group_ptr(), std::move(t), a.name());
}

/// g is an alpha-element when alpha(g,h) = alpha(h,g) for every h in C_G(g).
inline bool is_alpha_element(const Cocycle& c, GroupIndex g, const ToleranceConfig& tol = default_tolerances()) {
  for (GroupIndex h : c.group().centralizer(g))
    if (!c.entry(g, h).equals(c.entry(h, g), tol.validation)) return false;
  return true;
}

/// Number of conjugacy classes containing an alpha-element; equals the number
/// of inequivalent irreducible projective representations for alpha.
inline std::size_t count_alpha_regular_classes(const Cocycle& c, const ToleranceConfig& tol = default_tolerances()) {
  std::size_t count = 0;
  for (const auto& cls : conjugacy_classes(c.group())) {
    for (GroupIndex g : cls) {
      if (is_alpha_element(c, g, tol)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Nontrivial cocycle on Z2 x Z2 (order 1, a, b, ab): -1 exactly at
/// (b,a), (b,ab), (ab,a), (ab,ab).
inline CocyclePtr klein_cocycle() {
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
  std::vector<UnitComplex> t;
  for (auto& row : sign)
    for (int s : row) t.emplace_back(s > 0 ? RootOfUnity::one() : RootOfUnity::minus_one());
  return make_cocycle(make_klein_four(), std::move(t), "klein");
}

/// Nontrivial cocycle on D_{2m}, m even:
///   alpha(a^j b^k, a^l b^p) = i^{k l}      when 4 | m,
///   alpha(a^j b^k, a^l b^p) = (-1)^{k l}   when m = 2 mod 4.
/// The i^{kl} formula satisfies the cocycle identity only when 4 | m.
inline CocyclePtr dihedral_cocycle(std::size_t m) {
  if (m == 0 || m % 2 != 0) throw Error(ErrorKind::invalid_input, "dihedral cocycle needs an even m");
  GroupPtr g = make_dihedral(m);
  const std::size_t n = 2 * m;
  const std::int64_t den = (m % 4 == 0) ? 4 : 2;
  std::vector<UnitComplex> t;
  t.reserve(n * n);
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex y = 0; y < n; ++y) {
      const std::int64_t k = static_cast<std::int64_t>(x / m);
      const std::int64_t l = static_cast<std::int64_t>(y % m);
      t.emplace_back(RootOfUnity(k * l, den));
    }
  return make_cocycle(std::move(g), std::move(t), "D" + std::to_string(n) + ".alpha");
}

}  // namespace projframe
