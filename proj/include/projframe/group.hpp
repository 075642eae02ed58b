#pragma once

// Finite groups as explicit multiplication tables. Index 0 is the identity.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projframe/error.hpp"

namespace projframe {

using GroupIndex = std::size_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Immutable finite group. Construct through `from_table` (validating) or the
/// named constructors below.
class FiniteGroup {
 public:
  /// Validates identity, closure, Latin-square property and associativity,
  /// then derives the inverse table. Throws Error(invalid_group) with a witness.
  static GroupPtr from_table(std::string name, std::vector<std::vector<GroupIndex>> mul_table,
                             std::vector<std::string> element_names = {}) {
    const std::size_t n = mul_table.size();
    if (n == 0) throw Error(ErrorKind::invalid_order, "group table is empty");
    for (std::size_t a = 0; a < n; ++a) {
      if (mul_table[a].size() != n)
        throw Error(ErrorKind::invalid_group, "multiplication table is not square", {a});
      for (std::size_t b = 0; b < n; ++b)
        if (mul_table[a][b] >= n) throw Error(ErrorKind::invalid_group, "table entry out of range", {a, b});
    }
    if (element_names.empty()) {
      element_names.resize(n);
      for (std::size_t i = 0; i < n; ++i) element_names[i] = std::to_string(i);
    }
    if (element_names.size() != n)
      throw Error(ErrorKind::invalid_group, "element_names length differs from the group order");

    for (std::size_t g = 0; g < n; ++g) {
      if (mul_table[0][g] != g || mul_table[g][0] != g)
        throw Error(ErrorKind::invalid_group, "index 0 does not act as the identity", {g});
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> row(n), col(n);
      for (std::size_t b = 0; b < n; ++b) {
        if (row[mul_table[a][b]]) throw Error(ErrorKind::invalid_group, "row is not a permutation", {a});
        if (col[mul_table[b][a]]) throw Error(ErrorKind::invalid_group, "column is not a permutation", {a});
        row[mul_table[a][b]] = true;
        col[mul_table[b][a]] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_table[mul_table[a][b]][c] != mul_table[a][mul_table[b][c]])
            throw Error(ErrorKind::invalid_group, "multiplication is not associative", {a, b, c});

    std::vector<GroupIndex> inv(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul_table[a][b] == 0) inv[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (mul_table[inv[a]][a] != 0) throw Error(ErrorKind::invalid_group, "left and right inverses differ", {a});

    return GroupPtr(new FiniteGroup(std::move(name), std::move(mul_table), std::move(inv), std::move(element_names)));
  }

  std::size_t order() const noexcept { return mul_.size(); }
  const std::string& name() const noexcept { return name_; }
  GroupIndex mul(GroupIndex a, GroupIndex b) const { return mul_[a][b]; }
  GroupIndex inv(GroupIndex a) const { return inv_[a]; }
  const std::vector<std::vector<GroupIndex>>& mul_table() const noexcept { return mul_; }
  const std::vector<GroupIndex>& inv_table() const noexcept { return inv_; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  const std::string& element_name(GroupIndex g) const { return names_.at(g); }

  /// h g h^{-1}
  GroupIndex conjugate(GroupIndex g, GroupIndex h) const { return mul(mul(h, g), inv(h)); }

  bool commute(GroupIndex a, GroupIndex b) const { return mul(a, b) == mul(b, a); }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a + 1; b < order(); ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  std::size_t element_order(GroupIndex g) const {
    std::size_t k = 1;
    for (GroupIndex x = g; x != 0; x = mul(x, g)) ++k;
    return k;
  }

  GroupIndex power(GroupIndex g, std::size_t k) const {
    GroupIndex x = 0;
    for (std::size_t i = 0; i < k; ++i) x = mul(x, g);
    return x;
  }

  std::vector<GroupIndex> centralizer(GroupIndex g) const {
    std::vector<GroupIndex> out;
    for (GroupIndex h = 0; h < order(); ++h)
      if (commute(g, h)) out.push_back(h);
    return out;
  }

  /// Two groups are interchangeable when their tables coincide.
  bool same_table(const FiniteGroup& other) const { return mul_ == other.mul_; }

  std::optional<GroupIndex> find(const std::string& element_name) const {
    auto it = std::find(names_.begin(), names_.end(), element_name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<GroupIndex>(it - names_.begin());
  }

 private:
  FiniteGroup(std::string name, std::vector<std::vector<GroupIndex>> mul, std::vector<GroupIndex> inv,
              std::vector<std::string> names)
      : name_(std::move(name)), mul_(std::move(mul)), inv_(std::move(inv)), names_(std::move(names)) {}

  std::string name_;
  std::vector<std::vector<GroupIndex>> mul_;
  std::vector<GroupIndex> inv_;
  std::vector<std::string> names_;
};

inline bool same_group(const FiniteGroup& a, const FiniteGroup& b) { return &a == &b || a.same_table(b); }

/// Z_n with k -> index k.
inline GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_order, "cyclic group order must be positive");
  std::vector<std::vector<GroupIndex>> t(n, std::vector<GroupIndex>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table("Z" + std::to_string(n), std::move(t), std::move(names));
}

/// G1 x G2 with (a, b) -> a + |G1| * b, i.e. the first factor varies fastest.
/// For Z2 x Z2 this gives (0,0),(1,0),(0,1),(1,1).
inline GroupPtr make_direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const std::size_t n = n1 * n2;
  std::vector<std::vector<GroupIndex>> t(n, std::vector<GroupIndex>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x % n1, b = x / n1;
    names[x] = "(" + g1.element_name(a) + "," + g2.element_name(b) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = y % n1, d = y / n1;
      t[x][y] = g1.mul(a, c) + n1 * g2.mul(b, d);
    }
  }
  return FiniteGroup::from_table(g1.name() + "x" + g2.name(), std::move(t), std::move(names));
}

/// Klein four-group Z2 x Z2 with elements named 1, a, b, ab.
inline GroupPtr make_klein_four() {
  const auto z2 = make_cyclic(2);
  const auto prod = make_direct_product(*z2, *z2);
  return FiniteGroup::from_table("Z2xZ2", prod->mul_table(), {"1", "a", "b", "ab"});
}

/// Dihedral group D_{2m} = <a, b : a^m = b^2 = 1, bab = a^{-1}>, element
/// a^j b^k at index j + m k.
inline GroupPtr make_dihedral(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::invalid_order, "dihedral parameter must be positive");
  const std::size_t n = 2 * m;
  std::vector<std::vector<GroupIndex>> t(n, std::vector<GroupIndex>(n));
  std::vector<std::string> names(n);
  auto power_name = [](std::size_t j) -> std::string {
    if (j == 0) return "";
    if (j == 1) return "a";
    return "a^" + std::to_string(j);
  };
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t j = x % m, k = x / m;
    std::string nm = power_name(j) + (k ? "b" : "");
    names[x] = nm.empty() ? "1" : nm;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t l = y % m, p = y / m;
      // a^j b^k a^l b^p = a^{j + (-1)^k l} b^{k+p}
      const std::size_t jj = k == 0 ? (j + l) % m : (j + m - l) % m;
      t[x][y] = jj + m * ((k + p) % 2);
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(n), std::move(t), std::move(names));
}

/// Conjugacy classes ordered by smallest member; each class is sorted.
inline std::vector<std::vector<GroupIndex>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n);
  std::vector<std::vector<GroupIndex>> classes;
  for (GroupIndex x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<GroupIndex> cls;
    for (GroupIndex h = 0; h < n; ++h) {
      const GroupIndex y = g.conjugate(x, h);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace projframe
