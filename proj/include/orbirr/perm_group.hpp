#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbirr {

/// Permutation of {0..d-1} in image notation: p[i] is the image of i.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t degree);
/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& p);
Perm perm_power(const Perm& p, long e);
std::uint32_t perm_order(const Perm& p);
bool is_identity(const Perm& p);
/// Cycle notation, 1-indexed: "()", "(1 2 3)(4 5)".
std::string cycle_string(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

struct ConjClass {
  Perm representative;  // lexicographically least element of the class
  std::size_t size = 0;
  std::vector<Perm> centralizer;
  std::uint32_t rep_order = 1;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// Finite permutation group, fully enumerated at construction together with
/// its conjugacy classes and centralizers. Immutable afterwards.
///
/// Classes are ordered: identity first, then by representative order
/// (descending), then class size (descending), then representative
/// (lexicographic). The order depends only on the group as a set.
class PermGroup {
 public:
  /// Throws InvalidInput for malformed generators, CapExceeded when the
  /// closure grows past `cap` elements.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = {},
            std::size_t cap = kDefaultGroupCap);

  /// The subgroup consisting of exactly `elements`, which must be closed
  /// under multiplication. A small generating set is chosen greedily.
  static PermGroup from_elements(std::size_t degree, std::span<const Perm> elements,
                                 std::string name = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }

  /// Every element once, identity first (breadth-first closure order).
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_.contains(p); }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  /// Class of the element with the given enumeration index.
  std::size_t class_of_index(std::size_t element_index) const { return class_of_element_[element_index]; }
  /// Throws InvalidInput if p is not in the group.
  std::size_t class_of(const Perm& p) const;

  /// Index of the class containing representative(i)^j.
  std::size_t power_class_map(std::size_t class_index, long exponent) const;
  /// Index of the class containing inverses of class i.
  std::size_t inverse_class(std::size_t class_index) const { return power_class_map(class_index, -1); }

  /// lcm of element orders.
  std::uint32_t exponent() const { return exponent_; }

  /// FNV-1a over the degree and the sorted element list; independent of
  /// the generating set.
  std::uint64_t canonical_hash() const;

 private:
  PermGroup() = default;
  void enumerate(std::size_t cap);
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::string name_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_element_;
  std::uint32_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// For each class of `subgroup`, the index of the `group` class containing
/// its representative. Throws InvalidInput unless subgroup is contained in group.
std::vector<std::size_t> class_fusion(const PermGroup& group, const PermGroup& subgroup);

// Catalog.
PermGroup cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n (n >= 3); n = 1, 2 give C_2, C_2 x C_2.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// Q_8 in its left-regular action on 8 points.
PermGroup quaternion_group();
PermGroup trivial_group();

}  // namespace orbirr
