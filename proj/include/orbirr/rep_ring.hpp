#pragma once

#include <cstddef>
#include <vector>

#include "orbirr/char_table.hpp"
#include "orbirr/exact_num.hpp"
#include "orbirr/perm_group.hpp"

namespace orbirr {

/// Cyclotomic-valued function on the conjugacy classes of a group.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;  // indexed by group->classes()

  const Cyclotomic& at(std::size_t class_index) const { return values.at(class_index); }
  /// Value at the identity class.
  const Cyclotomic& dimension() const { return values.at(0); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

/// Pointer identity, or equal order with b's generators inside a.
bool same_group(const PermGroup& a, const PermGroup& b);

ClassFunction scale(const ClassFunction& f, const Cyclotomic& factor);
ClassFunction make_class_function(GroupPtr group, std::vector<Cyclotomic> values);
ClassFunction trivial_character(GroupPtr group);
ClassFunction regular_character(GroupPtr group);
/// Fixed-point count of the natural action on {1..degree}.
ClassFunction permutation_character(GroupPtr group);
ClassFunction irreducible_character(const CharacterTable& table, std::size_t index);

/// Pointwise product. Throws GroupMismatch.
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// dim V^G = <V, 1>; throws InvalidInput if the value is not rational.
BigRational invariants_dim(const ClassFunction& v);

/// lambda^0 .. lambda^max_k of V by the Newton recursion
///   k lambda^k(g) = sum_{m=1..k} (-1)^(m-1) V(g^m) lambda^(k-m)(g).
std::vector<ClassFunction> exterior_powers(const ClassFunction& v, std::size_t max_k);
ClassFunction exterior_power(const ClassFunction& v, std::size_t k);

/// An integer combination of irreducible characters.
struct VirtualRep {
  ClassFunction character;
  std::vector<long> coordinates;  // in the row order of the table

  /// Throws InvalidInput unless every inner product with an irreducible row
  /// is a rational integer.
  static VirtualRep decompose(const CharacterTable& table, const ClassFunction& f);
  static VirtualRep from_coordinates(const CharacterTable& table, std::vector<long> coordinates);

  bool is_actual() const;
  long dimension() const;
};

/// sum_k (-1)^k lambda^k(V) for an actual character V of dimension n; the
/// value at g is det(1 - g) on V. Throws InvalidInput for virtual input.
ClassFunction lambda_minus_one(const CharacterTable& table, const ClassFunction& v);

}  // namespace orbirr
