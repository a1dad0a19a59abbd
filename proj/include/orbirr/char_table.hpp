#pragma once

#include <cstdint>
#include <vector>

#include "orbirr/exact_num.hpp"
#include "orbirr/perm_group.hpp"

namespace orbirr {

/// Irreducible complex characters of a finite group with exact values.
/// Columns follow group->classes(); rows are sorted by degree, then by value
/// tuple in descending Cyclotomic::compare order (the trivial character is
/// row 0).
struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long> degrees;

  std::size_t size() const { return rows.size(); }
  const std::vector<Cyclotomic>& row(std::size_t i) const { return rows.at(i); }
};

/// Smallest prime p with p = 1 (mod exponent) and p > 2 * ceil(sqrt(order)).
std::uint64_t dixon_prime(const PermGroup& group);

/// Dixon-Burnside: class-sum matrices are simultaneously diagonalized over
/// F_p, eigenvectors normalized to characters, and each value lifted to
/// Q(zeta_e) by a discrete Fourier inversion over the powers of the class
/// representative. Throws InternalInconsistency if the eigenspaces fail to
/// split (impossible for valid input).
CharacterTable character_table(GroupPtr group);

/// Sorts rows into the canonical order described on CharacterTable.
void sort_rows(CharacterTable& table);

struct OrthogonalityReport {
  bool rows_orthonormal = false;
  bool columns_orthogonal = false;
  bool ok() const { return rows_orthonormal && columns_orthogonal; }
};

/// Exact check of both orthogonality relations:
///   (1/|G|) sum_c |c| chi_i(c) conj(chi_j(c)) = delta_ij
///   sum_i chi_i(c) conj(chi_i(c')) = delta_cc' |G| / |c|
OrthogonalityReport verify_orthogonality(const CharacterTable& table);

}  // namespace orbirr
