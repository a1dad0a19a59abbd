#pragma once

// Inertia components of BG and of stacky curves, the twisting map
// V -> sum_zeta zeta * V^(zeta), and the conormal correction alpha.

#include <cstdint>
#include <string>
#include <vector>

#include "orbirr/char_table.hpp"
#include "orbirr/exact_num.hpp"
#include "orbirr/perm_group.hpp"
#include "orbirr/rep_ring.hpp"
#include "orbirr/stacky_curve.hpp"

namespace orbirr {

/// The component [pt / Z_h] of the inertia of BG.
struct BGSector {
  std::size_t class_index = 0;
  Perm automorphism;           // the class representative h
  std::uint32_t order = 1;     // order of h
  GroupPtr sector_group;       // centralizer Z_h
  std::vector<std::size_t> fusion;  // Z_h class -> G class

  std::string label() const;
};

/// One sector per conjugacy class, in class order.
std::vector<BGSector> inertia_of_bg(const GroupPtr& group);

/// Character of the zeta_m^j eigenspace of h on V, as a Z_h-representation:
///   g -> (1/m) sum_i zeta_m^(-ij) V(h^i g).
/// `table` is the character table of G. Throws InvalidInput unless V is an
/// actual character.
ClassFunction eigenspace_character(const CharacterTable& table, const ClassFunction& v, const BGSector& sector,
                                   long j);

/// All m eigenspace characters of V on the sector, j = 0..m-1.
std::vector<ClassFunction> eigenspace_characters(const CharacterTable& table, const ClassFunction& v,
                                                 const BGSector& sector);

/// sum_j zeta_m^j * eigenspace_character(V, sector, j); a class function on Z_h.
ClassFunction rho_twist(const CharacterTable& table, const ClassFunction& v, const BGSector& sector);

/// rho_twist on every sector, extended linearly to virtual characters.
std::vector<ClassFunction> decompose_on_inertia(const CharacterTable& table, const ClassFunction& v,
                                                const std::vector<BGSector>& sectors);

/// A component of the inertia of a stacky curve.
struct CurveSector {
  enum class Kind { untwisted, twisted };

  Kind kind = Kind::untwisted;
  std::string point_label;
  std::size_t point_index = 0;
  long order = 1;        // n_j
  long twist_index = 0;  // k, 1 <= k < n_j
  Cyclotomic tangent_weight{1L};  // zeta_{n_j}^k
  Cyclotomic alpha{1L};           // 1 - zeta_{n_j}^(-k), lambda_{-1} of the conormal
  Cyclotomic alpha_inverse{1L};

  /// "untwisted" or e.g. "x1[k=2]".
  std::string label() const;
};

/// The untwisted sector, then for each point in input order its twisted
/// sectors with k ascending.
std::vector<CurveSector> curve_sectors(const StackyCurve& curve);

}  // namespace orbirr
