#pragma once

// Riemann-Roch on classifying stacks BG: chi(BG, V) = dim V^G against the
// integral of the twisted Chern character over the inertia stack.

#include <optional>
#include <string>
#include <vector>

#include "orbirr/char_table.hpp"
#include "orbirr/inertia.hpp"
#include "orbirr/rep_ring.hpp"

namespace orbirr {

struct SectorTerm {
  std::string label;
  Cyclotomic contribution;
};

struct BgRhs {
  BigRational total;
  std::vector<SectorTerm> per_sector;
};

enum class Verdict { equal, mismatch };
const char* to_string(Verdict v);

struct HrrBgReport {
  std::string group_name;
  std::string representation;
  BigRational lhs;
  BigRational rhs;
  std::vector<SectorTerm> per_sector;
  Verdict verdict = Verdict::mismatch;
};

/// dim V^G. Throws InvalidInput when V is not an actual character.
BigRational hrr_bg_lhs(const CharacterTable& table, const ClassFunction& v);

/// sum over sectors [h] of rho(V)(1) / |Z_h|. Accepts virtual characters.
BgRhs hrr_bg_rhs(const CharacterTable& table, const std::vector<BGSector>& sectors, const ClassFunction& v);
BgRhs hrr_bg_rhs(const CharacterTable& table, const ClassFunction& v);

/// Both sides for V. A virtual V is compared through its Euler
/// characteristic, the signed sum of the invariants of its positive and
/// negative parts.
HrrBgReport verify_hrr_bg(const CharacterTable& table, const std::vector<BGSector>& sectors, const ClassFunction& v,
                          std::string representation);

/// Data showing that no multiplicative, field-valued Chern character on BG
/// can equal V -> dim V^G: a nontrivial linear character chi of order m has
/// dim chi^G = 0 while chi^(tensor m) is trivial.
struct EtaleWitness {
  std::size_t row = 0;
  ClassFunction character;
  long order = 0;  // m
  BigRational invariants_of_character;
  BigRational invariants_of_power;
};

/// First nontrivial linear character in row order, or nullopt for perfect groups.
std::optional<EtaleWitness> etale_obstruction_witness(const CharacterTable& table);

/// Topological Euler characteristic of the coarse inertia of [pt/G]: the class count.
long euler_phy_bg(const PermGroup& group);
/// 1/|G|.
BigRational euler_orb_bg(const PermGroup& group);

}  // namespace orbirr
