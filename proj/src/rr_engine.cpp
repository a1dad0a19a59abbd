#include "orbirr/rr_engine.hpp"

#include <numeric>

#include "orbirr/errors.hpp"

namespace orbirr {

const char* to_string(Verdict v) { return v == Verdict::equal ? "equal" : "mismatch"; }

BigRational hrr_bg_lhs(const CharacterTable& table, const ClassFunction& v) {
  if (!VirtualRep::decompose(table, v).is_actual()) {
    throw InvalidInput("dim V^G is taken of actual representations only");
  }
  return invariants_dim(v);
}

BgRhs hrr_bg_rhs(const CharacterTable& table, const std::vector<BGSector>& sectors, const ClassFunction& v) {
  const auto twisted = decompose_on_inertia(table, v, sectors);
  BgRhs rhs;
  Cyclotomic total;
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    // Twisted Chern character at the base point, pushed forward from B(Z_h)
    // to the point with weight 1/|Z_h|; the conormal is zero so alpha = 1.
    const long centralizer_order = static_cast<long>(sectors[s].sector_group->order());
    Cyclotomic term = twisted[s].dimension() * Cyclotomic(make_rational(1, centralizer_order));
    total += term;
    rhs.per_sector.push_back({sectors[s].label(), std::move(term)});
  }
  if (!total.is_rational()) {
    throw InternalInconsistency("inertia sum is not rational: " + total.to_string());
  }
  rhs.total = total.rational_value();
  return rhs;
}

BgRhs hrr_bg_rhs(const CharacterTable& table, const ClassFunction& v) {
  return hrr_bg_rhs(table, inertia_of_bg(table.group), v);
}

HrrBgReport verify_hrr_bg(const CharacterTable& table, const std::vector<BGSector>& sectors, const ClassFunction& v,
                          std::string representation) {
  HrrBgReport report;
  report.group_name = table.group->name();
  report.representation = std::move(representation);
  const VirtualRep rep = VirtualRep::decompose(table, v);
  if (rep.is_actual()) {
    report.lhs = hrr_bg_lhs(table, v);
  } else {
    std::vector<long> positive, negative;
    for (long c : rep.coordinates) {
      positive.push_back(c > 0 ? c : 0);
      negative.push_back(c < 0 ? -c : 0);
    }
    report.lhs = hrr_bg_lhs(table, VirtualRep::from_coordinates(table, positive).character) -
                 hrr_bg_lhs(table, VirtualRep::from_coordinates(table, negative).character);
  }
  BgRhs rhs = hrr_bg_rhs(table, sectors, v);
  report.rhs = rhs.total;
  report.per_sector = std::move(rhs.per_sector);
  report.verdict = report.lhs == report.rhs ? Verdict::equal : Verdict::mismatch;
  return report;
}

std::optional<EtaleWitness> etale_obstruction_witness(const CharacterTable& table) {
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table.degrees[i] != 1) continue;
    const ClassFunction chi = irreducible_character(table, i);
    std::uint32_t order = 1;
    for (const auto& value : chi.values) {
      const std::uint32_t o = root_of_unity_order(value);
      if (o == 0) throw InternalInconsistency("linear character value is not a root of unity");
      order = std::lcm(order, o);
    }
    if (order == 1) continue;  // trivial character
    ClassFunction power = chi;
    for (std::uint32_t k = 1; k < order; ++k) power = tensor(power, chi);
    return EtaleWitness{i, chi, static_cast<long>(order), invariants_dim(chi), invariants_dim(power)};
  }
  return std::nullopt;
}

long euler_phy_bg(const PermGroup& group) { return static_cast<long>(group.class_count()); }

BigRational euler_orb_bg(const PermGroup& group) { return make_rational(1, static_cast<long>(group.order())); }

}  // namespace orbirr
