#include "orbirr/inertia.hpp"

#include <numeric>

#include "orbirr/errors.hpp"

namespace orbirr {

namespace {

void require_actual(const CharacterTable& table, const ClassFunction& v) {
  if (!VirtualRep::decompose(table, v).is_actual()) {
    throw InvalidInput("eigenspace decomposition requires an actual character");
  }
}

// V(h^i g) for i = 0..m-1 and every class of Z_h; the inner index is i.
std::vector<std::vector<Cyclotomic>> twisted_samples(const ClassFunction& v, const BGSector& sector) {
  const PermGroup& g = *v.group;
  std::vector<Perm> h_powers{identity_perm(g.degree())};
  for (std::uint32_t i = 1; i < sector.order; ++i) h_powers.push_back(compose(sector.automorphism, h_powers.back()));
  std::vector<std::vector<Cyclotomic>> samples;
  for (const auto& cls : sector.sector_group->classes()) {
    std::vector<Cyclotomic> row;
    row.reserve(sector.order);
    for (const Perm& hp : h_powers) row.push_back(v.values[g.class_of(compose(hp, cls.representative))]);
    samples.push_back(std::move(row));
  }
  return samples;
}

// sum_i zeta_m^(shift_i) x_i, accumulated over x^L - 1 and reduced once.
Cyclotomic rotated_sum(std::uint32_t m, const std::vector<Cyclotomic>& xs, const std::vector<long>& shifts) {
  std::uint32_t l = m;
  for (const auto& x : xs) l = std::lcm(l, x.conductor());
  std::vector<BigRational> dense(l);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::uint32_t step = l / xs[i].conductor();
    long offset = (shifts[i] % static_cast<long>(m)) * static_cast<long>(l / m);
    if (offset < 0) offset += l;
    const auto& c = xs[i].coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (sgn(c[e]) != 0) dense[(e * step + static_cast<std::size_t>(offset)) % l] += c[e];
    }
  }
  return Cyclotomic::from_exponents(l, dense);
}

ClassFunction eigenspace_unchecked(const std::vector<std::vector<Cyclotomic>>& samples, const BGSector& sector,
                                   long j) {
  const std::uint32_t m = sector.order;
  const Cyclotomic inv_m(make_rational(1, m));
  std::vector<Cyclotomic> values;
  for (const auto& row : samples) {
    std::vector<long> shifts;
    for (std::uint32_t i = 0; i < m; ++i) shifts.push_back(-static_cast<long>(i) * j);
    values.push_back(rotated_sum(m, row, shifts) * inv_m);
  }
  return ClassFunction{sector.sector_group, std::move(values)};
}

ClassFunction rho_unchecked(const ClassFunction& v, const BGSector& sector) {
  const auto samples = twisted_samples(v, sector);
  ClassFunction total{sector.sector_group, std::vector<Cyclotomic>(sector.sector_group->class_count())};
  std::vector<ClassFunction> eigenspaces;
  for (std::uint32_t j = 0; j < sector.order; ++j) {
    eigenspaces.push_back(eigenspace_unchecked(samples, sector, j));
  }
  for (std::size_t c = 0; c < total.values.size(); ++c) {
    std::vector<Cyclotomic> xs;
    std::vector<long> shifts;
    for (std::uint32_t j = 0; j < sector.order; ++j) {
      xs.push_back(eigenspaces[j].values[c]);
      shifts.push_back(j);
    }
    total.values[c] = rotated_sum(sector.order, xs, shifts);
  }
  return total;
}

}  // namespace

std::string BGSector::label() const {
  return "[" + std::to_string(class_index) + "] " + cycle_string(automorphism);
}

std::vector<BGSector> inertia_of_bg(const GroupPtr& group) {
  std::vector<BGSector> sectors;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const ConjClass& cls = group->classes()[c];
    BGSector s;
    s.class_index = c;
    s.automorphism = cls.representative;
    s.order = cls.rep_order;
    s.sector_group = std::make_shared<const PermGroup>(PermGroup::from_elements(
        group->degree(), cls.centralizer, "Z(" + cycle_string(cls.representative) + ")"));
    s.fusion = class_fusion(*group, *s.sector_group);
    sectors.push_back(std::move(s));
  }
  return sectors;
}

ClassFunction eigenspace_character(const CharacterTable& table, const ClassFunction& v, const BGSector& sector,
                                   long j) {
  require_actual(table, v);
  return eigenspace_unchecked(twisted_samples(v, sector), sector, j);
}

std::vector<ClassFunction> eigenspace_characters(const CharacterTable& table, const ClassFunction& v,
                                                 const BGSector& sector) {
  require_actual(table, v);
  const auto samples = twisted_samples(v, sector);
  std::vector<ClassFunction> out;
  for (std::uint32_t j = 0; j < sector.order; ++j) out.push_back(eigenspace_unchecked(samples, sector, j));
  return out;
}

ClassFunction rho_twist(const CharacterTable& table, const ClassFunction& v, const BGSector& sector) {
  require_actual(table, v);
  return rho_unchecked(v, sector);
}

std::vector<ClassFunction> decompose_on_inertia(const CharacterTable& table, const ClassFunction& v,
                                                const std::vector<BGSector>& sectors) {
  const VirtualRep rep = VirtualRep::decompose(table, v);
  std::vector<long> positive, negative;
  for (long c : rep.coordinates) {
    positive.push_back(c > 0 ? c : 0);
    negative.push_back(c < 0 ? -c : 0);
  }
  const ClassFunction p = VirtualRep::from_coordinates(table, positive).character;
  const ClassFunction n = VirtualRep::from_coordinates(table, negative).character;
  std::vector<ClassFunction> out;
  for (const auto& s : sectors) out.push_back(rho_unchecked(p, s) - rho_unchecked(n, s));
  return out;
}

std::string CurveSector::label() const {
  if (kind == Kind::untwisted) return "untwisted";
  return point_label + "[k=" + std::to_string(twist_index) + "]";
}

std::vector<CurveSector> curve_sectors(const StackyCurve& curve) {
  curve.validate();
  std::vector<CurveSector> sectors(1);
  for (std::size_t j = 0; j < curve.points.size(); ++j) {
    const auto& pt = curve.points[j];
    const auto n = static_cast<std::uint32_t>(pt.order);
    for (long k = 1; k < pt.order; ++k) {
      CurveSector s;
      s.kind = CurveSector::Kind::twisted;
      s.point_label = pt.label;
      s.point_index = j;
      s.order = pt.order;
      s.twist_index = k;
      s.tangent_weight = root_of_unity(n, k);
      s.alpha = Cyclotomic(1L) - root_of_unity(n, -k);
      if (s.alpha.is_zero()) throw InternalInconsistency("conormal correction vanishes at " + s.label());
      s.alpha_inverse = s.alpha.inverse();
      sectors.push_back(std::move(s));
    }
  }
  return sectors;
}

}  // namespace orbirr
