#include "orbirr/stacky_curve.hpp"

#include <set>

#include "orbirr/errors.hpp"
#include "orbirr/inertia.hpp"

namespace orbirr {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void StackyCurve::validate() const {
  if (genus < 0) throw InvalidInput("genus must be non-negative");
  std::set<std::string> seen;
  for (const auto& pt : points) {
    if (pt.order < 2) throw InvalidInput("stacky point '" + pt.label + "' has order < 2");
    if (pt.order > static_cast<long>(conductor_cap())) {
      throw CapExceeded("stacky point '" + pt.label + "' order exceeds conductor cap");
    }
    if (!seen.insert(pt.label).second) throw InvalidInput("duplicate stacky point label '" + pt.label + "'");
  }
}

std::size_t StackyCurve::point_index(const std::string& label) const {
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].label == label) return j;
  }
  throw InvalidInput("unknown stacky point label '" + label + "'");
}

QDivisor::QDivisor(const StackyCurve& curve) : weights_(curve.points.size(), 0) {}

QDivisor::QDivisor(const StackyCurve& curve, long free_degree, const std::map<std::string, long>& weights)
    : free_degree_(free_degree), weights_(curve.points.size(), 0) {
  for (const auto& [label, a] : weights) {
    const std::size_t j = curve.point_index(label);
    const long n = curve.points[j].order;
    free_degree_ += floor_div(a, n);
    weights_[j] = a - n * floor_div(a, n);
  }
}

std::map<std::string, long> QDivisor::weight_map(const StackyCurve& curve) const {
  std::map<std::string, long> out;
  for (std::size_t j = 0; j < curve.points.size(); ++j) out[curve.points[j].label] = weights_[j];
  return out;
}

BigRational QDivisor::degree(const StackyCurve& curve) const {
  BigRational deg(free_degree_);
  for (std::size_t j = 0; j < curve.points.size(); ++j) deg += make_rational(weights_[j], curve.points[j].order);
  return deg;
}

QDivisor QDivisor::shifted(const StackyCurve& /*curve*/, long n) const {
  QDivisor r = *this;
  r.free_degree_ += n;
  return r;
}

BigRational tangent_degree(const StackyCurve& curve) {
  BigRational t(2 - 2 * curve.genus);
  for (const auto& pt : curve.points) t -= make_rational(pt.order - 1, pt.order);
  return t;
}

QDivisor canonical_divisor(const StackyCurve& curve) {
  std::map<std::string, long> weights;
  for (const auto& pt : curve.points) weights[pt.label] = pt.order - 1;
  return QDivisor(curve, 2 * curve.genus - 2, weights);
}

QDivisor serre_dual(const StackyCurve& curve, const QDivisor& d) {
  const QDivisor k = canonical_divisor(curve);
  std::map<std::string, long> weights;
  for (std::size_t j = 0; j < curve.points.size(); ++j) weights[curve.points[j].label] = k.weight(j) - d.weight(j);
  return QDivisor(curve, k.free_degree() - d.free_degree(), weights);
}

BigRational euler_char_oracle(const StackyCurve& curve, const QDivisor& d) {
  return BigRational(1 - curve.genus + d.floor_degree());
}

Cyclotomic sector_contribution(const CurveSector& sector, const StackyCurve& curve, const QDivisor& d) {
  if (sector.kind != CurveSector::Kind::twisted) {
    throw InvalidInput("sector_contribution is defined on twisted sectors only");
  }
  const long a = d.weight(sector.point_index);
  const auto n = static_cast<std::uint32_t>(curve.points.at(sector.point_index).order);
  // Twisted Chern value zeta^(k a) times alpha^-1, pushed forward with weight 1/n.
  return sector.alpha_inverse.times_root_of_unity(n, sector.twist_index * a) * Cyclotomic(make_rational(1, n));
}

CurveHrrTerms hrr_terms(const StackyCurve& curve, const std::vector<CurveSector>& sectors, const QDivisor& d) {
  CurveHrrTerms terms;
  terms.untwisted = d.degree(curve) + (1 - curve.genus);
  for (const auto& pt : curve.points) terms.untwisted -= make_rational(pt.order - 1, 2 * pt.order);

  std::vector<Cyclotomic> per_point(curve.points.size());
  for (const auto& s : sectors) {
    if (s.kind == CurveSector::Kind::untwisted) continue;
    Cyclotomic c = sector_contribution(s, curve, d);
    per_point[s.point_index] += c;
    terms.twisted.emplace_back(s.label(), std::move(c));
  }
  terms.total = terms.untwisted;
  for (std::size_t j = 0; j < per_point.size(); ++j) {
    if (!per_point[j].is_rational()) {
      throw InternalInconsistency("twisted contributions at '" + curve.points[j].label +
                                  "' are not rational: " + per_point[j].to_string());
    }
    terms.total += per_point[j].rational_value();
  }
  if (!is_integer(terms.total)) {
    throw InternalInconsistency("Riemann-Roch integral is not an integer: " + to_string(terms.total));
  }
  return terms;
}

BigRational hrr_integral(const StackyCurve& curve, const std::vector<CurveSector>& sectors, const QDivisor& d) {
  return hrr_terms(curve, sectors, d).total;
}

BigRational hrr_integral(const StackyCurve& curve, const QDivisor& d) {
  return hrr_integral(curve, curve_sectors(curve), d);
}

BigRational euler_orb(const StackyCurve& curve) {
  BigRational e(2 - 2 * curve.genus - static_cast<long>(curve.points.size()));
  for (const auto& pt : curve.points) e += make_rational(1, pt.order);
  return e;
}

long euler_phy(const StackyCurve& curve) {
  long e = 2 - 2 * curve.genus;
  for (const auto& pt : curve.points) e += pt.order - 1;
  return e;
}

BigRational gauss_bonnet_coarse(const StackyCurve& curve) {
  const auto sectors = curve_sectors(curve);
  return hrr_integral(curve, sectors, QDivisor(curve)) - hrr_integral(curve, sectors, canonical_divisor(curve));
}

GroupQuotient from_group_action(long quotient_genus, const std::vector<long>& branch_orders, long group_order) {
  if (group_order < 1) throw InvalidInput("group order must be positive");
  if (quotient_genus < 0) throw InvalidInput("quotient genus must be non-negative");
  GroupQuotient q;
  q.curve.genus = quotient_genus;
  BigRational chi(2 - 2 * quotient_genus);
  for (std::size_t j = 0; j < branch_orders.size(); ++j) {
    const long n = branch_orders[j];
    if (n < 2 || group_order % n != 0) {
      throw InvalidInput("branch order " + std::to_string(n) + " does not divide group order " +
                         std::to_string(group_order));
    }
    q.curve.points.push_back({"x" + std::to_string(j + 1), n});
    chi -= 1 - make_rational(1, n);
  }
  q.curve.validate();
  const BigRational cover_chi = chi * group_order;
  const BigRational genus = (2 - cover_chi) / 2;
  if (!is_integer(genus) || sgn(genus) < 0) {
    throw InvalidInput("inconsistent ramification data: cover genus would be " + to_string(genus));
  }
  q.cover_genus = genus.get_num().get_si();
  return q;
}

}  // namespace orbirr
