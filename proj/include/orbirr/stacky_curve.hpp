#pragma once

// Stacky curves, Q-divisors, and both sides of curve-level Riemann-Roch.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbirr/exact_num.hpp"

namespace orbirr {

struct CurveSector;

struct StackyPoint {
  std::string label;
  long order = 2;
};

/// Smooth proper 1-dimensional DM stack, generically a scheme: a coarse curve
/// of the given genus with stacky points of orders n_j >= 2.
struct StackyCurve {
  long genus = 0;
  std::vector<StackyPoint> points;

  /// Throws InvalidInput on negative genus, orders < 2 or duplicate labels.
  void validate() const;
  /// Index of the point with the given label; throws InvalidInput.
  std::size_t point_index(const std::string& label) const;
};

/// Line-bundle class d + sum_j (a_j / n_j) x_j, kept in canonical form
/// 0 <= a_j < n_j with the integral part carried into the free degree.
class QDivisor {
 public:
  /// Zero divisor.
  explicit QDivisor(const StackyCurve& curve);
  /// Unlisted points get weight 0. Throws InvalidInput for unknown labels.
  QDivisor(const StackyCurve& curve, long free_degree, const std::map<std::string, long>& weights);

  long free_degree() const { return free_degree_; }
  /// Canonical weights, aligned with curve.points.
  const std::vector<long>& weights() const { return weights_; }
  long weight(std::size_t point) const { return weights_.at(point); }
  std::map<std::string, long> weight_map(const StackyCurve& curve) const;

  /// d + sum a_j / n_j.
  BigRational degree(const StackyCurve& curve) const;
  /// Degree of the floor, equal to the free degree in canonical form.
  long floor_degree() const { return free_degree_; }

  /// D + n * (a free point).
  QDivisor shifted(const StackyCurve& curve, long n) const;

  friend bool operator==(const QDivisor&, const QDivisor&) = default;

 private:
  long free_degree_ = 0;
  std::vector<long> weights_;
};

/// 2 - 2g - sum_j (n_j - 1)/n_j.
BigRational tangent_degree(const StackyCurve& curve);

/// Free degree 2g - 2, weight n_j - 1 at each stacky point.
QDivisor canonical_divisor(const StackyCurve& curve);

/// K - D, canonicalized.
QDivisor serre_dual(const StackyCurve& curve, const QDivisor& d);

/// Classical Riemann-Roch on the coarse curve for the pushforward bundle:
/// 1 - g + deg floor(D).
BigRational euler_char_oracle(const StackyCurve& curve, const QDivisor& d);

/// (1/n_j) zeta^(k a_j) / (1 - zeta^(-k)) for the twisted sector (x_j, k).
/// Throws InvalidInput for the untwisted sector.
Cyclotomic sector_contribution(const CurveSector& sector, const StackyCurve& curve, const QDivisor& d);

struct CurveHrrTerms {
  BigRational untwisted;
  std::vector<std::pair<std::string, Cyclotomic>> twisted;  // sector label, contribution
  BigRational total;
};

/// Inertia-sum side of Riemann-Roch with the per-sector breakdown. The total
/// must be an integer; otherwise InternalInconsistency is thrown.
CurveHrrTerms hrr_terms(const StackyCurve& curve, const std::vector<CurveSector>& sectors, const QDivisor& d);

/// integral of Ch(L) Td over the inertia stack:
///   deg D + 1 - g - sum_j (n_j - 1)/(2 n_j) + sum over twisted sectors.
BigRational hrr_integral(const StackyCurve& curve, const QDivisor& d);
/// Same, reusing precomputed sectors of `curve`.
BigRational hrr_integral(const StackyCurve& curve, const std::vector<CurveSector>& sectors, const QDivisor& d);

/// Stratum sum (2 - 2g - r) + sum_j 1/n_j.
BigRational euler_orb(const StackyCurve& curve);

/// Topological Euler characteristic of the coarse inertia: (2 - 2g) + sum_j (n_j - 1).
long euler_phy(const StackyCurve& curve);

/// chi(O) - chi(K), the integral of lambda_{-1} of the cotangent class; equals 2 - 2g.
BigRational gauss_bonnet_coarse(const StackyCurve& curve);

struct GroupQuotient {
  StackyCurve curve;
  long cover_genus = 0;
};

/// [X/G] data from Riemann-Hurwitz: 2 - 2 g_X = |G| (2 - 2 g_M - sum (1 - 1/n_j)).
/// Throws InvalidInput on a non-dividing order or a non-integral/negative g_X.
GroupQuotient from_group_action(long quotient_genus, const std::vector<long>& branch_orders, long group_order);

}  // namespace orbirr
