#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into char_table, rep_ring or inertia.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "orbirr/exact_num.hpp"
#include "orbirr/perm_group.hpp"

namespace oracle {

using orbirr::BigInt;
using orbirr::BigRational;
using orbirr::Cyclotomic;
using orbirr::Perm;
using orbirr::PermGroup;

// Integer matrices, row major.
using Matrix = std::vector<std::vector<BigRational>>;

inline Matrix permutation_matrix(const Perm& p) {
  const std::size_t d = p.size();
  Matrix m(d, std::vector<BigRational>(d));
  for (std::size_t i = 0; i < d; ++i) m[p[i]][i] = 1;  // e_i -> e_p(i)
  return m;
}

/// Determinant by Gaussian elimination over Q.
inline BigRational determinant(Matrix m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const BigRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline BigRational det_one_minus(const Matrix& m) {
  Matrix a = m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = (i == j ? BigRational(1) : BigRational(0)) - m[i][j];
  }
  return determinant(a);
}

/// Trace of the k-th exterior power: sum of principal k x k minors.
inline BigRational exterior_trace(const Matrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k > n) return 0;
  BigRational total = 0;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      Matrix minor(k, std::vector<BigRational>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) minor[a][b] = m[idx[a]][idx[b]];
      }
      total += determinant(minor);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return total;
}

/// Conjugacy class sizes by explicit orbits, keyed by the lex-least member.
inline std::map<Perm, std::size_t> orbit_sizes(const PermGroup& g) {
  std::map<Perm, std::size_t> out;
  std::set<Perm> seen;
  for (const auto& x : g.elements()) {
    if (seen.contains(x)) continue;
    std::set<Perm> orbit;
    for (const auto& y : g.elements()) orbit.insert(orbirr::compose(orbirr::compose(y, x), orbirr::invert(y)));
    seen.insert(orbit.begin(), orbit.end());
    out[*orbit.begin()] = orbit.size();
  }
  return out;
}

/// c[i][j][k] = #{(x, y) : x in C_i, y in C_j, x y = rep_k}.
inline std::vector<std::vector<std::vector<long>>> class_structure_constants(const PermGroup& g) {
  const std::size_t r = g.class_count();
  std::vector<std::vector<Perm>> members(r);
  for (const auto& x : g.elements()) {
    for (std::size_t c = 0; c < r; ++c) {
      bool in = false;
      for (const auto& y : g.elements()) {
        if (orbirr::compose(orbirr::compose(y, g.classes()[c].representative), orbirr::invert(y)) == x) {
          in = true;
          break;
        }
      }
      if (in) {
        members[c].push_back(x);
        break;
      }
    }
  }
  std::vector<std::vector<std::vector<long>>> c(r, std::vector<std::vector<long>>(r, std::vector<long>(r)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& x : members[i]) {
        for (const auto& y : members[j]) {
          const Perm z = orbirr::compose(x, y);
          for (std::size_t k = 0; k < r; ++k) {
            if (z == g.classes()[k].representative) ++c[i][j][k];
          }
        }
      }
    }
  }
  return c;
}

/// Irreducible characters by exhaustive search. A candidate of degree d
/// assigns each class a multiset of d eigenvalues (roots of unity of the
/// representative's order) compatible with the power maps. It is kept when
/// its central character is multiplicative on the class algebra and its
/// norm is 1. Returns the characters as value vectors in class order.
inline std::vector<std::vector<Cyclotomic>> brute_force_table(const PermGroup& g) {
  const std::size_t r = g.class_count();
  const std::uint32_t e = g.exponent();
  const auto consts = class_structure_constants(g);

  // Class c's power classes: pw[c][m] for m in 0..e-1.
  std::vector<std::vector<std::size_t>> pw(r, std::vector<std::size_t>(e));
  for (std::size_t c = 0; c < r; ++c) {
    for (std::uint32_t m = 0; m < e; ++m) pw[c][m] = g.power_class_map(c, m);
  }

  std::vector<std::vector<Cyclotomic>> found;
  for (long d = 1; d * d <= static_cast<long>(g.order()); ++d) {
    // multisets[c]: every nondecreasing exponent list (mod e) of length d
    // using multiples of e / order(c).
    std::vector<std::vector<std::vector<std::uint32_t>>> multisets(r);
    for (std::size_t c = 0; c < r; ++c) {
      const std::uint32_t o = g.classes()[c].rep_order;
      const std::uint32_t step = e / o;
      std::vector<std::uint32_t> cur;
      std::function<void(std::uint32_t)> rec = [&](std::uint32_t min) {
        if (cur.size() == static_cast<std::size_t>(d)) {
          multisets[c].push_back(cur);
          return;
        }
        for (std::uint32_t t = min; t < o; ++t) {
          cur.push_back(t * step);
          rec(t);
          cur.pop_back();
        }
      };
      rec(0);
    }
    const auto powered = [&](const std::vector<std::uint32_t>& ms, std::uint32_t m) {
      std::vector<std::uint32_t> out;
      for (auto x : ms) out.push_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * m) % e));
      std::sort(out.begin(), out.end());
      return out;
    };

    std::vector<const std::vector<std::uint32_t>*> choice(r, nullptr);
    std::function<void(std::size_t)> assign = [&](std::size_t c) {
      if (c == r) {
        std::vector<Cyclotomic> chi(r);
        for (std::size_t i = 0; i < r; ++i) {
          for (auto x : *choice[i]) chi[i] += orbirr::root_of_unity(e, x);
        }
        // central character omega_i = |C_i| chi_i / d
        std::vector<Cyclotomic> omega(r);
        for (std::size_t i = 0; i < r; ++i) {
          omega[i] = chi[i] * Cyclotomic(orbirr::make_rational(static_cast<long>(g.classes()[i].size), d));
        }
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = i; j < r; ++j) {
            Cyclotomic rhs;
            for (std::size_t k = 0; k < r; ++k) {
              if (consts[i][j][k] != 0) rhs += Cyclotomic(consts[i][j][k]) * omega[k];
            }
            if (!(omega[i] * omega[j] == rhs)) return;
          }
        }
        Cyclotomic norm;
        for (std::size_t i = 0; i < r; ++i) {
          norm += Cyclotomic(static_cast<long>(g.classes()[i].size)) * chi[i] * chi[i].conjugate();
        }
        if (norm == Cyclotomic(static_cast<long>(g.order()))) found.push_back(std::move(chi));
        return;
      }
      for (const auto& ms : multisets[c]) {
        if (c == 0 && std::any_of(ms.begin(), ms.end(), [](auto x) { return x != 0; })) continue;
        bool ok = true;
        // Compatibility with every assigned class whose power lands here,
        // and with the powers of this class that are already assigned.
        for (std::size_t a = 0; a < c && ok; ++a) {
          for (std::uint32_t m = 0; m < e && ok; ++m) {
            if (pw[a][m] == c && powered(*choice[a], m) != ms) ok = false;
          }
        }
        for (std::uint32_t m = 0; m < e && ok; ++m) {
          const std::size_t t = pw[c][m];
          if (t < c && powered(ms, m) != *choice[t]) ok = false;
          if (t == c && powered(ms, m) != ms) ok = false;
        }
        if (!ok) continue;
        choice[c] = &ms;
        assign(c + 1);
      }
      choice[c] = nullptr;
    };
    assign(0);
  }
  return found;
}

/// Floor of d + sum a_j / n_j with raw (uncanonicalized) weights.
inline long coarse_floor_degree(long d, const std::vector<long>& weights, const std::vector<long>& orders) {
  BigRational total = d;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), BigInt(weights[j]).get_mpz_t(), BigInt(orders[j]).get_mpz_t());
    total += q;
  }
  return total.get_num().get_si();
}

}  // namespace oracle
