#include "orbirr/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orbirr/errors.hpp"

namespace orbirr {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 pow_mod(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

// Basis of the null space of a (rows x cols) matrix over F_p.
Mat null_space(Mat a, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const u64 inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const u64 f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + p - mul_mod(f, a[rank][k], p)) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  Mat basis;
  std::vector<bool> is_pivot(cols);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of each target vector in the given basis (target must lie in
// the span). Solves basis^T x = t by elimination on the augmented system.
Mat coordinates(const Mat& basis, const Mat& targets, u64 p) {
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().size();
  // Augmented n x (d + |targets|) matrix.
  Mat aug(n, Vec(d + targets.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < d; ++b) aug[i][b] = basis[b][i];
    for (std::size_t t = 0; t < targets.size(); ++t) aug[i][d + t] = targets[t][i];
  }
  const std::size_t width = aug.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = rank;
    while (pivot < n && aug[pivot][c] == 0) ++pivot;
    if (pivot == n) throw InternalInconsistency("degenerate eigenspace basis");
    std::swap(aug[rank], aug[pivot]);
    const u64 inv = inv_mod(aug[rank][c], p);
    for (auto& x : aug[rank]) x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || aug[r][c] == 0) continue;
      const u64 f = aug[r][c];
      for (std::size_t k = 0; k < width; ++k) aug[r][k] = (aug[r][k] + p - mul_mod(f, aug[rank][k], p)) % p;
    }
    ++rank;
  }
  Mat coords(targets.size(), Vec(d));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (std::size_t b = 0; b < d; ++b) coords[t][b] = aug[b][d + t];
  }
  return coords;
}

Vec apply(const Mat& m, const Vec& v, u64 p) {
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) acc = (acc + mul_mod(m[i][k], v[k], p)) % p;
    r[i] = acc;
  }
  return r;
}

// Splits the invariant subspace `space` into eigenspaces of `m`.
std::vector<Mat> split(const Mat& space, const Mat& m, u64 p) {
  const std::size_t d = space.size();
  Mat images;
  images.reserve(d);
  for (const auto& b : space) images.push_back(apply(m, b, p));
  // restricted[t][b]: coordinate b of m * space[t].
  const Mat restricted = coordinates(space, images, p);

  std::vector<Mat> parts;
  std::size_t found = 0;
  for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
    // (A - lambda I) acting on coordinate vectors x: A x = sum_t x_t restricted[t].
    Mat shifted(d, Vec(d));
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t t = 0; t < d; ++t) shifted[b][t] = restricted[t][b];
      shifted[b][b] = (shifted[b][b] + p - lambda) % p;
    }
    Mat kernel = null_space(std::move(shifted), d, p);
    if (kernel.empty()) continue;
    found += kernel.size();
    Mat ambient;
    for (const auto& x : kernel) {
      Vec v(space.front().size());
      for (std::size_t t = 0; t < d; ++t) {
        if (x[t] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + mul_mod(x[t], space[t][i], p)) % p;
      }
      ambient.push_back(std::move(v));
    }
    parts.push_back(std::move(ambient));
  }
  if (found != d) throw InternalInconsistency("class matrix is not diagonalizable over F_p");
  return parts;
}

}  // namespace

std::uint64_t dixon_prime(const PermGroup& group) {
  const u64 order = group.order();
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(order)));
  while (root * root < order) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= order) --root;
  const u64 exponent = group.exponent();
  u64 p = exponent + 1;
  while (p <= 2 * root || !is_prime(p)) p += exponent;
  return p;
}

CharacterTable character_table(GroupPtr group) {
  const PermGroup& g = *group;
  const std::size_t r = g.class_count();
  const u64 p = dixon_prime(g);
  const auto& classes = g.classes();

  std::vector<std::vector<std::size_t>> members(r);
  for (std::size_t x = 0; x < g.order(); ++x) members[g.class_of_index(x)].push_back(x);

  // Class matrices: mats[j][i][k] = #{(x, y) in C_j x C_i : x y = z_k}.
  std::vector<Mat> mats(r, Mat(r, Vec(r)));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      const Perm& z = classes[k].representative;
      for (std::size_t x : members[j]) {
        const std::size_t i = g.class_of(compose(invert(g.elements()[x]), z));
        mats[j][i][k] += 1;
      }
    }
    for (auto& row : mats[j]) {
      for (auto& v : row) v %= p;
    }
  }

  Mat full(r, Vec(r));
  for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
  std::vector<Mat> spaces{full};
  for (std::size_t j = 1; j < r; ++j) {
    std::vector<Mat> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& part : split(s, mats[j], p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) {
    throw InternalInconsistency("class-sum eigenspaces did not split into " + std::to_string(r) +
                                " lines");
  }

  const u64 order_mod = g.order() % p;
  const u64 omega_exp = pow_mod(primitive_root(p), (p - 1) / g.exponent(), p);
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t i = 0; i < r; ++i) inverse_class[i] = g.inverse_class(i);

  CharacterTable table;
  table.group = group;
  for (const auto& s : spaces) {
    Vec omega = s.front();
    if (omega[0] == 0) throw InternalInconsistency("central character vanishes at identity");
    const u64 scale = inv_mod(omega[0], p);
    for (auto& w : omega) w = mul_mod(w, scale, p);

    u64 norm = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const u64 term = mul_mod(mul_mod(omega[i], omega[inverse_class[i]], p), inv_mod(classes[i].size % p, p), p);
      norm = (norm + term) % p;
    }
    const u64 d_squared = mul_mod(order_mod, inv_mod(norm, p), p);
    long degree = 0;
    for (u64 d = 1; d * d <= g.order(); ++d) {
      if ((d * d) % p == d_squared) {
        degree = static_cast<long>(d);
        break;
      }
    }
    if (degree == 0) throw InternalInconsistency("no integral degree for central character");

    Vec chi_p(r);
    for (std::size_t i = 0; i < r; ++i) {
      chi_p[i] = mul_mod(mul_mod(static_cast<u64>(degree), omega[i], p), inv_mod(classes[i].size % p, p), p);
    }

    std::vector<Cyclotomic> row;
    row.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint32_t e = classes[i].rep_order;
      const u64 w = pow_mod(omega_exp, g.exponent() / e, p);
      std::vector<u64> powers(e);
      for (std::uint32_t k = 0; k < e; ++k) powers[k] = chi_p[g.power_class_map(i, k)];
      const u64 inv_e = inv_mod(e % p, p);
      std::vector<BigRational> multiplicity(e);
      for (std::uint32_t jj = 0; jj < e; ++jj) {
        const u64 w_inv = inv_mod(pow_mod(w, jj, p), p);
        u64 acc = 0;
        u64 wk = 1;
        for (std::uint32_t k = 0; k < e; ++k) {
          acc = (acc + mul_mod(powers[k], wk, p)) % p;
          wk = mul_mod(wk, w_inv, p);
        }
        const u64 m = mul_mod(acc, inv_e, p);
        if (m > static_cast<u64>(degree)) {
          throw InternalInconsistency("eigenvalue multiplicity out of range while lifting");
        }
        multiplicity[jj] = static_cast<long>(m);
      }
      row.push_back(Cyclotomic::from_exponents(e, multiplicity));
    }
    table.rows.push_back(std::move(row));
    table.degrees.push_back(degree);
  }

  long sum_squares = 0;
  for (long d : table.degrees) sum_squares += d * d;
  if (sum_squares != static_cast<long>(g.order())) {
    throw InternalInconsistency("sum of squared degrees differs from group order");
  }
  sort_rows(table);
  return table;
}

void sort_rows(CharacterTable& table) {
  // Keys at one common conductor, where the lexicographic order is total.
  std::uint32_t m = table.group->exponent();
  for (const auto& row : table.rows) {
    for (const auto& v : row) m = std::lcm(m, v.conductor());
  }
  std::vector<std::vector<Cyclotomic>> keys;
  for (const auto& row : table.rows) {
    auto& key = keys.emplace_back();
    for (const auto& v : row) key.push_back(v.lift_to(m));
  }
  std::vector<std::size_t> idx(table.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    for (std::size_t c = 0; c < keys[a].size(); ++c) {
      const int cmp = Cyclotomic::compare(keys[a][c], keys[b][c]);
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.group = table.group;
  for (auto i : idx) {
    sorted.rows.push_back(std::move(table.rows[i]));
    sorted.degrees.push_back(table.degrees[i]);
  }
  table = std::move(sorted);
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table) {
  OrthogonalityReport report;
  const PermGroup& g = *table.group;
  const std::size_t r = g.class_count();
  if (table.rows.size() != r) return report;
  for (const auto& row : table.rows) {
    if (row.size() != r) return report;
  }
  const auto& classes = g.classes();
  const BigRational order(static_cast<long>(g.order()));

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& v : table.rows[i]) conj[i].push_back(v.conjugate());
  }

  report.rows_orthonormal = true;
  for (std::size_t i = 0; i < r && report.rows_orthonormal; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < r; ++c) {
        sum += Cyclotomic(static_cast<long>(classes[c].size)) * table.rows[i][c] * conj[j][c];
      }
      if (!(sum == Cyclotomic(i == j ? order : BigRational(0)))) {
        report.rows_orthonormal = false;
        break;
      }
    }
  }

  report.columns_orthogonal = true;
  for (std::size_t c = 0; c < r && report.columns_orthogonal; ++c) {
    for (std::size_t c2 = c; c2 < r; ++c2) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < r; ++i) sum += table.rows[i][c] * conj[i][c2];
      const BigRational expected =
          c == c2 ? make_rational(static_cast<long>(g.order()), static_cast<long>(classes[c].size)) : BigRational(0);
      if (!(sum == Cyclotomic(expected))) {
        report.columns_orthogonal = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace orbirr
