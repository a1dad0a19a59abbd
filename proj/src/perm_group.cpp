#include "orbirr/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbirr/errors.hpp"

namespace orbirr {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm perm_power(const Perm& p, long e) {
  Perm base = e < 0 ? invert(p) : p;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Perm result = identity_perm(p.size());
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

std::uint32_t perm_order(const Perm& p) {
  std::vector<bool> seen(p.size());
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<std::uint32_t>(order);
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size());
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j + 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name,
                     std::size_t cap)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  if (degree_ == 0) throw InvalidInput("permutation degree must be positive");
  if (degree_ > 0xFFFF) throw InvalidInput("permutation degree too large");
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const Perm& p = generators_[g];
    if (p.size() != degree_) {
      throw InvalidInput("generator " + std::to_string(g) + " has length " +
                         std::to_string(p.size()) + ", expected " + std::to_string(degree_));
    }
    std::vector<bool> hit(degree_);
    for (auto v : p) {
      if (v >= degree_ || hit[v]) {
        throw InvalidInput("generator " + std::to_string(g) + " is not a permutation");
      }
      hit[v] = true;
    }
  }
  enumerate(cap);
  build_classes();
}

PermGroup PermGroup::from_elements(std::size_t degree, std::span<const Perm> elements,
                                   std::string name) {
  std::vector<Perm> gens;
  PermGroup partial;
  partial.degree_ = degree;
  partial.enumerate(elements.size());
  for (const Perm& x : elements) {
    if (partial.contains(x)) continue;
    gens.push_back(x);
    partial.generators_ = gens;
    partial.elements_.clear();
    partial.index_.clear();
    partial.enumerate(elements.size());
  }
  PermGroup g(degree, std::move(gens), std::move(name), elements.size());
  if (g.order() != elements.size()) {
    throw InvalidInput("element list is not closed under multiplication");
  }
  return g;
}

void PermGroup::enumerate(std::size_t cap) {
  Perm id = identity_perm(degree_);
  elements_.push_back(id);
  index_.emplace(std::move(id), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const Perm& g : generators_) {
      Perm next = compose(g, elements_[head]);
      if (index_.contains(next)) continue;
      if (elements_.size() >= cap) {
        throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      }
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
    }
  }
}

void PermGroup::build_classes() {
  const std::size_t n = elements_.size();
  std::vector<Perm> inverses(n);
  for (std::size_t i = 0; i < n; ++i) inverses[i] = invert(elements_[i]);

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnassigned);
  std::vector<ConjClass> raw;
  for (std::size_t x = 0; x < n; ++x) {
    if (raw_class[x] != kUnassigned) continue;
    const std::size_t id = raw.size();
    ConjClass cls;
    cls.representative = elements_[x];
    for (std::size_t g = 0; g < n; ++g) {
      const Perm conj = compose(compose(elements_[g], elements_[x]), inverses[g]);
      const std::size_t j = index_.at(conj);
      if (raw_class[j] == kUnassigned) {
        raw_class[j] = id;
        ++cls.size;
        if (conj < cls.representative) cls.representative = conj;
      }
    }
    cls.rep_order = perm_order(cls.representative);
    raw.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ConjClass& ca = raw[a];
    const ConjClass& cb = raw[b];
    if ((ca.rep_order == 1) != (cb.rep_order == 1)) return ca.rep_order == 1;
    if (ca.rep_order != cb.rep_order) return ca.rep_order > cb.rep_order;
    if (ca.size != cb.size) return ca.size > cb.size;
    return ca.representative < cb.representative;
  });
  std::vector<std::size_t> new_index(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;

  classes_.clear();
  for (std::size_t i : order) classes_.push_back(std::move(raw[i]));
  class_of_element_.resize(n);
  for (std::size_t x = 0; x < n; ++x) class_of_element_[x] = new_index[raw_class[x]];

  exponent_ = 1;
  for (auto& cls : classes_) {
    exponent_ = std::lcm(exponent_, cls.rep_order);
    for (const Perm& g : elements_) {
      if (compose(g, cls.representative) == compose(cls.representative, g)) {
        cls.centralizer.push_back(g);
      }
    }
  }
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t PermGroup::class_of(const Perm& p) const {
  auto idx = index_of(p);
  if (!idx) throw InvalidInput("permutation " + cycle_string(p) + " is not in the group");
  return class_of_element_[*idx];
}

std::size_t PermGroup::power_class_map(std::size_t class_index, long exponent) const {
  if (class_index >= classes_.size()) throw InvalidInput("class index out of range");
  return class_of(perm_power(classes_[class_index].representative, exponent));
}

std::uint64_t PermGroup::canonical_hash() const {
  std::vector<Perm> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(degree_);
  for (const Perm& p : sorted) {
    for (auto v : p) mix(v);
  }
  return h;
}

std::vector<std::size_t> class_fusion(const PermGroup& group, const PermGroup& subgroup) {
  if (group.degree() != subgroup.degree()) throw InvalidInput("subgroup degree differs from group degree");
  for (const Perm& g : subgroup.generators()) {
    if (!group.contains(g)) throw InvalidInput("subgroup generator " + cycle_string(g) + " not in group");
  }
  std::vector<std::size_t> fusion;
  fusion.reserve(subgroup.class_count());
  for (const auto& cls : subgroup.classes()) fusion.push_back(group.class_of(cls.representative));
  return fusion;
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group order must be positive");
  if (n == 1) return trivial_group();
  Perm c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  return PermGroup(n, {c}, "C" + std::to_string(n));
}

PermGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral parameter must be positive");
  const std::string name = "D" + std::to_string(n);
  if (n == 1) return PermGroup(2, {Perm{1, 0}}, name);
  if (n == 2) return PermGroup(4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}}, name);
  Perm rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return PermGroup(n, {rot, refl}, name);
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw InvalidInput("symmetric group degree must be positive");
  const std::string name = "S" + std::to_string(n);
  if (n == 1) return PermGroup(1, {}, name);
  Perm swap = identity_perm(n), cycle(n);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint16_t>((i + 1) % n);
  return PermGroup(n, {swap, cycle}, name);
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0) throw InvalidInput("alternating group degree must be positive");
  const std::string name = "A" + std::to_string(n);
  if (n < 3) return PermGroup(n, {}, name);
  // 3-cycles (1 2 k) generate A_n.
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Perm p = identity_perm(n);
    p[0] = 1;
    p[1] = static_cast<std::uint16_t>(k);
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return PermGroup(n, std::move(gens), name);
}

PermGroup quaternion_group() {
  // Elements 1,i,j,k,-1,-i,-j,-k as points 0..7; generators are left
  // multiplication by i and by j.
  const Perm left_i{1, 4, 3, 6, 5, 0, 7, 2};
  const Perm left_j{2, 7, 4, 1, 6, 3, 0, 5};
  return PermGroup(8, {left_i, left_j}, "Q8");
}

PermGroup trivial_group() { return PermGroup(1, {}, "C1"); }

}  // namespace orbirr
