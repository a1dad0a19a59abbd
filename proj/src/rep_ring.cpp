#include "orbirr/rep_ring.hpp"

#include <string>

#include "orbirr/errors.hpp"

namespace orbirr {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group || !b.group || !same_group(*a.group, *b.group)) {
    throw GroupMismatch("class functions live on different groups");
  }
}

long to_long(const BigRational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw InvalidInput("value " + to_string(q) + " is not a machine integer");
  }
  return q.get_num().get_si();
}

}  // namespace

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (&a == &b) return true;
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  for (const Perm& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  require_same_group(*this, other);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += other.values[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  require_same_group(*this, other);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] -= other.values[c];
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group || !b.group || !same_group(*a.group, *b.group)) return false;
  return a.values == b.values;
}

ClassFunction scale(const ClassFunction& f, const Cyclotomic& factor) {
  ClassFunction r = f;
  for (auto& v : r.values) v *= factor;
  return r;
}

ClassFunction make_class_function(GroupPtr group, std::vector<Cyclotomic> values) {
  if (values.size() != group->class_count()) {
    throw InvalidInput("class function has " + std::to_string(values.size()) + " values, group has " +
                       std::to_string(group->class_count()) + " classes");
  }
  return ClassFunction{std::move(group), std::move(values)};
}

ClassFunction trivial_character(GroupPtr group) {
  std::vector<Cyclotomic> values(group->class_count(), Cyclotomic(1L));
  return ClassFunction{std::move(group), std::move(values)};
}

ClassFunction regular_character(GroupPtr group) {
  std::vector<Cyclotomic> values(group->class_count());
  values[0] = Cyclotomic(static_cast<long>(group->order()));
  return ClassFunction{std::move(group), std::move(values)};
}

ClassFunction permutation_character(GroupPtr group) {
  std::vector<Cyclotomic> values;
  for (const auto& cls : group->classes()) {
    long fixed = 0;
    for (std::size_t i = 0; i < cls.representative.size(); ++i) fixed += cls.representative[i] == i;
    values.emplace_back(fixed);
  }
  return ClassFunction{std::move(group), std::move(values)};
}

ClassFunction irreducible_character(const CharacterTable& table, std::size_t index) {
  if (index >= table.size()) {
    throw InvalidInput("irreducible index " + std::to_string(index) + " out of range (" +
                       std::to_string(table.size()) + " characters)");
  }
  return ClassFunction{table.group, table.rows[index]};
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction r = a;
  for (std::size_t c = 0; c < r.values.size(); ++c) r.values[c] *= b.values[c];
  return r;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const auto& classes = a.group->classes();
  Cyclotomic sum;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += Cyclotomic(static_cast<long>(classes[c].size)) * a.values[c] * b.values[c].conjugate();
  }
  return sum * Cyclotomic(make_rational(1, static_cast<long>(a.group->order())));
}

BigRational invariants_dim(const ClassFunction& v) {
  return inner_product(v, trivial_character(v.group)).rational_value();
}

std::vector<ClassFunction> exterior_powers(const ClassFunction& v, std::size_t max_k) {
  const PermGroup& g = *v.group;
  const std::size_t r = g.class_count();
  // power_values[m][c] = V(g_c^m)
  std::vector<std::vector<Cyclotomic>> power_values(max_k + 1);
  for (std::size_t m = 1; m <= max_k; ++m) {
    for (std::size_t c = 0; c < r; ++c) power_values[m].push_back(v.values[g.power_class_map(c, static_cast<long>(m))]);
  }
  std::vector<ClassFunction> lambdas{trivial_character(v.group)};
  for (std::size_t k = 1; k <= max_k; ++k) {
    ClassFunction next{v.group, std::vector<Cyclotomic>(r)};
    for (std::size_t c = 0; c < r; ++c) {
      Cyclotomic acc;
      for (std::size_t m = 1; m <= k; ++m) {
        Cyclotomic term = power_values[m][c] * lambdas[k - m].values[c];
        if (m % 2 == 0) term = -term;
        acc += term;
      }
      next.values[c] = acc * Cyclotomic(make_rational(1, static_cast<long>(k)));
    }
    lambdas.push_back(std::move(next));
  }
  return lambdas;
}

ClassFunction exterior_power(const ClassFunction& v, std::size_t k) { return exterior_powers(v, k).back(); }

VirtualRep VirtualRep::decompose(const CharacterTable& table, const ClassFunction& f) {
  if (!same_group(*table.group, *f.group)) throw GroupMismatch("character table and class function differ in group");
  VirtualRep rep{f, {}};
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Cyclotomic m = inner_product(f, irreducible_character(table, i));
    if (!m.is_rational() || !is_integer(m.rational_value())) {
      throw InvalidInput("not a virtual character: multiplicity of irreducible " + std::to_string(i) + " is " +
                         m.to_string());
    }
    rep.coordinates.push_back(to_long(m.rational_value()));
  }
  return rep;
}

VirtualRep VirtualRep::from_coordinates(const CharacterTable& table, std::vector<long> coordinates) {
  if (coordinates.size() != table.size()) throw InvalidInput("coordinate vector length differs from table size");
  ClassFunction sum{table.group, std::vector<Cyclotomic>(table.group->class_count())};
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (coordinates[i] != 0) sum += scale(irreducible_character(table, i), Cyclotomic(coordinates[i]));
  }
  return VirtualRep{std::move(sum), std::move(coordinates)};
}

bool VirtualRep::is_actual() const {
  for (long c : coordinates) {
    if (c < 0) return false;
  }
  return true;
}

long VirtualRep::dimension() const { return to_long(character.dimension().rational_value()); }

ClassFunction lambda_minus_one(const CharacterTable& table, const ClassFunction& v) {
  const VirtualRep rep = VirtualRep::decompose(table, v);
  if (!rep.is_actual()) throw InvalidInput("lambda_{-1} requires an actual representation");
  const auto n = static_cast<std::size_t>(rep.dimension());
  const auto lambdas = exterior_powers(v, n);
  ClassFunction total{v.group, std::vector<Cyclotomic>(v.group->class_count())};
  for (std::size_t k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      total += lambdas[k];
    } else {
      total -= lambdas[k];
    }
  }
  return total;
}

}  // namespace orbirr
