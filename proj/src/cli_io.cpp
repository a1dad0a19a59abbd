#include "orbirr/cli_io.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "orbirr/errors.hpp"
#include "orbirr/inertia.hpp"
#include "orbirr/rr_engine.hpp"
#include "orbirr/table_cache.hpp"

namespace orbirr {

namespace {

[[noreturn]] void schema_error(const std::string& what, const std::string& pointer, const std::string& message) {
  throw InvalidInput(what + " at " + (pointer.empty() ? "/" : pointer) + ": " + message);
}

const json& require(const json& doc, const std::string& key, const std::string& what, const std::string& pointer) {
  if (!doc.is_object()) schema_error(what, pointer, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(what, pointer, "missing field '" + key + "'");
  return *it;
}

long require_int(const json& doc, const std::string& key, const std::string& what, const std::string& pointer) {
  const json& v = require(doc, key, what, pointer);
  if (!v.is_number_integer()) schema_error(what, pointer + "/" + key, "expected an integer");
  return v.get<long>();
}

std::string require_string(const json& doc, const std::string& key, const std::string& what,
                           const std::string& pointer) {
  const json& v = require(doc, key, what, pointer);
  if (!v.is_string()) schema_error(what, pointer + "/" + key, "expected a string");
  return v.get<std::string>();
}

Cyclotomic parse_value(const json& v, const std::string& what, const std::string& pointer) {
  if (v.is_number_integer()) return Cyclotomic(v.get<long>());
  if (!v.is_string()) schema_error(what, pointer, "expected a cyclotomic literal string");
  try {
    return Cyclotomic::parse(v.get<std::string>());
  } catch (const InvalidInput& e) {
    schema_error(what, pointer, e.what());
  }
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

json row_json(const std::vector<Cyclotomic>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json exact_rational(const BigRational& q) { return to_string(q); }

int verdict_exit(Verdict v) { return v == Verdict::equal ? 0 : 2; }

GroupPtr group_from_spec(const JobSpec& spec) {
  if (!spec.group) throw InvalidInput(spec.command + " requires --group");
  return parse_group(load_json_argument(*spec.group, "--group"), spec.group_cap);
}

StackyCurve curve_from_spec(const JobSpec& spec) {
  if (!spec.curve) throw InvalidInput(spec.command + " requires --curve");
  return parse_curve(load_json_argument(*spec.curve, "--curve"));
}

TableCache cache_from_spec(const JobSpec& spec) {
  return TableCache(spec.cache_dir ? spec.cache_dir : TableCache::directory_from_env());
}

RunResult run_chartable(const JobSpec& spec) {
  const GroupPtr group = group_from_spec(spec);
  TableCache cache = cache_from_spec(spec);
  const CharacterTable table = cache.get_or_compute(group);
  const auto orth = verify_orthogonality(table);
  json report;
  report["group"] = group_to_json(*group);
  report["prime"] = dixon_prime(*group);
  json classes = json::array();
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const auto& cls = group->classes()[c];
    classes.push_back({{"index", c},
                       {"representative", cycle_string(cls.representative)},
                       {"size", cls.size},
                       {"order", cls.rep_order},
                       {"centralizer_order", cls.centralizer.size()}});
  }
  report["classes"] = classes;
  report["degrees"] = table.degrees;
  json rows = json::array();
  for (const auto& row : table.rows) rows.push_back(row_json(row));
  report["rows"] = rows;
  report["orthogonality"] = {{"rows", orth.rows_orthonormal}, {"columns", orth.columns_orthogonal}};
  const Verdict v = orth.ok() ? Verdict::equal : Verdict::mismatch;
  report["verdict"] = to_string(v);
  return {report, verdict_exit(v)};
}

RunResult run_hrr_bg(const JobSpec& spec) {
  const GroupPtr group = group_from_spec(spec);
  if (!spec.rep) throw InvalidInput("hrr-bg requires --rep");
  const json rep_doc = load_json_argument(*spec.rep, "--rep");
  TableCache cache = cache_from_spec(spec);
  const CharacterTable table = cache.get_or_compute(group);
  const ClassFunction v = parse_rep(rep_doc, table);
  const auto sectors = inertia_of_bg(group);
  const HrrBgReport r = verify_hrr_bg(table, sectors, v, rep_doc.dump());
  json report;
  report["group"] = group_to_json(*group);
  report["rep"] = rep_doc;
  report["character"] = row_json(v.values);
  report["lhs"] = exact_rational(r.lhs);
  report["rhs"] = exact_rational(r.rhs);
  report["lhs_approx"] = r.lhs.get_d();
  report["rhs_approx"] = r.rhs.get_d();
  json per_sector = json::array();
  for (std::size_t s = 0; s < r.per_sector.size(); ++s) {
    per_sector.push_back({{"sector", r.per_sector[s].label},
                          {"centralizer_order", sectors[s].sector_group->order()},
                          {"contribution", cyclotomic_json(r.per_sector[s].contribution)}});
  }
  report["per_sector"] = per_sector;
  report["verdict"] = to_string(r.verdict);
  return {report, verdict_exit(r.verdict)};
}

RunResult run_hrr_curve(const JobSpec& spec) {
  const StackyCurve curve = curve_from_spec(spec);
  QDivisor d(curve);
  if (spec.divisor) d = parse_divisor(load_json_argument(*spec.divisor, "--divisor"), curve);
  json report;
  report["curve"] = curve_to_json(curve);
  report["divisor"] = divisor_to_json(d, curve);
  report["degree"] = exact_rational(d.degree(curve));
  const BigRational oracle = euler_char_oracle(curve, d);
  report["lhs"] = exact_rational(oracle);
  try {
    const CurveHrrTerms terms = hrr_terms(curve, curve_sectors(curve), d);
    report["rhs"] = exact_rational(terms.total);
    report["untwisted"] = exact_rational(terms.untwisted);
    json per_sector = json::array();
    for (const auto& [label, value] : terms.twisted) {
      per_sector.push_back({{"sector", label}, {"contribution", cyclotomic_json(value)}});
    }
    report["per_sector"] = per_sector;
    const Verdict v = terms.total == oracle ? Verdict::equal : Verdict::mismatch;
    report["verdict"] = to_string(v);
    return {report, verdict_exit(v)};
  } catch (const InternalInconsistency& e) {
    report["rhs"] = nullptr;
    report["error"] = e.what();
    report["verdict"] = to_string(Verdict::mismatch);
    return {report, 2};
  }
}

RunResult run_euler(const JobSpec& spec) {
  json report;
  if (spec.group) {
    const GroupPtr group = group_from_spec(spec);
    report["group"] = group_to_json(*group);
    report["euler_phy"] = euler_phy_bg(*group);
    report["euler_orb"] = exact_rational(euler_orb_bg(*group));
    return {report, 0};
  }
  const StackyCurve curve = curve_from_spec(spec);
  const BigRational tangent = tangent_degree(curve);
  const BigRational orb = euler_orb(curve);
  const BigRational gauss_bonnet = gauss_bonnet_coarse(curve);
  const long coarse = 2 - 2 * curve.genus;
  report["curve"] = curve_to_json(curve);
  report["tangent_degree"] = exact_rational(tangent);
  report["euler_orb"] = exact_rational(orb);
  report["euler_orb_approx"] = orb.get_d();
  report["euler_phy"] = euler_phy(curve);
  report["gauss_bonnet_coarse"] = exact_rational(gauss_bonnet);
  report["coarse_euler"] = coarse;
  const bool orb_ok = orb == tangent;
  const bool gb_ok = gauss_bonnet == coarse;
  report["checks"] = {{"euler_orb_equals_tangent_degree", orb_ok ? "equal" : "mismatch"},
                      {"gauss_bonnet_equals_coarse_euler", gb_ok ? "equal" : "mismatch"}};
  const Verdict v = orb_ok && gb_ok ? Verdict::equal : Verdict::mismatch;
  report["verdict"] = to_string(v);
  return {report, verdict_exit(v)};
}

RunResult run_obstruction(const JobSpec& spec) {
  const GroupPtr group = group_from_spec(spec);
  TableCache cache = cache_from_spec(spec);
  const CharacterTable table = cache.get_or_compute(group);
  json report;
  report["group"] = group_to_json(*group);
  const auto witness = etale_obstruction_witness(table);
  if (!witness) {
    report["witness"] = nullptr;
    return {report, 0};
  }
  const bool ok = sgn(witness->invariants_of_character) == 0 && witness->invariants_of_power == 1;
  report["witness"] = {{"row", witness->row},
                       {"character", row_json(witness->character.values)},
                       {"order", witness->order},
                       {"invariants_of_character", exact_rational(witness->invariants_of_character)},
                       {"invariants_of_power", exact_rational(witness->invariants_of_power)}};
  const Verdict v = ok ? Verdict::equal : Verdict::mismatch;
  report["verdict"] = to_string(v);
  return {report, verdict_exit(v)};
}

// ---------------------------------------------------------------------------
// selftest

struct CatalogEntry {
  std::string label;
  std::size_t order;
  std::function<PermGroup()> make;
};

std::vector<CatalogEntry> catalog(std::size_t max_group) {
  std::vector<CatalogEntry> all;
  for (std::size_t n = 1; n <= 12; ++n) all.push_back({"C" + std::to_string(n), n, [n] { return cyclic_group(n); }});
  all.push_back({"S3", 6, [] { return symmetric_group(3); }});
  all.push_back({"S4", 24, [] { return symmetric_group(4); }});
  all.push_back({"A4", 12, [] { return alternating_group(4); }});
  all.push_back({"D4", 8, [] { return dihedral_group(4); }});
  all.push_back({"D6", 12, [] { return dihedral_group(6); }});
  all.push_back({"Q8", 8, [] { return quaternion_group(); }});
  all.push_back({"A5", 60, [] { return alternating_group(5); }});
  std::vector<CatalogEntry> selected;
  for (auto& e : all) {
    if (e.order <= max_group) selected.push_back(std::move(e));
  }
  return selected;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  void record(bool ok) {
    ++checked;
    if (!ok) ++mismatches;
  }
  json to_json() const { return {{"checked", checked}, {"mismatches", mismatches}}; }
};

json check_group(const CatalogEntry& entry, TableCache& cache, bool perturb, std::size_t& failures) {
  const GroupPtr group = std::make_shared<const PermGroup>(entry.make());
  CharacterTable table = cache.get_or_compute(group);
  if (perturb) table.rows.at(1).at(1) += Cyclotomic(1L);

  json out;
  out["group"] = entry.label;
  out["order"] = group->order();
  out["classes"] = group->class_count();
  out["degrees"] = table.degrees;

  Tally structure;
  const auto orth = verify_orthogonality(table);
  structure.record(orth.ok());
  long sum_squares = 0;
  bool divides = true;
  for (long d : table.degrees) {
    sum_squares += d * d;
    divides = divides && static_cast<long>(group->order()) % d == 0;
  }
  structure.record(sum_squares == static_cast<long>(group->order()));
  structure.record(divides);
  ClassFunction regular_sum{group, std::vector<Cyclotomic>(group->class_count())};
  for (std::size_t i = 0; i < table.size(); ++i) {
    regular_sum += scale(irreducible_character(table, i), Cyclotomic(table.degrees[i]));
  }
  structure.record(regular_sum == regular_character(group));
  out["table"] = structure.to_json();

  const auto sectors = inertia_of_bg(group);
  Tally hrr;
  std::vector<std::pair<std::string, ClassFunction>> reps;
  for (std::size_t i = 0; i < table.size(); ++i) {
    reps.emplace_back("irreducible " + std::to_string(i), irreducible_character(table, i));
  }
  reps.emplace_back("regular", regular_character(group));
  reps.emplace_back("permutation", permutation_character(group));
  for (const auto& [name, v] : reps) {
    try {
      hrr.record(verify_hrr_bg(table, sectors, v, name).verdict == Verdict::equal);
    } catch (const Error&) {
      hrr.record(false);
    }
  }
  out["hrr"] = hrr.to_json();

  Tally projector;
  for (const auto& sector : sectors) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const ClassFunction v = irreducible_character(table, i);
      try {
        const ClassFunction rho = rho_twist(table, v, sector);
        bool ok = true;
        for (std::size_t c = 0; c < sector.sector_group->class_count(); ++c) {
          const Perm hg = compose(sector.automorphism, sector.sector_group->classes()[c].representative);
          ok = ok && rho.values[c] == v.values[group->class_of(hg)];
        }
        Cyclotomic dims;
        for (const auto& e : eigenspace_characters(table, v, sector)) dims += e.dimension();
        ok = ok && dims == v.dimension();
        projector.record(ok);
      } catch (const Error&) {
        projector.record(false);
      }
    }
  }
  out["projector"] = projector.to_json();

  Tally obstruction;
  try {
    const auto witness = etale_obstruction_witness(table);
    if (witness) {
      obstruction.record(sgn(witness->invariants_of_character) == 0 && witness->invariants_of_power == 1);
      out["witness_order"] = witness->order;
    } else {
      out["witness_order"] = nullptr;
    }
  } catch (const Error&) {
    obstruction.record(false);
  }
  out["obstruction"] = obstruction.to_json();

  failures = structure.mismatches + hrr.mismatches + projector.mismatches + obstruction.mismatches;
  return out;
}

std::vector<StackyCurve> curve_grid(long genus_max, long max_order, std::size_t max_points) {
  std::vector<StackyCurve> curves;
  std::vector<long> orders;
  std::function<void(long)> extend = [&](long min_order) {
    for (long g = 0; g <= genus_max; ++g) {
      StackyCurve c;
      c.genus = g;
      for (std::size_t j = 0; j < orders.size(); ++j) c.points.push_back({"x" + std::to_string(j + 1), orders[j]});
      curves.push_back(std::move(c));
    }
    if (orders.size() == max_points) return;
    for (long n = min_order; n <= max_order; ++n) {
      orders.push_back(n);
      extend(n);
      orders.pop_back();
    }
  };
  extend(2);
  return curves;
}

struct CurveTally {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t integrality_failures = 0;
  std::size_t orb_mismatches = 0;
  std::size_t gauss_bonnet_mismatches = 0;
};

CurveTally check_curve(const StackyCurve& curve) {
  CurveTally t;
  const auto sectors = curve_sectors(curve);
  if (euler_orb(curve) != tangent_degree(curve)) ++t.orb_mismatches;
  try {
    if (gauss_bonnet_coarse(curve) != 2 - 2 * curve.genus) ++t.gauss_bonnet_mismatches;
  } catch (const InternalInconsistency&) {
    ++t.gauss_bonnet_mismatches;
  }
  std::vector<long> weights(curve.points.size(), 0);
  while (true) {
    std::map<std::string, long> wm;
    for (std::size_t j = 0; j < weights.size(); ++j) wm[curve.points[j].label] = weights[j];
    for (long d = -3; d <= 3; ++d) {
      const QDivisor div(curve, d, wm);
      ++t.instances;
      try {
        if (hrr_integral(curve, sectors, div) != euler_char_oracle(curve, div)) ++t.mismatches;
      } catch (const InternalInconsistency&) {
        ++t.integrality_failures;
        ++t.mismatches;
      }
    }
    std::size_t j = 0;
    while (j < weights.size() && ++weights[j] == curve.points[j].order) weights[j++] = 0;
    if (j == weights.size()) break;
  }
  return t;
}

RunResult run_selftest(const JobSpec& spec) {
  TableCache cache = cache_from_spec(spec);
  const auto entries = catalog(spec.max_group);
  std::size_t perturb_index = entries.size();
  if (spec.inject_mismatch) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].label == "S3" || (perturb_index == entries.size() && entries[i].order > 1)) perturb_index = i;
    }
    if (perturb_index == entries.size()) throw InvalidInput("--inject-mismatch needs a nontrivial catalog group");
  }

  std::vector<json> group_reports(entries.size());
  std::vector<std::size_t> group_failures(entries.size());
  parallel_for(entries.size(), spec.jobs, [&](std::size_t i) {
    group_reports[i] = check_group(entries[i], cache, i == perturb_index, group_failures[i]);
  });
  std::size_t failures = 0;
  for (auto f : group_failures) failures += f;

  const auto curves = curve_grid(spec.genus_max, spec.max_order, 3);
  std::vector<CurveTally> tallies(curves.size());
  parallel_for(curves.size(), spec.jobs, [&](std::size_t i) { tallies[i] = check_curve(curves[i]); });
  CurveTally total;
  for (const auto& t : tallies) {
    total.instances += t.instances;
    total.mismatches += t.mismatches;
    total.integrality_failures += t.integrality_failures;
    total.orb_mismatches += t.orb_mismatches;
    total.gauss_bonnet_mismatches += t.gauss_bonnet_mismatches;
  }
  failures += total.mismatches + total.orb_mismatches + total.gauss_bonnet_mismatches;

  Tally e_sum;
  for (std::uint32_t n = 2; n <= 50; ++n) {
    Cyclotomic sum;
    for (long k = 1; k < static_cast<long>(n); ++k) sum += (Cyclotomic(1L) - root_of_unity(n, -k)).inverse();
    e_sum.record(sum == Cyclotomic(make_rational(static_cast<long>(n) - 1, 2)));
  }
  failures += e_sum.mismatches;

  const StackyCurve klein{0, {{"x1", 2}, {"x2", 3}, {"x3", 7}}};
  const json klein_values = {{"tangent_degree", exact_rational(tangent_degree(klein))},
                             {"euler_orb", exact_rational(euler_orb(klein))},
                             {"euler_phy", euler_phy(klein)},
                             {"gauss_bonnet_coarse", exact_rational(gauss_bonnet_coarse(klein))}};
  const bool klein_ok = tangent_degree(klein) == make_rational(-1, 42) && euler_orb(klein) == make_rational(-1, 42) &&
                        euler_phy(klein) == 11 && gauss_bonnet_coarse(klein) == 2;
  if (!klein_ok) ++failures;

  json report;
  report["options"] = {{"max_group", spec.max_group},
                       {"max_order", spec.max_order},
                       {"genus_max", spec.genus_max},
                       {"inject_mismatch", spec.inject_mismatch}};
  report["groups"] = group_reports;
  report["curves"] = {{"curves", curves.size()},
                      {"instances", total.instances},
                      {"mismatches", total.mismatches},
                      {"integrality_failures", total.integrality_failures},
                      {"euler_orb_mismatches", total.orb_mismatches},
                      {"gauss_bonnet_mismatches", total.gauss_bonnet_mismatches}};
  report["e_sum"] = e_sum.to_json();
  report["orbifold_237"] = klein_values;
  report["orbifold_237_verdict"] = klein_ok ? "equal" : "mismatch";
  report["failures"] = failures;
  const Verdict v = failures == 0 ? Verdict::equal : Verdict::mismatch;
  report["verdict"] = to_string(v);
  return {report, verdict_exit(v)};
}

}  // namespace

json load_json_argument(const std::string& argument, const std::string& what) {
  std::size_t first = argument.find_first_not_of(" \t\r\n");
  const bool inline_doc = first != std::string::npos && (argument[first] == '{' || argument[first] == '[');
  std::string text;
  if (inline_doc) {
    text = argument;
  } else {
    std::ifstream in(argument);
    if (!in) throw InvalidInput(what + ": cannot read file '" + argument + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

GroupPtr parse_group(const json& doc, std::size_t cap) {
  const std::string what = "group";
  const std::string type = require_string(doc, "type", what, "");
  const auto positive = [&](const std::string& key) {
    const long v = require_int(doc, key, what, "");
    if (v < 1) schema_error(what, "/" + key, "must be positive");
    return static_cast<std::size_t>(v);
  };
  PermGroup group = [&]() -> PermGroup {
    if (type == "permutation") {
      const std::size_t degree = positive("degree");
      const json& gens = require(doc, "generators", what, "");
      if (!gens.is_array()) schema_error(what, "/generators", "expected an array");
      std::vector<Perm> perms;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string ptr = "/generators/" + std::to_string(g);
        if (!gens[g].is_array() || gens[g].size() != degree) {
          schema_error(what, ptr, "expected " + std::to_string(degree) + " images");
        }
        Perm p;
        for (std::size_t i = 0; i < degree; ++i) {
          const json& v = gens[g][i];
          if (!v.is_number_integer() || v.get<long>() < 1 || v.get<long>() > static_cast<long>(degree)) {
            schema_error(what, ptr + "/" + std::to_string(i), "image must be an integer in 1.." + std::to_string(degree));
          }
          p.push_back(static_cast<std::uint16_t>(v.get<long>() - 1));
        }
        perms.push_back(std::move(p));
      }
      std::string name = doc.value("name", std::string{});
      try {
        return PermGroup(degree, std::move(perms), std::move(name), cap);
      } catch (const InvalidInput& e) {
        schema_error(what, "/generators", e.what());
      }
    }
    if (type == "cyclic") return cyclic_group(positive("order"));
    if (type == "dihedral") return dihedral_group(positive("n"));
    if (type == "symmetric") return symmetric_group(positive("n"));
    if (type == "alternating") return alternating_group(positive("n"));
    if (type == "quaternion") return quaternion_group();
    if (type == "trivial") return trivial_group();
    schema_error(what, "/type", "unknown group type '" + type + "'");
  }();
  if (group.order() > cap) throw CapExceeded("group order " + std::to_string(group.order()) + " exceeds cap");
  return std::make_shared<const PermGroup>(std::move(group));
}

ClassFunction parse_rep(const json& doc, const CharacterTable& table) {
  const std::string what = "rep";
  const std::string kind = require_string(doc, "kind", what, "");
  if (kind == "irreducible") {
    const long index = require_int(doc, "index", what, "");
    if (index < 0 || static_cast<std::size_t>(index) >= table.size()) {
      schema_error(what, "/index", "index out of range 0.." + std::to_string(table.size() - 1));
    }
    return irreducible_character(table, static_cast<std::size_t>(index));
  }
  if (kind == "regular") return regular_character(table.group);
  if (kind == "permutation") return permutation_character(table.group);
  if (kind == "trivial") return trivial_character(table.group);
  if (kind == "character") {
    const json& values = require(doc, "values_by_class", what, "");
    if (!values.is_array() || values.size() != table.group->class_count()) {
      schema_error(what, "/values_by_class", "expected " + std::to_string(table.group->class_count()) + " values");
    }
    std::vector<Cyclotomic> parsed;
    for (std::size_t c = 0; c < values.size(); ++c) {
      parsed.push_back(parse_value(values[c], what, "/values_by_class/" + std::to_string(c)));
    }
    ClassFunction f = make_class_function(table.group, std::move(parsed));
    try {
      VirtualRep::decompose(table, f);
    } catch (const InvalidInput& e) {
      schema_error(what, "/values_by_class", e.what());
    }
    return f;
  }
  schema_error(what, "/kind", "unknown representation kind '" + kind + "'");
}

StackyCurve parse_curve(const json& doc) {
  const std::string what = "curve";
  StackyCurve curve;
  curve.genus = require_int(doc, "genus", what, "");
  if (doc.contains("points")) {
    const json& points = doc["points"];
    if (!points.is_array()) schema_error(what, "/points", "expected an array");
    for (std::size_t j = 0; j < points.size(); ++j) {
      const std::string ptr = "/points/" + std::to_string(j);
      curve.points.push_back({require_string(points[j], "label", what, ptr), require_int(points[j], "order", what, ptr)});
    }
  }
  try {
    curve.validate();
  } catch (const InvalidInput& e) {
    schema_error(what, "", e.what());
  }
  return curve;
}

QDivisor parse_divisor(const json& doc, const StackyCurve& curve) {
  const std::string what = "divisor";
  const long free_degree = require_int(doc, "free_degree", what, "");
  std::map<std::string, long> weights;
  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_object()) schema_error(what, "/weights", "expected an object");
    for (const auto& [label, value] : w.items()) {
      if (!value.is_number_integer()) schema_error(what, "/weights/" + label, "expected an integer");
      weights[label] = value.get<long>();
    }
  }
  try {
    return QDivisor(curve, free_degree, weights);
  } catch (const InvalidInput& e) {
    schema_error(what, "/weights", e.what());
  }
}

json group_to_json(const PermGroup& group) {
  json gens = json::array();
  for (const auto& g : group.generators()) {
    json images = json::array();
    for (auto v : g) images.push_back(v + 1);
    gens.push_back(images);
  }
  return {{"name", group.name()}, {"degree", group.degree()}, {"order", group.order()}, {"generators", gens}};
}

json curve_to_json(const StackyCurve& curve) {
  json points = json::array();
  for (const auto& pt : curve.points) points.push_back({{"label", pt.label}, {"order", pt.order}});
  return {{"genus", curve.genus}, {"points", points}};
}

json divisor_to_json(const QDivisor& divisor, const StackyCurve& curve) {
  json weights = json::object();
  for (const auto& [label, a] : divisor.weight_map(curve)) weights[label] = a;
  return {{"free_degree", divisor.free_degree()}, {"weights", weights}};
}

json cyclotomic_json(const Cyclotomic& value) {
  const auto z = value.to_complex();
  return {{"exact", value.to_string()}, {"approx", {z.real(), z.imag()}}};
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

RunResult run(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  try {
    if (spec.command == "chartable") {
      result = run_chartable(spec);
    } else if (spec.command == "hrr-bg") {
      result = run_hrr_bg(spec);
    } else if (spec.command == "hrr-curve") {
      result = run_hrr_curve(spec);
    } else if (spec.command == "euler") {
      result = run_euler(spec);
    } else if (spec.command == "obstruction") {
      result = run_obstruction(spec);
    } else if (spec.command == "selftest") {
      result = run_selftest(spec);
    } else {
      throw InvalidInput("unknown command '" + spec.command + "'");
    }
  } catch (const InternalInconsistency& e) {
    result.report = {{"error", e.what()}, {"verdict", to_string(Verdict::mismatch)}};
    result.exit_code = 2;
  } catch (const Error& e) {
    result.report = {{"error", e.what()}};
    result.exit_code = 1;
  } catch (const json::exception& e) {
    result.report = {{"error", std::string("JSON error: ") + e.what()}};
    result.exit_code = 1;
  }
  json ordered;
  ordered["command"] = spec.command;
  for (auto& [key, value] : result.report.items()) ordered[key] = value;
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  ordered["timing"] = {{"elapsed_ms", elapsed.count()}};
  result.report = std::move(ordered);
  return result;
}

}  // namespace orbirr
