#include "orbirr/table_cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "orbirr/errors.hpp"

namespace orbirr {

namespace {

constexpr const char* kFormat = "orbirr-chartable-1";

thread_local TableCache::Source t_last_source = TableCache::Source::computed;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

nlohmann::json table_to_json(const CharacterTable& table) {
  const PermGroup& g = *table.group;
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["degree"] = g.degree();
  doc["order"] = g.order();
  doc["hash"] = hex64(g.canonical_hash());
  auto& classes = doc["classes"] = nlohmann::json::array();
  for (const auto& cls : g.classes()) {
    std::vector<int> images;
    for (auto v : cls.representative) images.push_back(v + 1);
    classes.push_back({{"representative", images}, {"size", cls.size}, {"order", cls.rep_order}});
  }
  auto& rows = doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    auto& out = rows.emplace_back(nlohmann::json::array());
    for (const auto& v : row) out.push_back(v.to_string());
  }
  return doc;
}

CharacterTable table_from_json(const GroupPtr& group, const nlohmann::json& doc) {
  const PermGroup& g = *group;
  try {
    if (doc.at("format") != kFormat) throw InvalidInput("unknown cache format");
    if (doc.at("degree").get<std::size_t>() != g.degree() || doc.at("order").get<std::size_t>() != g.order() ||
        doc.at("hash").get<std::string>() != hex64(g.canonical_hash())) {
      throw InvalidInput("cache entry describes a different group");
    }
    const auto& classes = doc.at("classes");
    if (classes.size() != g.class_count()) throw InvalidInput("class count mismatch");
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Perm rep;
      for (int v : classes[c].at("representative").get<std::vector<int>>()) rep.push_back(static_cast<std::uint16_t>(v - 1));
      if (rep != g.classes()[c].representative) throw InvalidInput("class representative mismatch");
    }
    CharacterTable table;
    table.group = group;
    for (const auto& row : doc.at("rows")) {
      std::vector<Cyclotomic> values;
      for (const auto& v : row) values.push_back(Cyclotomic::parse(v.get<std::string>()));
      if (values.size() != g.class_count()) throw InvalidInput("row length mismatch");
      const Cyclotomic& degree = values.front();
      if (!degree.is_rational() || !is_integer(degree.rational_value()) || sgn(degree.rational_value()) <= 0) {
        throw InvalidInput("row degree is not a positive integer");
      }
      table.degrees.push_back(degree.rational_value().get_num().get_si());
      table.rows.push_back(std::move(values));
    }
    if (table.rows.size() != g.class_count()) throw InvalidInput("row count mismatch");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed character table document: ") + e.what());
  }
}

std::string cache_file_name(const PermGroup& group) { return hex64(group.canonical_hash()) + ".json"; }

TableCache::TableCache(std::optional<std::filesystem::path> directory) : directory_(std::move(directory)) {}

std::optional<std::filesystem::path> TableCache::directory_from_env() {
  const char* env = std::getenv("ORBIRR_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

TableCache::Source TableCache::last_source() { return t_last_source; }

CharacterTable TableCache::get_or_compute(const GroupPtr& group) {
  if (!directory_) {
    t_last_source = Source::computed;
    return character_table(group);
  }
  const auto file = *directory_ / cache_file_name(*group);
  bool existed = false;
  {
    std::ifstream in(file);
    if (in) {
      existed = true;
      try {
        const auto doc = nlohmann::json::parse(in);
        CharacterTable table = table_from_json(group, doc);
        if (verify_orthogonality(table).ok()) {
          t_last_source = Source::cached;
          return table;
        }
      } catch (const nlohmann::json::exception&) {
      } catch (const Error&) {
      }
    }
  }
  CharacterTable table = character_table(group);
  store(file, table);
  t_last_source = existed ? Source::repaired : Source::computed;
  return table;
}

void TableCache::store(const std::filesystem::path& file, const CharacterTable& table) const {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
         << counter.fetch_add(1);
  const auto tmp = std::filesystem::path(file.string() + suffix.str());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // unwritable cache: serve the computed table
    out << table_to_json(table).dump(1) << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace orbirr
