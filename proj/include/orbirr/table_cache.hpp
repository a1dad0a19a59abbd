#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "orbirr/char_table.hpp"

namespace orbirr {

/// Serialized form: classes (1-indexed representative images, size, order)
/// and rows in the cyclotomic text syntax.
nlohmann::json table_to_json(const CharacterTable& table);

/// Rebuilds a table for `group` from its serialized form. Throws
/// InvalidInput when the document does not describe this group's classes.
/// Orthogonality is not checked here.
CharacterTable table_from_json(const GroupPtr& group, const nlohmann::json& doc);

/// "<16 hex digits>.json", from PermGroup::canonical_hash.
std::string cache_file_name(const PermGroup& group);

/// On-disk character-table cache, one JSON file per group. Entries that fail
/// to parse or fail orthogonality are recomputed and overwritten. Writes go
/// to a temporary file that is renamed into place, so readers never see a
/// partial entry. Without a directory the cache only computes.
class TableCache {
 public:
  enum class Source { computed, cached, repaired };

  explicit TableCache(std::optional<std::filesystem::path> directory = std::nullopt);

  /// ORBIRR_CACHE from the environment, if set and non-empty.
  static std::optional<std::filesystem::path> directory_from_env();

  CharacterTable get_or_compute(const GroupPtr& group);

  /// How the most recent get_or_compute on this thread was satisfied.
  static Source last_source();

  const std::optional<std::filesystem::path>& directory() const { return directory_; }

 private:
  void store(const std::filesystem::path& file, const CharacterTable& table) const;

  std::optional<std::filesystem::path> directory_;
};

}  // namespace orbirr
