#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbirr/perm_group.hpp"

namespace testing_catalog {

struct Entry {
  std::string label;
  orbirr::GroupPtr group;
};

/// C1..C12, S3, S4, A4, D4, D6, Q8, optionally A5.
inline std::vector<Entry> groups(bool with_a5 = false) {
  using namespace orbirr;
  std::vector<Entry> out;
  const auto add = [&](std::string label, PermGroup g) {
    out.push_back({std::move(label), std::make_shared<const PermGroup>(std::move(g))});
  };
  for (std::size_t n = 1; n <= 12; ++n) add("C" + std::to_string(n), cyclic_group(n));
  add("S3", symmetric_group(3));
  add("S4", symmetric_group(4));
  add("A4", alternating_group(4));
  add("D4", dihedral_group(4));
  add("D6", dihedral_group(6));
  add("Q8", quaternion_group());
  if (with_a5) add("A5", alternating_group(5));
  return out;
}

}  // namespace testing_catalog
