#pragma once

// JSON interchange for partitions:
//   {"n": <num_vertices>, "colors": [..] (optional), "chords": [[i,j],...]}
// with chords sorted ascending.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppart/core.hpp"

namespace ppart {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Partition& p,
                            const ColoredPolygon* poly = nullptr) {
  ordered_json j;
  j["n"] = p.num_vertices();
  if (poly != nullptr) j["colors"] = poly->colors();
  ordered_json chords = ordered_json::array();
  for (const auto& [a, b] : p.chords()) chords.push_back({a, b});
  j["chords"] = std::move(chords);
  return j;
}

/// Canonical one-line form, used as graph node label and for equality.
inline std::string serialize(const Partition& p) { return to_json(p).dump(); }

inline std::string serialize(const Partition& p, const ColoredPolygon& poly) {
  return to_json(p, &poly).dump();
}

struct ParsedPartition {
  Partition partition;
  std::optional<std::vector<Color>> colors;
};

inline ParsedPartition partition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("chords"))
    throw InvalidPartition("partition JSON needs \"n\" and \"chords\"");
  const int n = j.at("n").get<int>();
  std::vector<Chord> chords;
  for (const auto& c : j.at("chords")) {
    if (!c.is_array() || c.size() != 2)
      throw InvalidPartition("chord must be a pair [i,j]");
    chords.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  ParsedPartition out{Partition(n, std::move(chords)), std::nullopt};
  if (j.contains("colors")) {
    out.colors = j.at("colors").get<std::vector<Color>>();
    if (static_cast<int>(out.colors->size()) != n)
      throw InvalidPartition("colors length differs from n");
  }
  return out;
}

inline ParsedPartition parse_partition(const std::string& text) {
  return partition_from_json(nlohmann::json::parse(text));
}

}  // namespace ppart
