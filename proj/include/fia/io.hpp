#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fia/series.hpp"

namespace fia {

/// Poset file schema: {"elements": ["a", ...], "hasse": [["a","b"], ...]}.
/// Ids are UTF-8 strings without embedded NUL.
PosetPtr parse_poset_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);  // hasse holds the covering pairs

/// True for the generator names the CLI accepts wherever a poset is
/// expected: chain:<n>, antichain:<n>, boolean:<k>, diamond.
bool is_builtin_poset_name(const std::string& ref);
PosetPtr builtin_poset(const std::string& ref);

/// Loads a poset from a builtin name or a JSON file.
PosetPtr load_poset(const std::string& ref);

/// Series file schema: {"poset": "<name-or-path>", "entries":
/// [["x","y","<scalar>"], ...]}. Omitted segments are zero; scalars use the
/// field's textual form. A relative poset path resolves against the series
/// file's directory.
struct LoadedSeries {
  Series series;
  std::string poset_ref;  // as written in the file
};
LoadedSeries load_series(const std::filesystem::path& file, const Field& field);

Series parse_series_json(const nlohmann::json& j, PosetPtr poset, const Field& field);

/// Entries array sorted by (lo, hi) in poset element order, nonzero only.
nlohmann::json series_entries_json(const Series& s);
/// Entries for every segment, zeros included (used by listing commands).
nlohmann::json series_all_segments_json(const Series& s);

nlohmann::json series_to_json(const Series& s, const std::string& poset_ref);

/// Reads and parses a JSON document; IoError on filesystem problems,
/// ParseError (with byte position) on malformed JSON.
nlohmann::json read_json_file(const std::filesystem::path& file);

/// Canonical dump: two-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace fia
