#include "fia/io.hpp"

#include <charconv>
#include <fstream>

#include "fia/errors.hpp"

namespace fia {

using nlohmann::json;

namespace {

std::string require_id(const json& j, const char* where) {
  if (!j.is_string()) {
    throw ParseError(std::string("expected a string element id in ") + where);
  }
  std::string id = j.get<std::string>();
  if (id.find('\0') != std::string::npos) {
    throw ParseError(std::string("element id contains an embedded NUL in ") + where);
  }
  return id;
}

std::optional<int> parse_builtin_size(const std::string& ref, std::string_view prefix) {
  if (ref.size() <= prefix.size() || ref.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  int n = 0;
  const char* first = ref.data() + prefix.size();
  const char* last = ref.data() + ref.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n < 0) return std::nullopt;
  return n;
}

}  // namespace

PosetPtr parse_poset_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("hasse")) {
    throw ParseError("poset document must be an object with 'elements' and 'hasse'");
  }
  if (!j["elements"].is_array() || !j["hasse"].is_array()) {
    throw ParseError("'elements' and 'hasse' must be arrays");
  }
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    elements.push_back(require_id(e, "'elements'"));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["hasse"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("'hasse' entries must be [from, to] pairs");
    }
    edges.emplace_back(require_id(e[0], "'hasse'"), require_id(e[1], "'hasse'"));
  }
  return Poset::build(std::move(elements), edges);
}

json poset_to_json(const Poset& p) {
  json elements = json::array();
  for (const auto& id : p.elements()) elements.push_back(id);
  json hasse = json::array();
  for (auto [a, b] : p.covering_pairs()) {
    hasse.push_back(json::array({p.id_of(a), p.id_of(b)}));
  }
  return json{{"elements", std::move(elements)}, {"hasse", std::move(hasse)}};
}

bool is_builtin_poset_name(const std::string& ref) {
  return ref == "diamond" || parse_builtin_size(ref, "chain:") ||
         parse_builtin_size(ref, "antichain:") || parse_builtin_size(ref, "boolean:");
}

PosetPtr builtin_poset(const std::string& ref) {
  if (ref == "diamond") return Poset::diamond();
  if (auto n = parse_builtin_size(ref, "chain:")) return Poset::chain(*n);
  if (auto n = parse_builtin_size(ref, "antichain:")) return Poset::antichain(*n);
  if (auto n = parse_builtin_size(ref, "boolean:")) return Poset::boolean_lattice(*n);
  throw ParseError("unknown builtin poset '" + ref + "'");
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw IoError("cannot open '" + file.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + file.string() + "': " + e.what());
  }
}

PosetPtr load_poset(const std::string& ref) {
  if (is_builtin_poset_name(ref)) return builtin_poset(ref);
  return parse_poset_json(read_json_file(ref));
}

Series parse_series_json(const json& j, PosetPtr poset, const Field& field) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("series document must be an object with an 'entries' array");
  }
  std::map<Segment, Scalar> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string()) {
      throw ParseError("series entries must be [x, y, value] triples");
    }
    std::string x = require_id(e[0], "'entries'");
    std::string y = require_id(e[1], "'entries'");
    Segment seg{poset->index_of(x), poset->index_of(y)};
    Scalar value = field.parse(e[2].get<std::string>());
    if (!entries.emplace(seg, std::move(value)).second) {
      throw ParseError("duplicate series entry at (" + x + ", " + y + ")");
    }
  }
  return Series::from_map(std::move(poset), field, std::move(entries));
}

LoadedSeries load_series(const std::filesystem::path& file, const Field& field) {
  json j = read_json_file(file);
  if (!j.is_object() || !j.contains("poset") || !j["poset"].is_string()) {
    throw ParseError("'" + file.string() + "': series document needs a 'poset' reference");
  }
  std::string ref = j["poset"].get<std::string>();
  PosetPtr poset;
  if (is_builtin_poset_name(ref)) {
    poset = builtin_poset(ref);
  } else {
    std::filesystem::path p(ref);
    if (p.is_relative()) p = file.parent_path() / p;
    poset = parse_poset_json(read_json_file(p));
  }
  return {parse_series_json(j, std::move(poset), field), std::move(ref)};
}

json series_entries_json(const Series& s) {
  const Poset& p = *s.poset();
  json entries = json::array();
  for (const auto& [seg, v] : s.entries()) {
    entries.push_back(json::array({p.id_of(seg.lo), p.id_of(seg.hi), v.str()}));
  }
  return entries;
}

json series_all_segments_json(const Series& s) {
  const Poset& p = *s.poset();
  json entries = json::array();
  for (Segment seg : p.segments()) {
    entries.push_back(json::array({p.id_of(seg.lo), p.id_of(seg.hi), s.at(seg.lo, seg.hi).str()}));
  }
  return entries;
}

json series_to_json(const Series& s, const std::string& poset_ref) {
  return json{{"poset", poset_ref}, {"entries", series_entries_json(s)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fia
