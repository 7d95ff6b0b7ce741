// Command-line front end. Every verb maps to one library operation chain and
// emits a deterministic document: JSON by default, an aligned text table with
// --format table. Exit codes: 0 success, 1 domain errors, 2 I/O and parse
// errors.

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fia/errors.hpp"
#include "fia/io.hpp"
#include "fia/isomorphism.hpp"
#include "fia/structure.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string field_name = "q";
  std::string format = "json";
  bool debug_identities = false;
  std::uint64_t seed = 0;
};

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) out << std::string(widths[i] - row[i].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<std::string>> entry_rows(const json& entries) {
  std::vector<std::vector<std::string>> rows = {{"lo", "hi", "value"}};
  for (const auto& e : entries) {
    rows.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
  }
  return rows;
}

std::string mapping_table(const json& mapping) {
  std::vector<std::vector<std::string>> rows = {{"from", "to"}};
  for (const auto& [from, to] : mapping.items()) {
    rows.push_back({from, to.get<std::string>()});
  }
  return render_table(rows);
}

void emit(const Options& opt, const json& doc,
          const std::function<std::string(const json&)>& table) {
  if (opt.format == "table") {
    std::cout << table(doc);
  } else {
    std::cout << fia::dump_json(doc);
  }
}

std::string labeled_entry_tables(const json& doc, const std::vector<std::string>& keys) {
  std::string out;
  for (const auto& key : keys) {
    out += key + ":\n" + render_table(entry_rows(doc.at(key)));
  }
  return out;
}

int run_mobius(const Options& opt, const std::string& poset_ref) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  fia::PosetPtr p = fia::load_poset(poset_ref);
  fia::Series mu = fia::invert(fia::Series::zeta(p, field));
  json doc = {{"poset", poset_ref}, {"entries", fia::series_all_segments_json(mu)}};
  emit(opt, doc, [](const json& d) { return render_table(entry_rows(d.at("entries"))); });
  return 0;
}

int run_invert(const Options& opt, const std::string& series_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto loaded = fia::load_series(series_file, field);
  fia::Series inverse = fia::invert(loaded.series);
  emit(opt, fia::series_to_json(inverse, loaded.poset_ref),
       [](const json& d) { return render_table(entry_rows(d.at("entries"))); });
  return 0;
}

int run_multiply(const Options& opt, const std::string& left_file,
                 const std::string& right_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto left = fia::load_series(left_file, field);
  auto right = fia::load_series(right_file, field);
  fia::Series product = fia::convolve(left.series, right.series);
  emit(opt, fia::series_to_json(product, left.poset_ref),
       [](const json& d) { return render_table(entry_rows(d.at("entries"))); });
  return 0;
}

int run_radical_check(const Options& opt, const std::string& series_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto loaded = fia::load_series(series_file, field);
  json nonzero = json::array();
  const fia::Poset& p = *loaded.series.poset();
  for (int x = 0; x < p.size(); ++x) {
    if (!loaded.series.at(x, x).is_zero()) nonzero.push_back(p.id_of(x));
  }
  json doc = {{"radical", fia::is_radical(loaded.series)}, {"nonzero_diagonal", nonzero}};
  emit(opt, doc, [](const json& d) {
    std::vector<std::vector<std::string>> rows = {
        {"radical", d.at("radical").get<bool>() ? "true" : "false"}};
    std::string ids;
    for (const auto& id : d.at("nonzero_diagonal")) {
      ids += (ids.empty() ? "" : " ") + id.get<std::string>();
    }
    rows.push_back({"nonzero-diagonal", ids});
    return render_table(rows);
  });
  return 0;
}

int run_idempotent_diagonalize(const Options& opt, const std::string& series_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto loaded = fia::load_series(series_file, field);
  auto result = fia::diagonalize_idempotent(loaded.series, opt.debug_identities);
  json doc = {{"poset", loaded.poset_ref},
              {"epsilon", fia::series_entries_json(result.epsilon)},
              {"beta", fia::series_entries_json(result.conjugator)}};
  emit(opt, doc,
       [](const json& d) { return labeled_entry_tables(d, {"epsilon", "beta"}); });
  return 0;
}

int run_regular_factor(const Options& opt, const std::string& series_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto loaded = fia::load_series(series_file, field);
  auto chi = fia::inner_inverse(loaded.series);
  if (!chi) {
    json doc = {{"regular", false}};
    emit(opt, doc, [](const json&) -> std::string { return "regular  false\n"; });
    return 0;
  }
  auto fact = fia::regular_factorization(loaded.series, *chi, opt.debug_identities);
  json doc = {{"regular", true},
              {"poset", loaded.poset_ref},
              {"chi", fia::series_entries_json(*chi)},
              {"beta", fia::series_entries_json(fact.beta)},
              {"epsilon", fia::series_entries_json(fact.epsilon)},
              {"gamma", fia::series_entries_json(fact.gamma)}};
  emit(opt, doc, [](const json& d) {
    return "regular  true\n" + labeled_entry_tables(d, {"chi", "beta", "epsilon", "gamma"});
  });
  return 0;
}

int run_superregular_check(const Options& opt, const std::string& series_file) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  auto loaded = fia::load_series(series_file, field);
  const fia::Poset& p = *loaded.series.poset();
  json components = json::array();
  for (const auto& component : p.connected_components()) {
    json ids = json::array();
    bool any = false, all_diag = true;
    for (int x : component) {
      ids.push_back(p.id_of(x));
      if (loaded.series.at(x, x).is_zero()) all_diag = false;
    }
    for (const auto& [seg, v] : loaded.series.entries()) {
      if (std::binary_search(component.begin(), component.end(), seg.lo)) any = true;
    }
    std::string status = !any ? "zero" : (all_diag ? "invertible" : "mixed");
    components.push_back(json{{"elements", ids}, {"status", status}});
  }
  json doc = {{"superregular", fia::is_superregular(loaded.series)},
              {"components", components}};
  emit(opt, doc, [](const json& d) {
    std::vector<std::vector<std::string>> rows = {{"component", "status"}};
    for (const auto& c : d.at("components")) {
      std::string ids;
      for (const auto& id : c.at("elements")) {
        ids += (ids.empty() ? "" : " ") + id.get<std::string>();
      }
      rows.push_back({ids, c.at("status").get<std::string>()});
    }
    return render_table(rows) +
           (d.at("superregular").get<bool>() ? "superregular  true\n"
                                             : "superregular  false\n");
  });
  return 0;
}

int run_iso(const Options& opt, const std::string& left_ref, const std::string& right_ref) {
  fia::PosetPtr p = fia::load_poset(left_ref);
  fia::PosetPtr q = fia::load_poset(right_ref);
  auto witness = fia::poset_isomorphism(*p, *q);
  json doc;
  if (witness) {
    json mapping = json::object();
    for (const auto& [from, to] : witness->mapping) mapping[from] = to;
    doc = {{"isomorphic", true}, {"mapping", mapping}};
  } else {
    doc = {{"isomorphic", false}};
  }
  emit(opt, doc, [](const json& d) {
    if (!d.at("isomorphic").get<bool>()) return std::string("isomorphic  false\n");
    return "isomorphic  true\n" + mapping_table(d.at("mapping"));
  });
  return 0;
}

int run_recover_iso(const Options& opt, const std::string& source_ref,
                    const std::string& target_ref, const std::vector<std::string>& part_files) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  fia::PosetPtr source = fia::load_poset(source_ref);
  fia::PosetPtr target = fia::load_poset(target_ref);

  // assemble the declared isomorphism left to right; a poset_map part jumps
  // from the current poset to the target, a conjugator part stays put
  std::optional<fia::AlgebraIso> composed;
  fia::PosetPtr current = source;
  auto append = [&](fia::AlgebraIso step) {
    current = step.target;
    composed = composed ? fia::compose(*composed, step) : std::move(step);
  };
  for (const auto& part_file : part_files) {
    json part = fia::read_json_file(part_file);
    if (!part.is_object() || (!part.contains("poset_map") && !part.contains("conjugator"))) {
      throw fia::ParseError("'" + part_file +
                            "': expected an object with 'poset_map' and/or 'conjugator'");
    }
    if (part.contains("poset_map")) {
      if (!part["poset_map"].is_object()) {
        throw fia::ParseError("'" + part_file + "': 'poset_map' must be an object");
      }
      fia::IsoWitness w;
      for (const auto& [from, to] : part["poset_map"].items()) {
        if (!to.is_string()) {
          throw fia::ParseError("'" + part_file + "': 'poset_map' values must be strings");
        }
        w.mapping.emplace(from, to.get<std::string>());
      }
      append(fia::induced_iso(current, target, w, field));
    }
    if (part.contains("conjugator")) {
      if (!part["conjugator"].is_string()) {
        throw fia::ParseError("'" + part_file + "': 'conjugator' must be a series file path");
      }
      std::filesystem::path conj_path(part["conjugator"].get<std::string>());
      if (conj_path.is_relative()) {
        conj_path = std::filesystem::path(part_file).parent_path() / conj_path;
      }
      auto conjugator = fia::load_series(conj_path, field);
      if (!fia::same_poset(conjugator.series.poset(), current)) {
        throw fia::PosetMismatch("'" + part_file +
                                 "': conjugator lives on a different poset than expected");
      }
      // keep index space consistent with the composition chain
      fia::Series u = fia::Series::from_map(current, field, conjugator.series.entries());
      append(fia::conjugation_iso(u));
    }
  }
  if (!fia::same_poset(current, target)) {
    throw fia::PosetMismatch("the declared composition does not end at the target poset");
  }
  if (!fia::spot_check(*composed, opt.seed, 3)) {
    throw fia::InvalidWitness("the declared mapping failed the isomorphism spot check");
  }

  fia::IsoWitness recovered = fia::recover_poset_iso(*composed);
  json mapping = json::object();
  for (const auto& [from, to] : recovered.mapping) mapping[from] = to;
  json doc = {{"mapping", mapping}};
  emit(opt, doc, [](const json& d) { return mapping_table(d.at("mapping")); });
  return 0;
}

int run_demo_finitarity(const Options& opt, int n_max) {
  fia::Field field = fia::Field::parse_name(opt.field_name);
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    auto truncation = fia::Poset::order_sum(fia::Poset::chain(n), fia::Poset::chain(n));
    // zeta of the first chain, extended by zero to the order sum
    std::map<fia::Segment, fia::Scalar> entries;
    for (auto seg : truncation->segments()) {
      if (seg.hi < n) entries.emplace(seg, field.one());
    }
    fia::Series restricted = fia::Series::from_map(truncation, field, std::move(entries));
    long long count =
        fia::finitarity_count(restricted, "l.c0", "r.c" + std::to_string(n - 1));
    rows.push_back(json{{"n", n}, {"c_alpha", count}});
  }
  json doc = {{"rows", rows}};
  emit(opt, doc, [](const json& d) {
    std::vector<std::vector<std::string>> table = {{"n", "c_alpha"}};
    for (const auto& row : d.at("rows")) {
      table.push_back({std::to_string(row.at("n").get<int>()),
                       std::to_string(row.at("c_alpha").get<long long>())});
    }
    return render_table(table);
  });
  return 0;
}

int run_enumerate(const Options& opt, int n) {
  auto classes = fia::enumerate_posets(n);
  json listed = json::array();
  for (const auto& p : classes) listed.push_back(fia::poset_to_json(*p));
  json doc = {{"count", classes.size()}, {"classes", listed}};
  emit(opt, doc, [](const json& d) {
    std::vector<std::vector<std::string>> rows = {{"class", "elements", "covers"}};
    int index = 0;
    for (const auto& c : d.at("classes")) {
      std::string elements, covers;
      for (const auto& id : c.at("elements")) {
        elements += (elements.empty() ? "" : " ") + id.get<std::string>();
      }
      for (const auto& edge : c.at("hasse")) {
        covers += (covers.empty() ? "" : " ") + edge[0].get<std::string>() + "<" +
                  edge[1].get<std::string>();
      }
      rows.push_back({std::to_string(index++), elements, covers});
    }
    return render_table(rows);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact incidence-algebra computations on finite posets"};
  app.require_subcommand(1);
  app.add_option("--field", opt.field_name, "coefficient field: q or fp:<p>")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_flag("--debug-identities", opt.debug_identities,
               "verify internal diagonalization identities");
  app.add_option("--seed", opt.seed, "seed for randomized spot checks")
      ->capture_default_str();

  std::string poset_ref, series_file, right_file;
  std::vector<std::string> parts;
  int demo_n = 6;
  int enum_n = 3;
  std::function<int()> action;

  auto* mobius = app.add_subcommand("mobius", "invert zeta: the Mobius series of a poset");
  mobius->add_option("poset", poset_ref, "poset file or builtin name")->required();
  mobius->fallthrough();
  mobius->callback([&] { action = [&] { return run_mobius(opt, poset_ref); }; });

  auto* invert = app.add_subcommand("invert", "invert a series");
  invert->add_option("series", series_file, "series file")->required();
  invert->fallthrough();
  invert->callback([&] { action = [&] { return run_invert(opt, series_file); }; });

  auto* multiply = app.add_subcommand("multiply", "convolve two series");
  multiply->add_option("left", series_file, "series file")->required();
  multiply->add_option("right", right_file, "series file")->required();
  multiply->fallthrough();
  multiply->callback(
      [&] { action = [&] { return run_multiply(opt, series_file, right_file); }; });

  auto* radical = app.add_subcommand("radical-check", "test for zero diagonal");
  radical->add_option("series", series_file, "series file")->required();
  radical->fallthrough();
  radical->callback([&] { action = [&] { return run_radical_check(opt, series_file); }; });

  auto* diag = app.add_subcommand("idempotent-diagonalize",
                                  "conjugate an idempotent onto its diagonal");
  diag->add_option("series", series_file, "series file")->required();
  diag->fallthrough();
  diag->callback(
      [&] { action = [&] { return run_idempotent_diagonalize(opt, series_file); }; });

  auto* factor = app.add_subcommand("regular-factor",
                                    "factor a regular element as invertible * diagonal "
                                    "idempotent * invertible");
  factor->add_option("series", series_file, "series file")->required();
  factor->fallthrough();
  factor->callback([&] { action = [&] { return run_regular_factor(opt, series_file); }; });

  auto* super = app.add_subcommand("superregular-check",
                                   "per component: zero or invertible restriction");
  super->add_option("series", series_file, "series file")->required();
  super->fallthrough();
  super->callback(
      [&] { action = [&] { return run_superregular_check(opt, series_file); }; });

  auto* iso = app.add_subcommand("iso", "search for a poset isomorphism");
  iso->add_option("left", poset_ref, "poset file or builtin name")->required();
  iso->add_option("right", right_file, "poset file or builtin name")->required();
  iso->fallthrough();
  iso->callback([&] { action = [&] { return run_iso(opt, poset_ref, right_file); }; });

  auto* recover = app.add_subcommand(
      "recover-iso", "recover the element mapping of a declared algebra isomorphism");
  recover->add_option("source", poset_ref, "source poset file or builtin name")->required();
  recover->add_option("target", right_file, "target poset file or builtin name")->required();
  recover->add_option("parts", parts, "isomorphism parts, applied left to right")
      ->required()
      ->expected(-1);
  recover->fallthrough();
  recover->callback(
      [&] { action = [&] { return run_recover_iso(opt, poset_ref, right_file, parts); }; });

  auto* demo = app.add_subcommand("demo-finitarity",
                                  "growth of the finitarity counter on order-sum truncations");
  demo->add_option("--n", demo_n, "largest truncation size")->capture_default_str();
  demo->fallthrough();
  demo->callback([&] { action = [&] { return run_demo_finitarity(opt, demo_n); }; });

  auto* enumerate = app.add_subcommand("enumerate", "poset isomorphism classes of size n");
  enumerate->add_option("--n", enum_n, "number of elements")->capture_default_str();
  enumerate->fallthrough();
  enumerate->callback([&] { action = [&] { return run_enumerate(opt, enum_n); }; });

  try {
    app.parse(argc, argv);
    return action ? action() : 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fia::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fia::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
