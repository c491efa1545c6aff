// Batch command-line surface over the soficlab library: structural reports,
// hypothesis checks, witness construction and exact defect measurement.
//
// Exit codes: 0 = success / PASS; 1 = malformed input or usage error;
// 2 = honest refusal (hypotheses not met, search budget or cap exceeded,
// and FAIL verdicts from check-witness).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soficlab/builder.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/fixtures.hpp"
#include "soficlab/green.hpp"
#include "soficlab/reports.hpp"
#include "soficlab/witness_io.hpp"

namespace {

using namespace soficlab;

// splits on commas at parenthesis/brace depth zero, so labels like "(y,0)"
// survive intact
std::vector<std::string> split_labels(std::string const& text) {
  std::vector<std::string> out;
  std::string              cur;
  int                      depth = 0;
  for (char c : text) {
    if (c == '(' || c == '{' || c == '[') {
      ++depth;
    } else if (c == ')' || c == '}' || c == ']') {
      --depth;
    }
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    out.push_back(cur);
  }
  return out;
}

MonoidPtr resolve_monoid(std::string const& fixture,
                         std::string const& input_path) {
  if (!fixture.empty() && !input_path.empty()) {
    throw BadIndex("give either --fixture or --input, not both");
  }
  if (!fixture.empty()) {
    return get_fixture(fixture);
  }
  if (!input_path.empty()) {
    return wrap_finite(load_monoid(input_path), input_path);
  }
  throw BadIndex("one of --fixture or --input is required");
}

std::vector<Elem> resolve_k(MonoidOracle const& m, std::string const& k_text) {
  if (k_text == "all") {
    auto const* fm = m.as_finite();
    if (fm == nullptr) {
      throw BadIndex("--K all needs a finite monoid");
    }
    std::vector<Elem> out;
    for (std::uint32_t i = 0; i < fm->size(); ++i) {
      out.push_back(finite_elem(i));
    }
    return out;
  }
  std::vector<Elem> out;
  for (auto const& label : split_labels(k_text)) {
    out.push_back(m.parse(label));
  }
  if (out.empty()) {
    throw BadIndex("--K must name at least one element");
  }
  return out;
}

std::uint64_t env_u64(char const* name, std::uint64_t fallback) {
  char const* value = std::getenv(name);
  if (value == nullptr) {
    return fallback;
  }
  return std::stoull(value);
}

GroupPtr resolve_group(std::string const& text) {
  if (text == "Z") {
    return std::make_shared<FgAbelianGroup>(1, std::vector<std::uint64_t>{});
  }
  if (text.rfind("Z^", 0) == 0) {
    return std::make_shared<FgAbelianGroup>(std::stoul(text.substr(2)),
                                            std::vector<std::uint64_t>{});
  }
  if (text.rfind("Z/", 0) == 0) {
    return TableGroup::cyclic(std::stoul(text.substr(2)));
  }
  throw BadIndex("unknown group \"" + text + "\" (use Z, Z^r or Z/m)");
}

Elem parse_group_elem(Group const& g, std::string const& text) {
  if (auto const* ab = dynamic_cast<FgAbelianGroup const*>(&g)) {
    std::vector<std::int64_t> coords;
    std::string               body = text;
    if (!body.empty() && body.front() == '(') {
      body = body.substr(1, body.size() - 2);
    }
    for (auto const& tok : split_labels(body)) {
      coords.push_back(std::stoll(tok));
    }
    return ab->make(coords);
  }
  if (auto const* tg = dynamic_cast<TableGroup const*>(&g)) {
    for (std::uint32_t i = 0; i < tg->size(); ++i) {
      if (tg->name(i) == text) {
        return enc::u32(i);
      }
    }
    throw BadIndex("unknown group element \"" + text + "\"");
  }
  throw BadIndex("cannot parse elements of " + g.description());
}

int run(int argc, char** argv) {
  CLI::App app{"computational toolkit for finite approximate actions of "
               "monoids"};
  app.require_subcommand(1);

  std::string fixture, input_path, k_text, out_path, format = "text";
  std::string provenance_path, witness_path, family = "truncation";
  std::string eps_text, delta_text = "1/5", group_text;
  std::uint64_t ground_cap
      = env_u64("SOFICLAB_GROUND_CAP", limits::kGroundCap);
  std::uint64_t folner_budget
      = env_u64("SOFICLAB_FOLNER_BUDGET", limits::kFolnerBudget);
  std::uint64_t probe_n = 100;
  size_t        workers = 1;
  std::optional<std::uint64_t> box;

  auto add_monoid_opts = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "built-in fixture name");
    cmd->add_option("--input", input_path, "finite monoid JSON file");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* analyze = app.add_subcommand(
      "analyze", "egg-box, units and Schutzenberger report");
  add_monoid_opts(analyze);
  add_format(analyze);

  auto* hypotheses
      = app.add_subcommand("hypotheses", "hypothesis classifier report");
  add_monoid_opts(hypotheses);
  add_format(hypotheses);
  hypotheses->add_option("--K", k_text, "element labels, comma separated");

  auto* build = app.add_subcommand(
      "build-witness", "run the witness construction for (K, eps)");
  add_monoid_opts(build);
  add_format(build);
  build->add_option("--K", k_text, "element labels or \"all\"")->required();
  build->add_option("--eps", eps_text, "target eps as p/q")->required();
  build->add_option("--out", out_path, "witness output file");
  build->add_option("--provenance", provenance_path,
                    "provenance JSON output file");
  build->add_option("--ground-cap", ground_cap, "max ground set size");
  build->add_option("--budget", folner_budget, "Folner search budget");

  auto* check = app.add_subcommand(
      "check-witness", "measure a witness file against (K, eps)");
  add_monoid_opts(check);
  add_format(check);
  check->add_option("--witness", witness_path, "witness file")->required();
  check->add_option("--K", k_text, "element labels or \"all\"")->required();
  check->add_option("--eps", eps_text, "eps as p/q")->required();
  check->add_option("--workers", workers, "worker threads for counting");

  auto* oracle = app.add_subcommand(
      "oracle-witness",
      "independent diagonal-power witness for a finite monoid");
  add_monoid_opts(oracle);
  add_format(oracle);
  oracle->add_option("--K", k_text, "element labels or \"all\"")->required();
  oracle->add_option("--eps", eps_text, "eps as p/q")->required();
  oracle->add_option("--out", out_path, "witness output file");
  oracle->add_option("--ground-cap", ground_cap, "max materialized size");

  auto* folner = app.add_subcommand(
      "folner", "search or measure Folner sets");
  add_format(folner);
  folner->add_option("--group", group_text, "Z, Z^r or Z/m")->required();
  folner->add_option("--K", k_text, "group elements, comma separated")
      ->required();
  folner->add_option("--delta", delta_text, "target delta as p/q");
  folner->add_option("--box", box,
                     "measure the box {0..L}^r instead of searching");
  folner->add_option("--budget", folner_budget, "search budget");

  auto* probe = app.add_subcommand(
      "probe-bicyclic", "measure a candidate bicyclic action (diagnostic)");
  add_format(probe);
  probe->add_option("--N", probe_n, "ground set size")->required();
  probe->add_option("--K", k_text, "bicyclic elements")->required();
  probe->add_option("--family", family, "candidate family");
  probe->add_option("--out", out_path, "witness output file");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture registry");
  auto* fixtures_list = fixtures_cmd->add_subcommand(
      "list", "list built-in fixtures and their element grammars");
  auto* fixtures_dump = fixtures_cmd->add_subcommand(
      "dump", "write a finite fixture as a monoid JSON file");
  add_format(fixtures_list);
  fixtures_dump->add_option("--fixture", fixture, "fixture name")->required();
  fixtures_dump->add_option("--out", out_path, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    auto const m  = resolve_monoid(fixture, input_path);
    auto const* fm = m->as_finite();
    if (fm == nullptr) {
      auto const report = check_hypotheses(*m);
      std::cout << (format == "json" ? hypothesis_report_json(report)
                                     : hypothesis_report_text(report));
      return 0;
    }
    if (format == "json") {
      std::cout << eggbox_report_json(eggbox_summary(*fm));
    } else {
      auto const green = green_relations(*fm);
      std::cout << m->name() << ": " << fm->size() << " elements, "
                << fm->units().size() << " units\n"
                << eggbox_ascii(*fm, green);
    }
    return 0;
  }

  if (hypotheses->parsed()) {
    auto const m = resolve_monoid(fixture, input_path);
    std::optional<std::vector<Elem>> k;
    if (!k_text.empty()) {
      k = resolve_k(*m, k_text);
    }
    auto const report = check_hypotheses(*m, k);
    std::cout << (format == "json" ? hypothesis_report_json(report)
                                   : hypothesis_report_text(report));
    return 0;
  }

  if (build->parsed()) {
    auto const m   = resolve_monoid(fixture, input_path);
    auto const k   = resolve_k(*m, k_text);
    auto const eps = parse_rational(eps_text);
    BuildOptions opts;
    opts.ground_cap    = ground_cap;
    opts.folner_budget = folner_budget;
    auto const result = build_witness(*m, k, eps, opts);
    if (!out_path.empty()) {
      save_witness(result.witness, out_path);
    }
    if (!provenance_path.empty()) {
      std::ofstream out(provenance_path, std::ios::binary);
      out << provenance_json(result.log);
    }
    std::cout << (format == "json" ? provenance_json(result.log)
                                   : provenance_text(result.log));
    return 0;
  }

  if (check->parsed()) {
    auto const m       = resolve_monoid(fixture, input_path);
    auto const k       = resolve_k(*m, k_text);
    auto const eps     = parse_rational(eps_text);
    auto const witness = load_witness(witness_path);
    auto const report  = check_witness(witness, m->one(), k, workers);
    bool const ok      = passes(report, eps);
    std::cout << (format == "json" ? defect_report_json(report)
                                   : defect_report_text(report));
    std::cout << (ok ? "PASS" : "FAIL") << " at eps = "
              << rational_str(eps) << "\n";
    return ok ? 0 : 2;
  }

  if (oracle->parsed()) {
    auto const m = resolve_monoid(fixture, input_path);
    auto const* fm = m->as_finite();
    if (fm == nullptr) {
      throw BadIndex("oracle-witness needs a finite monoid");
    }
    std::vector<std::uint32_t> k_idx;
    for (auto const& e : resolve_k(*m, k_text)) {
      k_idx.push_back(finite_index(e));
    }
    auto const eps    = parse_rational(eps_text);
    auto const result = diagonal_power_witness(*fm, k_idx, eps, ground_cap);
    if (!out_path.empty()) {
      if (!result.witness.has_value()) {
        throw CapExceeded("witness",
                          "diagonal power exceeded the ground cap; no "
                          "witness file to write");
      }
      save_witness(*result.witness, out_path);
    }
    std::cout << "n = " << result.power << ", worst agreement p = "
              << rational_str(result.max_agreement) << ", N = "
              << result.report.ground_size.str() << "\n";
    std::cout << (format == "json" ? defect_report_json(result.report)
                                   : defect_report_text(result.report));
    return 0;
  }

  if (folner->parsed()) {
    auto const group = resolve_group(group_text);
    std::vector<Elem> k;
    for (auto const& tok : split_labels(k_text)) {
      k.push_back(parse_group_elem(*group, tok));
    }
    FolnerSet f;
    if (box.has_value()) {
      f.group    = group;
      f.elements = group->folner_candidate(static_cast<size_t>(*box));
    } else {
      f = find_folner(group, k, parse_rational(delta_text), folner_budget);
    }
    if (format == "json") {
      std::cout << folner_report_json(group, k, f);
    } else {
      std::cout << group->description() << ": |F| = " << f.elements.size()
                << ", quality = " << rational_str(f.quality_for(k)) << "\n";
    }
    return 0;
  }

  if (probe->parsed()) {
    auto const bicyclic = make_bicyclic();
    std::vector<Elem> k;
    for (auto const& tok : split_labels(k_text)) {
      k.push_back(bicyclic->parse(tok));
    }
    auto const result = bicyclic_defect_probe(probe_n, k, family);
    if (!out_path.empty()) {
      save_witness(result.witness, out_path);
    }
    std::cout << (format == "json" ? defect_report_json(result.report)
                                   : defect_report_text(result.report));
    return 0;
  }

  if (fixtures_list->parsed()) {
    if (format == "json") {
      std::string out   = "[";
      bool        first = true;
      for (auto const& info : fixture_list()) {
        if (!first) out += ",";
        first = false;
        out += "\n  {\"name\": \"" + info.name + "\", \"summary\": \""
               + info.summary + "\"}";
      }
      out += "\n]\n";
      std::cout << out;
    } else {
      for (auto const& info : fixture_list()) {
        std::cout << info.name << "\n  " << info.summary
                  << "\n  elements: " << info.grammar << "\n";
      }
    }
    return 0;
  }

  if (fixtures_dump->parsed()) {
    auto const m = get_fixture(fixture);
    auto const* fm = m->as_finite();
    if (fm == nullptr) {
      throw BadIndex("fixture \"" + fixture + "\" is not a table monoid");
    }
    save_monoid(*fm, out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (HypothesesNotMet const& e) {
    std::cerr << "refused (builder): " << e.what() << "\n";
    return 2;
  } catch (SearchBudgetExceeded const& e) {
    std::cerr << "refused (" << e.module_name() << "): " << e.what() << "\n";
    return 2;
  } catch (CapExceeded const& e) {
    std::cerr << "refused (" << e.module_name() << "): " << e.what() << "\n";
    return 2;
  } catch (NotAmenableCapable const& e) {
    std::cerr << "refused (" << e.module_name() << "): " << e.what() << "\n";
    return 2;
  } catch (NoSeparatingQuotient const& e) {
    std::cerr << "refused (" << e.module_name() << "): " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    std::cerr << "error (" << e.module_name() << "): " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
