// Command-line front end. Exit status: 0 success, 1 analysis error, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "surface_links/census.hpp"
#include "surface_links/comb_map.hpp"
#include "surface_links/gauss.hpp"
#include "surface_links/goeritz.hpp"
#include "surface_links/moves.hpp"
#include "surface_links/report.hpp"

using namespace surface_links;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

CombMap map_from_text(const std::string& text) {
  if (looks_like_json(text)) return from_json(text);
  return gauss_to_surface(parse_gauss(text));
}

GaussCode gauss_from_flag(const std::string& code) {
  if (code.find_first_not_of(" \t\r\n,") == std::string::npos) throw UsageError("empty Gauss code");
  return parse_gauss(code);
}

// Exactly one of --gauss, --json or a positional file.
CombMap load_input(const std::vector<std::string>& gauss, const std::string& json_path,
                   const std::vector<std::string>& files) {
  int given = static_cast<int>(gauss.size()) + (json_path.empty() ? 0 : 1) + static_cast<int>(files.size());
  if (given != 1) throw UsageError("give exactly one input: --gauss CODE, --json FILE or a file");
  if (!gauss.empty()) return gauss_to_surface(gauss_from_flag(gauss[0]));
  if (!json_path.empty()) return from_json(read_file(json_path));
  return map_from_text(read_file(files[0]));
}

std::optional<Color> parse_color(const std::string& c) {
  if (c.empty()) return std::nullopt;
  if (c == "B") return Color::B;
  if (c == "W") return Color::W;
  throw UsageError("--color must be B or W");
}

Site parse_site(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return Site{0, std::stoi(text)};
    return Site{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("site must be COMPONENT:EDGE");
  }
}

struct CensusTally {
  long diagrams = 0;
  long alternating = 0;
  long definiteness_agree = 0;
  long fully_alternating = 0;
  long signature_gap = 0;
  long slope_applicable = 0;
  long slope_identity = 0;
  long boundary_intersection = 0;
};

CensusTally run_census_suite(int n) {
  auto diagrams = colorable_diagrams(n);
  std::vector<CensusTally> parts(diagrams.size());
  parallel_for(static_cast<int>(diagrams.size()), [&](int i) {
    const CombMap& m = diagrams[i];
    CensusTally& t = parts[i];
    t.diagrams = 1;
    bool alt = is_alternating(m);
    t.alternating = alt;
    t.definiteness_agree = alternating_by_definiteness(m) == alt;
    GoeritzForm b = goeritz(m, Color::B), w = goeritz(m, Color::W);
    Identities id = identities(m, b, w);
    t.boundary_intersection = id.boundary_intersection;
    if (alt) {
      t.fully_alternating = 1;
      t.signature_gap = id.signature_gap;
      t.slope_applicable = id.slope_identity.has_value();
      t.slope_identity = id.slope_identity.value_or(false);
    }
  });
  CensusTally total;
  for (const auto& t : parts) {
    total.diagrams += t.diagrams;
    total.alternating += t.alternating;
    total.definiteness_agree += t.definiteness_agree;
    total.fully_alternating += t.fully_alternating;
    total.signature_gap += t.signature_gap;
    total.slope_applicable += t.slope_applicable;
    total.slope_identity += t.slope_identity;
    total.boundary_intersection += t.boundary_intersection;
  }
  return total;
}

int run(int argc, char** argv) {
  CLI::App app{"Link diagrams on surfaces and virtual link diagrams"};
  app.require_subcommand(1);
  std::vector<std::string> gauss, files;
  std::string json_path, report = "json", format = "gauss", color, site_a = "0:0", site_b = "0:0";
  int bound = kDefaultOrbitBound;
  int max_crossings = 0;

  auto input_options = [&](CLI::App* sub) {
    sub->add_option("--gauss", gauss, "Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
    sub->add_option("--json", json_path, "diagram JSON file");
  };
  auto report_option = [&](CLI::App* sub) {
    sub->add_option("--report", report, "output style")->check(CLI::IsMember({"json", "text"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "genus, alternation, Goeritz data, identities, structure");
  input_options(analyze_cmd);
  report_option(analyze_cmd);
  analyze_cmd->add_option("file", files, "diagram file (JSON or Gauss code)");
  analyze_cmd->add_option("--color", color, "include the Goeritz matrix of this color (B or W)");

  auto* orbit = app.add_subcommand("orbit", "flype orbit up to isomorphism");
  input_options(orbit);
  report_option(orbit);
  orbit->add_option("file", files, "diagram file");
  orbit->add_option("--bound", bound, "maximum number of diagrams")->check(CLI::PositiveNumber);

  auto* equiv = app.add_subcommand("equiv", "search for a flype sequence from A to B");
  equiv->add_option("files", files, "two diagram files")->expected(2);
  equiv->add_option("--gauss", gauss, "two Gauss codes instead of files");
  equiv->add_option("--bound", bound, "maximum number of diagrams")->check(CLI::PositiveNumber);

  auto* virtualize = app.add_subcommand("virtualize", "surface diagram to virtual diagram");
  input_options(virtualize);
  virtualize->add_option("file", files, "diagram file");
  virtualize->add_option("--format", format, "output format")->check(CLI::IsMember({"gauss", "json"}));

  auto* devirtualize = app.add_subcommand("devirtualize", "Gauss code to cellular surface diagram");
  devirtualize->add_option("--gauss", gauss, "Gauss code");
  devirtualize->add_option("--format", format, "output format")->check(CLI::IsMember({"gauss", "json"}));

  auto* connect = app.add_subcommand("connect-sum", "splice two Gauss codes");
  connect->add_option("--gauss", gauss, "two Gauss codes")->expected(2);
  connect->add_option("--site-a", site_a, "COMPONENT:EDGE in the first code");
  connect->add_option("--site-b", site_b, "COMPONENT:EDGE in the second code");
  connect->add_option("--format", format, "output format")->check(CLI::IsMember({"gauss", "json"}));

  auto* census_cmd = app.add_subcommand("census", "enumerate colorable diagrams and run the identity suite");
  census_cmd->add_option("n", max_crossings, "maximum crossing count")->required()->check(CLI::Range(1, 8));
  report_option(census_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (analyze_cmd->parsed()) {
    auto matrix_color = parse_color(color);
    CombMap m = load_input(gauss, json_path, files);
    AnalysisReport r = analyze(m);
    std::cout << (report == "json" ? to_json(r, matrix_color) + "\n" : to_text(r, matrix_color));
    return 0;
  }
  if (orbit->parsed()) {
    CombMap m = load_input(gauss, json_path, files);
    if (!m.oriented()) m = m.with_default_orientation();
    FlypeOrbit o = flype_orbit(m, bound);
    if (report == "json") {
      nlohmann::ordered_json j;
      j["size"] = o.forms.size();
      j["truncated"] = o.truncated;
      j["forms"] = o.forms;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "size: " << o.forms.size() << (o.truncated ? " (truncated)" : "") << "\n";
      for (const auto& f : o.forms) std::cout << f << "\n";
    }
    return 0;
  }
  if (equiv->parsed()) {
    std::vector<CombMap> maps;
    if (!gauss.empty() && !files.empty()) throw UsageError("give two files or two --gauss codes");
    for (const auto& g : gauss) maps.push_back(gauss_to_surface(gauss_from_flag(g)));
    for (const auto& f : files) maps.push_back(map_from_text(read_file(f)));
    if (maps.size() != 2) throw UsageError("equiv needs two diagrams");
    for (auto& m : maps)
      if (!m.oriented()) m = m.with_default_orientation();
    FlypeEquivalence e = flype_equivalent(maps[0], maps[1], bound);
    nlohmann::ordered_json j;
    j["equivalent"] = e.equivalent;
    j["truncated"] = e.truncated;
    j["path"] = nlohmann::json::parse(to_json(e.path));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (virtualize->parsed()) {
    CombMap m = load_input(gauss, json_path, files);
    VirtualDiagram v = surface_to_virtual(m);
    GaussCode code = gauss_of(v);
    if (format == "gauss") {
      std::cout << to_string(code) << "\n";
    } else {
      nlohmann::ordered_json j;
      j["gauss"] = to_string(code);
      j["virtual_crossings"] = v.virtual_count();
      j["graph"] = nlohmann::json::parse(to_json(v.graph));
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }
  if (devirtualize->parsed()) {
    if (gauss.size() != 1) throw UsageError("devirtualize needs one --gauss code");
    CombMap m = gauss_to_surface(gauss_from_flag(gauss[0]));
    if (format == "json")
      std::cout << to_json(m) << "\n";
    else
      std::cout << "genus " << genus(m) << "\n" << canonical_form(m) << "\n";
    return 0;
  }
  if (connect->parsed()) {
    GaussCode a = gauss_from_flag(gauss.at(0)), b = gauss_from_flag(gauss.at(1));
    GaussCode sum = connect_sum(a, b, parse_site(site_a), parse_site(site_b));
    if (format == "gauss") {
      std::cout << to_string(sum) << "\n";
    } else {
      nlohmann::ordered_json j;
      j["gauss"] = to_string(sum);
      j["canonical"] = canonical_gauss(sum);
      j["genus"] = genus(gauss_to_surface(sum));
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }
  if (census_cmd->parsed()) {
    bool clean = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream text;
    for (int n = 1; n <= max_crossings; ++n) {
      CensusTally t = run_census_suite(n);
      clean = clean && t.definiteness_agree == t.diagrams && t.signature_gap == t.fully_alternating &&
              t.slope_identity == t.slope_applicable && t.boundary_intersection == t.diagrams;
      nlohmann::ordered_json row;
      row["crossings"] = n;
      row["diagrams"] = t.diagrams;
      row["alternating"] = t.alternating;
      row["definiteness_agrees"] = t.definiteness_agree;
      row["signature_gap_holds"] = t.signature_gap;
      row["slope_identity_applicable"] = t.slope_applicable;
      row["slope_identity_holds"] = t.slope_identity;
      row["boundary_intersection_holds"] = t.boundary_intersection;
      rows.push_back(row);
      text << "n=" << n << " diagrams " << t.diagrams << ", alternating " << t.alternating
           << ", definiteness agrees " << t.definiteness_agree << ", signature gap " << t.signature_gap << "/"
           << t.fully_alternating << ", slope identity " << t.slope_identity << "/" << t.slope_applicable
           << ", boundary intersection " << t.boundary_intersection << "/" << t.diagrams << "\n";
    }
    if (report == "json") {
      nlohmann::ordered_json j;
      j["rows"] = rows;
      j["violations"] = !clean;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text.str() << (clean ? "no violations\n" : "violations found\n");
    }
    if (!clean) std::cerr << "invariant violation: identity suite failed\n";
    return clean ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const GaussSyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return 1;
  }
}
