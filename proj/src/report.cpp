#include "surface_links/report.hpp"

#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace surface_links {

namespace {

ColorData color_data(const GoeritzForm& f) {
  return ColorData{f.beta1, f.sigma, f.slope, is_definite(f), f.det, f.matrix};
}

Rational sigma_of(const GoeritzForm& f) { return Rational(f.sigma) - Rational(f.slope, 2); }

}  // namespace

Identities identities(const CombMap& m, const GoeritzForm& b, const GoeritzForm& w) {
  Identities id;
  const int g = genus(m);
  const Rational diff = sigma_of(w) - sigma_of(b);
  const bool fully_alternating = is_alternating(m) && classify(m).cellular;
  if (fully_alternating)
    id.signature_gap = diff == Rational(2 * g);
  else
    id.signature_gap = abs(diff) <= Rational(2 * g);
  if (fully_alternating && b.spine_components == 1 && w.spine_components == 1)
    id.slope_identity = b.slope - w.slope == 2 * (b.beta1 + w.beta1 + 2 * g);
  id.boundary_intersection = boundary_intersection(m) == b.slope - w.slope;
  return id;
}

AnalysisReport analyze(const CombMap& m) {
  AnalysisReport r;
  r.crossings = m.size();
  r.components = component_count(m);
  r.genus = genus(m);
  r.alternating = is_alternating(m);
  r.colorable = is_colorable(m);
  r.structure = classify(m);
  if (r.colorable) {
    GoeritzForm b = goeritz(m, Color::B), w = goeritz(m, Color::W);
    r.black = color_data(b);
    r.white = color_data(w);
    r.sigma_black = sigma_of(b);
    r.sigma_white = sigma_of(w);
    r.identities = identities(m, b, w);
  }
  return r;
}

namespace {

nlohmann::ordered_json color_json(const ColorData& c, bool matrix) {
  nlohmann::ordered_json j;
  j["beta1"] = c.beta1;
  j["sigma"] = c.sigma;
  j["slope"] = c.slope;
  j["definite"] = to_string(c.definite);
  j["det"] = c.det.str();
  if (matrix) j["matrix"] = c.matrix;
  return j;
}

}  // namespace

std::string to_json(const AnalysisReport& r, std::optional<Color> matrix_color) {
  nlohmann::ordered_json j;
  j["crossings"] = r.crossings;
  j["components"] = r.components;
  j["genus"] = r.genus;
  j["alternating"] = r.alternating;
  j["colorable"] = r.colorable;
  if (r.colorable) {
    j["colors"]["B"] = color_json(*r.black, matrix_color == Color::B);
    j["colors"]["W"] = color_json(*r.white, matrix_color == Color::W);
    j["sigma_invariants"]["B"] = to_string(*r.sigma_black);
    j["sigma_invariants"]["W"] = to_string(*r.sigma_white);
    j["identities"]["lemma37"] = r.identities->signature_gap;
    if (r.identities->slope_identity)
      j["identities"]["slope_identity"] = *r.identities->slope_identity;
    else
      j["identities"]["slope_identity"] = nullptr;
    j["identities"]["boundary_intersection"] = r.identities->boundary_intersection;
  } else {
    j["colors"] = nullptr;
    j["sigma_invariants"] = nullptr;
    j["identities"] = nullptr;
  }
  j["structure"] = nlohmann::ordered_json::parse(to_json(r.structure));
  return j.dump(2);
}

std::string to_text(const AnalysisReport& r, std::optional<Color> matrix_color) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "crossings: " << r.crossings << "\n"
      << "components: " << r.components << "\n"
      << "genus: " << r.genus << "\n"
      << "alternating: " << yes(r.alternating) << "\n"
      << "colorable: " << yes(r.colorable) << "\n";
  if (r.colorable) {
    for (auto [color, c, s] :
         {std::tuple{Color::B, &*r.black, &*r.sigma_black}, std::tuple{Color::W, &*r.white, &*r.sigma_white}}) {
      const std::string name = to_string(color);
      out << name << ": beta1 " << c->beta1 << ", sigma " << c->sigma << ", slope " << c->slope << ", "
          << to_string(c->definite) << ", det " << c->det << ", sigma_F(L) " << to_string(*s) << "\n";
      if (matrix_color == color)
        for (const auto& row : c->matrix) {
          out << "  ";
          for (auto v : row) out << ' ' << v;
          out << "\n";
        }
    }
    out << "signature gap: " << yes(r.identities->signature_gap) << "\n"
        << "slope_identity: "
        << (r.identities->slope_identity ? yes(*r.identities->slope_identity) : "not applicable") << "\n"
        << "boundary_intersection: " << yes(r.identities->boundary_intersection) << "\n";
  }
  const auto& s = r.structure;
  out << "connected: " << yes(s.connected) << "\n"
      << "cellular: " << yes(s.cellular) << "\n"
      << "weakly prime: " << yes(s.weakly_prime) << "\n"
      << "prime: " << yes(s.prime) << "\n"
      << "split components: " << s.split_components << "\n"
      << "removable nugatory:";
  for (int c : s.removable_nugatory) out << ' ' << c;
  out << "\n";
  if (!s.flags.empty()) {
    out << "flags:";
    for (const auto& f : s.flags) out << ' ' << f;
    out << "\n";
  }
  return out.str();
}

}  // namespace surface_links
