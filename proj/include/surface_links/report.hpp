#pragma once

// Full analysis of one diagram: genus, alternation, checkerboard forms,
// the signature and slope identities, and the structure report.

#include <optional>
#include <string>

#include "surface_links/comb_map.hpp"
#include "surface_links/goeritz.hpp"
#include "surface_links/structure.hpp"

namespace surface_links {

struct ColorData {
  int beta1 = 0;
  int sigma = 0;
  int slope = 0;
  Definite definite = Definite::Zero;
  BigInt det;
  IntMatrix matrix;
};

struct Identities {
  // Fully alternating: sigma_W(L) - sigma_B(L) = 2g as stated. Otherwise the
  // bound |sigma_W(L) - sigma_B(L)| <= 2g.
  bool signature_gap = false;
  // s(B) - s(W) = 2(beta1(B) + beta1(W) + 2g) as stated; only for fully
  // alternating diagrams with connected checkerboard surfaces.
  std::optional<bool> slope_identity;
  // i(dB, dW) = s(B) - s(W).
  bool boundary_intersection = false;
};

struct AnalysisReport {
  int crossings = 0;
  int components = 0;
  int genus = 0;
  bool alternating = false;
  bool colorable = false;
  std::optional<ColorData> black, white;
  std::optional<Rational> sigma_black, sigma_white;
  std::optional<Identities> identities;
  StructureReport structure;
};

// Requires a colorable map for the checkerboard parts; they stay empty otherwise.
AnalysisReport analyze(const CombMap& m);
Identities identities(const CombMap& m, const GoeritzForm& b, const GoeritzForm& w);

// matrix_color adds that color's Goeritz matrix to the output.
std::string to_json(const AnalysisReport& r, std::optional<Color> matrix_color = {});
std::string to_text(const AnalysisReport& r, std::optional<Color> matrix_color = {});

}  // namespace surface_links
