#pragma once

// Checkerboard spines, the Gordon-Litherland pairing evaluated through curve
// diagrams, Goeritz forms, slopes and the definiteness test.

#include <optional>
#include <string>
#include <vector>

#include "surface_links/comb_map.hpp"
#include "surface_links/curves.hpp"
#include "surface_links/exact.hpp"

namespace surface_links {

enum class Color { B, W };
std::string to_string(Color c);
Color other(Color c);

// Faces with their B/W labels. On an alternating piece B is the class
// meeting every crossing in corners 0 and 2; otherwise B is the class whose
// sorted face list is lexicographically smaller.
struct Checkerboard {
  FaceStructure faces;
  std::vector<Color> labels;  // per face cycle

  Color corner_color(int c, int corner) const { return labels[faces.face_of[dart_of(c, corner)]]; }
  // Corner parity (0 or 1) of the faces of the given color at crossing c.
  int parity(Color color, int c) const { return corner_color(c, 0) == color ? 0 : 1; }
  // +1 when the faces of the given color meet crossing c in corners 0 and 2.
  int eta(Color color, int c) const { return parity(color, c) == 0 ? 1 : -1; }
};

// Throws NotColorable.
Checkerboard checkerboard(const CombMap& m);

// A band passage through crossing c entering from corner `corner`
// and leaving through the opposite corner.
struct Passage {
  int crossing = 0;
  int corner = 0;
  bool operator==(const Passage&) const = default;
};

// A multicurve in the spine: each loop is a closed sequence of passages.
struct SpineCurve {
  std::vector<std::vector<Passage>> loops;
};

struct Spine {
  Color color = Color::B;
  std::vector<int> vertices;  // face indices
  std::vector<int> edges;     // crossing indices
  int components = 0;
  int beta1 = 0;
  std::vector<SpineCurve> basis;  // fundamental cycles
};

Spine spine(const CombMap& m, Color color);

// Signed passage count per crossing; the class of the curve in the cycle space.
std::vector<int> coefficients(const CombMap& m, Color color, const SpineCurve& a);
SpineCurve add(const SpineCurve& a, const SpineCurve& b);
// Throws std::invalid_argument when a loop does not close up in the spine.
void check_cycle(const CombMap& m, Color color, const SpineCurve& a);

// Band-model realization of spine multicurves together with their transfer
// pushoffs. Curves 0..k-1 are the loops in order; pushoffs follow.
struct Realization {
  CurveDiagram diagram;
  std::vector<std::vector<int>> curve_of_group;  // realized curves per input group
  std::vector<std::vector<int>> pushoff_of_group;
};
Realization realize(const CombMap& m, Color color, const std::vector<SpineCurve>& groups);

int pairing(const CombMap& m, Color color, const SpineCurve& a, const SpineCurve& b);

// Curve diagram of the link components and their pushoffs into the surface.
CurveDiagram boundary_pushoffs(const CombMap& m, Color color);
int slope(const CombMap& m, Color color);
// Pushoff of link component i as a spine multicurve.
SpineCurve pushoff_cycle(const CombMap& m, Color color, int component);
// Intersection number of the two checkerboard boundaries on the boundary of a
// regular neighbourhood of the link, counted from the local picture at each
// crossing.
int boundary_intersection(const CombMap& m);

struct GoeritzForm {
  Color color = Color::B;
  IntMatrix matrix;
  std::vector<SpineCurve> basis;
  int beta1 = 0;
  int sigma = 0;
  int slope = 0;
  BigInt det;
  int spine_components = 0;
};

GoeritzForm goeritz(const CombMap& m, Color color);

enum class Definite { Positive, Negative, Indefinite, Zero };
std::string to_string(Definite d);
Definite is_definite(const GoeritzForm& f);
Definite is_definite(const IntMatrix& a);

bool alternating_by_definiteness(const CombMap& m);
Rational sigma_invariant(const CombMap& m, Color color);

}  // namespace surface_links
