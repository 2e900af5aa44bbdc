#pragma once

// Curve diagrams on a diagram's surface and generalized linking numbers
// taken relative to the top of the thickening.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface_links/comb_map.hpp"

namespace surface_links {

enum class Over { First, Second, None };

// Transverse double point between curves a and b. sign is the cross product
// of their directions, a first.
struct CurvePoint {
  int a = 0;
  int b = 0;
  int sign = 1;
  Over over = Over::None;
};

struct CurveStep {
  enum class Kind { Face, Band, Edge };
  Kind kind = Kind::Face;
  int where = 0;  // face index, crossing index, or dart
  int from = 0;   // corner / boundary position entering
  int to = 0;     // corner / boundary position leaving
};

struct Curve {
  std::string name;
  std::vector<CurveStep> steps;
};

struct CurveDiagram {
  std::vector<Curve> curves;
  std::vector<CurvePoint> points;
};

class MissingCrossingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signed count of points where a curve of alpha passes over a curve of beta.
int lk(const CurveDiagram& d, const std::vector<int>& alpha, const std::vector<int>& beta);
// Algebraic intersection number of the projections on the surface.
int intersection_number(const CurveDiagram& d, const std::vector<int>& alpha, const std::vector<int>& beta);

// Sign of the crossing of chords a1->a2 and b1->b2 drawn inside a disk whose
// boundary positions increase counterclockwise; 0 when they do not cross.
int chord_crossing(long long a1, long long a2, long long b1, long long b2);

// A closed walk in the dual graph: step i crosses the edge of darts[i] from the
// face left of darts[i] to the face left of its partner.
struct DualWalk {
  std::vector<int> darts;
};

// Realizes dual walks as curves meeting the diagram's edges at the given
// positions (distinct integers per edge, measured from the smaller dart's
// crossing). over(a, b) decides the layering at each double point.
CurveDiagram realize_dual_walks(const CombMap& m, const std::vector<DualWalk>& walks,
                                const std::vector<std::vector<long long>>& positions,
                                const std::function<Over(int, int)>& over);

}  // namespace surface_links
