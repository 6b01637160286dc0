#ifndef POLARCOH_POLYGONS_HPP
#define POLARCOH_POLYGONS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polarcoh/exactnum.hpp"
#include "polarcoh/matrixops.hpp"
#include "polarcoh/poly.hpp"

namespace polarcoh {

struct Vertex {
  long x = 0;
  BigRational y;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Convex piecewise-linear function on [0, n] starting at the origin, with
/// integer breakpoints. `slopes` lists every unit interval's slope in
/// nondecreasing order; `vertices` keeps only the genuine corners.
struct Polygon {
  std::vector<Vertex> vertices;
  RatVector slopes;

  long length() const { return static_cast<long>(slopes.size()); }
  BigRational end_height() const { return vertices.empty() ? BigRational(0) : vertices.back().y; }

  static Polygon from_slopes(RatVector slopes);
};

struct NewtonPolygon : Polygon {
  // False when built from a valuation with l not dividing q.
  bool normalized = true;
};

struct HodgePolygon : Polygon {
  int weight = 0;
  std::vector<long> hodge_numbers;  // h^{0,i}, ..., h^{i,0}
};

/// Lower convex hull of points with strictly increasing x (monotone chain,
/// exact arithmetic). Collinear interior points are dropped.
std::vector<Vertex> lower_convex_hull(std::vector<Vertex> points);

/// Newton polygon of a monic polynomial: lower hull of (k, v(a_k)) where a_k
/// is the coefficient of t^(n-k); slopes equal the root valuations.
NewtonPolygon newton_polygon(const IntPolynomial& p, const NormalizedValuation& v);

HodgePolygon hodge_polygon(int weight, std::span<const long> hodge_numbers);

/// Slopes lie in [0, i] and alpha and i - alpha occur equally often.
/// Refuses polygons built from unnormalized valuations.
bool symmetry_check(const NewtonPolygon& np, int i);

bool slope_zero_check(const Polygon& np);

enum class Comparison { holds, fails, incomparable };

struct PolygonComparison {
  Comparison verdict = Comparison::incomparable;
  std::optional<long> fails_at;  // first abscissa k where NP(k) < HP(k)
  bool endpoints_equal = false;
  bool coincide = false;  // identical vertex lists
};

/// NP >= HP via partial slope sums at every integer abscissa.
PolygonComparison np_ge_hp(const Polygon& np, const Polygon& hp);

const char* to_string(Comparison c);

}  // namespace polarcoh

#endif  // POLARCOH_POLYGONS_HPP
