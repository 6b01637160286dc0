#include "polarcoh/polygons.hpp"

#include <algorithm>

namespace polarcoh {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below ac.
BigRational cross(const Vertex& a, const Vertex& b, const Vertex& c) {
  return BigRational(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * BigRational(c.x - a.x);
}

RatVector slopes_of(const std::vector<Vertex>& hull) {
  std::vector<BigRational> s;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const long width = hull[k].x - hull[k - 1].x;
    const BigRational slope = (hull[k].y - hull[k - 1].y) / BigRational(width);
    s.insert(s.end(), static_cast<std::size_t>(width), slope);
  }
  RatVector out(static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) out(static_cast<Eigen::Index>(k)) = s[k];
  return out;
}

}  // namespace

std::vector<Vertex> lower_convex_hull(std::vector<Vertex> points) {
  std::sort(points.begin(), points.end(), [](const Vertex& a, const Vertex& b) { return a.x < b.x; });
  for (std::size_t k = 1; k < points.size(); ++k)
    if (points[k].x == points[k - 1].x) throw DomainError("hull points need distinct abscissae");
  std::vector<Vertex> hull;
  for (auto& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(std::move(p));
  }
  return hull;
}

Polygon Polygon::from_slopes(RatVector slopes) {
  std::sort(slopes.begin(), slopes.end());
  Polygon out;
  out.vertices.push_back({0, BigRational(0)});
  BigRational height = 0;
  for (Eigen::Index k = 0; k < slopes.size(); ++k) {
    height += slopes(k);
    const bool corner = k + 1 == slopes.size() || slopes(k + 1) != slopes(k);
    if (corner) out.vertices.push_back({static_cast<long>(k + 1), height});
  }
  out.slopes = std::move(slopes);
  return out;
}

NewtonPolygon newton_polygon(const IntPolynomial& p, const NormalizedValuation& v) {
  if (!p.is_monic()) throw ValidityError("newton_polygon expects a monic polynomial");
  if (p.degree() > 0 && p.constant_term() == 0)
    throw SingularActionError("newton_polygon: P(0) = 0");
  std::vector<Vertex> points;
  for (long k = 0; k <= p.degree(); ++k) {
    const BigInt a = p.from_top(static_cast<std::size_t>(k));
    if (a != 0) points.push_back({k, valuate(BigRational(a), v)});
  }
  NewtonPolygon np;
  np.vertices = lower_convex_hull(std::move(points));
  np.slopes = slopes_of(np.vertices);
  np.normalized = v.is_normalized();
  return np;
}

HodgePolygon hodge_polygon(int weight, std::span<const long> hodge_numbers) {
  if (weight < 0) throw DomainError("negative weight");
  if (hodge_numbers.size() != static_cast<std::size_t>(weight) + 1)
    throw ShapeError("weight " + std::to_string(weight) + " needs " + std::to_string(weight + 1) +
                     " Hodge numbers");
  if (std::any_of(hodge_numbers.begin(), hodge_numbers.end(), [](long h) { return h < 0; }))
    throw DomainError("Hodge numbers must be nonnegative");
  if (std::all_of(hodge_numbers.begin(), hodge_numbers.end(), [](long h) { return h == 0; }))
    throw EmptyPolygonError("all Hodge numbers vanish");

  HodgePolygon hp;
  hp.weight = weight;
  hp.hodge_numbers.assign(hodge_numbers.begin(), hodge_numbers.end());
  hp.vertices.push_back({0, BigRational(0)});
  long x = 0;
  BigRational y = 0;
  std::vector<BigRational> s;
  for (int j = 0; j <= weight; ++j) {
    const long h = hodge_numbers[static_cast<std::size_t>(j)];
    if (h == 0) continue;
    x += h;
    y += BigRational(static_cast<long>(j) * h);
    hp.vertices.push_back({x, y});
    s.insert(s.end(), static_cast<std::size_t>(h), BigRational(j));
  }
  hp.slopes.resize(static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) hp.slopes(static_cast<Eigen::Index>(k)) = s[k];
  return hp;
}

bool symmetry_check(const NewtonPolygon& np, int i) {
  if (!np.normalized)
    throw ValidityError("symmetry_check needs a valuation normalized by v(q) = 1");
  const BigRational weight(i);
  const Eigen::Index n = np.slopes.size();
  RatVector s = np.slopes;
  std::sort(s.begin(), s.end());
  for (Eigen::Index k = 0; k < n; ++k) {
    if (s(k) < 0 || s(k) > weight) return false;
    if (s(k) + s(n - 1 - k) != weight) return false;
  }
  return true;
}

bool slope_zero_check(const Polygon& np) {
  return std::all_of(np.slopes.begin(), np.slopes.end(), [](const BigRational& s) { return s == 0; });
}

PolygonComparison np_ge_hp(const Polygon& np, const Polygon& hp) {
  PolygonComparison out;
  if (np.length() != hp.length()) return out;
  RatVector a = np.slopes, b = hp.slopes;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  BigRational sa = 0, sb = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    sa += a(k);
    sb += b(k);
    if (sa < sb && !out.fails_at) out.fails_at = static_cast<long>(k + 1);
  }
  out.verdict = out.fails_at ? Comparison::fails : Comparison::holds;
  out.endpoints_equal = sa == sb;
  out.coincide = np.vertices == hp.vertices;
  return out;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::holds:
      return "holds";
    case Comparison::fails:
      return "fails";
    case Comparison::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

}  // namespace polarcoh
