#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "barbilian/errors.hpp"

namespace barbilian {

// A point of Euclidean n-space, n >= 2. Coordinates are dimensionless.
using Point = std::vector<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline void check_point(const Point& p, const char* what) {
  if (p.size() < 2)
    throw ValidationError(std::string(what) + ": points need dimension >= 2");
  for (double c : p)
    if (!std::isfinite(c))
      throw ValidationError(std::string(what) + ": non-finite coordinate");
}

inline double distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw ValidationError("point dimension mismatch");
  if (a.size() == 2) return std::hypot(a[0] - b[0], a[1] - b[1]);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline bool same_point(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline Vec2 to_vec2(const Point& p) { return {p[0], p[1]}; }
inline Point to_point(Vec2 v) { return {v.x, v.y}; }

}  // namespace barbilian
