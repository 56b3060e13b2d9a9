#pragma once

#include <array>
#include <cmath>

namespace beltrami {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr const double& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

struct Vec2 {
  double u = 0.0, v = 0.0;
  constexpr Vec2 operator+(const Vec2& o) const { return {u + o.u, v + o.v}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
  constexpr Vec2 operator*(double s) const { return {u * s, v * s}; }
};

constexpr Vec2 operator*(double s, const Vec2& w) { return w * s; }
constexpr double dot(const Vec2& a, const Vec2& b) { return a.u * b.u + a.v * b.v; }
constexpr double cross2(const Vec2& a, const Vec2& b) { return a.u * b.v - a.v * b.u; }
constexpr double norm2(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm2(v)); }

// Axis-aligned box; coordinates may be chart coordinates rather than Cartesian.
struct Box3 {
  Vec3 lo, hi;
  constexpr bool contains(const Vec3& q) const {
    return q.x >= lo.x && q.x <= hi.x && q.y >= lo.y && q.y <= hi.y && q.z >= lo.z && q.z <= hi.z;
  }
  constexpr Vec3 lerp(const Vec3& t) const {
    return {lo.x + (hi.x - lo.x) * t.x, lo.y + (hi.y - lo.y) * t.y, lo.z + (hi.z - lo.z) * t.z};
  }
};

struct Box2 {
  Vec2 lo, hi;
  constexpr bool contains(const Vec2& q) const {
    return q.u >= lo.u && q.u <= hi.u && q.v >= lo.v && q.v <= hi.v;
  }
};

// Azimuth about the z axis, branch (-pi, pi].
inline double azimuth(const Vec3& p) { return std::atan2(p.y, p.x); }

// Difference a-b reduced to the principal branch (-pi, pi].
inline double principal_angle(double d) {
  const double two_pi = 6.283185307179586476925286766559;
  d = std::fmod(d, two_pi);
  if (d > 3.14159265358979323846) d -= two_pi;
  if (d <= -3.14159265358979323846) d += two_pi;
  return d;
}

}  // namespace beltrami
