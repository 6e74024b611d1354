#pragma once

#include <cmath>
#include <numbers>

namespace shapedp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Image convention: x to the right, y downward.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Angle of v in [0, 2*pi). With y pointing down this grows clockwise on screen.
inline double clockwise_angle(Point2 v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

}  // namespace shapedp
