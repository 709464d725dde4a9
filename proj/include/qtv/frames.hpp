#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtv/qfield.hpp"

namespace qtv {

struct Vec2 {
    long x = 0;
    long y = 0;

    bool is_zero() const { return x == 0 && y == 0; }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(long k, Vec2 v) { return {k * v.x, k * v.y}; }
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    std::string str() const;
};

/// Oriented lattice basis (w, n) with w ^ n = 1.
struct Frame {
    Vec2 w;
    Vec2 n;

    Frame reversed() const { return {-w, -n}; }
    bool valid() const;
    friend bool operator==(const Frame&, const Frame&) = default;
};

struct VertexFrames {
    std::array<Frame, 3> legs;

    /// Frame of the reversed leg attached to the vertex (0-based leg index).
    Frame reversed(int leg) const { return legs[static_cast<std::size_t>(leg)].reversed(); }
};

long wedge(Vec2 u, Vec2 v);

/// Coordinates (a, b) with v = a*w + b*n.
std::pair<long, long> express(Vec2 v, const Frame& f);

/// Degree of the operator attached to v on a leg with frame f: -(v ^ n).
long wdegree(Vec2 v, const Frame& f);

VertexFrames default_vertex_frames();

/// Empty when all invariants hold; otherwise one message per violation.
std::vector<std::string> validate(const VertexFrames& vf);

/// Formal element sum_v c_v T_v + central.
struct TorusElement {
    std::map<Vec2, QRat> gens;
    QRat central;

    bool is_zero() const;
    TorusElement& operator+=(const TorusElement& o);
};

/// [T_u, T_v] in the quantum torus; with a frame, the central extension
/// contributes central_sign * (u ^ n) when u + v = 0.
TorusElement torus_bracket(Vec2 u, Vec2 v, const std::optional<Frame>& central, int central_sign = 1);

/// [T_u,[T_v,T_w]] + [T_v,[T_w,T_u]] + [T_w,[T_u,T_v]].
TorusElement jacobi_check(Vec2 u, Vec2 v, Vec2 w, const std::optional<Frame>& central);

}  // namespace qtv
