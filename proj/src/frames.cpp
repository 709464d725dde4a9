#include "qtv/frames.hpp"

#include <stdexcept>

namespace qtv {

std::string Vec2::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

long wedge(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

bool Frame::valid() const { return wedge(w, n) == 1; }

std::pair<long, long> express(Vec2 v, const Frame& f) {
    if (!f.valid()) throw std::invalid_argument("frame " + f.w.str() + "," + f.n.str() + " has w^n != 1");
    return {wedge(v, f.n), wedge(f.w, v)};
}

long wdegree(Vec2 v, const Frame& f) {
    if (v.is_zero()) throw std::invalid_argument("wdegree: zero vector");
    return -wedge(v, f.n);
}

VertexFrames default_vertex_frames() {
    return {{Frame{{1, 0}, {0, 1}}, Frame{{-1, 1}, {-1, 0}}, Frame{{0, -1}, {1, -1}}}};
}

std::vector<std::string> validate(const VertexFrames& vf) {
    std::vector<std::string> out;
    for (int l = 0; l < 3; ++l) {
        const Frame& f = vf.legs[static_cast<std::size_t>(l)];
        if (!f.valid())
            out.push_back("leg " + std::to_string(l + 1) + ": w^n = " + std::to_string(wedge(f.w, f.n)) +
                          " (expected 1)");
    }
    Vec2 s = vf.legs[0].n + vf.legs[1].n + vf.legs[2].n;
    if (!s.is_zero()) out.push_back("n1+n2+n3 = " + s.str() + " (expected (0,0))");
    for (int l = 0; l < 3; ++l) {
        long c = wedge(vf.legs[static_cast<std::size_t>(l)].n, vf.legs[static_cast<std::size_t>((l + 1) % 3)].n);
        if (c != 1)
            out.push_back("n" + std::to_string(l + 1) + "^n" + std::to_string((l + 1) % 3 + 1) + " = " +
                          std::to_string(c) + " (expected 1)");
    }
    return out;
}

bool TorusElement::is_zero() const {
    if (!central.is_zero()) return false;
    for (const auto& [v, c] : gens)
        if (!c.is_zero()) return false;
    return true;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    for (const auto& [v, c] : o.gens) {
        auto& slot = gens[v];
        slot += c;
        if (slot.is_zero()) gens.erase(v);
    }
    central += o.central;
    return *this;
}

TorusElement torus_bracket(Vec2 u, Vec2 v, const std::optional<Frame>& central, int central_sign) {
    TorusElement out;
    Vec2 s = u + v;
    if (s.is_zero()) {
        if (central) out.central = QRat(central_sign * wedge(u, central->n));
        return out;
    }
    QRat c = qint(wedge(u, v));
    if (!c.is_zero()) out.gens.emplace(s, c);
    return out;
}

namespace {

// [T_a, X] for a formal element X; central parts of X commute with everything.
TorusElement bracket_with(Vec2 a, const TorusElement& x, const std::optional<Frame>& central) {
    TorusElement out;
    for (const auto& [v, c] : x.gens) {
        TorusElement b = torus_bracket(a, v, central);
        for (auto& [w, d] : b.gens) d *= c;
        b.central *= c;
        out += b;
    }
    return out;
}

}  // namespace

TorusElement jacobi_check(Vec2 u, Vec2 v, Vec2 w, const std::optional<Frame>& central) {
    if (u.is_zero() || v.is_zero() || w.is_zero()) throw std::invalid_argument("jacobi_check: zero vector");
    TorusElement total;
    total += bracket_with(u, torus_bracket(v, w, central), central);
    total += bracket_with(v, torus_bracket(w, u, central), central);
    total += bracket_with(w, torus_bracket(u, v, central), central);
    return total;
}

}  // namespace qtv
