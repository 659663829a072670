#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "factors.hpp"

namespace octarec {

using Vertex2 = std::pair<int, int>;  // (i, j): i is the strip axis, j the product axis

// Height function over a finite window of Z^2 with i + j + k odd and unit
// steps between neighbors, plus one assignment per vertex.
class SteppedSurface {
public:
    SteppedSurface(int i0, int i1, int j0, int j1)
        : i0_(i0), i1_(i1), j0_(j0), j1_(j1),
          k_(static_cast<std::size_t>((i1 - i0 + 1)) * (j1 - j0 + 1), 0),
          t_(static_cast<std::size_t>((i1 - i0 + 1)) * (j1 - j0 + 1)) {}

    // Flat surface k_{i,j} = (i + j + 1) mod 2 with free variables t_{i,j}.
    static SteppedSurface flat(int i0, int i1, int j0, int j1) {
        SteppedSurface s(i0, i1, j0, j1);
        for (int i = i0; i <= i1; ++i)
            for (int j = j0; j <= j1; ++j) {
                s.set_height(i, j, (((i + j + 1) % 2) + 2) % 2);
                s.set_assignment(i, j, LaurentPoly::variable(VarId::t(i, j)));
            }
        return s;
    }

    int i0() const { return i0_; }
    int i1() const { return i1_; }
    int j0() const { return j0_; }
    int j1() const { return j1_; }
    bool contains(int i, int j) const { return i >= i0_ && i <= i1_ && j >= j0_ && j <= j1_; }

    int height(int i, int j) const {
        require(i, j);
        return k_[idx(i, j)];
    }
    const LaurentPoly& assignment(int i, int j) const {
        require(i, j);
        return t_[idx(i, j)];
    }
    void set_height(int i, int j, int k) {
        require(i, j);
        k_[idx(i, j)] = k;
    }
    void set_assignment(int i, int j, LaurentPoly v) {
        require(i, j);
        t_[idx(i, j)] = std::move(v);
    }

    void check_invariants() const {
        for (int i = i0_; i <= i1_; ++i)
            for (int j = j0_; j <= j1_; ++j) {
                if ((((i + j + height(i, j)) % 2) + 2) % 2 != 1)
                    throw std::logic_error("surface parity violated");
                if (i < i1_ && std::abs(height(i + 1, j) - height(i, j)) != 1)
                    throw std::logic_error("surface step violated along i");
                if (j < j1_ && std::abs(height(i, j + 1) - height(i, j)) != 1)
                    throw std::logic_error("surface step violated along j");
            }
    }

    bool mutable_at(int i, int j) const {
        if (i <= i0_ || i >= i1_ || j <= j0_ || j >= j1_) return false;
        const int k = height(i, j);
        const int e = height(i + 1, j) - k;
        return height(i - 1, j) == k + e && height(i, j + 1) == k + e && height(i, j - 1) == k + e;
    }

    // Mutation mu_{i,j}: local bump with the octahedron exchange
    // t' = (t_{i+1,j} t_{i-1,j} + t_{i,j+1} t_{i,j-1}) / t_{i,j}.
    SteppedSurface mutated(int i, int j) const {
        if (!mutable_at(i, j)) throw NotMutable("surface not mutable at the requested site");
        SteppedSurface out = *this;
        const int e = height(i + 1, j) - height(i, j);
        out.set_height(i, j, height(i, j) + 2 * e);
        out.set_assignment(
            i, j,
            lp_exact_div(assignment(i + 1, j) * assignment(i - 1, j) +
                             assignment(i, j + 1) * assignment(i, j - 1),
                         assignment(i, j)));
        return out;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - i0_) * (j1_ - j0_ + 1) + (j - j0_);
    }
    void require(int i, int j) const {
        if (!contains(i, j)) throw WindowTooSmall("surface window does not contain the vertex");
    }

    int i0_, i1_, j0_, j1_;
    std::vector<int> k_;
    std::vector<LaurentPoly> t_;
};

// ---- Tessellation ----
//
// Cells of the square/triangle tessellation of (a sub-domain of) a surface.
// Unit squares classify into: forced split (exactly one level diagonal) and
// tetrahedron squares (both diagonals level), which stay whole until a
// diagonal policy splits them.

struct Cell {
    bool is_square;
    std::vector<Vertex2> vs;       // 3 or 4 vertices
    bool gray;
    Vertex2 square_origin;         // lower-left corner of the parent unit square
};

enum class SquareType { ForcedD1, ForcedD2, Tetra };  // D1: (0,0)-(1,1), D2: (1,0)-(0,1)

inline SquareType classify_square(int h00, int h10, int h01, int h11) {
    const bool d1 = h00 == h11, d2 = h10 == h01;
    if (d1 && d2) return SquareType::Tetra;
    if (d1) return SquareType::ForcedD1;
    if (d2) return SquareType::ForcedD2;
    throw std::logic_error("impossible unit square heights");
}

// Gray side rule: the face above (below) a horizontal edge with k increasing
// (decreasing) left to right is gray.
inline bool triangle_gray(const SteppedSurface& s, Vertex2 edge_left, bool apex_above) {
    const bool increasing =
        s.height(edge_left.first, edge_left.second + 1) > s.height(edge_left.first, edge_left.second);
    return apex_above == increasing;
}

struct Tessellation {
    std::set<Vertex2> domain;
    std::vector<Cell> cells;
};

namespace detail {

// Horizontal (j-direction) edge of a triangle given as {2 vertices on one
// i-line, apex on an adjacent line}.
struct TriangleShape {
    Vertex2 edge_left;  // (i, j) with partner (i, j+1)
    Vertex2 apex;
};

inline std::optional<TriangleShape> triangle_shape(const std::vector<Vertex2>& vs) {
    for (int a = 0; a < 3; ++a) {
        const Vertex2 apex = vs[a];
        const Vertex2 p = vs[(a + 1) % 3], q = vs[(a + 2) % 3];
        if (p.first == q.first && std::abs(p.second - q.second) == 1 &&
            std::abs(apex.first - p.first) == 1) {
            return TriangleShape{p.second < q.second ? p : q, apex};
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline Tessellation tessellate(const SteppedSurface& s, const std::set<Vertex2>& domain) {
    Tessellation out;
    out.domain = domain;
    auto in = [&](int i, int j) { return domain.count({i, j}) > 0; };
    auto mk_tri = [&](Vertex2 a, Vertex2 b, Vertex2 c, Vertex2 origin) {
        Cell cell;
        cell.is_square = false;
        cell.vs = {a, b, c};
        cell.square_origin = origin;
        auto shape = detail::triangle_shape(cell.vs);
        cell.gray = triangle_gray(s, shape->edge_left, shape->apex.first > shape->edge_left.first);
        out.cells.push_back(std::move(cell));
    };
    // Iterate over unit squares with lower-left corner (i, j).
    for (int i = s.i0(); i < s.i1(); ++i)
        for (int j = s.j0(); j < s.j1(); ++j) {
            int present = in(i, j) + in(i + 1, j) + in(i, j + 1) + in(i + 1, j + 1);
            if (present < 3) continue;
            const int h00 = s.height(i, j), h10 = s.height(i + 1, j);
            const int h01 = s.height(i, j + 1), h11 = s.height(i + 1, j + 1);
            const SquareType type = classify_square(h00, h10, h01, h11);
            const Vertex2 origin{i, j};
            if (present == 4) {
                if (type == SquareType::Tetra) {
                    Cell cell;
                    cell.is_square = true;
                    cell.vs = {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
                    // A square sits above its own bottom edge.
                    cell.gray = triangle_gray(s, {i, j}, true);
                    cell.square_origin = origin;
                    out.cells.push_back(std::move(cell));
                } else if (type == SquareType::ForcedD1) {
                    mk_tri({i, j}, {i + 1, j + 1}, {i + 1, j}, origin);
                    mk_tri({i, j}, {i + 1, j + 1}, {i, j + 1}, origin);
                } else {
                    mk_tri({i + 1, j}, {i, j + 1}, {i, j}, origin);
                    mk_tri({i + 1, j}, {i, j + 1}, {i + 1, j + 1}, origin);
                }
            } else {
                // Exactly one missing corner: a triangle survives if its three
                // vertices contain an admissible diagonal.
                Vertex2 missing = !in(i, j)           ? Vertex2{i, j}
                                  : !in(i + 1, j)     ? Vertex2{i + 1, j}
                                  : !in(i, j + 1)     ? Vertex2{i, j + 1}
                                                      : Vertex2{i + 1, j + 1};
                const bool missing_on_d1 = missing == Vertex2{i, j} || missing == Vertex2{i + 1, j + 1};
                if (type == SquareType::ForcedD1 && missing_on_d1) continue;
                if (type == SquareType::ForcedD2 && !missing_on_d1) continue;
                std::vector<Vertex2> tri;
                for (Vertex2 v : {Vertex2{i, j}, Vertex2{i + 1, j}, Vertex2{i + 1, j + 1},
                                  Vertex2{i, j + 1}})
                    if (v != missing) tri.push_back(v);
                mk_tri(tri[0], tri[1], tri[2], origin);
            }
        }
    return out;
}

// ---- Shadow of a point onto the initial-data surface ----

struct ShadowDomain {
    int i, j, k;                       // the queried point
    std::set<Vertex2> vertices;        // trimmed domain D°
    Tessellation tess;
    std::vector<Vertex2> sw_boundary;  // x <= i-1, y <= j, bottom to top
    std::vector<Vertex2> se_boundary;  // x <= i,   y >= j, bottom to top
    int ell = 0;                       // |SE|
    bool degenerate = false;           // k equals the surface height at (i,j)
};

namespace detail {

// Interior test: the cells around v cover a full disk.  Angles are counted
// in multiples of 45 degrees; a full turn is 8.
inline std::set<Vertex2> interior_vertices(const Tessellation& t) {
    std::map<Vertex2, int> angle;
    for (const auto& c : t.cells) {
        if (c.is_square) {
            for (const auto& v : c.vs) angle[v] += 2;
        } else {
            auto shape = triangle_shape(c.vs);
            // the right angle sits at the edge vertex under/over the apex
            const Vertex2 right_angle{shape->edge_left.first, shape->apex.second};
            for (const auto& v : c.vs) angle[v] += (v == right_angle) ? 2 : 1;
        }
    }
    std::set<Vertex2> out;
    for (const auto& [v, a] : angle)
        if (a == 8) out.insert(v);
    return out;
}

// Forward-convention elementary triangles of a unit square: the diagonal
// joins the larger-height pair (the forced diagonal on split squares).
inline std::vector<std::array<Vertex2, 3>> forward_triangles(const SteppedSurface& s, int i, int j) {
    const int h00 = s.height(i, j), h10 = s.height(i + 1, j);
    const int h01 = s.height(i, j + 1), h11 = s.height(i + 1, j + 1);
    SquareType type = classify_square(h00, h10, h01, h11);
    bool use_d1;
    switch (type) {
        case SquareType::ForcedD1: use_d1 = true; break;
        case SquareType::ForcedD2: use_d1 = false; break;
        case SquareType::Tetra: use_d1 = h00 > h10; break;
    }
    if (use_d1)
        return {{Vertex2{i, j}, {i + 1, j + 1}, {i + 1, j}},
                {Vertex2{i, j}, {i + 1, j + 1}, {i, j + 1}}};
    return {{Vertex2{i + 1, j}, {i, j + 1}, {i, j}},
            {Vertex2{i + 1, j}, {i, j + 1}, {i + 1, j + 1}}};
}

}  // namespace detail

// Shadow: vertices of the surface inside the light cone |x-i|+|y-j| <= |z-k|,
// trimmed by iteratively peeling boundary vertices that are the strict height
// minimum of an elementary (forward-convention) triangle, then discarding
// vertices that belong to no cell.  The scan order is a parameter so that
// order-independence can be asserted by tests.
inline ShadowDomain shadow(const SteppedSurface& s, int i, int j, int k,
                           std::mt19937_64* scramble = nullptr) {
    if ((((i + j + k) % 2) + 2) % 2 != 1) throw OutOfCone("point parity is not odd");
    if (!s.contains(i, j)) throw WindowTooSmall("point column outside the window");
    if (k < s.height(i, j)) throw OutOfCone("point below the initial-data surface");

    ShadowDomain out;
    out.i = i, out.j = j, out.k = k;
    if (k == s.height(i, j)) {
        out.degenerate = true;
        out.vertices.insert({i, j});
        out.tess.domain = out.vertices;
        out.se_boundary = {{i, j}};
        out.ell = 1;
        return out;
    }

    std::set<Vertex2> d;
    for (int x = s.i0(); x <= s.i1(); ++x)
        for (int y = s.j0(); y <= s.j1(); ++y)
            if (std::abs(x - i) + std::abs(y - j) <= std::abs(s.height(x, y) - k))
                d.insert({x, y});
    for (const auto& [x, y] : d)
        if (x - 1 < s.i0() || x + 1 > s.i1() || y - 1 < s.j0() || y + 1 > s.j1())
            throw WindowTooSmall("shadow touches the window border");

    for (;;) {
        Tessellation tess = tessellate(s, d);
        auto interior = detail::interior_vertices(tess);

        // collect peelable vertices
        std::vector<Vertex2> peelable;
        std::set<Vertex2> seen;
        for (const auto& v : d) {
            if (interior.count(v)) continue;
            const auto [x, y] = v;
            bool strict_min = false;
            for (int di = -1; di <= 0 && !strict_min; ++di)
                for (int dj = -1; dj <= 0 && !strict_min; ++dj) {
                    const int sx = x + di, sy = y + dj;
                    for (const auto& tri : detail::forward_triangles(s, sx, sy)) {
                        bool has_v = false, all_in = true, strict = true;
                        for (const auto& w : tri) {
                            if (w == v) has_v = true;
                            if (!d.count(w)) all_in = false;
                        }
                        if (!has_v || !all_in) continue;
                        for (const auto& w : tri)
                            if (w != v && s.height(w.first, w.second) <= s.height(x, y))
                                strict = false;
                        if (strict) {
                            strict_min = true;
                            break;
                        }
                    }
                }
            if (strict_min) peelable.push_back(v);
        }
        if (!peelable.empty()) {
            if (scramble) {
                std::uniform_int_distribution<std::size_t> pick(0, peelable.size() - 1);
                d.erase(peelable[pick(*scramble)]);
            } else {
                d.erase(peelable.front());  // lexicographically smallest
            }
            continue;
        }
        // drop vertices in no cell
        std::set<Vertex2> covered;
        for (const auto& c : tess.cells)
            for (const auto& v : c.vs) covered.insert(v);
        std::set<Vertex2> kept;
        for (const auto& v : d)
            if (covered.count(v)) kept.insert(v);
        if (kept.size() == d.size()) {
            out.vertices = d;
            out.tess = std::move(tess);
            break;
        }
        d = std::move(kept);
    }

    // Convexity of the projected domain: along every row and column the
    // domain is an interval.
    {
        std::map<int, std::pair<int, int>> rows, cols;
        for (const auto& [x, y] : out.vertices) {
            auto upd = [&](std::map<int, std::pair<int, int>>& m, int key, int val) {
                auto it = m.find(key);
                if (it == m.end())
                    m[key] = {val, val};
                else {
                    it->second.first = std::min(it->second.first, val);
                    it->second.second = std::max(it->second.second, val);
                }
            };
            upd(rows, x, y);
            upd(cols, y, x);
        }
        long count = 0;
        for (const auto& [x, r] : rows) count += r.second - r.first + 1;
        if (count != static_cast<long>(out.vertices.size()))
            throw std::logic_error("shadow projection is not convex");
    }

    // Boundary sequences, bottom to top: SW holds the left end of every row
    // from the bottom row of the shadow up to row i-1, SE the right end of
    // every row up to row i.  On the flat diamond these are exactly the
    // South-West and South-East boundary edges of theta_min(k), matching the
    // closed-form prefactor of Eq. "tsolflat".
    {
        std::map<int, std::pair<int, int>> row_extent;
        for (const auto& [x, y] : out.vertices) {
            auto it = row_extent.find(x);
            if (it == row_extent.end())
                row_extent[x] = {y, y};
            else {
                it->second.first = std::min(it->second.first, y);
                it->second.second = std::max(it->second.second, y);
            }
        }
        const int x_min = row_extent.begin()->first;
        out.ell = i - x_min + 1;
        for (int x = x_min; x <= i; ++x) {
            auto it = row_extent.find(x);
            if (it == row_extent.end()) throw std::logic_error("shadow row gap");
            if (x <= i - 1) out.sw_boundary.push_back({x, it->second.first});
            out.se_boundary.push_back({x, it->second.second});
        }
    }
    return out;
}

// ---- Lozenge decomposition ----

enum class DiagonalChoice { Forward, Backward };

struct DiagonalPolicy {
    // Forward: the first diagonal (larger-height pair), matching the
    // theta_min words.  Backward: the opposite convention.  The callback
    // form decides per square.
    static DiagonalPolicy first() { return DiagonalPolicy{[](Vertex2) { return DiagonalChoice::Forward; }}; }
    static DiagonalPolicy second() { return DiagonalPolicy{[](Vertex2) { return DiagonalChoice::Backward; }}; }
    static DiagonalPolicy per_square(std::function<DiagonalChoice(Vertex2)> f) {
        return DiagonalPolicy{std::move(f)};
    }
    std::function<DiagonalChoice(Vertex2)> choose;
};

namespace detail {

// The diagonal actually used for the unit square with lower-left corner
// (i, j): forced on split squares, policy-chosen on tetrahedron squares.
// True means D1, the (i,j)-(i+1,j+1) diagonal.
inline bool effective_diagonal_is_d1(const SteppedSurface& s, Vertex2 origin,
                                     const DiagonalPolicy& policy) {
    const auto [i, j] = origin;
    const int h00 = s.height(i, j), h10 = s.height(i + 1, j);
    const int h01 = s.height(i, j + 1), h11 = s.height(i + 1, j + 1);
    switch (classify_square(h00, h10, h01, h11)) {
        case SquareType::ForcedD1: return true;
        case SquareType::ForcedD2: return false;
        case SquareType::Tetra: {
            const bool forward_d1 = h00 > h10;  // forward joins the larger pair
            return policy.choose(origin) == DiagonalChoice::Forward ? forward_d1 : !forward_d1;
        }
    }
    return true;
}

}  // namespace detail

struct Lozenge {
    FactorKind kind;
    int strip;        // the line x carrying the horizontal edge
    int jpos;         // edge from (strip, jpos) to (strip, jpos+1)
    Vertex2 gray_apex;
    Vertex2 white_apex;
    bool completion = false;  // white side completed from outside the domain
};

using LozengeSeq = std::vector<Lozenge>;

namespace detail {

struct HalfTriangle {
    Vertex2 edge_left;
    Vertex2 apex;
    bool gray;
};

}  // namespace detail

// Splits the tessellation into bi-colored lozenges: triangles paired across
// each horizontal edge, diagonals of tetrahedron squares chosen per policy,
// boundary horizontal edges completed by a triangle from the ambient surface.
inline LozengeSeq lozenge_decompose(const SteppedSurface& s, const ShadowDomain& sh,
                                    const DiagonalPolicy& policy = DiagonalPolicy::first()) {
    if (sh.degenerate) return {};
    std::vector<detail::HalfTriangle> halves;
    for (const auto& cell : sh.tess.cells) {
        if (!cell.is_square) {
            auto shape = detail::triangle_shape(cell.vs);
            halves.push_back({shape->edge_left, shape->apex, cell.gray});
            continue;
        }
        const auto [i, j] = cell.square_origin;
        const bool use_d1 = detail::effective_diagonal_is_d1(s, cell.square_origin, policy);
        std::array<std::array<Vertex2, 3>, 2> tris;
        if (use_d1)
            tris = {std::array<Vertex2, 3>{Vertex2{i, j}, {i + 1, j + 1}, {i + 1, j}},
                    std::array<Vertex2, 3>{Vertex2{i, j}, {i + 1, j + 1}, {i, j + 1}}};
        else
            tris = {std::array<Vertex2, 3>{Vertex2{i + 1, j}, {i, j + 1}, {i, j}},
                    std::array<Vertex2, 3>{Vertex2{i + 1, j}, {i, j + 1}, {i + 1, j + 1}}};
        for (const auto& tri : tris) {
            std::vector<Vertex2> vs(tri.begin(), tri.end());
            auto shape = detail::triangle_shape(vs);
            halves.push_back({shape->edge_left, shape->apex, cell.gray});
        }
    }

    // Group half-triangles by horizontal edge.
    std::map<Vertex2, std::vector<const detail::HalfTriangle*>> by_edge;
    for (const auto& h : halves) by_edge[h.edge_left].push_back(&h);

    LozengeSeq out;
    for (auto& [edge, tris] : by_edge) {
        const auto [x, y] = edge;
        const bool decreasing = s.height(x, y + 1) < s.height(x, y);
        const detail::HalfTriangle* below = nullptr;
        const detail::HalfTriangle* above = nullptr;
        for (const auto* t : tris)
            (t->apex.first < x ? below : above) = t;
        bool completion = false;
        Vertex2 below_apex, above_apex;
        auto completed_apex = [&](bool complete_above) {
            // The missing side's triangle comes from the ambient surface,
            // split along the same effective diagonal.
            const int sx = complete_above ? x : x - 1;
            if (sx < s.i0() || sx + 1 > s.i1())
                throw WindowTooSmall("completion outside the surface window");
            const bool d1 = detail::effective_diagonal_is_d1(s, {sx, y}, policy);
            // triangle containing the edge (x,y)-(x,y+1) in square (sx, y)
            if (complete_above) return d1 ? Vertex2{x + 1, y + 1} : Vertex2{x + 1, y};
            return d1 ? Vertex2{x - 1, y} : Vertex2{x - 1, y + 1};
        };
        if (below && above) {
            if (below->gray == above->gray)
                throw NotLozengeable("horizontal edge with equal-colored triangles");
            below_apex = below->apex;
            above_apex = above->apex;
        } else if (below || above) {
            completion = true;
            if (below) {
                below_apex = below->apex;
                above_apex = completed_apex(true);
            } else {
                above_apex = above->apex;
                below_apex = completed_apex(false);
            }
        } else {
            continue;
        }
        Lozenge lz;
        lz.strip = x;
        lz.jpos = y;
        lz.completion = completion;
        // V iff the gray triangle points down, i.e. the edge decreases.
        lz.kind = decreasing ? FactorKind::V : FactorKind::U;
        if (decreasing) {
            lz.gray_apex = below_apex;
            lz.white_apex = above_apex;
        } else {
            lz.gray_apex = above_apex;
            lz.white_apex = below_apex;
        }
        out.push_back(lz);
    }

    // Product order: groups by jpos left to right.  Within a group only
    // consecutive strips interact; the shared split square dictates the
    // order (D2 diagonal: lower strip first, D1: upper strip first), except
    // that a V below U pair commutes and keeps the ascending convention.
    std::stable_sort(out.begin(), out.end(), [](const Lozenge& a, const Lozenge& b) {
        if (a.jpos != b.jpos) return a.jpos < b.jpos;
        return a.strip < b.strip;
    });
    LozengeSeq ordered;
    std::size_t pos = 0;
    while (pos < out.size()) {
        std::size_t end = pos;
        while (end < out.size() && out[end].jpos == out[pos].jpos) ++end;
        // Kahn's algorithm over the consecutive-strip precedence chain.
        const std::size_t n = end - pos;
        std::vector<std::vector<std::size_t>> succ(n);
        std::vector<int> indeg(n, 0);
        for (std::size_t a = 0; a + 1 < n; ++a) {
            const Lozenge& lower = out[pos + a];
            const Lozenge& upper = out[pos + a + 1];
            if (upper.strip != lower.strip + 1) continue;
            if (lower.kind == FactorKind::V && upper.kind == FactorKind::U) continue;
            const bool d1 =
                detail::effective_diagonal_is_d1(s, {lower.strip, lower.jpos}, policy);
            if (d1) {
                succ[a + 1].push_back(a);  // upper before lower
                ++indeg[a];
            } else {
                succ[a].push_back(a + 1);
                ++indeg[a + 1];
            }
        }
        std::vector<char> done(n, 0);
        for (std::size_t emitted = 0; emitted < n; ++emitted) {
            std::size_t pick = n;
            for (std::size_t c = 0; c < n; ++c)
                if (!done[c] && indeg[c] == 0) {
                    pick = c;
                    break;
                }
            ordered.push_back(out[pos + pick]);
            done[pick] = 1;
            for (std::size_t nx : succ[pick]) --indeg[nx];
        }
        pos = end;
    }
    return ordered;
}

// The matrix word of a lozenge sequence.  U lozenges contribute
// U(left, right, apex-above); V lozenges V(apex-below, left, right).
template <class T>
FactorProduct<T> lozenge_factor_product(const LozengeSeq& seq, int lo, int hi,
                                        const std::function<T(Vertex2)>& value_at) {
    FactorProduct<T> fp(lo, hi);
    for (const auto& lz : seq) {
        const Vertex2 left{lz.strip, lz.jpos};
        const Vertex2 right{lz.strip, lz.jpos + 1};
        if (lz.kind == FactorKind::U)
            fp.push_u(lz.strip, value_at(left), value_at(right), value_at(lz.gray_apex));
        else
            fp.push_v(lz.strip, value_at(lz.gray_apex), value_at(left), value_at(right));
    }
    return fp;
}

// ---- Surface literal ----
//
//   surface
//   window <i0> <i1> <j0> <j1>
//   heights
//   <k(i,j0) ... k(i,j1)>        one row per i = i0..i1
//   bind t_<i>_<j> <rational>    (zero or more)

inline void write_surface(std::ostream& os, const SteppedSurface& s,
                          const std::map<VarId, Rational>& binds = {}) {
    os << "surface\n";
    os << "window " << s.i0() << " " << s.i1() << " " << s.j0() << " " << s.j1() << "\n";
    os << "heights\n";
    for (int i = s.i0(); i <= s.i1(); ++i) {
        for (int j = s.j0(); j <= s.j1(); ++j) os << (j > s.j0() ? " " : "") << s.height(i, j);
        os << "\n";
    }
    for (const auto& [v, q] : binds) os << "bind " << v.str() << " " << to_string(q) << "\n";
}

struct SurfaceFile {
    SteppedSurface surface;
    std::map<VarId, Rational> binds;
};

inline SurfaceFile read_surface(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "surface") throw ParseError("expected 'surface' header");
    if (!std::getline(is, line)) throw ParseError("missing window line");
    std::istringstream ws(line);
    std::string tag;
    int i0, i1, j0, j1;
    ws >> tag >> i0 >> i1 >> j0 >> j1;
    if (tag != "window" || ws.fail()) throw ParseError("bad window line");
    if (!std::getline(is, line) || line != "heights") throw ParseError("missing heights line");
    SteppedSurface s(i0, i1, j0, j1);
    for (int i = i0; i <= i1; ++i) {
        if (!std::getline(is, line)) throw ParseError("missing height row");
        std::istringstream hs(line);
        for (int j = j0; j <= j1; ++j) {
            int k;
            if (!(hs >> k)) throw ParseError("bad height row");
            s.set_height(i, j, k);
            s.set_assignment(i, j, LaurentPoly::variable(VarId::t(i, j)));
        }
    }
    std::map<VarId, Rational> binds;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string var, val;
        ls >> tag >> var >> val;
        if (tag != "bind" || ls.fail()) throw ParseError("unknown surface line: " + line);
        binds[VarId::parse(var)] = rational_parse(val);
    }
    s.check_invariants();
    return {std::move(s), std::move(binds)};
}

}  // namespace octarec
