#pragma once

#include "dimer.hpp"
#include "surface.hpp"

namespace octarec {

namespace detail {

struct V3Less {
    bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
        return a < b;
    }
};

template <class T>
class TRecursor {
public:
    TRecursor(const SteppedSurface& s, std::function<T(int, int)> at) : s_(s), at_(std::move(at)) {}

    T get(int i, int j, int k) {
        if (!s_.contains(i, j)) throw OutOfCone("T-system recursion left the window");
        if ((((i + j + k) % 2) + 2) % 2 != 1) throw OutOfCone("point off the odd sublattice");
        const int kij = s_.height(i, j);
        if (k < kij) throw OutOfCone("point below the initial-data surface");
        if (k == kij) return at_(i, j);
        std::array<int, 3> key{i, j, k};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // T_{i,j,k} T_{i,j,k-2} = T_{i,j+1,k-1} T_{i,j-1,k-1} + T_{i+1,j,k-1} T_{i-1,j,k-1}
        T num = get(i, j + 1, k - 1) * get(i, j - 1, k - 1) +
                get(i + 1, j, k - 1) * get(i - 1, j, k - 1);
        T val = value_traits<T>::div(num, get(i, j, k - 2));
        memo_.emplace(key, val);
        return val;
    }

private:
    const SteppedSurface& s_;
    std::function<T(int, int)> at_;
    std::map<std::array<int, 3>, T, V3Less> memo_;
};

}  // namespace detail

// Memoized exact recursion on the octahedron relation.
inline LaurentPoly recurse_t(const SteppedSurface& s, int i, int j, int k) {
    detail::TRecursor<LaurentPoly> rec(s, [&](int x, int y) { return s.assignment(x, y); });
    return rec.get(i, j, k);
}

inline Rational recurse_t_rational(const SteppedSurface& s, int i, int j, int k,
                                   const std::map<VarId, Rational>& point) {
    detail::TRecursor<Rational> rec(s, [&](int x, int y) { return lp_eval(s.assignment(x, y), point); });
    return rec.get(i, j, k);
}

// ---- Matrix-minor solutions ----

template <class T>
T solve_t_general_t(const SteppedSurface& s, const ShadowDomain& sh,
                    const std::function<T(int, int)>& at,
                    const DiagonalPolicy& policy = DiagonalPolicy::first()) {
    if (sh.degenerate) return at(sh.i, sh.j);
    LozengeSeq seq = lozenge_decompose(s, sh, policy);
    int lo = sh.i - sh.ell + 1, hi = sh.i + 1;
    for (const auto& lz : seq) {
        lo = std::min(lo, lz.strip);
        hi = std::max(hi, lz.strip + 1);
    }
    auto fp = lozenge_factor_product<T>(seq, lo, hi,
                                        [&](Vertex2 v) { return at(v.first, v.second); });
    Mat<T> m = fp.product();
    std::vector<int> rc;
    for (int r = sh.i - sh.ell + 1; r <= sh.i; ++r) rc.push_back(r - lo);
    T value = minor_det(m, rc, rc);
    for (const auto& [x, y] : sh.se_boundary) value = value * at(x, y);
    for (const auto& [x, y] : sh.sw_boundary) value = value_traits<T>::div(value, at(x, y));
    return value;
}

// Theorem "solgen": prefactor from the stored SW/SE boundary sequences times
// the ell x ell principal-corner minor of the shadow word.
inline LaurentPoly solve_t_general(const SteppedSurface& s, int i, int j, int k) {
    ShadowDomain sh = shadow(s, i, j, k);
    bool unit_vars = true;
    for (const auto& [x, y] : sh.vertices) {
        const auto& a = s.assignment(x, y);
        if (!(a.is_monomial() && a.leading().second == 1)) unit_vars = false;
    }
    if (unit_vars) {
        return solve_t_general_t<LaurentPoly>(s, sh,
                                              [&](int x, int y) { return s.assignment(x, y); });
    }
    RatPoly v = solve_t_general_t<RatPoly>(s, sh,
                                           [&](int x, int y) { return RatPoly(s.assignment(x, y)); });
    return v.as_poly();
}

inline Rational solve_t_general_rational(const SteppedSurface& s, int i, int j, int k,
                                         const std::map<VarId, Rational>& point) {
    ShadowDomain sh = shadow(s, i, j, k);
    return solve_t_general_t<Rational>(
        s, sh, [&](int x, int y) { return lp_eval(s.assignment(x, y), point); });
}

// Theorem "solflat": the flat-surface closed form.  The word is the
// theta_min(k) product; the minor is the principal (k-1) x (k-1) corner at
// rows i-k+2..i and the prefactor is
//   prod_{m=1}^{k-1} t_{m+i-k, j+1-m}^{-1}  prod_{p=1}^{k} t_{p+i-k, j-1+p}.
template <class T>
T solve_t_flat_t(const SteppedSurface& flat, int i, int j, int k,
                 const std::function<T(int, int)>& at) {
    ShadowDomain sh = shadow(flat, i, j, k);
    LozengeSeq seq = lozenge_decompose(flat, sh, DiagonalPolicy::first());
    int lo = i - k + 2, hi = i + 1;
    for (const auto& lz : seq) {
        lo = std::min(lo, lz.strip);
        hi = std::max(hi, lz.strip + 1);
    }
    auto fp = lozenge_factor_product<T>(seq, lo, hi,
                                        [&](Vertex2 v) { return at(v.first, v.second); });
    Mat<T> m = fp.product();
    std::vector<int> rc;
    for (int r = i - k + 2; r <= i; ++r) rc.push_back(r - lo);
    T value = minor_det(m, rc, rc);
    for (int p = 1; p <= k; ++p) value = value * at(p + i - k, j - 1 + p);
    for (int mm = 1; mm <= k - 1; ++mm) value = value_traits<T>::div(value, at(mm + i - k, j + 1 - mm));
    return value;
}

inline LaurentPoly solve_t_flat(int i, int j, int k) {
    if (k < 2) throw OutOfCone("solve_t_flat needs k >= 2");
    SteppedSurface flat = SteppedSurface::flat(i - k - 1, i + k + 1, j - k - 1, j + k + 1);
    return solve_t_flat_t<LaurentPoly>(flat, i, j, k,
                                       [&](int x, int y) { return flat.assignment(x, y); });
}

inline Rational solve_t_flat_rational(int i, int j, int k, const std::map<VarId, Rational>& point) {
    if (k < 2) throw OutOfCone("solve_t_flat needs k >= 2");
    SteppedSurface flat = SteppedSurface::flat(i - k - 1, i + k + 1, j - k - 1, j + k + 1);
    return solve_t_flat_t<Rational>(
        flat, i, j, k, [&](int x, int y) { return lp_eval(flat.assignment(x, y), point); });
}

// ---- Dual dimer graphs ----

// A face-weighted dual graph plus the geometry it was cut from; the crossing
// data keys each dual edge by the tessellation edge it crosses, which makes
// label-respecting isomorphism checks trivial for duals of one surface.
struct DualGraph {
    FaceWeightedGraph graph;
    std::vector<std::pair<Vertex2, Vertex2>> crossed;  // per edge id
    std::map<Vertex2, int> face_of_vertex;             // surface vertex -> face id
};

namespace detail {

struct DualCell {
    std::vector<Vertex2> vs;
    bool gray;
    int strip;  // cells between lines strip and strip+1
};

inline std::vector<std::pair<Vertex2, Vertex2>> cell_boundary_edges(const DualCell& c) {
    std::vector<std::pair<Vertex2, Vertex2>> out;
    const std::size_t n = c.vs.size();
    for (std::size_t a = 0; a < n; ++a) {
        Vertex2 p = c.vs[a], q = c.vs[(a + 1) % n];
        if (q < p) std::swap(p, q);
        out.emplace_back(p, q);
    }
    return out;
}

inline int cell_strip(const std::vector<Vertex2>& vs) {
    int lo = vs[0].first;
    for (const auto& v : vs) lo = std::min(lo, v.first);
    return lo;
}

// Cyclic order of a cell's vertices (triangles come as {a,b,c}; squares are
// already cyclic by construction).
inline DualCell make_cell(const std::vector<Vertex2>& vs, bool gray) {
    DualCell c;
    c.gray = gray;
    c.strip = cell_strip(vs);
    if (vs.size() == 4) {
        c.vs = vs;
        return c;
    }
    c.vs = vs;  // any vertex order works for a triangle's edge set
    return c;
}

inline DualGraph build_dual_from_cells(const SteppedSurface& s, std::vector<DualCell> cells,
                                       const std::set<Vertex2>& interior) {
    DualGraph out;
    // unique-on-a-line cells get erased; their vertical edges become dashed
    std::map<int, int> per_strip;
    for (const auto& c : cells) per_strip[c.strip]++;
    std::vector<char> erased(cells.size(), 0);
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        if (per_strip[cells[ci].strip] == 1) erased[ci] = 1;

    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        out.graph.add_vertex(cells[ci].gray, erased[ci] != 0);

    std::map<std::pair<Vertex2, Vertex2>, std::vector<int>> edge_cells;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (const auto& e : cell_boundary_edges(cells[ci])) edge_cells[e].push_back(static_cast<int>(ci));

    std::map<Vertex2, std::vector<int>> face_edges;
    for (const auto& [e, cs] : edge_cells) {
        if (cs.size() != 2) continue;
        const bool dashed = erased[cs[0]] || erased[cs[1]];
        int id = out.graph.add_edge(cs[0], cs[1], dashed);
        out.crossed.push_back(e);
        if (!dashed) {
            face_edges[e.first].push_back(id);
            face_edges[e.second].push_back(id);
        }
    }
    for (const auto& [v, ids] : face_edges) {
        if (ids.empty()) continue;
        int fid = out.graph.add_face(s.assignment(v.first, v.second), interior.count(v) > 0, ids);
        out.face_of_vertex[v] = fid;
    }
    return out;
}

}  // namespace detail

// 4-6-8 dual of a shadow: one dual vertex per tessellation cell (completion
// triangles included), one dual edge per interior tessellation edge, faces
// indexed by the shadow's vertices (Sec. 3.5 construction).
inline DualGraph build_468_dual(const SteppedSurface& s, const ShadowDomain& sh,
                                const DiagonalPolicy& policy = DiagonalPolicy::first()) {
    std::vector<detail::DualCell> cells;
    for (const auto& c : sh.tess.cells) cells.push_back(detail::make_cell(c.vs, c.gray));
    // completion triangles from the lozenge decomposition
    for (const auto& lz : lozenge_decompose(s, sh, policy)) {
        if (!lz.completion) continue;
        const Vertex2 left{lz.strip, lz.jpos}, right{lz.strip, lz.jpos + 1};
        // the completed side is the one whose triangle is not a domain cell
        const Vertex2 apex_above = (lz.kind == FactorKind::U) ? lz.gray_apex : lz.white_apex;
        const Vertex2 apex_below = (lz.kind == FactorKind::U) ? lz.white_apex : lz.gray_apex;
        auto is_domain_tri = [&](Vertex2 apex) {
            for (const auto& c : sh.tess.cells) {
                if (c.is_square) {
                    bool l = false, r = false, a = false;
                    for (const auto& v : c.vs) {
                        l |= v == left;
                        r |= v == right;
                        a |= v == apex;
                    }
                    if (l && r && a) return true;
                } else {
                    bool l = false, r = false, a = false;
                    for (const auto& v : c.vs) {
                        l |= v == left;
                        r |= v == right;
                        a |= v == apex;
                    }
                    if (l && r && a) return true;
                }
            }
            return false;
        };
        const bool above_missing = !is_domain_tri(apex_above);
        const Vertex2 apex = above_missing ? apex_above : apex_below;
        const bool gray = above_missing == (lz.kind == FactorKind::U);
        cells.push_back(detail::make_cell({left, right, apex}, gray));
    }
    auto interior = detail::interior_vertices(sh.tess);
    return detail::build_dual_from_cells(s, std::move(cells), interior);
}

// The Aztec-diamond dual theta_min(k)^*: explicit flat-diamond cell list, no
// shadow machinery, so that matching the general construction is a real test.
inline DualGraph build_aztec_dual(const SteppedSurface& flat, int i, int j, int k) {
    std::set<Vertex2> diamond;
    for (int x = i - k + 1; x <= i + k - 1; ++x)
        for (int y = j - k + 1; y <= j + k - 1; ++y)
            if (std::abs(x - i) + std::abs(y - j) <= k - 1) diamond.insert({x, y});
    Tessellation tess = tessellate(flat, diamond);
    std::vector<detail::DualCell> cells;
    for (const auto& c : tess.cells) cells.push_back(detail::make_cell(c.vs, c.gray));
    return detail::build_dual_from_cells(flat, std::move(cells), detail::interior_vertices(tess));
}

inline DualGraph build_aztec_dual(int i, int j, int k) {
    SteppedSurface flat = SteppedSurface::flat(i - k - 1, i + k + 1, j - k - 1, j + k + 1);
    return build_aztec_dual(flat, i, j, k);
}

// Label-respecting isomorphism for duals cut from the same surface geometry:
// both graphs must cross the same tessellation edges with the same dash
// flags, and expose the same faces.
inline bool dual_isomorphic(const DualGraph& a, const DualGraph& b) {
    auto sig = [](const DualGraph& g) {
        std::set<std::pair<std::pair<Vertex2, Vertex2>, bool>> edges;
        for (std::size_t e = 0; e < g.crossed.size(); ++e)
            edges.insert({g.crossed[e], g.graph.edges()[e].dashed});
        std::set<std::pair<Vertex2, std::pair<bool, std::set<std::pair<Vertex2, Vertex2>>>>> faces;
        for (const auto& [v, fid] : g.face_of_vertex) {
            std::set<std::pair<Vertex2, Vertex2>> fe;
            for (int e : g.graph.faces()[fid].edges) fe.insert(g.crossed[e]);
            faces.insert({v, {g.graph.faces()[fid].inner, fe}});
        }
        return std::make_pair(edges, faces);
    };
    return sig(a) == sig(b);
}

}  // namespace octarec
