#pragma once

#include <functional>
#include <ostream>

#include "a1.hpp"

namespace octarec {

// Vertex-bicolored face-weighted graph: the substrate of every dimer
// partition function in the library.  Faces reference the adjacent matchable
// edges; dashed edges only separate external regions.  Terminal-decorated
// external edges are never matched and their end vertex is not covered.
class FaceWeightedGraph {
public:
    struct Vertex {
        bool black;
        bool terminal = false;
    };
    struct Edge {
        int u, v;
        bool dashed = false;
    };
    struct Face {
        LaurentPoly label;
        bool inner;
        std::vector<int> edges;  // ids of adjacent non-dashed edges
    };

    int add_vertex(bool black, bool terminal = false) {
        vertices_.push_back({black, terminal});
        return static_cast<int>(vertices_.size()) - 1;
    }
    int add_edge(int u, int v, bool dashed = false) {
        if (!dashed && vertices_[u].black == vertices_[v].black)
            throw std::logic_error("dimer graph must be bipartite");
        edges_.push_back({u, v, dashed});
        return static_cast<int>(edges_.size()) - 1;
    }
    int add_face(LaurentPoly label, bool inner, std::vector<int> edge_ids) {
        faces_.push_back({std::move(label), inner, std::move(edge_ids)});
        return static_cast<int>(faces_.size()) - 1;
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    int inner_face_count() const {
        int n = 0;
        for (const auto& f : faces_) n += f.inner ? 1 : 0;
        return n;
    }

    // Census of inner faces by valency (4 -> squares, 6 -> hexagons, ...).
    std::map<int, int> inner_face_census() const {
        std::map<int, int> census;
        for (const auto& f : faces_)
            if (f.inner) census[static_cast<int>(f.edges.size())]++;
        return census;
    }

    // All perfect matchings of the non-terminal vertices, each a sorted list
    // of edge ids, enumerated in a fixed order.
    std::vector<std::vector<int>> enumerate_matchings() const {
        const int nv = static_cast<int>(vertices_.size());
        std::vector<std::vector<int>> incident(nv);
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            if (edges_[e].dashed) continue;
            if (vertices_[edges_[e].u].terminal || vertices_[edges_[e].v].terminal) continue;
            incident[edges_[e].u].push_back(e);
            incident[edges_[e].v].push_back(e);
        }
        std::vector<char> covered(nv, 0);
        for (int v = 0; v < nv; ++v) covered[v] = vertices_[v].terminal ? 1 : 0;
        std::vector<int> current;
        std::vector<std::vector<int>> out;
        std::function<void()> rec = [&]() {
            int pivot = -1;
            for (int v = 0; v < nv; ++v)
                if (!covered[v]) {
                    pivot = v;
                    break;
                }
            if (pivot < 0) {
                std::vector<int> m = current;
                std::sort(m.begin(), m.end());
                out.push_back(std::move(m));
                return;
            }
            for (int e : incident[pivot]) {
                const int other = edges_[e].u == pivot ? edges_[e].v : edges_[e].u;
                if (covered[other]) continue;
                covered[pivot] = covered[other] = 1;
                current.push_back(e);
                rec();
                current.pop_back();
                covered[pivot] = covered[other] = 0;
            }
        };
        rec();
        std::sort(out.begin(), out.end());
        return out;
    }

    // Face-weight exponent for one matching: inner faces contribute
    // v(F)/2 - 1 - D, external faces 1 - D, with D the number of adjacent
    // occupied edges (Eq. "weightdimer"; ladder squares/hexagons are the
    // valency-4/6 specializations).
    std::vector<int> face_exponents(const std::vector<int>& matching) const {
        std::vector<char> in(edges_.size(), 0);
        for (int e : matching) in[e] = 1;
        std::vector<int> exps;
        exps.reserve(faces_.size());
        for (const auto& f : faces_) {
            int d = 0;
            for (int e : f.edges) d += in[e];
            const int v = static_cast<int>(f.edges.size());
            exps.push_back(f.inner ? v / 2 - 1 - d : 1 - d);
        }
        return exps;
    }

    LaurentPoly matching_weight(const std::vector<int>& matching) const {
        auto exps = face_exponents(matching);
        LaurentPoly w{1};
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            const LaurentPoly& label = faces_[i].label;
            if (label.is_one()) continue;
            if (label.is_monomial() && label.leading().second == 1) {
                Monomial m = label.leading().first;
                Monomial powed;
                for (int r = 0; r < std::abs(exps[i]); ++r) powed = powed * m;
                if (exps[i] < 0) powed = powed.inverse();
                w = w.shifted(powed);
            } else {
                for (int r = 0; r < exps[i]; ++r) w *= label;
                if (exps[i] < 0) throw NotDivisible("negative exponent on a non-monomial face label");
            }
        }
        return w;
    }

    LaurentPoly partition_function() const {
        LaurentPoly total;
        for (const auto& m : enumerate_matchings()) total += matching_weight(m);
        return total;
    }

    Rational partition_function_eval(const std::map<VarId, Rational>& point) const {
        std::vector<Rational> values;
        values.reserve(faces_.size());
        for (const auto& f : faces_) values.push_back(lp_eval(f.label, point));
        Rational total(0);
        for (const auto& m : enumerate_matchings()) {
            auto exps = face_exponents(m);
            Rational w(1);
            for (std::size_t i = 0; i < faces_.size(); ++i) w *= rational_pow(values[i], exps[i]);
            total += w;
        }
        total.canonicalize();
        return total;
    }

    void write(std::ostream& os) const {
        os << "dimer-graph vertices " << vertices_.size() << " edges " << edges_.size()
           << " faces " << faces_.size() << "\n";
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            os << "vertex " << v << " " << (vertices_[v].black ? "black" : "white")
               << (vertices_[v].terminal ? " terminal" : "") << "\n";
        for (std::size_t e = 0; e < edges_.size(); ++e)
            os << "edge " << e << " " << edges_[e].u << " " << edges_[e].v
               << (edges_[e].dashed ? " dashed" : "") << "\n";
        for (const auto& f : faces_) {
            os << (f.inner ? "face " : "external ") << lp_canonical_text(f.label) << " edges";
            for (int e : f.edges) os << " " << e;
            os << "\n";
        }
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
};

// Transformed ladder graph of an A1 path portion (Sec. 2.4 of the matrix
// picture): one inner face per inner vertex j of [j0, j1], a square when the
// two steps at j differ and a hexagon when they agree; end faces carry
// t_{j0} and t_{j1}.  The boundary prefactors are already absorbed by the
// 1-delta exponents, so the partition function equals T directly.
inline FaceWeightedGraph build_ladder(const InitPathA1& p, int j0, int j1) {
    FaceWeightedGraph g;
    if (j0 == j1) {
        g.add_face(p.assignment(j0), false, {});
        return g;
    }
    if (j1 == j0 + 1) {
        // Two-face degenerate graph: one rung, absorption per step direction.
        const bool up = p.step(j0) == 'U';
        int b = g.add_vertex(true), w = g.add_vertex(false);
        int rung = g.add_edge(b, w);
        g.add_face(p.assignment(j0), false, up ? std::vector<int>{rung} : std::vector<int>{});
        g.add_face(p.assignment(j1), false, up ? std::vector<int>{} : std::vector<int>{rung});
        return g;
    }

    const int steps = j1 - j0;
    // Rung c corresponds to the step j0+c-1 -> chip index c-1.
    std::vector<int> bot(steps + 1), top(steps + 1);
    auto chip_black_bottom = [&](int c) { return p.step(j0 + c) == 'D'; };  // V chip
    bot[1] = g.add_vertex(chip_black_bottom(0));
    top[1] = g.add_vertex(!chip_black_bottom(0));
    std::vector<int> rung(steps + 1, -1);
    rung[1] = g.add_edge(bot[1], top[1]);
    std::vector<std::vector<int>> face_edges(steps);  // face c between rungs c and c+1
    for (int c = 2; c <= steps; ++c) {
        bot[c] = g.add_vertex(chip_black_bottom(c - 1));
        top[c] = g.add_vertex(!chip_black_bottom(c - 1));
        rung[c] = g.add_edge(bot[c], top[c]);
        auto& fe = face_edges[c - 1];
        fe.push_back(rung[c - 1]);
        const bool same = p.step(j0 + c - 2) == p.step(j0 + c - 1);
        if (!same) {
            fe.push_back(g.add_edge(top[c - 1], top[c]));
            fe.push_back(g.add_edge(bot[c - 1], bot[c]));
        } else {
            int mt = g.add_vertex(chip_black_bottom(c - 2));   // opposite of the top color
            int mb = g.add_vertex(!chip_black_bottom(c - 2));  // opposite of the bottom color
            fe.push_back(g.add_edge(top[c - 1], mt));
            fe.push_back(g.add_edge(mt, top[c]));
            fe.push_back(g.add_edge(bot[c - 1], mb));
            fe.push_back(g.add_edge(mb, bot[c]));
        }
        fe.push_back(rung[c]);
        g.add_face(p.assignment(j0 + c - 1), true, fe);
    }
    g.add_face(p.assignment(j0), false, {rung[1]});
    g.add_face(p.assignment(j1), false, {rung[steps]});
    return g;
}

inline FaceWeightedGraph ladder_graph_a1(const InitPathA1& p, int j0, int j1) {
    return build_ladder(p, j0, j1);
}

}  // namespace octarec
