#pragma once

#include <functional>
#include <ostream>
#include <set>

#include "factors.hpp"

namespace octarec {

// Planar network of U/V chips, oriented left to right.  Wires carry the
// matrix indices lo..hi of the underlying factor product; vertex (col, w)
// is the point of wire w between chip col and chip col+1.  The edge from
// entry i to exit j of a chip carries the (i,j) entry of the chip matrix.
template <class T>
class Network {
public:
    struct Edge {
        int from_wire;
        int to_wire;
        T weight;
        bool unit;  // weight-1 edges are drawn dashed
    };

    Network(int lo, int hi) : lo_(lo), hi_(hi) {}

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int wires() const { return hi_ - lo_ + 1; }
    int columns() const { return static_cast<int>(slices_.size()); }
    const std::vector<std::vector<Edge>>& slices() const { return slices_; }

    void add_slice(std::vector<Edge> edges) { slices_.push_back(std::move(edges)); }

    // Transfer value from entry connector `source` to exit connector `sink`,
    // both in absolute wire labels; layered dynamic program over the DAG.
    T transfer(int source, int sink) const {
        const int n = wires();
        std::vector<T> cur(n, value_traits<T>::zero());
        cur[source - lo_] = value_traits<T>::one();
        for (const auto& slice : slices_) {
            std::vector<T> next(n, value_traits<T>::zero());
            for (const auto& e : slice) {
                if (value_traits<T>::is_zero(cur[e.from_wire - lo_])) continue;
                next[e.to_wire - lo_] += cur[e.from_wire - lo_] * e.weight;
            }
            cur = std::move(next);
        }
        return cur[sink - lo_];
    }

    Mat<T> transfer_matrix() const {
        Mat<T> m(wires());
        for (int s = 0; s < wires(); ++s)
            for (int t = 0; t < wires(); ++t) m(s, t) = transfer(lo_ + s, lo_ + t);
        return m;
    }

    // Partition function of vertex-disjoint path families from `sources` to
    // `sinks` (equal sizes).  Paths are enumerated by backtracking with
    // vertex-occupancy marking; on these planar networks with compatible
    // connector order this equals the corresponding minor.
    T path_partition(const std::vector<int>& sources, const std::vector<int>& sinks) const {
        if (sources.size() != sinks.size())
            throw std::invalid_argument("path_partition needs |sources| == |sinks|");
        if (sources.empty()) return value_traits<T>::one();
        if (sources.size() == 1) return transfer(sources[0], sinks[0]);

        const int cols = columns();
        const int n = wires();
        // occupied[c][w] marks vertex (c, w), c = 0..cols
        std::vector<std::vector<char>> occupied(cols + 1, std::vector<char>(n, 0));
        T total = value_traits<T>::zero();

        // Enumerate paths for source index si, then recurse to si+1.
        std::function<void(std::size_t, const T&)> place = [&](std::size_t si, const T& acc) {
            if (si == sources.size()) {
                total += acc;
                return;
            }
            const int target = sinks[si] - lo_;
            std::function<void(int, int, const T&)> walk = [&](int col, int wire, const T& w) {
                if (col == cols) {
                    if (wire == target) place(si + 1, w);
                    return;
                }
                for (const auto& e : slices_[col]) {
                    if (e.from_wire - lo_ != wire) continue;
                    const int nx = e.to_wire - lo_;
                    if (occupied[col + 1][nx]) continue;
                    occupied[col + 1][nx] = 1;
                    walk(col + 1, nx, w * e.weight);
                    occupied[col + 1][nx] = 0;
                }
            };
            const int s = sources[si] - lo_;
            if (occupied[0][s]) return;
            occupied[0][s] = 1;
            walk(0, s, acc);
            occupied[0][s] = 0;
        };
        place(0, value_traits<T>::one());
        return total;
    }

    // Number of path configurations (all weights counted as 1).
    long count_path_families(const std::vector<int>& sources, const std::vector<int>& sinks) const {
        Network<Rational> ones(lo_, hi_);
        for (const auto& slice : slices_) {
            std::vector<typename Network<Rational>::Edge> s2;
            for (const auto& e : slice) s2.push_back({e.from_wire, e.to_wire, Rational(1), e.unit});
            ones.add_slice(std::move(s2));
        }
        Rational r = ones.path_partition(sources, sinks);
        return static_cast<long>(r.get_num().get_si());
    }

    // Text export: one line per vertex and per weighted edge, with connector
    // annotations.  Weights are printed via the supplied formatter.
    void write(std::ostream& os, const std::function<std::string(const T&)>& fmt) const {
        os << "network wires " << lo_ << ".." << hi_ << " columns " << columns() << "\n";
        for (int w = lo_; w <= hi_; ++w)
            os << "connector " << w << " entry (0," << w << ") exit (" << columns() << "," << w
               << ")\n";
        for (int c = 0; c < columns(); ++c)
            for (const auto& e : slices_[c])
                os << "edge (" << c << "," << e.from_wire << ") -> (" << c + 1 << "," << e.to_wire
                   << ") weight " << fmt(e.weight) << (e.unit ? " dashed" : "") << "\n";
    }

private:
    int lo_, hi_;
    std::vector<std::vector<Edge>> slices_;
};

// Chip concatenation per Eq. rep2UV / rep2UVi: every factor contributes one
// column; untouched wires pass through with weight 1.
template <class T>
Network<T> build_network(const FactorProduct<T>& fp) {
    Network<T> net(fp.lo(), fp.hi());
    for (const auto& f : fp.factors()) {
        std::vector<typename Network<T>::Edge> slice;
        for (int w = fp.lo(); w <= fp.hi(); ++w) {
            if (w == f.index || w == f.index + 1) continue;
            slice.push_back({w, w, value_traits<T>::one(), true});
        }
        const int i = f.index;
        if (f.kind == FactorKind::U) {
            // [[1, 0], [c/b, a/b]]
            slice.push_back({i, i, value_traits<T>::one(), true});
            slice.push_back({i + 1, i, value_traits<T>::div(f.c, f.b), false});
            slice.push_back({i + 1, i + 1, value_traits<T>::div(f.a, f.b), false});
        } else {
            // [[b/c, a/c], [0, 1]]
            slice.push_back({i, i, value_traits<T>::div(f.b, f.c), false});
            slice.push_back({i, i + 1, value_traits<T>::div(f.a, f.c), false});
            slice.push_back({i + 1, i + 1, value_traits<T>::one(), true});
        }
        net.add_slice(std::move(slice));
    }
    return net;
}

}  // namespace octarec
