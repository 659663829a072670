#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include "network.hpp"

namespace octarec {

// Admissible initial data of the A1 T-system: a finite window of a path with
// unit steps, j + k_j even, and one invertible assignment per vertex.
class InitPathA1 {
public:
    InitPathA1(int j_min, int k_min, const std::string& steps) : j_min_(j_min) {
        k_.push_back(k_min);
        for (char s : steps) {
            if (s == 'U')
                k_.push_back(k_.back() + 1);
            else if (s == 'D')
                k_.push_back(k_.back() - 1);
            else
                throw ParseError("path steps must be 'U' or 'D'");
        }
        if ((j_min_ + k_min) % 2 != 0)
            throw ParseError("path parity violated: j + k_j must be even");
        t_.reserve(k_.size());
        for (int j = j_min_; j <= j_max(); ++j) t_.push_back(LaurentPoly::variable(VarId::t(j)));
    }

    // Flat path k_j = j mod 2 on [j_min, j_max].
    static InitPathA1 flat(int j_min, int j_max) {
        std::string steps;
        for (int j = j_min; j < j_max; ++j) steps.push_back(((j % 2) + 2) % 2 == 0 ? 'U' : 'D');
        return InitPathA1(j_min, ((j_min % 2) + 2) % 2, steps);
    }

    int j_min() const { return j_min_; }
    int j_max() const { return j_min_ + static_cast<int>(k_.size()) - 1; }
    bool contains(int j) const { return j >= j_min_ && j <= j_max(); }

    int height(int j) const {
        require(j);
        return k_[j - j_min_];
    }
    const LaurentPoly& assignment(int j) const {
        require(j);
        return t_[j - j_min_];
    }
    void bind(int j, LaurentPoly value) {
        require(j);
        t_[j - j_min_] = std::move(value);
    }

    // 'U' if k_{j+1} = k_j + 1, else 'D'; defined for j in [j_min, j_max).
    char step(int j) const {
        require(j);
        require(j + 1);
        return k_[j + 1 - j_min_] > k_[j - j_min_] ? 'U' : 'D';
    }

    std::string steps() const {
        std::string s;
        for (int j = j_min_; j < j_max(); ++j) s.push_back(step(j));
        return s;
    }

    bool mutable_at(int j) const {
        if (j <= j_min_ || j >= j_max()) return false;
        return k_[j - 1 - j_min_] == k_[j + 1 - j_min_];
    }

    // Mutation mu_j: k_j -> k_j + 2e and t_j -> (t_{j-1} t_{j+1} + 1) / t_j.
    InitPathA1 mutated(int j) const {
        if (!mutable_at(j)) throw NotMutable("path is not mutable at j=" + std::to_string(j));
        InitPathA1 out = *this;
        const int e = k_[j - 1 - j_min_] - k_[j - j_min_];
        out.k_[j - j_min_] += 2 * e;
        out.t_[j - j_min_] =
            lp_exact_div(t_[j - 1 - j_min_] * t_[j + 1 - j_min_] + LaurentPoly(1), t_[j - j_min_]);
        return out;
    }

private:
    void require(int j) const {
        if (!contains(j)) throw OutOfCone("j=" + std::to_string(j) + " outside the path window");
    }

    int j_min_;
    std::vector<int> k_;
    std::vector<LaurentPoly> t_;
};

namespace detail {

template <class T>
class A1Recursor {
public:
    A1Recursor(const InitPathA1& p, const std::function<T(int)>& value_at) : p_(p), at_(value_at) {}

    T get(int j, int k) {
        if (!p_.contains(j)) throw OutOfCone("A1 recursion left the window at j=" + std::to_string(j));
        if (((j + k) % 2 + 2) % 2 != 0) throw OutOfCone("A1 point off the even sublattice");
        const int kj = p_.height(j);
        if (k < kj) throw OutOfCone("A1 point below the initial path");
        if (k == kj) return at_(j);
        auto it = memo_.find({j, k});
        if (it != memo_.end()) return it->second;
        // T_{j,k} T_{j,k-2} = T_{j+1,k-1} T_{j-1,k-1} + 1
        T num = get(j + 1, k - 1) * get(j - 1, k - 1) + value_traits<T>::one();
        T val = value_traits<T>::div(num, get(j, k - 2));
        memo_.emplace(std::pair<int, int>(j, k), val);
        return val;
    }

private:
    const InitPathA1& p_;
    std::function<T(int)> at_;
    std::map<std::pair<int, int>, T> memo_;
};

}  // namespace detail

// Direct dynamic programming on T_{j,k+1} T_{j,k-1} = T_{j+1,k} T_{j-1,k} + 1.
inline LaurentPoly recurse_a1(const InitPathA1& p, int j, int k) {
    detail::A1Recursor<LaurentPoly> rec(p, [&](int jj) { return p.assignment(jj); });
    return rec.get(j, k);
}

inline Rational recurse_a1_rational(const InitPathA1& p, int j, int k,
                                    const std::map<VarId, Rational>& point) {
    detail::A1Recursor<Rational> rec(p, [&](int jj) { return lp_eval(p.assignment(jj), point); });
    return rec.get(j, k);
}

struct A1Support {
    int j0;  // largest m with (m, k + m - j) on the path
    int j1;  // smallest m with (m, k + j - m) on the path
};

inline A1Support a1_support(const InitPathA1& p, int j, int k) {
    if (!p.contains(j)) throw OutOfCone("query point outside the window");
    if (k < p.height(j)) throw OutOfCone("query point below the initial path");
    int j0 = p.j_min() - 1;
    for (int m = p.j_max(); m >= p.j_min(); --m)
        if (p.height(m) == k + m - j) {
            j0 = m;
            break;
        }
    int j1 = p.j_max() + 1;
    for (int m = p.j_min(); m <= p.j_max(); ++m)
        if (p.height(m) == k + j - m) {
            j1 = m;
            break;
        }
    if (j0 < p.j_min() || j1 > p.j_max())
        throw OutOfCone("support of the point is not contained in the window");
    return {j0, j1};
}

// The path factor product M_{k,t}(j0, j1): one factor per step, U for an up
// step and V for a down step, with consecutive assignments as arguments.
template <class T>
FactorProduct<T> a1_factor_product(const InitPathA1& p, int j0, int j1,
                                   const std::function<T(int)>& value_at) {
    FactorProduct<T> fp(1, 2);
    for (int m = j0; m < j1; ++m) {
        if (p.step(m) == 'U')
            fp.push_u(1, value_at(m), value_at(m + 1), value_traits<T>::one());
        else
            fp.push_v(1, value_traits<T>::one(), value_at(m), value_at(m + 1));
    }
    return fp;
}

// Theorem "aonesol": T_{j,k} = t_{j1} (M_{k,t}(j0,j1))_{1,1}.
inline LaurentPoly solve_a1(const InitPathA1& p, int j, int k) {
    if (p.contains(j) && k == p.height(j)) return p.assignment(j);
    auto [j0, j1] = a1_support(p, j, k);
    bool symbolic_vars = true;
    for (int m = j0; m <= j1; ++m)
        if (!(p.assignment(m).is_monomial() && p.assignment(m).leading().second == 1))
            symbolic_vars = false;
    if (symbolic_vars) {
        auto fp = a1_factor_product<LaurentPoly>(p, j0, j1, [&](int m) { return p.assignment(m); });
        Mat<LaurentPoly> m = fp.product();
        return p.assignment(j1) * m(0, 0);
    }
    auto fp = a1_factor_product<RatPoly>(p, j0, j1, [&](int m) { return RatPoly(p.assignment(m)); });
    Mat<RatPoly> m = fp.product();
    return (RatPoly(p.assignment(j1)) * m(0, 0)).as_poly();
}

inline Rational solve_a1_rational(const InitPathA1& p, int j, int k,
                                  const std::map<VarId, Rational>& point) {
    if (p.contains(j) && k == p.height(j)) return lp_eval(p.assignment(j), point);
    auto [j0, j1] = a1_support(p, j, k);
    auto fp = a1_factor_product<Rational>(p, j0, j1,
                                          [&](int m) { return lp_eval(p.assignment(m), point); });
    Mat<Rational> m = fp.product();
    Rational r = lp_eval(p.assignment(j1), point) * m(0, 0);
    r.canonicalize();
    return r;
}

enum class A1Ray { C, D };

// Conserved quantities of Eq. "aonecons", evaluated at the lowest point of
// the ray where all three participating values are determined:
//   c ray (j - k = m):  c_m = (T_{j-1,k+1} + T_{j+1,k-1}) / T_{j,k}
//   d ray (j + k = m):  d_m = (T_{j-1,k-1} + T_{j+1,k+1}) / T_{j,k}
// Each quantity is constant along its ray; the time-like ray direction is
// the one along which the exchange ratio is invariant.
inline RatPoly conserved_a1(const InitPathA1& p, A1Ray ray, int m, int extra_height = 0) {
    int k_top = 0;
    for (int j = p.j_min(); j <= p.j_max(); ++j) k_top = std::max(k_top, p.height(j));
    k_top += static_cast<int>(p.j_max() - p.j_min()) + 2 + extra_height;
    auto in_cone = [&](int j, int k) {
        if (!p.contains(j) || k < p.height(j)) return false;
        try {
            (void)a1_support(p, j, k);
            return true;
        } catch (const OutOfCone&) {
            return false;
        }
    };
    for (int k = 0; k <= k_top; ++k) {
        const int j = (ray == A1Ray::C) ? m + k : m - k;
        if (!p.contains(j)) continue;
        if (((j + k) % 2 + 2) % 2 != 0) continue;
        const bool ok = (ray == A1Ray::C)
                            ? in_cone(j, k) && in_cone(j - 1, k + 1) && in_cone(j + 1, k - 1)
                            : in_cone(j, k) && in_cone(j - 1, k - 1) && in_cone(j + 1, k + 1);
        if (!ok) continue;
        if (ray == A1Ray::C)
            return RatPoly(recurse_a1(p, j - 1, k + 1) + recurse_a1(p, j + 1, k - 1),
                           recurse_a1(p, j, k));
        return RatPoly(recurse_a1(p, j - 1, k - 1) + recurse_a1(p, j + 1, k + 1),
                       recurse_a1(p, j, k));
    }
    throw OutOfCone("no computable point on the requested ray");
}

// Conserved value at the n-th computable point of the ray (n = 0 lowest).
inline RatPoly conserved_a1_at(const InitPathA1& p, A1Ray ray, int m, int skip) {
    int k_top = 0;
    for (int j = p.j_min(); j <= p.j_max(); ++j) k_top = std::max(k_top, p.height(j));
    k_top += static_cast<int>(p.j_max() - p.j_min()) + 2;
    auto in_cone = [&](int j, int k) {
        if (!p.contains(j) || k < p.height(j)) return false;
        try {
            (void)a1_support(p, j, k);
            return true;
        } catch (const OutOfCone&) {
            return false;
        }
    };
    int seen = 0;
    for (int k = 0; k <= k_top; ++k) {
        const int j = (ray == A1Ray::C) ? m + k : m - k;
        if (!p.contains(j)) continue;
        if (((j + k) % 2 + 2) % 2 != 0) continue;
        const bool ok = (ray == A1Ray::C)
                            ? in_cone(j, k) && in_cone(j - 1, k + 1) && in_cone(j + 1, k - 1)
                            : in_cone(j, k) && in_cone(j - 1, k - 1) && in_cone(j + 1, k + 1);
        if (!ok) continue;
        if (seen++ < skip) continue;
        if (ray == A1Ray::C)
            return RatPoly(recurse_a1(p, j - 1, k + 1) + recurse_a1(p, j + 1, k - 1),
                           recurse_a1(p, j, k));
        return RatPoly(recurse_a1(p, j - 1, k - 1) + recurse_a1(p, j + 1, k + 1),
                       recurse_a1(p, j, k));
    }
    throw OutOfCone("not enough computable points on the requested ray");
}

// ---- Path literal ----
//
//   a1path
//   anchor <j_min> <k_min>
//   steps <U|D...>
//   bind <var> <rational>     (zero or more)

inline void write_a1path(std::ostream& os, const InitPathA1& p,
                         const std::map<VarId, Rational>& binds = {}) {
    os << "a1path\n";
    os << "anchor " << p.j_min() << " " << p.height(p.j_min()) << "\n";
    os << "steps " << p.steps() << "\n";
    for (const auto& [v, q] : binds) os << "bind " << v.str() << " " << to_string(q) << "\n";
}

struct A1PathFile {
    InitPathA1 path;
    std::map<VarId, Rational> binds;
};

inline A1PathFile read_a1path(std::istream& is) {
    std::string line, tag;
    if (!std::getline(is, line) || line != "a1path") throw ParseError("expected 'a1path' header");
    int j_min = 0, k_min = 0;
    std::string steps;
    std::map<VarId, Rational> binds;
    bool have_anchor = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        ls >> tag;
        if (tag == "anchor") {
            if (!(ls >> j_min >> k_min)) throw ParseError("bad anchor line");
            have_anchor = true;
        } else if (tag == "steps") {
            if (!(ls >> steps)) throw ParseError("bad steps line");
        } else if (tag == "bind") {
            std::string var, val;
            if (!(ls >> var >> val)) throw ParseError("bad bind line");
            binds[VarId::parse(var)] = rational_parse(val);
        } else {
            throw ParseError("unknown a1path line: " + line);
        }
    }
    if (!have_anchor) throw ParseError("a1path needs an anchor line");
    return {InitPathA1(j_min, k_min, steps), std::move(binds)};
}

}  // namespace octarec
