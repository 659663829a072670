#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace octarec {

enum class FactorKind { U, V };

// The GL2 building blocks.  U(a,b,c) = [[1, 0], [c/b, a/b]],
// V(a,b,c) = [[b/c, a/c], [0, 1]].  The A1 specializations are
// U(a,b) = U(a,b,1) and V(a,b) = V(1,a,b).
template <class T>
Mat<T> u_matrix(const T& a, const T& b, const T& c) {
    Mat<T> m(2);
    m(0, 0) = value_traits<T>::one();
    m(1, 0) = value_traits<T>::div(c, b);
    m(1, 1) = value_traits<T>::div(a, b);
    return m;
}

template <class T>
Mat<T> v_matrix(const T& a, const T& b, const T& c) {
    Mat<T> m(2);
    m(0, 0) = value_traits<T>::div(b, c);
    m(0, 1) = value_traits<T>::div(a, c);
    m(1, 1) = value_traits<T>::one();
    return m;
}

// U_i / V_i in a GL_N embedding: identity outside the 2x2 block at rows and
// columns (index, index+1).  Indices are absolute lattice coordinates; the
// product fixes the window.
template <class T>
struct EmbeddedFactor {
    FactorKind kind;
    int index;
    T a, b, c;
};

template <class T>
class FactorProduct {
public:
    FactorProduct(int lo, int hi) : lo_(lo), hi_(hi) {
        if (hi_ < lo_ + 1) hi_ = lo_ + 1;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int dim() const { return hi_ - lo_ + 1; }
    const std::vector<EmbeddedFactor<T>>& factors() const { return factors_; }

    void push(FactorKind kind, int index, T a, T b, T c) {
        if (index < lo_ || index + 1 > hi_)
            throw std::out_of_range("factor index outside the embedding window");
        factors_.push_back({kind, index, std::move(a), std::move(b), std::move(c)});
    }
    void push_u(int index, T a, T b, T c) {
        push(FactorKind::U, index, std::move(a), std::move(b), std::move(c));
    }
    void push_v(int index, T a, T b, T c) {
        push(FactorKind::V, index, std::move(a), std::move(b), std::move(c));
    }

    // Left-to-right product of the embedded factors; O(dim) per factor.
    Mat<T> product() const {
        const int n = dim();
        Mat<T> m = Mat<T>::identity(n);
        for (const auto& f : factors_) {
            const int i = f.index - lo_;
            if (f.kind == FactorKind::U) {
                const T w21 = value_traits<T>::div(f.c, f.b);
                const T w22 = value_traits<T>::div(f.a, f.b);
                // right-multiply: col_i += col_{i+1} * w21, col_{i+1} *= w22
                for (int r = 0; r < n; ++r) {
                    m(r, i) = m(r, i) + m(r, i + 1) * w21;
                    m(r, i + 1) = m(r, i + 1) * w22;
                }
            } else {
                const T w11 = value_traits<T>::div(f.b, f.c);
                const T w12 = value_traits<T>::div(f.a, f.c);
                for (int r = 0; r < n; ++r) {
                    m(r, i + 1) = m(r, i + 1) + m(r, i) * w12;
                    m(r, i) = m(r, i) * w11;
                }
            }
        }
        return m;
    }

    // Word as text, e.g. "V_1 U_1" or "V_5 V_4 V_5".
    std::string word() const {
        std::string out;
        for (const auto& f : factors_) {
            if (!out.empty()) out.push_back(' ');
            out += (f.kind == FactorKind::U ? "U_" : "V_") + std::to_string(f.index);
        }
        return out;
    }

private:
    int lo_, hi_;
    std::vector<EmbeddedFactor<T>> factors_;
};

// --- Local moves of the flat connection ---

template <class T>
struct ExchangeResult {
    T b_prime;
    bool holds;
};

// Lemma "octamove": V(u,a,b) U(b,c,v) = U(a,b',v) V(u,b',c) iff b b' = ac + uv.
// The A1 case is u = v = 1 with b b' = ac + 1.  The check runs in a field
// (exact rationals or ratios of Laurent polynomials) because the right-hand
// side divides by b', which is generally not a monomial.
template <class T>
ExchangeResult<T> check_exchange(const T& a, const T& b, const T& c, const T& u, const T& v) {
    T bp = value_traits<T>::div(a * c + u * v, b);
    Mat<T> lhs = v_matrix(u, a, b) * u_matrix(b, c, v);
    Mat<T> rhs = u_matrix(a, bp, v) * v_matrix(u, bp, c);
    return {bp, lhs == rhs};
}

inline ExchangeResult<RatPoly> check_exchange(const LaurentPoly& a, const LaurentPoly& b,
                                              const LaurentPoly& c, const LaurentPoly& u,
                                              const LaurentPoly& v) {
    return check_exchange<RatPoly>(RatPoly(a), RatPoly(b), RatPoly(c), RatPoly(u), RatPoly(v));
}

enum class TetraFlipKind { WhiteFlip, Commute };

// The two triangle decompositions of an elementary tetrahedron agree:
//   U_i(a,b,c) V_{i+1}(b,c,d) = V_{i+1}(a,c,d) U_i(a,b,d)
//   V_i(u,a,b) U_{i+1}(c,d,v) = U_{i+1}(c,d,v) V_i(u,a,b)
template <class T>
bool check_tetra_flip(TetraFlipKind kind, const T& a, const T& b, const T& c, const T& d) {
    if (kind == TetraFlipKind::WhiteFlip) {
        FactorProduct<T> lhs(1, 3), rhs(1, 3);
        lhs.push_u(1, a, b, c);
        lhs.push_v(2, b, c, d);
        rhs.push_v(2, a, c, d);
        rhs.push_u(1, a, b, d);
        return lhs.product() == rhs.product();
    }
    FactorProduct<T> lhs(1, 3), rhs(1, 3);
    lhs.push_v(1, a, b, c);  // here (a,b,c) plays (u,a,b)
    lhs.push_u(2, b, c, d);  // and (b,c,d) plays (c,d,v); arguments are free
    rhs.push_u(2, b, c, d);
    rhs.push_v(1, a, b, c);
    return lhs.product() == rhs.product();
}

// Lemma "ybe" braiding relation in GL3:
//   V1(u,a,b) V2(b,c,d) V1(u,b,e) = V2(a,c,b') V1(u,a,e) V2(e,b',d)
// iff b b' = ec + ad.
template <class T>
ExchangeResult<T> check_braiding(const T& u, const T& a, const T& b, const T& c, const T& d,
                                 const T& e) {
    T bp = value_traits<T>::div(e * c + a * d, b);
    FactorProduct<T> lhs(1, 3), rhs(1, 3);
    lhs.push_v(1, u, a, b);
    lhs.push_v(2, b, c, d);
    lhs.push_v(1, u, b, e);
    rhs.push_v(2, a, c, bp);
    rhs.push_v(1, u, a, e);
    rhs.push_v(2, e, bp, d);
    return {bp, lhs.product() == rhs.product()};
}

inline ExchangeResult<RatPoly> check_braiding(const LaurentPoly& u, const LaurentPoly& a,
                                              const LaurentPoly& b, const LaurentPoly& c,
                                              const LaurentPoly& d, const LaurentPoly& e) {
    return check_braiding<RatPoly>(RatPoly(u), RatPoly(a), RatPoly(b), RatPoly(c), RatPoly(d),
                                   RatPoly(e));
}

}  // namespace octarec
