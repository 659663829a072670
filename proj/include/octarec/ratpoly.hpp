#pragma once

#include "laurent.hpp"

namespace octarec {

// Ratio of Laurent polynomials. Used where a value is not guaranteed to be a
// Laurent polynomial (conserved quantities, symbolic identity checking).
// Equality is decided by cross-multiplication; no canonical form is kept
// beyond absorbing exactly-dividing denominators.
class RatPoly {
public:
    RatPoly() : num_(0), den_(1) {}
    RatPoly(int n) : num_(n), den_(1) {}
    RatPoly(LaurentPoly n) : num_(std::move(n)), den_(1) {}
    RatPoly(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // Throws NotDivisible when the value is not a Laurent polynomial.
    LaurentPoly as_poly() const {
        if (den_.is_one()) return num_;
        return lp_exact_div(num_, den_);
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        if (a.den_ == b.den_) return RatPoly(a.num_ + b.num_, a.den_);
        return RatPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        if (a.den_ == b.den_) return RatPoly(a.num_ - b.num_, a.den_);
        return RatPoly(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        return RatPoly(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatPoly operator/(const RatPoly& a, const RatPoly& b) {
        if (b.num_.is_zero()) throw ZeroDenominator("division by zero rational function");
        return RatPoly(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatPoly operator-(const RatPoly& a) { return RatPoly(-a.num_, a.den_); }

    RatPoly& operator+=(const RatPoly& b) { return *this = *this + b; }
    RatPoly& operator-=(const RatPoly& b) { return *this = *this - b; }
    RatPoly& operator*=(const RatPoly& b) { return *this = *this * b; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    void reduce() {
        if (den_.is_one() || num_.is_zero()) {
            if (num_.is_zero()) den_ = LaurentPoly(1);
            return;
        }
        // Monomial denominators with unit coefficient fold into the numerator.
        if (den_.is_monomial()) {
            auto [m, c] = den_.leading();
            if (c == 1) {
                num_ = num_.shifted(m.inverse());
                den_ = LaurentPoly(1);
                return;
            }
            if (c == -1) {
                num_ = -num_.shifted(m.inverse());
                den_ = LaurentPoly(1);
                return;
            }
        }
        try {
            num_ = lp_exact_div(num_, den_);
            den_ = LaurentPoly(1);
        } catch (const NotDivisible&) {
            // keep as a genuine ratio
        }
    }

    LaurentPoly num_, den_;
};

// Uniform interface over the value types the generic machinery runs on:
// exact integers-in-variables (LaurentPoly), exact rationals, and ratios.
template <class T>
struct value_traits;

template <>
struct value_traits<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static bool is_zero(const LaurentPoly& v) { return v.is_zero(); }
    static LaurentPoly div(const LaurentPoly& a, const LaurentPoly& b) { return lp_exact_div(a, b); }
};

template <>
struct value_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw ZeroDenominator("rational division by zero");
        Rational q = a / b;
        q.canonicalize();
        return q;
    }
};

template <>
struct value_traits<RatPoly> {
    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly(1); }
    static bool is_zero(const RatPoly& v) { return v.is_zero(); }
    static RatPoly div(const RatPoly& a, const RatPoly& b) { return a / b; }
};

}  // namespace octarec
