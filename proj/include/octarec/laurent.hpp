#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "varid.hpp"

namespace octarec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Laurent monomial: sorted (VarId, exponent) pairs, no zero exponents.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::pair<VarId, int>> exps) : exps_(std::move(exps)) {
        std::sort(exps_.begin(), exps_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<VarId, int>> out;
        for (const auto& [v, e] : exps_) {
            if (!out.empty() && out.back().first == v)
                out.back().second += e;
            else
                out.emplace_back(v, e);
        }
        std::erase_if(out, [](const auto& p) { return p.second == 0; });
        exps_ = std::move(out);
    }

    static Monomial var(VarId v, int e = 1) {
        if (e == 0) return Monomial();
        Monomial m;
        m.exps_.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return exps_.empty(); }
    const std::vector<std::pair<VarId, int>>& exponents() const { return exps_; }

    int exponent(VarId v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                                   [](const auto& p, const VarId& x) { return p.first < x; });
        return (it != exps_.end() && it->first == v) ? it->second : 0;
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    long min_exponent() const {
        long m = 0;
        for (const auto& [v, e] : exps_) m = std::min<long>(m, e);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.exps_.reserve(a.exps_.size() + b.exps_.size());
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                out.exps_.push_back(*ia++);
            } else if (ia == a.exps_.end() || ib->first < ia->first) {
                out.exps_.push_back(*ib++);
            } else {
                int e = ia->second + ib->second;
                if (e != 0) out.exps_.emplace_back(ia->first, e);
                ++ia, ++ib;
            }
        }
        return out;
    }

    Monomial inverse() const {
        Monomial out = *this;
        for (auto& [v, e] : out.exps_) e = -e;
        return out;
    }

    // Whether this divides m as an ordinary (non-negative exponent) monomial.
    bool divides(const Monomial& m) const {
        for (const auto& [v, e] : exps_)
            if (m.exponent(v) < e) return false;
        return true;
    }

    // Componentwise minimum of exponents; variables missing on either side
    // count as exponent 0.
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        std::vector<std::pair<VarId, int>> exps;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
                if (ia->second < 0) exps.emplace_back(ia->first, ia->second);
                ++ia;
            } else if (ia == a.exps_.end() || ib->first < ia->first) {
                if (ib->second < 0) exps.emplace_back(ib->first, ib->second);
                ++ib;
            } else {
                int e = std::min(ia->second, ib->second);
                if (e != 0) exps.emplace_back(ia->first, e);
                ++ia, ++ib;
            }
        }
        return Monomial(std::move(exps));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    // Graded lexicographic order; a group order on Laurent exponent vectors.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() || ib != b.exps_.end()) {
            // Treat a missing variable as exponent 0 at that position.
            if (ib == b.exps_.end()) return ia->second > 0 ? std::strong_ordering::greater
                                                          : std::strong_ordering::less;
            if (ia == a.exps_.end()) return ib->second > 0 ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
            if (ia->first != ib->first) {
                if (ia->first < ib->first)
                    return ia->second > 0 ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
                return ib->second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            if (auto c = ia->second <=> ib->second; c != 0) return c;
            ++ia, ++ib;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::pair<VarId, int>> exps_;
};

// Exact multivariate Laurent polynomial over unbounded integers.
// Canonical form: ordered term map, no zero coefficients.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Integer>;

    LaurentPoly() = default;
    LaurentPoly(int n) { if (n != 0) terms_[Monomial()] = n; }
    LaurentPoly(const Integer& n) { if (n != 0) terms_[Monomial()] = n; }
    explicit LaurentPoly(const Monomial& m, Integer coeff = 1) {
        if (coeff != 0) terms_[m] = std::move(coeff);
    }

    static LaurentPoly variable(VarId v, int e = 1) { return LaurentPoly(Monomial::var(v, e)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term under the monomial order.
    std::pair<Monomial, Integer> leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exponents()) out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly out = a;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        // Monomial multiplications collected then merged; keeps allocations flat.
        std::vector<std::pair<Monomial, Integer>> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
        std::sort(prod.begin(), prod.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        LaurentPoly out;
        auto hint = out.terms_.end();
        for (auto& [m, c] : prod) {
            if (!out.terms_.empty() && hint->first == m) {
                hint->second += c;
            } else {
                hint = out.terms_.emplace_hint(out.terms_.end(), std::move(m), std::move(c));
            }
        }
        std::erase_if(out.terms_, [](const auto& p) { return p.second == 0; });
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // Monomial content: the componentwise-minimal exponent vector, so that
    // p = content * q with q an ordinary polynomial of full support.
    Monomial content() const {
        if (terms_.empty()) return Monomial();
        auto it = terms_.begin();
        Monomial c = it->first;
        for (++it; it != terms_.end(); ++it) c = Monomial::gcd(c, it->first);
        return c;
    }

    LaurentPoly shifted(const Monomial& m) const {
        LaurentPoly out;
        for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
        return out;
    }

    bool has_negative_exponents() const {
        for (const auto& [m, c] : terms_)
            if (m.min_exponent() < 0) return true;
        return false;
    }

    // True when every coefficient is nonnegative (Laurent positivity checks).
    bool coefficients_nonnegative() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return false;
        return true;
    }

private:
    void add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

enum class LpOp { Add, Sub, Mul };

inline LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op) {
    switch (op) {
        case LpOp::Add: return a + b;
        case LpOp::Sub: return a - b;
        case LpOp::Mul: return a * b;
    }
    throw std::logic_error("bad LpOp");
}

// Exact division: strips the monomial content of both operands (monomials
// are invertible in the Laurent ring), then runs ordinary multivariate
// division with a fail-fast remainder check.
inline LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ZeroDenominator("division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();
    const Monomial cn = num.content();
    const Monomial cd = den.content();
    const Monomial shift = cn * cd.inverse();

    if (den.is_monomial()) {
        auto [dm, dc] = den.leading();
        const Monomial inv = dm.inverse();
        LaurentPoly out;
        for (const auto& [m, c] : num.terms()) {
            if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
                throw NotDivisible("coefficient not divisible by the monomial divisor");
            out += LaurentPoly(m * inv, c / dc);
        }
        return out;
    }

    LaurentPoly n = num.shifted(cn.inverse());
    LaurentPoly d = den.shifted(cd.inverse());
    LaurentPoly quotient;
    LaurentPoly rem = n;
    auto [dm, dc] = d.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        if (!dm.divides(rm)) throw NotDivisible("leading monomial not divisible");
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t()))
            throw NotDivisible("leading coefficient not divisible");
        Integer q = rc / dc;
        LaurentPoly t(rm * dm.inverse(), q);
        quotient += t;
        rem -= t * d;
    }
    return quotient.shifted(shift);
}

inline bool lp_divides(const LaurentPoly& den, const LaurentPoly& num) {
    try {
        (void)lp_exact_div(num, den);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

inline Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw ZeroSubstitution("zero raised to negative power");
        b = 1 / b;
        e = -e;
    }
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    out.canonicalize();
    return out;
}

// Exact rational evaluation. Every variable must be bound; zero is rejected
// because negative exponents may occur.
inline Rational lp_eval(const LaurentPoly& p, const std::map<VarId, Rational>& point) {
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        Rational term(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = point.find(v);
            if (it == point.end()) throw UnboundVariable("unbound variable " + v.str());
            if (it->second == 0) throw ZeroSubstitution("variable " + v.str() + " bound to zero");
            term *= rational_pow(it->second, e);
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

// Substitutes polynomials for variables. Substituted values must be nonzero;
// negative exponents require the value to be invertible, i.e. a monomial
// with unit coefficient, otherwise the division must be exact.
inline LaurentPoly lp_substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& bind) {
    LaurentPoly total;
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly term{c};
        for (const auto& [v, e] : m.exponents()) {
            auto it = bind.find(v);
            if (it == bind.end()) {
                term *= LaurentPoly(Monomial::var(v, e));
                continue;
            }
            const LaurentPoly& val = it->second;
            if (val.is_zero()) throw ZeroSubstitution("variable " + v.str() + " bound to zero");
            int k = e >= 0 ? e : -e;
            LaurentPoly powed{1};
            for (int i = 0; i < k; ++i) powed *= val;
            if (e >= 0)
                term *= powed;
            else
                term = lp_exact_div(term, powed);
        }
        total += term;
    }
    return total;
}

// ---- Canonical text ----
//
// Grammar:   poly := term (("+"|"-") term)*
//            term := coeff ("*" var "^" exp)*
// Exponents are signed decimals; terms are emitted from the largest monomial
// down. parse(print(p)) == p.

inline std::string lp_canonical_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << mag.get_str();
        for (const auto& [v, e] : m.exponents()) os << "*" << v.str() << "^" << e;
    }
    return os.str();
}

namespace detail {

class TextCursor {
public:
    explicit TextCursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of polynomial text");
        return s_[pos_];
    }
    char take() {
        char c = peek();
        ++pos_;
        return c;
    }
    bool accept(char c) {
        if (done() || s_[pos_] != c) return false;
        ++pos_;
        return true;
    }

    Integer integer() {
        skip_ws();
        std::string digits;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) digits.push_back(s_[pos_++]);
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits.push_back(s_[pos_++]);
        if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected integer");
        return Integer(digits);
    }

    std::string identifier() {
        skip_ws();
        std::string name;
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected variable name");
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name.push_back(c);
                ++pos_;
            } else if (c == '-' && !name.empty() && name.back() == '_') {
                // negative lattice index inside a variable name
                name.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly lp_parse(const std::string& text) {
    detail::TextCursor cur(text);
    LaurentPoly out;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (!first) {
            char op = cur.take();
            if (op == '-')
                sign = -1;
            else if (op != '+')
                throw ParseError("expected '+' or '-' between terms");
        } else if (cur.peek() == '-') {
            cur.take();
            sign = -1;
        }
        first = false;
        Integer coeff = cur.integer() * sign;
        std::vector<std::pair<VarId, int>> exps;
        while (cur.accept('*')) {
            std::string name = cur.identifier();
            if (!cur.accept('^')) throw ParseError("expected '^' after variable");
            Integer e = cur.integer();
            if (!e.fits_sint_p()) throw ParseError("exponent out of range");
            exps.emplace_back(VarId::parse(name), static_cast<int>(e.get_si()));
        }
        out += LaurentPoly(Monomial(std::move(exps)), coeff);
    }
    return out;
}

inline Rational rational_parse(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace octarec
