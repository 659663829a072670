#pragma once

#include <random>

#include <octarec/laurent.hpp>

namespace testutil {

using namespace octarec;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& g, int max_num = 9) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> sign(0, 1);
    Rational q(num(g) * (sign(g) ? 1 : -1), num(g));
    q.canonicalize();
    if (q == 0) q = 1;
    return q;
}

inline Rational random_positive_rational(std::mt19937_64& g, int max_num = 9) {
    std::uniform_int_distribution<int> num(1, max_num);
    Rational q(num(g), num(g));
    q.canonicalize();
    return q;
}

inline LaurentPoly random_poly(std::mt19937_64& g, const std::vector<VarId>& vars, int terms = 4,
                               int max_exp = 3, int max_coeff = 5) {
    std::uniform_int_distribution<int> nco(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> nex(-max_exp, max_exp);
    LaurentPoly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<VarId, int>> exps;
        for (const auto& v : vars) {
            int e = nex(g);
            if (e != 0) exps.emplace_back(v, e);
        }
        int c = nco(g);
        if (c == 0) c = 1;
        p += LaurentPoly(Monomial(std::move(exps)), c);
    }
    return p;
}

}  // namespace testutil
