#include <catch2/catch_amalgamated.hpp>

#include <octarec/network.hpp>

#include "helpers.hpp"

using namespace octarec;

namespace {
LaurentPoly var(const char* name) { return LaurentPoly::variable(VarId::named(name)); }
LaurentPoly tj(int j) { return LaurentPoly::variable(VarId::t(j)); }
}  // namespace

TEST_CASE("u and v matrices") {
    LaurentPoly a = var("a"), b = var("b"), one{1};

    SECTION("A1 specializations") {
        Mat<LaurentPoly> u = u_matrix(a, b, one);  // U(a,b) = U(a,b,1)
        CHECK(u(0, 0) == one);
        CHECK(u(0, 1).is_zero());
        CHECK(u(1, 0) == LaurentPoly::variable(VarId::named("b"), -1));
        CHECK(u(1, 1) == lp_exact_div(a, b));

        Mat<LaurentPoly> v = v_matrix(one, a, b);  // V(a,b) = V(1,a,b)
        CHECK(v(0, 0) == lp_exact_div(a, b));
        CHECK(v(0, 1) == LaurentPoly::variable(VarId::named("b"), -1));
        CHECK(v(1, 0).is_zero());
        CHECK(v(1, 1) == one);
    }
    SECTION("all-ones U") {
        Mat<Rational> u = u_matrix<Rational>(1, 1, 1);
        CHECK(u(0, 0) == 1);
        CHECK(u(1, 0) == 1);
        CHECK(u(1, 1) == 1);
        CHECK(u(0, 1) == 0);
    }
}

TEST_CASE("exchange relation (Lemma octamove)") {
    SECTION("free symbols") {
        auto r = check_exchange(var("a"), var("b"), var("c"), var("u"), var("v"));
        CHECK(r.holds);
        CHECK(r.b_prime == lp_exact_div(var("a") * var("c") + var("u") * var("v"), var("b")));
    }
    SECTION("all ones") {
        auto r = check_exchange<Rational>(1, 1, 1, 1, 1);
        CHECK(r.holds);
        CHECK(r.b_prime == 2);
    }
    SECTION("A1 case bb' = ac + 1") {
        auto r = check_exchange(var("a"), var("b"), var("c"), LaurentPoly(1), LaurentPoly(1));
        CHECK(r.holds);
    }
    SECTION("random rationals") {
        auto g = testutil::rng(41);
        for (int trial = 0; trial < 1000; ++trial) {
            auto r = check_exchange(testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g));
            REQUIRE(r.holds);
        }
    }
}

TEST_CASE("tetrahedron decompositions (Lemma tetradec)") {
    SECTION("symbolic") {
        CHECK(check_tetra_flip(TetraFlipKind::WhiteFlip, var("a"), var("b"), var("c"), var("d")));
        CHECK(check_tetra_flip(TetraFlipKind::Commute, var("u"), var("a"), var("b"), var("c")));
    }
    SECTION("all ones") {
        CHECK(check_tetra_flip<Rational>(TetraFlipKind::WhiteFlip, 1, 1, 1, 1));
        CHECK(check_tetra_flip<Rational>(TetraFlipKind::Commute, 1, 1, 1, 1));
    }
    SECTION("random rationals") {
        auto g = testutil::rng(43);
        for (int trial = 0; trial < 1000; ++trial) {
            CHECK(check_tetra_flip(TetraFlipKind::WhiteFlip, testutil::random_rational(g),
                                   testutil::random_rational(g), testutil::random_rational(g),
                                   testutil::random_rational(g)));
            CHECK(check_tetra_flip(TetraFlipKind::Commute, testutil::random_rational(g),
                                   testutil::random_rational(g), testutil::random_rational(g),
                                   testutil::random_rational(g)));
        }
    }
}

TEST_CASE("braiding relation (Lemma ybe)") {
    SECTION("symbolic") {
        auto r = check_braiding(var("u"), var("a"), var("b"), var("c"), var("d"), var("e"));
        CHECK(r.holds);
        CHECK(r.b_prime ==
              lp_exact_div(var("e") * var("c") + var("a") * var("d"), var("b")));
    }
    SECTION("all ones gives b' = 2") {
        auto r = check_braiding<Rational>(1, 1, 1, 1, 1, 1);
        CHECK(r.holds);
        CHECK(r.b_prime == 2);
    }
    SECTION("random rationals") {
        auto g = testutil::rng(47);
        for (int trial = 0; trial < 1000; ++trial) {
            auto r = check_braiding(testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g),
                                    testutil::random_positive_rational(g));
            REQUIRE(r.holds);
        }
    }
}

TEST_CASE("factor products") {
    SECTION("empty product is the identity") {
        FactorProduct<LaurentPoly> fp(1, 4);
        CHECK(fp.product() == Mat<LaurentPoly>::identity(4));
    }
    SECTION("single embedded factor touches one 2x2 block") {
        FactorProduct<LaurentPoly> fp(1, 4);
        fp.push_u(2, var("a"), var("b"), var("c"));
        Mat<LaurentPoly> m = fp.product();
        Mat<LaurentPoly> id = Mat<LaurentPoly>::identity(4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                if ((r == 1 || r == 2) && (c == 1 || c == 2)) continue;
                CHECK(m(r, c) == id(r, c));
            }
        CHECK(m(2, 1) == lp_exact_div(var("c"), var("b")));
        CHECK(m(2, 2) == lp_exact_div(var("a"), var("b")));
    }
    SECTION("factors two strips apart commute") {
        auto g = testutil::rng(53);
        for (int trial = 0; trial < 20; ++trial) {
            FactorProduct<Rational> ab(1, 5), ba(1, 5);
            Rational v[8];
            for (auto& q : v) q = testutil::random_rational(g);
            ab.push_u(1, v[0], v[1], v[2]);
            ab.push_v(3, v[3], v[4], v[5]);
            ba.push_v(3, v[3], v[4], v[5]);
            ba.push_u(1, v[0], v[1], v[2]);
            CHECK(ab.product() == ba.product());
        }
    }
}

// The worked Example of Sec. 2.2: T_{0,4} from the path with assignments
// t_{-2}..t_3 equals the displayed 8-term Laurent polynomial.
static LaurentPoly exofour_reference() {
    auto term = [](std::vector<std::pair<int, int>> exps) {
        std::vector<std::pair<VarId, int>> raw;
        for (auto [j, e] : exps) raw.emplace_back(VarId::t(j), e);
        return LaurentPoly(Monomial(std::move(raw)));
    };
    return term({{-2, 1}, {-1, -1}, {1, -1}}) + term({{0, 1}, {-1, -1}, {1, -1}}) +
           term({{-2, 1}, {0, -1}, {2, -1}}) + term({{-1, -1}, {1, -1}, {2, -1}}) +
           term({{-2, 1}, {-1, -1}, {0, -1}, {1, -1}, {2, -1}}) + term({{3, 1}, {-1, -1}, {2, -1}}) +
           term({{-2, 1}, {3, 1}, {-1, -1}, {0, -1}, {2, -1}}) +
           term({{-2, 1}, {1, 1}, {3, 1}, {0, -1}, {2, -1}});
}

TEST_CASE("Example 2.2: the (1,1) entry reproduces the 8-term solution") {
    FactorProduct<LaurentPoly> fp(1, 2);
    fp.push_v(1, LaurentPoly(1), tj(-2), tj(-1));
    fp.push_v(1, LaurentPoly(1), tj(-1), tj(0));
    fp.push_u(1, tj(0), tj(1), LaurentPoly(1));
    fp.push_v(1, LaurentPoly(1), tj(1), tj(2));
    fp.push_u(1, tj(2), tj(3), LaurentPoly(1));
    LaurentPoly t04 = tj(3) * fp.product()(0, 0);
    CHECK(t04 == exofour_reference());
    CHECK(t04.term_count() == 8);
    // all-ones evaluation counts the monomials
    std::map<VarId, Rational> ones;
    for (int j = -2; j <= 3; ++j) ones[VarId::t(j)] = 1;
    CHECK(lp_eval(t04, ones) == 8);
}

TEST_CASE("networks") {
    SECTION("one U chip carries the chip-matrix weights") {
        FactorProduct<LaurentPoly> fp(1, 2);
        fp.push_u(1, var("a"), var("b"), var("c"));
        Network<LaurentPoly> net = build_network(fp);
        REQUIRE(net.columns() == 1);
        // edges: 1->1 unit, 2->1 c/b, 2->2 a/b
        int unit = 0, solid = 0;
        for (const auto& e : net.slices()[0]) {
            if (e.unit)
                ++unit;
            else
                ++solid;
        }
        CHECK(unit == 1);
        CHECK(solid == 2);
        CHECK(net.transfer(2, 1) == lp_exact_div(var("c"), var("b")));
        CHECK(net.transfer(2, 2) == lp_exact_div(var("a"), var("b")));
    }
    SECTION("empty network is parallel trivial wires") {
        FactorProduct<LaurentPoly> fp(1, 3);
        Network<LaurentPoly> net = build_network(fp);
        CHECK(net.transfer_matrix() == Mat<LaurentPoly>::identity(3));
    }
    SECTION("transfer matrix equals the factor product") {
        auto g = testutil::rng(59);
        for (int trial = 0; trial < 12; ++trial) {
            FactorProduct<Rational> fp(1, 4);
            std::uniform_int_distribution<int> strip(1, 3), kind(0, 1);
            for (int f = 0; f < 6; ++f) {
                if (kind(g))
                    fp.push_u(strip(g), testutil::random_rational(g), testutil::random_rational(g),
                              testutil::random_rational(g));
                else
                    fp.push_v(strip(g), testutil::random_rational(g), testutil::random_rational(g),
                              testutil::random_rational(g));
            }
            CHECK(build_network(fp).transfer_matrix() == fp.product());
        }
    }
    SECTION("single wire, source 1 sink 1") {
        FactorProduct<LaurentPoly> fp(1, 2);
        Network<LaurentPoly> net = build_network(fp);
        CHECK(net.path_partition({1}, {1}) == LaurentPoly(1));
    }
    SECTION("Example 2.2 network partition function") {
        FactorProduct<LaurentPoly> fp(1, 2);
        fp.push_v(1, LaurentPoly(1), tj(-2), tj(-1));
        fp.push_v(1, LaurentPoly(1), tj(-1), tj(0));
        fp.push_u(1, tj(0), tj(1), LaurentPoly(1));
        fp.push_v(1, LaurentPoly(1), tj(1), tj(2));
        fp.push_u(1, tj(2), tj(3), LaurentPoly(1));
        Network<LaurentPoly> net = build_network(fp);
        CHECK(tj(3) * net.path_partition({1}, {1}) == exofour_reference());
    }
    SECTION("vertex-disjoint path families match minors") {
        auto g = testutil::rng(61);
        for (int trial = 0; trial < 10; ++trial) {
            FactorProduct<Rational> fp(1, 4);
            std::uniform_int_distribution<int> strip(1, 3), kind(0, 1);
            for (int f = 0; f < 7; ++f) {
                if (kind(g))
                    fp.push_u(strip(g), testutil::random_positive_rational(g),
                              testutil::random_positive_rational(g),
                              testutil::random_positive_rational(g));
                else
                    fp.push_v(strip(g), testutil::random_positive_rational(g),
                              testutil::random_positive_rational(g),
                              testutil::random_positive_rational(g));
            }
            Network<Rational> net = build_network(fp);
            Mat<Rational> m = fp.product();
            // bottom-most entries to bottom-most exits, sizes 1..3
            for (int sz = 1; sz <= 3; ++sz) {
                std::vector<int> sel;
                for (int s = 1; s <= sz; ++s) sel.push_back(s);
                std::vector<int> idx;
                for (int s : sel) idx.push_back(s - 1);
                CHECK(net.path_partition(sel, sel) == minor_det(m, idx, idx));
            }
        }
    }
}
