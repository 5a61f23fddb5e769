#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charquiv/kernel.hpp"

using namespace cq;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }
static MultiPartition MP(std::vector<Partition> c) { return MultiPartition(std::move(c)); }
static LaurentPoly2 Q(int e = 1) { return LaurentPoly2::x(e); }
static LaurentPoly2 T(int e = 1) { return LaurentPoly2::y(e); }
static LaurentPoly2 C(long c) { return LaurentPoly2(c); }

TEST_CASE("dimension formula") {
    set_cache_dir("");
    Partition one{std::vector<int>{1}};
    CHECK(dim_mu({0, MP({P({1, 1}), P({1, 1}), P({1, 1})})}) == 0);
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k)
            CHECK(dim_mu({g, MP(std::vector<Partition>(k, one))}) == 2 * g);
    CHECK(dim_mu({1, MP({P({2})})}) == 2);
}

TEST_CASE("indivisibility") {
    CHECK(indivisible(MP({P({1, 1}), P({2})})));
    CHECK(!indivisible(MP({P({2}), P({2})})));
    CHECK(!indivisible(MP({P({4, 2}), P({2, 2, 2})})));
}

TEST_CASE("omega series degree one terms") {
    auto full = omega_series(0, 2, 1, OmegaMode::full);
    RatFun fac(C(1), (Q(2) - C(1)) * (C(1) - T(2)));
    CHECK(full.term(1) == basis_element(Basis::p, {P({1}), P({1})}, 1).scaled(fac));

    for (int g = 0; g <= 2; ++g) {
        auto pure = omega_series(g, 2, 1, OmegaMode::pure);
        RatFun pf(Q(g), Q() - C(1));
        CHECK(pure.term(1) == basis_element(Basis::p, {P({1}), P({1})}, 1).scaled(pf));
    }
}

// Coefficient-wise (z,w) -> (sqrt q, 1/sqrt q) with q = u^2, comparing
// against a series whose coefficients live in q directly.
static bool agree_at_halfpowers(const SymFun& full, const SymFun& inq) {
    auto keys = full.coeffs();
    for (auto& [idx, c] : inq.coeffs()) keys[idx];
    for (auto& [idx, c] : keys) {
        (void)c;
        if (full.coeff(idx).to_univariate(1, -1) != inq.coeff(idx).exponents_scaled(2))
            return false;
    }
    return true;
}

TEST_CASE("full and epoly modes agree at (sqrt q, 1/sqrt q)") {
    for (auto [g, k] : {std::pair{0, 2}, {1, 1}}) {
        auto full = omega_series(g, k, 3, OmegaMode::full);
        auto spec = omega_series(g, k, 3, OmegaMode::epoly);
        for (int n = 1; n <= 3; ++n) CHECK(agree_at_halfpowers(full.term(n), spec.term(n)));
    }
}

TEST_CASE("kernel values") {
    auto r = hmu({0, MP({P({1}), P({1})})});
    CHECK(r.value == RatFun(Rat(1)));
    CHECK(r.polynomial);
    CHECK(r.d == 0);

    CHECK(hmu({0, MP({P({2}), P({2})})}).value.is_zero());

    for (int g = 0; g <= 2; ++g)
        for (int k = 1; k <= 2; ++k) {
            Partition one{std::vector<int>{1}};
            auto h = hmu({g, MP(std::vector<Partition>(k, one))});
            CHECK(h.value == RatFun(Q() - T()).pow(2 * g));
            CHECK(h.d == 2 * g);
        }

    // differing component sizes give zero
    CHECK(hmu({1, MP({P({2}), P({1})})}).value.is_zero());
}

TEST_CASE("kernel symmetries") {
    std::vector<KernelQuery> qs = {
        {1, MP({P({1, 1})})},
        {0, MP({P({1, 1}), P({2})})},
        {0, MP({P({1, 1}), P({1, 1}), P({1, 1})})},
        {1, MP({P({2, 1})})},
    };
    for (auto& q : qs) {
        auto h = hmu(q);
        CHECK(h.value.swapped() == h.value);
        CHECK(h.value.negated_vars() == h.value);
    }
    // independence of component order
    CHECK(hmu({0, MP({P({1, 1}), P({2})})}).value ==
          hmu({0, MP({P({2}), P({1, 1})})}).value);
}

TEST_CASE("e polynomials") {
    CHECK(epoly({1, MP({P({1})})}) == (Q() - C(1)) * (Q() - C(1)));
    CHECK(epoly({0, MP({P({1}), P({1})})}) == C(1));
    CHECK(epoly({0, MP({P({2}), P({2})})}).is_zero());

    std::vector<KernelQuery> qs = {
        {1, MP({P({1})})},
        {2, MP({P({1})})},
        {1, MP({P({1, 1})})},
        {1, MP({P({2})})},
        {0, MP({P({1, 1}), P({1, 1}), P({1, 1})})},
        {1, MP({P({2, 1})})},
    };
    for (auto& q : qs) {
        auto e = epoly(q);
        CHECK(check_curious(e, dim_mu(q)));
        if (q.g >= 1) CHECK(e.eval(1, 1) == 0);
    }
}

TEST_CASE("a polynomials") {
    for (int g = 0; g <= 3; ++g) {
        auto a = apoly({g, MP({P({1})})});
        CHECK(a.value == Q(g));
        CHECK(a.quiver_interpretation);
    }
    auto d4 = apoly({0, MP({P({1, 1}), P({1, 1}), P({1, 1})})});
    CHECK(d4.value == C(1));
    CHECK(d4.quiver_interpretation);

    CHECK_FALSE(apoly({0, MP({P({2}), P({2})})}).quiver_interpretation);

    // Kac positivity on computed indivisible cases
    std::vector<KernelQuery> qs = {
        {1, MP({P({1, 1})})},
        {1, MP({P({2, 1})})},
        {2, MP({P({1})})},
        {0, MP({P({1, 1}), P({2}), P({2})})},
    };
    for (auto& q : qs) {
        auto a = apoly(q);
        CHECK(a.quiver_interpretation);
        for (auto& [e, c] : a.value.terms()) {
            CHECK(c > 0);
            CHECK(c.get_den() == 1);
            CHECK(e.second == 0);
        }
    }
}

TEST_CASE("mixed hodge candidate") {
    auto m = mhp_candidate({1, MP({P({1})})});
    // (t sqrt q)^2 (1/sqrt q + t sqrt q)^2 = t^2 (1 + tq)^2
    CHECK(m == T(2) + LaurentPoly2::monomial(2, 1, 3) + LaurentPoly2::monomial(1, 2, 4));

    std::vector<KernelQuery> qs = {
        {1, MP({P({1})})},
        {0, MP({P({1}), P({1})})},
        {1, MP({P({1, 1})})},
        {0, MP({P({1, 1}), P({1, 1}), P({1, 1})})},
    };
    for (auto& q : qs) {
        auto h = mhp_candidate(q);
        long d = dim_mu(q);
        // t = -1 recovers the E-polynomial
        LaurentPoly2 at;
        for (auto& [e, c] : h.terms())
            at += LaurentPoly2::monomial(e.second % 2 ? -c : c, e.first, 0);
        CHECK(at == epoly(q));
        // the (q^i t^{2i}) diagonal at t = 1 recovers q^{d/2} apoly
        LaurentPoly2 diag;
        for (auto& [e, c] : h.terms())
            if (e.second == 2 * e.first) diag += LaurentPoly2::monomial(c, e.first, 0);
        CHECK(diag == apoly(q).value.shifted((int)(d / 2), 0));
    }
}

TEST_CASE("palindromy check") {
    CHECK(check_curious((Q() - C(1)) * (Q() - C(1)), 2));
    CHECK(check_curious(C(1), 0));
    CHECK_FALSE(check_curious(Q() + C(1), 3));
}

TEST_CASE("euler characteristics") {
    CHECK(euler_tilde({2, MP({P({2})})}) == Rat(-2));
    CHECK(euler_tilde({2, MP({P({1, 1})})}) == Rat(0));
    CHECK(euler_tilde({1, MP({P({1, 1})})}) == Rat(3));
    CHECK_THROWS_AS(euler_tilde({0, MP({P({1}), P({1})})}), UnsupportedGenusZero);

    // cross-check against lim_{q->1} E(q) / (q-1)^{2g}
    std::vector<KernelQuery> qs = {
        {1, MP({P({1})})},
        {2, MP({P({1})})},
        {1, MP({P({1, 1})})},
        {1, MP({P({2})})},
        {1, MP({P({2, 1})})},
        {1, MP({P({1}), P({1})})},
    };
    for (auto& q : qs) {
        RatFun lim = RatFun(epoly(q)) / RatFun(Q() - C(1)).pow(2 * q.g);
        CHECK(lim.eval(1, 1) == euler_tilde(q));
    }
}

TEST_CASE("quiver variety non-emptiness") {
    CHECK(check_nonempty({0, MP({P({1, 1}), P({1, 1}), P({1, 1})})}));
    for (int g = 0; g <= 2; ++g) CHECK(check_nonempty({g, MP({P({1})})}));
    CHECK_FALSE(check_nonempty({0, MP({P({1, 1}), P({1, 1})})}));
    CHECK_THROWS_AS(check_nonempty({0, MP({P({2}), P({2})})}), DivisibleMu);
}
