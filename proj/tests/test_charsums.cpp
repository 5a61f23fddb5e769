#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charquiv/charsums.hpp"
#include "charquiv/kernel.hpp"

using namespace cq;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }
static MultiPartition MP(std::vector<Partition> c) { return MultiPartition(std::move(c)); }
static LaurentPoly2 Q(int e = 1) { return LaurentPoly2::x(e); }
static LaurentPoly2 C(long c) { return LaurentPoly2(c); }

TEST_CASE("class and character types of a partition") {
    set_cache_dir("");
    CHECK(star_type(P({2, 1})).str() == "(1,(1,1))(1,(1))");
    CHECK(dagger_type(P({2, 1})).str() == "(1,(2))(1,(1))");
    CHECK(star_type(P({1, 1})) == dagger_type(P({1, 1})));
    CHECK(star_type(P({3})).size() == 3);
}

TEST_CASE("pairing values") {
    TypeT t11({{1, P({1})}});
    CHECK(a_pair(t11, t11) == C(1));
    CHECK(a_pair(TypeT({{1, P({2})}}), TypeT({{1, P({1, 1})}})) == C(1));
    // chi^alpha_tau kills every tau not similar to alpha; the surviving
    // torus type (1,(2)) still contributes
    CHECK(a_pair(TypeT({{2, P({1})}}), TypeT({{1, P({1, 1})}})) == C(1) - Q());
    CHECK(a_pair(TypeT({{2, P({1})}}), TypeT({{2, P({1})}})) == C(2));
    CHECK_THROWS_AS(a_pair(t11, TypeT({{2, P({1})}})), SizeMismatch);
}

TEST_CASE("double sum route agrees with the pairing") {
    for (int n = 1; n <= 3; ++n)
        for (auto& al : types_of(n))
            for (auto& om : types_of(n)) CHECK(a_pair(al, om) == a_pair_raw(al, om));
}

TEST_CASE("double sum route with repeated degree-size blocks") {
    // size 4 is the first time a block (d, n) repeats with distinct
    // partitions, exercising the matching convention inside chi
    TypeT mixed({{1, P({2})}, {1, P({1, 1})}});
    std::vector<TypeT> sample = {
        mixed,
        TypeT({{1, P({2})}, {1, P({2})}}),
        TypeT({{1, P({1, 1})}, {1, P({1, 1})}}),
        TypeT({{1, P({4})}}),
        TypeT({{1, P({2, 2})}}),
        TypeT({{2, P({1})}, {1, P({1})}, {1, P({1})}}),
        TypeT({{2, P({2})}}),
        TypeT({{2, P({1})}, {2, P({1})}}),
        TypeT({{4, P({1})}}),
    };
    for (auto& al : sample)
        for (auto& om : sample) CHECK(a_pair(al, om) == a_pair_raw(al, om));
}

TEST_CASE("type character block matching") {
    TypeT om({{1, P({2})}, {1, P({1, 1})}});
    // chi^{(2)}_{(2)} chi^{(11)}_{(11)} + chi^{(2)}_{(11)} chi^{(11)}_{(2)}
    CHECK(type_char(om, om) == 0);
    // one arrangement only: chi^{(2)}_{(2)} chi^{(11)}_{(2)} = -1
    CHECK(type_char(om, TypeT({{1, P({2})}, {1, P({2})}})) == -1);
    CHECK(type_char(TypeT({{1, P({2, 2})}}), TypeT({{1, P({2, 1, 1})}})) ==
          sym_char(P({2, 2}), P({2, 1, 1})));
    CHECK(type_char(om, TypeT({{2, P({1, 1})}})) == 0);
}

TEST_CASE("typed character sums") {
    TypeT t11({{1, P({1})}});
    auto cs = char_type_sums({t11}, t11);
    CHECK(cs.H == Q() - C(1));
    CHECK(cs.Hhat == Q() - C(1));

    // mixed degree profile: K0 = 0, both sums vanish
    TypeT mixedn3({{2, P({1})}, {1, P({1})}});
    auto z = char_type_sums({dagger_type(P({2, 1})), dagger_type(P({3}))}, mixedn3);
    CHECK(z.H.is_zero());
    CHECK(z.Hhat.is_zero());
}

TEST_CASE("multiplicity equals the a polynomial") {
    for (int g = 0; g <= 3; ++g) CHECK(multiplicity(g, MP({P({1})})) == Q(g));

    std::vector<KernelQuery> qs = {
        {0, MP({P({1, 1}), P({1, 1}), P({1, 1})})},
        {1, MP({P({1, 1})})},
        {1, MP({P({2})})},
        {2, MP({P({2})})},
        {1, MP({P({2, 1})})},
        {0, MP({P({1, 1}), P({2}), P({2})})},
        {0, MP({P({2}), P({2})})},
        {2, MP({P({1}), P({1})})},
        {0, MP({P({1, 1}), P({1, 1})})},
        {1, MP({P({1, 1, 1})})},
        {0, MP({P({2, 1}), P({3})})},
    };
    for (auto& q : qs) CHECK(multiplicity(q.g, q.mu) == apoly(q).value);
}
