#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "charquiv/combinat.hpp"

using namespace cq;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    // exactly once each
    auto ps = partitions_of(7);
    std::set<Partition> s(ps.begin(), ps.end());
    CHECK(s.size() == ps.size());
    for (auto& p : ps) CHECK(p.size() == 7);
}

TEST_CASE("partition statistics") {
    auto one = P({1});
    CHECK(one.size() == 1);
    CHECK(one.nstat() == 0);
    CHECK(one.hooks() == std::vector<int>{1});
    CHECK(one.pairing() == 1);

    auto la = P({2, 1});
    CHECK(la.nstat() == 1);
    CHECK(la.hooks() == std::vector<int>{3, 1, 1});
    CHECK(la.pairing() == 5);
    CHECK(la.conjugate() == la);

    for (int n = 1; n <= 6; ++n) CHECK(P({n}).pairing() == n);

    auto mu = P({4, 2, 1});
    CHECK(mu.conjugate() == P({3, 2, 1, 1}));
    CHECK(mu.conjugate().conjugate() == mu);
    CHECK(mu.pairing() == 2 * mu.nstat() + mu.size());
}

TEST_CASE("hook length sum identity") {
    for (int n = 1; n <= 7; ++n)
        for (auto& la : partitions_of(n)) {
            long hs = 0;
            for (int h : la.hooks()) hs += h;
            CHECK(hs == la.nstat() + la.conjugate().nstat() + la.size());
        }
}

TEST_CASE("z_part") {
    CHECK(z_part(P({1, 1, 1})) == 6);
    CHECK(z_part(P({3})) == 3);
    CHECK(z_part(P({2, 1})) == 2);
    // sum of |S_n| / z_rho over rho is p(n)-consistent: sum of class sizes = n!
    for (int n = 1; n <= 6; ++n) {
        Int total(0);
        for (auto& rho : partitions_of(n)) {
            Int cls = factorial(n) / z_part(rho);
            total += cls;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("symmetric group characters") {
    for (int n = 1; n <= 6; ++n)
        for (auto& rho : partitions_of(n)) {
            CHECK(sym_char(P({n}), rho) == 1);
            long sign = (n - rho.length()) % 2 ? -1 : 1;
            CHECK(sym_char(Partition::rectangle(1, n), rho) == sign);
        }
    CHECK(sym_char(P({2, 1}), P({3})) == -1);
    CHECK(sym_char(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(sym_char(P({2, 1}), P({2, 1})) == 0);
    CHECK_THROWS_AS(sym_char(P({2}), P({1})), SizeMismatch);
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (auto& la : ps)
            for (auto& mu : ps) {
                Rat s(0);
                for (auto& rho : ps)
                    s += Rat(sym_char(la, rho)) * Rat(sym_char(mu, rho)) / Rat(z_part(rho));
                CHECK(s == (la == mu ? 1 : 0));
            }
    }
}

TEST_CASE("types enumeration") {
    auto t1 = types_of(1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].pairs() == std::vector<TypeT::Pair>{{1, P({1})}});
    CHECK(types_of(2).size() == 4);
    CHECK(types_of(3).size() == 8);
    for (auto& om : types_of(4)) CHECK(om.size() == 4);
    // uniqueness
    auto t4 = types_of(4);
    std::set<TypeT> s(t4.begin(), t4.end());
    CHECK(s.size() == t4.size());
}

TEST_CASE("types concentrated in degree one count multisets of partitions") {
    // number of multisets of nonzero partitions with total size n
    auto count_multisets = [](int n) {
        std::vector<Partition> all;
        for (int m = 1; m <= n; ++m)
            for (auto& p : partitions_of(m)) all.push_back(p);
        long cnt = 0;
        auto rec = [&](auto&& self, int rest, size_t from) -> void {
            if (rest == 0) {
                ++cnt;
                return;
            }
            for (size_t i = from; i < all.size(); ++i)
                if (all[i].size() <= rest) {
                    self(self, rest - all[i].size(), i);
                }
        };
        rec(rec, n, 0);
        return cnt;
    };
    for (int n = 1; n <= 5; ++n) {
        long conc = 0;
        for (auto& om : types_of(n))
            if (om.concentrated_degree() == 1) ++conc;
        CHECK(conc == count_multisets(n));
    }
}

TEST_CASE("type statistics") {
    TypeT a({{2, P({1})}});
    CHECK(a.bracket() == P({2}));
    CHECK(a.f() == 1);
    CHECK(a.worder() == 2);

    TypeT b({{1, P({1})}, {1, P({1})}});
    CHECK(b.bracket() == P({1, 1}));
    CHECK(b.f() == 2);
    CHECK(b.worder() == 2);

    TypeT c({{1, P({2, 1})}});
    CHECK(c.bracket() == P({2, 1}));
    CHECK(c.f() == 3);
    CHECK(c.worder() == 1);
    CHECK(c.nstat() == 1);

    TypeT d({{2, P({2, 1})}, {3, P({1})}});
    CHECK(d.size() == 9);
    CHECK(d.bracket() == P({4, 3, 2}));
    CHECK(d.nstat() == 2);
    CHECK(d.concentrated_degree() == 0);
    // canonical order puts the degree-3 pair first
    CHECK(d.pairs()[0].first == 3);
}

TEST_CASE("k0 and c0") {
    for (auto& la : partitions_of(3)) CHECK(k0(TypeT({{1, la}})) == 1);
    CHECK(k0(TypeT({{2, P({2, 1})}, {3, P({1})}})) == 0);
    CHECK(k0(TypeT({{2, P({1})}, {2, P({2})}})) == 2);
    CHECK(c0(TypeT({{1, P({2})}})) == 1);
    CHECK(c0(TypeT({{1, P({1})}, {1, P({1})}})) == Rat(-1, 2));
    // identity k0 = c0 * worder for all small types
    for (int n = 1; n <= 6; ++n)
        for (auto& om : types_of(n)) CHECK(Rat(k0(om)) == c0(om) * Rat(om.worder()));
}

TEST_CASE("similar relation and degree profiles") {
    TypeT a({{2, P({1, 1})}, {1, P({3})}});
    TypeT b({{2, P({2})}, {1, P({2, 1})}});
    TypeT c({{2, P({2})}, {1, P({1, 1, 1})}});
    CHECK(a.similar(b));
    CHECK(b.similar(c));
    CHECK_FALSE(a.similar(TypeT({{1, P({2})}, {2, P({2})}})));
    CHECK(a.degree_profile() == std::vector<std::pair<int, int>>{{2, 2}, {1, 3}});
}

TEST_CASE("arithmetic functions") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(divisor_sigma(1) == 1);
    CHECK(divisor_sigma(6) == 12);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("parsing and printing") {
    CHECK(Partition::parse("2,1").parts() == std::vector<int>{2, 1});
    CHECK(Partition::parse("1,2").parts() == std::vector<int>{2, 1});
    CHECK(Partition::parse("0").empty());
    CHECK(P({3, 1}).str() == "3,1");
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK_THROWS_AS(Partition::parse("1,,2"), ParseError);

    auto mp = MultiPartition::parse("1,1;2;2");
    REQUIRE(mp.k() == 3);
    CHECK(mp.components[0] == P({1, 1}));
    CHECK(mp.components[1] == P({2}));
    CHECK(mp.common_size() == 2);
    CHECK(mp.str() == "1,1;2;2");
    CHECK_THROWS_AS(MultiPartition::parse("1,1;3").common_size(), SizeMismatch);
}
