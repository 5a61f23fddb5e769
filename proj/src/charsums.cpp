#include "charquiv/charsums.hpp"

#include <algorithm>

namespace cq {

TypeT star_type(const Partition& mu) {
    std::vector<TypeT::Pair> pairs;
    for (int p : mu.parts()) pairs.push_back({1, Partition::rectangle(1, p)});
    return TypeT(std::move(pairs));
}

TypeT dagger_type(const Partition& mu) {
    std::vector<TypeT::Pair> pairs;
    for (int p : mu.parts()) pairs.push_back({1, Partition(std::vector<int>{p})});
    return TypeT(std::move(pairs));
}

SymFun schur_type(const TypeT& om, int cap) {
    SymFun out = SymFun::one(1, cap);
    for (auto& [d, la] : om.pairs()) out *= basis_element1(Basis::s, la, cap).adams(d);
    return out;
}

SymFun hall_littlewood_type(const TypeT& om, int cap) {
    SymFun out = SymFun::one(1, cap);
    for (auto& [d, la] : om.pairs()) out *= hall_littlewood(la, cap).adams(d);
    return out;
}

Int type_char(const TypeT& om, const TypeT& tau) {
    if (!om.similar(tau)) return 0;
    // Pairs are canonically sorted, so equal (degree, size) blocks are
    // contiguous and aligned between the two types.  Within each block sum
    // over the distinguishable arrangements of tau's partitions.
    auto& a = om.pairs();
    auto& b = tau.pairs();
    Int total(1);
    size_t i = 0;
    while (i < a.size()) {
        size_t j = i + 1;
        while (j < a.size() && a[j].first == a[i].first &&
               a[j].second.size() == a[i].second.size())
            ++j;
        std::vector<Partition> block;
        for (size_t l = i; l < j; ++l) block.push_back(b[l].second);
        std::sort(block.begin(), block.end());
        Int sum(0);
        do {
            Int prod(1);
            for (size_t l = i; l < j; ++l) prod *= sym_char(a[l].second, block[l - i]);
            sum += prod;
        } while (std::next_permutation(block.begin(), block.end()));
        total *= sum;
        i = j;
    }
    return total;
}

namespace {

// Q^omega_nu with the same block-matching convention as type_char: within
// each repeated (degree, size) block, sum over the distinguishable
// arrangements of nu's partitions.
LaurentPoly2 type_green(const TypeT& om, const TypeT& nu) {
    if (!om.similar(nu)) return LaurentPoly2();
    auto& a = om.pairs();
    auto& b = nu.pairs();
    LaurentPoly2 total(1L);
    size_t i = 0;
    while (i < a.size()) {
        size_t j = i + 1;
        while (j < a.size() && a[j].first == a[i].first &&
               a[j].second.size() == a[i].second.size())
            ++j;
        std::vector<Partition> block;
        for (size_t l = i; l < j; ++l) block.push_back(b[l].second);
        std::sort(block.begin(), block.end());
        LaurentPoly2 sum;
        do {
            LaurentPoly2 prod(1L);
            for (size_t l = i; l < j; ++l)
                prod *= green_poly(a[l].second, block[l - i]).exponents_scaled(a[l].first);
            sum += prod;
        } while (std::next_permutation(block.begin(), block.end()));
        total *= sum;
        i = j;
    }
    return total;
}

}  // namespace

LaurentPoly2 a_pair(const TypeT& alpha, const TypeT& omega) {
    if (alpha.size() != omega.size()) throw SizeMismatch();
    int n = alpha.size();
    return RatFun(hall_pair(schur_type(alpha, n), hall_littlewood_type(omega, n)))
        .as_polynomial();
}

LaurentPoly2 a_pair_raw(const TypeT& alpha, const TypeT& omega) {
    if (alpha.size() != omega.size()) throw SizeMismatch();
    int n = alpha.size();
    RatFun total;
    for (auto& tau : types_of(n)) {
        Int chi = type_char(alpha, tau);
        if (chi == 0) continue;
        Rat ztau(1);
        for (auto& [d, la] : tau.pairs()) {
            (void)d;
            ztau *= z_part(la);
        }
        Partition bracket = tau.bracket();
        RatFun inner;
        for (auto& nu : types_of(n)) {
            if (nu.bracket() != bracket) continue;
            LaurentPoly2 green = type_green(omega, nu);
            if (green.is_zero()) continue;
            Rat znu(1);
            for (auto& [d, la] : nu.pairs()) {
                (void)d;
                znu *= z_part(la);
            }
            inner += RatFun(green) * RatFun(Rat(1) / znu);
        }
        total += inner * RatFun(Rat(z_part(bracket)) * chi / ztau);
    }
    return total.as_polynomial();
}

CharSums char_type_sums(const std::vector<TypeT>& mu, const TypeT& omega) {
    int n = omega.size();
    Int kzero = k0(omega);
    if (kzero == 0) return {LaurentPoly2(), LaurentPoly2()};
    RatFun front = RatFun(LaurentPoly2::x(1) - LaurentPoly2(1L)) *
                   RatFun(Rat(kzero) / Rat(omega.worder()));
    RatFun h = front, hhat = front;
    for (auto& m : mu) {
        int sign_h = (n + m.f()) % 2 ? -1 : 1;
        int sign_hat = (n + omega.f()) % 2 ? -1 : 1;
        h *= RatFun(a_pair(m, omega)) * RatFun(Rat(sign_h));
        hhat *= RatFun(a_pair(omega, m)) * RatFun(Rat(sign_hat));
    }
    return {h.as_polynomial(), hhat.as_polynomial()};
}

LaurentPoly2 multiplicity(int g, const MultiPartition& mu) {
    int n = mu.common_size();
    std::vector<TypeT> daggers;
    for (auto& c : mu.components) daggers.push_back(dagger_type(c));
    RatFun total;
    for (auto& om : types_of(n)) {
        if (k0(om) == 0) continue;
        RatFun hook(Rat(1));
        for (auto& [d, la] : om.pairs())
            hook *= hook_specials(la, g).pure.exponents_scaled(d);
        total += hook * RatFun(char_type_sums(daggers, om).H);
    }
    return total.as_polynomial();
}

}  // namespace cq
