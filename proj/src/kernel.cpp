#include "charquiv/kernel.hpp"

#include <iostream>
#include <numeric>
#include <tuple>

namespace cq {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}
}  // namespace

long dim_mu(const KernelQuery& q) {
    long n = q.mu.common_size();
    long d = n * n * (2 * q.g - 2 + q.mu.k()) + 2;
    for (auto& c : q.mu.components)
        for (int p : c.parts()) d -= (long)p * p;
    require(d % 2 == 0, "dim_mu: odd dimension");
    return d;
}

bool indivisible(const MultiPartition& mu) {
    int g = 0;
    for (auto& c : mu.components)
        for (int p : c.parts()) g = std::gcd(g, p);
    return g == 1;
}

namespace {

// Coefficient substitution (q, t) -> (q^2, t^2).
SymFun coeffs_squared(const SymFun& f) {
    SymFun out(f.alphabets(), f.cap());
    for (auto& [idx, c] : f.coeffs()) out.add_term(idx, c.exponents_scaled(2));
    return out;
}

// Summand of Omega at la, by mode.  The pure and epoly variants are single
// variable (q); the full variant is in (z, w).
SymFun omega_term(const Partition& la, int g, int k, int cap, OmegaMode mode) {
    SymFun prod;
    RatFun scale;
    switch (mode) {
        case OmegaMode::full: {
            SymFun mac = coeffs_squared(macdonald(la, cap));
            prod = SymFun::one(k, cap);
            for (int i = 0; i < k; ++i) prod *= embed_alphabet(mac, k, i);
            scale = hook_genus(la, g);
            break;
        }
        case OmegaMode::pure: {
            SymFun hl = hall_littlewood(la, cap);
            prod = SymFun::one(k, cap);
            for (int i = 0; i < k; ++i) prod *= embed_alphabet(hl, k, i);
            scale = hook_specials(la, g).pure;
            break;
        }
        case OmegaMode::epoly: {
            // Hook at (sqrt q, 1/sqrt q) and, per alphabet, the geometric
            // specialization turning Htilde_la(x; q, 1/q) into a multiple of
            // the Schur function: q^{(1-g)|la|} (q^{-n(la)} H_la(q))^{k+2g-2}.
            SymFun s = basis_element1(Basis::s, la, cap);
            prod = SymFun::one(k, cap);
            for (int i = 0; i < k; ++i)
                prod *= embed_alphabet(s, k, i).principal_specialize(i);
            RatFun base = RatFun(hook_specials(la, g).hookpoly) *
                          RatFun(LaurentPoly2::x((int)-la.nstat()));
            scale = base.pow(k + 2 * g - 2) *
                    RatFun(LaurentPoly2::x((1 - g) * la.size()));
            break;
        }
    }
    return prod.scaled(scale);
}

std::map<Partition, SymFun> omega_terms(int g, int k, int cap, OmegaMode mode) {
    std::map<Partition, SymFun> a;
    for (int m = 1; m <= cap; ++m)
        for (auto& la : partitions_of(m)) a[la] = omega_term(la, g, k, cap, mode);
    return a;
}

// h_mu = prod_i h_{mu^i}(x_i).
SymFun h_mu_fun(const MultiPartition& mu, int cap) {
    int k = mu.k();
    SymFun out = SymFun::one(k, cap);
    for (int i = 0; i < k; ++i)
        out *= embed_alphabet(basis_element1(Basis::h, mu.components[i], cap), k, i);
    return out;
}

// < Log Omega_mode, h_mu > at degree n.  The Log series depends only on
// (g, k, n, mode), so it is memoized across the many mu sharing it.
RatFun log_pairing(int g, const MultiPartition& mu, OmegaMode mode) {
    int n = mu.common_size(), k = mu.k();
    static std::map<std::tuple<int, int, int, int>, GradedSeries> cache;
    auto key = std::make_tuple(g, k, n, static_cast<int>(mode));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, log_via_types(omega_terms(g, k, n, mode), k, n)).first;
    return hall_pair(it->second.term(n), h_mu_fun(mu, n));
}

}  // namespace

GradedSeries omega_series(int g, int k, int cap, OmegaMode mode) {
    GradedSeries out = GradedSeries::one(k, cap);
    for (auto& [la, f] : omega_terms(g, k, cap, mode)) {
        GradedSeries t(k, cap);
        t.set_term(la.size(), f);
        out += t;
    }
    return out;
}

HmuResult hmu(const KernelQuery& q) {
    if (!q.mu.equal_sizes()) return {RatFun(), true, 0};
    HmuResult r;
    r.d = dim_mu(q);
    LaurentPoly2 z2 = LaurentPoly2::x(2), w2 = LaurentPoly2::y(2);
    r.value = RatFun((z2 - LaurentPoly2(1L)) * (LaurentPoly2(1L) - w2)) *
              log_pairing(q.g, q.mu, OmegaMode::full);
    r.polynomial = r.value.is_polynomial();
    if (r.polynomial) {
        require(r.value.negated_vars() == r.value, "hmu: sign symmetry broken");
    } else {
        std::cerr << "warning: H_mu not polynomial for mu=" << q.mu.str()
                  << " g=" << q.g << "; denominator "
                  << r.value.den().str("z", "w") << "\n";
    }
    return r;
}

LaurentPoly2 epoly(const KernelQuery& q) {
    HmuResult h = hmu(q);
    LaurentPoly2 e = h.value.substitute_halfpowers(1, -1).shifted((int)(h.d / 2), 0);
    LaurentPoly2 e2 = h.value.substitute_halfpowers(-1, 1).shifted((int)(h.d / 2), 0);
    require(e == e2, "epoly: the two half-power specializations disagree");
    // Independent route: Omega already specialized at (sqrt q, 1/sqrt q),
    // E = q^{d/2} (q-1)^2 / q * < Log, h_mu >.
    LaurentPoly2 qm1 = LaurentPoly2::x(1) - LaurentPoly2(1L);
    RatFun fast = log_pairing(q.g, q.mu, OmegaMode::epoly) * RatFun(qm1 * qm1) *
                  RatFun(LaurentPoly2::x((int)(h.d / 2 - 1)));
    require(fast.as_polynomial() == e, "epoly: direct route disagrees");
    return e;
}

ApolyResult apoly(const KernelQuery& q) {
    // At (z, w) = (0, sqrt q) the prefactor (z^2-1)(1-w^2) becomes (q-1).
    RatFun a = log_pairing(q.g, q.mu, OmegaMode::pure) *
               RatFun(LaurentPoly2::x(1) - LaurentPoly2(1L));
    return {a.as_polynomial(), indivisible(q.mu)};
}

LaurentPoly2 mhp_candidate(const KernelQuery& q) {
    HmuResult h = hmu(q);
    LaurentPoly2 val = h.value.as_polynomial();
    int d = (int)h.d;
    LaurentPoly2 out;
    for (auto& [e, c] : val.terms()) {
        auto [a, b] = e;
        // z^a w^b -> (-1/sqrt q)^a (t sqrt q)^b, then times (t sqrt q)^d.
        if ((d + b - a) % 2 != 0) throw OddParity();
        Rat cc = (a % 2 ? -c : c);
        out += LaurentPoly2::monomial(cc, (d + b - a) / 2, d + b);
    }
    return out;
}

bool check_curious(const LaurentPoly2& e, long d) {
    LaurentPoly2 rev;
    for (auto& [ex, c] : e.terms()) {
        if (ex.second != 0) return false;
        rev += LaurentPoly2::monomial(c, (int)d - ex.first, 0);
    }
    return rev == e;
}

Rat euler_tilde(const KernelQuery& q) {
    if (q.g == 0) throw UnsupportedGenusZero();
    int n = q.mu.common_size(), k = q.mu.k();
    if (q.g >= 2) {
        for (auto& c : q.mu.components)
            if (c.length() != 1) return Rat(0);
        Rat r(mobius(n));
        for (int i = 0; i < 2 * q.g - 3; ++i) r *= n;
        return r;
    }
    // Genus 1: (1/n) sum over d | gcd of parts of
    // sigma(n/d) mobius(d) prod_i (n/d)! / prod_j (mu^i_j / d)!.
    int gc = 0;
    for (auto& c : q.mu.components)
        for (int p : c.parts()) gc = std::gcd(gc, p);
    Rat total(0);
    for (int d : divisors(gc)) {
        Rat term = Rat(divisor_sigma(n / d)) * mobius(d);
        for (int i = 0; i < k; ++i) {
            term *= Rat(factorial(n / d));
            for (int p : q.mu.components[i].parts()) term /= factorial(p / d);
        }
        total += term;
    }
    return total / n;
}

bool check_nonempty(const KernelQuery& q) {
    if (!indivisible(q.mu)) throw DivisibleMu();
    return !apoly(q).value.is_zero();
}

}  // namespace cq
