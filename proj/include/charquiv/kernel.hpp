#pragma once

// The master generating function Omega(z, w), the kernel H_mu(z, w) obtained
// from its plethystic Log, and the specializations derived from it:
// E-polynomials, A-polynomials (pure part), the conjectural two-variable
// refinement, Euler characteristics and the palindromy check.

#include <map>

#include "charquiv/combinat.hpp"
#include "charquiv/exact.hpp"
#include "charquiv/polybases.hpp"
#include "charquiv/symfun.hpp"

namespace cq {

struct UnsupportedGenusZero : std::runtime_error {
    UnsupportedGenusZero() : std::runtime_error("UnsupportedGenusZero") {}
};

enum class OmegaMode { full, pure, epoly };

struct KernelQuery {
    int g = 0;
    MultiPartition mu;
    OmegaMode mode = OmegaMode::full;
};

// d_mu = n^2 (2g - 2 + k) - sum (mu^i_j)^2 + 2; always even.
long dim_mu(const KernelQuery& q);

// True when the gcd of all parts of all components is 1.
bool indivisible(const MultiPartition& mu);

// The degree-m term sums over partitions of m.
//   full:  hook(la; z, w) * prod_i Htilde_la(x_i; z^2, w^2)
//   pure:  hook at (0, sqrt q) * prod_i Hall-Littlewood_la(x_i; q)
//   epoly: hook at (sqrt q, 1/sqrt q) with the geometric specialization
//          folded into each alphabet, leaving Schur functions
// The pure and epoly variants live in the first variable (q).
GradedSeries omega_series(int g, int k, int cap, OmegaMode mode);

struct HmuResult {
    RatFun value;     // in (z, w)
    bool polynomial;  // whether the reduced denominator is trivial
    long d;           // dim_mu
};

// (z^2 - 1)(1 - w^2) < Log Omega, h_mu >.  Zero when component sizes differ.
// Polynomiality is reported, not enforced; when the value is a polynomial it
// is checked to be invariant under (z, w) -> (-z, -w).
HmuResult hmu(const KernelQuery& q);

// q^{d/2} H_mu(sqrt q, 1/sqrt q), computed both from hmu and by the direct
// Hall-Littlewood route; the two must agree, as must the (1/sqrt q, sqrt q)
// specialization.
LaurentPoly2 epoly(const KernelQuery& q);

struct ApolyResult {
    LaurentPoly2 value;          // in q
    bool quiver_interpretation;  // mu indivisible
};

// H_mu(0, sqrt q), via the pure-mode series directly in q.
ApolyResult apoly(const KernelQuery& q);

// (t sqrt q)^d H_mu(-1/sqrt q, t sqrt q) as a polynomial in (q, t);
// t = -1 recovers epoly and the diagonal t^2 q part recovers apoly.
LaurentPoly2 mhp_candidate(const KernelQuery& q);

// Palindromy E(q) = q^d E(1/q).
bool check_curious(const LaurentPoly2& e, long d);

// Euler characteristic of the variety divided by its free (C^*)^{2g} action;
// genus 0 is unsupported.
Rat euler_tilde(const KernelQuery& q);

// Non-emptiness of the associated quiver variety: apoly != 0.  Requires mu
// indivisible.
bool check_nonempty(const KernelQuery& q);

}  // namespace cq
