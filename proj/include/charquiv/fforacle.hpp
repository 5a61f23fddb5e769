#pragma once

// Ground-truth counting over small finite fields: brute-force enumeration of
// the multiplicative (character variety) and additive (quiver variety)
// equations, generic eigenvalue search, Frobenius-style Fourier counts, and
// the GL_2(F_q) character table in exact cyclotomic arithmetic.

#include <vector>

#include "charquiv/combinat.hpp"
#include "charquiv/exact.hpp"

namespace cq {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("BudgetExceeded") {}
};
struct NotFound : std::runtime_error {
    NotFound() : std::runtime_error("NotFound") {}
};
struct NonIntegerResult : std::runtime_error {
    NonIntegerResult() : std::runtime_error("NonIntegerResult") {}
};

// Prime field F_p; elements are canonical representatives 0..p-1.
class Fq {
  public:
    explicit Fq(long p);
    long q() const { return p_; }
    long add(long a, long b) const { return (a + b) % p_; }
    long sub(long a, long b) const { return (a - b + p_) % p_; }
    long mul(long a, long b) const { return a * b % p_; }
    long neg(long a) const { return (p_ - a) % p_; }
    long inv(long a) const;
    long pow(long a, long e) const;

  private:
    long p_;
};

struct FqMatrix {
    int n = 0;
    std::vector<long> e;  // row-major

    FqMatrix() = default;
    explicit FqMatrix(int size) : n(size), e(size * size, 0) {}
    long& at(int i, int j) { return e[i * n + j]; }
    long at(int i, int j) const { return e[i * n + j]; }
    friend bool operator==(const FqMatrix& a, const FqMatrix& b) = default;
};

FqMatrix mat_identity(int n);
FqMatrix mat_add(const Fq& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_sub(const Fq& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_mul(const Fq& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_neg(const Fq& F, const FqMatrix& a);
long mat_det(const Fq& F, const FqMatrix& a);
long mat_trace(const Fq& F, const FqMatrix& a);
// Inverse of an invertible matrix; throws std::invalid_argument if singular.
FqMatrix mat_inv(const Fq& F, const FqMatrix& a);
// Monic characteristic polynomial det(xI - M), coefficients ascending.
std::vector<long> mat_charpoly(const Fq& F, const FqMatrix& m);
// Squarefree minimal polynomial test (diagonalizable over the closure).
bool mat_semisimple(const Fq& F, const FqMatrix& m);

// A semisimple conjugacy class (or adjoint orbit) keyed by characteristic
// polynomial; the non-semisimple variant only appears inside the Fourier
// orbit enumeration.
struct ConjClassFq {
    int n = 0;
    std::vector<long> charpoly;  // monic, ascending
    bool semisimple = true;
    Int size;
    FqMatrix rep;

    bool contains(const Fq& F, const FqMatrix& m) const;
};
using AdjOrbitFq = ConjClassFq;

// The class of the diagonal matrix with eigenvalue eigs[j] repeated mu_j
// times; eigenvalues must be distinct (nonzero for the multiplicative case).
ConjClassFq semisimple_class(const Fq& F, const Partition& mu, const std::vector<long>& eigs);

Int gl_order(int n, long q);

// Eigenvalue assignments per component, parts aligned with mu.
using EigTuple = std::vector<std::vector<long>>;

bool is_generic_mult(const Fq& F, const MultiPartition& mu, const EigTuple& eigs);
bool is_generic_add(const Fq& F, const MultiPartition& mu, const EigTuple& eigs);

// Deterministic exhaustive search; throws NotFound when the field is too
// small and DivisibleMu when no additive choice can exist at all.
EigTuple find_generic_mult(const MultiPartition& mu, long q);
EigTuple find_generic_add(const MultiPartition& mu, long q);

// Solutions of [A_1,B_1]...[A_g,B_g] X_1...X_k = I with X_i in classes[i],
// by enumeration with the last factor solved for.  k >= 1.
Int count_char_points(const Fq& F, int g, const std::vector<ConjClassFq>& classes,
                      long budget = 100000000);
// Solutions of sum [A_i,B_i] + X_1 + ... + X_k = 0 in gl_n.
Int count_quiver_points(const Fq& F, int g, const std::vector<AdjOrbitFq>& orbits,
                        long budget = 100000000);

// Exact element of Z[zeta_N] stored on the group-ring basis 1, zeta, ...,
// zeta^{N-1} with rational coefficients.
struct Cyc {
    long N = 1;
    std::vector<Rat> c;

    explicit Cyc(long order) : N(order), c(order, Rat(0)) {}
    static Cyc root(long order, long k);  // zeta^k
    static Cyc scalar(long order, const Rat& v);

    Cyc& operator+=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc scaled(const Rat& v) const;
    Cyc conj() const;  // zeta -> zeta^{-1}

    // Reduce modulo the N-th cyclotomic polynomial; throws NonIntegerResult
    // unless the value is rational.
    Rat rational_value() const;
    std::string str() const;
};

struct GL2Class {
    int family;  // 0 central, 1 non-semisimple, 2 split, 3 elliptic
    long a = 0, b = 0;  // family 0,1: a; 2: pair (a,b); 3: exponent of the
                        // eigenvalue for a fixed generator of F_{q^2}^*
    Int size;
    std::vector<long> charpoly;
    bool semisimple;
};

struct GL2Char {
    int family;  // 0: alpha o det, 1: Steinberg twist, 2: principal series,
                 // 3: cuspidal
    long i = 0, j = 0;
    long degree;
};

class CharTableGL2 {
  public:
    explicit CharTableGL2(long q);  // q odd prime

    long q() const { return q_; }
    const std::vector<GL2Class>& classes() const { return classes_; }
    const std::vector<GL2Char>& chars() const { return chars_; }
    Cyc value(const GL2Char& chi, const GL2Class& cls) const;
    // Index of the table class matching a semisimple-or-not class key.
    int class_index(const ConjClassFq& c) const;

  private:
    long q_;
    std::vector<GL2Class> classes_;
    std::vector<GL2Char> chars_;
    std::vector<long> dlog_;   // discrete log in F_q^* of the generator below
    long gen_ = 0;             // generator exponent bookkeeping (see .cpp)
};

CharTableGL2 gl2_char_table(long q);

// Frobenius formula |G|^{2g-1} sum_chi prod |C_i| chi(C_i) / chi(1)^{2g-2+k};
// must equal count_char_points.  n = 2 only.
Int count_via_group_fourier(int g, const std::vector<ConjClassFq>& classes,
                            const CharTableGL2& table);
// Additive analogue over gl_n, n <= 2, with the additive character valued in
// Z[zeta_p]; must equal count_quiver_points.
Int count_via_add_fourier(const Fq& F, int g, const std::vector<AdjOrbitFq>& orbits);

}  // namespace cq
