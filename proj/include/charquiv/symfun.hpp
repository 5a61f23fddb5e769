#pragma once

// Symmetric functions in k alphabets, truncated in degree, with coefficients
// in the field of two-variable rational functions.  Internal basis: products
// of power sums, indexed by k-tuples of partitions.

#include <map>
#include <vector>

#include "charquiv/combinat.hpp"
#include "charquiv/exact.hpp"

namespace cq {

struct DegreeCapExceeded : std::runtime_error {
    DegreeCapExceeded() : std::runtime_error("DegreeCapExceeded") {}
};
struct AlphabetMismatch : std::runtime_error {
    AlphabetMismatch() : std::runtime_error("AlphabetMismatch") {}
};
struct NonzeroConstantTerm : std::runtime_error {
    NonzeroConstantTerm() : std::runtime_error("NonzeroConstantTerm") {}
};
struct ConstantTermNotOne : std::runtime_error {
    ConstantTermNotOne() : std::runtime_error("ConstantTermNotOne") {}
};

using PIndex = std::vector<Partition>;  // one partition per alphabet

enum class Basis { p, m, h, e, s };

class SymFun {
  public:
    SymFun() : SymFun(1, 0) {}
    SymFun(int alphabets, int cap) : k_(alphabets), cap_(cap) {}
    static SymFun one(int alphabets, int cap);
    static SymFun zero(int alphabets, int cap) { return SymFun(alphabets, cap); }

    int alphabets() const { return k_; }
    int cap() const { return cap_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool truncated() const { return truncated_; }
    const std::map<PIndex, RatFun>& coeffs() const { return coeffs_; }

    RatFun coeff(const PIndex& idx) const;
    void add_term(const PIndex& idx, const RatFun& c);

    SymFun operator-() const;
    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(const SymFun& a, const SymFun& b);
    SymFun& operator*=(const SymFun& o) { return *this = *this * o; }
    SymFun scaled(const RatFun& c) const;
    friend bool operator==(const SymFun& a, const SymFun& b) {
        return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

    // p_r -> p_{dr} in every alphabet and parameters (q,t) -> (q^d, t^d).
    SymFun adams(int d) const;
    // p_r in alphabet i gains the factor 1/(1 - q^r), q the first parameter.
    SymFun principal_specialize(int i) const;
    // Homogeneous part of multidegree (n,...,n).
    SymFun diagonal_part(int n) const;

  private:
    int k_, cap_;
    bool truncated_ = false;
    std::map<PIndex, RatFun> coeffs_;
};

SymFun basis_element(Basis b, const PIndex& idx, int cap);
// Single-alphabet convenience.
SymFun basis_element1(Basis b, const Partition& la, int cap);

RatFun hall_pair(const SymFun& f, const SymFun& g);

// View a one-alphabet function as living in alphabet i of k alphabets.
SymFun embed_alphabet(const SymFun& f, int k, int i);

// Expansion of one single-alphabet basis element into power sums
// (coefficient of p_rho in a_la).
const std::map<Partition, Rat>& p_expansion(Basis b, const Partition& la);

class GradedSeries {
  public:
    GradedSeries(int alphabets, int cap) : k_(alphabets), cap_(cap) {}
    static GradedSeries one(int alphabets, int cap);

    int alphabets() const { return k_; }
    int cap() const { return cap_; }
    // Degree-n term; degrees above the cap are unreliable and error out.
    SymFun term(int n) const;
    void set_term(int n, const SymFun& f);
    RatFun constant() const;  // coefficient of the empty index in degree 0

    GradedSeries& operator+=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries scaled(const RatFun& c) const;
    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

    // Degree shift n -> dn plus the Adams action on each term.
    GradedSeries adams(int d) const;

  private:
    int k_, cap_;
    std::map<int, SymFun> terms_;
};

// Exp(V) = exp(sum_{d>=1} adams(V,d)/d); V must have no degree-0 term.
GradedSeries pleth_exp(const GradedSeries& v);
// Inverse of pleth_exp; F must have constant term 1.
GradedSeries pleth_log(const GradedSeries& f);

// Log of the series sum_la A_la, where A_la is homogeneous of multidegree
// (|la|,...,|la|), via the type expansion sum_om c0(om) prod_j adams(A_{la_j}, d_j).
// The map `a` gives A_la for nonzero la (missing = zero); A_0 = 1 implicitly.
GradedSeries log_via_types(const std::map<Partition, SymFun>& a, int alphabets, int cap);

}  // namespace cq
