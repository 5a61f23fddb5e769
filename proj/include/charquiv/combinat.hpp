#pragma once

// Partitions, multipartitions, types (multisets of pairs (d, partition)),
// symmetric group characters and the small combinatorial constants built
// from them.

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charquiv/exact.hpp"

namespace cq {

struct SizeMismatch : std::runtime_error {
    SizeMismatch() : std::runtime_error("SizeMismatch") {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};
// A multipartition whose parts share a common divisor > 1 where an
// indivisible one is required.
struct DivisibleMu : std::runtime_error {
    DivisibleMu() : std::runtime_error("DivisibleMu") {}
};

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // n copies of part p, e.g. rectangle (p^n).
    static Partition rectangle(int p, int n);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;           // |λ|
    int length() const { return (int)parts_.size(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    long nstat() const;         // n(λ) = Σ (i-1) λ_i
    long pairing() const;       // ⟨λ,λ⟩ = Σ (λ'_j)^2 = 2 n(λ) + |λ|

    // Cell (i, j), zero-based, is valid when j < λ_{i+1}.
    int arm(int i, int j) const { return parts_[i] - j - 1; }
    int leg(int i, int j) const;
    int hook(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }
    std::vector<int> hooks() const;  // all hook lengths, one per cell

    // (part value, multiplicity), decreasing part values.
    std::vector<std::pair<int, int>> multiplicities() const;

    // Scale every part by d.
    Partition scaled(int d) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;  // "2,1"; the empty partition prints as "0"
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;  // weakly decreasing, positive
};

// z_λ = Π i^{m_i} m_i!
Int z_part(const Partition& la);

std::vector<Partition> partitions_of(int n);

// χ^λ_ρ by the Murnaghan–Nakayama rule (memoized).
long sym_char(const Partition& la, const Partition& rho);

struct MultiPartition {
    std::vector<Partition> components;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> c) : components(std::move(c)) {}
    int k() const { return (int)components.size(); }
    bool equal_sizes() const;
    int common_size() const;  // size of each component; throws SizeMismatch

    auto operator<=>(const MultiPartition&) const = default;

    std::string str() const;  // "1,1;2;2"
    static MultiPartition parse(const std::string& text);
};

// A type: multiset of pairs (d ≥ 1, nonzero partition), kept sorted
// non-increasingly by (d, |λ|, lex λ).
class TypeT {
  public:
    using Pair = std::pair<int, Partition>;

    TypeT() = default;
    explicit TypeT(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return pairs_; }
    int size() const;   // Σ d_i |λ^i|
    int f() const;      // Σ |λ^i|
    long nstat() const; // Σ d_i n(λ^i)
    // [ω]: the multiset union of the d_i-scaled λ^i, as a partition.
    Partition bracket() const;
    // |W(ω)| = Π_{(d,λ)} d^{m_{d,λ}} m_{d,λ}!
    Int worder() const;
    // (pair, multiplicity) over distinct pairs.
    std::vector<std::pair<Pair, int>> multiplicities() const;
    // The common degree d when every pair has degree d, otherwise 0.
    int concentrated_degree() const;
    // π(ω): the multiset of (d_i, |λ^i|), sorted like the pairs themselves.
    std::vector<std::pair<int, int>> degree_profile() const;
    // ω ∼ τ: equal degree profiles.
    bool similar(const TypeT& o) const { return degree_profile() == o.degree_profile(); }

    auto operator<=>(const TypeT&) const = default;

    std::string str() const;  // "(2,(1))(1,(3,1))"

  private:
    std::vector<Pair> pairs_;
};

std::vector<TypeT> types_of(int n);

// K_ω° = (−1)^{r−1} d^{r−1} μ(d) (r−1)! when all degrees equal d, else 0.
Int k0(const TypeT& om);
// C_ω° = (μ(d)/d)(−1)^{r−1}(r−1)!/Π m_{d,λ}! when concentrated in degree d,
// else 0; satisfies C_ω° = K_ω° / |W(ω)|.
Rat c0(const TypeT& om);

int mobius(int n);
int divisor_sigma(int n);
std::vector<int> divisors(int n);

Int factorial(int n);

}  // namespace cq
