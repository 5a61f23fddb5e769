#pragma once

// Character-sum formulas for GL_n(F_q): the pairing A(alpha, omega), the
// sums H and H-hat of products of character values over classes of a fixed
// type, and the tensor-product multiplicity <Lambda (x) R_mu, 1>.

#include <vector>

#include "charquiv/combinat.hpp"
#include "charquiv/exact.hpp"
#include "charquiv/polybases.hpp"
#include "charquiv/symfun.hpp"

namespace cq {

// The type of a semisimple conjugacy class with eigenvalue multiplicities
// mu = (n_1, ..., n_r): (1, 1^{n_1}) ... (1, 1^{n_r}).
TypeT star_type(const Partition& mu);
// The type of a semisimple character indexed by mu: (1, (n_1)) ... (1, (n_r)).
TypeT dagger_type(const Partition& mu);

// Type extension of a symmetric-function family: u_omega = prod_j u_{omega^j}
// evaluated in the alphabet x^{d_j} with parameter q^{d_j}.
SymFun schur_type(const TypeT& om, int cap);
SymFun hall_littlewood_type(const TypeT& om, int cap);

// Type character prod_j chi^{omega^j}_{tau^j}; zero unless the degree
// profiles match, and summed over the distinguishable matchings when a
// (degree, size) block repeats.
Int type_char(const TypeT& om, const TypeT& tau);

// A(alpha, omega) = < s_alpha, Htilde_omega(x; q) >, by the Hall pairing.
LaurentPoly2 a_pair(const TypeT& alpha, const TypeT& omega);
// The same value by the double sum over torus types (verification oracle):
// sum_tau z_{[tau]} chi^alpha_tau / z_tau * sum_{[nu]=[tau]} Q^omega_nu / z_nu.
LaurentPoly2 a_pair_raw(const TypeT& alpha, const TypeT& omega);

struct CharSums {
    LaurentPoly2 H;     // sum over classes of type omega of prod X_i(O)
    LaurentPoly2 Hhat;  // sum over characters of type omega of prod X(C_i)
};

// The displayed formulas (q-1) K_omega^o / |W(omega)| * prod_i sign * A(...);
// both vanish when omega mixes degrees.
CharSums char_type_sums(const std::vector<TypeT>& mu, const TypeT& omega);

// <Lambda (x) R_mu, 1> = sum over types omega of the genus-g pure hook value
// at omega times H^{mu_dagger}_omega; equals the A-polynomial of the kernel.
LaurentPoly2 multiplicity(int g, const MultiPartition& mu);

}  // namespace cq
