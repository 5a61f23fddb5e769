#pragma once

// Special bases: modified Macdonald polynomials, transformed Hall-Littlewood
// polynomials, Kostka-Foulkes and Green polynomials, and the genus-g hook
// functions.  Parameter variables: first = q (or z), second = t (or w).

#include <map>
#include <optional>
#include <string>

#include "charquiv/combinat.hpp"
#include "charquiv/exact.hpp"
#include "charquiv/symfun.hpp"

namespace cq {

// Schur expansion of the modified Macdonald polynomial of la: coefficient of
// s_nu is a polynomial in (q, t).
const std::map<Partition, LaurentPoly2>& macdonald_schur(const Partition& la);

// The polynomial itself as a symmetric function with the given cap.
SymFun macdonald(const Partition& la, int cap);

// Transformed Hall-Littlewood polynomial, parameter in the first variable.
SymFun hall_littlewood(const Partition& la, int cap);

// Modified Kostka-Foulkes polynomial (Schur coefficient of hall_littlewood).
LaurentPoly2 kostka_foulkes(const Partition& nu, const Partition& la);

// Green polynomial: sum over nu of char(nu at lower) * kostka_foulkes(nu, upper).
LaurentPoly2 green_poly(const Partition& upper, const Partition& lower);
// Type extension: product over matched pairs of green(upper_i, lower_i) in
// q^{d_i}; zero when the degree profiles differ.
LaurentPoly2 green_poly(const TypeT& upper, const TypeT& lower);

// Genus-g hook function in (z, w).
RatFun hook_genus(const Partition& la, int g);

struct HookSpecials {
    RatFun pure;            // q^{g<la,la>} / a_la(q)
    RatFun epoly;           // (q^{-<la,la>/2} H_la(q))^{2g-2}
    LaurentPoly2 hookpoly;  // H_la(q) = prod (1 - q^{hook})
    LaurentPoly2 a_lambda;  // q^{<la,la>} b_la(1/q)
};
HookSpecials hook_specials(const Partition& la, int g);

// Kostka-Foulkes via the charge statistic (independent of the Macdonald
// route; the two are cross-checked in tests).
LaurentPoly2 kostka_foulkes_charge(const Partition& nu, const Partition& la);

// Table cache location; default comes from CHARQUIV_CACHE_DIR or, failing
// that, a .charquiv-cache directory under the current directory.  Empty
// string disables caching.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

}  // namespace cq
