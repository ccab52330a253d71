#pragma once

#include "qfano/basket.hpp"
#include "qfano/rational.hpp"

#include <stdexcept>
#include <utility>

namespace qfano {

struct InconsistencyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Numerical data of a Fano candidate: -K ~ qL with L the ample generator
/// of Cl/Tors, L^3 > 0, and the derived intersection numbers. For q >= 3
/// l_cubed is determined by the basket (see l_cubed below); for q in {1,2}
/// it is an input parameter.
struct NumericalFano {
    Basket basket;
    int q = 1;
    Rational l_cubed;
    Rational minus_k_cubed;  // q^3 * l_cubed
    Rational kc2;            // -K.c2 = 24 - basket_sum
    Rational l_c2;           // kc2 / q

    /// Validates gcd(q, r) = 1 for all basket indices, q >= 1, l_cubed > 0,
    /// kc2 >= 0, and fills in the derived fields.
    static NumericalFano make(Basket basket, int q, Rational l_cubed);
};

/// -K.c2 = 24 - sum(r - 1/r). May be negative; callers filter by
/// Kawamata's theorem -K.c2 >= 0.
Rational minus_k_dot_c2(const Basket& B);

/// L^3 for q >= 3 from chi(-L) = 0:
///   L^3 = 12/((q-1)(q-2)) (1 - L.c2/12 + sum_P c_P(-L)).
/// Throws std::domain_error for q <= 2 (no formula applies) and
/// NoSolutionError when some gcd(q, r) != 1.
Rational l_cubed(const Basket& B, int q);

/// chi(tL) = 1 + t(q+t)(q+2t)/12 L^3 + t L.c2/12 + sum_P c_P(tL), exact.
/// Returned as a Rational: non-integrality is itself a filter.
Rational euler_characteristic(const NumericalFano& F, long long t);

/// dim|tL| = chi(tL) - 1 for t >= 1 (Kawamata-Viehweg vanishing). Throws
/// InconsistencyError unless chi is an integer >= 1; such candidates must
/// be discarded upstream.
int dim_linear_system(const NumericalFano& F, int t);

/// dim|-K| = -K^3/2 + 2 - sum b(r-b)/(2r), exact rational; integrality is
/// checked by the caller.
Rational dim_antican_exact(const Basket& B, const Rational& minus_k_cubed);

/// (lower, upper) bounds for dim|-K|:
///   lower = -K^3/2 - 2,  upper = -K^3/2 + 2 - (1/2) sum (1 - 1/r).
std::pair<Rational, Rational> antican_bounds(const Basket& B, const Rational& minus_k_cubed);

}  // namespace qfano
