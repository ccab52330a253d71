#pragma once

#include "qfano/basket.hpp"
#include "qfano/invariants.hpp"
#include "qfano/rational.hpp"

#include <array>
#include <stdexcept>

namespace qfano {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Kawamata's four (semi)stability cases for the reflexive tangent sheaf.
/// Each yields a degree bound -K^3 <= coefficient(q) * (-K.c2) and is
/// available for indices q >= min_q (q = 1 admits only the semistable
/// case, q in {2,3} additionally rank2).
enum class StabilityTag { semistable, rank2, rank1_semi, rank1_unstable };

struct StabilityCase {
    StabilityTag tag;
    int min_q;

    /// Degree-bound multiplier at index q, from the extremal slopes
    /// t = u = 1/q:
    ///   semistable:      3
    ///   rank2:           4q^2 / (4q - 3)
    ///   rank1_semi:      4q^2 / ((q - 1)(q + 3))
    ///   rank1_unstable:  q^2 / (2q - 3)
    Rational coefficient(int q) const;
};

const std::array<StabilityCase, 4>& stability_cases();

/// Largest degree allowed by any stability case available at index q.
Rational stability_bound(int q, const Rational& kc2);

/// True iff at least one available case satisfies its inequality, i.e.
/// minus_k_cubed <= stability_bound(q, kc2). Requires q >= 1, kc2 >= 0.
bool stability_pass(int q, const Rational& minus_k_cubed, const Rational& kc2);

/// True iff chi(tL) = 0 for all -q < t < 0 and chi(tL) is an integer for
/// all 1 <= t <= q.
bool vanishing_pass(const NumericalFano& F);

/// True iff N*(-K^3) is an integer for N = gorenstein_index(B) and
/// dim_antican_exact(B, -K^3) is a non-negative integer.
bool integrality_pass(const Basket& B, int q, const Rational& minus_k_cubed);

/// Torsion obstruction: true iff some assignment (i_P), 0 <= i_P < r_P,
/// not all zero, satisfies
///   sum_P ov(b_P i_P)(r_P - ov(b_P i_P)) / (2 r_P) = 2.
/// False certifies that Cl X is torsion-free for this basket. Throws
/// ResourceError when the assignment space prod r_P exceeds 10^7.
bool torsion_feasible(const Basket& B);

}  // namespace qfano
