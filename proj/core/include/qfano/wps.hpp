#pragma once

#include "qfano/rational.hpp"

#include <array>
#include <compare>
#include <vector>

namespace qfano {

/// Weights of a weighted projective 3-space P(a0,a1,a2,a3), a0 <= ... <= a3.
struct WeightVector {
    std::array<int, 4> a{1, 1, 1, 1};

    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
    std::string str() const;
};

/// Well-formed: every three of the four weights are coprime.
bool is_well_formed(const WeightVector& w);

/// Terminal: all pairs of weights coprime (isolated singularities) and every
/// vertex quotient 1/a_i(a_j, a_k, a_l) passes the Reid-Tai age test:
/// sum_m (k a_m mod a_i) > a_i for every k in [1, a_i). Throws
/// std::invalid_argument when w is not well-formed.
bool is_terminal_wps(const WeightVector& w);

struct WpsInvariants {
    Rational minus_k_cubed;  // (sum a)^3 / prod a
    long long index = 0;     // sum a
    long long antican_dim = 0;

    friend bool operator==(const WpsInvariants&, const WpsInvariants&) = default;
};

/// Number of monomials of weighted degree d, by exact counting.
long long count_monomials(const WeightVector& w, long long d);

/// -K^3, the adjunction index sum(a), and dim|-K| = (monomials of degree
/// sum(a)) - 1.
WpsInvariants wps_invariants(const WeightVector& w);

/// All terminal well-formed weight vectors with a3 <= max_weight, sorted
/// lexicographically, with their invariants.
std::vector<std::pair<WeightVector, WpsInvariants>> scan_wps(int max_weight);

}  // namespace qfano
