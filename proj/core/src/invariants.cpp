#include "qfano/invariants.hpp"

#include <numeric>

namespace qfano {

NumericalFano NumericalFano::make(Basket basket, int q, Rational l3) {
    if (q < 1) throw std::domain_error("NumericalFano: q must be >= 1");
    for (const auto& p : basket.points())
        if (std::gcd(p.r, q) != 1)
            throw NoSolutionError("NumericalFano: gcd(q=" + std::to_string(q) +
                                  ", r=" + std::to_string(p.r) + ") != 1");
    if (l3 <= 0) throw std::domain_error("NumericalFano: L^3 must be positive");
    NumericalFano F;
    F.kc2 = minus_k_dot_c2(basket);
    if (F.kc2 < 0) throw std::domain_error("NumericalFano: -K.c2 < 0 (basket too heavy)");
    F.basket = std::move(basket);
    F.q = q;
    F.l_cubed = std::move(l3);
    F.minus_k_cubed = Rational(Int(q) * q * q) * F.l_cubed;
    F.l_c2 = F.kc2 / q;
    return F;
}

Rational minus_k_dot_c2(const Basket& B) { return Rational(24) - B.sum(); }

namespace {

Rational correction_sum(const Basket& B, int q, long long t) {
    Rational total = 0;
    for (const auto& p : B.points()) total += correction_term(p, local_index(q, t, p));
    return total;
}

}  // namespace

Rational l_cubed(const Basket& B, int q) {
    if (q <= 2) throw std::domain_error("l_cubed: formula requires q > 2");
    const Rational l_c2 = minus_k_dot_c2(B) / q;
    return Rational(12, Int(q - 1) * (q - 2)) * (1 - l_c2 / 12 + correction_sum(B, q, -1));
}

Rational euler_characteristic(const NumericalFano& F, long long t) {
    const Int q(F.q);
    const Rational poly = Rational(Int(t) * (q + t) * (q + 2 * t), 12);
    return 1 + poly * F.l_cubed + Rational(t) * F.l_c2 / 12 + correction_sum(F.basket, F.q, t);
}

int dim_linear_system(const NumericalFano& F, int t) {
    if (t < 1) throw InconsistencyError("dim_linear_system: t must be >= 1");
    const Rational chi = euler_characteristic(F, t);
    if (!is_integer(chi) || chi < 1)
        throw InconsistencyError("dim_linear_system: chi(" + std::to_string(t) +
                                 "L) = " + to_string(chi) + " is not an integer >= 1");
    return static_cast<int>(num(chi)) - 1;
}

Rational dim_antican_exact(const Basket& B, const Rational& minus_k_cubed) {
    Rational s = 0;
    for (const auto& p : B.points()) s += Rational(Int(p.b) * (p.r - p.b), Int(2) * p.r);
    return minus_k_cubed / 2 + 2 - s;
}

std::pair<Rational, Rational> antican_bounds(const Basket& B, const Rational& minus_k_cubed) {
    Rational s = 0;
    for (const auto& p : B.points()) s += 1 - Rational(1, p.r);
    return {minus_k_cubed / 2 - 2, minus_k_cubed / 2 + 2 - s / 2};
}

}  // namespace qfano
