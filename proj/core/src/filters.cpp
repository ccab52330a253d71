#include "qfano/filters.hpp"

#include <algorithm>
#include <set>

namespace qfano {

Rational StabilityCase::coefficient(int q) const {
    const Int q2 = Int(q) * q;
    switch (tag) {
        case StabilityTag::semistable: return Rational(3);
        case StabilityTag::rank2: return Rational(4 * q2, Int(4) * q - 3);
        case StabilityTag::rank1_semi: return Rational(4 * q2, Int(q - 1) * (q + 3));
        case StabilityTag::rank1_unstable: return Rational(q2, Int(2) * q - 3);
    }
    throw std::logic_error("unreachable");
}

const std::array<StabilityCase, 4>& stability_cases() {
    static const std::array<StabilityCase, 4> cases{{
        {StabilityTag::semistable, 1},
        {StabilityTag::rank2, 2},
        {StabilityTag::rank1_semi, 4},
        {StabilityTag::rank1_unstable, 4},
    }};
    return cases;
}

Rational stability_bound(int q, const Rational& kc2) {
    if (q < 1) throw std::domain_error("stability_bound: q must be >= 1");
    Rational best = 0;
    bool first = true;
    for (const auto& c : stability_cases()) {
        if (q < c.min_q) continue;
        Rational bound = c.coefficient(q) * kc2;
        if (first || bound > best) best = std::move(bound);
        first = false;
    }
    return best;
}

bool stability_pass(int q, const Rational& minus_k_cubed, const Rational& kc2) {
    return minus_k_cubed <= stability_bound(q, kc2);
}

bool vanishing_pass(const NumericalFano& F) {
    for (long long t = -1; t > -F.q; --t)
        if (euler_characteristic(F, t) != 0) return false;
    for (long long t = 1; t <= F.q; ++t)
        if (!is_integer(euler_characteristic(F, t))) return false;
    return true;
}

bool integrality_pass(const Basket& B, int /*q*/, const Rational& minus_k_cubed) {
    if (!is_integer(Rational(B.gorenstein_index()) * minus_k_cubed)) return false;
    const Rational d = dim_antican_exact(B, minus_k_cubed);
    return is_integer(d) && d >= 0;
}

bool torsion_feasible(const Basket& B) {
    long long space = 1;
    for (const auto& p : B.points()) {
        space *= p.r;
        if (space > 10'000'000)
            throw ResourceError("torsion check: assignment space exceeds 10^7 for basket " +
                                B.str());
    }

    // Per point, the distinct achievable values of ov(b i)(r - ov(b i))/(2r).
    // ov(b i) runs over all residues mod r, and m, r-m give equal values.
    std::vector<std::vector<Rational>> values;
    values.reserve(B.size());
    for (const auto& p : B.points()) {
        std::set<Rational> vs;
        for (int m = 0; 2 * m <= p.r; ++m)
            vs.emplace(Int(m) * (p.r - m), Int(2) * p.r);
        values.emplace_back(vs.begin(), vs.end());
    }

    // Suffix maxima for pruning.
    std::vector<Rational> max_rest(values.size() + 1, Rational(0));
    for (std::size_t k = values.size(); k-- > 0;)
        max_rest[k] = max_rest[k + 1] + values[k].back();

    const Rational target = 2;
    // A zero total forces all i_P = 0, so reaching the (positive) target
    // already implies a not-all-zero assignment.
    std::function<bool(std::size_t, const Rational&)> dfs =
        [&](std::size_t k, const Rational& acc) -> bool {
        if (acc > target || acc + max_rest[k] < target) return false;
        if (k == values.size()) return acc == target;
        for (const auto& v : values[k])
            if (dfs(k + 1, acc + v)) return true;
        return false;
    };
    return dfs(0, Rational(0));
}

}  // namespace qfano
