#include "qfano/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qfano {

std::string WeightVector::str() const {
    std::string out;
    for (const int w : a) {
        if (!out.empty()) out += ',';
        out += std::to_string(w);
    }
    return out;
}

bool is_well_formed(const WeightVector& w) {
    for (int skip = 0; skip < 4; ++skip) {
        int g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, w.a[i]);
        if (g != 1) return false;
    }
    return true;
}

bool is_terminal_wps(const WeightVector& w) {
    if (!is_well_formed(w)) throw std::invalid_argument("P(" + w.str() + ") is not well-formed");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::gcd(w.a[i], w.a[j]) != 1) return false;
    // Reid-Tai at every vertex: all ages of 1/a_i(a_j, a_k, a_l) exceed 1.
    for (int v = 0; v < 4; ++v) {
        const int r = w.a[v];
        if (r <= 1) continue;
        for (int k = 1; k < r; ++k) {
            long long age_num = 0;
            for (int i = 0; i < 4; ++i)
                if (i != v) age_num += static_cast<long long>(k) * w.a[i] % r;
            if (age_num <= r) return false;
        }
    }
    return true;
}

long long count_monomials(const WeightVector& w, long long d) {
    if (d < 0) return 0;
    std::vector<long long> count(static_cast<std::size_t>(d) + 1, 0);
    count[0] = 1;
    for (const int a : w.a)
        for (long long s = a; s <= d; ++s) count[s] += count[s - a];
    return count[static_cast<std::size_t>(d)];
}

WpsInvariants wps_invariants(const WeightVector& w) {
    if (!is_well_formed(w)) throw std::invalid_argument("P(" + w.str() + ") is not well-formed");
    const long long s = w.a[0] + w.a[1] + w.a[2] + w.a[3];
    const long long p = static_cast<long long>(w.a[0]) * w.a[1] * w.a[2] * w.a[3];
    return {Rational(Int(s) * s * s, Int(p)), s, count_monomials(w, s) - 1};
}

std::vector<std::pair<WeightVector, WpsInvariants>> scan_wps(int max_weight) {
    if (max_weight < 1) throw std::invalid_argument("scan_wps: max_weight must be >= 1");
    std::vector<std::pair<WeightVector, WpsInvariants>> out;
    for (int a0 = 1; a0 <= max_weight; ++a0)
        for (int a1 = a0; a1 <= max_weight; ++a1)
            for (int a2 = a1; a2 <= max_weight; ++a2)
                for (int a3 = a2; a3 <= max_weight; ++a3) {
                    const WeightVector w{{a0, a1, a2, a3}};
                    if (!is_well_formed(w)) continue;
                    if (!is_terminal_wps(w)) continue;
                    out.emplace_back(w, wps_invariants(w));
                }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace qfano
