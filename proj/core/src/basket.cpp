#include "qfano/basket.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qfano {

namespace {

long long parse_entry_int(std::string_view text, std::string_view entry) {
    if (text.empty()) throw ParseError("bad basket entry '" + std::string(entry) + "'");
    long long value = 0;
    for (const char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad basket entry '" + std::string(entry) + "'");
        if (value > 100000000)
            throw ParseError("basket entry out of range '" + std::string(entry) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

SingularityPoint make_point(long long r, long long b) {
    const std::string entry = std::to_string(r) + ":" + std::to_string(b);
    if (r < 2) throw ParseError("bad basket entry '" + entry + "': index r must be >= 2");
    b = (b % r + r) % r;
    if (b == 0) throw ParseError("bad basket entry '" + entry + "': b = 0 mod r");
    if (std::gcd(r, b) != 1) throw ParseError("bad basket entry '" + entry + "': gcd(r,b) != 1");
    if (2 * b > r) b = r - b;
    return SingularityPoint{static_cast<int>(r), static_cast<int>(b)};
}

Basket::Basket(std::vector<SingularityPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

Basket Basket::parse(std::string_view text) {
    std::vector<SingularityPoint> pts;
    if (text.empty()) return Basket{};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view entry =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        const std::size_t colon = entry.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("bad basket entry '" + std::string(entry) + "': expected r:b");
        const long long r = parse_entry_int(entry.substr(0, colon), entry);
        const long long b = parse_entry_int(entry.substr(colon + 1), entry);
        pts.push_back(make_point(r, b));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Basket(std::move(pts));
}

std::string Basket::str() const {
    std::string out;
    for (const auto& p : points_) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.r);
        out += ':';
        out += std::to_string(p.b);
    }
    return out;
}

Rational Basket::sum() const {
    Rational total = 0;
    for (const auto& p : points_) total += Rational(Int(p.r) * p.r - 1, Int(p.r));
    return total;
}

long long Basket::gorenstein_index() const {
    long long l = 1;
    for (const auto& p : points_) l = std::lcm(l, static_cast<long long>(p.r));
    return l;
}

long long Basket::index_sum() const {
    long long s = 0;
    for (const auto& p : points_) s += p.r;
    return s;
}

long long residue(long long b, long long j, long long r) {
    const long long m = (b % r) * (j % r) % r;
    return m < 0 ? m + r : m;
}

namespace {

// Inverse of a modulo r, gcd(a, r) = 1, r >= 2.
long long mod_inverse(long long a, long long r) {
    long long t0 = 0, t1 = 1, r0 = r, r1 = a % r;
    while (r1 != 0) {
        const long long q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    return ((t0 % r) + r) % r;
}

}  // namespace

int local_index(int q, long long t, const SingularityPoint& P) {
    const long long r = P.r;
    if (std::gcd(static_cast<long long>(q), r) != 1)
        throw NoSolutionError("local index: gcd(q=" + std::to_string(q) +
                              ", r=" + std::to_string(P.r) + ") != 1");
    // Solve q*i = -t (mod r).
    const long long rhs = ((-t) % r + r) % r;
    return static_cast<int>(rhs * mod_inverse(q, r) % r);
}

Rational correction_term(const SingularityPoint& P, int i) {
    if (i < 0 || i >= P.r) throw std::domain_error("correction_term: index out of [0, r)");
    const long long r = P.r;
    long long s = 0;
    for (long long j = 1; j < i; ++j) {
        const long long m = residue(P.b, j, r);
        s += m * (r - m);
    }
    return Rational(Int(-i) * (r * r - 1), Int(12) * r) + Rational(Int(s), Int(2) * r);
}

CorrectionCache::CorrectionCache(int max_r) : tables_(static_cast<std::size_t>(max_r) + 1) {
    for (int r = 2; r <= max_r; ++r) {
        tables_[r].resize(static_cast<std::size_t>(r) / 2 + 1);
        for (int b = 1; 2 * b <= r; ++b) {
            if (std::gcd(r, b) != 1) continue;
            auto& tab = tables_[r][b];
            tab.reserve(static_cast<std::size_t>(r));
            long long s = 0;
            for (int i = 0; i < r; ++i) {
                tab.push_back(Rational(Int(-i) * (static_cast<long long>(r) * r - 1), Int(12) * r) +
                              Rational(Int(s), Int(2) * r));
                const long long m = residue(b, i, r);
                s += m * (r - m);
            }
        }
    }
}

Rational basket_sum(const Basket& B) { return B.sum(); }

long long gorenstein_index(const Basket& B) { return B.gorenstein_index(); }

}  // namespace qfano
