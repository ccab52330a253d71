#pragma once

#include "qfano/rational.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfano {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown by local_index when gcd(q, r) != 1 and the congruence has no
/// (unique) solution. Such (q, basket) pairs are pruned upstream.
struct NoSolutionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A basket entry: a virtual cyclic quotient point of type 1/r(b,1,-1),
/// canonical form 1 <= b <= r/2, gcd(r, b) = 1.
struct SingularityPoint {
    int r = 2;
    int b = 1;

    friend auto operator<=>(const SingularityPoint&, const SingularityPoint&) = default;
};

/// Validates (r, b) and normalizes b into [1, r/2] (b and r-b describe the
/// same point; the Riemann-Roch correction is invariant under the flip).
/// Throws ParseError on r < 2, b = 0 mod r, or gcd(r, b) != 1.
SingularityPoint make_point(long long r, long long b);

/// Canonical multiset of singularity points, stored sorted by (r, b).
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<SingularityPoint> points);

    /// Grammar: ENTRY ("," ENTRY)*, ENTRY = r ":" b, decimal integers.
    /// The empty string denotes the empty basket. Entries are normalized
    /// and sorted; errors name the offending entry.
    static Basket parse(std::string_view text);

    const std::vector<SingularityPoint>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

    /// Inverse of parse on canonical baskets: "2:1,10:3".
    std::string str() const;

    /// Sum over points of (r - 1/r).
    Rational sum() const;

    /// lcm of the point indices; 1 for the empty basket.
    long long gorenstein_index() const;

    /// Sum of the point indices r.
    long long index_sum() const;

    friend bool operator==(const Basket&, const Basket&) = default;
    /// Lexicographic order on the sorted point list.
    friend auto operator<=>(const Basket& a, const Basket& b) {
        return a.points_ <=> b.points_;
    }

private:
    std::vector<SingularityPoint> points_;
};

/// The residue operator of the Riemann-Roch correction: (b*j) mod r in [0, r).
long long residue(long long b, long long j, long long r);

/// Local index i in [0, r) of the divisor tL at P, where -K ~ qL: the unique
/// solution of q*i = -t (mod r), i.e. tL ~ iK near P. Depends only on
/// t mod r. Throws NoSolutionError when gcd(q, P.r) != 1.
int local_index(int q, long long t, const SingularityPoint& P);

/// Reid's correction term c_P for a divisor of local index i at P:
///   c_P = -i (r^2 - 1)/(12 r) + sum_{j=1}^{i-1} ov(b j)(r - ov(b j))/(2 r),
/// empty sum for i <= 1, exact. Requires 0 <= i < P.r.
Rational correction_term(const SingularityPoint& P, int i);

/// Precomputed correction-term tables for every canonical point with
/// r <= max_r; read-only after construction and safe to share across
/// threads. Backs the search hot path.
class CorrectionCache {
public:
    explicit CorrectionCache(int max_r);

    const Rational& value(const SingularityPoint& P, int i) const {
        return tables_[P.r][P.b][static_cast<std::size_t>(i)];
    }
    std::span<const Rational> table(const SingularityPoint& P) const {
        return tables_[P.r][P.b];
    }

private:
    std::vector<std::vector<std::vector<Rational>>> tables_;
};

/// basket_sum as a free function, matching the formula sum(r - 1/r).
Rational basket_sum(const Basket& B);

long long gorenstein_index(const Basket& B);

}  // namespace qfano
