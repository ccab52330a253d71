#pragma once

#include "qfano/basket.hpp"
#include "qfano/filters.hpp"
#include "qfano/invariants.hpp"
#include "qfano/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfano {

/// A surviving numerical candidate. dims maps t in {1,...,q} to dim|tL|;
/// antican_dim = dims[q].
struct FanoCandidate {
    Basket basket;
    int q = 1;
    Rational l_cubed;
    Rational minus_k_cubed;
    Rational kc2;
    std::map<int, int> dims;
    int antican_dim = 0;

    friend bool operator==(const FanoCandidate&, const FanoCandidate&) = default;
};

enum class SearchMode { strict, paper_slack };

struct SearchConfig {
    Rational min_degree = make_rational(125, 2);
    int q_min = 1;
    /// Upper cap on the index; unset means the per-basket bound 4*lcm(r_P).
    std::optional<int> q_max;
    SearchMode mode = SearchMode::strict;
    int jobs = 1;
    Rational basket_sum_cap = 24;
    /// Permits basket_sum_cap > 24, which enumerates baskets violating
    /// -K.c2 >= 0 (they are filtered later anyway).
    bool allow_cap_above_24 = false;
    /// Low-index pruners (kc2 >= 125/8, sum r_P <= 10 for q <= 3 at
    /// threshold >= 125/2); a speedup that never changes the output set.
    bool low_q_pruners = true;

    /// Throws std::domain_error on an invalid configuration.
    void validate() const;
};

/// All canonical points (r, b) with r - 1/r <= cap, ordered by (r, b).
std::vector<SingularityPoint> point_types(const Rational& cap);

/// Streams every non-empty canonical basket with basket_sum <= cap exactly
/// once, in lexicographic order of the sorted point list. The callback
/// returns false to stop early.
void enumerate_baskets(const Rational& cap, const std::function<bool(const Basket&)>& fn);

/// Restarts the stream inside the subtree of baskets extending the given
/// prefix (the prefix itself included if non-empty), in the same global
/// order. Used for parallel partitioning.
void enumerate_baskets_with_prefix(const Rational& cap, const Basket& prefix,
                                   const std::function<bool(const Basket&)>& fn);

/// All q in [cfg.q_min, min(cfg.q_max, 4*gorenstein_index(B))] coprime to
/// every basket index, ascending.
std::vector<int> candidate_indices(const Basket& B, const SearchConfig& cfg);

/// The q >= 3 search: for every basket with basket_sum <= cap and every
/// admissible index q, applies in order: -K.c2 >= 0, index coprimality,
/// L^3 from the q > 2 formula with L^3 > 0 and q^3 L^3 >= min_degree,
/// stability, vanishing, integrality, and the torsion-freeness
/// certificate. Deterministic: sorted by (q desc, basket lex).
std::vector<FanoCandidate> classify_high(const SearchConfig& cfg);

/// The q in {1,2} search: the degree is a free parameter on the grid
/// N*d in Z (N = lcm r_P), min_degree <= d <= the stability bound
/// (paper_slack additionally admits d <= 139/2 for q = 1, B = (2)); then
/// integrality, torsion, and the chi machinery with L^3 = d/q^3.
std::vector<FanoCandidate> classify_low(const SearchConfig& cfg);

enum class ReproduceTarget { prop4, prop5, cor52, toric, all };

struct ReproduceSection {
    std::string name;
    bool pass = false;
    int expected = 0;
    int matched = 0;
    std::vector<std::string> diffs;
};

struct ReproduceReport {
    bool pass = false;
    std::vector<ReproduceSection> sections;
};

/// Regression harness: runs the search (or the toric scan) and diffs the
/// result against embedded expected tables, field by field.
ReproduceReport reproduce_check(ReproduceTarget target, const SearchConfig& cfg);

/// Total order used for emitted candidates: q descending, then basket
/// lexicographic, then degree ascending.
bool candidate_order(const FanoCandidate& a, const FanoCandidate& b);

}  // namespace qfano
