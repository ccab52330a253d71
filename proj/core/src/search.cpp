#include "qfano/search.hpp"

#include "qfano/wps.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace qfano {

void SearchConfig::validate() const {
    if (min_degree <= 0) throw std::domain_error("search config: min_degree must be positive");
    if (q_min < 1) throw std::domain_error("search config: q_min must be >= 1");
    if (q_max && *q_max < q_min) throw std::domain_error("search config: q_max < q_min");
    if (jobs < 1) throw std::domain_error("search config: jobs must be >= 1");
    if (basket_sum_cap <= 0) throw std::domain_error("search config: basket_sum_cap must be positive");
    if (basket_sum_cap > 24 && !allow_cap_above_24)
        throw std::domain_error(
            "search config: basket_sum_cap > 24 enumerates baskets with -K.c2 < 0; "
            "set allow_cap_above_24 to force");
}

std::vector<SingularityPoint> point_types(const Rational& cap) {
    std::vector<SingularityPoint> out;
    for (int r = 2; Rational(Int(r) * r - 1, Int(r)) <= cap; ++r)
        for (int b = 1; 2 * b <= r; ++b)
            if (std::gcd(r, b) == 1) out.push_back({r, b});
    return out;
}

namespace {

Rational point_weight(const SingularityPoint& p) {
    return Rational(Int(p.r) * p.r - 1, Int(p.r));
}

// Pre-order DFS over nondecreasing point sequences = lexicographic order
// of the sorted point lists. Point weights are nondecreasing along the
// type list, so the scan can stop at the first too-heavy type.
bool enumerate_rec(std::vector<SingularityPoint>& stack, std::size_t start,
                   const Rational& remaining, const std::vector<SingularityPoint>& types,
                   const std::vector<Rational>& weights,
                   const std::function<bool(const Basket&)>& fn) {
    for (std::size_t k = start; k < types.size(); ++k) {
        if (weights[k] > remaining) break;
        stack.push_back(types[k]);
        if (!fn(Basket(stack))) return false;
        if (!enumerate_rec(stack, k, remaining - weights[k], types, weights, fn)) return false;
        stack.pop_back();
    }
    return true;
}

}  // namespace

void enumerate_baskets(const Rational& cap, const std::function<bool(const Basket&)>& fn) {
    enumerate_baskets_with_prefix(cap, Basket{}, fn);
}

void enumerate_baskets_with_prefix(const Rational& cap, const Basket& prefix,
                                   const std::function<bool(const Basket&)>& fn) {
    const auto types = point_types(cap);
    std::vector<Rational> weights;
    weights.reserve(types.size());
    for (const auto& t : types) weights.push_back(point_weight(t));

    Rational remaining = cap - prefix.sum();
    if (remaining < 0) return;
    std::size_t start = 0;
    if (!prefix.empty()) {
        const auto last = prefix.points().back();
        start = static_cast<std::size_t>(
            std::lower_bound(types.begin(), types.end(), last) - types.begin());
        if (!fn(prefix)) return;
    }
    std::vector<SingularityPoint> stack = prefix.points();
    enumerate_rec(stack, start, remaining, types, weights, fn);
}

namespace {

std::vector<int> indices_between(const Basket& B, int q_min, std::optional<int> q_max) {
    const long long N = B.gorenstein_index();
    long long hi = 4 * N;
    if (q_max && *q_max < hi) hi = *q_max;
    std::vector<int> out;
    for (long long q = std::max(1, q_min); q <= hi; ++q)
        if (std::gcd(q, N) == 1) out.push_back(static_cast<int>(q));
    return out;
}

}  // namespace

std::vector<int> candidate_indices(const Basket& B, const SearchConfig& cfg) {
    if (B.empty()) throw std::domain_error("candidate_indices: basket must be non-empty");
    return indices_between(B, cfg.q_min, cfg.q_max);
}

namespace {

Rational correction_sum_cached(const Basket& B, int q, long long t, const CorrectionCache& cache) {
    Rational total = 0;
    for (const auto& p : B.points()) total += cache.value(p, local_index(q, t, p));
    return total;
}

Rational chi_cached(const Basket& B, int q, const Rational& l3, const Rational& l_c2,
                    long long t, const CorrectionCache& cache) {
    const long long poly = t * (q + t) * (q + 2 * t);
    return 1 + Rational(Int(poly), 12) * l3 + Rational(Int(t)) * l_c2 / 12 +
           correction_sum_cached(B, q, t, cache);
}

bool vanishing_cached(const Basket& B, int q, const Rational& l3, const Rational& l_c2,
                      const CorrectionCache& cache) {
    for (long long t = -1; t > -q; --t)
        if (chi_cached(B, q, l3, l_c2, t, cache) != 0) return false;
    for (long long t = 1; t <= q; ++t)
        if (!is_integer(chi_cached(B, q, l3, l_c2, t, cache))) return false;
    return true;
}

// chi(tL) for t in 1..q must be integers >= 1; otherwise the candidate is
// inconsistent and discarded.
bool build_dims(const Basket& B, int q, const Rational& l3, const Rational& l_c2,
                const CorrectionCache& cache, std::map<int, int>& dims) {
    for (int t = 1; t <= q; ++t) {
        const Rational chi = chi_cached(B, q, l3, l_c2, t, cache);
        if (!is_integer(chi) || chi < 1) return false;
        dims[t] = static_cast<int>(num(chi)) - 1;
    }
    return true;
}

bool low_q_prune(const SearchConfig& cfg, int q, const Rational& kc2, const Basket& B) {
    if (!cfg.low_q_pruners || q > 3) return false;
    if (cfg.min_degree < make_rational(125, 2)) return false;
    return kc2 < make_rational(125, 8) || B.index_sum() > 10;
}

void process_basket_high(const Basket& B, const SearchConfig& cfg, const CorrectionCache& cache,
                         std::vector<FanoCandidate>& out) {
    const Rational kc2 = minus_k_dot_c2(B);
    if (kc2 < 0) return;
    for (const int q : indices_between(B, std::max(3, cfg.q_min), cfg.q_max)) {
        if (low_q_prune(cfg, q, kc2, B)) continue;
        const Rational l_c2 = kc2 / q;
        const Rational l3 = Rational(12, Int(q - 1) * (q - 2)) *
                            (1 - l_c2 / 12 + correction_sum_cached(B, q, -1, cache));
        if (l3 <= 0) continue;
        const Rational mk3 = Rational(Int(q) * q * q) * l3;
        if (mk3 < cfg.min_degree) continue;
        if (!stability_pass(q, mk3, kc2)) continue;
        if (!vanishing_cached(B, q, l3, l_c2, cache)) continue;
        if (!integrality_pass(B, q, mk3)) continue;
        if (torsion_feasible(B)) continue;
        FanoCandidate c{B, q, l3, mk3, kc2, {}, 0};
        if (!build_dims(B, q, l3, l_c2, cache, c.dims)) continue;
        c.antican_dim = c.dims.at(q);
        out.push_back(std::move(c));
    }
}

void process_basket_low(const Basket& B, const SearchConfig& cfg, const CorrectionCache& cache,
                        std::vector<FanoCandidate>& out) {
    const Rational kc2 = minus_k_dot_c2(B);
    if (kc2 < 0) return;
    const long long N = B.gorenstein_index();
    const int q_hi = std::min(2, cfg.q_max ? *cfg.q_max : 2);
    for (int q = std::max(1, cfg.q_min); q <= q_hi; ++q) {
        if (std::gcd(static_cast<long long>(q), N) != 1) continue;
        if (low_q_prune(cfg, q, kc2, B)) continue;
        Rational bound = stability_bound(q, kc2);
        const bool slack_window =
            cfg.mode == SearchMode::paper_slack && q == 1 && B == Basket({{2, 1}});
        if (slack_window) bound = std::max(bound, Rational(74) - make_rational(9, 2));
        if (bound < cfg.min_degree) continue;
        if (torsion_feasible(B)) continue;
        const Rational l_c2 = kc2 / q;
        const Int k0 = rational_ceil(cfg.min_degree * N);
        const Int k1 = rational_floor(bound * N);
        for (Int k = k0; k <= k1; ++k) {
            const Rational d = Rational(k, N);
            if (!integrality_pass(B, q, d)) continue;
            const Rational l3 = d / (Int(q) * q * q);
            if (!vanishing_cached(B, q, l3, l_c2, cache)) continue;
            FanoCandidate c{B, q, l3, d, kc2, {}, 0};
            if (!build_dims(B, q, l3, l_c2, cache, c.dims)) continue;
            c.antican_dim = c.dims.at(q);
            out.push_back(std::move(c));
        }
    }
}

int max_point_index(const Rational& cap) {
    int r = 2;
    while (Rational(Int(r + 1) * (r + 1) - 1, Int(r + 1)) <= cap) ++r;
    return r;
}

template <typename ProcessFn>
std::vector<FanoCandidate> run_classification(const SearchConfig& cfg, ProcessFn&& process) {
    cfg.validate();
    std::vector<Basket> baskets;
    enumerate_baskets(cfg.basket_sum_cap, [&](const Basket& b) {
        baskets.push_back(b);
        return true;
    });
    const CorrectionCache cache(max_point_index(cfg.basket_sum_cap));

    const int jobs = std::min<std::size_t>(std::max(1, cfg.jobs), std::max<std::size_t>(baskets.size(), 1));
    std::vector<std::vector<FanoCandidate>> partial(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
        for (std::size_t i; (i = next.fetch_add(1)) < baskets.size();)
            process(baskets[i], cfg, cache, partial[static_cast<std::size_t>(w)]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs) - 1);
        for (int w = 1; w < jobs; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& th : pool) th.join();
    }

    std::vector<FanoCandidate> all;
    for (auto& part : partial)
        for (auto& c : part) all.push_back(std::move(c));
    std::sort(all.begin(), all.end(), candidate_order);
    return all;
}

}  // namespace

bool candidate_order(const FanoCandidate& a, const FanoCandidate& b) {
    if (a.q != b.q) return a.q > b.q;
    if (a.basket != b.basket) return a.basket < b.basket;
    return a.minus_k_cubed < b.minus_k_cubed;
}

std::vector<FanoCandidate> classify_high(const SearchConfig& cfg) {
    return run_classification(cfg, [](const Basket& B, const SearchConfig& c,
                                      const CorrectionCache& cache,
                                      std::vector<FanoCandidate>& out) {
        process_basket_high(B, c, cache, out);
    });
}

std::vector<FanoCandidate> classify_low(const SearchConfig& cfg) {
    if (cfg.q_min > 2) return {};
    return run_classification(cfg, [](const Basket& B, const SearchConfig& c,
                                      const CorrectionCache& cache,
                                      std::vector<FanoCandidate>& out) {
        process_basket_low(B, c, cache, out);
    });
}

// ---------------------------------------------------------------------------
// Reproduce harness
// ---------------------------------------------------------------------------

namespace {

struct ExpectedRow {
    int q;
    const char* indices;  // r-multiset as printed, "2,10"
    const char* degree;   // -K^3
    const char* l3;       // printed L^3, or nullptr
    std::vector<std::pair<int, int>> dims;  // (t, dim|tL|)
};

// Proposition: the q >= 4 table at threshold 125/2.
const std::vector<ExpectedRow>& prop5_rows() {
    static const std::vector<ExpectedRow> rows{
        {4, "5", "384/5", nullptr, {{1, 3}, {2, 10}, {4, 40}}},
        {4, "5,5", "64", nullptr, {{1, 2}, {2, 8}, {4, 33}}},
        {5, "2", "125/2", nullptr, {{1, 2}, {2, 6}, {5, 33}}},
        {5, "2,6", "250/3", nullptr, {{1, 2}, {2, 7}, {5, 43}}},
        {5, "7", "500/7", nullptr, {{1, 2}, {2, 6}, {5, 37}}},
        {5, "2,2,3,6", "125/2", nullptr, {{1, 1}, {2, 5}, {5, 32}}},
        {6, "5,7", "2592/35", nullptr, {{1, 1}, {2, 4}, {6, 38}}},
        {7, "3,9", "686/9", nullptr, {{1, 1}, {2, 3}, {7, 39}}},
        {7, "2,10", "343/5", nullptr, {{1, 1}, {2, 3}, {3, 6}, {7, 35}}},
    };
    return rows;
}

// Proposition: the q <= 2 table at threshold 125/2 (strict mode). The
// paper's printed q=1, B=(2) interval additionally admits degree 137/2,
// reproduced only in paper-slack mode.
std::vector<ExpectedRow> prop4_rows(SearchMode mode) {
    std::vector<ExpectedRow> rows{
        {1, "2", "125/2", nullptr, {{1, 33}}},
        {1, "2", "129/2", nullptr, {{1, 34}}},
        {1, "2", "133/2", nullptr, {{1, 35}}},
        {1, "2,2", "63", nullptr, {{1, 33}}},
        {1, "3", "188/3", nullptr, {{1, 33}}},
        {2, "3", "200/3", "25/3", {{1, 9}, {2, 35}}},
    };
    if (mode == SearchMode::paper_slack)
        rows.insert(rows.begin() + 3, ExpectedRow{1, "2", "137/2", nullptr, {{1, 36}}});
    return rows;
}

std::string indices_string(const Basket& B) {
    std::string out;
    for (const auto& p : B.points()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.r);
    }
    return out;
}

std::string row_label(const FanoCandidate& c) {
    return "q=" + std::to_string(c.q) + " B=(" + indices_string(c.basket) +
           ") -K^3=" + to_string(c.minus_k_cubed);
}

void diff_rows(const std::vector<FanoCandidate>& got, const std::vector<ExpectedRow>& expected,
               ReproduceSection& sec) {
    sec.expected = static_cast<int>(expected.size());
    std::vector<bool> used(got.size(), false);
    for (const auto& row : expected) {
        const Rational degree = parse_rational(row.degree);
        const FanoCandidate* match = nullptr;
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (used[i]) continue;
            if (got[i].q == row.q && indices_string(got[i].basket) == row.indices &&
                got[i].minus_k_cubed == degree) {
                used[i] = true;
                match = &got[i];
                break;
            }
        }
        const std::string label =
            "q=" + std::to_string(row.q) + " B=(" + row.indices + ") -K^3=" + row.degree;
        if (!match) {
            sec.diffs.push_back("missing row: " + label);
            continue;
        }
        bool field_ok = true;
        if (row.l3 && match->l_cubed != parse_rational(row.l3)) {
            sec.diffs.push_back(label + ": L^3 = " + to_string(match->l_cubed) + ", expected " + row.l3);
            field_ok = false;
        }
        for (const auto& [t, dim] : row.dims) {
            const auto it = match->dims.find(t);
            if (it == match->dims.end() || it->second != dim) {
                sec.diffs.push_back(label + ": dim|" + std::to_string(t) + "L| = " +
                                    (it == match->dims.end() ? std::string("absent")
                                                             : std::to_string(it->second)) +
                                    ", expected " + std::to_string(dim));
                field_ok = false;
            }
        }
        if (field_ok) ++sec.matched;
    }
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!used[i]) sec.diffs.push_back("unexpected row: " + row_label(got[i]));
    sec.pass = sec.diffs.empty();
}

SearchConfig base_config(const SearchConfig& cfg) {
    SearchConfig c;
    c.jobs = cfg.jobs;
    c.low_q_pruners = cfg.low_q_pruners;
    c.mode = cfg.mode;
    return c;
}

ReproduceSection check_prop5(const SearchConfig& cfg) {
    ReproduceSection sec;
    sec.name = "prop5";
    SearchConfig c = base_config(cfg);
    c.min_degree = make_rational(125, 2);
    c.q_min = 4;
    diff_rows(classify_high(c), prop5_rows(), sec);
    return sec;
}

ReproduceSection check_prop4(const SearchConfig& cfg) {
    ReproduceSection sec;
    sec.name = "prop4";
    SearchConfig c = base_config(cfg);
    c.min_degree = make_rational(125, 2);
    c.q_min = 1;
    c.q_max = 2;
    diff_rows(classify_low(c), prop4_rows(c.mode), sec);
    return sec;
}

ReproduceSection check_cor52(const SearchConfig& cfg) {
    ReproduceSection sec;
    sec.name = "cor52";
    SearchConfig c = base_config(cfg);
    c.q_min = 4;
    c.min_degree = make_rational(250, 3);
    diff_rows(classify_high(c), {{5, "2,6", "250/3", nullptr, {}}}, sec);
    c.min_degree = 84;
    const auto above = classify_high(c);
    ++sec.expected;
    if (above.empty()) {
        ++sec.matched;
    } else {
        for (const auto& row : above)
            sec.diffs.push_back("row above degree 84: " + row_label(row));
    }
    sec.pass = sec.diffs.empty();
    return sec;
}

ReproduceSection check_toric(const SearchConfig&) {
    ReproduceSection sec;
    sec.name = "toric";
    const std::vector<WeightVector> expected{
        {{1, 1, 1, 1}}, {{1, 1, 1, 2}}, {{1, 1, 2, 3}}, {{1, 2, 3, 5}},
        {{1, 3, 4, 5}}, {{2, 3, 5, 7}}, {{3, 4, 5, 7}},
    };
    sec.expected = static_cast<int>(expected.size()) + 2;
    const auto got = scan_wps(30);
    for (const auto& w : expected) {
        const auto it = std::find_if(got.begin(), got.end(),
                                     [&](const auto& e) { return e.first == w; });
        if (it == got.end())
            sec.diffs.push_back("missing space P(" + w.str() + ")");
        else
            ++sec.matched;
    }
    for (const auto& [w, inv] : got)
        if (std::find(expected.begin(), expected.end(), w) == expected.end())
            sec.diffs.push_back("unexpected space P(" + w.str() + ")");

    // The extremal example and the lemma's bounds.
    const auto p1112 = std::find_if(got.begin(), got.end(), [](const auto& e) {
        return e.first == WeightVector{{1, 1, 1, 2}};
    });
    if (p1112 != got.end() && p1112->second.minus_k_cubed == make_rational(125, 2) &&
        p1112->second.antican_dim == 33)
        ++sec.matched;
    else
        sec.diffs.push_back("P(1,1,1,2) invariants differ from (-K^3, dim|-K|) = (125/2, 33)");

    Rational max_deg = 0;
    long long max_dim = 0;
    for (const auto& [w, inv] : got) {
        if (w == WeightVector{{1, 1, 1, 1}}) continue;
        max_deg = std::max(max_deg, inv.minus_k_cubed);
        max_dim = std::max(max_dim, inv.antican_dim);
    }
    if (max_deg == make_rational(125, 2) && max_dim == 33)
        ++sec.matched;
    else
        sec.diffs.push_back("extremal bounds differ: max -K^3 = " + to_string(max_deg) +
                            ", max dim|-K| = " + std::to_string(max_dim));
    sec.pass = sec.diffs.empty();
    return sec;
}

}  // namespace

ReproduceReport reproduce_check(ReproduceTarget target, const SearchConfig& cfg) {
    ReproduceReport report;
    const bool all = target == ReproduceTarget::all;
    if (all || target == ReproduceTarget::prop4) report.sections.push_back(check_prop4(cfg));
    if (all || target == ReproduceTarget::prop5) report.sections.push_back(check_prop5(cfg));
    if (all || target == ReproduceTarget::cor52) report.sections.push_back(check_cor52(cfg));
    if (all || target == ReproduceTarget::toric) report.sections.push_back(check_toric(cfg));
    report.pass = std::all_of(report.sections.begin(), report.sections.end(),
                              [](const ReproduceSection& s) { return s.pass; });
    return report;
}

}  // namespace qfano
