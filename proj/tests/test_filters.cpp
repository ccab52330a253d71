#include "qfano/filters.hpp"
#include "qfano/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qfano;

TEST_CASE("stability coefficients at the extremal slopes") {
    const auto& cases = stability_cases();
    CHECK(cases[0].coefficient(1) == 3);
    CHECK(cases[0].coefficient(9) == 3);
    CHECK(cases[1].coefficient(2) == make_rational(16, 5));
    CHECK(cases[1].coefficient(3) == 4);  // 36/9
    CHECK(cases[2].coefficient(5) == make_rational(25, 8));
    CHECK(cases[3].coefficient(4) == make_rational(16, 5));
    CHECK(cases[0].min_q == 1);
    CHECK(cases[1].min_q == 2);
    CHECK(cases[2].min_q == 4);
    CHECK(cases[3].min_q == 4);
}

TEST_CASE("stability_pass on the worked cases") {
    CHECK(stability_pass(5, make_rational(125, 2), make_rational(45, 2)));
    CHECK_FALSE(stability_pass(1, Rational(70), make_rational(45, 2)));
    CHECK(stability_pass(2, Rational(64), make_rational(64, 3)));
}

TEST_CASE("stability_pass is monotone in the degree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> qs(1, 12), nums(1, 400), dens(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const int q = qs(rng);
        const Rational kc2 = make_rational(nums(rng), dens(rng));
        const Rational d = make_rational(nums(rng), dens(rng));
        const Rational smaller = d * make_rational(nums(rng), nums(rng) + 400);
        if (stability_pass(q, d, kc2)) CHECK(stability_pass(q, smaller, kc2));
    }
}

TEST_CASE("for q = 1 stability collapses to d <= 3 kc2") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> nums(1, 300), dens(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational kc2 = make_rational(nums(rng), dens(rng));
        const Rational d = make_rational(nums(rng), dens(rng));
        CHECK(stability_pass(1, d, kc2) == (d <= 3 * kc2));
    }
}

TEST_CASE("vanishing_pass") {
    CHECK(vanishing_pass(NumericalFano::make(Basket::parse("2:1"), 5, make_rational(1, 2))));
    // chi(-2L) = -1/5 here.
    CHECK_FALSE(vanishing_pass(NumericalFano::make(Basket::parse("3:1"), 5, make_rational(8, 15))));
}

TEST_CASE("vanishing_pass does not depend on input point order") {
    const std::vector<SingularityPoint> pts{{6, 1}, {2, 1}, {3, 1}, {2, 1}};
    auto shuffled = pts;
    std::ranges::rotate(shuffled, shuffled.begin() + 2);
    const auto a = NumericalFano::make(Basket(pts), 5, make_rational(1, 2));
    const auto b = NumericalFano::make(Basket(shuffled), 5, make_rational(1, 2));
    CHECK(a.basket == b.basket);
    CHECK(vanishing_pass(a) == vanishing_pass(b));
}

TEST_CASE("integrality_pass") {
    CHECK_FALSE(integrality_pass(Basket::parse("2:1"), 1, Rational(63)));
    CHECK(integrality_pass(Basket::parse("2:1,2:1"), 1, Rational(63)));
    CHECK_FALSE(integrality_pass(Basket::parse("3:1"), 2, Rational(64)));
    // N * d not an integer.
    CHECK_FALSE(integrality_pass(Basket::parse("2:1"), 1, make_rational(125, 3)));
}

TEST_CASE("torsion_feasible on the worked examples") {
    CHECK_FALSE(torsion_feasible(Basket::parse("2:1")));
    CHECK_FALSE(torsion_feasible(Basket::parse("5:2")));

    std::vector<SingularityPoint> sixteen(16, SingularityPoint{2, 1});
    CHECK(torsion_feasible(Basket(std::move(sixteen))));

    std::vector<SingularityPoint> big(6, SingularityPoint{23, 1});  // 23^6 > 10^7
    CHECK_THROWS_AS(torsion_feasible(Basket(std::move(big))), ResourceError);
}

namespace {

// Independent oracle: odometer over all assignments (i_P).
bool torsion_oracle(const Basket& B) {
    const auto& pts = B.points();
    std::vector<int> idx(pts.size(), 0);
    while (true) {
        Rational total = 0;
        bool nonzero = false;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (idx[k] != 0) nonzero = true;
            const long long m = residue(pts[k].b, idx[k], pts[k].r);
            total += Rational(Int(m) * (pts[k].r - m), Int(2) * pts[k].r);
        }
        if (nonzero && total == 2) return true;
        std::size_t k = 0;
        while (k < pts.size() && ++idx[k] == pts[k].r) idx[k++] = 0;
        if (k == pts.size()) return false;
    }
}

}  // namespace

TEST_CASE("torsion_feasible agrees with exhaustive assignment enumeration") {
    enumerate_baskets(Rational(8), [](const Basket& B) {
        CHECK(torsion_feasible(B) == torsion_oracle(B));
        return true;
    });
    // A feasible higher-index case: four points of index 4 at i = 2
    // contribute 2*(4-2)/8 = 1/2 each, totalling 2.
    std::vector<SingularityPoint> four(4, SingularityPoint{4, 1});
    const Basket B(std::move(four));
    CHECK(torsion_feasible(B));
    CHECK(torsion_oracle(B));
}

TEST_CASE("sum r < 16 forces torsion-freeness across the whole search space") {
    int checked = 0;
    int total = 0;
    enumerate_baskets(Rational(24), [&](const Basket& B) {
        ++total;
        if (B.index_sum() < 16) {
            ++checked;
            CHECK_FALSE(torsion_feasible(B));
        }
        return true;
    });
    CHECK(checked == 367);
    CHECK(total == 8337);
}
