#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heyde/engine.hpp"
#include "heyde/polyfd.hpp"
#include "heyde/rng.hpp"

using namespace heyde;

namespace {

GroupFunction random_function(const FiniteAbelianGroup& g, SplitMix64& rng) {
    std::vector<double> v(g.order());
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);
    return GroupFunction(g, std::move(v));
}

GroupDistribution dist(const FiniteAbelianGroup& g,
                       std::initializer_list<std::pair<std::int64_t, mpq_class>> weights) {
    std::vector<mpq_class> dense(g.order(), mpq_class(0));
    for (const auto& [idx, q] : weights) dense[static_cast<std::uint64_t>(idx)] = q;
    return GroupDistribution(g, std::move(dense));
}

}  // namespace

TEST_CASE("finite differences") {
    FiniteAbelianGroup z3({3});
    const GroupFunction constant(z3, {5.0, 5.0, 5.0});
    for (std::int64_t h = 0; h < 3; ++h) {
        for (double v : delta(constant, z3.element({h})).values) CHECK(v == 0.0);
    }

    const GroupFunction f(z3, {0.0, 1.0, 2.0});
    for (double v : delta(f, z3.zero()).values) CHECK(v == 0.0);
    // Wraparound at y=2: f(0) - f(2) = -2.
    CHECK(delta(f, z3.element({1})).values == std::vector<double>{1.0, 1.0, -2.0});
}

TEST_CASE("delta operators commute") {
    FiniteAbelianGroup g({3, 5});
    SplitMix64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_function(g, rng);
        const auto h1 = g.element_at(rng.below(g.order()));
        const auto h2 = g.element_at(rng.below(g.order()));
        const auto a = delta(delta(f, h1), h2);
        const auto b = delta(delta(f, h2), h1);
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);
        }
    }
}

TEST_CASE("polynomial detection") {
    FiniteAbelianGroup z3({3});
    CHECK(is_polynomial(GroupFunction(z3, {7.0, 7.0, 7.0}), 0));
    CHECK_FALSE(is_polynomial(GroupFunction(z3, {0.0, 1.0, 2.0}), 5));
    // Centered indicator of zero.
    CHECK_FALSE(is_polynomial(GroupFunction(z3, {2.0 / 3, -1.0 / 3, -1.0 / 3}), 3));
}

TEST_CASE("only constants are polynomials on finite groups") {
    SplitMix64 rng(67);
    for (const auto& factors : {std::vector<std::int64_t>{5}, {9}, {27}, {3, 9}}) {
        FiniteAbelianGroup g(factors);
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = random_function(g, rng);
            for (int degree = 0; degree <= static_cast<int>(g.order()); ++degree) {
                CHECK_FALSE(is_polynomial(f, degree));
            }
        }
        CHECK(is_polynomial(GroupFunction(g, std::vector<double>(g.order(), -3.25)), 0));
    }
}

TEST_CASE("single-increment power agrees with mixed tuples at tiny orders") {
    SplitMix64 rng(71);
    for (const auto& factors : {std::vector<std::int64_t>{3}, {5}, {9}}) {
        FiniteAbelianGroup g(factors);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_function(g, rng);
            for (int degree = 0; degree <= 2; ++degree) {
                CHECK(is_polynomial(f, degree) == is_polynomial_mixed_tuples(f, degree));
            }
        }
        const GroupFunction c(g, std::vector<double>(g.order(), 1.5));
        for (int degree = 0; degree <= 2; ++degree) {
            CHECK(is_polynomial(c, degree));
            CHECK(is_polynomial_mixed_tuples(c, degree));
        }
    }
}

TEST_CASE("reduction replay on a symmetric kernel-supported instance") {
    FiniteAbelianGroup z9({9});
    const auto omega =
        dist(z9, {{0, mpq_class(1, 2)}, {3, mpq_class(1, 4)}, {6, mpq_class(1, 4)}});
    const auto rep = replay_reduction(omega, omega, Endomorphism::scalar(z9, 2));
    CHECK(rep.factorization_residual < 1e-9);
    CHECK(rep.first_difference_residual < 1e-9);
    CHECK(rep.second_difference_residual < 1e-9);
    CHECK(rep.third_difference_residual < 1e-9);
    CHECK(rep.a_max_on_h < 1e-9);
    CHECK(rep.b_max_on_h < 1e-9);
    CHECK(rep.identities_hold);
    CHECK(rep.a_b_vanish_on_h);
    CHECK(rep.h_indices == std::vector<std::uint64_t>{0, 3, 6});
}

TEST_CASE("reduction replay on a degenerate pair") {
    FiniteAbelianGroup z3({3});
    const auto e1 = GroupDistribution::point_mass(z3, z3.element({1}));
    const auto e2 = GroupDistribution::point_mass(z3, z3.element({2}));
    const auto rep = replay_reduction(e1, e2, Endomorphism::identity(z3));
    CHECK(rep.factorization_residual < 1e-12);
    CHECK(rep.first_difference_residual < 1e-12);
    CHECK(rep.second_difference_residual < 1e-12);
    CHECK(rep.third_difference_residual < 1e-12);
    CHECK(rep.a_max_on_h < 1e-12);
    CHECK(rep.b_max_on_h < 1e-12);
}

TEST_CASE("reduction replay rejects vanishing cfs and even groups") {
    FiniteAbelianGroup z3({3});
    CHECK_THROWS_AS(replay_reduction(GroupDistribution::uniform(z3),
                                     GroupDistribution::point_mass(z3, z3.zero()),
                                     Endomorphism::identity(z3)),
                    VanishingCF);
    // Uniform on the subgroup {0,3,6} of Z(9) vanishes off {0,3,6} too.
    FiniteAbelianGroup z9({9});
    CHECK_THROWS_AS(replay_reduction(GroupDistribution::uniform_on(z9, {0, 3, 6}),
                                     GroupDistribution::uniform_on(z9, {0, 3, 6}),
                                     Endomorphism::scalar(z9, 2)),
                    VanishingCF);

    FiniteAbelianGroup z4({4});
    CHECK_THROWS_AS(replay_reduction(GroupDistribution::point_mass(z4, z4.zero()),
                                     GroupDistribution::point_mass(z4, z4.zero()),
                                     Endomorphism::identity(z4)),
                    OrderTwoElementPresent);
}

TEST_CASE("reduction replay detects a non-symmetric instance") {
    FiniteAbelianGroup z3({3});
    const auto mu1 =
        dist(z3, {{0, mpq_class(1, 2)}, {1, mpq_class(1, 4)}, {2, mpq_class(1, 4)}});
    const auto mu2 = GroupDistribution::point_mass(z3, z3.zero());
    const HeydeInstance inst(Endomorphism::identity(z3), mu1, mu2);
    REQUIRE_FALSE(check_conditional_symmetry(inst));
    const auto rep = replay_reduction(mu1, mu2, Endomorphism::identity(z3));
    CHECK(rep.factorization_residual > 1e-3);
    CHECK_FALSE(rep.identities_hold);
}

TEST_CASE("replay residuals vanish exactly when symmetry holds") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        const FiniteAbelianGroup g = sample_odd_group(rng, 27);
        const Endomorphism alpha = sample_automorphism(g, rng);
        const Subgroup kernel = Endomorphism::identity(g).add(alpha).kernel();
        const auto omega =
            sample_nonvanishing_distribution_on(g, kernel.element_indices(), rng);
        const auto inst = construct_converse(omega, alpha, g.element_at(rng.below(g.order())));
        REQUIRE(check_conditional_symmetry(inst));
        const auto rep = replay_reduction(inst.mu1, inst.mu2, alpha);
        CHECK(rep.identities_hold);
        CHECK(rep.a_b_vanish_on_h);
    }
}
