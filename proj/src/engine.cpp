#include "heyde/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

namespace heyde {

namespace {

using JointKey = std::pair<std::uint64_t, std::uint64_t>;
using JointMap = std::map<JointKey, mpq_class>;

/// Joint distribution of (f(x1, x2), g(x1, x2)) for independent x1 ~ mu1,
/// x2 ~ mu2, where f and g are given by precomputed index maps.
template <typename F, typename G>
JointMap joint_distribution(const GroupDistribution& mu1, const GroupDistribution& mu2,
                            F&& form1, G&& form2) {
    JointMap joint;
    for (std::uint64_t i1 : mu1.support()) {
        for (std::uint64_t i2 : mu2.support()) {
            joint[{form1(i1, i2), form2(i1, i2)}] += mu1.weight_at(i1) * mu2.weight_at(i2);
        }
    }
    return joint;
}

std::vector<std::complex<double>> cf_values(const GroupDistribution& mu) {
    return mu.char_fn().values();
}

}  // namespace

HeydeInstance::HeydeInstance(Endomorphism alpha_, GroupDistribution mu1_,
                             GroupDistribution mu2_)
    : group(alpha_.group()), alpha(std::move(alpha_)), mu1(std::move(mu1_)),
      mu2(std::move(mu2_)) {
    if (mu1.group() != group || mu2.group() != group) {
        throw GroupMismatch("instance distributions must share the automorphism's group");
    }
    if (!alpha.is_automorphism()) {
        throw NotAnAutomorphism("the coefficient of the second form must be bijective");
    }
}

bool check_conditional_symmetry(const HeydeInstance& inst) {
    const auto& g = inst.group;
    const auto alpha_t = inst.alpha.apply_table();
    const JointMap joint = joint_distribution(
        inst.mu1, inst.mu2,
        [&](std::uint64_t a, std::uint64_t b) { return g.add_indices(a, b); },
        [&](std::uint64_t a, std::uint64_t b) { return g.add_indices(a, alpha_t[b]); });
    for (const auto& [key, w] : joint) {
        const auto it = joint.find({key.first, g.negate_index(key.second)});
        if (it == joint.end() || it->second != w) return false;
    }
    return true;
}

CfEquationCheck check_heyde_equation(const HeydeInstance& inst, double tol) {
    const auto& g = inst.group;
    const auto cf1 = cf_values(inst.mu1);
    const auto cf2 = cf_values(inst.mu2);
    const auto adj_t = inst.alpha.adjoint().apply_table();
    CfEquationCheck res{true, 0.0, 0, 0};
    for (std::uint64_t u = 0; u < g.order(); ++u) {
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const std::uint64_t av = adj_t[v];
            const std::complex<double> lhs =
                cf1[g.add_indices(u, v)] * cf2[g.add_indices(u, av)];
            const std::complex<double> rhs =
                cf1[g.add_indices(u, g.negate_index(v))] *
                cf2[g.add_indices(u, g.negate_index(av))];
            const double r = std::abs(lhs - rhs);
            if (r > res.max_residual) {
                res.max_residual = r;
                res.worst_u = u;
                res.worst_v = v;
            }
        }
    }
    res.holds = res.max_residual <= tol;
    return res;
}

CfEquationCheck check_sd_equation(const GroupDistribution& mu1, const GroupDistribution& mu2,
                                  const Endomorphism& a1, const Endomorphism& a2,
                                  const Endomorphism& b1, const Endomorphism& b2,
                                  double tol) {
    const auto& g = mu1.group();
    if (mu2.group() != g || a1.group() != g || a2.group() != g || b1.group() != g ||
        b2.group() != g) {
        throw GroupMismatch("all operands must live on one group");
    }
    const auto cf1 = cf_values(mu1);
    const auto cf2 = cf_values(mu2);
    const auto a1t = a1.adjoint().apply_table();
    const auto a2t = a2.adjoint().apply_table();
    const auto b1t = b1.adjoint().apply_table();
    const auto b2t = b2.adjoint().apply_table();
    CfEquationCheck res{true, 0.0, 0, 0};
    for (std::uint64_t u = 0; u < g.order(); ++u) {
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const std::complex<double> lhs = cf1[g.add_indices(a1t[u], b1t[v])] *
                                             cf2[g.add_indices(a2t[u], b2t[v])];
            const std::complex<double> rhs =
                cf1[a1t[u]] * cf2[a2t[u]] * cf1[b1t[v]] * cf2[b2t[v]];
            const double r = std::abs(lhs - rhs);
            if (r > res.max_residual) {
                res.max_residual = r;
                res.worst_u = u;
                res.worst_v = v;
            }
        }
    }
    res.holds = res.max_residual <= tol;
    return res;
}

bool check_independence(const GroupDistribution& mu1, const GroupDistribution& mu2,
                        const Endomorphism& b1, const Endomorphism& b2,
                        const Endomorphism& g1, const Endomorphism& g2) {
    const auto& g = mu1.group();
    if (mu2.group() != g || b1.group() != g || b2.group() != g || g1.group() != g ||
        g2.group() != g) {
        throw GroupMismatch("all operands must live on one group");
    }
    const auto b1t = b1.apply_table();
    const auto b2t = b2.apply_table();
    const auto g1t = g1.apply_table();
    const auto g2t = g2.apply_table();
    const JointMap joint = joint_distribution(
        mu1, mu2,
        [&](std::uint64_t a, std::uint64_t b) { return g.add_indices(b1t[a], b2t[b]); },
        [&](std::uint64_t a, std::uint64_t b) { return g.add_indices(g1t[a], g2t[b]); });
    std::map<std::uint64_t, mpq_class> m1, m2;
    for (const auto& [key, w] : joint) {
        m1[key.first] += w;
        m2[key.second] += w;
    }
    for (const auto& [t1, w1] : m1) {
        for (const auto& [t2, w2] : m2) {
            const auto it = joint.find({t1, t2});
            const mpq_class jw = it == joint.end() ? mpq_class(0) : it->second;
            if (jw != w1 * w2) return false;
        }
    }
    return true;
}

Decomposition decompose_symmetric_instance(const HeydeInstance& inst, double cf_tau) {
    const auto& g = inst.group;
    if (!g.is_order2_free()) {
        throw OrderTwoElementPresent("the group has an element of order 2");
    }
    if (!inst.mu1.has_nonvanishing_cf(cf_tau) || !inst.mu2.has_nonvanishing_cf(cf_tau)) {
        throw VanishingCF("a characteristic function vanishes on the dual");
    }
    if (!check_conditional_symmetry(inst)) {
        throw HypothesisNotSatisfied("the conditional distribution of L2 given L1 is not symmetric");
    }

    const Endomorphism one_plus_adj = Endomorphism::identity(g).add(inst.alpha.adjoint());
    const Subgroup h = one_plus_adj.image();
    if (!inst.mu1.is_unimodular_on(h) || !inst.mu2.is_unimodular_on(h)) {
        throw DecompositionFailed("|mu_j^| = 1 fails on H = (I+adj)Y");
    }

    const Endomorphism one_plus_alpha = Endomorphism::identity(g).add(inst.alpha);
    const Subgroup kernel = one_plus_alpha.kernel();
    if (!(kernel == annihilator(g, h))) {
        throw DecompositionFailed("Ker(I+alpha) != A(X, H)");
    }

    const GroupElement x1 = inst.mu1.support_min();
    GroupElement x2 = inst.mu2.support_min();
    const GroupDistribution lambda1 = inst.mu1.shifted(g.negate(x1));
    const GroupDistribution lambda2 = inst.mu2.shifted(g.negate(x2));
    for (const auto* lam : {&lambda1, &lambda2}) {
        for (std::uint64_t s : lam->support()) {
            if (!kernel.contains_index(s)) {
                throw DecompositionFailed("centered distribution escapes Ker(I+alpha)");
            }
        }
    }

    if (lambda1 != lambda2) {
        bool matched = false;
        for (std::uint64_t k : kernel.element_indices()) {
            const GroupElement ke = g.element_at(k);
            if (lambda1.shifted(ke) == lambda2) {
                x2 = g.add(x2, ke);
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw DecompositionFailed("centered distributions are not kernel shifts of each other");
        }
    }

    const GroupDistribution& omega = lambda1;
    if (omega.shifted(x1) != inst.mu1 || omega.shifted(x2) != inst.mu2) {
        throw DecompositionFailed("reconstruction mu_j = omega * E_{x_j} failed");
    }
    if (!check_conditional_symmetry(HeydeInstance(inst.alpha, omega, omega))) {
        throw DecompositionFailed("converse instance (omega, omega) is not symmetric");
    }
    return Decomposition{omega, x1, x2, kernel};
}

HeydeInstance construct_converse(const GroupDistribution& omega, const Endomorphism& alpha,
                                 const GroupElement& x2) {
    const auto& g = alpha.group();
    if (omega.group() != g) throw GroupMismatch("omega lives on a different group");
    const Subgroup kernel = Endomorphism::identity(g).add(alpha).kernel();
    for (std::uint64_t s : omega.support()) {
        if (!kernel.contains_index(s)) {
            throw SupportViolation("supp(omega) must lie in Ker(I+alpha)");
        }
    }
    const GroupElement x1 = g.negate(alpha.apply(x2));
    return HeydeInstance(alpha, omega.shifted(x1), omega.shifted(x2));
}

FiniteAbelianGroup sample_odd_group(SplitMix64& rng, std::uint64_t max_order) {
    if (max_order < 3) throw Error("max_order must be >= 3");
    auto largest_odd = [](std::uint64_t v) { return v % 2 ? v : v - 1; };
    auto pick_odd = [&rng](std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t count = (hi - lo) / 2 + 1;
        return static_cast<std::int64_t>(lo + 2 * rng.below(count));
    };
    const bool two_factors = max_order >= 9 && rng.coin();
    if (!two_factors) {
        return FiniteAbelianGroup({pick_odd(3, largest_odd(max_order))});
    }
    const std::int64_t f1 = pick_odd(3, largest_odd(max_order / 3));
    const std::int64_t f2 =
        pick_odd(3, largest_odd(max_order / static_cast<std::uint64_t>(f1)));
    return FiniteAbelianGroup({f1, f2});
}

Endomorphism sample_automorphism(const FiniteAbelianGroup& g, SplitMix64& rng,
                                 int max_tries) {
    const auto& n = g.factors();
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<std::vector<std::int64_t>> m(n.size(),
                                                 std::vector<std::int64_t>(n.size()));
        for (std::size_t i = 0; i < n.size(); ++i) {
            for (std::size_t j = 0; j < n.size(); ++j) {
                // Valid entries are the multiples of n_i / gcd(n_i, n_j).
                const std::int64_t gcd = std::gcd(n[i], n[j]);
                const std::int64_t step = n[i] / gcd;
                m[i][j] = step * static_cast<std::int64_t>(
                                     rng.below(static_cast<std::uint64_t>(gcd)));
            }
        }
        Endomorphism e(g, std::move(m));
        if (e.is_automorphism()) return e;
    }
    throw GenerationExhausted("no automorphism found within the retry bound");
}

GroupDistribution sample_distribution_on(const FiniteAbelianGroup& g,
                                         const std::vector<std::uint64_t>& support_pool,
                                         SplitMix64& rng, int max_numerator) {
    if (support_pool.empty()) throw Error("support pool must be nonempty");
    if (max_numerator < 1) throw Error("max_numerator must be >= 1");
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t idx : support_pool) {
        if (rng.coin()) chosen.push_back(idx);
    }
    if (chosen.empty()) {
        chosen.push_back(support_pool[rng.below(support_pool.size())]);
    }
    std::vector<std::int64_t> numerators(chosen.size());
    std::int64_t total = 0;
    for (auto& k : numerators) {
        k = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_numerator)));
        total += k;
    }
    std::vector<mpq_class> dense(g.order(), mpq_class(0));
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        mpq_class w(numerators[i], total);
        w.canonicalize();
        dense[chosen[i]] = w;
    }
    return GroupDistribution(g, std::move(dense));
}

GroupDistribution sample_distribution(const FiniteAbelianGroup& g, SplitMix64& rng,
                                      int max_numerator) {
    std::vector<std::uint64_t> pool(g.order());
    std::iota(pool.begin(), pool.end(), 0);
    return sample_distribution_on(g, pool, rng, max_numerator);
}

GroupDistribution sample_nonvanishing_distribution_on(
    const FiniteAbelianGroup& g, const std::vector<std::uint64_t>& support_pool,
    SplitMix64& rng, int max_numerator, int max_tries, double tau) {
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        GroupDistribution d = sample_distribution_on(g, support_pool, rng, max_numerator);
        if (d.has_nonvanishing_cf(tau)) return d;
    }
    throw GenerationExhausted("no distribution with nonvanishing cf within the retry bound");
}

namespace {

std::vector<std::pair<std::string, std::string>> weight_pairs(const GroupDistribution& d) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(d.support().size());
    for (std::uint64_t i : d.support()) {
        out.emplace_back(to_coord_string(d.group().element_at(i)),
                         d.weight_at(i).get_str());
    }
    return out;
}

FuzzFailure make_failure(std::uint64_t trial, std::string kind, std::string message,
                         const HeydeInstance* inst) {
    FuzzFailure f;
    f.trial = trial;
    f.kind = std::move(kind);
    f.message = std::move(message);
    if (inst != nullptr) {
        f.factors = inst->group.factors();
        f.alpha_matrix = inst->alpha.matrix();
        f.mu1_weights = weight_pairs(inst->mu1);
        f.mu2_weights = weight_pairs(inst->mu2);
    }
    return f;
}

}  // namespace

FuzzReport fuzz_decomposition(std::uint64_t seed, std::uint64_t trials, std::uint64_t max_order) {
    if (max_order < 3) throw Error("max_order must be >= 3");
    FuzzReport report;
    report.seed = seed;
    report.trials = trials;
    report.max_order = max_order;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(SplitMix64::stream_element(seed, trial));

        // Round trip: converse constructor output must decompose back to a
        // kernel shift of the sampled omega, exactly.
        const FiniteAbelianGroup g = sample_odd_group(rng, max_order);
        std::optional<HeydeInstance> inst;
        try {
            const Endomorphism alpha = sample_automorphism(g, rng);
            const Subgroup kernel = Endomorphism::identity(g).add(alpha).kernel();
            const GroupDistribution omega =
                sample_nonvanishing_distribution_on(g, kernel.element_indices(), rng);
            const GroupElement x2 = g.element_at(rng.below(g.order()));
            inst.emplace(construct_converse(omega, alpha, x2));
            const Decomposition dec = decompose_symmetric_instance(*inst);

            bool ok = dec.kernel == kernel;
            for (std::uint64_t s : dec.omega.support()) {
                ok = ok && kernel.contains_index(s);
            }
            ok = ok && dec.omega.shifted(dec.x1) == inst->mu1 &&
                 dec.omega.shifted(dec.x2) == inst->mu2;
            bool omega_matches = false;
            for (std::uint64_t k : kernel.element_indices()) {
                if (omega.shifted(g.element_at(k)) == dec.omega) {
                    omega_matches = true;
                    break;
                }
            }
            if (ok && omega_matches) {
                ++report.round_trip_passes;
            } else {
                report.failures.push_back(make_failure(
                    trial, "RoundTripMismatch",
                    omega_matches ? "reconstruction check failed"
                                  : "recovered omega is not a kernel shift of the input",
                    &*inst));
            }
        } catch (const Error& e) {
            report.failures.push_back(
                make_failure(trial, error_kind(e), e.what(), inst ? &*inst : nullptr));
        }

        // Negative check: a non-symmetric instance with nonvanishing cfs
        // must be rejected with HypothesisNotSatisfied.
        std::optional<HeydeInstance> neg;
        try {
            const Endomorphism alpha = sample_automorphism(g, rng);
            std::vector<std::uint64_t> pool(g.order());
            std::iota(pool.begin(), pool.end(), 0);
            bool found = false;
            for (int attempt = 0; attempt < 100 && !found; ++attempt) {
                GroupDistribution m1 = sample_nonvanishing_distribution_on(g, pool, rng);
                GroupDistribution m2 = sample_nonvanishing_distribution_on(g, pool, rng);
                HeydeInstance candidate(alpha, std::move(m1), std::move(m2));
                if (!check_conditional_symmetry(candidate)) {
                    neg.emplace(std::move(candidate));
                    found = true;
                }
            }
            if (!found) {
                throw GenerationExhausted("could not sample a non-symmetric instance");
            }
            try {
                decompose_symmetric_instance(*neg);
                report.failures.push_back(make_failure(
                    trial, "NegativeNotRejected",
                    "decomposition accepted a non-symmetric instance", &*neg));
            } catch (const HypothesisNotSatisfied&) {
                ++report.negative_passes;
            }
        } catch (const Error& e) {
            report.failures.push_back(
                make_failure(trial, error_kind(e), e.what(), neg ? &*neg : nullptr));
        }
    }
    return report;
}

}  // namespace heyde
