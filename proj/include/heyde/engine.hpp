#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"
#include "heyde/rng.hpp"

namespace heyde {

/// One problem instance: independent variables xi_1 ~ mu1 and xi_2 ~ mu2 on
/// the group, with the linear forms L1 = xi_1 + xi_2 and
/// L2 = xi_1 + alpha xi_2.
struct HeydeInstance {
    FiniteAbelianGroup group;
    Endomorphism alpha;
    GroupDistribution mu1;
    GroupDistribution mu2;

    HeydeInstance(Endomorphism alpha_, GroupDistribution mu1_, GroupDistribution mu2_);
};

/// Exact test that (L1, L2) and (L1, -L2) are identically distributed,
/// by rational enumeration over supp(mu1) x supp(mu2).
bool check_conditional_symmetry(const HeydeInstance& inst);

/// Result of a characteristic-function equation sweep over all (u, v).
struct CfEquationCheck {
    bool holds;
    double max_residual;
    std::uint64_t worst_u;
    std::uint64_t worst_v;
};

/// mu1^(u+v) mu2^(u+adj(alpha)v) = mu1^(u-v) mu2^(u-adj(alpha)v) within tol.
CfEquationCheck check_heyde_equation(const HeydeInstance& inst, double tol = 1e-9);

/// The independence equation for L1 = a1 xi_1 + a2 xi_2 and
/// L2 = b1 xi_1 + b2 xi_2:
///   mu1^(adj(a1)u + adj(b1)v) mu2^(adj(a2)u + adj(b2)v)
///     = mu1^(adj(a1)u) mu2^(adj(a2)u) mu1^(adj(b1)v) mu2^(adj(b2)v).
CfEquationCheck check_sd_equation(const GroupDistribution& mu1, const GroupDistribution& mu2,
                                  const Endomorphism& a1, const Endomorphism& a2,
                                  const Endomorphism& b1, const Endomorphism& b2,
                                  double tol = 1e-9);

/// Exact independence of (b1 xi_1 + b2 xi_2, g1 xi_1 + g2 xi_2): the joint
/// distribution equals the product of its marginals, in rational arithmetic.
bool check_independence(const GroupDistribution& mu1, const GroupDistribution& mu2,
                        const Endomorphism& b1, const Endomorphism& b2,
                        const Endomorphism& g1, const Endomorphism& g2);

/// mu_j = omega * E_{x_j} with supp(omega) contained in K = Ker(I + alpha).
struct Decomposition {
    GroupDistribution omega;
    GroupElement x1;
    GroupElement x2;
    Subgroup kernel;
};

/// Extracts the decomposition guaranteed for symmetric instances with
/// nonvanishing characteristic functions on order-2-free groups.
///
/// Shift canonicalization: x_j is the lexicographically smallest support
/// element of mu_j; any residual K-shift between the two centered
/// distributions is folded into x2, so mu1 = omega * E_{x1} and
/// mu2 = omega * E_{x2} hold exactly with a single omega.
///
/// Throws OrderTwoElementPresent / VanishingCF / HypothesisNotSatisfied when
/// a precondition fails, and DecompositionFailed if any internal step
/// contradicts the theorem (which would mean a bug, not bad input).
Decomposition decompose_symmetric_instance(const HeydeInstance& inst, double cf_tau = 1e-9);

/// Converse constructor: given omega supported in Ker(I + alpha) and a shift
/// x2, returns the instance (mu1, mu2) = (omega * E_{-alpha x2}, omega * E_{x2}).
/// The shift pair satisfies x1 + alpha x2 = 0, which cancels in the
/// characteristic-function equation, so the instance is symmetric by
/// construction. Throws SupportViolation if supp(omega) escapes the kernel.
HeydeInstance construct_converse(const GroupDistribution& omega, const Endomorphism& alpha,
                                 const GroupElement& x2);

// ---- sampling -----------------------------------------------------------

/// Random group with 1 or 2 odd factors (each >= 3) and order <= max_order.
FiniteAbelianGroup sample_odd_group(SplitMix64& rng, std::uint64_t max_order);

/// Rejection-samples valid matrices until one is bijective.
Endomorphism sample_automorphism(const FiniteAbelianGroup& g, SplitMix64& rng,
                                 int max_tries = 1000);

/// Random distribution with weights k_i / sum(k), k_i in [1, max_numerator],
/// over a random nonempty subset of the given support pool.
GroupDistribution sample_distribution_on(const FiniteAbelianGroup& g,
                                         const std::vector<std::uint64_t>& support_pool,
                                         SplitMix64& rng, int max_numerator = 16);
GroupDistribution sample_distribution(const FiniteAbelianGroup& g, SplitMix64& rng,
                                      int max_numerator = 16);

/// As sample_distribution_on, retrying until the characteristic function is
/// bounded away from zero. Throws GenerationExhausted after max_tries.
GroupDistribution sample_nonvanishing_distribution_on(
    const FiniteAbelianGroup& g, const std::vector<std::uint64_t>& support_pool,
    SplitMix64& rng, int max_numerator = 16, int max_tries = 1000, double tau = 1e-9);

// ---- fuzz campaign ------------------------------------------------------

struct FuzzFailure {
    std::uint64_t trial;
    std::string kind;     // error class name or "RoundTripMismatch"
    std::string message;
    // Reproduction payload.
    std::vector<std::int64_t> factors;
    std::vector<std::vector<std::int64_t>> alpha_matrix;
    std::vector<std::pair<std::string, std::string>> mu1_weights;  // element -> rational
    std::vector<std::pair<std::string, std::string>> mu2_weights;
};

struct FuzzReport {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t max_order = 0;
    std::uint64_t round_trip_passes = 0;
    std::uint64_t negative_passes = 0;
    std::vector<FuzzFailure> failures;
};

/// Deterministic campaign: trial i derives its generator from
/// SplitMix64::stream_element(seed, i). Each trial runs one
/// construct -> decompose round-trip on a random odd group plus one
/// negative check (a non-symmetric instance must raise
/// HypothesisNotSatisfied). Requires max_order >= 3.
FuzzReport fuzz_decomposition(std::uint64_t seed, std::uint64_t trials, std::uint64_t max_order);

}  // namespace heyde
