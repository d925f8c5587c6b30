#pragma once

#include <cstdint>
#include <vector>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"

namespace heyde {

/// Total real-valued function on the group carrier, indexed by flat element
/// index.
struct GroupFunction {
    FiniteAbelianGroup group;
    std::vector<double> values;

    GroupFunction(FiniteAbelianGroup g, std::vector<double> v);
    double at_index(std::uint64_t i) const { return values[i]; }
};

/// (delta_h f)(y) = f(y + h) - f(y).
GroupFunction delta(const GroupFunction& f, const GroupElement& h);

/// True iff delta_h^{n+1} f vanishes for every h, i.e. f is a polynomial of
/// degree at most n in the iterated-difference sense. Values compared
/// within tol.
bool is_polynomial(const GroupFunction& f, int degree_bound, double tol = 1e-12);

/// Cross-check variant: exhausts mixed increment tuples
/// delta_{h_1} ... delta_{h_{n+1}} f over all tuples. Cost is
/// order^(n+1), so this is only meant for tiny carriers.
bool is_polynomial_mixed_tuples(const GroupFunction& f, int degree_bound,
                                double tol = 1e-12);

/// Replay of the finite-difference reduction that drives the decomposition
/// proof. Starting from nu_j = mu_j * reflect(mu_j) (whose transforms are
/// strictly positive when the cfs do not vanish), it forms
///   P = log nu1^, Q = log nu2^,
///   A(y) = P((I+adj)y) + Q(2*adj y),  B(y) = P(2y) + Q((I+adj)y),
/// and measures how far the factorization equation and its three chained
/// difference identities are from holding, plus the vanishing of A and B on
/// H = (I+adj)Y. Under conditional symmetry all residuals are zero up to
/// roundoff.
struct ReductionReport {
    double factorization_residual;     // P((I+a)u+2v) + Q(2au+(I+a)v) = A(u)+B(v)
    double first_difference_residual;  // one increment substituted
    double second_difference_residual; // two increments substituted
    double third_difference_residual;  // triple difference of A alone
    double a_max_on_h;                 // max |A| over H
    double b_max_on_h;                 // max |B| over H
    bool identities_hold;              // all four residuals < tol
    bool a_b_vanish_on_h;              // both maxima < tol
    std::vector<std::uint64_t> h_indices;  // the subgroup H, sorted
    double tolerance;
};

ReductionReport replay_reduction(const GroupDistribution& mu1, const GroupDistribution& mu2,
                                 const Endomorphism& alpha, double tol = 1e-9);

}  // namespace heyde
