#pragma once

#include <complex>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "heyde/group.hpp"

namespace heyde {

/// Characteristic function over the dual carrier: one complex value per
/// character. Derived from a distribution via GroupDistribution::char_fn,
/// or built directly for checks.
class CharFunction {
public:
    CharFunction(FiniteAbelianGroup group, std::vector<std::complex<double>> values);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::complex<double>>& values() const { return values_; }
    std::complex<double> at_index(std::uint64_t y) const { return values_[y]; }
    std::complex<double> at(const GroupElement& y) const {
        return values_[group_.index_of(y)];
    }
    double min_modulus() const;

private:
    FiniteAbelianGroup group_;
    std::vector<std::complex<double>> values_;
};

/// Probability distribution on a finite Abelian group with exact
/// non-negative rational weights summing to 1.
class GroupDistribution {
public:
    /// Dense weights indexed by flat element index. Validates only; never
    /// renormalizes.
    GroupDistribution(FiniteAbelianGroup group, std::vector<mpq_class> weights);

    static GroupDistribution from_weight_map(const FiniteAbelianGroup& g,
                                             const std::map<GroupElement, mpq_class>& w);
    static GroupDistribution point_mass(const FiniteAbelianGroup& g, const GroupElement& x);
    static GroupDistribution uniform(const FiniteAbelianGroup& g);
    static GroupDistribution uniform_on(const FiniteAbelianGroup& g,
                                        const std::vector<std::uint64_t>& support);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<mpq_class>& weights() const { return weights_; }
    const mpq_class& weight_at(std::uint64_t idx) const { return weights_[idx]; }
    const mpq_class& weight(const GroupElement& x) const {
        return weights_[group_.index_of(x)];
    }
    /// Sorted flat indices of the elements with positive weight.
    const std::vector<std::uint64_t>& support() const { return support_; }
    GroupElement support_min() const { return group_.element_at(support_.front()); }

    GroupDistribution convolve(const GroupDistribution& other) const;
    GroupDistribution reflect() const;
    GroupDistribution shifted(const GroupElement& x) const;

    CharFunction char_fn() const;
    /// True iff |cf| stays above tau everywhere on the dual.
    bool has_nonvanishing_cf(double tau = 1e-9) const;
    /// Exact unimodularity criterion on H: for every y in H the pairing
    /// phase is constant across the support. No floating point involved.
    bool is_unimodular_on(const Subgroup& h) const;

    bool operator==(const GroupDistribution& o) const {
        return group_ == o.group_ && weights_ == o.weights_;
    }
    bool operator!=(const GroupDistribution& o) const { return !(*this == o); }

private:
    FiniteAbelianGroup group_;
    std::vector<mpq_class> weights_;
    std::vector<std::uint64_t> support_;
};

}  // namespace heyde
