#include "heyde/distribution.hpp"

#include <cmath>

namespace heyde {

CharFunction::CharFunction(FiniteAbelianGroup group, std::vector<std::complex<double>> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_.order()) {
        throw GroupMismatch("characteristic function needs one value per character");
    }
}

double CharFunction::min_modulus() const {
    double m = std::abs(values_.front());
    for (const auto& v : values_) m = std::min(m, std::abs(v));
    return m;
}

GroupDistribution::GroupDistribution(FiniteAbelianGroup group, std::vector<mpq_class> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
    if (weights_.size() != group_.order()) {
        throw GroupMismatch("weight vector needs one entry per group element");
    }
    mpq_class sum = 0;
    for (std::uint64_t i = 0; i < weights_.size(); ++i) {
        weights_[i].canonicalize();
        if (weights_[i] < 0) {
            throw NotAProbability("negative weight at element index " + std::to_string(i));
        }
        if (weights_[i] > 0) support_.push_back(i);
        sum += weights_[i];
    }
    if (sum != 1) {
        throw NotAProbability("weights sum to " + sum.get_str() + ", expected 1");
    }
}

GroupDistribution GroupDistribution::from_weight_map(
    const FiniteAbelianGroup& g, const std::map<GroupElement, mpq_class>& w) {
    std::vector<mpq_class> dense(g.order(), mpq_class(0));
    for (const auto& [elem, q] : w) {
        if (!g.contains(elem)) throw GroupMismatch("weight key is not a group element");
        dense[g.index_of(elem)] += q;
    }
    return GroupDistribution(g, std::move(dense));
}

GroupDistribution GroupDistribution::point_mass(const FiniteAbelianGroup& g,
                                                const GroupElement& x) {
    std::vector<mpq_class> dense(g.order(), mpq_class(0));
    dense[g.index_of(x)] = 1;
    return GroupDistribution(g, std::move(dense));
}

GroupDistribution GroupDistribution::uniform(const FiniteAbelianGroup& g) {
    std::vector<mpq_class> dense(g.order(), mpq_class(1, g.order()));
    return GroupDistribution(g, std::move(dense));
}

GroupDistribution GroupDistribution::uniform_on(const FiniteAbelianGroup& g,
                                                const std::vector<std::uint64_t>& support) {
    if (support.empty()) throw NotAProbability("uniform distribution needs a nonempty support");
    std::vector<mpq_class> dense(g.order(), mpq_class(0));
    for (std::uint64_t idx : support) dense[idx] = mpq_class(1, support.size());
    return GroupDistribution(g, std::move(dense));
}

GroupDistribution GroupDistribution::convolve(const GroupDistribution& other) const {
    if (group_ != other.group_) throw GroupMismatch("convolution across groups");
    std::vector<mpq_class> dense(group_.order(), mpq_class(0));
    for (std::uint64_t a : support_) {
        for (std::uint64_t b : other.support_) {
            dense[group_.add_indices(a, b)] += weights_[a] * other.weights_[b];
        }
    }
    return GroupDistribution(group_, std::move(dense));
}

GroupDistribution GroupDistribution::reflect() const {
    std::vector<mpq_class> dense(group_.order(), mpq_class(0));
    for (std::uint64_t a : support_) dense[group_.negate_index(a)] = weights_[a];
    return GroupDistribution(group_, std::move(dense));
}

GroupDistribution GroupDistribution::shifted(const GroupElement& x) const {
    if (!group_.contains(x)) throw GroupMismatch("shift by a foreign element");
    const std::uint64_t xi = group_.index_of(x);
    std::vector<mpq_class> dense(group_.order(), mpq_class(0));
    for (std::uint64_t a : support_) dense[group_.add_indices(a, xi)] = weights_[a];
    return GroupDistribution(group_, std::move(dense));
}

CharFunction GroupDistribution::char_fn() const {
    std::vector<std::complex<double>> values(group_.order());
    std::vector<GroupElement> supp_elems;
    std::vector<double> supp_weights;
    supp_elems.reserve(support_.size());
    for (std::uint64_t a : support_) {
        supp_elems.push_back(group_.element_at(a));
        supp_weights.push_back(weights_[a].get_d());
    }
    for (std::uint64_t y = 0; y < group_.order(); ++y) {
        const GroupElement ye = group_.element_at(y);
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < supp_elems.size(); ++k) {
            acc += supp_weights[k] * group_.pairing(supp_elems[k], ye);
        }
        values[y] = acc;
    }
    return CharFunction(group_, std::move(values));
}

bool GroupDistribution::has_nonvanishing_cf(double tau) const {
    return char_fn().min_modulus() > tau;
}

bool GroupDistribution::is_unimodular_on(const Subgroup& h) const {
    if (group_ != h.group()) throw GroupMismatch("unimodularity against a foreign subgroup");
    const GroupElement base = group_.element_at(support_.front());
    for (const auto& y : h.elements()) {
        const std::int64_t ref = group_.pairing_phase(base, y);
        for (std::uint64_t a : support_) {
            if (group_.pairing_phase(group_.element_at(a), y) != ref) return false;
        }
    }
    return true;
}

}  // namespace heyde
