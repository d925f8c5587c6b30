#include "heyde/group.hpp"

#include <algorithm>
#include <numeric>

namespace heyde {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw InvalidGroupSpec("group must have at least one cyclic factor");
    }
    for (std::int64_t n : factors_) {
        if (n < 2) {
            throw InvalidGroupSpec("every cyclic factor must be >= 2");
        }
        order_ *= static_cast<std::uint64_t>(n);
        exponent_ = std::lcm(exponent_, n);
    }
    phase_mult_.reserve(factors_.size());
    for (std::int64_t n : factors_) phase_mult_.push_back(exponent_ / n);

    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(factors_[i]);
    }

    roots_.reserve(static_cast<std::size_t>(exponent_));
    for (std::int64_t k = 0; k < exponent_; ++k) {
        roots_.push_back(std::polar(1.0, kTwoPi * static_cast<double>(k) /
                                             static_cast<double>(exponent_)));
    }
}

GroupElement FiniteAbelianGroup::element(const std::vector<std::int64_t>& raw) const {
    if (raw.size() != factors_.size()) {
        throw GroupMismatch("coordinate count does not match the factor count");
    }
    GroupElement x;
    x.coords.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        x.coords[i] = mod_reduce(raw[i], factors_[i]);
    }
    return x;
}

GroupElement FiniteAbelianGroup::zero() const {
    GroupElement x;
    x.coords.assign(factors_.size(), 0);
    return x;
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
    if (x.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
    }
    return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r.coords[i] = mod_reduce(a.coords[i] + b.coords[i], factors_[i]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r.coords[i] = mod_reduce(-a.coords[i], factors_[i]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::subtract(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

GroupElement FiniteAbelianGroup::scale(std::int64_t m, const GroupElement& a) const {
    GroupElement r;
    r.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r.coords[i] = mod_reduce(mod_reduce(m, factors_[i]) * a.coords[i], factors_[i]);
    }
    return r;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    if (x.coords.size() != factors_.size()) {
        throw GroupMismatch("element coordinate count does not match the group");
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += static_cast<std::uint64_t>(x.coords[i]) * strides_[i];
    }
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
    GroupElement x;
    x.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        x.coords[i] = static_cast<std::int64_t>((index / strides_[i]) %
                                                static_cast<std::uint64_t>(factors_[i]));
    }
    return x;
}

std::uint64_t FiniteAbelianGroup::add_indices(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto n = static_cast<std::uint64_t>(factors_[i]);
        const std::uint64_t ca = (a / strides_[i]) % n;
        const std::uint64_t cb = (b / strides_[i]) % n;
        idx += ((ca + cb) % n) * strides_[i];
    }
    return idx;
}

std::uint64_t FiniteAbelianGroup::negate_index(std::uint64_t a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto n = static_cast<std::uint64_t>(factors_[i]);
        const std::uint64_t ca = (a / strides_[i]) % n;
        idx += ((n - ca) % n) * strides_[i];
    }
    return idx;
}

std::int64_t FiniteAbelianGroup::pairing_phase(const GroupElement& x,
                                               const GroupElement& y) const {
    std::int64_t phase = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t term =
            mod_reduce(x.coords[i] * y.coords[i], factors_[i]) * phase_mult_[i];
        phase = mod_reduce(phase + term, exponent_);
    }
    return phase;
}

std::complex<double> FiniteAbelianGroup::pairing(const GroupElement& x,
                                                 const GroupElement& y) const {
    return roots_[static_cast<std::size_t>(pairing_phase(x, y))];
}

std::complex<double> FiniteAbelianGroup::root_of_unity(std::int64_t phase) const {
    return roots_[static_cast<std::size_t>(mod_reduce(phase, exponent_))];
}

bool FiniteAbelianGroup::is_order2_free() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](std::int64_t n) { return n % 2 != 0; });
}

Subgroup::Subgroup(FiniteAbelianGroup group, std::vector<std::uint64_t> element_indices)
    : group_(std::move(group)), elements_(std::move(element_indices)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(group_.order(), false);
    for (std::uint64_t e : elements_) {
        if (e >= group_.order()) {
            throw GroupMismatch("subgroup element index out of range");
        }
        member_[e] = true;
    }
    if (elements_.empty() || !member_[0]) {
        throw Error("subgroup must contain the identity");
    }
    for (std::uint64_t a : elements_) {
        for (std::uint64_t b : elements_) {
            if (!member_[group_.add_indices(a, b)]) {
                throw Error("subgroup element set is not closed under addition");
            }
        }
    }
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
    std::vector<std::uint64_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& g,
                                const std::vector<GroupElement>& generators) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::uint64_t> frontier{0};
    seen[0] = true;
    std::vector<std::uint64_t> gen_idx;
    gen_idx.reserve(generators.size());
    for (const auto& x : generators) gen_idx.push_back(g.index_of(x));
    while (!frontier.empty()) {
        const std::uint64_t cur = frontier.back();
        frontier.pop_back();
        for (std::uint64_t gi : gen_idx) {
            const std::uint64_t nxt = g.add_indices(cur, gi);
            if (!seen[nxt]) {
                seen[nxt] = true;
                frontier.push_back(nxt);
            }
        }
    }
    std::vector<std::uint64_t> items;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        if (seen[i]) items.push_back(i);
    }
    return Subgroup(g, std::move(items));
}

std::vector<GroupElement> Subgroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(elements_.size());
    for (std::uint64_t e : elements_) out.push_back(group_.element_at(e));
    return out;
}

bool Subgroup::contains(const GroupElement& x) const {
    return contains_index(group_.index_of(x));
}

Endomorphism::Endomorphism(FiniteAbelianGroup group,
                           std::vector<std::vector<std::int64_t>> matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
    const auto& n = group_.factors();
    if (matrix_.size() != n.size()) {
        throw NotAHomomorphism("matrix row count does not match the factor count");
    }
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (matrix_[i].size() != n.size()) {
            throw NotAHomomorphism("matrix column count does not match the factor count");
        }
        for (std::size_t j = 0; j < n.size(); ++j) {
            matrix_[i][j] = mod_reduce(matrix_[i][j], n[i]);
            if ((matrix_[i][j] * n[j]) % n[i] != 0) {
                throw NotAHomomorphism("entry (" + std::to_string(i) + "," +
                                       std::to_string(j) +
                                       ") violates a[i][j]*n_j = 0 (mod n_i)");
            }
        }
    }
}

Endomorphism Endomorphism::identity(const FiniteAbelianGroup& g) {
    std::vector<std::vector<std::int64_t>> m(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1;
    return Endomorphism(g, std::move(m));
}

Endomorphism Endomorphism::zero(const FiniteAbelianGroup& g) {
    std::vector<std::vector<std::int64_t>> m(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
    return Endomorphism(g, std::move(m));
}

Endomorphism Endomorphism::scalar(const FiniteAbelianGroup& g, std::int64_t m) {
    std::vector<std::vector<std::int64_t>> mat(g.rank(),
                                               std::vector<std::int64_t>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) mat[i][i] = mod_reduce(m, g.factors()[i]);
    return Endomorphism(g, std::move(mat));
}

GroupElement Endomorphism::apply(const GroupElement& x) const {
    const auto& n = group_.factors();
    GroupElement r;
    r.coords.resize(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < n.size(); ++j) {
            acc = mod_reduce(acc + matrix_[i][j] * x.coords[j], n[i]);
        }
        r.coords[i] = acc;
    }
    return r;
}

std::uint64_t Endomorphism::apply_index(std::uint64_t idx) const {
    return group_.index_of(apply(group_.element_at(idx)));
}

std::vector<std::uint64_t> Endomorphism::apply_table() const {
    std::vector<std::uint64_t> table(group_.order());
    for (std::uint64_t i = 0; i < group_.order(); ++i) table[i] = apply_index(i);
    return table;
}

Endomorphism Endomorphism::adjoint() const {
    const auto& n = group_.factors();
    std::vector<std::vector<std::int64_t>> b(n.size(), std::vector<std::int64_t>(n.size(), 0));
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = 0; j < n.size(); ++j) {
            // a[i][j]*n_j is divisible by n_i, so the quotient is exact.
            b[j][i] = mod_reduce((matrix_[i][j] * n[j]) / n[i], n[j]);
        }
    }
    return Endomorphism(group_, std::move(b));
}

Endomorphism Endomorphism::add(const Endomorphism& o) const {
    if (group_ != o.group_) throw GroupMismatch("endomorphism sum across groups");
    auto m = matrix_;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            m[i][j] = mod_reduce(m[i][j] + o.matrix_[i][j], group_.factors()[i]);
        }
    }
    return Endomorphism(group_, std::move(m));
}

Endomorphism Endomorphism::negate() const {
    auto m = matrix_;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            m[i][j] = mod_reduce(-m[i][j], group_.factors()[i]);
        }
    }
    return Endomorphism(group_, std::move(m));
}

Endomorphism Endomorphism::compose(const Endomorphism& o) const {
    if (group_ != o.group_) throw GroupMismatch("endomorphism composition across groups");
    const auto& n = group_.factors();
    std::vector<std::vector<std::int64_t>> m(n.size(), std::vector<std::int64_t>(n.size(), 0));
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = 0; j < n.size(); ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < n.size(); ++k) {
                acc = mod_reduce(acc + matrix_[i][k] * o.matrix_[k][j], n[i]);
            }
            m[i][j] = acc;
        }
    }
    return Endomorphism(group_, std::move(m));
}

Endomorphism Endomorphism::scaled(std::int64_t m) const {
    auto mat = matrix_;
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (std::size_t j = 0; j < mat.size(); ++j) {
            mat[i][j] = mod_reduce(mat[i][j] * mod_reduce(m, group_.factors()[i]),
                                   group_.factors()[i]);
        }
    }
    return Endomorphism(group_, std::move(mat));
}

bool Endomorphism::is_automorphism() const {
    for (std::uint64_t i = 1; i < group_.order(); ++i) {
        if (apply_index(i) == 0) return false;
    }
    return true;
}

Subgroup Endomorphism::kernel() const {
    std::vector<std::uint64_t> items;
    for (std::uint64_t i = 0; i < group_.order(); ++i) {
        if (apply_index(i) == 0) items.push_back(i);
    }
    return Subgroup(group_, std::move(items));
}

Subgroup Endomorphism::image() const {
    std::vector<bool> seen(group_.order(), false);
    for (std::uint64_t i = 0; i < group_.order(); ++i) seen[apply_index(i)] = true;
    std::vector<std::uint64_t> items;
    for (std::uint64_t i = 0; i < group_.order(); ++i) {
        if (seen[i]) items.push_back(i);
    }
    return Subgroup(group_, std::move(items));
}

std::string to_coord_string(const GroupElement& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x.coords[i]);
    }
    s += ']';
    return s;
}

Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (g != h.group()) throw GroupMismatch("annihilator of a subgroup of another group");
    const auto dual_elems = h.elements();
    std::vector<std::uint64_t> items;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        const GroupElement x = g.element_at(i);
        bool all_one = true;
        for (const auto& y : dual_elems) {
            if (g.pairing_phase(x, y) != 0) {
                all_one = false;
                break;
            }
        }
        if (all_one) items.push_back(i);
    }
    return Subgroup(g, std::move(items));
}

}  // namespace heyde
