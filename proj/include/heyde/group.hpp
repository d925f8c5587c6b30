#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "heyde/errors.hpp"

namespace heyde {

/// Element of a finite Abelian group, stored as reduced coordinates
/// (coords[i] in [0, n_i)). Comparison is lexicographic on coordinates,
/// which coincides with the order of flat indices.
struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Direct product of cyclic groups Z(n_0) x ... x Z(n_{r-1}).
///
/// The group is its own dual carrier: elements and characters share the
/// coordinate representation, with the pairing
///   (x, y) = exp(2*pi*i * sum_i x_i*y_i/n_i).
/// Phases are tracked as exact integers modulo the group exponent, so
/// pairing values can be compared without floating point.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }
    /// lcm of the factors; the common denominator of all pairing phases.
    std::int64_t exponent() const { return exponent_; }

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

    /// Reduce arbitrary integer coordinates into the canonical range.
    GroupElement element(const std::vector<std::int64_t>& raw) const;
    GroupElement zero() const;
    bool contains(const GroupElement& x) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(std::int64_t m, const GroupElement& a) const;

    // Flat mixed-radix indexing; coordinate 0 is most significant, so index
    // order equals lexicographic order on coordinates.
    std::uint64_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::uint64_t index) const;
    std::uint64_t add_indices(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t negate_index(std::uint64_t a) const;

    /// Exact pairing phase: sum_i x_i*y_i*(exponent/n_i) mod exponent.
    /// pairing(x, y) = exp(2*pi*i * phase / exponent).
    std::int64_t pairing_phase(const GroupElement& x, const GroupElement& y) const;
    std::complex<double> pairing(const GroupElement& x, const GroupElement& y) const;
    std::complex<double> root_of_unity(std::int64_t phase) const;

    /// True iff every factor is odd, i.e. the group has no element of
    /// order 2; equivalent to surjectivity of x -> 2x.
    bool is_order2_free() const;

private:
    std::vector<std::int64_t> factors_;
    std::uint64_t order_ = 1;
    std::int64_t exponent_ = 1;
    std::vector<std::int64_t> phase_mult_;      // exponent / n_i
    std::vector<std::uint64_t> strides_;        // strides_[i] = prod_{j>i} n_j
    std::vector<std::complex<double>> roots_;   // exp(2*pi*i*k/exponent)
};

/// Subgroup held as the explicit sorted set of its elements plus a
/// membership bitmap. Construction validates closure.
class Subgroup {
public:
    Subgroup(FiniteAbelianGroup group, std::vector<std::uint64_t> element_indices);

    static Subgroup trivial(const FiniteAbelianGroup& g);
    static Subgroup whole(const FiniteAbelianGroup& g);
    static Subgroup generated_by(const FiniteAbelianGroup& g,
                                 const std::vector<GroupElement>& generators);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::uint64_t>& element_indices() const { return elements_; }
    std::vector<GroupElement> elements() const;
    std::size_t size() const { return elements_.size(); }
    bool contains_index(std::uint64_t idx) const { return member_[idx]; }
    bool contains(const GroupElement& x) const;

    bool operator==(const Subgroup& o) const {
        return group_ == o.group_ && elements_ == o.elements_;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::uint64_t> elements_;  // sorted flat indices
    std::vector<bool> member_;
};

/// Endomorphism given by an integer matrix acting coordinatewise:
/// (a x)_i = sum_j a[i][j] x_j mod n_i. Validity requires the homomorphism
/// congruence a[i][j]*n_j = 0 (mod n_i); entries are stored reduced mod n_i.
class Endomorphism {
public:
    Endomorphism(FiniteAbelianGroup group, std::vector<std::vector<std::int64_t>> matrix);

    static Endomorphism identity(const FiniteAbelianGroup& g);
    static Endomorphism zero(const FiniteAbelianGroup& g);
    /// Multiplication by m on every coordinate.
    static Endomorphism scalar(const FiniteAbelianGroup& g, std::int64_t m);

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

    GroupElement apply(const GroupElement& x) const;
    std::uint64_t apply_index(std::uint64_t idx) const;
    /// Full application table, indexed by flat element index.
    std::vector<std::uint64_t> apply_table() const;

    /// The unique map b on the dual carrier with (a x, y) = (x, b y):
    /// b[j][i] = a[i][j]*n_j/n_i mod n_j (an integer by the congruence).
    Endomorphism adjoint() const;

    Endomorphism add(const Endomorphism& o) const;
    Endomorphism negate() const;
    Endomorphism compose(const Endomorphism& o) const;  // this after o
    Endomorphism scaled(std::int64_t m) const;

    /// Bijectivity, decided by kernel triviality via enumeration.
    bool is_automorphism() const;
    Subgroup kernel() const;
    Subgroup image() const;

    bool operator==(const Endomorphism& o) const {
        return group_ == o.group_ && matrix_ == o.matrix_;
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::vector<std::int64_t>> matrix_;
};

/// A(X, H) = {x : (x, y) = 1 for all y in H}, for H a subgroup of the dual
/// carrier. Computed with exact phases.
Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& h);

/// Canonical coordinate string, e.g. "[1,3]". Shared by configs and reports.
std::string to_coord_string(const GroupElement& x);

}  // namespace heyde
