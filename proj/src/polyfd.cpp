#include "heyde/polyfd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heyde {

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<double> v)
    : group(std::move(g)), values(std::move(v)) {
    if (values.size() != group.order()) {
        throw GroupMismatch("group function needs one value per element");
    }
}

GroupFunction delta(const GroupFunction& f, const GroupElement& h) {
    const auto& g = f.group;
    const std::uint64_t hi = g.index_of(h);
    std::vector<double> out(g.order());
    for (std::uint64_t y = 0; y < g.order(); ++y) {
        out[y] = f.values[g.add_indices(y, hi)] - f.values[y];
    }
    return GroupFunction(g, std::move(out));
}

namespace {

bool near_zero(const std::vector<double>& v, double tol) {
    return std::all_of(v.begin(), v.end(), [tol](double x) { return std::abs(x) <= tol; });
}

std::vector<double> delta_by_index(const FiniteAbelianGroup& g, const std::vector<double>& f,
                                   std::uint64_t hi) {
    std::vector<double> out(g.order());
    for (std::uint64_t y = 0; y < g.order(); ++y) {
        out[y] = f[g.add_indices(y, hi)] - f[y];
    }
    return out;
}

bool mixed_tuples_vanish(const FiniteAbelianGroup& g, const std::vector<double>& f,
                         int remaining, double tol) {
    if (remaining == 0) return near_zero(f, tol);
    for (std::uint64_t hi = 0; hi < g.order(); ++hi) {
        if (!mixed_tuples_vanish(g, delta_by_index(g, f, hi), remaining - 1, tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_polynomial(const GroupFunction& f, int degree_bound, double tol) {
    if (degree_bound < 0) throw Error("degree bound must be >= 0");
    const auto& g = f.group;
    for (std::uint64_t hi = 0; hi < g.order(); ++hi) {
        std::vector<double> cur = f.values;
        for (int k = 0; k <= degree_bound; ++k) cur = delta_by_index(g, cur, hi);
        if (!near_zero(cur, tol)) return false;
    }
    return true;
}

bool is_polynomial_mixed_tuples(const GroupFunction& f, int degree_bound, double tol) {
    if (degree_bound < 0) throw Error("degree bound must be >= 0");
    return mixed_tuples_vanish(f.group, f.values, degree_bound + 1, tol);
}

ReductionReport replay_reduction(const GroupDistribution& mu1, const GroupDistribution& mu2,
                                 const Endomorphism& alpha, double tol) {
    const FiniteAbelianGroup& g = alpha.group();
    if (mu1.group() != g || mu2.group() != g) {
        throw GroupMismatch("distributions and endomorphism live on different groups");
    }
    if (!g.is_order2_free()) {
        throw OrderTwoElementPresent("the reduction needs a group of odd order");
    }
    const CharFunction cf1 = mu1.char_fn();
    const CharFunction cf2 = mu2.char_fn();
    if (cf1.min_modulus() <= 1e-9 || cf2.min_modulus() <= 1e-9) {
        throw VanishingCF("a characteristic function vanishes; logarithms undefined");
    }

    const std::uint64_t n = g.order();
    // nu_j = mu_j * reflect(mu_j) has transform |mu_j^|^2 > 0.
    std::vector<double> p(n), q(n);
    for (std::uint64_t y = 0; y < n; ++y) {
        p[y] = std::log(std::norm(cf1.at_index(y)));
        q[y] = std::log(std::norm(cf2.at_index(y)));
    }

    const Endomorphism adj = alpha.adjoint();
    const Endomorphism one_plus = Endomorphism::identity(g).add(adj);
    const Endomorphism twice_adj = adj.scaled(2);
    const Endomorphism one_minus_sq =
        Endomorphism::identity(g).add(adj.negate()).compose(
            Endomorphism::identity(g).add(adj.negate()));
    const std::vector<std::uint64_t> t_ipa = one_plus.apply_table();
    const std::vector<std::uint64_t> t_2a = twice_adj.apply_table();
    const std::vector<std::uint64_t> t_ims = one_minus_sq.apply_table();
    const std::vector<std::uint64_t> t_2 = Endomorphism::scalar(g, 2).apply_table();

    std::vector<double> a(n), b(n);
    for (std::uint64_t y = 0; y < n; ++y) {
        a[y] = p[t_ipa[y]] + q[t_2a[y]];
        b[y] = p[t_2[y]] + q[t_ipa[y]];
    }

    ReductionReport rep{};
    rep.tolerance = tol;

    double r1 = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = 0; v < n; ++v) {
            const double lhs =
                p[g.add_indices(t_ipa[u], t_2[v])] + q[g.add_indices(t_2a[u], t_ipa[v])];
            r1 = std::max(r1, std::abs(lhs - a[u] - b[v]));
        }
    }
    rep.factorization_residual = r1;

    double r2 = 0;
    for (std::uint64_t h = 0; h < n; ++h) {
        const std::uint64_t shift_p = t_ims[h];
        const std::uint64_t shift_a = t_ipa[h];
        const std::uint64_t shift_b = g.negate_index(t_2a[h]);
        for (std::uint64_t u = 0; u < n; ++u) {
            const double da = a[g.add_indices(u, shift_a)] - a[u];
            for (std::uint64_t v = 0; v < n; ++v) {
                const std::uint64_t w = g.add_indices(t_ipa[u], t_2[v]);
                const double lhs = p[g.add_indices(w, shift_p)] - p[w];
                const double db = b[g.add_indices(v, shift_b)] - b[v];
                r2 = std::max(r2, std::abs(lhs - da - db));
            }
        }
    }
    rep.first_difference_residual = r2;

    // For the two remaining identities, sweeping the free argument u (or v)
    // together with the free increment h3 covers every ordered pair of
    // points, so per (h1, h2) only the extrema of the inner double
    // differences matter.
    double r3 = 0, r4 = 0;
    for (std::uint64_t h1 = 0; h1 < n; ++h1) {
        const std::uint64_t a1 = t_ipa[h1];
        const std::uint64_t nb1 = g.negate_index(t_2a[h1]);
        for (std::uint64_t h2 = 0; h2 < n; ++h2) {
            const std::uint64_t b2 = t_2[h2];
            const std::uint64_t na2 = g.negate_index(t_ipa[h2]);
            double amax = -std::numeric_limits<double>::infinity();
            double amin = std::numeric_limits<double>::infinity();
            double bmax = amax, bmin = amin;
            for (std::uint64_t u = 0; u < n; ++u) {
                const double va = a[g.add_indices(g.add_indices(u, a1), b2)] -
                                  a[g.add_indices(u, b2)] - a[g.add_indices(u, a1)] + a[u];
                amax = std::max(amax, va);
                amin = std::min(amin, va);
                const double vb = b[g.add_indices(g.add_indices(u, nb1), na2)] -
                                  b[g.add_indices(u, na2)] - b[g.add_indices(u, nb1)] + b[u];
                bmax = std::max(bmax, vb);
                bmin = std::min(bmin, vb);
            }
            r3 = std::max(r3, std::max(amax + bmax, -(amin + bmin)));
            r4 = std::max(r4, amax - amin);
        }
    }
    rep.second_difference_residual = r3;
    rep.third_difference_residual = r4;

    const Subgroup h_sub = one_plus.image();
    double amax_h = 0, bmax_h = 0;
    for (std::uint64_t y : h_sub.element_indices()) {
        amax_h = std::max(amax_h, std::abs(a[y]));
        bmax_h = std::max(bmax_h, std::abs(b[y]));
    }
    rep.a_max_on_h = amax_h;
    rep.b_max_on_h = bmax_h;
    rep.h_indices = h_sub.element_indices();
    rep.identities_hold = r1 < tol && r2 < tol && r3 < tol && r4 < tol;
    rep.a_b_vanish_on_h = amax_h < tol && bmax_h < tol;
    return rep;
}

}  // namespace heyde
