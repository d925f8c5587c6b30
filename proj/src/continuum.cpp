#include "heyde/continuum.hpp"

#include <algorithm>
#include <cmath>

namespace heyde {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

void require_square(const RealMatrix& a) {
    for (const auto& row : a) {
        if (row.size() != a.size()) throw Error("matrix must be square");
    }
}

void require_symmetric(const RealMatrix& a, double tol = 1e-12) {
    require_square(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::abs(a[i][j] - a[j][i]) > tol) {
                throw Error("matrix must be symmetric");
            }
        }
    }
}

}  // namespace

double quadratic_form(const RealMatrix& a, const RealVector& s) {
    if (a.size() != s.size()) throw Error("dimension mismatch in quadratic form");
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) acc += a[i][j] * s[i] * s[j];
    }
    return acc;
}

RealMatrix transpose(const RealMatrix& a) {
    require_square(a);
    RealMatrix t(a.size(), RealVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

RealVector mat_vec(const RealMatrix& a, const RealVector& s) {
    if (a.size() != s.size()) throw Error("dimension mismatch in mat_vec");
    RealVector r(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) r[i] += a[i][j] * s[j];
    }
    return r;
}

double determinant(RealMatrix a) {
    require_square(a);
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::vector<double> symmetric_eigenvalues(RealMatrix a) {
    require_symmetric(a, 1e-9);
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<RealVector> default_grid(std::size_t dim) {
    if (dim == 0) throw Error("grid dimension must be >= 1");
    std::vector<double> base;
    for (int k = 0; k <= 8; ++k) base.push_back(-2.0 + 0.5 * k);
    std::vector<RealVector> grid{{}};
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<RealVector> next;
        next.reserve(grid.size() * base.size());
        for (const auto& prefix : grid) {
            for (double v : base) {
                RealVector point = prefix;
                point.push_back(v);
                next.push_back(std::move(point));
            }
        }
        grid = std::move(next);
    }
    return grid;
}

GaussianParams::GaussianParams(RealMatrix a_, RealVector b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() != b.size()) throw Error("Gaussian matrix and mean dimension mismatch");
    require_symmetric(a);
    const auto eig = symmetric_eigenvalues(a);
    if (!eig.empty() && eig.front() < -1e-12) {
        throw Error("Gaussian quadratic form must be positive semidefinite");
    }
}

double parallelogram_residual(const std::function<double(const RealVector&)>& phi,
                              const std::vector<RealVector>& grid) {
    if (grid.empty()) throw GridEmpty("parallelogram check needs a nonempty grid");
    double worst = 0;
    const std::size_t dim = grid.front().size();
    RealVector sum(dim), diff(dim);
    for (const auto& u : grid) {
        for (const auto& v : grid) {
            for (std::size_t i = 0; i < dim; ++i) {
                sum[i] = u[i] + v[i];
                diff[i] = u[i] - v[i];
            }
            worst = std::max(worst,
                             std::abs(phi(sum) + phi(diff) - 2 * phi(u) - 2 * phi(v)));
        }
    }
    return worst;
}

double gaussian_phi_check(const RealMatrix& a, const std::vector<RealVector>& grid) {
    require_symmetric(a);
    return parallelogram_residual(
        [&a](const RealVector& s) { return quadratic_form(a, s); }, grid);
}

double theta_kappa_bound(const ThetaParams& p) {
    const double d = p.sigma - p.sigma_p;
    return std::sqrt(p.sigma_p / p.sigma) *
           std::exp(-(p.beta - p.beta_p) * (p.beta - p.beta_p) / (4 * d));
}

bool theta_validate(const ThetaParams& p, double slack) {
    if (p.sigma < 0 || p.sigma_p < 0) return false;
    if (p.sigma_p > 0 && p.sigma_p < p.sigma) {
        const double k = std::abs(p.kappa);
        return k > 0 && k <= theta_kappa_bound(p) + slack;
    }
    if (p.sigma == p.sigma_p && p.sigma > 0 && p.beta == p.beta_p) {
        return std::abs(p.kappa) <= 1 + slack;
    }
    return false;
}

ThetaParams theta_convolve(const ThetaParams& p, const ThetaParams& q) {
    if (!theta_validate(p) || !theta_validate(q)) {
        throw InvalidThetaInput("convolution operands must belong to the class");
    }
    return ThetaParams{p.sigma + q.sigma, p.sigma_p + q.sigma_p, p.beta + q.beta,
                       p.beta_p + q.beta_p, p.kappa * q.kappa};
}

std::complex<double> theta_cf_eval(const ThetaParams& p, double s, int n) {
    if (((n % 2) + 2) % 2 == 0) {
        return std::exp(-p.sigma * s * s) * std::polar(1.0, p.beta * s);
    }
    return p.kappa * std::exp(-p.sigma_p * s * s) * std::polar(1.0, p.beta_p * s);
}

ProbeResult theta_pd_probe(const ThetaParams& p, const ProbeGrid& grid, double cutoff) {
    if (p.sigma <= 0 || p.sigma_p <= 0) {
        throw InvalidThetaInput("positivity probe needs sigma, sigma' > 0");
    }
    const auto n_s = static_cast<std::size_t>(std::llround(2 * grid.s_max / grid.s_step)) + 1;
    std::vector<double> s_points(n_s);
    for (std::size_t k = 0; k < n_s; ++k) s_points[k] = -grid.s_max + grid.s_step * k;

    std::vector<std::complex<double>> cf0(n_s), cf1(n_s);
    for (std::size_t k = 0; k < n_s; ++k) {
        cf0[k] = theta_cf_eval(p, s_points[k], 0);
        cf1[k] = theta_cf_eval(p, s_points[k], 1);
    }

    ProbeResult result{true, 0.0, 0.0, 0};
    bool first = true;
    const auto n_t = static_cast<std::size_t>(std::llround(2 * grid.t_max / grid.t_step)) + 1;
    // The cf branches are Hermitian in s, so the inverse transforms are real.
    for (std::size_t kt = 0; kt < n_t; ++kt) {
        const double t = -grid.t_max + grid.t_step * static_cast<double>(kt);
        double f0 = 0, f1 = 0;
        for (std::size_t k = 0; k < n_s; ++k) {
            const double w = (k == 0 || k + 1 == n_s) ? 0.5 : 1.0;
            const std::complex<double> e = std::polar(1.0, -s_points[k] * t);
            f0 += w * (cf0[k] * e).real();
            f1 += w * (cf1[k] * e).real();
        }
        f0 *= grid.s_step / (2 * kPi);
        f1 *= grid.s_step / (2 * kPi);
        for (int m = 0; m < 2; ++m) {
            const double density = 0.5 * (f0 + (m == 0 ? f1 : -f1));
            if (first || density < result.min_density) {
                result.min_density = density;
                result.arg_t = t;
                result.arg_m = m;
                first = false;
            }
        }
    }
    result.nonnegative = result.min_density >= -cutoff;
    return result;
}

StructuredDistribution::StructuredDistribution(GaussianParams gaussian_,
                                               GroupDistribution finite_,
                                               RealVector shift_t_, GroupElement shift_g_)
    : gaussian(std::move(gaussian_)), finite(std::move(finite_)),
      shift_t(std::move(shift_t_)), shift_g(std::move(shift_g_)) {
    if (shift_t.size() != gaussian.dim()) {
        throw Error("structured shift dimension mismatch");
    }
    if (!finite.group().contains(shift_g)) {
        throw GroupMismatch("structured shift element is not in the finite group");
    }
}

std::complex<double> structured_cf_eval(const StructuredDistribution& sd,
                                        const RealVector& s, const GroupElement& h) {
    if (s.size() != sd.gaussian.dim()) throw Error("evaluation point dimension mismatch");
    double linear = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        linear += (sd.gaussian.b[i] + sd.shift_t[i]) * s[i];
    }
    const std::complex<double> gauss =
        std::exp(-quadratic_form(sd.gaussian.a, s)) * std::polar(1.0, linear);
    return gauss * sd.finite.group().pairing(sd.shift_g, h) * sd.finite.char_fn().at(h);
}

GridCheckResult check_heyde_equation_grid(const StructuredDistribution& sd1,
                                          const StructuredDistribution& sd2,
                                          const RealMatrix& alpha_real,
                                          const Endomorphism& alpha_g,
                                          const std::vector<RealVector>& grid) {
    if (grid.empty()) throw GridEmpty("grid checker needs a nonempty grid");
    const FiniteAbelianGroup& g = alpha_g.group();
    if (sd1.finite.group() != g || sd2.finite.group() != g) {
        throw GroupMismatch("finite parts must live on the automorphism's group");
    }
    const std::size_t dim = sd1.gaussian.dim();
    if (sd2.gaussian.dim() != dim || alpha_real.size() != dim ||
        grid.front().size() != dim) {
        throw Error("real-part dimension mismatch");
    }
    if (!alpha_g.is_automorphism()) {
        throw NotAnAutomorphism("the finite part of the coefficient must be bijective");
    }
    if (std::abs(determinant(alpha_real)) < 1e-12) {
        throw NotAnAutomorphism("the continuous part of the coefficient must be invertible");
    }

    // Precompute per-distribution factors.
    const RealMatrix alpha_adj = transpose(alpha_real);
    const auto adj_g = alpha_g.adjoint().apply_table();
    const std::uint64_t n = g.order();
    std::vector<std::complex<double>> fin1(n), fin2(n);
    {
        const CharFunction c1 = sd1.finite.char_fn();
        const CharFunction c2 = sd2.finite.char_fn();
        for (std::uint64_t h = 0; h < n; ++h) {
            const GroupElement he = g.element_at(h);
            fin1[h] = g.pairing(sd1.shift_g, he) * c1.at_index(h);
            fin2[h] = g.pairing(sd2.shift_g, he) * c2.at_index(h);
        }
    }
    auto gauss = [dim](const StructuredDistribution& sd, const RealVector& s) {
        double linear = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            linear += (sd.gaussian.b[i] + sd.shift_t[i]) * s[i];
        }
        return std::exp(-quadratic_form(sd.gaussian.a, s)) * std::polar(1.0, linear);
    };

    GridCheckResult res{0.0, grid.front(), grid.front(), g.zero(), g.zero()};
    RealVector sum(dim), diff(dim), asum(dim), adiff(dim);
    for (const auto& s1 : grid) {
        for (const auto& s2 : grid) {
            const RealVector as2 = mat_vec(alpha_adj, s2);
            for (std::size_t i = 0; i < dim; ++i) {
                sum[i] = s1[i] + s2[i];
                diff[i] = s1[i] - s2[i];
                asum[i] = s1[i] + as2[i];
                adiff[i] = s1[i] - as2[i];
            }
            const std::complex<double> g1p = gauss(sd1, sum);
            const std::complex<double> g2p = gauss(sd2, asum);
            const std::complex<double> g1m = gauss(sd1, diff);
            const std::complex<double> g2m = gauss(sd2, adiff);
            for (std::uint64_t h1 = 0; h1 < n; ++h1) {
                for (std::uint64_t h2 = 0; h2 < n; ++h2) {
                    const std::uint64_t a2 = adj_g[h2];
                    const std::complex<double> lhs =
                        g1p * fin1[g.add_indices(h1, h2)] *
                        g2p * fin2[g.add_indices(h1, a2)];
                    const std::complex<double> rhs =
                        g1m * fin1[g.add_indices(h1, g.negate_index(h2))] *
                        g2m * fin2[g.add_indices(h1, g.negate_index(a2))];
                    const double r = std::abs(lhs - rhs);
                    if (r > res.max_residual) {
                        res.max_residual = r;
                        res.worst_s1 = s1;
                        res.worst_s2 = s2;
                        res.worst_h1 = g.element_at(h1);
                        res.worst_h2 = g.element_at(h2);
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace heyde
