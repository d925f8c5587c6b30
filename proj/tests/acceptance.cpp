// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria. The CLI binary path is expected
// as argv[1] (used by the last criterion).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "heyde/continuum.hpp"
#include "heyde/engine.hpp"
#include "heyde/json_io.hpp"
#include "heyde/polyfd.hpp"
#include "heyde/rng.hpp"

using namespace heyde;

namespace {

namespace fs = std::filesystem;

std::string g_cli;
int g_failed = 0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

void run_criterion(int id, const std::string& label, double time_limit_s,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && seconds > time_limit_s) {
        out.require(false, "runtime " + std::to_string(seconds) + " s over the " +
                               std::to_string(time_limit_s) + " s budget");
    }
    if (!out.pass) ++g_failed;
    std::printf("[%s] criterion %2d (%6.2fs): %s%s\n", out.pass ? "PASS" : "FAIL", id,
                seconds, label.c_str(),
                out.pass ? "" : (" -- " + out.detail).c_str());
    std::fflush(stdout);
}

const std::vector<std::vector<std::int64_t>> kEquivalenceGroups = {{3}, {5}, {9}, {3, 9}};

// Small odd groups (order <= 27) for the reduction replay.
const std::vector<std::vector<std::int64_t>> kReplayGroups = {
    {3}, {5}, {7}, {9}, {11}, {13}, {15}, {17}, {19}, {21}, {23}, {25}, {27},
    {3, 3}, {3, 5}, {3, 7}, {3, 9}, {5, 5}};

HeydeInstance sample_symmetric_instance(const FiniteAbelianGroup& g, SplitMix64& rng,
                                        bool nonvanishing = false) {
    const Endomorphism alpha = sample_automorphism(g, rng);
    const Subgroup kernel = Endomorphism::identity(g).add(alpha).kernel();
    const GroupDistribution omega =
        nonvanishing ? sample_nonvanishing_distribution_on(g, kernel.element_indices(), rng)
                     : sample_distribution_on(g, kernel.element_indices(), rng);
    return construct_converse(omega, alpha, g.element_at(rng.below(g.order())));
}

HeydeInstance sample_asymmetric_instance(const FiniteAbelianGroup& g, SplitMix64& rng) {
    std::vector<std::uint64_t> pool(g.order());
    std::iota(pool.begin(), pool.end(), 0);
    const Endomorphism alpha = sample_automorphism(g, rng);
    for (int attempt = 0; attempt < 200; ++attempt) {
        HeydeInstance inst(alpha, sample_nonvanishing_distribution_on(g, pool, rng),
                           sample_nonvanishing_distribution_on(g, pool, rng));
        if (!check_conditional_symmetry(inst)) return inst;
    }
    throw GenerationExhausted("no asymmetric instance found");
}

void criterion_equivalence(Outcome& out) {
    SplitMix64 seeder(1001);
    for (const auto& factors : kEquivalenceGroups) {
        FiniteAbelianGroup g(factors);
        SplitMix64 rng(seeder.next());
        for (int trial = 0; trial < 1000; ++trial) {
            const Endomorphism alpha = sample_automorphism(g, rng);
            HeydeInstance inst =
                rng.coin()
                    ? sample_symmetric_instance(g, rng)
                    : HeydeInstance(alpha, sample_distribution(g, rng),
                                    sample_distribution(g, rng));
            const bool symmetric = check_conditional_symmetry(inst);
            const bool equation = check_heyde_equation(inst, 1e-9).holds;
            out.require(symmetric == equation,
                        "verdicts diverge on a random instance of order " +
                            std::to_string(g.order()));
            if (!out.pass) return;
        }
    }
    // Exhaustive over degenerate pairs and all automorphisms of Z(3), Z(5).
    for (std::int64_t n : {3, 5}) {
        FiniteAbelianGroup g({n});
        for (std::int64_t m = 1; m < n; ++m) {
            const Endomorphism alpha = Endomorphism::scalar(g, m);
            if (!alpha.is_automorphism()) continue;
            for (std::uint64_t a = 0; a < g.order(); ++a) {
                for (std::uint64_t b = 0; b < g.order(); ++b) {
                    HeydeInstance inst(
                        alpha, GroupDistribution::point_mass(g, g.element_at(a)),
                        GroupDistribution::point_mass(g, g.element_at(b)));
                    out.require(check_conditional_symmetry(inst) ==
                                    check_heyde_equation(inst, 1e-9).holds,
                                "verdicts diverge on a degenerate pair");
                    if (!out.pass) return;
                }
            }
        }
    }
}

void criterion_independence(Outcome& out) {
    SplitMix64 rng(2002);
    for (int trial = 0; trial < 500; ++trial) {
        const FiniteAbelianGroup g = sample_odd_group(rng, 81);
        const HeydeInstance inst = sample_symmetric_instance(g, rng);
        const auto one_plus = Endomorphism::identity(g).add(inst.alpha);
        const bool indep = check_independence(inst.mu1, inst.mu2, one_plus,
                                              inst.alpha.scaled(2),
                                              Endomorphism::scalar(g, 2), one_plus);
        out.require(indep, "derived forms dependent on a symmetric instance, trial " +
                               std::to_string(trial));
        if (!out.pass) return;
    }
}

void criterion_sd_agreement(Outcome& out) {
    SplitMix64 rng(2002);  // same stream as criterion 2, hence the same instances
    for (int trial = 0; trial < 500; ++trial) {
        const FiniteAbelianGroup g = sample_odd_group(rng, 81);
        const HeydeInstance inst = sample_symmetric_instance(g, rng);
        const auto one_plus = Endomorphism::identity(g).add(inst.alpha);
        const auto twice_alpha = inst.alpha.scaled(2);
        const auto twice = Endomorphism::scalar(g, 2);
        const bool indep =
            check_independence(inst.mu1, inst.mu2, one_plus, twice_alpha, twice, one_plus);
        const bool equation =
            check_sd_equation(inst.mu1, inst.mu2, one_plus, twice_alpha, twice, one_plus,
                              1e-9)
                .holds;
        out.require(indep == equation,
                    "equation verdict diverges from exact independence, trial " +
                        std::to_string(trial));
        out.require(equation, "equation fails on a symmetric instance");
        if (!out.pass) return;
    }
}

void criterion_fuzz(Outcome& out) {
    const FuzzReport report = fuzz_decomposition(42, 1000, 225);
    out.require(report.failures.empty(),
                std::to_string(report.failures.size()) + " failures, first kind: " +
                    (report.failures.empty() ? "" : report.failures.front().kind));
    out.require(report.round_trip_passes == 1000, "round trip count off");
    out.require(report.negative_passes == 1000, "negative check count off");
}

void criterion_negative_paths(Outcome& out) {
    SplitMix64 rng(3003);
    for (int trial = 0; trial < 200; ++trial) {
        const FiniteAbelianGroup g = sample_odd_group(rng, 45);
        const HeydeInstance inst = sample_asymmetric_instance(g, rng);
        bool raised = false;
        try {
            decompose_symmetric_instance(inst);
        } catch (const HypothesisNotSatisfied&) {
            raised = true;
        }
        out.require(raised, "asymmetric instance not rejected, trial " + std::to_string(trial));
        if (!out.pass) return;
    }
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteAbelianGroup g = sample_odd_group(rng, 45);
        std::vector<std::uint64_t> pool(g.order());
        std::iota(pool.begin(), pool.end(), 0);
        const HeydeInstance inst(sample_automorphism(g, rng), GroupDistribution::uniform(g),
                                 sample_nonvanishing_distribution_on(g, pool, rng));
        bool raised = false;
        try {
            decompose_symmetric_instance(inst);
        } catch (const VanishingCF&) {
            raised = true;
        }
        out.require(raised, "vanishing cf not rejected, trial " + std::to_string(trial));
        if (!out.pass) return;
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t even = 2 * (1 + static_cast<std::int64_t>(rng.below(6)));
        const std::int64_t other = 2 + static_cast<std::int64_t>(rng.below(8));
        const FiniteAbelianGroup g = rng.coin()
                                         ? FiniteAbelianGroup({even})
                                         : FiniteAbelianGroup({even, other});
        const auto e0 = GroupDistribution::point_mass(g, g.zero());
        bool raised = false;
        try {
            decompose_symmetric_instance(HeydeInstance(Endomorphism::identity(g), e0, e0));
        } catch (const OrderTwoElementPresent&) {
            raised = true;
        }
        out.require(raised, "even factor not rejected, trial " + std::to_string(trial));
        if (!out.pass) return;
    }
}

void criterion_prime_power(Outcome& out) {
    SplitMix64 rng(4004);
    for (const auto& [pk, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {27, 3}, {125, 5}}) {
        FiniteAbelianGroup g({pk});
        for (std::int64_t a = 1; a < pk; ++a) {
            if (std::gcd(a, pk) != 1) continue;
            const bool coprime_case = (1 + a) % p != 0;
            const bool minus_one = a == pk - 1;
            if (!coprime_case && !minus_one) continue;
            const Endomorphism alpha = Endomorphism::scalar(g, a);
            const Subgroup kernel = Endomorphism::identity(g).add(alpha).kernel();
            for (int trial = 0; trial < 100; ++trial) {
                const GroupDistribution omega =
                    coprime_case
                        ? GroupDistribution::point_mass(g, g.zero())
                        : sample_nonvanishing_distribution_on(g, kernel.element_indices(),
                                                              rng);
                const auto inst =
                    construct_converse(omega, alpha, g.element_at(rng.below(g.order())));
                const Decomposition dec = decompose_symmetric_instance(inst);
                if (coprime_case) {
                    out.require(dec.kernel.size() == 1,
                                "kernel not trivial for a = " + std::to_string(a));
                    out.require(dec.omega.support().size() == 1 &&
                                    inst.mu1.support().size() == 1 &&
                                    inst.mu2.support().size() == 1,
                                "distributions not degenerate for a = " + std::to_string(a));
                } else {
                    out.require(dec.kernel.size() == static_cast<std::size_t>(pk),
                                "kernel not the whole group at a = -1");
                    out.require(inst.mu1 == inst.mu2 && dec.x1 == dec.x2,
                                "mu1 != mu2 after reconciliation at a = -1");
                }
                if (!out.pass) return;
            }
        }
    }
}

void criterion_replay(Outcome& out) {
    SplitMix64 rng(5005);
    for (int trial = 0; trial < 100; ++trial) {
        const FiniteAbelianGroup g(kReplayGroups[rng.below(kReplayGroups.size())]);
        const HeydeInstance inst = sample_symmetric_instance(g, rng, /*nonvanishing=*/true);
        const ReductionReport rep = replay_reduction(inst.mu1, inst.mu2, inst.alpha, 1e-9);
        out.require(rep.identities_hold,
                    "difference identities fail, trial " + std::to_string(trial));
        out.require(rep.a_b_vanish_on_h, "A or B nonzero on H, trial " + std::to_string(trial));
        if (!out.pass) return;
    }
}

void criterion_doubling(Outcome& out) {
    for (std::int64_t f1 = 2; f1 <= 12; ++f1) {
        for (std::int64_t f2 = 1; f2 <= 12; ++f2) {
            const std::vector<std::int64_t> factors =
                f2 == 1 ? std::vector<std::int64_t>{f1} : std::vector<std::int64_t>{f1, f2};
            FiniteAbelianGroup g(factors);
            const auto doubling = Endomorphism::scalar(g, 2);
            const bool onto = doubling.image().size() == g.order();
            const bool dual_onto = doubling.adjoint().image().size() == g.order();
            out.require(g.is_order2_free() == onto && onto == dual_onto,
                        "doubling criterion off for factors " + std::to_string(f1) + "," +
                            std::to_string(f2));
            if (!out.pass) return;
        }
    }
}

void criterion_constancy(Outcome& out) {
    SplitMix64 rng(6006);
    for (int trial = 0; trial < 10000; ++trial) {
        const FiniteAbelianGroup g(kReplayGroups[rng.below(kReplayGroups.size())]);
        std::vector<double> values(g.order());
        bool constant = true;
        do {
            for (auto& v : values) v = rng.uniform(-1.0, 1.0);
            constant = true;
            for (double v : values) constant = constant && v == values.front();
        } while (constant);
        const GroupFunction f(g, values);
        for (int degree = 0; degree <= static_cast<int>(g.order()); ++degree) {
            out.require(!is_polynomial(f, degree),
                        "non-constant function passed at degree " + std::to_string(degree));
            if (!out.pass) return;
        }
    }
    for (const auto& factors : kReplayGroups) {
        FiniteAbelianGroup g(factors);
        out.require(is_polynomial(GroupFunction(g, std::vector<double>(g.order(), 2.5)), 0),
                    "constant rejected at degree 0");
    }
}

void criterion_theta_semigroup(Outcome& out) {
    SplitMix64 rng(7007);
    auto random_theta = [&rng]() {
        ThetaParams p{};
        if (rng.coin()) {
            // First branch. Resample until the membership bound stays in a
            // representable range: a bound that underflows to zero leaves no
            // valid kappa at all (and products of two such parameters would
            // underflow even when the exact class is closed).
            do {
                p.sigma = rng.uniform(0.05, 4.0);
                p.sigma_p = p.sigma * rng.uniform(0.02, 0.98);
                p.beta = rng.uniform(-3.0, 3.0);
                p.beta_p = rng.uniform(-3.0, 3.0);
            } while (theta_kappa_bound(p) < 1e-30);
            const double u = rng.uniform(0.005, 1.0);
            p.kappa = (rng.coin() ? 1 : -1) * u * theta_kappa_bound(p);
        } else {
            p.sigma = p.sigma_p = rng.uniform(0.05, 4.0);
            p.beta = p.beta_p = rng.uniform(-3.0, 3.0);
            p.kappa = (rng.coin() ? 1 : -1) * rng.uniform(0.005, 1.0);
        }
        return p;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        const ThetaParams p = random_theta();
        const ThetaParams q = random_theta();
        out.require(theta_validate(p) && theta_validate(q), "generator produced an invalid pair");
        out.require(theta_validate(theta_convolve(p, q)),
                    "convolution left the class, trial " + std::to_string(trial));
        if (!out.pass) return;
    }
}

void criterion_continuum(Outcome& out) {
    FiniteAbelianGroup z3({3});
    GroupDistribution fin(z3, {mpq_class(1, 2), mpq_class(1, 4), mpq_class(1, 4)});
    const auto alpha_g = Endomorphism::scalar(z3, 2);
    const auto grid = default_grid(1);

    const StructuredDistribution sd1(GaussianParams({{2.0}}, {0.0}), fin, {0.0}, z3.zero());
    const StructuredDistribution sd2(GaussianParams({{1.0}}, {0.0}), fin, {0.0}, z3.zero());
    const auto exact = check_heyde_equation_grid(sd1, sd2, {{-2.0}}, alpha_g, grid);
    out.require(exact.max_residual < 1e-9,
                "constructed family residual " + std::to_string(exact.max_residual));

    const StructuredDistribution sd1p(GaussianParams({{2.2}}, {0.0}), fin, {0.0}, z3.zero());
    const auto off = check_heyde_equation_grid(sd1p, sd2, {{-2.0}}, alpha_g, grid);
    out.require(off.max_residual > 1e-3,
                "perturbed family residual only " + std::to_string(off.max_residual));

    SplitMix64 rng(8008);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng.below(2);
        RealMatrix a(dim, RealVector(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i; j < dim; ++j) {
                a[i][j] = a[j][i] = rng.uniform(-2.0, 2.0);
            }
        }
        const double residual = gaussian_phi_check(a, default_grid(dim));
        out.require(residual < 1e-12,
                    "parallelogram residual " + std::to_string(residual));
        if (!out.pass) return;
    }
}

// ---- criterion 12: CLI determinism and exit codes ------------------------

fs::path g_tmp;

fs::path write_file(const std::string& name, const std::string& body) {
    const fs::path p = g_tmp / name;
    std::ofstream out(p);
    out << body;
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : (WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

std::string run_cli_capture(const std::string& args, const std::string& out_name) {
    const fs::path out = g_tmp / out_name;
    if (std::system((g_cli + " " + args + " --out " + out.string() + " 2>/dev/null").c_str()) == -1) {
        return {};
    }
    std::ifstream in(out, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_cli(Outcome& out) {
    if (g_cli.empty()) {
        out.require(false, "no CLI binary path given (argv[1])");
        return;
    }
    g_tmp = fs::temp_directory_path() / "heyde_acceptance";
    fs::create_directories(g_tmp);

    const auto good = write_file("good.json", R"({
      "group": {"factors": [9]},
      "alpha": {"matrix": [[2]]},
      "mu1": {"weights": {"[0]": "1/2", "[3]": "1/4", "[6]": "1/4"}},
      "mu2": {"weights": {"[0]": "1/2", "[3]": "1/4", "[6]": "1/4"}}})");
    const auto bad = write_file("bad.json", R"({
      "group": {"factors": [3]},
      "alpha": {"matrix": [[1]]},
      "mu1": {"weights": {"[1]": "1"}},
      "mu2": {"weights": {"[0]": "1"}}})");
    const auto malformed = write_file("malformed.json", R"({
      "group": {"factors": [3]},
      "alpha": {"matrix": [[1]]},
      "mu1": {"weights": {"[0]": "1/2"}},
      "mu2": {"weights": {"[0]": "1"}}})");

    // Byte-identical reports for identical configs and seeds.
    const auto fuzz_a = run_cli_capture("fuzz --seed 42 --trials 25 --max-order 81", "f1.json");
    const auto fuzz_b = run_cli_capture("fuzz --seed 42 --trials 25 --max-order 81", "f2.json");
    out.require(!fuzz_a.empty() && fuzz_a == fuzz_b, "fuzz reports differ between runs");
    const auto dec_a = run_cli_capture("decompose --config " + good.string(), "d1.json");
    const auto dec_b = run_cli_capture("decompose --config " + good.string(), "d2.json");
    out.require(!dec_a.empty() && dec_a == dec_b, "decompose reports differ between runs");

    // Exit-code contract per command.
    const auto g_ok = write_file("g_ok.json", R"({"factors": [3, 9]})");
    const auto g_even = write_file("g_even.json", R"({"factors": [2, 3]})");
    const auto g_bad = write_file("g_bad.json", R"({"factors": []})");
    out.require(run_cli("group-info --config " + g_ok.string()) == 0, "group-info true");
    out.require(run_cli("group-info --config " + g_even.string()) == 1, "group-info false");
    out.require(run_cli("group-info --config " + g_bad.string()) == 2, "group-info malformed");

    out.require(run_cli("check --which symmetry --config " + good.string()) == 0,
                "check true");
    out.require(run_cli("check --which symmetry --config " + bad.string()) == 1,
                "check false");
    out.require(run_cli("check --which symmetry --config " + malformed.string()) == 2,
                "check malformed");

    out.require(run_cli("decompose --config " + good.string()) == 0, "decompose true");
    out.require(run_cli("decompose --config " + bad.string()) == 1, "decompose false");
    out.require(run_cli("decompose --config " + malformed.string()) == 2,
                "decompose malformed");

    out.require(run_cli("fuzz --seed 1 --trials 5 --max-order 27") == 0, "fuzz true");
    out.require(run_cli("fuzz --trials 5 --max-order 27") == 2, "fuzz malformed");

    const auto t_ok = write_file("t_ok.json",
                                 R"({"p": {"sigma": "1", "sigma_p": "1", "beta": "0",
                                      "beta_p": "0", "kappa": "1"}})");
    const auto t_bad = write_file("t_bad.json",
                                  R"({"p": {"sigma": "1", "sigma_p": "2", "beta": "0",
                                       "beta_p": "0", "kappa": "1/2"}})");
    const auto t_malformed = write_file("t_malformed.json", R"({"p": {"sigma": "1"}})");
    out.require(run_cli("theta --which validate --config " + t_ok.string()) == 0,
                "theta true");
    out.require(run_cli("theta --which validate --config " + t_bad.string()) == 1,
                "theta false");
    out.require(run_cli("theta --which validate --config " + t_malformed.string()) == 2,
                "theta malformed");

    const auto cc_ok = write_file("cc_ok.json", R"({
      "group": {"factors": [3]},
      "sd1": {"gaussian": {"a": [[2.0]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1/2", "[1]": "1/4", "[2]": "1/4"}}},
      "sd2": {"gaussian": {"a": [[1.0]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1/2", "[1]": "1/4", "[2]": "1/4"}}},
      "alpha": {"a": [[-2.0]], "g": {"matrix": [[2]]}}})");
    const auto cc_bad = write_file("cc_bad.json", R"({
      "group": {"factors": [3]},
      "sd1": {"gaussian": {"a": [[2.2]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1/2", "[1]": "1/4", "[2]": "1/4"}}},
      "sd2": {"gaussian": {"a": [[1.0]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1/2", "[1]": "1/4", "[2]": "1/4"}}},
      "alpha": {"a": [[-2.0]], "g": {"matrix": [[2]]}}})");
    const auto cc_malformed = write_file("cc_malformed.json", R"({
      "group": {"factors": [3]},
      "sd1": {"gaussian": {"a": [[2.0]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1"}}},
      "sd2": {"gaussian": {"a": [[1.0]], "b": [0.0]},
              "finite": {"weights": {"[0]": "1"}}},
      "alpha": {"a": [[0.0]], "g": {"matrix": [[2]]}}})");
    out.require(run_cli("continuum-check --config " + cc_ok.string()) == 0,
                "continuum-check true");
    out.require(run_cli("continuum-check --config " + cc_bad.string()) == 1,
                "continuum-check false");
    out.require(run_cli("continuum-check --config " + cc_malformed.string()) == 2,
                "continuum-check malformed");

    std::error_code ec;
    fs::remove_all(g_tmp, ec);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    run_criterion(1, "symmetry and the cf equation agree on 4x1000 random instances", 30,
                  criterion_equivalence);
    run_criterion(2, "derived forms M1, M2 independent on 500 constructed instances", 30,
                  criterion_independence);
    run_criterion(3, "independence equation agrees with exact independence", 30,
                  criterion_sd_agreement);
    run_criterion(4, "fuzz 1000 round trips at max order 225, zero failures", 180,
                  criterion_fuzz);
    run_criterion(5, "negative paths: 200 asymmetric, 50 vanishing, 50 even-order", 120,
                  criterion_negative_paths);
    run_criterion(6, "cyclic prime-power analogue on Z(27) and Z(125)", 60,
                  criterion_prime_power);
    run_criterion(7, "finite-difference replay green on 100 constructed instances", 120,
                  criterion_replay);
    run_criterion(8, "doubling criterion exhaustive over small factor lists", 5,
                  criterion_doubling);
    run_criterion(9, "only constants pass the polynomial test (10^4 functions)", 120,
                  criterion_constancy);
    run_criterion(10, "theta class closed under convolution (10^4 pairs)", 5,
                  criterion_theta_semigroup);
    run_criterion(11, "continuous-equation grid checks and parallelogram law", 30,
                  criterion_continuum);
    run_criterion(12, "CLI determinism and exit-code contract", 60, criterion_cli);

    if (g_failed == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria failed\n", g_failed);
    }
    return g_failed;
}
