// Acceptance suite: one criterion per section, one pass/fail line each.
// Criterion 10 drives the installed CLI binary (path given as argv[1])
// and compares two runs byte for byte. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncr/crossratio.hpp"
#include "ncr/formal_symbols.hpp"
#include "ncr/fourier.hpp"
#include "ncr/measure.hpp"
#include "ncr/sampling.hpp"

using namespace ncr;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, const std::string& name, bool ok, double elapsed_ms,
            const std::string& detail = "") {
    std::printf("criterion %2d | %-52s | %s | %9.2f ms%s\n", criterion, name.c_str(),
                ok ? "PASS" : "FAIL", elapsed_ms, detail.empty() ? "" : (" | " + detail).c_str());
    if (!ok)
        ++failures;
}

template <class Fn>
double timed_ms(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

using MQ = Matrix<Rational>;
using SQ = Subspace<Rational>;
using PairQ = SplittingPair<Rational>;

PairQ theta_pair(const Rational& t) {
    const SQ v1 = SQ::column_space(MQ{{Rational(1)}, {Rational(0)}});
    const SQ w1 = SQ::column_space(MQ{{Rational(0)}, {Rational(1)}});
    const SQ v2 = SQ::column_space(MQ{{Rational(1)}, {t}});
    const SQ w2 = SQ::column_space(MQ{{-t}, {Rational(1)}});
    return PairQ{Splitting<Rational>(v1, w1), Splitting<Rational>(v2, w2)};
}

// ---------------------------------------------------------------- 1
void criterion_theta_family() {
    for (const Rational& t : {Rational(1), Rational(1, 2), Rational(2), Rational(3, 5)}) {
        bool ok = false;
        const double ms = timed_ms([&] {
            const MQ td = tilde_dv(theta_pair(t));
            ok = td == (Rational(1) + t * t) * MQ::identity(2);
            if (t == 1)
                ok = ok && td == Rational(2) * MQ::identity(2);
        });
        report(1, "theta family: tilde_dv = (1+t^2)·Id at t = " + format_rational(t),
               ok && ms < 1.0, ms);
    }
}

// ---------------------------------------------------------------- 2
void criterion_identity_degeneration() {
    Sampler sampler(9002);
    bool ok = true;
    const double ms = timed_ms([&] {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = static_cast<std::size_t>(sampler.uniform(2, 8));
            const std::size_t k = static_cast<std::size_t>(sampler.uniform(1, static_cast<long>(n - 1)));
            PairOptions opt;
            if (trial % 2 == 0)
                opt.force_v_equal = true;
            else
                opt.force_w_equal = true;
            const auto pair = sampler.admissible_pair<Rational>(n, k, opt);
            ok = ok && tilde_dv(pair) == MQ::identity(n);
        }
    });
    report(2, "V1=V2 or W1=W2 gives tilde_dv = Id (100 pairs)", ok && ms < 1000.0, ms);
}

// ---------------------------------------------------------------- 3, 4
void criterion_dv_inverse_and_xi() {
    Sampler sampler(9003);
    std::vector<PairQ> pairs;
    pairs.reserve(500);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = static_cast<std::size_t>(sampler.uniform(2, 8));
        const std::size_t k = static_cast<std::size_t>(sampler.uniform(1, static_cast<long>(n - 1)));
        pairs.push_back(sampler.admissible_pair<Rational>(n, k));
    }

    bool inverse_ok = true;
    const double inverse_ms = timed_ms([&] {
        for (const auto& pair : pairs) {
            const auto fwd = dv(pair);
            const auto bwd = dv(tilde_j(pair));
            inverse_ok = inverse_ok && fwd.mat * bwd.mat == MQ::identity(fwd.mat.rows());
        }
    });
    report(3, "dv(pair)·dv(tilde_j(pair)) = Id_V1 (500 pairs)", inverse_ok && inverse_ms < 5000.0,
           inverse_ms);

    bool xi_ok = true;
    const double xi_ms = timed_ms([&] {
        for (const auto& pair : pairs) {
            const MQ x = xi(pair);
            xi_ok = xi_ok && x * pair.first.v().basis() == pair.first.v().basis();
            xi_ok = xi_ok && is_invertible(x);
            const auto moved = xi_move(pair.first.v(), pair, pair.first.w());
            xi_ok = xi_ok && is_splitting(pair.first.v(), moved);
        }
    });
    report(4, "xi fixes V1, invertible, xi_move complements (500)", xi_ok && xi_ms < 5000.0, xi_ms);
}

// ---------------------------------------------------------------- 5
void criterion_grading() {
    Sampler sampler(9005);
    bool ok = true;
    const double ms = timed_ms([&] {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = static_cast<std::size_t>(sampler.uniform(2, 6));
            const std::size_t k = static_cast<std::size_t>(sampler.uniform(0, static_cast<long>(n)));
            const MQ s = sampler.symmetry<Rational>(n, k);
            const MQ a = sampler.matrix<Rational>(n, n, 2);
            const MQ b = sampler.matrix<Rational>(n, n, 2);
            const MQ ab = a * b;
            ok = ok && pi_tangent(s, ab) == pi_tangent(s, a) * pi_normal(s, b) +
                                                pi_normal(s, a) * pi_tangent(s, b);
            ok = ok && pi_normal(s, ab) == pi_tangent(s, a) * pi_tangent(s, b) +
                                               pi_normal(s, a) * pi_normal(s, b);
            const MQ id = MQ::identity(n);
            ok = ok && is_tangent(s, a) == ((a + s) * (a + s) == a * a + id);
            ok = ok && is_normal(s, a) == ((a + s) * (a - s) == a * a - id);
        }
    });
    report(5, "grading identities + membership criteria (200)", ok, ms);
}

// ---------------------------------------------------------------- 6
void criterion_fourier() {
    using F = GaussianRational;
    using MF = Matrix<F>;
    bool ok = true;
    double total_ms = 0.0;
    for (const int N : {1, 2, 4, 8}) {
        total_ms += timed_ms([&] {
            const fourier::Model<F> model(N);
            const auto pair = fourier::h1_h2_pair(model);
            ok = ok && is_admissible(pair);
            ok = ok && tilde_dv(pair) == MF::identity(model.ambient_dim());
        });
    }
    Sampler sampler(9006);
    total_ms += timed_ms([&] {
        const fourier::Model<F> model(4);
        const MF eps = model.epsilon();
        const std::size_t dim = model.ambient_dim();
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const MF a = sampler.matrix<F>(dim, dim, 2);
            const MF tangent = pi_tangent(eps, a);
            const MF normal = pi_normal(eps, a);
            for (std::size_t i = 0; i < dim && ok; ++i)
                for (std::size_t j = 0; j < dim && ok; ++j) {
                    const bool same = (i >= 4) == (j >= 4);
                    ok = ok && tangent(i, j) == (same ? F(0) : a(i, j));
                    ok = ok && normal(i, j) == (same ? a(i, j) : F(0));
                }
        }
    });
    report(6, "fourier: admissible, tilde_dv = Id, block forms", ok && total_ms < 10000.0,
           total_ms);
}

// ---------------------------------------------------------------- 7
void criterion_symbols() {
    using F = GaussianRational;
    using MF = Matrix<F>;
    bool ok = true;
    double total_ms = 0.0;
    for (const symbols::SymbolSpace sp :
         {symbols::SymbolSpace(-1, 1, 1), symbols::SymbolSpace(0, 0, 2),
          symbols::SymbolSpace(-2, 2, 1)}) {
        total_ms += timed_ms([&] {
            const MF td = symbols::cross_ratio_theorem_check<F>(sp);
            ok = ok && td == F(2) * MF::identity(sp.dim());
            ok = ok && symbols::image_phi_lambda_mu<F>(sp, F(1), F(1)) == symbols::subspace_odd<F>(sp);
            ok = ok && symbols::image_phi_epsilon_lambda<F>(sp, F(1)) == symbols::subspace_even<F>(sp);
        });
    }
    report(7, "symbols: admissible, tilde_dv = 2·Id, Phi images", ok && total_ms < 30000.0,
           total_ms);
}

// ---------------------------------------------------------------- 8
void criterion_measures() {
    bool ok = true;
    const double ms = timed_ms([&] {
        for (const std::size_t n : {std::size_t(2), std::size_t(3), std::size_t(4)}) {
            const auto parts = measures::all_partitions(n);
            for (const std::size_t m : {std::size_t(1), std::size_t(2)})
                for (const auto& p1 : parts)
                    for (const auto& p2 : parts)
                        ok = ok && measures::no_go_check<Rational>(p1, p2, m) == (p1 == p2);
        }
        Sampler sampler(9008);
        for (int trial = 0; trial < 1000; ++trial) {
            measures::SignedMeasure<Rational> mu;
            std::vector<Rational> f;
            for (int i = 0; i < 4; ++i) {
                mu.weights.push_back(sampler.small_scalar<Rational>(4));
                f.push_back(sampler.small_scalar<Rational>(5));
            }
            const auto [plus, minus] = measures::jordan(mu);
            for (std::size_t i = 0; i < mu.size(); ++i) {
                ok = ok && plus.weights[i] >= 0 && minus.weights[i] >= 0;
                ok = ok && plus.weights[i] - minus.weights[i] == mu.weights[i];
                ok = ok && (plus.weights[i] == 0 || minus.weights[i] == 0);
            }
            for (const auto& part : measures::valid_partitions(mu))
                ok = ok && measures::pairing_identity_check(mu, part, f);
        }
    });
    report(8, "measures: no-go exhaustive, jordan + pairing (1000)", ok && ms < 10000.0, ms);
}

// ---------------------------------------------------------------- 9
void criterion_smoothness_proxy() {
    using MC = Matrix<Complex>;
    using SC = Subspace<Complex>;
    auto lambda_of = [](double theta) {
        const double t = std::tan(theta);
        const SC v1 = SC::column_space(MC{{Complex(1.0)}, {Complex(0.0)}});
        const SC w1 = SC::column_space(MC{{Complex(0.0)}, {Complex(1.0)}});
        const SC v2 = SC::column_space(MC{{Complex(1.0)}, {Complex(t)}});
        const SC w2 = SC::column_space(MC{{Complex(-t)}, {Complex(1.0)}});
        const SplittingPair<Complex> pair{Splitting<Complex>(v1, w1), Splitting<Complex>(v2, w2)};
        return tilde_dv(pair)(0, 0).real();
    };
    const double h = 1e-4;
    bool ok = true;
    double worst = 0.0;
    const double ms = timed_ms([&] {
        for (const double theta : {0.2, 0.5, 1.0}) {
            const double derivative = (lambda_of(theta + h) - lambda_of(theta - h)) / (2 * h);
            const double expected = 2.0 * std::tan(theta) / (std::cos(theta) * std::cos(theta));
            worst = std::max(worst, std::abs(derivative - expected));
            ok = ok && std::abs(derivative - expected) < 1e-6;
        }
    });
    std::ostringstream detail;
    detail << "max |Δ| = " << worst;
    report(9, "smoothness proxy: d/dθ of λ(θ) via central difference", ok, ms, detail.str());
}

// ---------------------------------------------------------------- 10
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_cli_determinism(const std::string& cli) {
    struct Run {
        std::string name;
        std::string args;
    };
    const std::vector<Run> runs = {
        {"demo fourier", "demo fourier --n 8 --seed 42"},
        {"demo symbols", "demo symbols --dmin -2 --dmax 2 --fourier-m 1"},
        {"demo measures", "demo measures --points 4 --value-dim 2 --seed 42"},
    };
    for (const auto& run : runs) {
        bool ok = true;
        std::string detail;
        const double ms = timed_ms([&] {
            const std::string out1 = "acceptance_cli_1.json";
            const std::string out2 = "acceptance_cli_2.json";
            const std::string cmd1 = cli + " " + run.args + " --output " + out1;
            const std::string cmd2 = cli + " " + run.args + " --output " + out2;
            const int rc1 = std::system(cmd1.c_str());
            const int rc2 = std::system(cmd2.c_str());
            const std::string b1 = slurp(out1);
            const std::string b2 = slurp(out2);
            ok = rc1 == 0 && rc2 == 0 && !b1.empty() && b1 == b2;
            if (rc1 != 0 || rc2 != 0)
                detail = "nonzero exit status";
            else if (b1 != b2)
                detail = "outputs differ between runs";
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        });
        report(10, "CLI determinism: " + run.name, ok, ms, detail);
    }
}

} // namespace

int main(int argc, char** argv) {
    criterion_theta_family();
    criterion_identity_degeneration();
    criterion_dv_inverse_and_xi();
    criterion_grading();
    criterion_fourier();
    criterion_symbols();
    criterion_measures();
    criterion_smoothness_proxy();
    if (argc > 1) {
        criterion_cli_determinism(argv[1]);
    } else {
        report(10, "CLI determinism", false, 0.0, "no CLI path given on the command line");
    }
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                failures, failures == 1 ? "" : "s");
    return failures;
}
