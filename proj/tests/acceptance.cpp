/*
   Copyright 2026, the sincfrac authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance is
// pinned here; reference values come from oracles.hpp or from closed forms
// written out inline, never from the library path under test.
//
//   acceptance               run all criteria
//   acceptance --criterion N run one criterion (exit 0 iff it passes)

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "oracles.hpp"
#include "sincfrac/core_kernel.hpp"
#include "sincfrac/frac_operator.hpp"
#include "sincfrac/heat_models.hpp"
#include "sincfrac/inversion.hpp"
#include "sincfrac/transform_images.hpp"

#ifndef SINCFRAC_CLI_PATH
#define SINCFRAC_CLI_PATH "sincfrac"
#endif

using namespace sincfrac;
using oracle_ref::pi;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double erfc_ref(double x) {
    return x < 3.0 ? oracle_ref::erfc_series(x) : oracle_ref::erfc_continued_fraction(x);
}

// 1. Linear-case closed form over the (varpi, mu) cross product.
Verdict linear_closed_form() {
    constexpr double kTol = 1e-8;
    constexpr double kSeconds = 5.0;
    const FunctionSpec id([](double x) { return x; }, [](double) { return 1.0; });
    Clock clock;
    double worst = 0.0;
    for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double mu : {0.5, 1.0, 2.0}) {
            const double closed = oracle_ref::si_reference(pi * w / (1.0 - w) * mu) / pi;
            worst = std::max(worst, std::abs(frac_derivative(id, 0.0, mu, FracOrder(w)) - closed) / std::abs(closed));
        }
    }
    const double t = clock.seconds();
    return {worst <= kTol && t < kSeconds,
            "max rel err " + sci(worst) + " (tol " + sci(kTol) + "), " + sci(t) + " s (limit 5 s)"};
}

// 2. Forward Laplace of the computed operator against the closed-form image.
Verdict convolution_identity() {
    constexpr double kTol = 1e-6;
    constexpr double kSeconds = 60.0;
    struct Operand {
        const char* name;
        FunctionSpec::Fn f, d1;
        std::function<double(double)> F;
        double f0;
    };
    const std::vector<Operand> ops{
        {"x", [](double x) { return x; }, [](double) { return 1.0; }, [](double s) { return 1.0 / (s * s); }, 0.0},
        {"exp(-x)", [](double x) { return std::exp(-x); }, [](double x) { return -std::exp(-x); },
         [](double s) { return 1.0 / (s + 1.0); }, 1.0},
        {"sin x", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
         [](double s) { return 1.0 / (s * s + 1.0); }, 0.0},
    };
    QuadratureConfig inner;
    inner.rel_tol = 1e-12;
    inner.abs_tol = 1e-14;
    inner.max_panels = 20000;
    QuadratureConfig outer;
    outer.rel_tol = 1e-10;
    outer.abs_tol = 1e-14;
    outer.max_panels = 20000;
    Clock clock;
    double worst = 0.0;
    std::string where;
    for (const Operand& op : ops) {
        const FunctionSpec fn(op.f, op.d1);
        for (double w : {0.25, 0.5, 0.75}) {
            const FracOrder ord(w);
            const double c = w / (1.0 - w);
            auto D = [&](double mu) { return frac_derivative(fn, 0.0, mu, ord, inner); };
            for (double s : {1.0, 2.0, 5.0}) {
                const double numeric = numerical_laplace(D, s, laplace_truncation(s, 1.0, 1e-14), outer).value;
                const double closed = std::atan(pi * c / s) / pi * (s * op.F(s) - op.f0);
                const double rel = std::abs(numeric - closed) / std::abs(closed);
                if (rel > worst) {
                    worst = rel;
                    where = std::string(op.name) + ", varpi=" + sci(w) + ", s=" + sci(s);
                }
            }
        }
    }
    const double t = clock.seconds();
    return {worst <= kTol && t < kSeconds, "max rel err " + sci(worst) + " at " + where + " (tol " + sci(kTol) + "), " +
                                               sci(t) + " s (limit 60 s)"};
}

// 3. Forward Laplace of the kernel against arctan(pi c / s) / (pi c).
Verdict kernel_laplace() {
    constexpr double kTol = 1e-6;
    double worst = 0.0;
    for (double c : {1.0 / 3.0, 1.0, 3.0}) {
        const FracOrder ord(c / (1.0 + c));
        auto k = [c](double t) {
            const double y = pi * c * t;
            return y == 0.0 ? 1.0 : std::sin(y) / y;
        };
        for (double s : {1.0, 2.0, 5.0}) {
            const double closed = std::atan(pi * c / s) / (pi * c);
            const double numeric = numerical_laplace(k, s, laplace_truncation(s, 1.0, 1e-14)).value;
            worst = std::max(worst, std::abs(numeric - closed) / closed);
            worst = std::max(worst, std::abs(laplace_image_kernel(ord, s) - closed) / closed);
        }
    }
    return {worst <= kTol, "max rel err " + sci(worst) + " (tol " + sci(kTol) + ")"};
}

// 4. Stehfest exactness, accuracy and weight identities at N = 14.
Verdict stehfest() {
    constexpr double kExact = 1e-9;
    constexpr double kSmooth = 1e-5;
    constexpr double kWeights = 1e-9;
    Verdict v;
    std::ostringstream failures;
    auto fail = [&](const std::string& what, double err, double tol) {
        v.pass = false;
        failures << "; " << what << " err " << sci(err) << " > " << sci(tol);
    };
    const LaplaceImage one([](cdouble s) { return 1.0 / s; });
    const LaplaceImage ramp([](cdouble s) { return 1.0 / (s * s); });
    const LaplaceImage decay([](cdouble s) { return 1.0 / (s + 1.0); });
    const InversionConfig cfg{InversionMethod::stehfest, 14};
    double e_one = 0, e_ramp = 0, e_decay = 0;
    for (double t : {0.1, 1.0, 10.0}) {
        const double a = std::abs(laplace_invert(one, t, cfg) - 1.0);
        const double b = std::abs(laplace_invert(ramp, t, cfg) - t);
        const double c = std::abs(laplace_invert(decay, t, cfg) - std::exp(-t));
        e_one = std::max(e_one, a);
        e_ramp = std::max(e_ramp, b);
        e_decay = std::max(e_decay, c);
        if (a > kExact) fail("1/s at t=" + sci(t), a, kExact);
        if (b > kSmooth) fail("1/s^2 at t=" + sci(t), b, kSmooth);
        if (c > kSmooth) fail("1/(s+1) at t=" + sci(t), c, kSmooth);
    }
    double e_w = 0.0;
    for (int n : {8, 10, 12, 14, 16}) {
        const auto w = stehfest_weights(n);
        long double s0 = 0, s1 = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            s0 += w[k];
            s1 += w[k] / static_cast<long double>(k + 1);
        }
        const double e = std::max(std::abs(static_cast<double>(s0)), std::abs(static_cast<double>(s1 - 1.0L)));
        e_w = std::max(e_w, e);
        if (e > kWeights) fail("weight sums at N=" + std::to_string(n), e, kWeights);
    }
    std::ostringstream d;
    d << "1/s " << sci(e_one) << ", 1/s^2 " << sci(e_ramp) << ", 1/(s+1) " << sci(e_decay) << ", weight sums "
      << sci(e_w) << failures.str();
    v.detail = d.str();
    return v;
}

// 5. Classical pipeline against the erfc solution.
Verdict classical_pipeline() {
    constexpr double kTol = 1e-4;
    constexpr double kSeconds = 10.0;
    Clock clock;
    double worst = 0.0;
    for (double kappa : {0.5, 1.0}) {
        const DiffusionProblem p{kappa, std::nullopt, BoundarySpec::step(1.0), HeatModel::classical};
        GridSpec g{{}, {0.25, 1.0, 4.0}};
        for (int i = 0; i <= 40; ++i) g.mu.push_back(0.1 * i);
        const SolutionGrid s = solve(p, g);
        for (std::size_t i = 0; i < g.mu.size(); ++i) {
            for (std::size_t j = 0; j < g.tau.size(); ++j) {
                const double ref = erfc_ref(g.mu[i] / (2.0 * std::sqrt(kappa * g.tau[j])));
                worst = std::max(worst, std::abs(s.at(i, j) - ref));
            }
        }
    }
    const double t = clock.seconds();
    return {worst <= kTol && t < kSeconds,
            "max abs err " + sci(worst) + " (tol " + sci(kTol) + "), " + sci(t) + " s (limit 10 s)"};
}

// 6. Time-fractional boundary recovery at mu = 0.
Verdict boundary_recovery() {
    constexpr double kStep = 1e-6;
    constexpr double kRamp = 1e-5;
    double e_step = 0.0, e_ramp = 0.0;
    const GridSpec g{{0.0}, {0.1, 1.0, 10.0}};
    for (double w : {0.25, 0.5, 0.75}) {
        const DiffusionProblem step{1.0, FracOrder(w), BoundarySpec::step(1.0), HeatModel::time_fractional};
        const DiffusionProblem ramp{1.0, FracOrder(w), BoundarySpec::ramp(1.0), HeatModel::time_fractional};
        const SolutionGrid a = solve(step, g), b = solve(ramp, g);
        for (std::size_t j = 0; j < g.tau.size(); ++j) {
            e_step = std::max(e_step, std::abs(a.at(0, j) - 1.0));
            e_ramp = std::max(e_ramp, std::abs(b.at(0, j) - g.tau[j]));
        }
    }
    return {e_step <= kStep && e_ramp <= kRamp,
            "step err " + sci(e_step) + " (tol " + sci(kStep) + "), ramp err " + sci(e_ramp) + " (tol " + sci(kRamp) + ")"};
}

// 7. varpi = 0.99 against the classical solution with doubled diffusivity.
Verdict effective_diffusivity() {
    constexpr double kRel = 0.02;
    const double kappa = 1.0;
    const DiffusionProblem p{kappa, FracOrder(0.99), BoundarySpec::step(1.0), HeatModel::time_fractional};
    GridSpec g{{}, {1.0}};
    for (int i = 0; i <= 30; ++i) g.mu.push_back(0.5 + 0.05 * i);
    const SolutionGrid s = solve(p, g);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.mu.size(); ++i) {
        const double ref = erfc_ref(g.mu[i] / (2.0 * std::sqrt(2.0 * kappa * 1.0)));
        worst = std::max(worst, std::abs(s.at(i, 0) - ref) / ref);
    }
    return {worst <= kRel, "max rel diff " + sci(worst) + " over mu in [0.5,2] (tol " + sci(kRel) + ")"};
}

// 8. Double inversion of a mu-constant image, and the algebraic balance of
//    the space-fractional image.
Verdict spacefrac_pipeline() {
    constexpr double kInv = 1e-4;
    constexpr double kResidual = 1e-12;
    double e_inv = 0.0;
    struct Lambda {
        std::function<double(double)> image, original;
    };
    const std::vector<Lambda> lambdas{{[](double s) { return 1.0 / s; }, [](double) { return 1.0; }},
                                      {[](double s) { return 1.0 / (s * s); }, [](double t) { return t; }},
                                      {[](double s) { return 1.0 / (s + 1.0); }, [](double t) { return std::exp(-t); }}};
    for (const Lambda& l : lambdas) {
        const SumuduLaplaceImage img{[&l](double, double s) { return l.image(s); }, {}};
        for (double mu : {0.05, 0.5, 1.0, 2.0, 5.0}) {
            for (double tau : {0.5, 1.0, 2.0}) {
                const DoubleInversion r = double_invert(img, mu, tau);
                e_inv = std::max(e_inv, r.flag == PointFlag::ok ? std::abs(r.value - l.original(tau)) : INFINITY);
            }
        }
    }

    auto gen = oracle_ref::rng(44);
    std::uniform_real_distribution<double> lz(-3.0, 1.5), ls(-2.0, 2.0), uw(0.05, 0.95), uk(0.2, 3.0);
    double e_res = 0.0;
    int evaluated = 0, singular = 0;
    while (evaluated < 100) {
        const double zeta = std::pow(10.0, lz(gen)), s = std::pow(10.0, ls(gen));
        const double w = uw(gen), kappa = uk(gen);
        const DiffusionProblem p{kappa, FracOrder(w), BoundarySpec::step(1.0), HeatModel::space_fractional};
        double v;
        try {
            v = spacefrac_sumudu_solution(zeta, s, p);
        } catch (const SingularityError&) {
            ++singular;
            continue;
        }
        const double A = std::atan(pi * w / (1.0 - w) * zeta) / (pi * zeta * zeta);
        const double lam = 1.0 / s;
        const double scale = std::max({std::abs(A * v), std::abs(A * lam), std::abs(s * zeta / kappa * v)});
        e_res = std::max(e_res, std::abs(A * (v - lam) - s * zeta / kappa * v) / scale);
        ++evaluated;
    }
    return {e_inv <= kInv && e_res <= kResidual,
            "double inversion err " + sci(e_inv) + " (tol " + sci(kInv) + "), balance residual " + sci(e_res) +
                " (tol " + sci(kResidual) + ", " + std::to_string(evaluated) + " points, " + std::to_string(singular) +
                " singular skipped)"};
}

// 9. Mollified delta on a Gaussian.
Verdict mollifier() {
    constexpr double kTol = 1e-6;
    constexpr double kAnalytic = 1e-28;
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    const std::vector<double> orders{0.5, 0.25, 0.125};
    std::vector<double> quad_err, double_err;
    double analytic_gap = 0.0;
    for (double w : orders) {
        const auto q = mollifier_integral_t<Quad>([](const Quad& x) { return Quad(exp(-x * x)); }, Quad(w), Quad(12),
                                                  Quad(1e-32), Quad(1e-34));
        quad_err.push_back(static_cast<double>(abs(q.value - 1)));
        // For a Gaussian the band-limited integral is erf(pi / (2 varpi)).
        const Quad defect = boost::math::erfc(boost::math::constants::pi<Quad>() / (2 * Quad(w)));
        analytic_gap = std::max(analytic_gap, static_cast<double>(abs(abs(q.value - 1) - defect)));
        const auto d = mollifier_integral([](double x) { return std::exp(-x * x); }, w, 12.0);
        double_err.push_back(std::abs(d.value - 1.0));
    }
    const bool decreasing = quad_err[0] > quad_err[1] && quad_err[1] > quad_err[2];
    const bool small = quad_err[1] <= kTol;
    const bool analytic = analytic_gap <= kAnalytic;
    std::ostringstream d;
    d << "quad errors " << sci(quad_err[0]) << " > " << sci(quad_err[1]) << " > " << sci(quad_err[2])
      << " (tol at 0.25: " << sci(kTol) << "); gap to erfc(pi/(2 varpi)) " << sci(analytic_gap) << " (tol "
      << sci(kAnalytic) << "); double run " << sci(double_err[0]) << ", " << sci(double_err[1]) << ", "
      << sci(double_err[2]);
    return {decreasing && small && analytic, d.str()};
}

// 10. Sumudu and Laplace operator images under zeta = 1/s.
Verdict duality() {
    constexpr double kTol = 1e-9;
    auto gen = oracle_ref::rng(10);
    std::uniform_real_distribution<double> lz(-1.3, 1.3), uw(0.05, 0.95), un(0.5, 2.0), ua(0.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double zeta = std::pow(10.0, lz(gen)), w = uw(gen), alpha = ua(gen);
        const FracOrder ord = FracOrder::with_norm(w, un(gen));
        // f(x) = exp(-alpha x): F(s) = 1/(s + alpha), G(zeta) = 1/(1 + alpha zeta).
        const double s = 1.0 / zeta;
        const double lap = laplace_image_operator(1.0 / (s + alpha), 1.0, s, ord);
        const double sum = sumudu_image_operator(1.0 / (1.0 + alpha * zeta), 1.0, zeta, ord);
        // As written, the Sumudu operator image equals s^2 times the Laplace one.
        worst = std::max(worst, std::abs(sum - s * s * lap) / std::abs(sum));
    }
    return {worst <= kTol, "max rel diff " + sci(worst) + " at 50 random points (tol " + sci(kTol) + ")"};
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + SINCFRAC_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// 11. CLI determinism, exit codes and SVG well-formedness.
Verdict cli_contract() {
    const fs::path dir = fs::temp_directory_path() / "sincfrac_acceptance";
    fs::create_directories(dir);
    const fs::path a = dir / "a.csv", b = dir / "b.csv", svg = dir / "plot.svg";
    const std::string heat = "heat --model classical --boundary step:1 --kappa 1 --mu 0:4:0.1 --tau 0.25,1,4 --quiet --out ";
    const int ra = run_cli(heat + "\"" + a.string() + "\"");
    const int rb = run_cli(heat + "\"" + b.string() + "\"");
    const bool identical = ra == 0 && rb == 0 && !slurp(a).empty() && slurp(a) == slurp(b);

    const int ok = run_cli("invert --image one-over-s --t 1 --quiet");
    const int numeric = run_cli("heat --model space-fractional --varpi 0.5 --mu 0,0.5 --tau 1");
    const int config = run_cli("deriv --varpi 1.0");
    const bool codes = ok == 0 && numeric == 1 && config == 2;

    const int rs = run_cli("compare --varpi 0.25,0.5,0.75,0.99 --model time-fractional --mu 0:3:0.1 --tau 1 --format svg "
                           "--quiet --out \"" + svg.string() + "\"");
    bool well_formed = false;
    if (rs == 0) {
        try {
            boost::property_tree::ptree tree;
            boost::property_tree::read_xml(svg.string(), tree);
            well_formed = tree.get_child_optional("svg").has_value();
        } catch (const std::exception&) {
            well_formed = false;
        }
    }
    std::ostringstream d;
    d << "csv byte-identical " << (identical ? "yes" : "no") << "; exit codes " << ok << "/" << numeric << "/" << config
      << " (want 0/1/2); svg well-formed " << (well_formed ? "yes" : "no");
    return {identical && codes && well_formed, d.str()};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "linear-case closed form", linear_closed_form},
        {2, "Laplace convolution identity", convolution_identity},
        {3, "kernel Laplace image", kernel_laplace},
        {4, "Stehfest exactness and accuracy", stehfest},
        {5, "classical heat pipeline", classical_pipeline},
        {6, "time-fractional boundary recovery", boundary_recovery},
        {7, "effective-diffusivity limit", effective_diffusivity},
        {8, "space-fractional pipeline", spacefrac_pipeline},
        {9, "mollifier convergence", mollifier},
        {10, "Sumudu-Laplace duality", duality},
        {11, "CLI determinism and contract", cli_contract},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    bool all_pass = true;
    int ran = 0;
    for (const Criterion& c : all) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        all_pass = all_pass && v.pass;
        std::printf("criterion %2d %s  %-34s %s\n", c.id, v.pass ? "PASS" : "FAIL", c.title, v.detail.c_str());
        std::fflush(stdout);
    }
    if (ran == 0) {
        std::cerr << "no such criterion\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
