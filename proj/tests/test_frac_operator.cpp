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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sincfrac/frac_operator.hpp"

using namespace sincfrac;
using oracle_ref::pi;

namespace {

// Independent reference: the operator integral by fixed 30-point Gauss on
// panels of width at most a quarter kernel period.
double operator_reference(const std::function<double(double)>& d1, double a, double mu, double varpi,
                          double norm = 1.0) {
    const double c = varpi / (1.0 - varpi);
    const int n = std::max(4, static_cast<int>(std::ceil((mu - a) * c * 4.0)));
    auto k = [c, mu](double x) {
        const double y = pi * c * (mu - x);
        return y == 0.0 ? 1.0 : std::sin(y) / y;
    };
    return norm * c *
           oracle_ref::gauss_panels([&](double x) { return k(x) * d1(x); }, oracle_ref::linspace(a, mu, n));
}

const FunctionSpec identity([](double x) { return x; }, [](double) { return 1.0; });

}  // namespace

TEST_CASE("FunctionSpec validates its derivative and step") {
    CHECK_NOTHROW(FunctionSpec([](double x) { return x * x; }, [](double x) { return 2 * x; }));
    CHECK_THROWS_AS(FunctionSpec([](double x) { return x * x; }, [](double x) { return 3 * x; }), ConfigError);
    CHECK_THROWS_AS(FunctionSpec([](double x) { return x; }, std::nullopt, 0.0), ConfigError);
    CHECK_THROWS_AS(FunctionSpec([](double x) { return x; }, std::nullopt, 0.2), ConfigError);
    const FunctionSpec fd([](double x) { return std::sin(x); });
    CHECK_FALSE(fd.has_analytic_derivative());
    CHECK(fd.derivative(0.3) == doctest::Approx(std::cos(0.3)).epsilon(1e-9));
}

TEST_CASE("operator vanishes on constants and on an empty interval") {
    const FunctionSpec theta([](double) { return 4.2; }, [](double) { return 0.0; });
    const FunctionSpec theta_fd([](double) { return 4.2; });
    for (double w : {0.1, 0.5, 0.9}) {
        const FracOrder ord(w);
        CHECK(frac_derivative(theta, -1.0, 3.0, ord) == 0.0);
        CHECK(std::abs(frac_derivative(theta_fd, -1.0, 3.0, ord)) <= 1e-10);
        CHECK(frac_derivative(identity, 2.0, 2.0, ord) == 0.0);
    }
    CHECK_THROWS_AS(frac_derivative(identity, 1.0, 0.5, FracOrder(0.5)), DomainError);
}

TEST_CASE("linear case matches its closed form") {
    CHECK(linear_case_closed_form(1.0, FracOrder(0.5)) == doctest::Approx(0.589489872236084).epsilon(1e-12));
    CHECK(linear_case_closed_form(0.0, FracOrder(0.3)) == 0.0);
    CHECK(linear_case_closed_form(1e7, FracOrder(0.9)) == doctest::Approx(0.5).epsilon(1e-6));
    for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double mu : {0.5, 1.0, 2.0}) {
            const FracOrder ord(w);
            const double closed = oracle_ref::si_reference(pi * ord.rate() * mu) / pi;
            CAPTURE(w);
            CAPTURE(mu);
            CHECK(std::abs(frac_derivative(identity, 0.0, mu, ord) - closed) <= 1e-8 * std::abs(closed));
            CHECK(linear_case_closed_form(mu, ord) == doctest::Approx(closed).epsilon(1e-13));
        }
    }
}

TEST_CASE("operator against an independent fixed-panel reference") {
    struct Case {
        FunctionSpec::Fn f, d1;
    };
    const std::vector<Case> cases{
        {[](double x) { return std::exp(-x); }, [](double x) { return -std::exp(-x); }},
        {[](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }},
        {[](double x) { return x * x * x; }, [](double x) { return 3 * x * x; }},
    };
    for (const Case& c : cases) {
        const FunctionSpec fn(c.f, c.d1);
        for (double w : {0.2, 0.5, 0.85, 0.97}) {
            for (auto [a, mu] : {std::pair{0.0, 1.0}, std::pair{-0.5, 3.0}, std::pair{1.0, 7.5}}) {
                const double ref = operator_reference(c.d1, a, mu, w);
                CAPTURE(w);
                CAPTURE(mu);
                CHECK(frac_derivative(fn, a, mu, FracOrder(w)) == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
            }
        }
    }
}

TEST_CASE("finite-difference derivative path agrees with the analytic one") {
    const FunctionSpec analytic([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); });
    const FunctionSpec numeric([](double x) { return std::sin(x); });
    for (double w : {0.25, 0.75}) {
        const FracOrder ord(w);
        CHECK(frac_derivative(numeric, 0.0, 2.0, ord) ==
              doctest::Approx(frac_derivative(analytic, 0.0, 2.0, ord)).epsilon(1e-8));
    }
}

TEST_CASE("uniform panel strategy gives the same answer") {
    QuadratureConfig uq;
    uq.panel_strategy = PanelStrategy::uniform;
    for (double w : {0.3, 0.8}) {
        const FracOrder ord(w);
        CHECK(frac_derivative(identity, 0.0, 4.0, ord, uq) ==
              doctest::Approx(linear_case_closed_form(4.0, ord)).epsilon(1e-9));
    }
    const auto zeros = operator_panels(0.0, 4.0, 3.0, QuadratureConfig{});
    CHECK(zeros.size() == 13);
    CHECK(zeros.front() == 0.0);
    CHECK(zeros.back() == 4.0);
    CHECK(operator_panels(0.0, 1.0, 1.0, QuadratureConfig{}).size() == 9);  // fallback, 8 panels
}

TEST_CASE("linearity over random polynomial operands") {
    auto gen = oracle_ref::rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const FunctionSpec f([](double x) { return x * x - 0.5 * x; }, [](double x) { return 2 * x - 0.5; });
    const FunctionSpec g([](double x) { return x * x * x + 1; }, [](double x) { return 3 * x * x; });
    const QuadratureConfig q;
    for (int i = 0; i < 10; ++i) {
        const double al = coef(gen), be = coef(gen);
        const FunctionSpec h([&](double x) { return al * f.value(x) + be * g.value(x); },
                             [&](double x) { return al * f.derivative(x) + be * g.derivative(x); });
        const FracOrder ord(0.6);
        const double lhs = frac_derivative(h, 0.0, 2.5, ord, q);
        const double rhs = al * frac_derivative(f, 0.0, 2.5, ord, q) + be * frac_derivative(g, 0.0, 2.5, ord, q);
        CHECK(std::abs(lhs - rhs) <= 10.0 * std::max(q.abs_tol, q.rel_tol * std::abs(lhs)));
    }
}

TEST_CASE("translation structure and kernel bound") {
    for (double w : {0.2, 0.5, 0.8}) {
        const FracOrder ord(w);
        const double base = frac_derivative(identity, 0.4, 2.1, ord);
        CHECK(std::abs(frac_derivative(identity, 0.7, 2.4, ord) - base) <= 1e-9);
        const FunctionSpec sq([](double x) { return x * x; }, [](double x) { return 2 * x; });
        const double bound = ord.amplitude() * (3.0 - 0.0) * 6.0;
        CHECK(std::abs(frac_derivative(sq, 0.0, 3.0, ord)) <= bound);
    }
}

TEST_CASE("higher-order extension") {
    const FracOrder ord(0.5);
    CHECK(frac_derivative_higher(identity, 0.0, 1.3, 0, ord) == frac_derivative(identity, 0.0, 1.3, ord));
    CHECK_THROWS_AS(frac_derivative_higher(identity, 0.0, 1.0, -1, ord), DomainError);

    const FunctionSpec constant([](double) { return 2.0; }, [](double) { return 0.0; });
    CHECK(std::abs(frac_derivative_higher(constant, 0.0, 1.0, 1, ord)) <= 1e-8);

    // d/dmu of norm Si(pi c mu)/pi is norm c nsinc(c mu).
    for (double w : {0.5, 0.3, 0.7}) {
        const FracOrder o(w);
        for (double mu : {1.0, 0.37, 2.2, 0.001}) {
            const double expect = o.rate() * std::sin(pi * o.rate() * mu) / (pi * o.rate() * mu);
            CAPTURE(w);
            CAPTURE(mu);
            CHECK(frac_derivative_higher(identity, 0.0, mu, 1, o) == doctest::Approx(expect).epsilon(1e-5).scale(1.0));
        }
    }
    // Second derivative of the closed form.
    const double mu = 0.8, c = 1.0, y = pi * c * mu;
    const double d2 = c * (std::cos(y) * pi * c * y - std::sin(y) * pi * c) / (y * y) ;
    CHECK(frac_derivative_higher(identity, 0.0, mu, 2, ord) == doctest::Approx(d2).epsilon(1e-3).scale(1.0));
}

TEST_CASE("limit probe is diagnostic") {
    const std::vector<double> orders{0.01, 0.25, 0.5, 0.75, 0.99};
    const LimitProbe lin = limit_probe(identity, 0.0, 1.0, orders);
    CHECK(lin.reference_derivative == 1.0);
    CHECK(lin.reference_increment == 1.0);
    REQUIRE(lin.rows.size() == orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        CHECK(lin.rows[i].varpi == orders[i]);
        CHECK(lin.rows[i].value == doctest::Approx(linear_case_closed_form(1.0, FracOrder(orders[i]))).epsilon(1e-9));
    }
    // Small orders drive the operator to zero, away from both references.
    CHECK(lin.rows.front().value < 0.02);

    const FunctionSpec five([](double) { return 5.0; }, [](double) { return 0.0; });
    const LimitProbe c = limit_probe(five, 0.0, 1.0, orders);
    CHECK(c.reference_derivative == 0.0);
    CHECK(c.reference_increment == 0.0);
    for (const auto& r : c.rows) CHECK(r.value == 0.0);

    const FunctionSpec sq([](double x) { return x * x; }, [](double x) { return 2 * x; });
    const LimitProbe s = limit_probe(sq, 0.0, 1.0, orders);
    CHECK(s.reference_derivative == 2.0);
    CHECK(s.reference_increment == 1.0);
    for (const auto& r : s.rows) {
        CHECK(r.value == doctest::Approx(operator_reference([](double x) { return 2 * x; }, 0.0, 1.0, r.varpi)).epsilon(1e-9));
    }
}

TEST_CASE("quadrature budget exhaustion is reported") {
    QuadratureConfig tight;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 1e-300;
    tight.max_panels = 16;
    const FunctionSpec rough([](double x) { return std::sqrt(std::abs(x - 0.5)); },
                             [](double x) { return x == 0.5 ? 0.0 : (x > 0.5 ? 0.5 : -0.5) / std::sqrt(std::abs(x - 0.5)); },
                             1e-5, {0.1, 0.2, 0.9});
    try {
        (void)frac_derivative(rough, 0.0, 1.0, FracOrder(0.5), tight);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}
