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

#include "sincfrac/frac_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sincfrac {

FunctionSpec::FunctionSpec(Fn f, std::optional<Fn> d1, double fd_step, std::array<double, 3> probes)
    : f_(std::move(f)), d1_(std::move(d1)), fd_step_(fd_step) {
    if (!f_) throw ConfigError("FunctionSpec: function is empty");
    if (!(fd_step > 0.0 && fd_step <= 0.1)) {
        std::ostringstream msg;
        msg << "fd_step must lie in (0, 0.1] (got " << fd_step << ")";
        throw ConfigError(msg.str());
    }
    if (d1_) {
        if (!*d1_) throw ConfigError("FunctionSpec: derivative is empty");
        constexpr double h = 1e-4;
        for (double x : probes) {
            const double analytic = (*d1_)(x);
            const double central = (f_(x + h) - f_(x - h)) / (2.0 * h);
            if (std::abs(analytic - central) > 1e-4 * std::max(1.0, std::abs(analytic))) {
                std::ostringstream msg;
                msg << "FunctionSpec: analytic derivative disagrees with central difference at x="
                    << x << " (" << analytic << " vs " << central << ")";
                throw ConfigError(msg.str());
            }
        }
    }
}

double FunctionSpec::derivative(double x) const {
    if (d1_) return (*d1_)(x);
    return (f_(x + fd_step_) - f_(x - fd_step_)) / (2.0 * fd_step_);
}

std::vector<double> operator_panels(double a, double mu, double rate, const QuadratureConfig& q) {
    const double span = mu - a;
    // Kernel zeros sit at x = mu - k / rate, k = 1, 2, ...
    const double zeros_inside = std::ceil(rate * span) - 1.0;
    if (q.panel_strategy == PanelStrategy::kernel_zeros && zeros_inside >= 4.0) {
        const double budget = std::max(1.0, 0.5 * q.max_panels);
        const long long stride =
            std::max<long long>(1, static_cast<long long>(std::ceil(zeros_inside / budget)));
        std::vector<double> breaks{mu};
        for (long long k = stride;; k += stride) {
            const double x = mu - static_cast<double>(k) / rate;
            if (x <= a) break;
            breaks.push_back(x);
        }
        breaks.push_back(a);
        std::reverse(breaks.begin(), breaks.end());
        return breaks;
    }
    return uniform_breaks(a, mu, 8);
}

QuadResult<double> frac_derivative_detail(const FunctionSpec& fn, double a, double mu,
                                          const FracOrder& ord, const QuadratureConfig& q) {
    if (!std::isfinite(a) || !std::isfinite(mu)) throw DomainError("frac_derivative: a and mu must be finite");
    if (a > mu) {
        std::ostringstream msg;
        msg << "frac_derivative: lower limit a=" << a << " exceeds mu=" << mu;
        throw DomainError(msg.str());
    }
    q.validate();
    if (a == mu) return {};

    const double rate = ord.rate();
    auto integrand = [&](double x) { return nsinc(-rate * (mu - x)) * fn.derivative(x); };
    const std::vector<double> breaks = operator_panels(a, mu, rate, q);

    // The amplitude is applied after integration, so tolerances scale with it.
    const double amp = ord.amplitude();
    QuadratureConfig inner = q;
    inner.abs_tol = q.abs_tol / amp;
    auto r = integrate_panels<double>(integrand, std::span<const double>(breaks), inner);
    r.value *= amp;
    r.error *= amp;
    return r;
}

double frac_derivative(const FunctionSpec& fn, double a, double mu, const FracOrder& ord,
                       const QuadratureConfig& q) {
    return frac_derivative_detail(fn, a, mu, ord, q).value;
}

double frac_derivative_higher(const FunctionSpec& fn, double a, double mu, int n,
                              const FracOrder& ord, const QuadratureConfig& q, double outer_step) {
    if (n < 0) {
        std::ostringstream msg;
        msg << "frac_derivative_higher: integer order n must be >= 0 (got " << n << ")";
        throw DomainError(msg.str());
    }
    if (a > mu) throw DomainError("frac_derivative_higher: a exceeds mu");
    q.validate();
    if (n == 0) return frac_derivative(fn, a, mu, ord, q);

    const double h = outer_step > 0.0 ? outer_step : std::pow(q.rel_tol, 1.0 / (n + 2));
    auto D = [&](double m) { return frac_derivative(fn, a, m, ord, q); };

    std::vector<double> binom(static_cast<std::size_t>(n) + 1, 1.0);
    for (int j = 1; j <= n; ++j) binom[j] = binom[j - 1] * (n - j + 1) / j;

    if (mu - 0.5 * n * h >= a) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom[j] * D(mu + (0.5 * n - j) * h);
        }
        return acc / std::pow(h, n);
    }

    // Too close to the lower limit for a centred stencil: forward
    // differences, Richardson-extrapolated to second order.
    auto forward = [&](double step) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom[j] * D(mu + j * step);
        }
        return acc / std::pow(step, n);
    };
    return 2.0 * forward(0.5 * h) - forward(h);
}

double linear_case_closed_form(double mu, const FracOrder& ord) {
    if (!(mu >= 0.0)) throw DomainError("linear_case_closed_form: mu must be >= 0");
    return ord.norm() * sine_integral(std::numbers::pi * ord.rate() * mu) / std::numbers::pi;
}

LimitProbe limit_probe(const FunctionSpec& fn, double a, double mu, const std::vector<double>& orders,
                       const QuadratureConfig& q) {
    LimitProbe probe{fn.derivative(mu), fn.value(mu) - fn.value(a), {}};
    probe.rows.reserve(orders.size());
    for (double w : orders) {
        const FracOrder ord(w);
        probe.rows.push_back({w, frac_derivative(fn, a, mu, ord, q)});
    }
    return probe;
}

}  // namespace sincfrac
