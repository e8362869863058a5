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

#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "sincfrac/errors.hpp"
#include "sincfrac/quadrature.hpp"

namespace sincfrac {

/// Order of the sinc-kernel derivative together with its normalization.
///
/// The order lies in the open interval (0,1). The normalization defaults to
/// 1 for every order; a caller-supplied function may replace it, in which
/// case it is evaluated once at construction and must be positive.
class FracOrder {
public:
    using Normalization = std::function<double(double)>;

    explicit FracOrder(double varpi);
    FracOrder(double varpi, const Normalization& normalization);

    /// Constant normalization override.
    static FracOrder with_norm(double varpi, double norm);

    double varpi() const noexcept { return varpi_; }
    double norm() const noexcept { return norm_; }
    /// Kernel rate varpi / (1 - varpi).
    double rate() const noexcept { return rate_; }
    /// Kernel amplitude varpi * norm / (1 - varpi).
    double amplitude() const noexcept { return norm_ * rate_; }

private:
    double varpi_;
    double norm_;
    double rate_;
};

/// sin(pi x)/(pi x), exactly 1 at the origin.
double nsinc(double x);

/// Operator kernel at lag u: amplitude * nsinc(-rate * u).
double scaled_kernel(const FracOrder& ord, double u);

/// Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

/// Complementary error function.
double erfc_fn(double x);

namespace oracle {

/// Si(x) by adaptive Gauss-Kronrod quadrature of sin(t)/t, panels aligned
/// to the zeros of sin.
double sine_integral_quadrature(double x, double rel_tol = 1e-13);

/// erfc(x) by adaptive quadrature of (2/sqrt(pi)) exp(-t^2) on the shorter
/// of [0,x] (as 1 - erf) or [x, x+40].
double erfc_quadrature(double x, double rel_tol = 1e-14);

}  // namespace oracle

/// Result of a mollified delta evaluation; the window is recorded with it.
template <class Real = double>
struct MollifierResult {
    Real value{};
    Real error_bound{};
    Real window{};
};

/// (1/varpi) * int_{-window}^{window} phi(x) nsinc(x / varpi) dx.
///
/// Panels are aligned with the zeros of nsinc(x/varpi). The Real parameter
/// lets the same routine run beyond double precision when the phi(0)
/// defect is below double resolution.
template <class Real, class Phi>
MollifierResult<Real> mollifier_integral_t(Phi&& phi, const Real& varpi, const Real& window,
                                           const Real& rel_tol, const Real& abs_tol,
                                           int max_panels = 200000) {
    using std::sin;
    if (!(varpi > 0)) throw ConfigError("mollifier: varpi must be positive");
    if (!(window > 0)) throw ConfigError("mollifier: window must be positive");
    const Real pi = boost::math::constants::pi<Real>();

    auto integrand = [&](const Real& x) -> Real {
        const Real y = pi * x / varpi;
        using std::abs;
        const Real k = abs(y) < Real(1e-30) ? Real(1) : Real(sin(y) / y);
        return phi(x) * k / varpi;
    };

    // Zeros of the kernel sit at multiples of varpi.
    const Real ratio = window / varpi;
    const double cells = std::ceil(static_cast<double>(ratio));
    const int n = static_cast<int>(std::min(cells, 0.25 * max_panels));
    std::vector<Real> breaks = uniform_breaks<Real>(-window, window, std::max(2, 2 * n));
    auto r = integrate_panels<Real, Real>(integrand, std::span<const Real>(breaks), rel_tol, abs_tol,
                                          max_panels);
    return {r.value, r.error, window};
}

/// Double-precision mollifier for a scalar test function.
MollifierResult<double> mollifier_integral(const std::function<double(double)>& phi, double varpi,
                                           double window, double rel_tol = 1e-13,
                                           double abs_tol = 1e-15);

}  // namespace sincfrac
