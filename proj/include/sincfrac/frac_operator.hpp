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

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sincfrac/core_kernel.hpp"
#include "sincfrac/quadrature.hpp"

namespace sincfrac {

/// Scalar operand with an optional analytic first derivative.
///
/// When the derivative is supplied it is checked against a central
/// difference (h = 1e-4) at the probe points; mismatches beyond 1e-4 (scaled
/// by max(1, |d1|)) are rejected. Without it, central differences with
/// fd_step are used.
class FunctionSpec {
public:
    using Fn = std::function<double(double)>;

    static constexpr std::array<double, 3> kDefaultProbes{0.1, 0.5, 0.9};

    explicit FunctionSpec(Fn f, std::optional<Fn> d1 = std::nullopt, double fd_step = 1e-5,
                          std::array<double, 3> probes = kDefaultProbes);

    double value(double x) const { return f_(x); }
    double derivative(double x) const;
    bool has_analytic_derivative() const noexcept { return d1_.has_value(); }
    double fd_step() const noexcept { return fd_step_; }
    const Fn& function() const noexcept { return f_; }

private:
    Fn f_;
    std::optional<Fn> d1_;
    double fd_step_;
};

/// (amplitude) * int_a^mu nsinc(-rate (mu - x)) f'(x) dx.
double frac_derivative(const FunctionSpec& fn, double a, double mu, const FracOrder& ord,
                       const QuadratureConfig& q = {});

/// Same as frac_derivative, also returning the quadrature error estimate.
QuadResult<double> frac_derivative_detail(const FunctionSpec& fn, double a, double mu,
                                          const FracOrder& ord, const QuadratureConfig& q = {});

/// n-th derivative in mu of frac_derivative, by second-order finite
/// differences of the full quadrature. A non-positive outer_step picks
/// rel_tol^(1/(n+2)).
double frac_derivative_higher(const FunctionSpec& fn, double a, double mu, int n,
                              const FracOrder& ord, const QuadratureConfig& q = {},
                              double outer_step = 0.0);

/// norm * Si(pi * rate * mu) / pi: the operator applied to x -> x from 0.
double linear_case_closed_form(double mu, const FracOrder& ord);

struct LimitProbeRow {
    double varpi;
    double value;
};

/// Operator values across a sequence of orders, next to the two candidate
/// endpoint limits f'(mu) and f(mu) - f(a). Diagnostic only.
struct LimitProbe {
    double reference_derivative;
    double reference_increment;
    std::vector<LimitProbeRow> rows;
};

LimitProbe limit_probe(const FunctionSpec& fn, double a, double mu,
                       const std::vector<double>& orders, const QuadratureConfig& q = {});

/// Breakpoints of [a, mu] used by frac_derivative for the given strategy.
std::vector<double> operator_panels(double a, double mu, double rate, const QuadratureConfig& q);

}  // namespace sincfrac
