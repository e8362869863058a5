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

// Globally adaptive Gauss-Kronrod (7/15) quadrature over a set of initial
// panels. Templated on the abscissa type so the same routine runs in double
// and in extended/quad precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sincfrac/errors.hpp"

namespace sincfrac {

enum class PanelStrategy { kernel_zeros, uniform };

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_panels = 4096;
    PanelStrategy panel_strategy = PanelStrategy::kernel_zeros;

    /// Throws ConfigError when a field breaks its invariant.
    void validate() const;
};

template <class Value, class Real = double>
struct QuadResult {
    Value value{};
    Real error{};
    int panels = 0;
};

namespace detail {

template <class Real>
Real to_real_magnitude(const Real& v) {
    using std::abs;
    return abs(v);
}

template <class Real>
Real to_real_magnitude(const std::complex<Real>& v) {
    return std::abs(v);
}

template <class Value, class Real>
struct Panel {
    Real lo;
    Real hi;
    Value value;
    Real error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// One Gauss-Kronrod 7/15 application; error is |K15 - G7|.
template <class Value, class Real, class F>
Panel<Value, Real> gk15(F& f, Real lo, Real hi) {
    using rule = boost::math::quadrature::gauss_kronrod<Real, 15>;
    const auto& x = rule::abscissa();
    const auto& wk = rule::weights();
    const auto& wg = boost::math::quadrature::gauss<Real, 7>::weights();
    const Real half = (hi - lo) / 2;
    const Real mid = lo + half;

    const Value fc = f(mid);
    Value kronrod = fc * wk[0];
    Value gauss = fc * wg[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        const Real dx = half * x[i];
        const Value fsum = f(mid - dx) + f(mid + dx);
        kronrod += fsum * wk[i];
        if (i % 2 == 0) gauss += fsum * wg[i / 2];
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, to_real_magnitude<Real>(Value(kronrod - gauss))};
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the
/// panels delimited by `breaks` and bisecting the worst panel until the
/// summed error estimate meets max(abs_tol, rel_tol*|I|). Throws
/// NumericError (with the achieved estimate and bound) when max_panels is
/// exhausted first.
template <class Value, class Real, class F>
QuadResult<Value, Real> integrate_panels(F&& f, std::span<const Real> breaks, const Real& rel_tol,
                                         const Real& abs_tol, int max_panels) {
    using P = detail::Panel<Value, Real>;
    QuadResult<Value, Real> out;
    if (breaks.size() < 2) return out;

    std::priority_queue<P> work;
    Value total{};
    Real total_err{};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        P p = detail::gk15<Value, Real>(f, breaks[i], breaks[i + 1]);
        total += p.value;
        total_err += p.error;
        work.push(p);
    }
    int panels = static_cast<int>(work.size());

    auto target = [&]() {
        const Real rel = rel_tol * detail::to_real_magnitude<Real>(total);
        return rel > abs_tol ? rel : abs_tol;
    };

    while (!work.empty() && total_err > target()) {
        if (panels >= max_panels) {
            std::ostringstream msg;
            msg << "quadrature did not converge within " << max_panels << " panels (error estimate "
                << static_cast<double>(total_err) << ")";
            throw NumericError(msg.str(), static_cast<double>(detail::to_real_magnitude<Real>(total)),
                               static_cast<double>(total_err));
        }
        P worst = work.top();
        work.pop();
        const Real mid = worst.lo + (worst.hi - worst.lo) / 2;
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Panel collapsed to adjacent floating-point numbers.
            work.push(worst);
            break;
        }
        P left = detail::gk15<Value, Real>(f, worst.lo, mid);
        P right = detail::gk15<Value, Real>(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
        ++panels;
    }

    // Re-sum from the panel list so the running update does not leak
    // cancellation error into the result.
    Value sum{};
    Real err{};
    std::vector<P> all;
    all.reserve(work.size());
    while (!work.empty()) {
        all.push_back(work.top());
        work.pop();
    }
    std::sort(all.begin(), all.end(), [](const P& a, const P& b) { return a.lo < b.lo; });
    for (const P& p : all) {
        sum += p.value;
        err += p.error;
    }
    out.value = sum;
    out.error = err;
    out.panels = panels;
    return out;
}

/// Convenience overload for double abscissae and a QuadratureConfig.
template <class Value = double, class F>
QuadResult<Value> integrate_panels(F&& f, std::span<const double> breaks, const QuadratureConfig& q) {
    return integrate_panels<Value, double>(std::forward<F>(f), breaks, q.rel_tol, q.abs_tol,
                                           q.max_panels);
}

/// Evenly spaced breakpoints lo = b_0 < ... < b_n = hi.
template <class Real>
std::vector<Real> uniform_breaks(Real lo, Real hi, int n) {
    std::vector<Real> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) b.push_back(lo + (hi - lo) * Real(i) / Real(n));
    b.back() = hi;
    return b;
}

}  // namespace sincfrac
