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

#include "sincfrac/core_kernel.hpp"

#include <complex>
#include <limits>
#include <sstream>

namespace sincfrac {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        std::ostringstream msg;
        msg << what << ": argument must be finite (got " << x << ")";
        throw DomainError(msg.str());
    }
}

}  // namespace

FracOrder::FracOrder(double varpi) : FracOrder(varpi, Normalization{}) {}

FracOrder::FracOrder(double varpi, const Normalization& normalization) : varpi_(varpi) {
    if (!(varpi > 0.0 && varpi < 1.0)) {
        std::ostringstream msg;
        msg << "varpi must lie in open interval (0,1) (got " << varpi << ")";
        throw DomainError(msg.str());
    }
    norm_ = normalization ? normalization(varpi) : 1.0;
    if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
        std::ostringstream msg;
        msg << "normalization must be positive and finite (got " << norm_ << " at varpi=" << varpi
            << ")";
        throw DomainError(msg.str());
    }
    rate_ = varpi / (1.0 - varpi);
}

FracOrder FracOrder::with_norm(double varpi, double norm) {
    return FracOrder(varpi, [norm](double) { return norm; });
}

double nsinc(double x) {
    require_finite(x, "nsinc");
    const double y = kPi * std::abs(x);
    if (y < 1e-4) {
        // 1 - y^2/6 + y^4/120 - y^6/5040
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
    }
    return std::sin(y) / y;
}

double scaled_kernel(const FracOrder& ord, double u) {
    require_finite(u, "scaled_kernel");
    return ord.amplitude() * nsinc(-ord.rate() * u);
}

double sine_integral(double x) {
    require_finite(x, "sine_integral");
    const double t = std::abs(x);
    if (t == 0.0) return 0.0;
    double si;
    if (t <= 2.0) {
        // sum_k (-1)^k t^(2k+1) / ((2k+1) (2k+1)!)
        double term = t;
        double sum = t;
        const double t2 = t * t;
        for (int k = 1; k < 40; ++k) {
            term *= -t2 / ((2.0 * k) * (2.0 * k + 1.0));
            const double add = term / (2.0 * k + 1.0);
            sum += add;
            if (std::abs(add) < std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
        }
        si = sum;
    } else {
        // E1(i t) by the modified Lentz continued fraction; Si = pi/2 + Im(e^{-it}(...)).
        using C = std::complex<double>;
        constexpr double tiny = 1e-300;
        C b(1.0, t);
        C c(1.0 / tiny, 0.0);
        C d = 1.0 / b;
        C h = d;
        for (int i = 2; i < 200; ++i) {
            const double a = -static_cast<double>((i - 1) * (i - 1));
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            const C del = c * d;
            h *= del;
            if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
        }
        h *= C(std::cos(t), -std::sin(t));
        si = kPi / 2.0 + h.imag();
    }
    return x < 0.0 ? -si : si;
}

double erfc_fn(double x) { return std::erfc(x); }

namespace oracle {

double sine_integral_quadrature(double x, double rel_tol) {
    require_finite(x, "sine_integral_quadrature");
    const double t = std::abs(x);
    if (t == 0.0) return 0.0;
    auto f = [](double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; };
    std::vector<double> breaks{0.0};
    for (double z = kPi; z < t; z += kPi) breaks.push_back(z);
    breaks.push_back(t);
    auto r = integrate_panels<double, double>(f, std::span<const double>(breaks), rel_tol, 0.0,
                                              1 << 20);
    return x < 0.0 ? -r.value : r.value;
}

double erfc_quadrature(double x, double rel_tol) {
    require_finite(x, "erfc_quadrature");
    if (x < 0.0) return 2.0 - erfc_quadrature(-x, rel_tol);
    const double scale = 2.0 / std::sqrt(kPi);
    auto g = [scale](double t) { return scale * std::exp(-t * t); };
    if (x < 0.5) {
        const std::vector<double> breaks{0.0, x};
        if (x == 0.0) return 1.0;
        auto r = integrate_panels<double, double>(g, std::span<const double>(breaks), rel_tol, 0.0,
                                                  1 << 16);
        return 1.0 - r.value;
    }
    std::vector<double> breaks{x};
    for (double w = 0.125; w <= 32.0; w *= 2.0) breaks.push_back(x + w);
    auto r = integrate_panels<double, double>(g, std::span<const double>(breaks), rel_tol, 0.0,
                                              1 << 16);
    return r.value;
}

}  // namespace oracle

MollifierResult<double> mollifier_integral(const std::function<double(double)>& phi, double varpi,
                                           double window, double rel_tol, double abs_tol) {
    if (!(window > 0.0)) throw ConfigError("mollifier: window must be positive");
    return mollifier_integral_t<double>(phi, varpi, window, rel_tol, abs_tol);
}

}  // namespace sincfrac
