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

#include "sincfrac/transform_images.hpp"

#include <cmath>
#include <numbers>
#include <algorithm>
#include <sstream>
#include <tuple>

namespace sincfrac {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

void require_right_half_plane(double re_s, const char* what) {
    if (!(re_s > 0.0)) {
        std::ostringstream msg;
        msg << what << ": Re(s) must be positive (got " << re_s << ")";
        throw DomainError(msg.str());
    }
}

void require_positive_zeta(double zeta, const char* what) {
    if (!(zeta > 0.0)) {
        std::ostringstream msg;
        msg << what << ": zeta must be positive (got " << zeta << ")";
        throw DomainError(msg.str());
    }
}

// Heaviside with H(0) = 1/2.
double heaviside(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? 0.0 : 0.5); }

double cutoff_step(const FracOrder& ord, double xi, FourierMode mode) {
    const double edge = kPi * ord.rate();
    return mode == FourierMode::as_paper ? heaviside(edge + std::abs(xi))
                                         : heaviside(edge - std::abs(xi));
}

// arctan(y)/y, finite at y = 0.
double atan_ratio(double y) {
    if (std::abs(y) < 1e-8) return 1.0 - y * y / 3.0;
    return std::atan(y) / y;
}

}  // namespace

LaplaceImage LaplaceImage::from_real(RealFn fn) {
    LaplaceImage img;
    img.real_ = std::move(fn);
    return img;
}

double LaplaceImage::operator()(double s) const {
    if (real_) return real_(s);
    if (complex_) return complex_(cdouble(s, 0.0)).real();
    throw ConfigError("LaplaceImage: empty image");
}

cdouble LaplaceImage::operator()(cdouble s) const {
    if (complex_) return complex_(s);
    if (real_) {
        if (s.imag() != 0.0) {
            std::ostringstream msg;
            msg << "LaplaceImage: real-only image evaluated at complex s=" << s;
            throw DomainError(msg.str());
        }
        return {real_(s.real()), 0.0};
    }
    throw ConfigError("LaplaceImage: empty image");
}

double fourier_image_kernel(const FracOrder& ord, double xi, FourierMode mode) {
    if (!std::isfinite(xi)) throw DomainError("fourier_image_kernel: xi must be finite");
    return kInvSqrt2Pi * (1.0 - ord.varpi()) / ord.varpi() * cutoff_step(ord, xi, mode);
}

cdouble fourier_image_operator(const FourierImage& pi_hat, double xi, const FracOrder& ord,
                               FourierMode mode) {
    if (!std::isfinite(xi)) throw DomainError("fourier_image_operator: xi must be finite");
    const double scale = kInvSqrt2Pi * ord.norm() * cutoff_step(ord, xi, mode);
    return cdouble(0.0, xi) * scale * pi_hat(xi);
}

double laplace_image_kernel(const FracOrder& ord, double s) {
    require_right_half_plane(s, "laplace_image_kernel");
    const double w = kPi * ord.rate();
    return std::atan(w / s) / w;
}

cdouble laplace_image_kernel(const FracOrder& ord, cdouble s) {
    require_right_half_plane(s.real(), "laplace_image_kernel");
    const double w = kPi * ord.rate();
    return std::atan(w / s) / w;
}

double laplace_image_operator(double pi_s, double pi_0, double s, const FracOrder& ord) {
    require_right_half_plane(s, "laplace_image_operator");
    const double w = kPi * ord.rate();
    return ord.norm() / kPi * std::atan(w / s) * (s * pi_s - pi_0);
}

cdouble laplace_image_operator(cdouble pi_s, cdouble pi_0, cdouble s, const FracOrder& ord) {
    require_right_half_plane(s.real(), "laplace_image_operator");
    const double w = kPi * ord.rate();
    return ord.norm() / kPi * std::atan(w / s) * (s * pi_s - pi_0);
}

double sumudu_image_kernel(const FracOrder& ord, double zeta) {
    require_positive_zeta(zeta, "sumudu_image_kernel");
    return atan_ratio(kPi * ord.rate() * zeta);
}

double sumudu_image_operator(double pi_zeta, double pi_0, double zeta, const FracOrder& ord) {
    require_positive_zeta(zeta, "sumudu_image_operator");
    const double w = kPi * ord.rate();
    return ord.norm() / (kPi * zeta) * std::atan(w * zeta) * (pi_zeta - pi_0) / zeta;
}

double laplace_truncation(double s, double magnitude, double abs_tol) {
    require_right_half_plane(s, "laplace_truncation");
    const double m = std::max(std::abs(magnitude), 1e-300);
    const double logs = std::log(10.0 * m / abs_tol);
    // 1.5x margin absorbs polynomial growth of the original.
    return std::max(1.0, 1.5 * logs / s);
}

namespace {

template <class S>
auto laplace_quadrature(const std::function<double(double)>& fn, S s, double t_max,
                        const QuadratureConfig& q) {
    using V = S;
    if (!(t_max > 0.0)) {
        std::ostringstream msg;
        msg << "numerical_laplace: t_max must be positive (got " << t_max << ")";
        throw ConfigError(msg.str());
    }
    q.validate();
    const int n = static_cast<int>(std::min<double>(std::ceil(t_max), std::max(1, q.max_panels / 4)));
    const std::vector<double> breaks = uniform_breaks(0.0, t_max, std::max(1, n));
    auto integrand = [&](double t) -> V { return std::exp(-s * t) * fn(t); };
    auto r = integrate_panels<V>(integrand, std::span<const double>(breaks), q);
    const double tail = std::abs(fn(t_max)) * std::exp(-std::real(s) * t_max) / std::real(s);
    return std::make_tuple(r.value, r.error, tail);
}

}  // namespace

LaplaceEstimate numerical_laplace(const std::function<double(double)>& fn, double s, double t_max,
                                  const QuadratureConfig& q) {
    require_right_half_plane(s, "numerical_laplace");
    auto [v, e, tail] = laplace_quadrature(fn, s, t_max, q);
    return {v, e, tail};
}

LaplaceEstimateC numerical_laplace(const std::function<double(double)>& fn, cdouble s, double t_max,
                                   const QuadratureConfig& q) {
    require_right_half_plane(s.real(), "numerical_laplace");
    auto [v, e, tail] = laplace_quadrature(fn, s, t_max, q);
    return {v, e, tail};
}

LaplaceEstimate numerical_sumudu(const std::function<double(double)>& fn, double zeta,
                                 double magnitude, const QuadratureConfig& q) {
    require_positive_zeta(zeta, "numerical_sumudu");
    const double s = 1.0 / zeta;
    const LaplaceEstimate lap = numerical_laplace(fn, s, laplace_truncation(s, magnitude, q.abs_tol), q);
    return {lap.value / zeta, lap.error_bound / zeta, lap.tail_bound / zeta};
}

double numerical_fourier_even(const std::function<double(double)>& fn, double xi, double damping,
                              double panel_width, const QuadratureConfig& q) {
    if (!(damping > 0.0)) throw ConfigError("numerical_fourier_even: damping must be positive");
    if (!(panel_width > 0.0)) throw ConfigError("numerical_fourier_even: panel_width must be positive");
    q.validate();
    // exp(-(damping x)^2) < 1e-17 beyond x = sqrt(39.2) / damping.
    const double x_max = std::sqrt(39.2) / damping;
    const int n = static_cast<int>(std::min<double>(std::ceil(x_max / panel_width), q.max_panels / 4));
    const std::vector<double> breaks = uniform_breaks(0.0, x_max, std::max(1, n));
    auto integrand = [&](double x) {
        const double d = damping * x;
        return fn(x) * std::cos(xi * x) * std::exp(-d * d);
    };
    auto r = integrate_panels<double>(integrand, std::span<const double>(breaks), q);
    return std::sqrt(2.0 / kPi) * r.value;
}

}  // namespace sincfrac
