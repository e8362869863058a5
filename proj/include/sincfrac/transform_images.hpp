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

// Fourier, Laplace and Sumudu images of the sinc kernel and of the operator,
// and the numerical forward transforms used to check them.
//
// Fourier convention: unitary, kernel exp(-i xi x) / sqrt(2 pi).

#include <complex>
#include <functional>

#include "sincfrac/core_kernel.hpp"
#include "sincfrac/quadrature.hpp"

namespace sincfrac {

using cdouble = std::complex<double>;

/// Function of angular frequency.
struct FourierImage {
    std::function<cdouble(double)> eval;
    cdouble operator()(double xi) const { return eval(xi); }
};

/// Laplace-domain function. Images built from a real callable reject
/// complex abscissae with DomainError; images built from a complex callable
/// work on both.
class LaplaceImage {
public:
    using ComplexFn = std::function<cdouble(cdouble)>;
    using RealFn = std::function<double(double)>;

    LaplaceImage() = default;
    explicit LaplaceImage(ComplexFn fn) : complex_(std::move(fn)) {}
    static LaplaceImage from_real(RealFn fn);

    double operator()(double s) const;
    cdouble operator()(cdouble s) const;
    bool has_complex() const noexcept { return static_cast<bool>(complex_); }
    explicit operator bool() const noexcept { return complex_ || real_; }

private:
    ComplexFn complex_;
    RealFn real_;
};

/// Sumudu-domain function of a real positive variable.
struct SumuduImage {
    std::function<double(double)> eval;
    double operator()(double zeta) const { return eval(zeta); }
};

enum class FourierMode { as_paper, band_limited };

/// Fourier image of nsinc(-rate x). as_paper: constant
/// sqrt(1/2pi) (1-varpi)/varpi for every xi (Heaviside of a positive
/// argument); band_limited: the same amplitude inside |xi| < pi*rate, zero
/// outside, one half at the cutoff.
double fourier_image_kernel(const FracOrder& ord, double xi, FourierMode mode = FourierMode::as_paper);

/// i xi sqrt(1/2pi) norm H(.) pi_hat(xi).
cdouble fourier_image_operator(const FourierImage& pi_hat, double xi, const FracOrder& ord,
                               FourierMode mode = FourierMode::as_paper);

/// arctan(pi rate / s) / (pi rate), principal branch for complex s.
double laplace_image_kernel(const FracOrder& ord, double s);
cdouble laplace_image_kernel(const FracOrder& ord, cdouble s);

/// (norm/pi) arctan(pi rate / s) (s pi_s - pi_0).
double laplace_image_operator(double pi_s, double pi_0, double s, const FracOrder& ord);
cdouble laplace_image_operator(cdouble pi_s, cdouble pi_0, cdouble s, const FracOrder& ord);

/// arctan(pi rate zeta) / (pi rate zeta).
double sumudu_image_kernel(const FracOrder& ord, double zeta);

/// (norm/(pi zeta)) arctan(pi rate zeta) (pi_zeta - pi_0) / zeta.
double sumudu_image_operator(double pi_zeta, double pi_0, double zeta, const FracOrder& ord);

struct LaplaceEstimate {
    double value;
    double error_bound;  // quadrature estimate on [0, t_max]
    double tail_bound;   // |fn(t_max)| e^{-s t_max} / s
};

struct LaplaceEstimateC {
    cdouble value;
    double error_bound;
    double tail_bound;
};

/// int_0^t_max e^{-s t} fn(t) dt by adaptive quadrature on unit-width
/// initial panels, plus a tail estimate.
LaplaceEstimate numerical_laplace(const std::function<double(double)>& fn, double s, double t_max,
                                  const QuadratureConfig& q = {});
LaplaceEstimateC numerical_laplace(const std::function<double(double)>& fn, cdouble s, double t_max,
                                   const QuadratureConfig& q = {});

/// Truncation point where e^{-s t} * magnitude drops below abs_tol / 10.
double laplace_truncation(double s, double magnitude, double abs_tol);

/// numerical_laplace(fn, 1/zeta) / zeta, truncation chosen from the
/// magnitude hint.
LaplaceEstimate numerical_sumudu(const std::function<double(double)>& fn, double zeta,
                                 double magnitude = 1.0, const QuadratureConfig& q = {});

/// Gaussian-damped Fourier quadrature of an even real function:
/// sqrt(2/pi) int_0^inf fn(x) cos(xi x) exp(-(damping x)^2) dx.
/// The damping smooths the image over a width ~damping, so values within a
/// few damping widths of a discontinuity are not resolved.
double numerical_fourier_even(const std::function<double(double)>& fn, double xi, double damping,
                              double panel_width, const QuadratureConfig& q = {});

}  // namespace sincfrac
