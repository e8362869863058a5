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

#include "sincfrac/inversion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sincfrac {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    u128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    return r;
}

void require_positive_time(double t, const char* what) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << what << ": t must be positive and finite (got " << t << ")";
        throw DomainError(msg.str());
    }
}

template <class F, class S>
auto sample_image(F&& f, S s) {
    try {
        return f(s);
    } catch (const SingularityError&) {
        throw;
    } catch (const DomainError& e) {
        std::ostringstream msg;
        msg << e.what() << " [at abscissa s=" << s << "]";
        throw DomainError(msg.str());
    } catch (const NumericError& e) {
        std::ostringstream msg;
        msg << e.what() << " [at abscissa s=" << s << "]";
        throw NumericError(msg.str(), e.estimate(), e.error_bound());
    }
}

double talbot_invert(const LaplaceImage& image, double t, const InversionConfig& cfg) {
    const int m = cfg.talbot_nodes;
    const double r = cfg.talbot_scale * m / t;
    const double pi = std::numbers::pi;
    long double acc = 0.5L * static_cast<long double>(
                                 (std::exp(r * t) * sample_image(image, cdouble(r, 0.0))).real());
    for (int k = 1; k < m; ++k) {
        const double theta = k * pi / m;
        const double cot = std::cos(theta) / std::sin(theta);
        const cdouble s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        const cdouble term = std::exp(t * s) * sample_image(image, s) * cdouble(1.0, sigma);
        acc += static_cast<long double>(term.real());
    }
    return static_cast<double>(acc * static_cast<long double>(r / m));
}

}  // namespace

void InversionConfig::validate() const {
    if (method == InversionMethod::stehfest) {
        if (stehfest_order < 2 || stehfest_order > 20 || stehfest_order % 2 != 0) {
            std::ostringstream msg;
            msg << "stehfest order must be an even integer in [2, 20] (got " << stehfest_order << ")";
            throw ConfigError(msg.str());
        }
        if (sumudu_order < 2 || sumudu_order > 20 || sumudu_order % 2 != 0) {
            std::ostringstream msg;
            msg << "inner stehfest order must be an even integer in [2, 20] (got " << sumudu_order << ")";
            throw ConfigError(msg.str());
        }
    } else {
        if (talbot_nodes < 8) {
            std::ostringstream msg;
            msg << "talbot nodes must be >= 8 (got " << talbot_nodes << ")";
            throw ConfigError(msg.str());
        }
        if (!(talbot_scale > 0.0) || !std::isfinite(talbot_scale)) {
            std::ostringstream msg;
            msg << "talbot scale must be positive (got " << talbot_scale << ")";
            throw ConfigError(msg.str());
        }
    }
}

std::string InversionConfig::describe() const {
    std::ostringstream out;
    if (method == InversionMethod::stehfest) {
        out << "stehfest(N=" << stehfest_order << ")";
    } else {
        out << "talbot(M=" << talbot_nodes << ",scale=" << talbot_scale << ")";
    }
    return out.str();
}

StehfestCoefficients stehfest_coefficients(int n) {
    if (n < 2 || n > 20 || n % 2 != 0) {
        std::ostringstream msg;
        msg << "stehfest order must be an even integer in [2, 20] (got " << n << ")";
        throw ConfigError(msg.str());
    }
    const int h = n / 2;
    // V_k * h! = (-1)^(k+h) sum_j j^(h+1) C(2j,j) C(j,k-j) C(h,j),
    // j from floor((k+1)/2) to min(k,h). Every term of a given k is
    // non-negative, so the partial sums are bounded by the final value.
    StehfestCoefficients out;
    u128 fact = 1;
    for (int i = 2; i <= h; ++i) fact *= static_cast<u128>(i);
    out.denominator = static_cast<std::int64_t>(fact);
    out.numerators.reserve(static_cast<std::size_t>(n));
    constexpr u128 limit = static_cast<u128>(std::numeric_limits<std::int64_t>::max());
    for (int k = 1; k <= n; ++k) {
        u128 sum = 0;
        for (int j = (k + 1) / 2; j <= std::min(k, h); ++j) {
            u128 power = 1;
            for (int e = 0; e <= h; ++e) power *= static_cast<u128>(j);
            sum += power * binomial(2 * j, j) * binomial(j, k - j) * binomial(h, j);
        }
        if (sum > limit) throw NumericError("stehfest coefficient overflow", 0.0, 0.0);
        const auto mag = static_cast<std::int64_t>(sum);
        out.numerators.push_back(((k + h) % 2 == 0) ? mag : -mag);
    }
    return out;
}

std::vector<long double> stehfest_weights(int n) {
    const StehfestCoefficients c = stehfest_coefficients(n);
    std::vector<long double> w;
    w.reserve(c.numerators.size());
    const auto den = static_cast<long double>(c.denominator);
    for (std::int64_t num : c.numerators) w.push_back(static_cast<long double>(num) / den);
    return w;
}

double stehfest_invert(const std::function<double(double)>& image, double t,
                       const std::vector<long double>& weights) {
    require_positive_time(t, "laplace_invert");
    const double a = std::numbers::ln2 / t;
    long double acc = 0.0L;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double s = a * static_cast<double>(k + 1);
        acc += weights[k] * static_cast<long double>(sample_image(image, s));
    }
    return static_cast<double>(acc * static_cast<long double>(a));
}

double laplace_invert(const LaplaceImage& image, double t, const InversionConfig& cfg) {
    require_positive_time(t, "laplace_invert");
    cfg.validate();
    if (!image) throw ConfigError("laplace_invert: empty image");
    if (cfg.method == InversionMethod::talbot) return talbot_invert(image, t, cfg);
    const std::vector<long double> w = stehfest_weights(cfg.stehfest_order);
    return stehfest_invert([&image](double s) { return image(s); }, t, w);
}

double sumudu_invert(const SumuduImage& image, double mu, const InversionConfig& cfg) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        std::ostringstream msg;
        msg << "sumudu_invert: mu must be positive (got " << mu << ")";
        throw DomainError(msg.str());
    }
    cfg.validate();
    if (cfg.method != InversionMethod::stehfest) {
        throw ConfigError("sumudu_invert: only the stehfest method samples real abscissae");
    }
    if (!image.eval) throw ConfigError("sumudu_invert: empty image");
    const std::vector<long double> w = stehfest_weights(cfg.stehfest_order);
    return stehfest_invert([&image](double s) { return image(1.0 / s) / s; }, mu, w);
}

}  // namespace sincfrac
