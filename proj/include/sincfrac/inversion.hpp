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

#include <cstdint>
#include <string>
#include <vector>

#include "sincfrac/transform_images.hpp"

namespace sincfrac {

enum class InversionMethod { stehfest, talbot };

struct InversionConfig {
    InversionMethod method = InversionMethod::stehfest;
    int stehfest_order = 14;
    int talbot_nodes = 32;
    double talbot_scale = 0.4;
    // Order on the inner (Sumudu) axis of a double inversion. Rounding noise
    // of the inner result is amplified by the outer weights, so the product
    // of the two weight sums, not either order alone, sets the noise floor.
    int sumudu_order = 8;

    void validate() const;
    std::string describe() const;
};

/// Gaver-Stehfest coefficients as exact integers: V_k = numerators[k-1] / denominator.
struct StehfestCoefficients {
    std::vector<std::int64_t> numerators;
    std::int64_t denominator;
};

/// Exact integer form of the weights (n even, 2 <= n <= 20).
StehfestCoefficients stehfest_coefficients(int n);

/// V_1..V_n, each rounded once from its exact rational value.
std::vector<long double> stehfest_weights(int n);

/// Inverse Laplace transform of `image` at t > 0. Stehfest samples the
/// image at s = k ln2 / t (real); Talbot on the fixed Talbot contour
/// (complex, needs an image with a complex continuation).
double laplace_invert(const LaplaceImage& image, double t, const InversionConfig& cfg = {});

/// Stehfest inversion with precomputed weights; the nested
/// space-fractional solver reuses one table across many calls.
double stehfest_invert(const std::function<double(double)>& image, double t,
                       const std::vector<long double>& weights);

/// Inverse Sumudu transform at mu > 0 through F(s) = image(1/s) / s.
double sumudu_invert(const SumuduImage& image, double mu, const InversionConfig& cfg = {});

}  // namespace sincfrac
