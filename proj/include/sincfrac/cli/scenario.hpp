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

// Scenario configuration for the sincfrac command-line tool. Everything a
// run needs is parsed and validated here, before any computation starts.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sincfrac/frac_operator.hpp"
#include "sincfrac/heat_models.hpp"
#include "sincfrac/inversion.hpp"
#include "sincfrac/quadrature.hpp"
#include "sincfrac/transform_images.hpp"

namespace sincfrac::cli {

enum class Command { kernel, deriv, image, invert, heat, compare };
enum class OutputFormat { csv, svg, both };
enum class Transform { laplace, sumudu, fourier };
enum class ImageTarget { kernel, op };

std::string to_string(Command c);
std::string to_string(OutputFormat f);

/// Built-in operand with analytic derivative and transforms.
struct CatalogueFunction {
    std::string name;
    FunctionSpec::Fn f;
    FunctionSpec::Fn d1;
    std::function<double(double)> laplace;  // F(s)
    double at_zero;
};

/// Names: constant, linear, quadratic, exp-decay, sine.
const CatalogueFunction& catalogue_function(const std::string& name);
std::vector<std::string> catalogue_function_names();

/// Laplace image with a known original, for `invert`.
struct CatalogueImage {
    std::string name;
    LaplaceImage image;
    std::function<double(double)> original;
};

/// Names: one-over-s, one-over-s2, shifted-pole, sine, heat-kernel.
const CatalogueImage& catalogue_image(const std::string& name);
std::vector<std::string> catalogue_image_names();

/// `start:stop:step` (stop included when a step lands on it) or a comma list.
std::vector<double> parse_grid(const std::string& key, const std::string& text);

/// `step:<lambda0>` or `ramp:<slope>`.
BoundarySpec parse_boundary(const std::string& text);

struct ScenarioConfig {
    Command command = Command::kernel;

    std::vector<double> varpis{0.5};
    std::optional<double> norm;
    double kappa = 1.0;
    BoundarySpec boundary = BoundarySpec::step(1.0);
    HeatModel model = HeatModel::classical;

    std::vector<double> x_points;    // kernel lags
    std::vector<double> mu_points;   // deriv evaluation points, heat/compare grid
    std::vector<double> tau_points;  // heat/compare grid
    std::vector<double> s_points;    // image abscissae (s, zeta or xi)
    std::vector<double> t_points;    // invert times

    std::string fn = "linear";
    double a = 0.0;
    int n = 0;
    bool probe = false;

    Transform transform = Transform::laplace;
    ImageTarget target = ImageTarget::kernel;
    FourierMode fourier_mode = FourierMode::as_paper;
    std::string image = "one-over-s";

    QuadratureConfig quad;
    InversionConfig inv;

    std::optional<std::string> out;
    OutputFormat format = OutputFormat::csv;
    bool quiet = false;

    /// Effective parameters as ordered key=value pairs, for the trailing
    /// CSV comment. Holds only keys that affect the chosen command.
    std::vector<std::pair<std::string, std::string>> record;

    FracOrder order() const;
};

/// Parses argv (argv[0] is the program name). Throws ConfigError naming the
/// offending key, the given value and the allowed range. A request for help
/// throws HelpRequested carrying the text.
ScenarioConfig parse_config(const std::vector<std::string>& args);

struct HelpRequested {
    std::string text;
};

/// Space-separated `key=value` rendering of cfg.record.
std::string config_line(const ScenarioConfig& cfg);

}  // namespace sincfrac::cli
