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

// Semi-infinite anomalous heat diffusion, mu > 0, tau > 0, with
// Pi(mu, 0) = 0, Pi(0, tau) = lambda(tau) and decay as mu -> infinity.
// Solutions are built in the Laplace (and for the space-fractional model,
// Sumudu) domain and inverted numerically point by point.

#include <optional>
#include <string>
#include <vector>

#include "sincfrac/core_kernel.hpp"
#include "sincfrac/inversion.hpp"
#include "sincfrac/transform_images.hpp"

namespace sincfrac {

enum class HeatModel { time_fractional, space_fractional, classical };

std::string to_string(HeatModel m);

enum class BoundaryKind { step, ramp, custom };

/// lambda(tau) at mu = 0. step: amplitude (image amplitude/s); ramp: slope
/// * tau (image slope/s^2); custom: caller-supplied Laplace image.
struct BoundarySpec {
    BoundaryKind kind = BoundaryKind::step;
    double amplitude = 1.0;
    std::optional<LaplaceImage> custom_image;

    static BoundarySpec step(double lambda0) { return {BoundaryKind::step, lambda0, std::nullopt}; }
    static BoundarySpec ramp(double slope) { return {BoundaryKind::ramp, slope, std::nullopt}; }
    static BoundarySpec custom(LaplaceImage image) {
        return {BoundaryKind::custom, 0.0, std::move(image)};
    }

    void validate() const;
    cdouble image(cdouble s) const;
    double image(double s) const;
    /// Time-domain value; not available for custom boundaries.
    std::optional<double> time_value(double tau) const;
    std::string describe() const;
};

struct DiffusionProblem {
    double kappa = 1.0;
    std::optional<FracOrder> ord;
    BoundarySpec boundary;
    HeatModel model = HeatModel::classical;

    void validate() const;
    const FracOrder& order() const;
};

/// Rectangular evaluation grid.
struct GridSpec {
    std::vector<double> mu;
    std::vector<double> tau;

    void validate() const;
};

enum class PointFlag { ok, singularity, numeric_failure };

std::string to_string(PointFlag f);

struct GridMeta {
    std::string model;
    std::string inversion;
    double kappa = 0.0;
    std::optional<double> varpi;
    std::optional<double> norm;
    std::string boundary;
};

/// Pi(mu_i, tau_j), row-major in mu. Flagged points hold NaN.
struct SolutionGrid {
    std::vector<double> mu_points;
    std::vector<double> tau_points;
    std::vector<double> values;
    std::vector<PointFlag> flags;
    GridMeta meta;

    double at(std::size_t i, std::size_t j) const { return values[i * tau_points.size() + j]; }
    PointFlag flag(std::size_t i, std::size_t j) const { return flags[i * tau_points.size() + j]; }
    std::size_t flagged_count() const;
};

/// (norm s / (pi kappa)) arctan(pi rate / s).
double h_factor(double s, const FracOrder& ord, double kappa);
cdouble h_factor(cdouble s, const FracOrder& ord, double kappa);

/// lambda(s) exp(-mu sqrt(H)), principal square root.
double timefrac_laplace_solution(double mu, double s, const DiffusionProblem& prob);
cdouble timefrac_laplace_solution(double mu, cdouble s, const DiffusionProblem& prob);

SolutionGrid solve_timefrac(const DiffusionProblem& prob, const GridSpec& grid,
                            const InversionConfig& inv = {});

/// lambda(s) exp(-mu sqrt(s / kappa)).
double classical_laplace_solution(double mu, double s, const DiffusionProblem& prob);
cdouble classical_laplace_solution(double mu, cdouble s, const DiffusionProblem& prob);

SolutionGrid solve_classical(const DiffusionProblem& prob, const GridSpec& grid,
                             const InversionConfig& inv = {});

/// lambda0 erfc(mu / (2 sqrt(kappa tau))).
double classical_closed_form(double mu, double tau, double kappa, double lambda0);

/// A(zeta) lambda(s) / (A(zeta) - s zeta / kappa), with
/// A(zeta) = (norm / (pi zeta^2)) arctan(pi rate zeta). Throws
/// SingularityError when the denominator vanishes.
double spacefrac_sumudu_solution(double zeta, double s, const DiffusionProblem& prob);

/// A(zeta) - s zeta / kappa, the denominator of the space-fractional image.
double spacefrac_denominator(double zeta, double s, const DiffusionProblem& prob);

/// Image in the joint (Sumudu zeta, Laplace s) domain. The optional
/// denominator is scanned for sign changes along the inner abscissae.
struct SumuduLaplaceImage {
    std::function<double(double zeta, double s)> eval;
    std::function<double(double zeta, double s)> denominator;
};

struct DoubleInversion {
    double value;
    PointFlag flag;
};

/// Inner Sumudu inversion zeta -> mu at every outer abscissa s, then outer
/// Laplace inversion s -> tau. Stehfest on both axes, inner order
/// inv.sumudu_order.
DoubleInversion double_invert(const SumuduLaplaceImage& image, double mu, double tau,
                              const InversionConfig& inv = {});

/// Grid solve over a joint image; mu = 0 rows invert `boundary_image` directly.
SolutionGrid solve_sumudu_laplace(const SumuduLaplaceImage& image, const LaplaceImage& boundary_image,
                                  const GridSpec& grid, const InversionConfig& inv = {});

SolutionGrid solve_spacefrac(const DiffusionProblem& prob, const GridSpec& grid,
                             const InversionConfig& inv = {});

/// Dispatch on prob.model.
SolutionGrid solve(const DiffusionProblem& prob, const GridSpec& grid, const InversionConfig& inv = {});

struct ComparisonColumn {
    std::string label;
    std::optional<double> varpi;
    std::vector<double> values;  // row-major over (mu, tau)
    std::vector<double> diff;    // values - classical
    std::vector<PointFlag> flags;
};

struct ComparisonTable {
    std::vector<double> mu_points;
    std::vector<double> tau_points;
    std::vector<ComparisonColumn> columns;  // classical first
    std::string inversion;
};

struct ComparisonRequest {
    HeatModel model = HeatModel::time_fractional;
    double kappa = 1.0;
    BoundarySpec boundary;
    std::vector<double> varpis;
    std::optional<double> norm;
};

ComparisonTable compare_models(const ComparisonRequest& req, const GridSpec& grid,
                               const InversionConfig& inv = {});

}  // namespace sincfrac
