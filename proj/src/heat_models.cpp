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

#include "sincfrac/heat_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sincfrac {

namespace {

constexpr double kPi = std::numbers::pi;

void require_model(const DiffusionProblem& prob, HeatModel expected, const char* what) {
    if (prob.model != expected) {
        std::ostringstream msg;
        msg << what << ": problem model is " << to_string(prob.model) << ", expected "
            << to_string(expected);
        throw DomainError(msg.str());
    }
}

void require_strictly_increasing(const std::vector<double>& v, const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) {
            std::ostringstream msg;
            msg << name << " grid must be strictly increasing (" << v[i - 1] << " then " << v[i] << ")";
            throw ConfigError(msg.str());
        }
    }
}

GridMeta make_meta(const DiffusionProblem& prob, const InversionConfig& inv) {
    GridMeta m;
    m.model = to_string(prob.model);
    m.inversion = inv.describe();
    m.kappa = prob.kappa;
    if (prob.ord) {
        m.varpi = prob.ord->varpi();
        m.norm = prob.ord->norm();
    }
    m.boundary = prob.boundary.describe();
    return m;
}

SolutionGrid empty_grid(const GridSpec& grid) {
    SolutionGrid out;
    out.mu_points = grid.mu;
    out.tau_points = grid.tau;
    const std::size_t n = grid.mu.size() * grid.tau.size();
    out.values.assign(n, 0.0);
    out.flags.assign(n, PointFlag::ok);
    return out;
}

// Inverts image_at(mu) over every grid point, annotating failures.
template <class MakeImage>
void invert_grid(SolutionGrid& out, const InversionConfig& inv, MakeImage&& image_at) {
    const std::size_t nt = out.tau_points.size();
    for (std::size_t i = 0; i < out.mu_points.size(); ++i) {
        const LaplaceImage image = image_at(out.mu_points[i]);
        for (std::size_t j = 0; j < nt; ++j) {
            const double mu = out.mu_points[i];
            const double tau = out.tau_points[j];
            try {
                out.values[i * nt + j] = laplace_invert(image, tau, inv);
            } catch (const NumericError& e) {
                std::ostringstream msg;
                msg << e.what() << " [grid point mu=" << mu << ", tau=" << tau << "]";
                throw NumericError(msg.str(), e.estimate(), e.error_bound());
            } catch (const DomainError& e) {
                std::ostringstream msg;
                msg << e.what() << " [grid point mu=" << mu << ", tau=" << tau << "]";
                throw DomainError(msg.str());
            }
        }
    }
}

}  // namespace

std::string to_string(HeatModel m) {
    switch (m) {
        case HeatModel::time_fractional: return "time-fractional";
        case HeatModel::space_fractional: return "space-fractional";
        case HeatModel::classical: return "classical";
    }
    return "unknown";
}

std::string to_string(PointFlag f) {
    switch (f) {
        case PointFlag::ok: return "ok";
        case PointFlag::singularity: return "singularity";
        case PointFlag::numeric_failure: return "numeric-failure";
    }
    return "unknown";
}

void BoundarySpec::validate() const {
    if (kind == BoundaryKind::custom) {
        if (!custom_image || !*custom_image) throw ConfigError("custom boundary requires an image");
    } else if (!std::isfinite(amplitude)) {
        throw ConfigError("boundary amplitude must be finite");
    }
}

cdouble BoundarySpec::image(cdouble s) const {
    switch (kind) {
        case BoundaryKind::step: return amplitude / s;
        case BoundaryKind::ramp: return amplitude / (s * s);
        case BoundaryKind::custom: return (*custom_image)(s);
    }
    return 0.0;
}

double BoundarySpec::image(double s) const {
    switch (kind) {
        case BoundaryKind::step: return amplitude / s;
        case BoundaryKind::ramp: return amplitude / (s * s);
        case BoundaryKind::custom: return (*custom_image)(s);
    }
    return 0.0;
}

std::optional<double> BoundarySpec::time_value(double tau) const {
    switch (kind) {
        case BoundaryKind::step: return amplitude;
        case BoundaryKind::ramp: return amplitude * tau;
        case BoundaryKind::custom: return std::nullopt;
    }
    return std::nullopt;
}

std::string BoundarySpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case BoundaryKind::step: out << "step:" << amplitude; break;
        case BoundaryKind::ramp: out << "ramp:" << amplitude; break;
        case BoundaryKind::custom: out << "custom"; break;
    }
    return out.str();
}

void DiffusionProblem::validate() const {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        std::ostringstream msg;
        msg << "kappa must be positive (got " << kappa << ")";
        throw ConfigError(msg.str());
    }
    if (model != HeatModel::classical && !ord) {
        throw ConfigError("fractional models require an order varpi");
    }
    boundary.validate();
}

const FracOrder& DiffusionProblem::order() const {
    if (!ord) throw ConfigError("problem has no fractional order");
    return *ord;
}

void GridSpec::validate() const {
    if (mu.empty() || tau.empty()) throw ConfigError("grid must have at least one mu and one tau");
    for (double m : mu) {
        if (!(m >= 0.0) || !std::isfinite(m)) {
            std::ostringstream msg;
            msg << "mu points must be finite and >= 0 (got " << m << ")";
            throw ConfigError(msg.str());
        }
    }
    for (double t : tau) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            std::ostringstream msg;
            msg << "tau points must be finite and > 0 (got " << t << ")";
            throw ConfigError(msg.str());
        }
    }
    require_strictly_increasing(mu, "mu");
    require_strictly_increasing(tau, "tau");
}

std::size_t SolutionGrid::flagged_count() const {
    return static_cast<std::size_t>(
        std::count_if(flags.begin(), flags.end(), [](PointFlag f) { return f != PointFlag::ok; }));
}

double h_factor(double s, const FracOrder& ord, double kappa) {
    if (!(s > 0.0)) throw DomainError("h_factor: Re(s) must be positive");
    if (!(kappa > 0.0)) throw DomainError("h_factor: kappa must be positive");
    return ord.norm() * s / (kPi * kappa) * std::atan(kPi * ord.rate() / s);
}

cdouble h_factor(cdouble s, const FracOrder& ord, double kappa) {
    if (!(s.real() > 0.0)) throw DomainError("h_factor: Re(s) must be positive");
    if (!(kappa > 0.0)) throw DomainError("h_factor: kappa must be positive");
    return ord.norm() * s / (kPi * kappa) * std::atan(kPi * ord.rate() / s);
}

double timefrac_laplace_solution(double mu, double s, const DiffusionProblem& prob) {
    require_model(prob, HeatModel::time_fractional, "timefrac_laplace_solution");
    if (!(mu >= 0.0)) throw DomainError("timefrac_laplace_solution: mu must be >= 0");
    const double lambda = prob.boundary.image(s);
    if (mu == 0.0) return lambda;
    return lambda * std::exp(-mu * std::sqrt(h_factor(s, prob.order(), prob.kappa)));
}

cdouble timefrac_laplace_solution(double mu, cdouble s, const DiffusionProblem& prob) {
    require_model(prob, HeatModel::time_fractional, "timefrac_laplace_solution");
    if (!(mu >= 0.0)) throw DomainError("timefrac_laplace_solution: mu must be >= 0");
    const cdouble lambda = prob.boundary.image(s);
    if (mu == 0.0) return lambda;
    return lambda * std::exp(-mu * std::sqrt(h_factor(s, prob.order(), prob.kappa)));
}

SolutionGrid solve_timefrac(const DiffusionProblem& prob, const GridSpec& grid,
                            const InversionConfig& inv) {
    require_model(prob, HeatModel::time_fractional, "solve_timefrac");
    prob.validate();
    grid.validate();
    inv.validate();
    SolutionGrid out = empty_grid(grid);
    out.meta = make_meta(prob, inv);
    invert_grid(out, inv, [&prob](double mu) {
        return LaplaceImage([&prob, mu](cdouble s) { return timefrac_laplace_solution(mu, s, prob); });
    });
    return out;
}

double classical_laplace_solution(double mu, double s, const DiffusionProblem& prob) {
    if (!(mu >= 0.0)) throw DomainError("classical_laplace_solution: mu must be >= 0");
    return prob.boundary.image(s) * std::exp(-mu * std::sqrt(s / prob.kappa));
}

cdouble classical_laplace_solution(double mu, cdouble s, const DiffusionProblem& prob) {
    if (!(mu >= 0.0)) throw DomainError("classical_laplace_solution: mu must be >= 0");
    return prob.boundary.image(s) * std::exp(-mu * std::sqrt(s / prob.kappa));
}

SolutionGrid solve_classical(const DiffusionProblem& prob, const GridSpec& grid,
                             const InversionConfig& inv) {
    prob.validate();
    grid.validate();
    inv.validate();
    SolutionGrid out = empty_grid(grid);
    DiffusionProblem classical = prob;
    classical.model = HeatModel::classical;
    out.meta = make_meta(classical, inv);
    out.meta.varpi.reset();
    out.meta.norm.reset();
    invert_grid(out, inv, [&prob](double mu) {
        return LaplaceImage([&prob, mu](cdouble s) { return classical_laplace_solution(mu, s, prob); });
    });
    return out;
}

double classical_closed_form(double mu, double tau, double kappa, double lambda0) {
    if (!(tau > 0.0)) throw DomainError("classical_closed_form: tau must be positive");
    if (!(kappa > 0.0)) throw DomainError("classical_closed_form: kappa must be positive");
    if (!(mu >= 0.0)) throw DomainError("classical_closed_form: mu must be >= 0");
    return lambda0 * erfc_fn(mu / (2.0 * std::sqrt(kappa * tau)));
}

double spacefrac_denominator(double zeta, double s, const DiffusionProblem& prob) {
    const FracOrder& ord = prob.order();
    const double a = ord.norm() / (kPi * zeta * zeta) * std::atan(kPi * ord.rate() * zeta);
    return a - s * zeta / prob.kappa;
}

double spacefrac_sumudu_solution(double zeta, double s, const DiffusionProblem& prob) {
    require_model(prob, HeatModel::space_fractional, "spacefrac_sumudu_solution");
    if (!(zeta > 0.0)) throw DomainError("spacefrac_sumudu_solution: zeta must be positive");
    if (!(s > 0.0)) throw DomainError("spacefrac_sumudu_solution: Re(s) must be positive");
    const FracOrder& ord = prob.order();
    const double a = ord.norm() / (kPi * zeta * zeta) * std::atan(kPi * ord.rate() * zeta);
    const double b = s * zeta / prob.kappa;
    const double den = a - b;
    if (std::abs(den) <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(a, b)) {
        std::ostringstream msg;
        msg << "space-fractional image denominator vanishes at zeta=" << zeta << ", s=" << s;
        throw SingularityError(msg.str(), zeta, s);
    }
    return a * prob.boundary.image(s) / den;
}

DoubleInversion double_invert(const SumuduLaplaceImage& image, double mu, double tau,
                              const InversionConfig& inv) {
    if (!(mu > 0.0)) throw DomainError("double_invert: mu must be positive");
    if (!(tau > 0.0)) throw DomainError("double_invert: tau must be positive");
    inv.validate();
    if (inv.method != InversionMethod::stehfest) {
        throw ConfigError("double inversion requires the stehfest method");
    }
    const std::vector<long double> w = stehfest_weights(inv.stehfest_order);
    const std::vector<long double> wi = stehfest_weights(inv.sumudu_order);
    const double outer_step = std::numbers::ln2 / tau;
    const long double inner_step = std::numbers::ln2_v<long double> / mu;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    long double acc = 0.0L;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double s = outer_step * static_cast<double>(j + 1);
        if (image.denominator) {
            double prev = 0.0;
            for (std::size_t k = 0; k < wi.size(); ++k) {
                const double zeta = static_cast<double>(1.0L / (inner_step * static_cast<long double>(k + 1)));
                const double d = image.denominator(zeta, s);
                if (d == 0.0 || (k > 0 && (d > 0.0) != (prev > 0.0))) {
                    return {nan, PointFlag::singularity};
                }
                prev = d;
            }
        }
        // Inner sum kept in long double: its rounding is multiplied by the
        // outer weight sum, which is about 6.5e8 at N = 14.
        long double inner = 0.0L;
        try {
            for (std::size_t k = 0; k < wi.size(); ++k) {
                const long double sp = inner_step * static_cast<long double>(k + 1);
                const double g = image.eval(static_cast<double>(1.0L / sp), s);
                if (!std::isfinite(g)) return {nan, PointFlag::numeric_failure};
                inner += wi[k] * static_cast<long double>(g) / sp;
            }
        } catch (const SingularityError&) {
            return {nan, PointFlag::singularity};
        } catch (const NumericError&) {
            return {nan, PointFlag::numeric_failure};
        }
        acc += w[j] * inner * inner_step;
    }
    const double value = static_cast<double>(acc * static_cast<long double>(outer_step));
    if (!std::isfinite(value)) return {nan, PointFlag::numeric_failure};
    return {value, PointFlag::ok};
}

SolutionGrid solve_sumudu_laplace(const SumuduLaplaceImage& image, const LaplaceImage& boundary_image,
                                  const GridSpec& grid, const InversionConfig& inv) {
    grid.validate();
    inv.validate();
    SolutionGrid out = empty_grid(grid);
    out.meta.inversion = inv.describe() + "x(N=" + std::to_string(inv.sumudu_order) + ")";
    const std::size_t nt = grid.tau.size();
    for (std::size_t i = 0; i < grid.mu.size(); ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const std::size_t idx = i * nt + j;
            if (grid.mu[i] == 0.0) {
                out.values[idx] = laplace_invert(boundary_image, grid.tau[j], inv);
                continue;
            }
            const DoubleInversion r = double_invert(image, grid.mu[i], grid.tau[j], inv);
            out.values[idx] = r.value;
            out.flags[idx] = r.flag;
        }
    }
    return out;
}

SolutionGrid solve_spacefrac(const DiffusionProblem& prob, const GridSpec& grid,
                             const InversionConfig& inv) {
    require_model(prob, HeatModel::space_fractional, "solve_spacefrac");
    prob.validate();
    SumuduLaplaceImage image{
        [&prob](double zeta, double s) { return spacefrac_sumudu_solution(zeta, s, prob); },
        [&prob](double zeta, double s) { return spacefrac_denominator(zeta, s, prob); }};
    const LaplaceImage boundary = LaplaceImage::from_real([&prob](double s) { return prob.boundary.image(s); });
    SolutionGrid out = solve_sumudu_laplace(image, boundary, grid, inv);
    const std::string inversion = out.meta.inversion;
    out.meta = make_meta(prob, inv);
    out.meta.inversion = inversion;
    return out;
}

SolutionGrid solve(const DiffusionProblem& prob, const GridSpec& grid, const InversionConfig& inv) {
    switch (prob.model) {
        case HeatModel::time_fractional: return solve_timefrac(prob, grid, inv);
        case HeatModel::space_fractional: return solve_spacefrac(prob, grid, inv);
        case HeatModel::classical: return solve_classical(prob, grid, inv);
    }
    throw ConfigError("unknown model");
}

ComparisonTable compare_models(const ComparisonRequest& req, const GridSpec& grid,
                               const InversionConfig& inv) {
    if (req.model == HeatModel::classical) {
        throw ConfigError("compare_models: the compared model must be fractional");
    }
    ComparisonTable table;
    table.mu_points = grid.mu;
    table.tau_points = grid.tau;
    table.inversion = inv.describe();

    DiffusionProblem base{req.kappa, std::nullopt, req.boundary, HeatModel::classical};
    const SolutionGrid classical = solve_classical(base, grid, inv);
    ComparisonColumn ref{"classical", std::nullopt, classical.values,
                         std::vector<double>(classical.values.size(), 0.0), classical.flags};
    table.columns.push_back(ref);

    for (double w : req.varpis) {
        DiffusionProblem prob = base;
        prob.model = req.model;
        prob.ord = req.norm ? FracOrder::with_norm(w, *req.norm) : FracOrder(w);
        const SolutionGrid g = solve(prob, grid, inv);
        ComparisonColumn col;
        std::ostringstream label;
        label << "varpi=" << w;
        col.label = label.str();
        col.varpi = w;
        col.values = g.values;
        col.flags = g.flags;
        col.diff.resize(g.values.size());
        for (std::size_t k = 0; k < g.values.size(); ++k) col.diff[k] = g.values[k] - classical.values[k];
        table.columns.push_back(std::move(col));
    }
    return table;
}

}  // namespace sincfrac
