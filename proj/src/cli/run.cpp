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

#include "sincfrac/cli/run.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "sincfrac/core_kernel.hpp"
#include "sincfrac/frac_operator.hpp"
#include "sincfrac/heat_models.hpp"
#include "sincfrac/inversion.hpp"
#include "sincfrac/transform_images.hpp"

namespace sincfrac::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Column num_col(std::string name, std::string unit) { return {std::move(name), std::move(unit), {}, {}}; }
Column text_col(std::string name) { return {std::move(name), "", {}, {}}; }

// Evaluates one row, turning numeric failures into a NaN plus flag.
template <class F>
std::optional<double> guarded(F&& f, std::size_t& flagged, std::vector<std::string>& flags) {
    try {
        const double v = f();
        flags.push_back(to_string(PointFlag::ok));
        return v;
    } catch (const SingularityError&) {
        flags.push_back(to_string(PointFlag::singularity));
    } catch (const NumericError&) {
        flags.push_back(to_string(PointFlag::numeric_failure));
    }
    ++flagged;
    return std::nullopt;
}

std::string label_varpi(double v) { return "varpi=" + format_number(v); }

Outcome run_kernel(const ScenarioConfig& cfg) {
    const FracOrder ord = cfg.order();
    Column x = num_col("x", "length");
    Column k = num_col("nsinc", "1");
    Column scaled = num_col("kernel", "1/length");
    for (double v : cfg.x_points) {
        x.values.push_back(v);
        k.values.push_back(nsinc(-ord.rate() * v));
        scaled.values.push_back(scaled_kernel(ord, v));
    }
    Outcome o;
    o.plot = {"sinc kernel, varpi=" + format_number(ord.varpi()), "x", "amplitude * nsinc(-rate x)",
              {{label_varpi(ord.varpi()), x.values, scaled.values}}};
    o.table.columns = {x, k, scaled};
    return o;
}

Outcome run_deriv(const ScenarioConfig& cfg) {
    const CatalogueFunction& cf = catalogue_function(cfg.fn);
    const FunctionSpec fn(cf.f, cf.d1);
    Outcome o;
    Column flag = text_col("flag");

    if (cfg.probe) {
        const double mu = cfg.mu_points.front();
        const LimitProbe p = [&] {
            try {
                return limit_probe(fn, cfg.a, mu, cfg.varpis, cfg.quad);
            } catch (const NumericError&) {
                LimitProbe empty{fn.derivative(mu), cf.f(mu) - cf.f(cfg.a), {}};
                return empty;
            }
        }();
        Column w = num_col("varpi", "1");
        Column d = num_col("D", "f/length");
        Column ref_d = num_col("f_prime_mu", "f/length");
        Column ref_i = num_col("f_increment", "f");
        for (std::size_t i = 0; i < cfg.varpis.size(); ++i) {
            w.values.push_back(cfg.varpis[i]);
            const bool have = i < p.rows.size();
            d.values.push_back(have ? p.rows[i].value : kNaN);
            flag.text.push_back(to_string(have ? PointFlag::ok : PointFlag::numeric_failure));
            if (!have) ++o.flagged;
            ref_d.values.push_back(p.reference_derivative);
            ref_i.values.push_back(p.reference_increment);
        }
        o.plot = {"operator across orders at mu=" + format_number(mu), "varpi", "D",
                  {{"D(" + cfg.fn + ")", w.values, d.values}}};
        o.table.columns = {w, d, ref_d, ref_i, flag};
        return o;
    }

    const FracOrder ord = cfg.order();
    const bool closed = cfg.fn == "linear" && cfg.a == 0.0 && cfg.n == 0;
    Column mu = num_col("mu", "length");
    Column d = num_col(cfg.n == 0 ? "D" : "d" + std::to_string(cfg.n) + "D",
                       cfg.n == 0 ? "f/length" : "f/length^" + std::to_string(cfg.n + 1));
    Column err = num_col("error_estimate", "f/length");
    Column cform = num_col("closed_form", "f/length");
    std::vector<std::string> flags;
    for (double m : cfg.mu_points) {
        mu.values.push_back(m);
        double e = kNaN;
        const auto v = guarded(
            [&] {
                if (cfg.n > 0) return frac_derivative_higher(fn, cfg.a, m, cfg.n, ord, cfg.quad);
                const QuadResult<double> r = frac_derivative_detail(fn, cfg.a, m, ord, cfg.quad);
                e = r.error;
                return r.value;
            },
            o.flagged, flags);
        d.values.push_back(v.value_or(kNaN));
        err.values.push_back(e);
        if (closed) cform.values.push_back(linear_case_closed_form(m, ord));
    }
    flag.text = flags;
    o.plot = {"fractional derivative of " + cfg.fn + ", varpi=" + format_number(ord.varpi()), "mu", d.name,
              {{label_varpi(ord.varpi()), mu.values, d.values}}};
    if (closed) o.plot.series.push_back({"closed form", mu.values, cform.values});
    o.table.columns = {mu, d};
    if (cfg.n == 0) o.table.columns.push_back(err);
    if (closed) o.table.columns.push_back(cform);
    o.table.columns.push_back(flag);
    return o;
}

Outcome run_image(const ScenarioConfig& cfg) {
    const FracOrder ord = cfg.order();
    const double c = ord.rate();
    Outcome o;
    const char* axis = cfg.transform == Transform::laplace ? "s" : (cfg.transform == Transform::sumudu ? "zeta" : "xi");
    const char* unit = cfg.transform == Transform::laplace ? "1/time" : (cfg.transform == Transform::sumudu ? "time" : "1/length");
    Column x = num_col(axis, unit);
    Column closed = num_col("closed_form", "");
    Column numeric = num_col("numerical", "");
    Column diff = num_col("abs_diff", "");
    std::vector<std::string> flags;

    auto kernel = [c](double t) { return nsinc(-c * t); };
    std::optional<FunctionSpec> fn;
    const CatalogueFunction* cf = nullptr;
    if (cfg.target == ImageTarget::op) {
        cf = &catalogue_function(cfg.fn);
        fn.emplace(cf->f, cf->d1);
    }
    auto operator_values = [&](double mu) { return frac_derivative(*fn, 0.0, mu, ord, cfg.quad); };

    for (double p : cfg.s_points) {
        x.values.push_back(p);
        double cl = kNaN;
        const auto v = guarded(
            [&]() -> double {
                switch (cfg.transform) {
                    case Transform::laplace:
                        if (cfg.target == ImageTarget::kernel) {
                            cl = laplace_image_kernel(ord, p);
                            return numerical_laplace(kernel, p, laplace_truncation(p, 1.0, cfg.quad.abs_tol), cfg.quad).value;
                        }
                        cl = laplace_image_operator(cf->laplace(p), cf->at_zero, p, ord);
                        return numerical_laplace(operator_values, p, laplace_truncation(p, 10.0, cfg.quad.abs_tol), cfg.quad)
                            .value;
                    case Transform::sumudu:
                        if (cfg.target == ImageTarget::kernel) {
                            cl = sumudu_image_kernel(ord, p);
                            return numerical_sumudu(kernel, p, 1.0, cfg.quad).value;
                        }
                        cl = sumudu_image_operator(cf->laplace(1.0 / p) / p, cf->at_zero, p, ord);
                        return numerical_sumudu(operator_values, p, 10.0, cfg.quad).value;
                    case Transform::fourier:
                        cl = fourier_image_kernel(ord, p, cfg.fourier_mode);
                        return numerical_fourier_even(kernel, p, 0.05 * c, 1.0 / c, cfg.quad);
                }
                return kNaN;
            },
            o.flagged, flags);
        closed.values.push_back(cl);
        numeric.values.push_back(v.value_or(kNaN));
        diff.values.push_back(v ? std::abs(*v - cl) : kNaN);
    }
    Column flag = text_col("flag");
    flag.text = flags;
    const std::string what = cfg.target == ImageTarget::kernel ? "kernel" : "operator on " + cfg.fn;
    o.plot = {std::string(axis) + "-domain image of the " + what + ", varpi=" + format_number(ord.varpi()), axis,
              "image",
              {{"closed form", x.values, closed.values}, {"numerical", x.values, numeric.values}}};
    o.table.columns = {x, closed, numeric, diff, flag};
    return o;
}

Outcome run_invert(const ScenarioConfig& cfg) {
    const CatalogueImage& img = catalogue_image(cfg.image);
    Outcome o;
    Column t = num_col("t", "time");
    Column inv = num_col("inverted", "f");
    Column exact = num_col("exact", "f");
    Column err = num_col("abs_error", "f");
    std::vector<std::string> flags;
    for (double v : cfg.t_points) {
        t.values.push_back(v);
        const auto r = guarded([&] { return laplace_invert(img.image, v, cfg.inv); }, o.flagged, flags);
        const double ex = img.original(v);
        inv.values.push_back(r.value_or(kNaN));
        exact.values.push_back(ex);
        err.values.push_back(r ? std::abs(*r - ex) : kNaN);
    }
    Column flag = text_col("flag");
    flag.text = flags;
    o.plot = {"inverse Laplace of " + cfg.image + " (" + cfg.inv.describe() + ")", "t", "f(t)",
              {{"inverted", t.values, inv.values}, {"exact", t.values, exact.values}}};
    o.table.columns = {t, inv, exact, err, flag};
    return o;
}

DiffusionProblem problem(const ScenarioConfig& cfg, HeatModel model, std::optional<double> varpi) {
    DiffusionProblem p;
    p.kappa = cfg.kappa;
    p.boundary = cfg.boundary;
    p.model = model;
    if (varpi) p.ord = cfg.norm ? FracOrder::with_norm(*varpi, *cfg.norm) : FracOrder(*varpi);
    return p;
}

// Whole-grid solve; if the solver aborts, redo point by point so the rest
// of the grid survives with the failing points flagged.
SolutionGrid solve_flagged(const DiffusionProblem& prob, const GridSpec& grid, const InversionConfig& inv) {
    try {
        return solve(prob, grid, inv);
    } catch (const NumericError&) {
    } catch (const DomainError&) {
    }
    SolutionGrid out;
    out.mu_points = grid.mu;
    out.tau_points = grid.tau;
    for (double m : grid.mu) {
        for (double t : grid.tau) {
            try {
                const SolutionGrid g = solve(prob, GridSpec{{m}, {t}}, inv);
                out.values.push_back(g.values.front());
                out.flags.push_back(g.flags.front());
                out.meta = g.meta;
            } catch (const SingularityError&) {
                out.values.push_back(kNaN);
                out.flags.push_back(PointFlag::singularity);
            } catch (const NumericError&) {
                out.values.push_back(kNaN);
                out.flags.push_back(PointFlag::numeric_failure);
            } catch (const DomainError&) {
                out.values.push_back(kNaN);
                out.flags.push_back(PointFlag::numeric_failure);
            }
        }
    }
    return out;
}

Outcome run_heat(const ScenarioConfig& cfg) {
    const bool frac = cfg.model != HeatModel::classical;
    const DiffusionProblem prob = problem(cfg, cfg.model, frac ? std::optional<double>(cfg.varpis.front()) : std::nullopt);
    const GridSpec grid{cfg.mu_points, cfg.tau_points};
    const SolutionGrid g = solve_flagged(prob, grid, cfg.inv);
    const bool closed = cfg.model == HeatModel::classical && cfg.boundary.kind == BoundaryKind::step;

    Outcome o;
    Column mu = num_col("mu", "length");
    Column tau = num_col("tau", "time");
    Column pi = num_col("Pi", "lambda");
    Column cf = num_col("closed_form", "lambda");
    Column err = num_col("abs_error", "lambda");
    Column flag = text_col("flag");
    for (std::size_t i = 0; i < g.mu_points.size(); ++i) {
        for (std::size_t j = 0; j < g.tau_points.size(); ++j) {
            mu.values.push_back(g.mu_points[i]);
            tau.values.push_back(g.tau_points[j]);
            const double v = g.at(i, j);
            pi.values.push_back(v);
            flag.text.push_back(to_string(g.flag(i, j)));
            if (g.flag(i, j) != PointFlag::ok) ++o.flagged;
            if (closed) {
                const double ref = classical_closed_form(g.mu_points[i], g.tau_points[j], cfg.kappa,
                                                         cfg.boundary.amplitude);
                cf.values.push_back(ref);
                err.values.push_back(std::abs(v - ref));
            }
        }
    }
    o.table.columns = {mu, tau, pi};
    if (closed) {
        o.table.columns.push_back(cf);
        o.table.columns.push_back(err);
    }
    o.table.columns.push_back(flag);

    o.plot.title = to_string(cfg.model) + " heat model" +
                   (frac ? ", varpi=" + format_number(cfg.varpis.front()) : std::string()) +
                   ", kappa=" + format_number(cfg.kappa);
    o.plot.x_label = "mu";
    o.plot.y_label = "Pi(mu, tau)";
    for (std::size_t j = 0; j < g.tau_points.size(); ++j) {
        Series s{"tau=" + format_number(g.tau_points[j]), {}, {}};
        for (std::size_t i = 0; i < g.mu_points.size(); ++i) {
            s.x.push_back(g.mu_points[i]);
            s.y.push_back(g.at(i, j));
        }
        o.plot.series.push_back(std::move(s));
    }
    return o;
}

ComparisonTable compare_flagged(const ScenarioConfig& cfg, const GridSpec& grid) {
    ComparisonRequest req;
    req.model = cfg.model;
    req.kappa = cfg.kappa;
    req.boundary = cfg.boundary;
    req.varpis = cfg.varpis;
    req.norm = cfg.norm;
    try {
        return compare_models(req, grid, cfg.inv);
    } catch (const NumericError&) {
    } catch (const DomainError&) {
    }
    ComparisonTable t;
    t.mu_points = grid.mu;
    t.tau_points = grid.tau;
    t.inversion = cfg.inv.describe();
    const SolutionGrid base = solve_flagged(problem(cfg, HeatModel::classical, std::nullopt), grid, cfg.inv);
    t.columns.push_back({"classical", std::nullopt, base.values, std::vector<double>(base.values.size(), 0.0), base.flags});
    for (double w : cfg.varpis) {
        const SolutionGrid g = solve_flagged(problem(cfg, cfg.model, w), grid, cfg.inv);
        ComparisonColumn col{label_varpi(w), w, g.values, {}, g.flags};
        for (std::size_t k = 0; k < g.values.size(); ++k) col.diff.push_back(g.values[k] - base.values[k]);
        t.columns.push_back(std::move(col));
    }
    return t;
}

Outcome run_compare(const ScenarioConfig& cfg) {
    const GridSpec grid{cfg.mu_points, cfg.tau_points};
    const ComparisonTable t = compare_flagged(cfg, grid);
    Outcome o;
    Column mu = num_col("mu", "length");
    Column tau = num_col("tau", "time");
    for (double m : t.mu_points) {
        for (double s : t.tau_points) {
            mu.values.push_back(m);
            tau.values.push_back(s);
        }
    }
    o.table.columns = {mu, tau};
    for (const ComparisonColumn& c : t.columns) {
        const std::string name = c.varpi ? label_varpi(*c.varpi) : c.label;
        Column v = num_col(name, "lambda");
        v.values = c.values;
        o.table.columns.push_back(v);
        if (c.varpi) {
            Column d = num_col("diff[" + name + "]", "lambda");
            d.values = c.diff;
            o.table.columns.push_back(d);
        }
        Column f = text_col("flag[" + name + "]");
        for (PointFlag pf : c.flags) {
            f.text.push_back(to_string(pf));
            if (pf != PointFlag::ok) ++o.flagged;
        }
        o.table.columns.push_back(f);
    }

    // The plot shows every column along mu at the first tau.
    const std::size_t nt = t.tau_points.size();
    o.plot.title = "classical vs " + to_string(cfg.model) + " at tau=" + format_number(t.tau_points.front());
    o.plot.x_label = "mu";
    o.plot.y_label = "Pi(mu, tau)";
    for (const ComparisonColumn& c : t.columns) {
        Series s{c.varpi ? label_varpi(*c.varpi) : c.label, {}, {}};
        for (std::size_t i = 0; i < t.mu_points.size(); ++i) {
            s.x.push_back(t.mu_points[i]);
            s.y.push_back(c.values[i * nt]);
        }
        o.plot.series.push_back(std::move(s));
    }
    return o;
}

std::string with_extension(const std::string& path, const std::string& ext) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    if (has_ext) {
        const std::string cur = path.substr(dot);
        if (cur == ".csv" || cur == ".svg") return path.substr(0, dot) + ext;
    }
    return path + ext;
}

}  // namespace

Outcome compute(const ScenarioConfig& cfg) {
    Outcome o;
    switch (cfg.command) {
        case Command::kernel: o = run_kernel(cfg); break;
        case Command::deriv: o = run_deriv(cfg); break;
        case Command::image: o = run_image(cfg); break;
        case Command::invert: o = run_invert(cfg); break;
        case Command::heat: o = run_heat(cfg); break;
        case Command::compare: o = run_compare(cfg); break;
    }
    o.table.config = config_line(cfg);
    return o;
}

int run_scenario(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    Outcome o;
    try {
        o = compute(cfg);
    } catch (const ConfigError& e) {
        err << "sincfrac: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericError& e) {
        err << "sincfrac: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const DomainError& e) {
        err << "sincfrac: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }

    std::vector<std::string> written;
    try {
        if (cfg.format == OutputFormat::csv) {
            if (cfg.out) {
                emit_csv(o.table, *cfg.out);
                written.push_back(*cfg.out);
            } else {
                write_csv(o.table, out);
            }
        } else if (cfg.format == OutputFormat::svg) {
            emit_svg(o.plot, *cfg.out);
            written.push_back(*cfg.out);
        } else {
            const std::string csv = with_extension(*cfg.out, ".csv");
            const std::string svg = with_extension(*cfg.out, ".svg");
            emit_csv(o.table, csv);
            emit_svg(o.plot, svg);
            written = {csv, svg};
        }
    } catch (const OutputError& e) {
        err << "sincfrac: output error: " << e.what() << '\n';
        return kExitNumeric;
    }

    if (o.flagged > 0) {
        err << "sincfrac: " << o.flagged << " point(s) flagged (numeric failure or singularity); "
            << "partial results written\n";
        return kExitNumeric;
    }
    if (!cfg.quiet) {
        for (const std::string& w : written) err << "sincfrac: wrote " << w << '\n';
    }
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ScenarioConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "sincfrac: configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "sincfrac: configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return run_scenario(cfg, out, err);
}

}  // namespace sincfrac::cli
