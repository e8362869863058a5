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

#include "sincfrac/cli/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "sincfrac/cli/emit.hpp"

namespace sincfrac::cli {

namespace {

[[noreturn]] void reject(const std::string& key, const std::string& value, const std::string& rule) {
    std::ostringstream msg;
    msg << "--" << key << "=" << value << ": " << rule;
    throw ConfigError(msg.str());
}

double parse_number(const std::string& key, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size() || !std::isfinite(v)) {
        reject(key, text, "expected a finite number");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (text.empty() || end != begin + text.size() || v < -1000000 || v > 1000000) {
        reject(key, text, "expected an integer");
    }
    return static_cast<int>(v);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out;
}

std::string fmt(double v) { return format_number(v); }

template <class E>
E pick(const std::string& key, const std::string& value, const std::map<std::string, E>& choices) {
    auto it = choices.find(value);
    if (it != choices.end()) return it->second;
    std::string allowed;
    for (const auto& [name, _] : choices) allowed += (allowed.empty() ? "" : "|") + name;
    reject(key, value, "must be one of " + allowed);
}

void require_increasing(const std::string& key, const std::string& text, const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) reject(key, text, "values must be strictly increasing");
    }
}

void require_all(const std::string& key, const std::string& text, const std::vector<double>& v,
                 bool (*ok)(double), const std::string& rule) {
    for (double x : v) {
        if (!ok(x)) reject(key, text, rule + " (offending value " + fmt(x) + ")");
    }
}

std::vector<CatalogueFunction> build_functions() {
    return {
        {"constant", [](double) { return 1.0; }, [](double) { return 0.0; },
         [](double s) { return 1.0 / s; }, 1.0},
        {"exp-decay", [](double x) { return std::exp(-x); }, [](double x) { return -std::exp(-x); },
         [](double s) { return 1.0 / (s + 1.0); }, 1.0},
        {"linear", [](double x) { return x; }, [](double) { return 1.0; },
         [](double s) { return 1.0 / (s * s); }, 0.0},
        {"quadratic", [](double x) { return x * x; }, [](double x) { return 2.0 * x; },
         [](double s) { return 2.0 / (s * s * s); }, 0.0},
        {"sine", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
         [](double s) { return 1.0 / (s * s + 1.0); }, 0.0},
    };
}

std::vector<CatalogueImage> build_images() {
    return {
        {"heat-kernel", LaplaceImage([](cdouble s) { return std::exp(-std::sqrt(s)) / s; }),
         [](double t) { return std::erfc(0.5 / std::sqrt(t)); }},
        {"one-over-s", LaplaceImage([](cdouble s) { return 1.0 / s; }), [](double) { return 1.0; }},
        {"one-over-s2", LaplaceImage([](cdouble s) { return 1.0 / (s * s); }), [](double t) { return t; }},
        {"shifted-pole", LaplaceImage([](cdouble s) { return 1.0 / (s + 1.0); }),
         [](double t) { return std::exp(-t); }},
        {"sine", LaplaceImage([](cdouble s) { return 1.0 / (s * s + 1.0); }),
         [](double t) { return std::sin(t); }},
    };
}

const std::vector<CatalogueFunction>& functions() {
    static const std::vector<CatalogueFunction> f = build_functions();
    return f;
}

const std::vector<CatalogueImage>& images() {
    static const std::vector<CatalogueImage> i = build_images();
    return i;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::kernel: return "kernel";
        case Command::deriv: return "deriv";
        case Command::image: return "image";
        case Command::invert: return "invert";
        case Command::heat: return "heat";
        case Command::compare: return "compare";
    }
    return "?";
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::svg: return "svg";
        case OutputFormat::both: return "both";
    }
    return "?";
}

const CatalogueFunction& catalogue_function(const std::string& name) {
    for (const auto& f : functions()) {
        if (f.name == name) return f;
    }
    std::string allowed;
    for (const auto& n : catalogue_function_names()) allowed += (allowed.empty() ? "" : "|") + n;
    reject("fn", name, "must be one of " + allowed);
}

std::vector<std::string> catalogue_function_names() {
    std::vector<std::string> out;
    for (const auto& f : functions()) out.push_back(f.name);
    return out;
}

const CatalogueImage& catalogue_image(const std::string& name) {
    for (const auto& i : images()) {
        if (i.name == name) return i;
    }
    std::string allowed;
    for (const auto& n : catalogue_image_names()) allowed += (allowed.empty() ? "" : "|") + n;
    reject("image", name, "must be one of " + allowed);
}

std::vector<std::string> catalogue_image_names() {
    std::vector<std::string> out;
    for (const auto& i : images()) out.push_back(i.name);
    return out;
}

std::vector<double> parse_grid(const std::string& key, const std::string& text) {
    constexpr std::size_t kMaxPoints = 100000;
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) reject(key, text, "range must be start:stop:step");
        const double start = parse_number(key, parts[0]);
        const double stop = parse_number(key, parts[1]);
        const double step = parse_number(key, parts[2]);
        if (!(step > 0.0)) reject(key, text, "range step must be > 0");
        if (stop < start) reject(key, text, "range stop must be >= start");
        // Points start + i*step; the last one snaps to stop when it is within
        // 1e-9 steps of it.
        const double span = (stop - start) / step;
        const double count = std::floor(span + 1e-9);
        if (count + 1 > static_cast<double>(kMaxPoints)) reject(key, text, "range has too many points (max 100000)");
        const auto n = static_cast<std::size_t>(count);
        for (std::size_t i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
        if (std::abs(out.back() - stop) <= 1e-9 * step) out.back() = stop;
    } else {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_number(key, p));
        if (out.empty()) reject(key, text, "expected at least one value");
        if (out.size() > kMaxPoints) reject(key, text, "list has too many points (max 100000)");
    }
    return out;
}

BoundarySpec parse_boundary(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) reject("boundary", text, "expected step:<lambda0> or ramp:<slope>");
    const std::string kind = text.substr(0, colon);
    const double v = parse_number("boundary", text.substr(colon + 1));
    if (kind == "step") return BoundarySpec::step(v);
    if (kind == "ramp") return BoundarySpec::ramp(v);
    reject("boundary", text, "kind must be step or ramp");
}

FracOrder ScenarioConfig::order() const {
    return norm ? FracOrder::with_norm(varpis.front(), *norm) : FracOrder(varpis.front());
}

std::string config_line(const ScenarioConfig& cfg) {
    std::string out;
    for (const auto& [k, v] : cfg.record) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

ScenarioConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Sinc-kernel fractional calculus and anomalous heat diffusion", "sincfrac"};
    app.set_config("--config", "", "key = value file; flags override file values");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.get_formatter()->column_width(34);

    std::string command;
    app.add_option("command", command, "kernel | deriv | image | invert | heat | compare")->required();

    // Raw text first; each value is converted and range-checked below so
    // diagnostics carry the key, the value and the rule.
    std::vector<std::string> varpi, mu, tau, x, s, t;
    std::string norm, kappa, boundary, model, fn = "linear", a = "0", n = "0", transform = "laplace",
                                              of = "kernel", fourier_mode = "as-paper",
                                              image = "one-over-s", rel_tol = "1e-10", abs_tol = "1e-12",
                                              max_panels = "4096", panels = "kernel-zeros",
                                              method = "stehfest", stehfest_n = "14", stehfest_inner = "8", talbot_m = "32",
                                              talbot_scale = "0.4", format = "csv", out;
    bool probe = false, quiet = false;

    auto list = [&](const char* name, std::vector<std::string>& target, const char* help) {
        app.add_option(name, target, help)->delimiter(',')->allow_extra_args(false);
    };
    list("--varpi", varpi, "order(s) in (0,1); a comma list for compare and --probe");
    app.add_option("--norm", norm, "constant normalization override (> 0; default 1)");
    app.add_option("--kappa", kappa, "thermal diffusivity (> 0; default 1)");
    app.add_option("--boundary", boundary, "step:<lambda0> or ramp:<slope> (default step:1)");
    app.add_option("--model", model, "time-fractional | space-fractional | classical");
    list("--x", x, "kernel lags, start:stop:step or comma list");
    list("--mu", mu, "space points, start:stop:step or comma list");
    list("--tau", tau, "times, start:stop:step or comma list");
    list("--s", s, "transform abscissae (s, zeta or xi)");
    list("--t", t, "inversion times");
    app.add_option("--fn", fn, "constant | linear | quadratic | exp-decay | sine");
    app.add_option("--a", a, "lower terminal (default 0)");
    app.add_option("--n", n, "extra integer derivative order 0..4 (default 0)");
    app.add_flag("--probe", probe, "tabulate the operator across --varpi at one mu");
    app.add_option("--transform", transform, "laplace | sumudu | fourier");
    app.add_option("--of", of, "kernel | operator");
    app.add_option("--fourier-mode", fourier_mode, "as-paper | band-limited");
    app.add_option("--image", image, "one-over-s | one-over-s2 | shifted-pole | sine | heat-kernel");
    app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance (default 1e-10)");
    app.add_option("--abs-tol", abs_tol, "quadrature absolute tolerance (default 1e-12)");
    app.add_option("--max-panels", max_panels, "quadrature panel budget (default 4096)");
    app.add_option("--panels", panels, "kernel-zeros | uniform");
    app.add_option("--method", method, "stehfest | talbot (talbot: invert and classical heat only)");
    app.add_option("--stehfest-n", stehfest_n, "even Stehfest order in [2,20] (default 14)");
    app.add_option("--stehfest-inner", stehfest_inner,
                   "even Stehfest order on the Sumudu axis of space-fractional runs, [2,20] (default 8)");
    app.add_option("--talbot-m", talbot_m, "Talbot nodes in [8,512] (default 32)");
    app.add_option("--talbot-scale", talbot_scale, "Talbot contour scale (> 0; default 0.4)");
    app.add_option("--out", out, "output path (csv defaults to stdout)");
    app.add_option("--format", format, "csv | svg | both");
    app.add_flag("--quiet", quiet, "suppress the summary line");

    std::vector<std::string> argv = args;
    if (argv.empty()) argv.push_back("sincfrac");
    std::vector<const char*> cargs;
    for (const auto& s_ : argv) cargs.push_back(s_.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    ScenarioConfig cfg;
    cfg.command = pick<Command>("command", command,
                                {{"kernel", Command::kernel},
                                 {"deriv", Command::deriv},
                                 {"image", Command::image},
                                 {"invert", Command::invert},
                                 {"heat", Command::heat},
                                 {"compare", Command::compare}});
    auto& rec = cfg.record;
    rec.emplace_back("command", command);

    // Shared numeric settings.
    cfg.quad.rel_tol = parse_number("rel-tol", rel_tol);
    if (!(cfg.quad.rel_tol > 0.0 && cfg.quad.rel_tol < 1.0)) reject("rel-tol", rel_tol, "must lie in (0,1)");
    cfg.quad.abs_tol = parse_number("abs-tol", abs_tol);
    if (!(cfg.quad.abs_tol > 0.0)) reject("abs-tol", abs_tol, "must be > 0");
    cfg.quad.max_panels = parse_int("max-panels", max_panels);
    if (cfg.quad.max_panels < 16 || cfg.quad.max_panels > 1000000) {
        reject("max-panels", max_panels, "must lie in [16, 1000000]");
    }
    cfg.quad.panel_strategy = pick<PanelStrategy>(
        "panels", panels, {{"kernel-zeros", PanelStrategy::kernel_zeros}, {"uniform", PanelStrategy::uniform}});

    cfg.inv.method =
        pick<InversionMethod>("method", method, {{"stehfest", InversionMethod::stehfest}, {"talbot", InversionMethod::talbot}});
    cfg.inv.stehfest_order = parse_int("stehfest-n", stehfest_n);
    if (cfg.inv.stehfest_order < 2 || cfg.inv.stehfest_order > 20 || cfg.inv.stehfest_order % 2 != 0) {
        reject("stehfest-n", stehfest_n, "must be an even integer in [2,20]");
    }
    cfg.inv.sumudu_order = parse_int("stehfest-inner", stehfest_inner);
    if (cfg.inv.sumudu_order < 2 || cfg.inv.sumudu_order > 20 || cfg.inv.sumudu_order % 2 != 0) {
        reject("stehfest-inner", stehfest_inner, "must be an even integer in [2,20]");
    }
    cfg.inv.talbot_nodes = parse_int("talbot-m", talbot_m);
    if (cfg.inv.talbot_nodes < 8 || cfg.inv.talbot_nodes > 512) reject("talbot-m", talbot_m, "must lie in [8,512]");
    cfg.inv.talbot_scale = parse_number("talbot-scale", talbot_scale);
    if (!(cfg.inv.talbot_scale > 0.0)) reject("talbot-scale", talbot_scale, "must be > 0");

    const bool uses_order = cfg.command == Command::kernel || cfg.command == Command::deriv ||
                            cfg.command == Command::image || cfg.command == Command::compare;
    bool fractional = uses_order;

    if (cfg.command == Command::heat || cfg.command == Command::compare) {
        const std::string m = model.empty() ? (cfg.command == Command::heat ? "classical" : "time-fractional") : model;
        cfg.model = pick<HeatModel>("model", m,
                                    {{"time-fractional", HeatModel::time_fractional},
                                     {"space-fractional", HeatModel::space_fractional},
                                     {"classical", HeatModel::classical}});
        if (cfg.command == Command::compare && cfg.model == HeatModel::classical) {
            reject("model", m, "compare needs time-fractional or space-fractional");
        }
        rec.emplace_back("model", m);
        fractional = cfg.model != HeatModel::classical;
    }

    const std::string default_varpi = cfg.command == Command::compare ? "0.25,0.5,0.75,0.99" : "0.5";
    const std::string varpi_text = varpi.empty() ? default_varpi : join(varpi);
    if (fractional || !varpi.empty()) {
        cfg.varpis.clear();
        std::stringstream ss(varpi_text);
        for (std::string p; std::getline(ss, p, ',');) {
            const double v = parse_number("varpi", p);
            if (!(v > 0.0 && v < 1.0)) reject("varpi", p, "varpi must lie in open interval (0,1)");
            cfg.varpis.push_back(v);
        }
        const bool many = cfg.command == Command::compare || (cfg.command == Command::deriv && probe);
        if (cfg.varpis.empty()) reject("varpi", varpi_text, "expected at least one value");
        if (fractional && !many && cfg.varpis.size() != 1) {
            reject("varpi", varpi_text, "this command takes exactly one value");
        }
        require_increasing("varpi", varpi_text, cfg.varpis);
    }
    if (fractional) {
        rec.emplace_back("varpi", varpi_text);
        if (!norm.empty()) {
            cfg.norm = parse_number("norm", norm);
            if (!(*cfg.norm > 0.0)) reject("norm", norm, "must be > 0");
        }
        rec.emplace_back("norm", norm.empty() ? "1" : fmt(*cfg.norm));
    } else if (!norm.empty()) {
        cfg.norm = parse_number("norm", norm);
        if (!(*cfg.norm > 0.0)) reject("norm", norm, "must be > 0");
    }

    auto grid = [&](const char* key, const std::vector<std::string>& raw, const std::string& dflt,
                    std::vector<double>& target) {
        const std::string text = raw.empty() ? dflt : join(raw);
        target = parse_grid(key, text);
        require_increasing(key, text, target);
        rec.emplace_back(key, text);
        return text;
    };

    switch (cfg.command) {
        case Command::kernel: {
            grid("x", x, "-4:4:0.02", cfg.x_points);
            break;
        }
        case Command::deriv: {
            const CatalogueFunction& f = catalogue_function(fn);
            cfg.fn = f.name;
            rec.emplace_back("fn", cfg.fn);
            cfg.a = parse_number("a", a);
            rec.emplace_back("a", fmt(cfg.a));
            cfg.n = parse_int("n", n);
            if (cfg.n < 0 || cfg.n > 4) reject("n", n, "must lie in [0,4]");
            rec.emplace_back("n", std::to_string(cfg.n));
            const std::string text = grid("mu", mu, "0.5,1,2", cfg.mu_points);
            for (double m : cfg.mu_points) {
                const bool ok = cfg.n == 0 ? m >= cfg.a : m > cfg.a;
                if (!ok) {
                    reject("mu", text, std::string("every mu must be ") + (cfg.n == 0 ? ">= a" : "> a when n > 0") +
                                           " (a=" + fmt(cfg.a) + ", offending value " + fmt(m) + ")");
                }
            }
            cfg.probe = probe;
            if (probe) {
                if (cfg.mu_points.size() != 1) reject("mu", text, "--probe takes exactly one mu");
                if (cfg.n != 0) reject("n", n, "--probe requires n = 0");
                rec.emplace_back("probe", "true");
            }
            rec.emplace_back("rel-tol", fmt(cfg.quad.rel_tol));
            rec.emplace_back("abs-tol", fmt(cfg.quad.abs_tol));
            rec.emplace_back("max-panels", std::to_string(cfg.quad.max_panels));
            rec.emplace_back("panels", panels);
            break;
        }
        case Command::image: {
            cfg.transform = pick<Transform>("transform", transform,
                                            {{"laplace", Transform::laplace},
                                             {"sumudu", Transform::sumudu},
                                             {"fourier", Transform::fourier}});
            cfg.target = pick<ImageTarget>("of", of, {{"kernel", ImageTarget::kernel}, {"operator", ImageTarget::op}});
            rec.emplace_back("transform", transform);
            rec.emplace_back("of", of);
            if (cfg.transform == Transform::fourier) {
                if (cfg.target == ImageTarget::op) reject("of", of, "fourier supports --of kernel only");
                cfg.fourier_mode = pick<FourierMode>(
                    "fourier-mode", fourier_mode,
                    {{"as-paper", FourierMode::as_paper}, {"band-limited", FourierMode::band_limited}});
                rec.emplace_back("fourier-mode", fourier_mode);
            }
            if (cfg.target == ImageTarget::op) {
                cfg.fn = catalogue_function(fn).name;
                rec.emplace_back("fn", cfg.fn);
            }
            const char* dflt = cfg.transform == Transform::fourier ? "0:8:0.1" : "0.5,1,2,5";
            const std::string text = grid("s", s, dflt, cfg.s_points);
            if (cfg.transform != Transform::fourier) {
                require_all("s", text, cfg.s_points, [](double v) { return v > 0.0; },
                            "abscissae must be > 0");
            }
            rec.emplace_back("rel-tol", fmt(cfg.quad.rel_tol));
            rec.emplace_back("abs-tol", fmt(cfg.quad.abs_tol));
            rec.emplace_back("max-panels", std::to_string(cfg.quad.max_panels));
            rec.emplace_back("panels", panels);
            break;
        }
        case Command::invert: {
            cfg.image = catalogue_image(image).name;
            rec.emplace_back("image", cfg.image);
            const std::string text = grid("t", t, "0.1,1,10", cfg.t_points);
            require_all("t", text, cfg.t_points, [](double v) { return v > 0.0; }, "times must be > 0");
            rec.emplace_back("method", cfg.inv.describe());
            break;
        }
        case Command::heat:
        case Command::compare: {
            cfg.kappa = parse_number("kappa", kappa.empty() ? "1" : kappa);
            if (!(cfg.kappa > 0.0)) reject("kappa", kappa, "must be > 0");
            rec.emplace_back("kappa", fmt(cfg.kappa));
            cfg.boundary = parse_boundary(boundary.empty() ? "step:1" : boundary);
            rec.emplace_back("boundary", cfg.boundary.describe());
            const std::string mt = grid("mu", mu, "0:4:0.1", cfg.mu_points);
            require_all("mu", mt, cfg.mu_points, [](double v) { return v >= 0.0; }, "mu must be >= 0");
            const std::string tt = grid("tau", tau, cfg.command == Command::heat ? "0.25,1,4" : "1", cfg.tau_points);
            require_all("tau", tt, cfg.tau_points, [](double v) { return v > 0.0; }, "tau must be > 0");
            // The fractional images are defined for Re(s) > 0 only, which the
            // Talbot contour leaves.
            if (cfg.model != HeatModel::classical && cfg.inv.method == InversionMethod::talbot) {
                reject("method", method, "talbot applies to the classical model only; fractional models use stehfest");
            }
            rec.emplace_back("method", cfg.inv.describe());
            if (cfg.model == HeatModel::space_fractional) {
                rec.emplace_back("stehfest-inner", std::to_string(cfg.inv.sumudu_order));
            }
            break;
        }
    }
    if (cfg.command != Command::invert && cfg.command != Command::heat && cfg.command != Command::compare &&
        cfg.inv.method == InversionMethod::talbot) {
        reject("method", method, "only invert and heat perform inversions");
    }

    cfg.format = pick<OutputFormat>("format", format,
                                    {{"csv", OutputFormat::csv}, {"svg", OutputFormat::svg}, {"both", OutputFormat::both}});
    if (!out.empty()) cfg.out = out;
    if (cfg.format != OutputFormat::csv && !cfg.out) reject("format", format, "svg output requires --out");
    cfg.quiet = quiet;
    return cfg;
}

}  // namespace sincfrac::cli
