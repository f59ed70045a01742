#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asymp/asymp.hpp"
#include "tables.hpp"

using asymp::Real;
using asymp::Context;
using asymp::ScopedPrecision;
using approx::json;

namespace {

struct Grid {
    std::string start = "0", stop = "10";
    int count = 101;
};

std::array<int, 3> parse_range(const std::string& s) {
    std::array<int, 3> r{0, 0, 1};
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    in >> r[0] >> c1 >> r[1];
    if (in.peek() == ':') in >> c2 >> r[2];
    if (!in || c1 != ':' || r[2] <= 0 || r[1] < r[0]) throw CLI::ValidationError("--n-range", "expected A:B[:STEP]");
    return r;
}

Grid parse_grid(const std::string& s) {
    Grid g;
    auto a = s.find(':'), b = s.rfind(':');
    if (a == std::string::npos || a == b) throw CLI::ValidationError("--grid", "expected START:STOP:COUNT");
    g.start = s.substr(0, a);
    g.stop = s.substr(a + 1, b - a - 1);
    g.count = std::stoi(s.substr(b + 1));
    if (g.count < 2) throw CLI::ValidationError("--grid", "COUNT must be at least 2");
    return g;
}

std::vector<Real> grid_points(const Grid& g) {
    Real a = asymp::from_string<Real>(g.start), b = asymp::from_string<Real>(g.stop);
    std::vector<Real> xs;
    for (int i = 0; i < g.count; ++i) xs.push_back(a + (b - a) * i / (g.count - 1));
    return xs;
}

std::vector<int> orders_for(const approx::RunConfig& cfg, int first, int step) {
    if (cfg.n_range) return asymp::range_orders((*cfg.n_range)[0], (*cfg.n_range)[1], (*cfg.n_range)[2]);
    if (!cfg.n) throw CLI::ValidationError("--n", "an order is required");
    int N = *cfg.n;
    int start = first + ((N - first) % step + step) % step;
    if (start > N) throw asymp::InvalidArgument("order too small for this problem");
    return asymp::range_orders(start, N, step);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw asymp::InvalidArgument("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

/// Cubic Hermite in the value using the stored first derivative; linear in f''.
template <typename R>
std::array<Real, 3> interpolate(const asymp::NumericProfile<R>& p, const Real& x) {
    auto it = std::lower_bound(p.xs.begin(), p.xs.end(), x, [](const R& a, const Real& b) { return Real(a) < b; });
    if (it == p.xs.end() || (it == p.xs.begin() && Real(*it) > x))
        throw asymp::DomainMismatch("oracle does not cover x = " + asymp::to_string(x, 8));
    std::size_t j = static_cast<std::size_t>(it - p.xs.begin());
    if (j == 0) return {Real(p.f[0]), Real(p.f1[0]), Real(p.f2[0])};
    std::size_t i = j - 1;
    Real h = Real(p.xs[j]) - Real(p.xs[i]), t = (x - Real(p.xs[i])) / h;
    auto hermite = [&](const Real& y0, const Real& y1, const Real& d0, const Real& d1) -> Real {
        Real t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
    };
    Real f = hermite(Real(p.f[i]), Real(p.f[j]), Real(p.f1[i]), Real(p.f1[j]));
    Real f1 = hermite(Real(p.f1[i]), Real(p.f1[j]), Real(p.f2[i]), Real(p.f2[j]));
    Real f2 = Real(p.f2[i]) + t * (Real(p.f2[j]) - Real(p.f2[i]));
    return {f, f1, f2};
}

// ------------------------------------------------------------------ profile

template <typename A, typename Oracle>
int write_profile(std::ostream& os, const A& a, const asymp::TruncatedSeries<Real>& series, const std::vector<Real>& xs,
                  int sig, const Oracle* oracle) {
    os << "x,f,f1,f2,series,effective";
    if (oracle) os << ",oracle_f,oracle_f1,oracle_f2";
    os << ",flag\n";
    int poles = 0;
    for (const auto& x : xs) {
        os << asymp::to_string(x, sig);
        try {
            auto j = asymp::eval_approximant(a, x);
            os << ',' << asymp::to_string(j.v, sig) << ',' << asymp::to_string(j.d1, sig) << ','
               << asymp::to_string(j.d2, sig) << ',' << asymp::to_string(asymp::evaluate(series, x).v, sig);
            try {
                os << ',' << asymp::to_string(asymp::effective_constant(a, x), sig);
            } catch (const asymp::Error&) {
                os << ',';
            }
            if (oracle) {
                auto o = interpolate(*oracle, x);
                os << ',' << asymp::to_string(o[0], sig) << ',' << asymp::to_string(o[1], sig) << ','
                   << asymp::to_string(o[2], sig);
            }
            os << ",\n";
        } catch (const asymp::PoleEncountered&) {
            ++poles;
            os << ",,,,,";
            if (oracle) os << ",,,";
            os << ",pole\n";
        }
    }
    return poles;
}

int cmd_profile(const std::string& problem, const approx::RunConfig& cfg, const Grid& grid, bool with_oracle,
                const std::string& out) {
    asymp::check_context(Context{cfg.precision});
    const Context predict_ctx{std::max(60, cfg.precision)};
    ScopedPrecision<Real> guard(predict_ctx);
    Output o(out);
    auto xs = grid_points(grid);
    asymp::PredictOptions<Real> opt;
    opt.ctx = predict_ctx;
    const int N = cfg.n.value_or(cfg.n_range ? (*cfg.n_range)[1] : 0);

    auto boundary_oracle = [&](asymp::BoundaryLayer p) {
        ScopedPrecision<Real> g(Context{cfg.oracle_precision});
        return asymp::boundary_layer_shoot<Real>(p, asymp::from_string<Real>(cfg.eta_inf), asymp::precision_tol<Real>(8)).second;
    };

    if (problem == "sakiadis" || problem == "blasius") {
        const bool blasius = problem == "blasius";
        const auto bl = blasius ? asymp::BoundaryLayer::Blasius : asymp::BoundaryLayer::Sakiadis;
        auto pred = blasius ? asymp::predict_blasius<Real>(orders_for(cfg, 5, 5), opt)
                            : asymp::predict_sakiadis_simple<Real>(orders_for(cfg, 5, 2), opt);
        auto r = pred.at(N);
        if (!r) throw asymp::NonConvergence(problem + ": no root at N = " + std::to_string(N));
        auto a = asymp::sacrificed_offset_reciprocal(bl, r->params[0], r->params[1], N);
        auto series = asymp::series_for(bl, r->params[0], N);
        std::optional<asymp::NumericProfile<Real>> oracle;
        if (with_oracle) oracle = boundary_oracle(bl);
        ScopedPrecision<Real> eval(Context{cfg.precision});
        write_profile(o.stream(), a, series, xs, cfg.precision, oracle ? &*oracle : nullptr);
    } else if (problem == "sakiadis-exp") {
        auto orders = asymp::sakiadis_exp_table_orders();
        if (cfg.n_range) orders = asymp::range_orders((*cfg.n_range)[0], (*cfg.n_range)[1], (*cfg.n_range)[2]);
        else orders.erase(std::remove_if(orders.begin(), orders.end(), [&](int k) { return k > N; }), orders.end());
        if (std::find(orders.begin(), orders.end(), N) == orders.end()) orders.push_back(N);
        auto pred = asymp::predict_sakiadis_exp<Real>(orders, opt);
        auto r = pred.at(N);
        if (!r) throw asymp::NonConvergence("sakiadis-exp: no root at N = " + std::to_string(N));
        auto a = asymp::sacrificed_exp_series(r->params[0], r->params[1], N);
        auto series = asymp::sakiadis_series(r->params[0], N);
        std::optional<asymp::NumericProfile<Real>> oracle;
        if (with_oracle) oracle = boundary_oracle(asymp::BoundaryLayer::Sakiadis);
        ScopedPrecision<Real> eval(Context{cfg.precision});
        write_profile(o.stream(), a, series, xs, cfg.precision, oracle ? &*oracle : nullptr);
    } else if (problem == "fp") {
        auto pred = asymp::predict_fp_z<Real>(orders_for(cfg, 4, 2), predict_ctx);
        auto r = pred.best_at(N);
        if (!r) throw asymp::NonConvergence("fp: no root at N = " + std::to_string(N));
        auto a = asymp::sacrificed_fp(r->params[0], N);
        auto series = asymp::fp_series(asymp::FpParams<Real>{r->params[0]}, N);
        std::optional<asymp::NumericProfile<long double>> oracle;
        if (with_oracle) {
            const long double eps = std::stold(cfg.eps.value_or("1e-8"));
            auto shot = asymp::fp_shoot_refined<long double>(eps, 1e-11L);
            long double r_max = std::stold(grid.stop) + 0.5L;
            oracle = asymp::fp_profile<long double>(shot.result.parameter, eps, shot.steps, r_max);
        }
        ScopedPrecision<Real> eval(Context{cfg.precision});
        write_profile(o.stream(), a, series, xs, cfg.precision, oracle ? &*oracle : nullptr);
    } else {
        throw CLI::ValidationError("--problem", "expected sakiadis, sakiadis-exp, blasius or fp");
    }
    return 0;
}

// ------------------------------------------------------------------ predict

int cmd_predict(const std::string& problem, const approx::RunConfig& cfg, approx::Format fmt, const std::string& out) {
    asymp::check_context(Context{cfg.precision});
    ScopedPrecision<Real> guard(Context{cfg.precision});
    asymp::PredictOptions<Real> opt;
    opt.ctx = Context{cfg.precision};
    asymp::ParameterPrediction<Real> pred;
    if (problem == "sakiadis") pred = asymp::predict_sakiadis_simple<Real>(orders_for(cfg, 5, 2), opt);
    else if (problem == "sakiadis-exp") pred = asymp::predict_sakiadis_exp<Real>(orders_for(cfg, 5, 1), opt);
    else if (problem == "blasius") pred = asymp::predict_blasius<Real>(orders_for(cfg, 5, 5), opt);
    else if (problem == "fp") pred = asymp::predict_fp_z<Real>(orders_for(cfg, 4, 2), opt.ctx);
    else throw CLI::ValidationError("--problem", "expected sakiadis, sakiadis-exp, blasius or fp");

    Output o(out);
    if (fmt == approx::Format::json) {
        o.stream() << asymp::to_json(pred).dump(1) << '\n';
        return 0;
    }
    o.stream() << "N,branch,selected";
    for (const auto& name : pred.param_names) o.stream() << ',' << name;
    o.stream() << ",residual\n";
    for (const auto& r : pred.records) {
        o.stream() << r.N << ',' << r.branch_id << ',' << (r.branch_id == pred.selected_branch ? 1 : 0);
        for (const auto& p : r.params) o.stream() << ',' << asymp::to_string(p);
        o.stream() << ',' << asymp::to_string(r.residual, 3) << '\n';
    }
    return 0;
}

// ------------------------------------------------------------------ shoot

int cmd_shoot(const std::string& problem, const approx::RunConfig& cfg, approx::Format fmt, const std::string& out) {
    Output o(out);
    if (problem == "fp") {
        const long double eps = std::stold(cfg.eps.value_or("1e-8"));
        auto shot = asymp::fp_shoot_refined<long double>(eps, 1e-11L);
        if (fmt == approx::Format::json) {
            o.stream() << json{{"problem", "fp"}, {"eps", cfg.eps.value_or("1e-8")},
                               {"z", asymp::to_string(shot.result.parameter)}, {"steps", shot.steps},
                               {"step_change", asymp::to_string(shot.change)},
                               {"iterations", shot.result.iterations}}.dump(1) << '\n';
        } else {
            asymp::write_csv(o.stream(), asymp::fp_profile<long double>(shot.result.parameter, eps, shot.steps, 10.5L, 256));
        }
        return 0;
    }
    if (problem != "sakiadis" && problem != "blasius")
        throw CLI::ValidationError("--problem", "expected sakiadis, blasius or fp");
    asymp::check_context(Context{cfg.oracle_precision});
    ScopedPrecision<Real> guard(Context{cfg.oracle_precision});
    auto bl = problem == "blasius" ? asymp::BoundaryLayer::Blasius : asymp::BoundaryLayer::Sakiadis;
    auto [shot, prof] = asymp::boundary_layer_shoot<Real>(bl, asymp::from_string<Real>(cfg.eta_inf), asymp::precision_tol<Real>(8));
    if (fmt == approx::Format::json) {
        o.stream() << json{{"problem", problem}, {"eta_inf", cfg.eta_inf}, {"kappa", asymp::to_string(shot.parameter)},
                           {"f_inf", asymp::to_string(prof.f.back())}, {"iterations", shot.iterations},
                           {"mismatch", asymp::to_string(shot.terminal_mismatch)}}.dump(1) << '\n';
    } else {
        asymp::write_csv(o.stream(), prof);
    }
    return 0;
}

// ------------------------------------------------------------------ virial

std::filesystem::path sibling_csv(const std::string& out) {
    std::filesystem::path p(out);
    p.replace_extension(".csv");
    return p;
}

int cmd_virial(const std::string& sub, const std::string& input, const approx::RunConfig& cfg,
               const std::optional<Grid>& grid_opt, approx::Format fmt, const std::string& out) {
    asymp::check_context(Context{cfg.precision});
    ScopedPrecision<Real> guard(Context{cfg.precision});
    if (input.empty()) throw CLI::ValidationError("--input", "a virial JSON file is required");
    auto v = asymp::load_virial<Real>(input);
    const int n_avail = static_cast<int>(v.coeffs.size());
    const Real tol = asymp::precision_tol<Real>(10);

    json doc;
    std::ostringstream table;
    bool ok = true;

    if (sub == "soft-sphere") {
        const int N = cfg.n.value_or(n_avail);
        auto a = asymp::build_soft_sphere(v, N);
        auto back = asymp::taylor_expansion(a, N - 1);
        std::vector<Real> src(v.coeffs.begin(), v.coeffs.begin() + N);
        Real mismatch = asymp::series_mismatch(back, asymp::TruncatedSeries<Real>(src), N - 1);
        ok = mismatch <= tol;
        doc = asymp::to_json(a);
        doc["consistency"] = {{"max_mismatch", asymp::to_string(mismatch, 3)}, {"ok", ok}};
        Grid g = grid_opt.value_or(Grid{"0", "1", 51});
        table << "x,Z_A,dZ_A\n";
        for (const auto& x : grid_points(g)) {
            table << asymp::to_string(x, cfg.precision) << ',';
            try {
                auto j = asymp::eval_approximant(a, x);
                table << asymp::to_string(j.v, cfg.precision) << ',' << asymp::to_string(j.d1, cfg.precision) << '\n';
            } catch (const asymp::PoleEncountered&) {
                table << ",\n";
            }
        }
    } else if (sub == "critical") {
        const int N = cfg.n.value_or(n_avail);
        auto a = asymp::build_critical_isotherm(v, N);
        auto back = asymp::taylor_expansion(a, N);
        std::vector<Real> src(N + 1, Real(0));
        for (int k = 1; k <= N; ++k) src[k] = *v.kTc * v.coeffs[k - 1];
        Real mismatch = asymp::series_mismatch(back, asymp::TruncatedSeries<Real>(src), N);
        ok = mismatch <= tol;
        doc = asymp::to_json(a);
        doc["consistency"] = {{"max_mismatch", asymp::to_string(mismatch, 3)}, {"ok", ok}};
        Grid g = grid_opt.value_or(Grid{"0", asymp::to_string(*v.rho_c), 51});
        table << "rho,P_A,dP_A\n";
        for (const auto& x : grid_points(g)) {
            table << asymp::to_string(x, cfg.precision) << ',';
            try {
                auto j = asymp::eval_approximant(a, x);
                table << asymp::to_string(j.v, cfg.precision) << ',' << asymp::to_string(j.d1, cfg.precision) << '\n';
            } catch (const asymp::DomainMismatch&) {
                table << ",\n";
            }
        }
    } else if (sub == "predict-rhoc") {
        std::vector<int> orders;
        if (cfg.n_range) orders = asymp::range_orders((*cfg.n_range)[0], (*cfg.n_range)[1], (*cfg.n_range)[2]);
        else orders = asymp::range_orders(1, cfg.n.value_or(n_avail), 1);
        auto pred = asymp::predict_rho_c(v, orders, Context{cfg.precision});
        doc = asymp::to_json(pred);
        table << "N,branch,selected,rho_c,residual\n";
        for (const auto& r : pred.records)
            table << r.N << ',' << r.branch_id << ',' << (r.branch_id == pred.selected_branch ? 1 : 0) << ','
                  << asymp::to_string(r.params[0]) << ',' << asymp::to_string(r.residual, 3) << '\n';
    } else {
        throw CLI::ValidationError("virial", "expected soft-sphere, critical or predict-rhoc");
    }

    if (out.empty()) {
        std::cout << (fmt == approx::Format::json ? doc.dump(1) + "\n" : table.str());
    } else {
        Output o(out);
        o.stream() << doc.dump(1) << '\n';
        Output c(sibling_csv(out).string());
        c.stream() << table.str();
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------------ domb-sykes

int cmd_domb_sykes(const std::string& z, int n, int window, const approx::RunConfig& cfg, approx::Format fmt,
                   const std::string& out) {
    asymp::check_context(Context{cfg.precision});
    ScopedPrecision<Real> guard(Context{cfg.precision});
    auto coeffs = asymp::fp_series(asymp::FpParams<Real>{asymp::from_string<Real>(z)}, n).coeffs;
    auto fit = asymp::domb_sykes(coeffs, window);
    Output o(out);
    if (fmt == approx::Format::json) {
        o.stream() << json{{"z", z}, {"n", n}, {"window", window}, {"intercept", asymp::to_string(fit.intercept)},
                           {"slope", asymp::to_string(fit.slope)}, {"residual", asymp::to_string(fit.residual, 3)}}.dump(1)
                   << '\n';
    } else {
        o.stream() << "inverse_order,ratio\n";
        for (std::size_t i = 0; i < fit.inverse_order.size(); ++i)
            o.stream() << asymp::to_string(fit.inverse_order[i]) << ',' << asymp::to_string(fit.ratio[i]) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic approximants: predictions, reference solutions and table reproduction"};
    app.require_subcommand(1);
    app.fallthrough();

    approx::RunConfig cfg;
    std::optional<int> precision, n;
    std::string n_range, format = "csv", out, eta_inf = "30", eps, input, grid, problem, z = "-2.3919564032";
    int table_id = 0, ds_n = 2000, ds_window = 10;
    bool oracle = false;

    app.add_option("--n", n, "approximant order");
    app.add_option("--n-range", n_range, "orders A:B[:STEP]");
    app.add_option("--precision", precision, "working precision in decimal digits (>= 15)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out, "output path (default stdout)");
    app.add_option("--eta-inf", eta_inf, "domain truncation for boundary-layer shooting");
    app.add_option("--eps", eps, "FP boundary offset u(1 - eps) = 0");

    auto* table = app.add_subcommand("table", "recompute a table and compare with golden values");
    table->add_option("id", table_id, "table number")->required()->check(CLI::Range(1, 5));

    auto* profile = app.add_subcommand("profile", "approximant, series and effective constant on a grid");
    profile->add_option("--problem", problem)->required();
    profile->add_option("--grid", grid, "START:STOP:COUNT");
    profile->add_flag("--oracle", oracle, "add interpolated shooting solution columns");

    std::string virial_sub;
    auto* virial = app.add_subcommand("virial", "virial-series approximants");
    virial->add_option("kind", virial_sub)->required()->check(CLI::IsMember({"soft-sphere", "critical", "predict-rhoc"}));
    virial->add_option("--input", input, "virial JSON file")->required();
    virial->add_option("--grid", grid, "START:STOP:COUNT");

    auto* predict = app.add_subcommand("predict", "per-order roots and branch assignment");
    predict->add_option("--problem", problem)->required();

    auto* shoot = app.add_subcommand("shoot", "numerical reference solution");
    shoot->add_option("--problem", problem)->required();

    auto* ds = app.add_subcommand("domb-sykes", "ratio-test radius of the FP series");
    ds->add_option("--z", z, "u(0)");
    ds->add_option("--terms", ds_n, "highest coefficient index");
    ds->add_option("--window", ds_window, "points in the fit");

    CLI11_PARSE(app, argc, argv);

    const auto fmt = format == "json" ? approx::Format::json : approx::Format::csv;
    cfg.n = n;
    if (!n_range.empty()) cfg.n_range = parse_range(n_range);
    cfg.eta_inf = eta_inf;
    if (!eps.empty()) cfg.eps = eps;

    try {
        if (table->parsed()) {
            cfg.precision = precision.value_or(60);
            auto t = approx::run_table(table_id, cfg);
            Output o(out);
            approx::write_table(o.stream(), t, fmt);
            std::cerr << "table " << table_id << ": " << t.checked() - t.failed() << "/" << t.checked()
                      << " values within tolerance\n";
            return t.ok() ? 0 : 1;
        }
        if (profile->parsed()) {
            cfg.precision = precision.value_or(15);
            return cmd_profile(problem, cfg, grid.empty() ? Grid{} : parse_grid(grid), oracle, out);
        }
        if (virial->parsed()) {
            cfg.precision = precision.value_or(60);
            std::optional<Grid> g;
            if (!grid.empty()) g = parse_grid(grid);
            return cmd_virial(virial_sub, input, cfg, g, fmt, out);
        }
        if (predict->parsed()) {
            cfg.precision = precision.value_or(60);
            return cmd_predict(problem, cfg, fmt, out);
        }
        if (shoot->parsed()) {
            cfg.oracle_precision = precision.value_or(30);
            return cmd_shoot(problem, cfg, fmt, out);
        }
        if (ds->parsed()) {
            cfg.precision = precision.value_or(60);
            return cmd_domb_sykes(z, ds_n, ds_window, cfg, fmt, out);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const asymp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
