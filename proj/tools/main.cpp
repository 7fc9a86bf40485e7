#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "egrav/egrav.hpp"

using namespace egrav;
using egrav::cli::json;
using egrav::cli::Key;
using egrav::cli::Params;
using egrav::cli::Run;

namespace {


std::vector<double> grid(double lo, double hi, long long n, const std::string& scale, const std::string& what) {
    if (n < 1 || n > 100000) throw ValidationError(what + ": point count must be in [1, 100000]");
    ScanAxis a{what, lo, hi, std::size_t(n), scale == "log" ? AxisScale::log : AxisScale::linear};
    if (scale != "log" && scale != "lin") throw ValidationError(what + ": scale must be lin or log");
    return axis_values(a);
}

ShapeKind kind_for(ConfigLabel label) {
    return label == ConfigLabel::a || label == ConfigLabel::c ? ShapeKind::oblate : ShapeKind::prolate;
}

struct CurvePoint {
    double value = 0.0;  // E_G / (G M^2 / R)
    Method method = Method::closed_form;
    double err = 0.0;
};

// Unit mass, equal-volume sphere radius 1 m.
CurvePoint curve_point(Regime regime, ConfigLabel label, double eps, double lambda, const std::string& method,
                       double tol, int cells, GammaParameter g) {
    const double b = 2.0 * lambda;
    const bool sphere = label == ConfigLabel::sphere || eps == 1.0;
    const Shape shape = sphere ? Shape::sphere(1.0) : equivalent_spheroid(1.0, eps, kind_for(label));
    const DensityProfile profile = regime == Regime::uniform        ? DensityProfile::uniform(shape, 1.0)
                                   : regime == Regime::thomas_fermi ? DensityProfile::thomas_fermi(shape, 1.0)
                                                                    : DensityProfile::gaussian(shape, 1.0);
    const SuperpositionConfig cfg = sphere ? SuperpositionConfig::make(shape, b, Axis::symmetry)
                                           : SuperpositionConfig::labelled(shape, b, label);
    SelfEnergyResult r;
    if (method == "oracle") {
        r = eg_bruteforce(profile, cfg, VoxelOptions{cells, true, 2.0}, g);
    } else if (method == "numeric" || (method == "auto" && !sphere)) {
        r = eg_numeric(profile, cfg, NumericOptions{tol, 20}, g);
    } else if (method == "limit") {
        if (regime == Regime::uniform) r = eg_uniform_spheroid_limit(cfg, 1.0, g);
        else if (regime == Regime::thomas_fermi && label == ConfigLabel::b)
            r = eg_tf_prolate_limit(b / (2.0 * shape.c), 1.0, shape.a, shape.a / shape.c, g);
        else throw ValidationError("limit formulas exist for uniform configs a, b and TF config b");
    } else if (method == "closed" || method == "auto") {
        if (!sphere) throw ValidationError("closed forms exist only for spheres; use numeric or limit");
        r = regime == Regime::uniform        ? eg_uniform_sphere(lambda, 1.0, 1.0, g)
            : regime == Regime::thomas_fermi ? eg_tf_sphere(lambda, 1.0, 1.0, g)
                                             : eg_gaussian_sphere(lambda, 1.0, 1.0, g);
    } else {
        throw ValidationError("method must be auto, closed, numeric, limit or oracle");
    }
    return {r.value / codata2018.G, r.method, r.rel_error};
}

// eg-curve

std::vector<Key> eg_curve_keys() {
    return {{"regime", "uniform", "uniform | tf | gaussian"},
            {"config", "sphere", "sphere | a | b | c | d"},
            {"epsilon", "0.5", "minor/major axis ratio"},
            {"lambda_min", "0", "b/(2R) start"},
            {"lambda_max", "3", "b/(2R) end"},
            {"lambda_points", "31", "grid points"},
            {"lambda_scale", "lin", "lin | log"},
            {"method", "auto", "auto | closed | numeric | limit | oracle"},
            {"tol", "1e-6", "quadrature relative tolerance"},
            {"cells", "48", "oracle cells across the body"},
            {"gamma", "standard", "standard | alternative | value"}};
}

void eg_curve(const Params& p, Run& run) {
    const Regime regime = parse_regime(p.str("regime"));
    const ConfigLabel label = parse_config_label(p.str("config"));
    const double eps = p.num("epsilon");
    if (!(eps > 0.0 && eps <= 1.0)) throw ValidationError("epsilon must be in (0, 1]");
    const auto lambdas = grid(p.num("lambda_min"), p.num("lambda_max"), p.integer("lambda_points"),
                              p.str("lambda_scale"), "lambda");
    if (lambdas.front() < 0.0) throw ValidationError("lambda must be >= 0");
    const GammaParameter g = cli::parse_gamma(p.str("gamma"));
    CsvTable t("eg-curve", {{"lambda", "1"}, {"EG_dimensionless", "1"}, {"method", "-"}, {"err", "1"}});
    for (double l : lambdas) {
        const CurvePoint c = curve_point(regime, label, eps, l, p.str("method"), p.num("tol"), int(p.integer("cells")), g);
        t.add_row({l, c.value, std::string(to_string(c.method)), c.err});
    }
    run.add_table("eg_curve", t);
}

// contour

std::vector<Key> contour_keys() {
    return {{"pair", "a_vs_sphere", "a_vs_sphere | d_vs_sphere | c_vs_sphere | a_vs_d | a_vs_c"},
            {"regime", "uniform", "uniform | tf"},
            {"eps_min", "0.01", ""},
            {"eps_max", "1", ""},
            {"eps_points", "12", ""},
            {"eps_scale", "lin", "lin | log"},
            {"lambda_min", "0.005", "b/(2R), must be > 0"},
            {"lambda_max", "3", ""},
            {"lambda_points", "16", ""},
            {"lambda_scale", "lin", "lin | log"},
            {"tol", "1e-6", "quadrature relative tolerance"}};
}

void contour(const Params& p, Run& run) {
    const std::string pair = p.str("pair");
    const auto sep = pair.find("_vs_");
    if (sep == std::string::npos) throw ValidationError("pair must look like a_vs_sphere");
    const ConfigLabel first = parse_config_label(pair.substr(0, sep));
    const ConfigLabel second = parse_config_label(pair.substr(sep + 4));
    const Regime regime = parse_regime(p.str("regime"));
    if (regime == Regime::gaussian) throw ValidationError("contour regime must be uniform or tf");
    const auto eps = grid(p.num("eps_min"), p.num("eps_max"), p.integer("eps_points"), p.str("eps_scale"), "epsilon");
    const auto lambdas = grid(p.num("lambda_min"), p.num("lambda_max"), p.integer("lambda_points"),
                              p.str("lambda_scale"), "lambda");
    if (!(lambdas.front() > 0.0)) throw ValidationError("contour lambda must be > 0");
    if (!(eps.front() > 0.0) || eps.back() > 1.0) throw ValidationError("epsilon must be in (0, 1]");
    const double tol = p.num("tol");
    CsvTable t("contour", {{"epsilon", "1"}, {"lambda", "1"}, {"EG_first", "1"}, {"EG_second", "1"}, {"ratio", "1"}});
    for (double e : eps)
        for (double l : lambdas) {
            const auto value = [&](ConfigLabel c) {
                return curve_point(regime, c, e, l, c == ConfigLabel::sphere ? "closed" : "numeric", tol, 48, {}).value;
            };
            const double v1 = value(first), v2 = value(second);
            t.add_row({e, l, v1, v2, v1 / v2});
        }
    run.add_table("contour", t);
}

// Scenario keys shared by lifetime, decoherence and feasibility.

std::vector<Key> scenario_keys() {
    return {{"preset", "", "named scenario"},
            {"species", "", "species name"},
            {"N", "", "atom number"},
            {"R", "", "condensate radius or width (m)"},
            {"a_s", "", "scattering length (m)"},
            {"omega", "", "trap frequency (rad/s)"},
            {"regime", "", "tf | gaussian"},
            {"T", "", "temperature (K)"},
            {"thermal_model", "", "gaussian_cloud | tf_cloud"},
            {"mu", "", "thermal-cloud chemical potential (J)"},
            {"P", "", "background pressure (Pa)"},
            {"background", "", "background species"},
            {"background_T", "", "background temperature (K)"},
            {"C6", "", "background C6 (J m^6)"},
            {"gamma", "", "standard | alternative | value"},
            {"threshold", "", "dominance ratio"},
            {"density_scale", "", "peak | mean"}};
}

Scenario build_scenario(const Params& p) {
    // Without a preset, unspecified fields come from cs-4e9-1um.
    Scenario s = preset(p.str("preset").empty() ? "cs-4e9-1um" : p.str("preset"));
    if (p.str("preset").empty()) s.name = "custom";
    if (p.given("species")) s.species = p.str("species");
    if (p.given("N")) s.N = p.num("N");
    if (p.given("R")) s.R = p.num("R");
    if (p.given("a_s")) s.a_s = p.num("a_s");
    if (p.given("omega")) s.omega = p.num("omega");
    if (p.given("regime")) {
        s.regime = parse_regime(p.str("regime"));
        if (s.regime == Regime::uniform) throw ValidationError("scenario regime must be tf or gaussian");
    }
    if (p.given("T")) s.temperature = p.num("T");
    if (p.given("thermal_model")) {
        const std::string m = p.str("thermal_model");
        if (m == "gaussian_cloud") s.thermal_model = ThermalModel::gaussian_cloud;
        else if (m == "tf_cloud") s.thermal_model = ThermalModel::tf_cloud;
        else throw ValidationError("thermal_model must be gaussian_cloud or tf_cloud");
    }
    if (p.given("mu")) s.mu = p.num("mu");
    if (p.given("P")) s.pressure = p.num("P");
    if (p.given("background")) s.background = p.str("background");
    if (p.given("background_T")) s.background_temperature = p.num("background_T");
    if (p.given("C6")) s.background_c6 = p.num("C6");
    if (p.given("gamma")) s.gamma = cli::parse_gamma(p.str("gamma")).gamma;
    if (p.given("threshold")) s.threshold = p.num("threshold");
    if (p.given("density_scale")) {
        const std::string d = p.str("density_scale");
        if (d == "peak") s.density_scale = DensityScale::peak;
        else if (d == "mean") s.density_scale = DensityScale::mean;
        else throw ValidationError("density_scale must be peak or mean");
    }
    return s;
}

json scenario_json(const Scenario& s) {
    return {{"name", s.name},
            {"species", s.species},
            {"N", s.N},
            {"R_m", s.R},
            {"a_s_m", s.a_s},
            {"omega_rad_s", s.omega},
            {"regime", std::string(to_string(s.regime))},
            {"T_K", s.temperature},
            {"thermal_model", std::string(to_string(s.thermal_model))},
            {"mu_J", s.mu},
            {"P_Pa", s.pressure},
            {"background", s.background},
            {"background_T_K", s.background_temperature},
            {"gamma", s.gamma},
            {"threshold", s.threshold}};
}

// lifetime

std::vector<Key> lifetime_keys() {
    auto k = scenario_keys();
    k.push_back({"mode", "condensate", "condensate | sphere"});
    k.push_back({"mass", "1e-14", "sphere mass (kg), sphere mode"});
    k.push_back({"radius", "1e-6", "sphere radius (m), sphere mode"});
    k.push_back({"b", "", "sphere separation (m); empty for far field"});
    k.push_back({"t", "0", "time for the survival probability (s)"});
    k.push_back({"samples", "0", "number of sampled collapse times"});
    k.push_back({"seed", "1", "sampler seed"});
    return k;
}

void lifetime(const Params& p, Run& run) {
    const std::string mode = p.str("mode");
    double E = 0.0;
    std::string label;
    json info;
    if (mode == "sphere") {
        const double M = p.num("mass"), R = p.num("radius");
        const GammaParameter g = cli::parse_gamma(p.str("gamma"));
        const double tau = sphere_lifetime(M, R, p.opt_num("b"), g);
        E = codata2018.hbar / tau;
        label = p.given("b") ? "sphere" : "sphere-far";
        info = {{"mass_kg", M}, {"radius_m", R}};
    } else if (mode == "condensate") {
        const Scenario s = build_scenario(p);
        const double tau = bec_touching_lifetime(lookup_species(s.species).mass(), s.N, s.R, s.regime,
                                                 make_gamma(s.gamma));
        E = codata2018.hbar / tau;
        label = s.name;
        info = scenario_json(s);
    } else {
        throw ValidationError("mode must be condensate or sphere");
    }
    const CollapseLaw law = CollapseLaw::from_energy(E);
    const double t = p.num("t");
    const Survival sv = survival_probability(E, t);
    CsvTable tab("lifetime", {{"case", "-"}, {"E_G", "J"}, {"tau", "s"}, {"rate", "s^-1"}, {"t", "s"},
                              {"ln_Ps", "1"}, {"Pd", "1"}});
    tab.add_row({label, law.E_G, law.tau, law.rate, t, sv.log_ps, sv.pd});
    run.add_table("lifetime", tab);

    const long long n = p.integer("samples");
    if (n < 0 || n > 100000000) throw ValidationError("samples must be in [0, 1e8]");
    json summary = {{"case", label}, {"inputs", info}, {"E_G_J", law.E_G}, {"tau_s", law.tau}};
    if (n > 0) {
        const auto seed = static_cast<std::uint64_t>(p.integer("seed"));
        const auto times = sample_collapse_times(E, std::size_t(n), seed);
        CsvTable st("collapse-samples", {{"index", "1"}, {"t", "s"}});
        long double sum = 0.0L;
        for (std::size_t i = 0; i < times.size(); ++i) {
            st.add_row({static_cast<long long>(i), times[i]});
            sum += times[i];
        }
        run.add_table("samples", st);
        summary["samples"] = {{"count", n},
                              {"seed", seed},
                              {"generator", "mt19937_64"},
                              {"mean_s", double(sum / times.size())},
                              {"ks_statistic", ks_statistic(times, law.tau)}};
    }
    run.add_json("lifetime_summary.json", summary);
}

// decoherence

std::vector<Key> decoherence_keys() { return scenario_keys(); }

void decoherence(const Params& p, Run& run) {
    const Scenario s = build_scenario(p);
    const RateReport r = evaluate(s);
    CsvTable t("decoherence", {{"channel", "-"}, {"rate", "s^-1"}, {"exponent", "s^-1"}, {"N_power", "1"}});
    t.add_row({std::string("three_body"), r.channels.gamma3, r.channels.Gamma3, 1LL});
    t.add_row({std::string("thermal"), r.channels.gammaT, r.channels.GammaT, 2LL});
    t.add_row({std::string("foreign"), r.channels.gammaF, r.channels.GammaF, 1LL});
    t.add_row({std::string("collapse"), r.collapse_rate, r.collapse_rate, 0LL});
    run.add_table("decoherence", t);
    run.add_json("decoherence_summary.json", {{"scenario", scenario_json(s)},
                                              {"collapse_rate_s^-1", r.collapse_rate},
                                              {"total_decoherence_s^-1", r.channels.total()},
                                              {"ratio", r.ratio},
                                              {"verdict", std::string(to_string(r.verdict))}});
}

// feasibility

std::vector<Key> feasibility_keys() {
    auto k = scenario_keys();
    k.push_back({"mode", "scenario", "scenario | phases | casimir"});
    k.push_back({"axis1", "", "param:min:max:points[:log]"});
    k.push_back({"axis2", "", "param:min:max:points[:log]"});
    k.push_back({"mass", "1e-14", "test mass (kg), phases and casimir modes"});
    k.push_back({"radius", "1e-6", "test mass radius (m), casimir mode"});
    k.push_back({"eps_r", "5", "relative permittivity, casimir mode"});
    k.push_back({"d", "200e-6", "separation (m), phases mode"});
    k.push_back({"b", "250e-6", "superposition size (m), phases mode"});
    k.push_back({"t", "2.5", "time (s), phases mode"});
    return k;
}

ScanAxis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() != 4 && parts.size() != 5) throw ValidationError("axis '" + text + "': expected param:min:max:points[:log]");
    ScanAxis a;
    a.parameter = parts[0];
    a.min = parse_double(parts[1], "axis min");
    a.max = parse_double(parts[2], "axis max");
    const long long n = parse_integer(parts[3], "axis points");
    if (n < 1) throw ValidationError("axis '" + text + "': points must be >= 1");
    a.points = std::size_t(n);
    if (parts.size() == 5) {
        if (parts[4] == "log") a.scale = AxisScale::log;
        else if (parts[4] != "lin") throw ValidationError("axis '" + text + "': scale must be lin or log");
    }
    return a;
}

void feasibility(const Params& p, Run& run) {
    const std::string mode = p.str("mode");
    if (mode == "phases") {
        const Phases ph = entanglement_phases(p.num("mass"), p.num("d"), p.num("b"), p.num("t"));
        CsvTable t("phases", {{"phi1", "rad"}, {"phi2", "rad"}, {"sum", "rad"}});
        t.add_row({ph.phi1, ph.phi2, ph.sum()});
        run.add_table("phases", t);
        return;
    }
    if (mode == "casimir") {
        const double d = casimir_min_separation(p.num("mass"), p.num("radius"), p.num("eps_r"));
        CsvTable t("casimir", {{"min_gap", "m"}, {"min_gap_over_R", "1"}});
        t.add_row({d, d / p.num("radius")});
        run.add_table("casimir", t);
        return;
    }
    if (mode != "scenario") throw ValidationError("mode must be scenario, phases or casimir");

    ScanRequest req;
    req.base = build_scenario(p);
    if (!p.str("axis1").empty()) req.axes.push_back(parse_axis(p.str("axis1")));
    if (!p.str("axis2").empty()) {
        if (req.axes.empty()) throw ValidationError("axis2 given without axis1");
        req.axes.push_back(parse_axis(p.str("axis2")));
    }
    std::vector<ScanPoint> points;
    if (req.axes.empty()) points.push_back({{}, evaluate(req.base)});
    else points = dominance_scan(req);

    std::vector<CsvColumn> cols;
    for (const auto& a : req.axes) cols.push_back({a.parameter, a.parameter == "N" ? "1" : a.parameter == "R" ? "m"
                                                                 : a.parameter == "a_s"                    ? "m"
                                                                 : a.parameter == "omega"                  ? "rad/s"
                                                                 : a.parameter == "T"                      ? "K"
                                                                 : a.parameter == "P"                      ? "Pa"
                                                                                                           : "1"});
    for (CsvColumn c : std::vector<CsvColumn>{{"E_G", "J"},
                                              {"tau", "s"},
                                              {"collapse_rate", "s^-1"},
                                              {"Gamma3", "s^-1"},
                                              {"GammaT", "s^-1"},
                                              {"GammaF", "s^-1"},
                                              {"ratio", "1"},
                                              {"verdict", "-"}})
        cols.push_back(c);
    CsvTable t("feasibility", cols);
    std::map<std::string, long long> counts;
    std::size_t best = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        std::vector<CsvTable::Cell> row;
        for (double v : pt.values) row.push_back(v);
        const RateReport& r = pt.report;
        for (double v : {r.E_G, r.tau, r.collapse_rate, r.channels.Gamma3, r.channels.GammaT, r.channels.GammaF, r.ratio})
            row.push_back(v);
        row.push_back(std::string(to_string(r.verdict)));
        t.add_row(std::move(row));
        ++counts[std::string(to_string(r.verdict))];
        if (r.ratio > points[best].report.ratio) best = i;
    }
    run.add_table("feasibility", t);
    json bj = {{"index", best}, {"ratio", points[best].report.ratio},
               {"verdict", std::string(to_string(points[best].report.verdict))}};
    json vals = json::array();
    for (double v : points[best].values) vals.push_back(v);
    bj["axis_values"] = vals;
    run.add_json("feasibility_summary.json",
                 {{"scenario", scenario_json(req.base)}, {"points", points.size()}, {"verdict_counts", counts}, {"best", bj}});
}

// oracle-check

std::vector<Key> oracle_keys() {
    return {{"case", "all", "case name or all"},
            {"cells", "48", "voxel cells across the body at the coarse level"},
            {"tol", "", "override the case tolerance"}};
}

struct OracleCase {
    std::string name;
    double reference;
    double oracle;
    double tol;
};

std::vector<std::string> oracle_case_names() {
    std::vector<std::string> n = {"uniform-sphere-l0.25", "uniform-sphere-l0.5", "uniform-sphere-l1", "uniform-sphere-l2",
                                  "tf-sphere-l1"};
    for (const char* ch : {"three_body", "thermal", "foreign"})
        for (int N = 2; N <= 6; ++N) n.push_back(std::string("lindblad-") + ch + "-N" + std::to_string(N));
    return n;
}

OracleCase run_oracle_case(const std::string& raw, int cells) {
    std::string name = raw;
    if (auto pos = name.find("\xce\xbb"); pos != std::string::npos) name.replace(pos, 2, "l");
    if (name.rfind("uniform-sphere-l", 0) == 0 || name.rfind("tf-sphere-l", 0) == 0) {
        const bool tf = name[0] == 't';
        const double lambda = parse_double(name.substr(name.find("-l") + 2), "lambda");
        const Shape s = Shape::sphere(1.0);
        const auto profile = tf ? DensityProfile::thomas_fermi(s, 1.0) : DensityProfile::uniform(s, 1.0);
        const auto cfg = SuperpositionConfig::make(s, 2.0 * lambda, Axis::symmetry);
        const double ref = tf ? eg_tf_sphere(lambda, 1.0, 1.0).value : eg_uniform_sphere(lambda, 1.0, 1.0).value;
        const double orc = eg_bruteforce(profile, cfg, VoxelOptions{cells, true, 2.0}).value;
        return {name, ref / codata2018.G, orc / codata2018.G, 0.01};
    }
    if (name.rfind("lindblad-", 0) == 0) {
        const auto npos = name.rfind("-N");
        if (npos == std::string::npos) throw ValidationError("lindblad case must end in -N<count>");
        const Channel ch = parse_channel(name.substr(9, npos - 9));
        const int N = int(parse_integer(name.substr(npos + 2), "N"));
        const double stated = channel_exponent(ch, N, 1.0);
        const double actual = std::max(lindblad_coherence_rate(ch, N, 1.0), stated * 1e-3);
        std::vector<double> ts;
        for (int i = 0; i <= 20; ++i) ts.push_back(i * 0.1 / actual);
        const double fit = fit_decay_exponent(lindblad_decay(ch, N, 1.0, ts));
        return {name, stated, fit, 0.05};
    }
    std::string all;
    for (const auto& n : oracle_case_names()) all += (all.empty() ? "" : ", ") + n;
    throw ValidationError("unknown oracle case '" + raw + "'; available: all, " + all);
}

int oracle_check(const Params& p, Run& run) {
    std::vector<std::string> names;
    if (p.str("case") == "all")
        names = {"uniform-sphere-l0.25", "uniform-sphere-l0.5", "uniform-sphere-l1", "uniform-sphere-l2", "tf-sphere-l1",
                 "lindblad-foreign-N2", "lindblad-three_body-N3", "lindblad-thermal-N4"};
    else
        names = {p.str("case")};
    CsvTable t("oracle-check", {{"case", "-"}, {"reference", "1"}, {"oracle", "1"}, {"rel_diff", "1"},
                                {"tolerance", "1"}, {"pass", "-"}});
    bool ok = true;
    for (const auto& n : names) {
        OracleCase c = run_oracle_case(n, int(p.integer("cells")));
        if (auto tol = p.opt_num("tol")) c.tol = *tol;
        const double rel = std::abs(c.oracle - c.reference) / std::abs(c.reference);
        const bool pass = rel <= c.tol;
        ok = ok && pass;
        t.add_row({c.name, c.reference, c.oracle, rel, c.tol, std::string(pass ? "yes" : "no")});
    }
    run.add_table("oracle_check", t);
    return ok ? 0 : 2;
}

// twomode-check

std::vector<Key> twomode_keys() {
    return {{"N", "8", "atom number for the fidelity check"},
            {"E_LR", "1", "tunnelling energy (J)"},
            {"U", "-1e4", "on-site interaction (J)"},
            {"branch", "ground", "ground | highest"},
            {"n_max", "20", "largest N for the exact correlation table"}};
}

int twomode_check(const Params& p, Run& run) {
    const long long n_max = p.integer("n_max");
    if (n_max < 1 || n_max > 20) throw ValidationError("n_max must be in [1, 20]");
    CsvTable t("twomode-correlation", {{"N", "1"}, {"correlation", "1"}, {"exact", "1"}, {"match", "-"}});
    bool ok = true;
    for (int N = 1; N <= n_max; ++N) {
        const double c = n_particle_correlation(noon_state(N)).real();
        const std::uint64_t exact = N == 1 ? 0 : noon_correlation_exact(N);
        const double expect = N == 1 ? 0.5 : double(exact);
        const bool match = std::abs(c - expect) <= 1e-15 * expect;
        ok = ok && match;
        t.add_row({static_cast<long long>(N), c, N == 1 ? std::string("1/2") : std::to_string(exact),
                   std::string(match ? "yes" : "no")});
    }
    run.add_table("twomode_correlation", t);
    const std::string br = p.str("branch");
    if (br != "ground" && br != "highest") throw ValidationError("branch must be ground or highest");
    const FidelityResult f = ground_state_fidelity_with_noon({p.num("E_LR"), p.num("U")}, int(p.integer("N")),
                                                             br == "ground" ? Branch::ground : Branch::highest);
    run.add_json("twomode_summary.json", {{"N", p.integer("N")},
                                          {"E_LR_J", p.num("E_LR")},
                                          {"U_J", p.num("U")},
                                          {"branch", br},
                                          {"fidelity", f.fidelity},
                                          {"degenerate_pair", f.degenerate},
                                          {"gap_J", f.gap}});
    return ok ? 0 : 2;
}

struct Verb {
    std::string name;
    std::string help;
    std::vector<Key> keys;
    std::function<int(const Params&, Run&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
    const auto wrap = [](void (*f)(const Params&, Run&)) {
        return [f](const Params& p, Run& r) {
            f(p, r);
            return 0;
        };
    };
    std::vector<Verb> verbs = {
        {"eg-curve", "E_G against b/(2R) for one profile and configuration", eg_curve_keys(), wrap(eg_curve)},
        {"contour", "E_G ratio between two configurations over (epsilon, b/(2R))", contour_keys(), wrap(contour)},
        {"lifetime", "collapse lifetime, survival probability and sampled collapse times", lifetime_keys(),
         wrap(lifetime)},
        {"decoherence", "decoherence rates and NOON decay exponents", decoherence_keys(), wrap(decoherence)},
        {"feasibility", "collapse vs decoherence dominance, phases and Casimir bound", feasibility_keys(),
         wrap(feasibility)},
        {"oracle-check", "compare closed forms and decay laws with the brute-force oracles", oracle_keys(),
         oracle_check},
        {"twomode-check", "NOON correlations and Bose-Hubbard ground-state fidelity", twomode_keys(), twomode_check},
    };

    CLI::App app{"Gravitationally induced collapse: self-energies, lifetimes and decoherence budgets"};
    app.require_subcommand(1);
    std::string config, out, format = "csv";
    app.add_option("--config", config, "key = value parameter file");
    app.add_option("--out", out, "output directory (default: $EGRAV_OUTPUT_DIR or .)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    struct Bound {
        CLI::App* sub;
        std::map<std::string, std::string> values;
    };
    std::vector<std::unique_ptr<Bound>> bound;
    for (const auto& v : verbs) {
        auto b = std::make_unique<Bound>();
        b->sub = app.add_subcommand(v.name, v.help);
        b->sub->fallthrough();
        for (const auto& k : v.keys) {
            std::string help = k.help;
            if (!k.def.empty()) help += (help.empty() ? "" : " ") + std::string("[default ") + k.def + "]";
            b->sub->add_option("--" + k.name, b->values[k.name], help);
        }
        bound.push_back(std::move(b));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        for (std::size_t i = 0; i < verbs.size(); ++i) {
            if (!bound[i]->sub->parsed()) continue;
            Params params(verbs[i].keys);
            if (!config.empty()) params.apply_config(config);
            for (const auto& k : verbs[i].keys)
                if (bound[i]->sub->count("--" + k.name) > 0) params.set(k.name, bound[i]->values[k.name]);
            Run run(verbs[i].name, format);
            const int rc = verbs[i].fn(params, run);
            const auto dir = cli::output_dir(out);
            run.write(dir, params);
            std::cout << verbs[i].name << ": wrote " << dir.string() << "\n";
            if (rc != 0) std::cerr << verbs[i].name << ": check failed (see outputs)\n";
            return rc;
        }
    } catch (const egrav::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
