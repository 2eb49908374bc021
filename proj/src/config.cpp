#include "sphshock/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sphshock/interaction.hpp"

namespace sphshock {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            raise(ErrKind::ConfigError, "unknown key '" + it.key() + "' in " + where);
}

double num(const json& obj, const std::string& key, double fallback)
{
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        raise(ErrKind::ConfigError, "'" + key + "' must be a number");
    return obj[key].get<double>();
}

AheadSpec parse_field(const json& obj, const std::string& where)
{
    AheadSpec spec;
    spec.kind = obj.value("kind", std::string("constant"));
    std::set<std::string> allowed = {"kind", "rho", "w", "box"};
    if (spec.kind == "taylor") {
        for (const char* k : {"rho_t", "rho_r", "rho_tt", "rho_tr", "rho_rr",
                              "w_t", "w_r", "w_tt", "w_tr", "w_rr"})
            allowed.insert(k);
    } else if (spec.kind != "constant") {
        raise(ErrKind::ConfigError, where + ".kind must be 'constant' or 'taylor'");
    }
    check_keys(obj, allowed, where);
    spec.rho = num(obj, "rho", 1.0);
    spec.w = num(obj, "w", 0.0);
    if (!(spec.rho > 0.0))
        raise(ErrKind::ConfigError, where + ".rho must be > 0");
    if (spec.kind == "taylor") {
        spec.rho_c = {num(obj, "rho_t", 0), num(obj, "rho_r", 0), num(obj, "rho_tt", 0),
                      num(obj, "rho_tr", 0), num(obj, "rho_rr", 0)};
        spec.w_c = {num(obj, "w_t", 0), num(obj, "w_r", 0), num(obj, "w_tt", 0),
                    num(obj, "w_tr", 0), num(obj, "w_rr", 0)};
    }
    if (obj.contains("box")) {
        const json& b = obj["box"];
        check_keys(b, {"t_min", "t_max", "r_min", "r_max"}, where + ".box");
        spec.has_box = true;
        spec.box = {num(b, "t_min", 0), num(b, "t_max", 0), num(b, "r_min", 0),
                    num(b, "r_max", 0)};
        if (!(spec.box.t_min < spec.box.t_max && spec.box.r_min < spec.box.r_max))
            raise(ErrKind::ConfigError, where + ".box is empty");
    }
    return spec;
}

json emit_field(const AheadSpec& spec)
{
    json obj;
    obj["kind"] = spec.kind;
    obj["rho"] = spec.rho;
    obj["w"] = spec.w;
    if (spec.kind == "taylor") {
        obj["rho_t"] = spec.rho_c.t;
        obj["rho_r"] = spec.rho_c.r;
        obj["rho_tt"] = spec.rho_c.tt;
        obj["rho_tr"] = spec.rho_c.tr;
        obj["rho_rr"] = spec.rho_c.rr;
        obj["w_t"] = spec.w_c.t;
        obj["w_r"] = spec.w_c.r;
        obj["w_tt"] = spec.w_c.tt;
        obj["w_tr"] = spec.w_c.tr;
        obj["w_rr"] = spec.w_c.rr;
    }
    if (spec.has_box)
        obj["box"] = {{"t_min", spec.box.t_min},
                      {"t_max", spec.box.t_max},
                      {"r_min", spec.box.r_min},
                      {"r_max", spec.box.r_max}};
    return obj;
}

}  // namespace

namespace {

RunConfig parse_config_impl(const json& root)
{
    check_keys(root,
               {"eos", "r0", "ahead1", "ahead2", "epsilon", "grid_n", "iteration",
                "output_dir", "probes", "phi", "parallel"},
               "config");
    RunConfig cfg;
    if (root.contains("eos")) {
        check_keys(root["eos"], {"gamma", "kappa"}, "eos");
        cfg.eos.gamma = num(root["eos"], "gamma", 2.0);
        cfg.eos.kappa = num(root["eos"], "kappa", 1.0);
    }
    cfg.eos.validate();
    cfg.r0 = num(root, "r0", 1.0);
    if (!(cfg.r0 > 0.0))
        raise(ErrKind::ConfigError, "r0 must be > 0");
    if (root.contains("ahead1"))
        cfg.ahead1 = parse_field(root["ahead1"], "ahead1");
    if (root.contains("ahead2"))
        cfg.ahead2 = parse_field(root["ahead2"], "ahead2");
    cfg.epsilon = num(root, "epsilon", 5e-3);
    if (!(cfg.epsilon > 0.0))
        raise(ErrKind::ConfigError, "epsilon must be > 0");
    if (root.contains("grid_n")) {
        cfg.grid_n = root["grid_n"].get<int>();
        if (cfg.grid_n < 8)
            raise(ErrKind::ConfigError, "grid_n must be >= 8");
    }
    if (root.contains("iteration")) {
        const json& it = root["iteration"];
        check_keys(it, {"tol_fix", "max_iters", "newton_tol", "newton_max_iters"}, "iteration");
        cfg.tol_fix = num(it, "tol_fix", cfg.tol_fix);
        cfg.max_iters = it.value("max_iters", cfg.max_iters);
        cfg.newton_tol = num(it, "newton_tol", cfg.newton_tol);
        cfg.newton_max_iters = it.value("newton_max_iters", cfg.newton_max_iters);
        if (!(cfg.tol_fix > 0.0) || cfg.max_iters < 1)
            raise(ErrKind::ConfigError, "iteration tolerances out of range");
    }
    cfg.output_dir = root.value("output_dir", cfg.output_dir);
    if (root.contains("probes")) {
        const json& p = root["probes"];
        check_keys(p, {"perturbation_amplitude", "resolutions"}, "probes");
        cfg.probes.perturbation_amplitude =
            num(p, "perturbation_amplitude", cfg.probes.perturbation_amplitude);
        if (p.contains("resolutions")) {
            cfg.probes.resolutions.clear();
            for (const auto& v : p["resolutions"])
                cfg.probes.resolutions.push_back(v.get<int>());
        }
    }
    if (root.contains("phi")) {
        const json& p = root["phi"];
        check_keys(p, {"a", "c2", "c3", "x_max", "tol", "n_max"}, "phi");
        cfg.phi.a = num(p, "a", cfg.phi.a);
        cfg.phi.c2 = num(p, "c2", cfg.phi.c2);
        cfg.phi.c3 = num(p, "c3", cfg.phi.c3);
        cfg.phi.x_max = num(p, "x_max", cfg.phi.x_max);
        cfg.phi.tol = num(p, "tol", cfg.phi.tol);
        cfg.phi.n_max = p.value("n_max", cfg.phi.n_max);
    }
    cfg.parallel = root.value("parallel", true);
    return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& json_text)
{
    try {
        return parse_config_impl(json::parse(json_text));
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        raise(ErrKind::ConfigError, std::string("config: ") + e.what());
    }
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrKind::ConfigError, "cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string effective_config_json(const RunConfig& cfg)
{
    json root;
    root["eos"] = {{"gamma", cfg.eos.gamma}, {"kappa", cfg.eos.kappa}};
    root["r0"] = cfg.r0;
    root["ahead1"] = emit_field(cfg.ahead1);
    root["ahead2"] = emit_field(cfg.ahead2);
    root["epsilon"] = cfg.epsilon;
    root["grid_n"] = cfg.grid_n;
    root["iteration"] = {{"tol_fix", cfg.tol_fix},
                         {"max_iters", cfg.max_iters},
                         {"newton_tol", cfg.newton_tol},
                         {"newton_max_iters", cfg.newton_max_iters}};
    root["output_dir"] = cfg.output_dir;
    json res = json::array();
    for (int n : cfg.probes.resolutions)
        res.push_back(n);
    root["probes"] = {{"perturbation_amplitude", cfg.probes.perturbation_amplitude},
                      {"resolutions", res}};
    root["phi"] = {{"a", cfg.phi.a},   {"c2", cfg.phi.c2},   {"c3", cfg.phi.c3},
                   {"x_max", cfg.phi.x_max}, {"tol", cfg.phi.tol}, {"n_max", cfg.phi.n_max}};
    root["parallel"] = cfg.parallel;
    return root.dump(2) + "\n";
}

std::string config_hash(const RunConfig& cfg)
{
    // the hash identifies the run's physics and numerics; where the files
    // land does not belong in it
    RunConfig hashed = cfg;
    hashed.output_dir.clear();
    std::string text = effective_config_json(hashed);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::shared_ptr<AheadField> make_field(const AheadSpec& spec, Side side, double r0,
                                       double epsilon, double eta0_hint)
{
    ValidityBox box = spec.box;
    if (!spec.has_box) {
        double te = 2.0 * epsilon / eta0_hint;
        box = {-te, te, r0 - 2.0 * epsilon, r0 + 2.0 * epsilon};
    }
    TaylorField::Coeffs rc{}, wc{};
    if (spec.kind == "taylor") {
        rc = spec.rho_c;
        wc = spec.w_c;
    }
    return std::make_shared<TaylorField>(side, box, r0, PrimState{spec.rho, spec.w}, rc, wc);
}

IterationConfig iteration_config(const RunConfig& cfg)
{
    IterationConfig it;
    it.tol_fix = cfg.tol_fix;
    it.max_iters = cfg.max_iters;
    it.newton.tol = cfg.newton_tol;
    it.newton.max_iters = cfg.newton_max_iters;
    it.exec = cfg.parallel ? Exec::Parallel : Exec::Serial;
    return it;
}

Problem make_problem(const RunConfig& cfg)
{
    // preliminary point solve fixes eta0 for the default validity boxes
    PointSolution pre = solve_point(cfg.eos, {cfg.ahead1.rho, cfg.ahead1.w},
                                    {cfg.ahead2.rho, cfg.ahead2.w}, cfg.r0);
    double eta0 = sound_speed(cfg.eos, pre.behind.rho);

    auto f1 = make_field(cfg.ahead1, Side::Left, cfg.r0, cfg.epsilon, eta0);
    auto f2 = make_field(cfg.ahead2, Side::Right, cfg.r0, cfg.epsilon, eta0);
    ShiftedProblem sp = make_interaction(cfg.eos, f1, f2, cfg.r0);

    Problem prob;
    prob.eos = cfg.eos;
    prob.data = sp.data;
    prob.ahead1 = sp.ahead1;
    prob.ahead2 = sp.ahead2;
    prob.epsilon = cfg.epsilon;
    prob.iter = iteration_config(cfg);
    return prob;
}

}  // namespace sphshock
