#include "effvel/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace effvel {

namespace {

using nlohmann::json;

double get_number(const json& j, const char* key, double fallback,
                  bool required = false) {
    if (!j.contains(key)) {
        if (required) throw ConfigError(std::string("config: missing field '") + key + "'");
        return fallback;
    }
    if (!j[key].is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number");
    return j[key].get<double>();
}

Profile parse_profile(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("type"))
        throw ConfigError(std::string("config: profile '") + what + "' needs a type");
    const std::string type = j["type"].get<std::string>();
    Profile p;
    if (type == "constant") {
        p.type = Profile::Type::constant;
        p.value = get_number(j, "value", 0.0, true);
    } else if (type == "piecewise") {
        p.type = Profile::Type::piecewise;
        p.background = get_number(j, "background", 1.0);
        if (!j.contains("pieces") || !j["pieces"].is_array())
            throw ConfigError("config: piecewise profile needs a 'pieces' array");
        for (const auto& piece : j["pieces"]) {
            PiecewisePiece pw;
            pw.from = get_number(piece, "from", 0.0, true);
            pw.to = get_number(piece, "to", 0.0, true);
            pw.value = get_number(piece, "value", 0.0, true);
            p.pieces.push_back(pw);
        }
    } else if (type == "sine") {
        p.type = Profile::Type::sine;
        p.mean = get_number(j, "mean", 0.0);
        p.amplitude = get_number(j, "amplitude", 0.0, true);
        p.wavenumber = get_number(j, "wavenumber", 1.0);
        p.phase = get_number(j, "phase", 0.0);
    } else if (type == "gaussian") {
        p.type = Profile::Type::gaussian;
        p.offset = get_number(j, "offset", 0.0);
        p.amplitude = get_number(j, "amplitude", 0.0, true);
        p.center = get_number(j, "center", 0.0);
        p.width = get_number(j, "width", 1.0);
    } else if (type == "r_gaussian") {
        p.type = Profile::Type::r_gaussian;
        p.amplitude = get_number(j, "amplitude", 0.0, true);
        p.center = get_number(j, "center", 0.0);
        p.width = get_number(j, "width", 1.0);
    } else if (type == "samples") {
        p.type = Profile::Type::samples;
        if (!j.contains("values") || !j["values"].is_array())
            throw ConfigError("config: sampled profile needs a 'values' array");
        for (const auto& v : j["values"]) p.samples.push_back(v.get<double>());
    } else {
        throw ConfigError("config: unknown profile type '" + type + "'");
    }
    return p;
}

json serialize_profile(const Profile& p) {
    json j;
    switch (p.type) {
        case Profile::Type::constant:
            j["type"] = "constant";
            j["value"] = p.value;
            break;
        case Profile::Type::piecewise: {
            j["type"] = "piecewise";
            j["background"] = p.background;
            j["pieces"] = json::array();
            for (const auto& pw : p.pieces)
                j["pieces"].push_back({{"from", pw.from}, {"to", pw.to}, {"value", pw.value}});
            break;
        }
        case Profile::Type::sine:
            j["type"] = "sine";
            j["mean"] = p.mean;
            j["amplitude"] = p.amplitude;
            j["wavenumber"] = p.wavenumber;
            j["phase"] = p.phase;
            break;
        case Profile::Type::gaussian:
            j["type"] = "gaussian";
            j["offset"] = p.offset;
            j["amplitude"] = p.amplitude;
            j["center"] = p.center;
            j["width"] = p.width;
            break;
        case Profile::Type::r_gaussian:
            j["type"] = "r_gaussian";
            j["amplitude"] = p.amplitude;
            j["center"] = p.center;
            j["width"] = p.width;
            break;
        case Profile::Type::samples:
            j["type"] = "samples";
            j["values"] = p.samples;
            break;
    }
    return j;
}

ExperimentConfig parse_config_json(const json& j) {
    ExperimentConfig cfg;
    if (!j.contains("grid")) throw ConfigError("config: missing 'grid'");
    const json& jg = j["grid"];
    const std::string kind = jg.value("kind", "line1d");
    const auto n_cells = static_cast<std::size_t>(get_number(jg, "n_cells", 0.0, true));
    if (kind == "line1d") {
        const double x_min = get_number(jg, "x_min", 0.0, true);
        const double x_max = get_number(jg, "x_max", 0.0, true);
        const std::string boundary = jg.value("boundary", "periodic");
        if (boundary != "periodic" && boundary != "farfield")
            throw ConfigError("config: boundary must be 'periodic' or 'farfield'");
        cfg.grid = Grid::line(x_min, x_max, n_cells,
                              boundary == "periodic" ? BoundaryKind::periodic
                                                     : BoundaryKind::farfield);
    } else if (kind == "radial") {
        const double r_max = get_number(jg, "r_max", 0.0, true);
        const int dim = static_cast<int>(get_number(jg, "dimension", 0.0, true));
        cfg.grid = Grid::radial(r_max, n_cells, dim);
    } else {
        throw ConfigError("config: grid kind must be 'line1d' or 'radial'");
    }

    if (!j.contains("pressure_law")) throw ConfigError("config: missing 'pressure_law'");
    cfg.law = PressureLaw(get_number(j["pressure_law"], "a", 0.0, true),
                          get_number(j["pressure_law"], "gamma", 0.0, true));
    cfg.mu = get_number(j, "mu", 0.0, true);
    if (!(cfg.mu > 0.0)) throw ConfigError("config: mu must be positive");

    if (!j.contains("initial_data")) throw ConfigError("config: missing 'initial_data'");
    const json& jid = j["initial_data"];
    if (!jid.contains("density")) throw ConfigError("config: initial_data needs 'density'");
    if (!jid.contains("effective_velocity"))
        throw ConfigError("config: initial_data needs 'effective_velocity'");
    cfg.initial_data.density = parse_profile(jid["density"], "density");
    cfg.initial_data.v0 = parse_profile(jid["effective_velocity"], "effective_velocity");
    if (jid.contains("mollify")) {
        const int n = jid["mollify"].get<int>();
        if (n < 1) throw ConfigError("config: mollify level must be >= 1");
        cfg.initial_data.mollify_level = n;
        const std::string variant = jid.value("mollify_variant", "A");
        if (variant == "A") cfg.initial_data.variant = MollifyVariant::A;
        else if (variant == "B") cfg.initial_data.variant = MollifyVariant::B;
        else if (variant == "C") cfg.initial_data.variant = MollifyVariant::C;
        else throw ConfigError("config: mollify_variant must be A, B or C");
    }

    if (!j.contains("solver")) throw ConfigError("config: missing 'solver'");
    const json& js = j["solver"];
    const std::string scheme = js.value("scheme", "augmented");
    if (scheme == "augmented") cfg.solver.scheme = Scheme::augmented;
    else if (scheme == "classical1d") cfg.solver.scheme = Scheme::classical1d;
    else throw ConfigError("config: scheme must be 'augmented' or 'classical1d'");
    cfg.solver.theta = get_number(js, "theta", cfg.solver.theta);
    cfg.solver.cfl = get_number(js, "cfl", cfg.solver.cfl);
    cfg.solver.density_floor = get_number(js, "density_floor", cfg.solver.density_floor);
    cfg.solver.sample_stride =
        static_cast<std::size_t>(get_number(js, "sample_stride", 1.0));
    cfg.solver.final_time = get_number(js, "final_time", 0.0, true);
    cfg.solver.dt_max = get_number(js, "dt_max", 0.0);
    try {
        cfg.solver.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (cfg.solver.scheme == Scheme::classical1d && cfg.grid.is_radial())
        throw ConfigError("config: classical1d scheme requires a line1d grid");

    if (j.contains("diagnostics")) {
        for (const auto& d : j["diagnostics"]) {
            const std::string name = d.get<std::string>();
            if (name != "energy" && name != "bd_entropy" && name != "lipschitz" &&
                name != "sup_norms" && name != "mass" && name != "steps")
                throw ConfigError("config: unknown diagnostic '" + name + "'");
            cfg.diagnostics.push_back(name);
        }
    } else {
        cfg.diagnostics = {"energy", "bd_entropy", "lipschitz", "sup_norms", "mass", "steps"};
    }

    if (j.contains("norms")) {
        for (const auto& d : j["norms"]) {
            const std::string name = d.get<std::string>();
            if (name != "bmo_inv" && name != "koch_tataru" && name != "besov_minus1" &&
                name != "besov_plus1")
                throw ConfigError("config: unknown norm '" + name + "'");
            cfg.norms.push_back(name);
        }
    }

    if (j.contains("caloric")) {
        const json& jc = j["caloric"];
        cfg.caloric.horizon = get_number(jc, "horizon", cfg.caloric.horizon);
        cfg.caloric.ladder_ratio = get_number(jc, "ladder_ratio", cfg.caloric.ladder_ratio);
        cfg.caloric.ladder_rungs =
            static_cast<int>(get_number(jc, "ladder_rungs", cfg.caloric.ladder_rungs));
        cfg.caloric.s_extra_rungs =
            static_cast<int>(get_number(jc, "s_extra_rungs", cfg.caloric.s_extra_rungs));
        cfg.caloric.s_substeps =
            static_cast<int>(get_number(jc, "s_substeps", cfg.caloric.s_substeps));
        try {
            cfg.caloric.validate();
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }

    if (j.contains("oracle")) {
        const json& jo = j["oracle"];
        cfg.oracle.max_iterations =
            static_cast<int>(get_number(jo, "max_iterations", cfg.oracle.max_iterations));
        cfg.oracle.tolerance = get_number(jo, "tolerance", cfg.oracle.tolerance);
        cfg.oracle.time_samples =
            static_cast<std::size_t>(get_number(jo, "time_samples", 64.0));
    }

    cfg.output_dir = j.value("output_dir", "");
    return cfg;
}

json serialize_config_json(const ExperimentConfig& cfg) {
    json j;
    json jg;
    if (cfg.grid.kind() == GridKind::line1d) {
        jg["kind"] = "line1d";
        jg["n_cells"] = cfg.grid.n_cells();
        jg["x_min"] = cfg.grid.x_min();
        jg["x_max"] = cfg.grid.x_max();
        jg["boundary"] = cfg.grid.is_periodic() ? "periodic" : "farfield";
    } else {
        jg["kind"] = "radial";
        jg["n_cells"] = cfg.grid.n_cells();
        jg["r_max"] = cfg.grid.r_max();
        jg["dimension"] = cfg.grid.dimension();
    }
    j["grid"] = jg;
    j["pressure_law"] = {{"a", cfg.law.a()}, {"gamma", cfg.law.gamma()}};
    j["mu"] = cfg.mu;

    json jid;
    jid["density"] = serialize_profile(cfg.initial_data.density);
    jid["effective_velocity"] = serialize_profile(cfg.initial_data.v0);
    if (cfg.initial_data.mollify_level) {
        jid["mollify"] = *cfg.initial_data.mollify_level;
        jid["mollify_variant"] = cfg.initial_data.variant == MollifyVariant::A   ? "A"
                                 : cfg.initial_data.variant == MollifyVariant::B ? "B"
                                                                                 : "C";
    }
    j["initial_data"] = jid;

    json js;
    js["scheme"] = cfg.solver.scheme == Scheme::augmented ? "augmented" : "classical1d";
    js["theta"] = cfg.solver.theta;
    js["cfl"] = cfg.solver.cfl;
    js["density_floor"] = cfg.solver.density_floor;
    js["sample_stride"] = cfg.solver.sample_stride;
    js["final_time"] = cfg.solver.final_time;
    js["dt_max"] = cfg.solver.dt_max;
    j["solver"] = js;

    j["diagnostics"] = cfg.diagnostics;
    if (!cfg.norms.empty()) {
        j["norms"] = cfg.norms;
        j["caloric"] = {{"horizon", cfg.caloric.horizon},
                        {"ladder_ratio", cfg.caloric.ladder_ratio},
                        {"ladder_rungs", cfg.caloric.ladder_rungs},
                        {"s_extra_rungs", cfg.caloric.s_extra_rungs},
                        {"s_substeps", cfg.caloric.s_substeps}};
    }
    j["oracle"] = {{"max_iterations", cfg.oracle.max_iterations},
                   {"tolerance", cfg.oracle.tolerance},
                   {"time_samples", cfg.oracle.time_samples}};
    if (!cfg.output_dir.empty()) j["output_dir"] = cfg.output_dir;
    return j;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        return parse_config_json(j);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    return serialize_config_json(cfg).dump(2);
}

}  // namespace effvel
