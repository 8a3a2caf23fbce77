#include "polardf/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polardf/errors.hpp"

namespace polardf {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError("scenario: field \"" + field + "\" " + why);
}

const json& require(const json& obj, const std::string& field) {
    auto it = obj.find(field);
    if (it == obj.end()) fail(field, "is missing");
    return *it;
}

double require_number(const json& obj, const std::string& field) {
    const json& v = require(obj, field);
    if (!v.is_number()) fail(field, "must be a number");
    return v.get<double>();
}

double require_number(const json& obj, const std::string& parent,
                      const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(parent + "." + key, "is missing");
    if (!it->is_number()) fail(parent + "." + key, "must be a number");
    return it->get<double>();
}

BeaconGeometry parse_geometry(const json& v, const std::string& field) {
    if (!v.is_object()) fail(field, "must be an object {d, lambda}");
    const double d = require_number(v, field, "d");
    if (!(d > 0.0)) fail(field + ".d", "must be > 0");
    const double lambda = require_number(v, field, "lambda");
    if (!(lambda > 0.0)) fail(field + ".lambda", "must be > 0");
    return BeaconGeometry(d, lambda);
}

}  // namespace

MethodSelection method_selection_from_string(const std::string& name) {
    if (name == "amplitude") return MethodSelection::amplitude;
    if (name == "phase") return MethodSelection::phase;
    if (name == "both") return MethodSelection::both;
    throw ConfigError("scenario: field \"method\" must be one of "
                      "\"amplitude\", \"phase\", \"both\" (got \"" + name + "\")");
}

std::string to_string(MethodSelection m) {
    switch (m) {
        case MethodSelection::amplitude: return "amplitude";
        case MethodSelection::phase: return "phase";
        case MethodSelection::both: return "both";
    }
    return "?";
}

std::vector<double> Scenario::alpha_grid() const {
    // Integer-indexed grid so the point count does not wobble with rounding.
    const long n = std::lround(std::floor((alpha_stop - alpha_start) / alpha_step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        grid.push_back(alpha_start + static_cast<double>(k) * alpha_step);
    return grid;
}

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario: not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("scenario: top level must be an object");

    static const std::set<std::string> known = {
        "geometry", "theta_deg", "method", "alpha_grid_deg",
        "trials",   "noise",     "ambiguity"};
    for (const auto& [key, _] : root.items())
        if (!known.count(key))
            throw ConfigError("scenario: unknown field \"" + key + "\"");

    Scenario s;

    const json& geom = require(root, "geometry");
    if (geom.is_array()) {
        if (geom.empty()) fail("geometry", "must not be an empty list");
        for (std::size_t i = 0; i < geom.size(); ++i) {
            std::ostringstream name;
            name << "geometry[" << i << "]";
            s.geometries.push_back(parse_geometry(geom[i], name.str()));
        }
    } else {
        s.geometries.push_back(parse_geometry(geom, "geometry"));
    }

    s.theta = BasisAngle(require_number(root, "theta_deg") * kDegToRad);

    const json& method = require(root, "method");
    if (!method.is_string()) fail("method", "must be a string");
    s.method = method_selection_from_string(method.get<std::string>());

    const json& grid = require(root, "alpha_grid_deg");
    if (!grid.is_array() || grid.size() != 3 ||
        !grid[0].is_number() || !grid[1].is_number() || !grid[2].is_number())
        fail("alpha_grid_deg", "must be [start, stop, step] in degrees");
    const double start_deg = grid[0].get<double>();
    const double stop_deg = grid[1].get<double>();
    const double step_deg = grid[2].get<double>();
    if (!(step_deg > 0.0)) fail("alpha_grid_deg", "step must be > 0");
    if (!(stop_deg > start_deg)) fail("alpha_grid_deg", "stop must be > start");
    if (start_deg < -90.0 - 1e-9 || stop_deg > 90.0 + 1e-9)
        fail("alpha_grid_deg", "must lie within [-90, 90]");
    s.alpha_start = start_deg * kDegToRad;
    s.alpha_stop = stop_deg * kDegToRad;
    s.alpha_step = step_deg * kDegToRad;

    const json& trials = require(root, "trials");
    if (!trials.is_number_integer() || trials.get<long long>() < 1)
        fail("trials", "must be an integer >= 1");
    s.trials = trials.get<int>();

    if (auto it = root.find("noise"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) fail("noise", "must be an object {snr_db, seed}");
        NoiseSpec spec;
        spec.snr_db = require_number(*it, "noise", "snr_db");
        if (!std::isfinite(spec.snr_db)) fail("noise.snr_db", "must be finite");
        auto seed = it->find("seed");
        if (seed == it->end()) fail("noise.seed", "is missing");
        if (!seed->is_number_integer()) fail("noise.seed", "must be an integer");
        spec.seed = seed->get<std::uint64_t>();
        s.noise = spec;
    }

    if (auto it = root.find("ambiguity"); it != root.end() && !it->is_null()) {
        if (!it->is_object()) fail("ambiguity", "must be an object {n_max, phi0_deg}");
        int n_max = 0;
        if (auto n = it->find("n_max"); n != it->end()) {
            if (!n->is_number_integer() || n->get<long long>() < 0)
                fail("ambiguity.n_max", "must be an integer >= 0");
            n_max = n->get<int>();
        }
        double phi0 = std::numbers::pi;
        if (auto p = it->find("phi0_deg"); p != it->end()) {
            if (!p->is_number()) fail("ambiguity.phi0_deg", "must be a number");
            phi0 = p->get<double>() * kDegToRad;
            if (!(phi0 > 0.0 && phi0 <= std::numbers::pi + 1e-12))
                fail("ambiguity.phi0_deg", "must lie in (0, 180]");
        }
        s.ambiguity = AmbiguitySpec(n_max, phi0);
    }

    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading scenario file: " + path.string());
    return parse_scenario(buf.str());
}

}  // namespace polardf
