#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "darboux/errors.hpp"

namespace darboux::cli {

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
        std::ostringstream os;
        os << source_;
        if (at.IsDefined() && at.Mark().line >= 0) os << ":" << at.Mark().line + 1;
        os << ": " << what;
        throw ConfigError(os.str());
    }

    void only_keys(const YAML::Node& map, const std::string& section, std::initializer_list<const char*> keys) const {
        if (!map.IsMap()) fail(map, "section '" + section + "' must be a mapping");
        const std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& kv : map) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) fail(kv.first, "unknown field '" + section + "." + key + "'");
        }
    }

    template <class T>
    T get(const YAML::Node& map, const std::string& section, const char* key) const {
        const YAML::Node v = map[key];
        if (!v) fail(map, "missing required field '" + section + "." + key + "'");
        return as<T>(v, section + "." + key);
    }

    template <class T>
    void maybe(const YAML::Node& map, const std::string& section, const char* key, T& out) const {
        if (const YAML::Node v = map[key]) out = as<T>(v, section + "." + key);
    }

    template <class T>
    T as(const YAML::Node& v, const std::string& field) const {
        try {
            return v.as<T>();
        } catch (const YAML::Exception&) {
            fail(v, "field '" + field + "' has the wrong type");
        }
    }

    std::vector<double> list(const YAML::Node& map, const std::string& section, const char* key) const {
        const YAML::Node v = map[key];
        if (!v) return {};
        if (v.IsScalar()) return {as<double>(v, section + "." + key)};
        return as<std::vector<double>>(v, section + "." + key);
    }

    void positive(const YAML::Node& at, const std::string& field, double v) const {
        if (!(v > 0.0)) fail(at, "field '" + field + "' must be positive");
    }

private:
    std::string source_;
};

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        std::ostringstream os;
        os << source << ":" << e.mark.line + 1 << ": " << e.msg;
        throw ConfigError(os.str());
    }
    const Reader r(source);
    if (!root.IsMap()) r.fail(root, "top level must be a mapping of sections");
    r.only_keys(root, "<root>",
                {"potential", "factorization", "grid", "jost", "transform", "regularization", "battery", "identity",
                 "binorm", "scan", "tolerances", "output"});

    RunConfig c;
    c.source = source;

    const YAML::Node pot = root["potential"];
    if (!pot) r.fail(root, "missing required section 'potential'");
    r.only_keys(pot, "potential", {"kind", "depth", "width", "table"});
    const auto kind = r.get<std::string>(pot, "potential", "kind");
    if (kind == "zero") {
        c.potential.kind = PotentialKind::zero;
    } else if (kind == "square_well") {
        c.potential.kind = PotentialKind::square_well;
        c.potential.depth = r.get<double>(pot, "potential", "depth");
        c.potential.width = r.get<double>(pot, "potential", "width");
        r.positive(pot["width"], "potential.width", c.potential.width);
    } else if (kind == "user_table") {
        c.potential.kind = PotentialKind::user_table;
        c.potential.table = r.get<std::string>(pot, "potential", "table");
    } else {
        r.fail(pot["kind"], "field 'potential.kind' must be zero, square_well or user_table");
    }

    const YAML::Node grid = root["grid"];
    if (!grid) r.fail(root, "missing required section 'grid'");
    r.only_keys(grid, "grid", {"x_max", "n_points"});
    const auto x_max = r.get<double>(grid, "grid", "x_max");
    const auto n_points = r.get<long long>(grid, "grid", "n_points");
    r.positive(grid["x_max"], "grid.x_max", x_max);
    if (n_points < 2) r.fail(grid["n_points"], "field 'grid.n_points' must be at least 2");
    c.grid = Grid(x_max, static_cast<std::size_t>(n_points));

    if (const YAML::Node fac = root["factorization"]) {
        r.only_keys(fac, "factorization", {"d", "b"});
        const auto d = r.get<double>(fac, "factorization", "d");
        const auto b = r.get<double>(fac, "factorization", "b");
        if (d > 0.0) r.fail(fac["d"], "field 'factorization.d' must be <= 0");
        if (b == 0.0) r.fail(fac["b"], "field 'factorization.b' must be nonzero");
        c.a = cplx(d, b);
    }

    if (const YAML::Node tol = root["tolerances"]) {
        r.only_keys(tol, "tolerances",
                    {"ode_tol", "zero_tol", "node_tol", "sing_tol", "quad_tol", "fd_tol", "tol_asym", "identity_tol"});
        auto& t = c.tolerances;
        const std::pair<const char*, double*> fields[] = {
            {"ode_tol", &t.ode_tol},   {"zero_tol", &t.zero_tol}, {"node_tol", &t.node_tol},
            {"sing_tol", &t.sing_tol}, {"quad_tol", &t.quad_tol}, {"fd_tol", &t.fd_tol},
            {"tol_asym", &t.tol_asym}, {"identity_tol", &c.identity_tol}};
        for (const auto& [key, dst] : fields) {
            r.maybe(tol, "tolerances", key, *dst);
            if (tol[key]) r.positive(tol[key], std::string("tolerances.") + key, *dst);
        }
    }

    if (const YAML::Node j = root["jost"]) {
        r.only_keys(j, "jost", {"k", "k_im"});
        double re = 1.0, im = 0.0;
        r.maybe(j, "jost", "k", re);
        r.maybe(j, "jost", "k_im", im);
        c.jost_k = {re, im};
    }

    if (const YAML::Node t = root["transform"]) {
        r.only_keys(t, "transform", {"k"});
        c.transform_k = r.list(t, "transform", "k");
    }

    if (const YAML::Node reg = root["regularization"]) {
        r.only_keys(reg, "regularization",
                    {"epsilon", "override_sign", "k_min", "k_max", "panel_width", "eta_start", "eta_levels"});
        auto& g = c.regularization;
        r.maybe(reg, "regularization", "epsilon", g.epsilon);
        r.maybe(reg, "regularization", "override_sign", g.override_sign);
        r.maybe(reg, "regularization", "k_min", g.k_min);
        r.maybe(reg, "regularization", "k_max", g.k_max);
        r.maybe(reg, "regularization", "panel_width", g.panel_width);
        r.maybe(reg, "regularization", "eta_start", c.pairing.eta_start);
        r.maybe(reg, "regularization", "eta_levels", c.pairing.eta_levels);
        if (!(g.k_min > 0.0 && g.k_max > g.k_min)) r.fail(reg, "regularization needs 0 < k_min < k_max");
        r.positive(reg, "regularization.panel_width", g.panel_width);
        r.positive(reg, "regularization.eta_start", c.pairing.eta_start);
        if (c.pairing.eta_levels < 2) r.fail(reg["eta_levels"], "field 'regularization.eta_levels' must be >= 2");
    }

    if (const YAML::Node bat = root["battery"]) {
        if (!bat.IsSequence()) r.fail(bat, "section 'battery' must be a list of test functions");
        for (const auto& item : bat) {
            r.only_keys(item, "battery[]", {"family", "center", "width", "radius"});
            TestSpec t;
            const auto fam = r.get<std::string>(item, "battery[]", "family");
            t.center = r.get<double>(item, "battery[]", "center");
            if (fam == "gaussian") {
                t.family = TestFamily::gaussian;
                t.scale = r.get<double>(item, "battery[]", "width");
            } else if (fam == "compact_bump") {
                t.family = TestFamily::compact_bump;
                t.scale = r.get<double>(item, "battery[]", "radius");
            } else {
                r.fail(item["family"], "field 'battery[].family' must be gaussian or compact_bump");
            }
            r.positive(item, "battery[] width/radius", t.scale);
            c.battery.push_back(t);
        }
    }

    if (const YAML::Node id = root["identity"]) {
        r.only_keys(id, "identity", {"x", "halvings"});
        c.identity_x = r.list(id, "identity", "x");
        r.maybe(id, "identity", "halvings", c.identity_halvings);
        if (c.identity_halvings < 0) r.fail(id["halvings"], "field 'identity.halvings' must be >= 0");
        for (double x : c.identity_x)
            if (!(x > 0.0)) r.fail(id["x"], "identity sample points must be positive");
    }

    if (const YAML::Node bn = root["binorm"]) {
        r.only_keys(bn, "binorm", {"k", "test_width"});
        c.binorm_k = r.list(bn, "binorm", "k");
        r.maybe(bn, "binorm", "test_width", c.binorm_width);
        r.positive(bn, "binorm.test_width", c.binorm_width);
    }

    if (const YAML::Node sc = root["scan"]) {
        r.only_keys(sc, "scan", {"k_min", "k_max", "n_samples", "near_tol"});
        r.maybe(sc, "scan", "k_min", c.scan_k_min);
        r.maybe(sc, "scan", "k_max", c.scan_k_max);
        long long n = static_cast<long long>(c.scan_samples);
        r.maybe(sc, "scan", "n_samples", n);
        r.maybe(sc, "scan", "near_tol", c.scan.near_tol);
        if (!(c.scan_k_max > c.scan_k_min)) r.fail(sc, "scan needs k_min < k_max");
        if (n < 5) r.fail(sc["n_samples"], "field 'scan.n_samples' must be at least 5");
        c.scan_samples = static_cast<std::size_t>(n);
    }

    if (const YAML::Node out = root["output"]) {
        r.only_keys(out, "output", {"dir"});
        c.out_dir = r.get<std::string>(out, "output", "dir");
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    RunConfig c = parse_config(text.str(), path.string());
    // Relative table paths are resolved against the config file.
    if (c.potential.kind == PotentialKind::user_table && c.potential.table.is_relative())
        c.potential.table = path.parent_path() / c.potential.table;
    return c;
}

Potential make_potential(const RunConfig& c) {
    switch (c.potential.kind) {
        case PotentialKind::zero: return Potential::zero();
        case PotentialKind::square_well: return Potential::square_well(c.potential.depth, c.potential.width);
        case PotentialKind::user_table: return Potential::load_table(c.potential.table, c.tolerances.tol_asym);
    }
    throw ConfigError("unknown potential kind");
}

cplx require_a(const RunConfig& c) {
    if (!c.a) throw ConfigError(c.source + ": missing required section 'factorization'");
    return *c.a;
}

std::vector<TestFunction> make_battery(const RunConfig& c) {
    if (c.battery.empty()) return default_battery();
    std::vector<TestFunction> out;
    for (const auto& t : c.battery)
        out.push_back(t.family == TestFamily::gaussian ? TestFunction::gaussian(t.center, t.scale)
                                                       : TestFunction::compact_bump(t.center, t.scale));
    return out;
}

std::vector<double> probe_points(const RunConfig& c) {
    return c.identity_x.empty() ? default_probe_points() : c.identity_x;
}

}  // namespace darboux::cli
