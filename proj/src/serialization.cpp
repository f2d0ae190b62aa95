#include "darboux/serialization.hpp"

#include <fstream>

#include "darboux/csv.hpp"
#include "darboux/errors.hpp"

namespace darboux::io {

using nlohmann::json;

namespace {

json complex_array(const std::vector<cplx>& v) {
    json re = json::array(), im = json::array();
    for (const auto& z : v) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"re", re}, {"im", im}};
}

std::vector<cplx> read_complex_array(const json& j, std::size_t n, const char* field) {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != n || im.size() != n) throw GridMismatch(std::string("array '") + field + "' has the wrong length");
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = {re[i].get<double>(), im[i].get<double>()};
    return out;
}

json tolerances_json(const Tolerances& t) {
    return {{"ode_tol", t.ode_tol},   {"zero_tol", t.zero_tol}, {"node_tol", t.node_tol}, {"sing_tol", t.sing_tol},
            {"quad_tol", t.quad_tol}, {"fd_tol", t.fd_tol},     {"tol_asym", t.tol_asym}};
}

}  // namespace

json to_json(const Potential& v0) {
    json j{{"kind", to_string(v0.kind())}};
    switch (v0.kind()) {
        case PotentialKind::zero: break;
        case PotentialKind::square_well:
            j["depth"] = v0.depth();
            j["width"] = v0.width();
            break;
        case PotentialKind::user_table:
            j["x"] = v0.table_x();
            j["v"] = v0.table_v();
            break;
    }
    return j;
}

Potential potential_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "zero") return Potential::zero();
    if (kind == "square_well") return Potential::square_well(j.at("depth").get<double>(), j.at("width").get<double>());
    if (kind == "user_table")
        return Potential::from_table(j.at("x").get<std::vector<double>>(), j.at("v").get<std::vector<double>>());
    throw InvalidArgument("unknown potential kind '" + kind + "'");
}

json to_json(const SusySystem& s) {
    const auto& fc = s.factorization;
    return {{"grid", {{"x_max", s.grid().x_max()}, {"n_points", s.grid().size()}}},
            {"a", {{"d", fc.d()}, {"b", fc.b()}}},
            {"alpha", {{"re", fc.alpha().real()}, {"im", fc.alpha().imag()}}},
            {"regime", to_string(fc.regime())},
            {"potential", to_json(s.base_potential)},
            {"tolerances", tolerances_json(s.tolerances)},
            {"u", complex_array(s.u.values)},
            {"u_prime", complex_array(s.u.derivatives)},
            {"w", complex_array(s.w.values)},
            {"w_prime", complex_array(s.w.derivatives)},
            {"V", complex_array(s.V)}};
}

SusySystem system_from_json(const json& j) {
    try {
        const Grid grid(j.at("grid").at("x_max").get<double>(), j.at("grid").at("n_points").get<std::size_t>());
        const FactorizationConstant fc(cplx(j.at("a").at("d").get<double>(), j.at("a").at("b").get<double>()));
        Tolerances tol;
        const auto& t = j.at("tolerances");
        tol.ode_tol = t.at("ode_tol");
        tol.zero_tol = t.at("zero_tol");
        tol.node_tol = t.at("node_tol");
        tol.sing_tol = t.at("sing_tol");
        tol.quad_tol = t.at("quad_tol");
        tol.fd_tol = t.at("fd_tol");
        tol.tol_asym = t.at("tol_asym");
        const std::size_t n = grid.size();
        WaveSample u(grid, read_complex_array(j.at("u"), n, "u"), read_complex_array(j.at("u_prime"), n, "u_prime"),
                     -kI * fc.a());
        WaveSample w(grid, read_complex_array(j.at("w"), n, "w"), read_complex_array(j.at("w_prime"), n, "w_prime"));
        return SusySystem{potential_from_json(j.at("potential")), fc, tol, std::move(u), std::move(w),
                          read_complex_array(j.at("V"), n, "V")};
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed system document: ") + e.what());
    }
}

void save_system(const SusySystem& s, const std::filesystem::path& path) {
    write_file_atomic(path, to_json(s).dump(1) + "\n");
}

SusySystem load_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    try {
        return system_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw IoError("cannot parse '" + path.string() + "': " + e.what());
    }
}

}  // namespace darboux::io
