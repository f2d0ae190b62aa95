#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "darboux/csv.hpp"
#include "darboux/distributional.hpp"
#include "darboux/errors.hpp"
#include "darboux/jost.hpp"
#include "darboux/schwartz.hpp"
#include "darboux/serialization.hpp"
#include "darboux/singularity.hpp"
#include "darboux/susy.hpp"

namespace darboux::cli {

using nlohmann::json;

namespace {

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int write_verdict(const RunConfig& c, const std::string& command, bool pass, double tolerance, json metrics,
                  const std::string& claim) {
    const json v{{"command", command},  {"verdict", pass ? "pass" : "fail"}, {"tolerance", tolerance},
                 {"metrics", metrics},  {"claim", claim},                    {"config", c.source}};
    io::write_file_atomic(c.out_dir / "verdict.json", v.dump(2) + "\n");
    return pass ? kPass : kFail;
}

SusySystem system_for(const RunConfig& c) {
    return build_system(make_potential(c), require_a(c), c.grid, c.tolerances);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"jost", "transform", "identity", "binorm", "scan", "schwartz-check"};
    return names;
}

int run_command(const std::string& name, const RunConfig& c, std::ostream& log) {
    if (name == "jost") return cmd_jost(c, log);
    if (name == "transform") return cmd_transform(c, log);
    if (name == "identity") return cmd_identity(c, log);
    if (name == "binorm") return cmd_binorm(c, log);
    if (name == "scan") return cmd_scan(c, log);
    if (name == "schwartz-check") return cmd_schwartz_check(c, log);
    throw InvalidArgument("unknown command '" + name + "'");
}

int cmd_jost(const RunConfig& c, std::ostream& log) {
    const Potential v0 = make_potential(c);
    const JostData jd = solve_jost(v0, c.jost_k, c.grid, c.tolerances);
    io::CsvTable t({"x", "re_f", "im_f", "re_fprime", "im_fprime"});
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
        const cplx f = jd.solution.values[i], df = jd.solution.derivatives[i];
        t.add_row({c.grid[i], f.real(), f.imag(), df.real(), df.imag()});
    }
    t.write(c.out_dir / "jost.csv");

    const double X = c.grid.x_max();
    const cplx e = std::exp(kI * c.jost_k * X);
    const json summary{{"k", cjson(c.jost_k)},
                       {"F", cjson(jd.jost_function_value)},
                       {"abs_F", std::abs(jd.jost_function_value)},
                       {"asymptotic_residual", std::abs(jd.solution.values.back() - e) / std::abs(e)},
                       {"potential", io::to_json(v0)},
                       {"grid", {{"x_max", X}, {"n_points", c.grid.size()}}}};
    io::write_file_atomic(c.out_dir / "summary.json", summary.dump(2) + "\n");
    log << "jost: F(" << c.jost_k << ") = " << jd.jost_function_value << "\n";
    return kPass;
}

int cmd_transform(const RunConfig& c, std::ostream& log) {
    const SusySystem s = system_for(c);
    io::save_system(s, c.out_dir / "system.json");
    if (!c.transform_k.empty()) {
        io::CsvTable t({"k", "x", "re_phi", "im_phi", "re_phiprime", "im_phiprime"});
        for (double k : c.transform_k) {
            const auto ne = normalized_phi(s, k);
            for (std::size_t i = 0; i < c.grid.size(); ++i)
                t.add_row({k, c.grid[i], ne.phi.values[i].real(), ne.phi.values[i].imag(),
                           ne.phi.derivatives[i].real(), ne.phi.derivatives[i].imag()});
        }
        t.write(c.out_dir / "phi_k.csv");
    }
    log << "transform: a = " << s.factorization.a() << ", regime " << to_string(s.factorization.regime()) << ", "
        << c.transform_k.size() << " eigenfunction(s)\n";
    return kPass;
}

int cmd_identity(const RunConfig& c, std::ostream& log) {
    const SusySystem s = system_for(c);
    const auto battery = make_battery(c);
    const auto xs = probe_points(c);
    RegularizationParams reg = c.regularization;
    reg.throw_on_failure = false;

    std::vector<double> eps_list{reg.epsilon};
    if (reg.epsilon != 0.0)
        for (int h = 0; h < c.identity_halvings; ++h) eps_list.push_back(eps_list.back() / 2.0);

    io::CsvTable t({"epsilon", "member", "x", "I_re", "I_im", "phi_x", "abs_err"});
    json per_eps = json::array();
    std::vector<double> max_err;
    double max_quad = 0.0;
    bool converged = true;
    for (double eps : eps_list) {
        reg.epsilon = eps;
        const IdentityBatch b = identity_kernel_batch(s, battery, xs, reg);
        double worst = 0.0;
        std::size_t worst_member = 0;
        for (std::size_t j = 0; j < battery.size(); ++j)
            for (std::size_t m = 0; m < xs.size(); ++m) {
                const auto& sf = b.values[j][m];
                const double phi = battery[j](xs[m]);
                const double err = std::abs(sf.value - phi);
                t.add_row({b.epsilon, battery[j].label(), xs[m], sf.value.real(), sf.value.imag(), phi, err});
                if (err > worst) worst = err, worst_member = j;
                max_quad = std::max(max_quad, sf.estimated_error);
                converged = converged && sf.converged;
            }
        max_err.push_back(worst);
        per_eps.push_back({{"epsilon", b.epsilon}, {"max_abs_err", worst}, {"worst_member", battery[worst_member].label()},
                           {"k_nodes", b.k_nodes}});
    }
    t.write(c.out_dir / "identity.csv");

    bool pass = converged;
    for (std::size_t i = 0; i < max_err.size(); ++i) {
        pass = pass && max_err[i] < c.identity_tol;
        if (i > 0) pass = pass && max_err[i] <= max_err[i - 1] + c.tolerances.quad_tol;
    }
    const json metrics{{"runs", per_eps}, {"max_quadrature_error", max_quad}, {"converged", converged},
                       {"regime", to_string(s.factorization.regime())}};
    log << "identity: max |I - Phi| = " << max_err.front() << " at epsilon = " << per_eps.front()["epsilon"] << "\n";
    return write_verdict(c, "identity", pass, c.identity_tol, metrics,
                         "int dk (L psi_k)(x) int dy (L psi_k)(y) Phi(y) / (k^2 - alpha - i eps) -> Phi(x) as "
                         "eps -> sign(b) 0, and at eps = 0 when d < 0");
}

int cmd_binorm(const RunConfig& c, std::ostream& log) {
    const SusySystem s = system_for(c);
    const std::vector<double> ks = c.binorm_k.empty() ? std::vector<double>{0.5, 1.0, 1.5, 2.0, 3.0} : c.binorm_k;
    PairingOptions opt = c.pairing;
    opt.throw_on_failure = false;

    io::CsvTable eta({"k", "eta", "partial_value_re", "partial_value_im"});
    io::CsvTable summary({"k", "value_re", "value_im", "expected_re", "expected_im", "abs_err", "estimated_error"});
    bool pass = true;
    json rows = json::array();
    for (double k : ks) {
        const TestFunction phi = TestFunction::gaussian(k, c.binorm_width);
        const SmearedFunctional sf = binorm_functional(s, k, phi, opt);
        for (const auto& e : sf.eta_table) eta.add_row({k, e.eta, e.value.real(), e.value.imag()});
        const cplx pref = k * k - s.factorization.alpha();
        const cplx expected = pref * phi(k);
        const double err = std::abs(sf.value - expected);
        const double tol = c.tolerances.quad_tol * (1.0 + std::abs(pref));
        pass = pass && sf.converged && err < tol;
        summary.add_row({k, sf.value.real(), sf.value.imag(), expected.real(), expected.imag(), err, sf.estimated_error});
        rows.push_back({{"k", k}, {"value", cjson(sf.value)}, {"expected", cjson(expected)}, {"abs_err", err},
                        {"tolerance", tol}, {"converged", sf.converged}});
    }
    eta.write(c.out_dir / "binorm_eta.csv");
    summary.write(c.out_dir / "binorm.csv");
    log << "binorm: " << ks.size() << " wavenumber(s), " << (pass ? "all" : "not all") << " within tolerance\n";
    return write_verdict(c, "binorm", pass, c.tolerances.quad_tol, {{"rows", rows}},
                         "int dk' <(L psi_k), (L psi_k')> Phi(k') = (k^2 - alpha) Phi(k), bilinear in x; "
                         "zero at k^2 = alpha");
}

int cmd_scan(const RunConfig& c, std::ostream& log) {
    const SusySystem s = system_for(c);
    const SingularityScan scan = scan_singularities(s, c.scan_k_min, c.scan_k_max, c.scan_samples, c.scan);

    struct Row {
        double k;
        cplx v;
        Verdict verdict;
    };
    std::vector<Row> rows;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < scan.k_samples.size(); ++i) {
        if (!scan.valid[i]) {
            ++skipped;
            continue;
        }
        rows.push_back({scan.k_samples[i], scan.boundary_functional_values[i], scan.verdict_at(i, c.tolerances, c.scan)});
    }
    for (const auto& m : scan.minima)
        if (std::none_of(rows.begin(), rows.end(), [&](const Row& r) { return r.k == m.k; }))
            rows.push_back({m.k, m.value, m.verdict});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.k < b.k; });

    io::CsvTable t({"k", "abs_functional", "re_functional", "im_functional", "verdict"});
    for (const auto& r : rows) t.add_row({r.k, std::abs(r.v), r.v.real(), r.v.imag(), to_string(r.verdict)});
    t.write(c.out_dir / "scan.csv");

    const cplx alpha = s.factorization.alpha();
    json minima = json::array();
    std::size_t n_sing = 0;
    bool correspond = true;
    for (const auto& m : scan.minima) {
        const double pref = std::abs(m.k * m.k - alpha);
        minima.push_back({{"k", m.k}, {"modulus", m.modulus}, {"curvature", m.curvature},
                          {"verdict", to_string(m.verdict)}, {"prefactor", pref}});
        if (m.verdict == Verdict::singularity) {
            ++n_sing;
            correspond = correspond && pref < c.tolerances.sing_tol;
        }
    }
    const bool singular = s.factorization.regime() == Regime::singular;
    const bool pass = correspond && (singular ? n_sing > 0 : n_sing == 0);
    log << "scan: " << scan.minima.size() << " minima, " << n_sing << " singularit" << (n_sing == 1 ? "y" : "ies")
        << "\n";
    return write_verdict(c, "scan", pass, c.tolerances.zero_tol,
                         {{"minima", minima}, {"skipped_samples", skipped}, {"regime", to_string(s.factorization.regime())}},
                         "the Jost function of H vanishes on the real axis exactly at k = -b when d = 0, "
                         "where k^2 - alpha = 0");
}

int cmd_schwartz_check(const RunConfig& c, std::ostream& log) {
    io::CsvTable t({"check", "case", "abs_err", "tolerance", "pass"});
    bool all = true;
    json summary = json::object();
    const auto record = [&](const std::string& check, const std::string& label, double err, double tol, bool ok) {
        t.add_row({check, label, err, tol, std::string(ok ? "pass" : "fail")});
        all = all && ok;
        auto& s = summary[check];
        if (s.is_null()) s = {{"cases", 0}, {"failed", 0}, {"max_abs_err", 0.0}};
        s["cases"] = s["cases"].get<int>() + 1;
        if (!ok) s["failed"] = s["failed"].get<int>() + 1;
        s["max_abs_err"] = std::max(s["max_abs_err"].get<double>(), err);
    };

    // Numeric eigenfunctions against the closed form.
    const Potential v0 = Potential::zero();
    for (cplx a : {cplx(-0.5, 1.0), cplx(-0.1, 2.0), cplx(0.0, 2.0)}) {
        const SusySystem s = build_system(v0, a, c.grid, c.tolerances);
        for (double k : {0.5, 1.0, 2.0, 3.0}) {
            if (std::abs(k * k + a * a) < c.tolerances.sing_tol) continue;
            const auto ne = normalized_phi(s, k);
            double err = 0.0;
            for (std::size_t i = 0; i < c.grid.size(); ++i)
                err = std::max(err, std::abs(ne.phi.values[i] - schwartz::analytic_phi(a, k, c.grid[i])));
            std::ostringstream label;
            label << "a=" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i k=" << k;
            record("phi_equivalence", label.str(), err, 1e-8, err < 1e-8);
        }
    }

    // Bracket of the regularized kernel: zero iff b eps > 0.
    const double bs[] = {0.3, 0.7, 1.0, 1.5, 2.0, -0.4, -1.0, -1.3, -2.5, 3.0};
    const double es[] = {1e-2, 1e-3, 2e-3, 5e-3, 1e-4, 3e-3, 1e-2, 7e-4, 1e-3, 4e-2};
    for (std::size_t i = 0; i < 10; ++i) {
        const double b = bs[i], e = std::copysign(es[i], b);
        std::ostringstream label;
        label << "b=" << b << " eps=" << e;
        const double up = std::abs(schwartz::zz2_bracket(b, e));
        record("bracket_same_sign", label.str(), up, 1e-14, up < 1e-14);
        const double down = std::abs(schwartz::zz2_bracket(b, -e));
        record("bracket_opposite_sign", label.str() + " flipped", down, b * b, down > b * b);
    }

    // Closed-form integrals against damped quadrature on a fixed low-discrepancy set.
    for (int i = 0; i < 20; ++i) {
        const auto frac = [&](double g) { return std::fmod(0.5 + g * (i + 1), 1.0); };
        const double re = (i % 2 ? -1.0 : 1.0) * (0.05 + 1.45 * frac(0.6180339887498949));
        const cplx beta(re, -2.0 + 4.0 * frac(0.4142135623730951));
        const double a = i == 0 ? 0.0 : 0.5 + 2.5 * frac(0.7320508075688772);
        const double cc = 0.5 + 2.5 * frac(0.2360679774997898);
        const auto closed = schwartz::tabulated_integrals(beta, a, cc);
        const auto numeric = schwartz::numeric_tabulated_integrals(beta, a, cc);
        const double err = std::max(std::abs(closed.cosine - numeric.cosine), std::abs(closed.sine - numeric.sine));
        std::ostringstream label;
        label << "beta=" << beta.real() << (beta.imag() < 0 ? "" : "+") << beta.imag() << "i a=" << a << " c=" << cc;
        record("tabulated_integrals", label.str(), err, 1e-6, err < 1e-6);
    }

    // Numeric resolution of the identity at d = 0 against the closed-form residual kernel.
    {
        const SusySystem s = build_system(v0, cplx(0.0, 1.0), c.grid, c.tolerances);
        const auto battery = make_battery(c);
        const auto xs = probe_points(c);
        for (double eps : {1e-2, 1e-3}) {
            RegularizationParams reg = c.regularization;
            reg.epsilon = eps;
            reg.override_sign = false;
            const IdentityBatch b = identity_kernel_batch(s, battery, xs, reg);
            const double tol = 10.0 * c.tolerances.quad_tol + eps * eps;
            double err = 0.0;
            for (std::size_t j = 0; j < battery.size(); ++j)
                for (std::size_t m = 0; m < xs.size(); ++m) {
                    const cplx residual = schwartz::smeared_zz2_residual(1.0, eps, battery[j], xs[m]);
                    err = std::max(err, std::abs(b.values[j][m].value - battery[j](xs[m]) - residual));
                }
            std::ostringstream label;
            label << "b=1 eps=" << eps;
            record("kernel_agreement", label.str(), err, tol, err < tol);
        }
    }

    t.write(c.out_dir / "schwartz.csv");
    log << "schwartz-check: " << (all ? "all checks pass" : "some checks fail") << "\n";
    return write_verdict(c, "schwartz-check", all, 1e-6, summary,
                         "v0 = 0 with phi'(0) + a phi(0) = 0: phi_k = (k^2 - alpha)^{-1/2} sqrt(2/pi) "
                         "(a sin kx - k cos kx); residual kernel bracket vanishes iff b eps > 0");
}

}  // namespace darboux::cli
