#include <doctest.h>

#include <cmath>

#include "darboux/distributional.hpp"
#include "darboux/errors.hpp"
#include "darboux/schwartz.hpp"
#include "darboux/susy.hpp"
#include "oracles.hpp"

using namespace darboux;

namespace {

const Grid kGrid;
const cplx kRegularA(-0.5, 1.0);

// Closed-form eigenfunction of the free partner with Robin condition phi' + a phi = 0.
cplx free_phi(cplx a, double k, double x) {
    return oracle::kNorm * (a * std::sin(k * x) - k * std::cos(k * x)) / std::sqrt(k * k + a * a);
}

// int_0^inf dk e^{-eta k^2} phi_k(x) [int dy phi_k(y) Phi(y)], the k integral
// taken with Phi folded into the y sum at every k (k-first per y node), by
// plain Simpson sums, extrapolated in eta.
cplx k_first_identity(cplx a, double x, const std::function<double(double)>& Phi, double y_hi) {
    const int levels = 4;
    const double eta0 = 1e-2;
    const double eta_min = eta0 / std::pow(2.0, levels - 1);
    const double K = std::sqrt(37.0 / eta_min);
    const std::size_t ny = static_cast<std::size_t>(y_hi / 0.005) | 1u;
    const double hy = y_hi / static_cast<double>(ny - 1);
    const std::size_t nk = static_cast<std::size_t>(K / 0.005) | 1u;
    const double hk = K / static_cast<double>(nk - 1);
    std::vector<double> ys(ny), wy(ny);
    for (std::size_t j = 0; j < ny; ++j) {
        ys[j] = static_cast<double>(j) * hy;
        wy[j] = oracle::simpson_weight(j, ny, hy) * Phi(ys[j]);
    }
    std::vector<cplx> acc(levels);
    for (std::size_t i = 1; i < nk; ++i) {  // the k = 0 node carries zero weight in the limit
        const double k = static_cast<double>(i) * hk;
        cplx ck = 0.0;
        for (std::size_t j = 0; j < ny; ++j) ck += wy[j] * (a * std::sin(k * ys[j]) - k * std::cos(k * ys[j]));
        const cplx integrand = oracle::kNorm * oracle::kNorm * (a * std::sin(k * x) - k * std::cos(k * x)) * ck /
                               (k * k + a * a) * oracle::simpson_weight(i, nk, hk);
        for (int l = 0; l < levels; ++l) acc[l] += std::exp(-eta0 / std::pow(2.0, l) * k * k) * integrand;
    }
    return oracle::richardson(acc);
}

double gauss(double c, double w, double y) { return std::exp(-((y - c) / w) * ((y - c) / w)); }

}  // namespace

TEST_CASE("biorthonormality of the free regular partner against the brute-force oracle") {
    const auto s = build_system(Potential::zero(), kRegularA, kGrid);
    const auto phi = TestFunction::gaussian(1.0, 1.0);
    const auto sf = smeared_biorthonormality(s, 1.0, phi);
    const cplx ref = oracle::damped_pairing([](double k, double x) { return free_phi(kRegularA, k, x); }, 1.0,
                                            [&](double k) { return phi(k); }, 1e-3, phi.upper());
    CHECK(sf.converged);
    CHECK(std::abs(sf.value - 1.0) < 1e-6);
    CHECK(std::abs(ref - 1.0) < 1e-5);
    CHECK(std::abs(sf.value - ref) < 1e-5);

    const auto far = smeared_biorthonormality(s, 1.0, TestFunction::gaussian(6.0, 0.5));
    CHECK(std::abs(far.value) < 1e-6);
    CHECK(std::abs(smeared_biorthonormality(s, 1.0, TestFunction::zero()).value) == 0.0);
}

TEST_CASE("biorthonormality for the square-well partner and regime guard") {
    const auto s = build_system(Potential::square_well(2.0, 1.0), cplx(-0.3, 1.3), kGrid);
    for (double k : {0.8, 1.6}) {
        const auto phi = TestFunction::gaussian(k, 0.6);
        CHECK(std::abs(smeared_biorthonormality(s, k, phi).value - 1.0) < 1e-6);
    }
    const auto sing = build_system(Potential::zero(), cplx(0.0, 2.0), kGrid);
    CHECK_THROWS_AS(smeared_biorthonormality(sing, 1.0, TestFunction::gaussian(1.0, 1.0)), WrongRegime);
}

TEST_CASE("the conjugated pairing does not produce a delta for complex a") {
    const auto s = build_system(Potential::zero(), kRegularA, kGrid);
    const auto phi = TestFunction::gaussian(1.0, 1.0);
    PairingOptions conj;
    conj.pairing = Pairing::conjugated;
    conj.throw_on_failure = false;
    const auto bil = smeared_biorthonormality(s, 1.0, phi);
    const auto con = smeared_biorthonormality(s, 1.0, phi, conj);
    CHECK(std::abs(bil.value - 1.0) < 1e-6);
    CHECK(std::abs(con.value - 1.0) > 1e-2);
    const cplx ref = oracle::damped_pairing([](double k, double x) { return free_phi(kRegularA, k, x); }, 1.0,
                                            [&](double k) { return phi(k); }, 1e-3, phi.upper(), true);
    CHECK(std::abs(con.value - ref) < 1e-4);
}

TEST_CASE("binorm functional examples") {
    const auto sing = build_system(Potential::zero(), cplx(0.0, 2.0), kGrid);
    CHECK(std::abs(binorm_functional(sing, 2.0, TestFunction::gaussian(2.0, 1.0)).value) < 1e-6);
    CHECK(std::abs(binorm_functional(sing, 1.0, TestFunction::gaussian(1.0, 1.0)).value - (-3.0)) < 1e-6);
    const auto reg = build_system(Potential::zero(), kRegularA, kGrid);
    CHECK(std::abs(binorm_functional(reg, 1.0, TestFunction::gaussian(1.0, 1.0)).value - cplx(0.25, -1.0)) < 1e-6);
}

TEST_CASE("binorm prefactor law over k and both regimes") {
    for (cplx a : {kRegularA, cplx(0.0, 2.0)}) {
        const auto s = build_system(Potential::zero(), a, kGrid);
        for (double k : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            const auto phi = TestFunction::gaussian(k + 0.2, 1.0);
            const cplx pref = k * k - s.factorization.alpha();
            const auto sf = binorm_functional(s, k, phi);
            CHECK_MESSAGE(std::abs(sf.value - pref * phi(k)) < 1e-6 * (1.0 + std::abs(pref)), "k=" << k << " a=" << a);
        }
    }
    // the square well at a few k (the full sweep runs in the acceptance suite)
    const auto sw = build_system(Potential::square_well(2.0, 1.0), cplx(0.0, 1.3), kGrid);
    for (double k : {0.5, 1.3, 2.0}) {
        const auto phi = TestFunction::gaussian(k + 0.2, 1.0);
        const cplx pref = k * k - sw.factorization.alpha();
        CHECK(std::abs(binorm_functional(sw, k, phi).value - pref * phi(k)) < 1e-6 * (1.0 + std::abs(pref)));
    }
}

TEST_CASE("free binorm matches the brute-force oracle") {
    const cplx a(0.0, 2.0);
    const auto s = build_system(Potential::zero(), a, kGrid);
    const auto phi = TestFunction::gaussian(1.5, 0.8);
    const auto Lpsi = [a](double k, double x) { return oracle::kNorm * (a * std::sin(k * x) - k * std::cos(k * x)); };
    const cplx ref = oracle::damped_pairing(Lpsi, 1.5, [&](double k) { return phi(k); }, 1e-3, phi.upper());
    CHECK(std::abs(binorm_functional(s, 1.5, phi).value - ref) < 1e-5);
}

TEST_CASE("regularized identity: regular example, singular example, pole guard") {
    const auto phi = TestFunction::gaussian(3.0, 1.0);
    const auto reg = build_system(Potential::zero(), kRegularA, kGrid);
    CHECK(std::abs(identity_kernel_apply(reg, phi, 3.0, {}).value - 1.0) < 5e-3);

    const auto sing = build_system(Potential::zero(), cplx(0.0, 1.0), kGrid);
    RegularizationParams rp;
    rp.epsilon = 1e-3;
    CHECK(std::abs(identity_kernel_apply(sing, phi, 2.0, rp).value - std::exp(-1.0)) < 5e-3);
    CHECK_THROWS_AS(identity_kernel_apply(sing, phi, 2.0, {}), PoleOnContour);

    // the sign of epsilon follows b unless overridden
    RegularizationParams neg;
    neg.epsilon = -1e-3;
    CHECK(neg.effective_epsilon(sing.factorization) == 1e-3);
    neg.override_sign = true;
    CHECK(neg.effective_epsilon(sing.factorization) == -1e-3);
    const auto wrong = identity_kernel_apply(sing, phi, 2.0, neg);
    const cplx predicted = schwartz::smeared_zz2_residual(1.0, -1e-3, phi, 2.0);
    CHECK(std::abs(wrong.value - std::exp(-1.0)) > 0.1);
    CHECK(std::abs(wrong.value - std::exp(-1.0) - predicted) < 1e-2);
}

TEST_CASE("smear-first identity agrees with the k-first damped ordering") {
    const auto s = build_system(Potential::zero(), kRegularA, kGrid);
    const auto phi = TestFunction::gaussian(4.0, 0.8);
    for (double x : {3.0, 4.5}) {
        const auto sf = identity_kernel_apply(s, phi, x, {});
        const cplx ref = k_first_identity(kRegularA, x, [](double y) { return gauss(4.0, 0.8, y); }, phi.upper());
        CHECK(std::abs(ref - phi(x)) < 1e-6);
        CHECK(std::abs(sf.value - ref) < 2e-6);
    }
}

TEST_CASE("regularization limit and wrong-sign control") {
    const auto sing = build_system(Potential::zero(), cplx(0.0, 1.0), kGrid);
    const auto phi = TestFunction::gaussian(3.0, 1.0);
    const double x = 2.0;
    std::vector<double> right, wrong;
    for (double eps : {1e-2, 5e-3, 2.5e-3}) {
        RegularizationParams rp;
        rp.epsilon = eps;
        right.push_back(std::abs(identity_kernel_apply(sing, phi, x, rp).value - phi(x)));
        rp.epsilon = -eps;
        rp.override_sign = true;
        wrong.push_back(std::abs(identity_kernel_apply(sing, phi, x, rp).value - phi(x)));
    }
    for (std::size_t i = 1; i < right.size(); ++i) {
        CHECK(right[i] < 0.6 * right[i - 1]);  // first order in epsilon
        CHECK(wrong[i] > 0.9 * wrong[i - 1]);
    }
    CHECK(wrong.back() > 0.1);
}

TEST_CASE("delta family probe") {
    const auto battery = default_battery();
    const auto xs = default_probe_points();
    const auto exact = delta_family_probe(DeltaKernel{}, battery, xs);
    CHECK(exact.max_deviation == 0.0);
    REQUIRE(exact.deviations.size() == battery.size());

    // delta plus a smooth part: the deviation is exactly the smooth part applied to Phi
    const RegularKernel smooth([](double x, double y) { return 1e-2 * std::exp(-(x - y) * (x - y)); }, Grid(12.0, 2401));
    const auto prof = delta_family_probe(smooth, battery, xs);
    for (std::size_t j = 0; j < battery.size(); ++j)
        for (std::size_t m = 0; m < xs.size(); ++m) {
            const double c = battery[j].center(), w = battery[j].scale(), x = xs[m];
            // int_0^inf e^{-(x-y)^2} e^{-(y-c)^2/w^2} dy by completing the square
            const double A = 1.0 + 1.0 / (w * w), mu = (x + c / (w * w)) / A;
            const double ref = 1e-2 * std::exp(-(x - c) * (x - c) / (1.0 + w * w)) * 0.5 *
                               std::sqrt(std::numbers::pi / A) * std::erfc(-mu * std::sqrt(A));
            CHECK(std::abs(prof.values[j][m] - (battery[j](x) + ref)) < 1e-8);
        }

    const auto reg = build_system(Potential::zero(), kRegularA, kGrid);
    const auto regular = delta_family_probe(ResolutionKernel(reg, {}), battery, xs);
    CHECK(regular.max_deviation < 5e-3);

    const auto sing = build_system(Potential::zero(), cplx(0.0, 1.0), kGrid);
    RegularizationParams bad;
    bad.override_sign = true;
    bad.epsilon = -2e-3;
    const double d1 = delta_family_probe(ResolutionKernel(sing, bad), battery, xs).max_deviation;
    bad.epsilon = -1e-3;
    const auto p2 = delta_family_probe(ResolutionKernel(sing, bad), battery, xs);
    CHECK(d1 > 0.1);
    CHECK(p2.max_deviation > 0.9 * d1);
    CHECK(p2.deviations[p2.worst_member] == p2.max_deviation);
}
