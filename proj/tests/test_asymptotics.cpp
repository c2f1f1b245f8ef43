#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimag/asymptotics.hpp"
#include "casimag/casimir.hpp"

using namespace casimag;
using constants::pi;
using constants::zeta3;

namespace {
const PhysicalConstants nat = constants::natural;

MirrorPair pair_of(const MaterialModel& m) { return MirrorPair{m, m, Alignment::FM}; }
}  // namespace

TEST_CASE("classify: the three Drude windows") {
    const DrudeParams p{1e3, 1e-3, 1.0};  // c tau = 1, c/omega_p = 1e-3 (natural)
    CHECK(classify(p, 100.0, nat).tag == RegimeTag::LongDrude);
    CHECK(classify(p, std::sqrt(1e-3), nat).tag == RegimeTag::IntermediateDrude);
    CHECK(classify(p, 1e-5, nat).tag == RegimeTag::ShortDrude);
    const Regime r = classify(p, 100.0, nat);
    CHECK(r.margin_long == doctest::Approx(100.0));
    CHECK(r.margin_short == doctest::Approx(1e5));
}

TEST_CASE("drude_long scaling laws") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const auto a = drude_long(p, 200.0, nat);
    const auto b = drude_long(p, 400.0, nat);
    CHECK(a.delta_e / b.delta_e == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(a.delta_f / b.delta_f == doctest::Approx(32.0).epsilon(1e-12));

    DrudeParams p2 = p;
    p2.omega_c *= 2.0;
    CHECK(drude_long(p2, 200.0, nat).delta_e / a.delta_e ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(a.in_window);
    CHECK_FALSE(drude_long(p, 0.01, nat).in_window);
}

TEST_CASE("drude_long matches quadrature within 10% at D = 100 c tau") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    const auto asym = drude_long(p, 100.0, nat);
    const auto quad =
        delta_energy_perturbative(pair_of({p, +1}), 100.0, cfg, nat);
    CHECK(quad.value == doctest::Approx(asym.delta_e).epsilon(0.10));
    const auto quad_f =
        delta_force(pair_of({p, +1}), 100.0, cfg, DeltaMethod::Perturbative, nat);
    CHECK(quad_f.value == doctest::Approx(asym.delta_f).epsilon(0.10));
}

TEST_CASE("drude_intermediate: D^-4 force law and tau independence") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const auto a = drude_intermediate(p, 0.01, nat);
    const auto b = drude_intermediate(p, 0.02, nat);
    CHECK(a.delta_f / b.delta_f == doctest::Approx(16.0).epsilon(1e-12));

    DrudeParams other_tau = p;
    other_tau.tau = 123.0;
    CHECK(drude_intermediate(other_tau, 0.01, nat).delta_e == a.delta_e);

    // eq coefficient
    CHECK(a.delta_e == doctest::Approx(-(1.0 / 24.0) * 1e-12 / 1e-6).epsilon(1e-12));
}

TEST_CASE("drude_intermediate matches quadrature at the window midpoint") {
    // margin sqrt(omega_p tau) ~ 300 on both sides
    const DrudeParams p{1e5, 1.0, 1.0};
    const double mid = std::sqrt(1.0 / p.omega_p);
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    const auto asym = drude_intermediate(p, mid, nat);
    const auto quad = delta_energy_perturbative(pair_of({p, +1}), mid, cfg, nat);
    CHECK(quad.value == doctest::Approx(asym.delta_e).epsilon(0.10));
}

TEST_CASE("drude_short: cutoff-free force, log-bearing energy") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const auto a = drude_short(p, 1e-5, 0.0, nat);
    const auto b = drude_short(p, 1e-5, 7.7 * p.omega_p, nat);
    CHECK(a.delta_f == b.delta_f);  // omega_star does not enter the force
    CHECK(a.delta_e != b.delta_e);
    CHECK(a.cutoff_used == p.omega_p);

    // slope -1 of the closed form
    const auto c = drude_short(p, 2e-5, 0.0, nat);
    CHECK(a.delta_f / c.delta_f == doctest::Approx(2.0).epsilon(1e-12));

    // paper coefficient
    CHECK(a.delta_f ==
          doctest::Approx(-(1.0 / (16.0 * pi * std::sqrt(2.0))) * 1e-6 * 1e3 / 1e-5)
              .epsilon(1e-12));
}

TEST_CASE("drude_short versus quadrature: the true short-distance force is ~10x larger") {
    // The closed form keeps only the omega >> omega_p range; at omega << omega_p
    // the p-channel reflection is still near unity (electrostatic screening) and
    // that band dominates the integral, growing like sqrt(c/(D omega_p)).
    // Characterization at D = 0.01 c/omega_p, omega_p tau = 1e3.
    const DrudeParams p{1e3, 1e-3, 1.0};
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-8;
    cfg.t_order = 128;
    const double D = 0.01 / p.omega_p;
    const auto asym = drude_short(p, D, 0.0, nat);
    const auto quad = delta_force(pair_of({p, +1}), D, cfg, DeltaMethod::Perturbative, nat);
    const double ratio = quad.value / asym.delta_f;
    CHECK(ratio > 9.0);
    CHECK(ratio < 12.0);
}

TEST_CASE("realistic_long: exact prefactor, symmetry, sign rules") {
    const DcTransportParams a{9e16, 0.01};
    const DcTransportParams b{4e16, -0.02};
    const double D = 0.3;
    const auto r = realistic_long(a, b, D);
    const double hbar = constants::cgs.hbar, c = constants::cgs.c;
    // force prefactor -3 zeta(3)/(16 pi^3), exactly
    CHECK(r.delta_f == doctest::Approx(-(3.0 * zeta3 / (16.0 * pi * pi * pi)) * hbar * c *
                                       c / std::pow(D, 5) * a.theta * b.theta /
                                       std::sqrt(a.sigma * b.sigma))
                           .epsilon(1e-14));
    // theta_A theta_B < 0 flips the sign (here: repulsive-like positive)
    CHECK(r.delta_f > 0.0);
    // D^-4 law: dF * D / dE = 4 exactly
    CHECK(r.delta_f * D / r.delta_e == doctest::Approx(4.0).epsilon(1e-14));

    const auto sym = realistic_long(a, a, D);
    CHECK(sym.delta_e < 0.0);
}

TEST_CASE("realistic_long matches dc quadrature within 10% at D = 1000 c tau_eq") {
    const DcTransportParams dc{9e16, 0.01, 1e-14};
    const double D = 1000.0 * constants::cgs.c * dc.tau_validity;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    const MaterialModel m{dc, +1};
    const auto asym = realistic_long(dc, dc, D);
    const auto quad = delta_energy_perturbative(pair_of(m), D, cfg);
    CHECK(quad.value == doctest::Approx(asym.delta_e).epsilon(0.10));
    const auto quad_f = delta_force(pair_of(m), D, cfg);
    CHECK(quad_f.value == doctest::Approx(asym.delta_f).epsilon(0.10));
}

TEST_CASE("realistic_short on oscillator materials matches the closed form to 1%") {
    const OscillatorParams osc{6e15, 10.0, 1.5e-2};
    const MaterialModel m{osc, +1};
    const double D = 5e-7;  // 5 nm, inside the short window
    const auto closed = oscillator_short(osc, osc, D);
    const auto integral = realistic_short(m, m, D, 0.0);
    CHECK(integral.cutoff_used == doctest::Approx(osc.omega_0));
    CHECK(integral.delta_f == doctest::Approx(closed.delta_f).epsilon(0.01));
    CHECK(integral.delta_e == doctest::Approx(closed.delta_e).epsilon(0.01));
}

TEST_CASE("realistic_short vanishes when one mirror has no Kerr response") {
    const MaterialModel a{OscillatorParams{6e15, 10.0, 1.5e-2}, +1};
    const MaterialModel b{OscillatorParams{6e15, 10.0, 0.0}, +1};
    CHECK(realistic_short(a, b, 5e-7).delta_f == 0.0);
}

TEST_CASE("realistic_short on Drude materials reduces to drude_short within 10%") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const MaterialModel m{p, +1};
    const double D = 1e-5;
    const auto a = realistic_short(m, m, D, 0.0, nat);
    const auto b = drude_short(p, D, 0.0, nat);
    CHECK(a.delta_f == doctest::Approx(b.delta_f).epsilon(0.10));
}

TEST_CASE("realistic_short rejects dc-transport tails") {
    const MaterialModel dc{DcTransportParams{9e16, 0.01}, +1};
    const MaterialModel osc{OscillatorParams{6e15, 10.0, 1.5e-2}, +1};
    CHECK_THROWS_AS(realistic_short(dc, osc, 5e-7), std::domain_error);
}

TEST_CASE("oscillator_short: paper numbers and scaling") {
    const OscillatorParams osc{6e15, 10.0, 1.5e-2};
    const double hbar = constants::cgs.hbar, c = constants::cgs.c;

    // closed-form coefficient
    const double D = 1.5e-6;  // 15 nm
    const auto r = oscillator_short(osc, osc, D);
    const double k = hbar * std::pow(6e15, 3) * 1.5e-2 * 1.5e-2 /
                     (16.0 * pi * pi * pi * c * c * std::pow(1.0 + 10.0 / pi, 1.5));
    CHECK(r.delta_f == doctest::Approx(-k / D).epsilon(1e-12));
    CHECK(r.delta_e == doctest::Approx(-k * std::log(c / (6e15 * D))).epsilon(1e-12));
    CHECK(r.in_window);

    // the sphere-plate headline: 2 pi R |dE| around 10 fN at R = 100 um
    const double f_sphere = 2.0 * pi * 1e-2 * std::abs(r.delta_e) * 1e-5;  // N
    CHECK(f_sphere > 5e-15);
    CHECK(f_sphere < 2e-14);

    // quadratic dependence on the magneto-optical weight
    OscillatorParams twice = osc;
    twice.eps_xy_eff *= 2.0;
    CHECK(oscillator_short(twice, twice, D).delta_f / r.delta_f ==
          doctest::Approx(4.0).epsilon(1e-12));

    // dF * D independent of D
    const auto r2 = oscillator_short(osc, osc, 2.0 * D);
    CHECK(r.delta_f * D == doctest::Approx(r2.delta_f * 2.0 * D).epsilon(1e-12));

    // out-of-window flag beyond c/omega_0
    CHECK_FALSE(oscillator_short(osc, osc, 6e-6).in_window);

    // mismatched line frequencies are rejected
    OscillatorParams other = osc;
    other.omega_0 = 5e15;
    CHECK_THROWS_AS(oscillator_short(osc, other, D), std::invalid_argument);
}

TEST_CASE("asymmetric oscillator pair uses the geometric-mean combination") {
    const OscillatorParams a{6e15, 10.0, 1.5e-2};
    const OscillatorParams b{6e15, 4.0, -3.0e-2};
    const double D = 1e-6;
    const double fab = oscillator_short(a, b, D).delta_f;
    const double faa = oscillator_short(a, a, D).delta_f;
    const double fbb = oscillator_short(b, b, D).delta_f;
    CHECK(fab * fab == doctest::Approx(faa * fbb).epsilon(1e-10));
    CHECK(fab > 0.0);  // opposite-sign weights give a ferromagnetic difference
}

TEST_CASE("every asymptotic force is the negative derivative of its energy") {
    const DrudeParams dp{1e3, 1e-3, 1.0};
    const DcTransportParams dc{9e16, 0.01};
    const OscillatorParams osc{6e15, 10.0, 1.5e-2};
    const MaterialModel mosc{osc, +1};

    auto check_pairing = [](auto&& fE, auto&& fF, double D) {
        const double h = D * 1e-5;
        const double fd = -(fE(D + h) - fE(D - h)) / (2.0 * h);
        CHECK(fF(D) == doctest::Approx(fd).epsilon(1e-8));
    };
    check_pairing([&](double d) { return drude_long(dp, d, nat).delta_e; },
                  [&](double d) { return drude_long(dp, d, nat).delta_f; }, 100.0);
    check_pairing([&](double d) { return drude_intermediate(dp, d, nat).delta_e; },
                  [&](double d) { return drude_intermediate(dp, d, nat).delta_f; }, 0.03);
    check_pairing([&](double d) { return drude_short(dp, d, 2.0 * dp.omega_p, nat).delta_e; },
                  [&](double d) { return drude_short(dp, d, 2.0 * dp.omega_p, nat).delta_f; },
                  1e-5);
    check_pairing([&](double d) { return realistic_long(dc, dc, d).delta_e; },
                  [&](double d) { return realistic_long(dc, dc, d).delta_f; }, 0.3);
    check_pairing([&](double d) { return oscillator_short(osc, osc, d).delta_e; },
                  [&](double d) { return oscillator_short(osc, osc, d).delta_f; }, 1e-6);
    check_pairing([&](double d) { return realistic_short(mosc, mosc, d, 8e15).delta_e; },
                  [&](double d) { return realistic_short(mosc, mosc, d, 8e15).delta_f; },
                  1e-6);
}

TEST_CASE("cross-regime continuity at D = c tau within a factor 3") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const double d = 1.0;  // c tau
    const double ratio = drude_long(p, d, nat).delta_f / drude_intermediate(p, d, nat).delta_f;
    CHECK(ratio > 1.0 / 3.0);
    CHECK(ratio < 3.0);
    // analytic value 6 zeta(3)/pi^2
    CHECK(ratio == doctest::Approx(6.0 * zeta3 / (pi * pi)).epsilon(1e-12));
}

TEST_CASE("all closed forms are negative for equivalent mirrors") {
    const DrudeParams p{1e3, 1e-3, 1.0};
    const DcTransportParams dc{9e16, 0.01};
    const OscillatorParams osc{6e15, 10.0, 1.5e-2};
    for (const AsymptoticResult& r :
         {drude_long(p, 100.0, nat), drude_intermediate(p, 0.03, nat),
          drude_short(p, 1e-5, 0.0, nat), realistic_long(dc, dc, 0.3),
          oscillator_short(osc, osc, 1e-6)}) {
        CHECK(r.delta_e < 0.0);
        CHECK(r.delta_f < 0.0);
    }
}
