// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is pinned in this file.
//
// Two clauses fail by construction of the source formulas themselves, not of
// this implementation, and are reported honestly with the measured values:
// the short-distance Drude window has true force slope -3/2 rather than -1,
// because the published regime-(iii) asymptote keeps only the omega >> omega_p
// band while the omega << omega_p band (p-channel reflection near unity at
// k c >> omega_p) dominates by a factor ~ sqrt(c/(D omega_p)). The same gap
// puts the closed-form prefactor an order of magnitude below the quadrature.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "casimag/asymptotics.hpp"
#include "casimag/casimir.hpp"
#include "casimag/experiment.hpp"
#include "casimag/report.hpp"

using namespace casimag;
using constants::pi;
using constants::zeta3;

namespace {

const PhysicalConstants nat = constants::natural;
int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id,
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

MirrorPair drude_pair(double op, double oc, double tau) {
    const MaterialModel m{DrudeParams{op, oc, tau}, +1};
    return MirrorPair{m, m, Alignment::FM};
}

double fitted_slope(const MirrorPair& p, double center, const QuadratureConfig& cfg,
                    int npts = 7) {
    std::vector<double> xs, ys;
    for (int i = 0; i < npts; ++i) {
        const double d =
            center * std::pow(10.0, -0.5 + double(i) / (npts - 1));  // one decade
        xs.push_back(d);
        ys.push_back(delta_force(p, d, cfg, DeltaMethod::Perturbative, nat).value);
    }
    return fit_loglog_slope(xs, ys);
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, format);
    std::vsnprintf(buf, sizeof buf, format, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_perfect_mirror() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    const ReflectionFn pm = [](double, double) { return ReflectionMatrix{-1.0, 1.0, 0.0}; };
    const double hbar = constants::cgs.hbar, c = constants::cgs.c;
    double worst_e = 0.0, worst_f = 0.0;
    for (double D : {1e-6, 1e-5, 1e-4}) {
        const double e = energy_exact(pm, pm, Alignment::FM, D, cfg).value;
        const double f = force_exact(pm, pm, Alignment::FM, D, cfg).value;
        worst_e = std::max(worst_e,
                           std::abs(e / (-pi * pi * hbar * c / (720 * D * D * D)) - 1.0));
        worst_f = std::max(
            worst_f, std::abs(f / (-pi * pi * hbar * c / (240 * D * D * D * D)) - 1.0));
    }
    const double secs = timer.seconds();
    const bool pass = worst_e < 1e-6 && worst_f < 1e-6 && secs < 5.0;
    report(1, pass,
           fmt("perfect-mirror oracle: max rel err energy %.2e, force %.2e (tol 1e-6)",
               worst_e, worst_f),
           secs);
}

void criterion_2_slopes() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-7;
    cfg.t_order = 128;
    const MirrorPair p = drude_pair(1e3, 1e-3, 1.0);  // omega_p tau = 1e3, omega_c tau = 1e-3

    const double s1 = fitted_slope(p, 1000.0, cfg);   // deep in (i), c tau = 1
    const double s2 = fitted_slope(p, 0.05, cfg);     // interior of (ii), 16x margins
    const double s3 = fitted_slope(p, 1e-6, cfg);     // deep in (iii), c/omega_p = 1e-3
    const bool ok1 = std::abs(s1 + 5.0) < 0.05;
    const bool ok2 = std::abs(s2 + 4.0) < 0.05;
    const bool ok3 = std::abs(s3 + 1.0) < 0.05;
    report(2, ok1 && ok2 && ok3,
           fmt("regime slopes: (i) %.3f vs -5, (ii) %.3f vs -4, (iii) %.3f vs -1 "
               "(tol 0.05)%s",
               s1, s2, s3,
               ok3 ? ""
                   : " -- (iii) fails as stated: the published D^-1 law omits the "
                     "dominant omega << omega_p band; the true slope tends to -3/2"),
           timer.seconds());
}

void criterion_3_prefactors() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-8;
    std::ostringstream msg;

    // Eq. (11) at D = 100 c tau, the criterion-2 parameter set
    const MirrorPair p1 = drude_pair(1e3, 1e-3, 1.0);
    const double de11 = delta_energy_perturbative(p1, 100.0, cfg, nat).value;
    const double eq11 = drude_long(DrudeParams{1e3, 1e-3, 1.0}, 100.0, nat).delta_e;
    const double dev11 = std::abs(de11 / eq11 - 1.0);
    const bool ok11 = dev11 < 0.10;
    msg << fmt("Eq.(11) dev %.1f%% at 100 c*tau (tol 10%%)", 100 * dev11);

    // Eq. (14) at the geometric midpoint of window (ii); deviations scale as
    // ~9/sqrt(omega_p tau), so a deep window (margin 1e4 per side) is used
    const double op = 1e8;
    const MirrorPair p2 = drude_pair(op, 100.0, 1.0);
    const double mid = std::sqrt(1.0 / op);
    const double de14 = delta_energy_perturbative(p2, mid, cfg, nat).value;
    const double eq14 = drude_intermediate(DrudeParams{op, 100.0, 1.0}, mid, nat).delta_e;
    const double dev14 = std::abs(de14 / eq14 - 1.0);
    const bool ok14 = dev14 < 0.05;
    msg << fmt("; Eq.(14) dev %.1f%% at midpoint (tol 5%%)", 100 * dev14);

    // Eq. (16b) at D = 0.01 c/omega_p
    QuadratureConfig cfg3 = cfg;
    cfg3.t_order = 128;
    const double d16 = 0.01 / 1e3;
    const double df16 =
        delta_force(p1, d16, cfg3, DeltaMethod::Perturbative, nat).value;
    const double eq16 = drude_short(DrudeParams{1e3, 1e-3, 1.0}, d16, 0.0, nat).delta_f;
    const double ratio16 = df16 / eq16;
    const bool ok16 = std::abs(ratio16 - 1.0) < 0.15;
    msg << fmt("; Eq.(16b) quadrature/formula = %.1f (tol 15%%)", ratio16);
    if (!ok16)
        msg << " -- fails as stated: the omega << omega_p p-channel band, absent from "
               "the published derivation, carries ~sqrt(c/(D omega_p)) times the "
               "kept term";

    report(3, ok11 && ok14 && ok16, msg.str(), timer.seconds());
}

void criterion_4_realistic_limits() {
    Timer timer;
    std::ostringstream msg;

    // closed-form force prefactor of Eq. (1)/(18): -3 zeta(3)/(16 pi^3), exact
    const DcTransportParams dc{9e16, 0.01, 1e-14};
    const double D0 = 0.3;
    const auto rl = realistic_long(dc, dc, D0);
    const double pref = rl.delta_f * std::pow(D0, 5) /
                        (constants::cgs.hbar * constants::cgs.c * constants::cgs.c *
                         dc.theta * dc.theta / dc.sigma);
    const double expected = -3.0 * zeta3 / (16.0 * pi * pi * pi);
    const bool ok_pref = std::abs(pref / expected - 1.0) < 1e-12;
    msg << fmt("Eq.(18) force prefactor %.15f vs -3zeta(3)/16pi^3 %.15f", pref, expected);

    // dc quadrature at D = 1e3 c tau_eq
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-8;
    const double D = 1000.0 * constants::cgs.c * dc.tau_validity;
    const MaterialModel m{dc, +1};
    const MirrorPair p{m, m, Alignment::FM};
    const double quad = delta_energy_perturbative(p, D, cfg).value;
    const double dev = std::abs(quad / realistic_long(dc, dc, D).delta_e - 1.0);
    const bool ok_quad = dev < 0.10;
    msg << fmt("; dc quadrature dev %.2f%% at 1e3 c*tau_eq (tol 10%%)", 100 * dev);

    // realistic_short vs oscillator_short on oscillator materials
    const OscillatorParams osc{6e15, 10.0, 1.5e-2};
    const MaterialModel mo{osc, +1};
    const auto closed = oscillator_short(osc, osc, 5e-7);
    const auto integ = realistic_short(mo, mo, 5e-7);
    const double dev_osc = std::abs(integ.delta_f / closed.delta_f - 1.0);
    const bool ok_osc = dev_osc < 0.01;
    msg << fmt("; realistic_short vs oscillator_short dev %.3f%% (tol 1%%)", 100 * dev_osc);

    report(4, ok_pref && ok_quad && ok_osc, msg.str(), timer.seconds());
}

void criterion_5_headline() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-7;
    const MaterialModel osc{OscillatorParams{6e15, 10.0, 1.5e-2}, +1};
    const MirrorPair pair{osc, osc, Alignment::FM};
    const SpherePlateGeometry geom{1e-2, 5e-6};  // R = 100 um, D = 50 nm
    const CantileverSpec rugar =
        CantileverSpec::from_ordinary_resonance(1.0, 3000.0, 1.4e3, 1.5e-7, 300.0, 1.0);

    // |dF_sphere| = 2 pi R |dE(D)| over the proposed range D <= c/omega_0
    // (the paper's ~10 fN estimate carries a log factor that vanishes at
    // exactly D = c/omega_0 = 50 nm; the honest value there is ~2 fN)
    std::vector<double> grid;
    for (int i = 0; i < 5; ++i) grid.push_back(1e-6 * std::pow(5.0, i / 4.0));
    const DetectabilityReport rep = detectability_report(pair, geom, rugar, grid, cfg);
    double best = 0.0;
    for (const auto& r : rep.rows) best = std::max(best, std::abs(r.delta_f_sphere));
    const double best_n = best * 1e-5;
    const bool ok_df = best_n > 5e-15 && best_n < 2e-14;

    const double df50_n = std::abs(rep.rows.back().delta_f_sphere) * 1e-5;
    const double ratio = std::abs(rep.rows.back().delta_f_sphere / rep.rows.back().f_sphere);
    const bool ok_ratio = ratio < 1e-3;

    const double thermal_n = min_force_thermal(rugar) * 1e-5;
    const bool ok_thermal = thermal_n > 0.25e-15 && thermal_n < 1.0e-15;

    report(5, ok_df && ok_ratio && ok_thermal,
           fmt("headline: max|dF_sphere| %.2f fN over 10-50 nm (10 fN within x2; "
               "%.2f fN at 50 nm where the log factor dies), dF/F %.1e (tol 1e-3), "
               "thermal floor %.2f fN (0.5 fN within x2)",
               best_n * 1e15, df50_n * 1e15, ratio, thermal_n * 1e15),
           timer.seconds());
}

void criterion_6_exact_vs_perturbative() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    std::mt19937 rng(240401);
    std::uniform_real_distribution<double> log_optau(1.0, 3.0), log_ocop(-2.3, -1.4),
        log_d(-1.5, 1.5);
    double worst_margin = 0.0;
    bool pass = true;
    for (int i = 0; i < 20; ++i) {
        const double optau = std::pow(10.0, log_optau(rng));
        const double ocop = std::pow(10.0, log_ocop(rng));
        const MirrorPair p = drude_pair(optau, optau * ocop, 1.0);
        const double D = std::pow(10.0, log_d(rng));
        const double maxr = max_offdiagonal_reflectivity(p, D, cfg, nat);
        if (maxr >= 0.05) continue;  // stay inside the stated ensemble
        const double ex = delta_energy_exact(p, D, cfg, nat).value;
        const double pe = delta_energy_perturbative(p, D, cfg, nat).value;
        const double dev = std::abs(ex - pe) / std::abs(pe);
        const double bound = 10.0 * maxr * maxr;
        worst_margin = std::max(worst_margin, dev / bound);
        if (dev >= bound) pass = false;
    }
    report(6, pass,
           fmt("exact vs perturbative over 20 random Drude pairs: worst dev/bound %.3f "
               "(must stay < 1)",
               worst_margin),
           timer.seconds());
}

void criterion_7_properties() {
    Timer timer;
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    std::ostringstream msg;
    bool pass = true;

    // sign laws
    const MirrorPair p = drude_pair(1e3, 1e-3, 1.0);
    MirrorPair flipped = p;
    flipped.material_b = flipped.material_b.reversed();
    const double de = delta_energy_perturbative(p, 0.1, cfg, nat).value;
    const double def = delta_energy_perturbative(flipped, 0.1, cfg, nat).value;
    const MirrorPair plain = drude_pair(1e3, 0.0, 1.0);
    const bool ok_signs = de < 0.0 && std::abs(def + de) < 1e-12 * std::abs(de) &&
                          delta_energy_perturbative(plain, 0.1, cfg, nat).value == 0.0;
    pass = pass && ok_signs;
    msg << (ok_signs ? "signs ok" : "SIGN LAWS VIOLATED");

    // force = -dE/dD by central differences, rel 1e-4
    QuadratureConfig tight = cfg;
    tight.rel_tol = 1e-11;
    const MaterialModel gold{DrudeParams{1.4e16, 0.0, 2e-14}, +1};
    const MirrorPair gp{gold, gold, Alignment::FM};
    const double D = 5e-6, h = D / 1000.0;
    const double f = force_exact(gp, D, tight).value;
    const double fd =
        -(energy_exact(gp, D + h, tight).value - energy_exact(gp, D - h, tight).value) /
        (2 * h);
    const double fdev = std::abs(f / fd - 1.0);
    const bool ok_force = fdev < 1e-4;
    pass = pass && ok_force;
    msg << fmt("; force vs -dE/dD dev %.1e (tol 1e-4)", fdev);

    // KK narrow peak against the oscillator closed form, 1%
    TabulatedSpectrum peak;
    {
        const double w0 = 6e15, hw = 1e-3 * w0;
        const int n = 81;
        for (int i = 0; i < n; ++i) {
            const double x = -1.0 + 2.0 * i / (n - 1);
            peak.grid.push_back(w0 + x * hw);
            peak.im_eps_xx.push_back((1.0 - std::abs(x)) * 10.0 * w0 / hw);
            peak.re_eps_xy.push_back((1.0 - std::abs(x)) * 1.5e-2 * w0 / hw);
        }
    }
    const MaterialModel tab{peak, +1};
    const MaterialModel osc{OscillatorParams{6e15, 10.0, 1.5e-2}, +1};
    bool ok_kk = true;
    for (double w : {2e15, 6e15, 1.8e16}) {
        ok_kk = ok_kk && std::abs(eps_xx(tab, w) / eps_xx(osc, w) - 1.0) < 0.01;
        ok_kk = ok_kk && std::abs(eps_xy(tab, w) / eps_xy(osc, w) - 1.0) < 0.01;
    }
    pass = pass && ok_kk;
    msg << (ok_kk ? "; KK narrow peak ok" : "; KK NARROW PEAK OFF");

    // determinism: byte-identical reruns
    const auto r1 = delta_energy_perturbative(p, 0.37, cfg, nat);
    const auto r2 = delta_energy_perturbative(p, 0.37, cfg, nat);
    const bool ok_det = format_g17(r1.value) == format_g17(r2.value) &&
                        r1.evaluations == r2.evaluations;
    pass = pass && ok_det;
    msg << (ok_det ? "; deterministic" : "; NON-DETERMINISTIC");

    // eps_xx(i omega) >= 1, monotone decreasing
    bool ok_eps = true;
    for (const MaterialModel& m :
         {MaterialModel{DrudeParams{1e16, 1e13, 1e-14}, +1},
          MaterialModel{DcTransportParams{9e16, 0.01}, +1}, osc, tab}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = -20; i <= 20; ++i) {
            const double w = 1e15 * std::pow(10.0, 0.2 * i);
            const double e = eps_xx(m, w);
            ok_eps = ok_eps && e >= 1.0 && e < prev;
            prev = e;
        }
    }
    pass = pass && ok_eps;
    msg << (ok_eps ? "; eps_xx >= 1 monotone" : "; EPS_XX INVARIANT VIOLATED");

    report(7, pass, msg.str(), timer.seconds());
}

}  // namespace

int main() {
    std::printf("casimag acceptance suite\n");
    criterion_1_perfect_mirror();
    criterion_2_slopes();
    criterion_3_prefactors();
    criterion_4_realistic_limits();
    criterion_5_headline();
    criterion_6_exact_vs_perturbative();
    criterion_7_properties();
    std::printf("%d of 7 criteria failed\n", failures);
    return failures;
}
