#include "casimag/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "casimag/quadrature.hpp"

namespace casimag {

using constants::pi;
using constants::zeta3;

const char* regime_name(RegimeTag t) {
    switch (t) {
        case RegimeTag::LongDrude: return "long-drude";
        case RegimeTag::IntermediateDrude: return "intermediate-drude";
        case RegimeTag::ShortDrude: return "short-drude";
        case RegimeTag::LongRealistic: return "long-realistic";
        case RegimeTag::ShortRealistic: return "short-realistic";
        case RegimeTag::OscillatorShort: return "oscillator-short";
    }
    return "?";
}

Regime classify(const DrudeParams& params, double D, const PhysicalConstants& pc) {
    params.validate();
    if (!(D > 0.0)) throw std::invalid_argument("classify: distance must be > 0");
    const double d_tau = pc.c * params.tau;        // regime (i) boundary
    const double d_plasma = pc.c / params.omega_p; // regime (iii) boundary

    Regime r;
    r.margin_long = D / d_tau;
    r.margin_short = D / d_plasma;
    if (D > d_tau) {
        r.tag = RegimeTag::LongDrude;
        r.d_min = d_tau;
        r.d_max = 0.0;
    } else if (D < d_plasma) {
        r.tag = RegimeTag::ShortDrude;
        r.d_min = 0.0;
        r.d_max = d_plasma;
    } else {
        r.tag = RegimeTag::IntermediateDrude;
        r.d_min = d_plasma;
        r.d_max = d_tau;
    }
    return r;
}

AsymptoticResult drude_long(const DrudeParams& p, double D, const PhysicalConstants& pc) {
    p.validate();
    const double ratio2 = p.omega_c * p.omega_c * p.tau / (p.omega_p * p.omega_p);
    const double k = (3.0 * zeta3 / (16.0 * pi * pi)) * pc.hbar * pc.c * pc.c * ratio2;
    AsymptoticResult r;
    r.formula_id = RegimeTag::LongDrude;
    r.delta_e = -k / (D * D * D * D);
    r.delta_f = -4.0 * k / (D * D * D * D * D);
    r.in_window = classify(p, D, pc).tag == RegimeTag::LongDrude;
    return r;
}

AsymptoticResult drude_intermediate(const DrudeParams& p, double D,
                                    const PhysicalConstants& pc) {
    p.validate();
    const double ratio2 = (p.omega_c / p.omega_p) * (p.omega_c / p.omega_p);
    const double k = pc.hbar * pc.c * ratio2 / 24.0;
    AsymptoticResult r;
    r.formula_id = RegimeTag::IntermediateDrude;
    r.delta_e = -k / (D * D * D);
    r.delta_f = -3.0 * k / (D * D * D * D);
    r.in_window = classify(p, D, pc).tag == RegimeTag::IntermediateDrude;
    return r;
}

AsymptoticResult drude_short(const DrudeParams& p, double D, double omega_star,
                             const PhysicalConstants& pc) {
    p.validate();
    const double ws = omega_star > 0.0 ? omega_star : p.omega_p;
    const double k = pc.hbar * p.omega_c * p.omega_c * p.omega_p /
                     (16.0 * pi * std::sqrt(2.0) * pc.c * pc.c);
    AsymptoticResult r;
    r.formula_id = RegimeTag::ShortDrude;
    r.cutoff_used = ws;
    r.delta_e = -k * std::log(pc.c / (ws * D));
    r.delta_f = -k / D;
    r.in_window = classify(p, D, pc).tag == RegimeTag::ShortDrude;
    return r;
}

AsymptoticResult realistic_long(const DcTransportParams& a, const DcTransportParams& b,
                                double D, const PhysicalConstants& pc) {
    a.validate();
    b.validate();
    if (!(D > 0.0)) throw std::invalid_argument("realistic_long: distance must be > 0");
    const double k = (3.0 * zeta3 / (64.0 * pi * pi * pi)) * pc.hbar * pc.c * pc.c *
                     a.theta * b.theta / std::sqrt(a.sigma * b.sigma);
    AsymptoticResult r;
    r.formula_id = RegimeTag::LongRealistic;
    r.delta_e = -k / (D * D * D * D);
    r.delta_f = -4.0 * k / (D * D * D * D * D);
    return r;
}

namespace {

double default_cutoff(const MaterialModel& m) {
    if (const auto* d = std::get_if<DrudeParams>(&m.params)) return d->omega_p;
    if (const auto* o = std::get_if<OscillatorParams>(&m.params)) return o->omega_0;
    if (const auto* t = std::get_if<TabulatedSpectrum>(&m.params)) {
        // typical absorption frequency: location of the Im eps_xx maximum
        std::size_t imax = 0;
        for (std::size_t i = 1; i < t->grid.size(); ++i)
            if (t->im_eps_xx[i] > t->im_eps_xx[imax]) imax = i;
        return t->grid[imax];
    }
    throw std::domain_error("no short-distance cutoff for this material");
}

}  // namespace

AsymptoticResult realistic_short(const MaterialModel& a, const MaterialModel& b, double D,
                                 double omega_star, const PhysicalConstants& pc) {
    a.validate();
    b.validate();
    if (!(D > 0.0)) throw std::invalid_argument("realistic_short: distance must be > 0");
    if (a.is_dc_transport() || b.is_dc_transport())
        throw std::domain_error(
            "realistic_short: dc-transport dielectric tail is not integrable");

    const double scale = 0.5 * (default_cutoff(a) + default_cutoff(b));
    const double ws = omega_star > 0.0 ? omega_star : scale;

    auto integrand = [&](double w) {
        return w * w * eps_xy(a, w) * eps_xy(b, w) /
               ((1.0 + eps_xx(a, w)) * (1.0 + eps_xx(b, w)));
    };
    const IntegralResult I = integrate_semi_infinite(integrand, scale, 1e-10);
    if (!I.converged)
        throw std::runtime_error("realistic_short: frequency integral did not converge");

    const double k = pc.hbar / (4.0 * pi * pi * pc.c * pc.c) * I.value;
    AsymptoticResult r;
    r.formula_id = RegimeTag::ShortRealistic;
    r.cutoff_used = ws;
    r.delta_e = -k * std::log(pc.c / (ws * D));
    r.delta_f = -k / D;
    r.in_window = D <= pc.c / ws;
    return r;
}

AsymptoticResult oscillator_short(const OscillatorParams& a, const OscillatorParams& b,
                                  double D, const PhysicalConstants& pc) {
    a.validate();
    b.validate();
    if (!(D > 0.0)) throw std::invalid_argument("oscillator_short: distance must be > 0");
    if (std::abs(a.omega_0 - b.omega_0) > 1e-9 * a.omega_0)
        throw std::invalid_argument("oscillator_short: line frequencies must be equal");

    const double w0 = a.omega_0;
    const double weight = std::pow((1.0 + a.eps_xx_eff / pi) * (1.0 + b.eps_xx_eff / pi),
                                   0.75);
    const double k = pc.hbar * w0 * w0 * w0 * a.eps_xy_eff * b.eps_xy_eff /
                     (16.0 * pi * pi * pi * pc.c * pc.c * weight);
    AsymptoticResult r;
    r.formula_id = RegimeTag::OscillatorShort;
    r.cutoff_used = w0;
    r.delta_e = -k * std::log(pc.c / (w0 * D));
    r.delta_f = -k / D;
    r.in_window = D <= pc.c / w0;
    return r;
}

}  // namespace casimag
