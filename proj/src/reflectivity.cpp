#include "casimag/reflectivity.hpp"

#include <cmath>
#include <stdexcept>

namespace casimag {

namespace {

void check_point(const KPoint& p, const PhysicalConstants& pc) {
    if (!(p.omega > 0.0) || !std::isfinite(p.omega))
        throw std::invalid_argument("KPoint: omega must be > 0");
    if (!(p.k_perp > 0.0) || !std::isfinite(p.k_perp))
        throw std::invalid_argument("KPoint: k_perp must be > 0");
    if (p.omega > p.k_perp * pc.c * (1.0 + 1e-12))
        throw std::invalid_argument("KPoint: omega must not exceed k_perp*c");
}

}  // namespace

ReflectionMatrix reflection_matrix(const MaterialModel& model, const KPoint& p,
                                   const PhysicalConstants& pc) {
    check_point(p, pc);
    const double kc = p.k_perp * pc.c;
    const double exx = eps_xx(model, p.omega);
    const double exy = eps_xy(model, p.omega);  // carries magnetization sign

    // s = sqrt(omega^2 (eps_xx - 1) + (kc)^2); strictly positive on the
    // imaginary axis for a passive medium, so the positive root is safe.
    const double radicand = p.omega * p.omega * (exx - 1.0) + kc * kc;
    if (!(radicand > 0.0))
        throw std::domain_error("reflection_matrix: non-positive radicand");
    const double s = std::sqrt(radicand);

    ReflectionMatrix r;
    r.r_ss = (kc - s) / (kc + s);
    r.r_pp = (exx * kc - s) / (exx * kc + s);
    r.r_sp = -kc * p.omega * exy / ((kc + s) * (exx * kc + s));
    return r;
}

ReflectionMatrix reflection_limit_check(const MaterialModel& model, DrudeRegime regime,
                                        const KPoint& p, const PhysicalConstants& pc) {
    const DrudeParams* d = model.drude();
    if (!d) throw std::invalid_argument("reflection_limit_check: Drude model required");
    d->validate();
    check_point(p, pc);

    const double kc = p.k_perp * pc.c;
    const double w = p.omega;
    const double wt = w * d->tau;
    const double margin = 10.0;

    ReflectionMatrix r;
    switch (regime) {
        case DrudeRegime::Long:
            // omega*tau << 1 and s ~ omega_p sqrt(omega tau) >> kc
            if (!(wt * margin <= 1.0))
                throw std::domain_error("limit_check(long): omega*tau not << 1");
            if (!(d->omega_p * d->omega_p * w * d->tau >= margin * kc * kc))
                throw std::domain_error("limit_check(long): kc not << omega_p sqrt(omega tau)");
            r.r_ss = -1.0;
            r.r_pp = 1.0;
            r.r_sp = -(d->omega_c / d->omega_p) * std::sqrt(wt);
            break;
        case DrudeRegime::Intermediate:
            // 1/tau << omega <= kc << omega_p and omega^2 << omega_p*kc
            if (!(wt >= margin))
                throw std::domain_error("limit_check(intermediate): omega*tau not >> 1");
            if (!(kc * margin <= d->omega_p))
                throw std::domain_error("limit_check(intermediate): kc not << omega_p");
            if (!(w * w * margin <= d->omega_p * kc))
                throw std::domain_error("limit_check(intermediate): omega^2 not << omega_p*kc");
            r.r_ss = -1.0;
            r.r_pp = 1.0;
            r.r_sp = -d->omega_c / d->omega_p;
            break;
        case DrudeRegime::Short:
            // omega*tau >> 1 and kc >> omega_p
            if (!(wt >= margin))
                throw std::domain_error("limit_check(short): omega*tau not >> 1");
            if (!(kc >= margin * d->omega_p))
                throw std::domain_error("limit_check(short): kc not >> omega_p");
            r.r_ss = 0.0;
            r.r_pp = 0.0;
            r.r_sp = -d->omega_p * d->omega_p * d->omega_c /
                     (2.0 * kc * (2.0 * w * w + d->omega_p * d->omega_p));
            break;
    }
    r.r_sp *= model.magnetization_sign;
    return r;
}

}  // namespace casimag
