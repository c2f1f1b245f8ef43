#include "casimag/experiment.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace casimag {

using constants::pi;

void SpherePlateGeometry::validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("SpherePlateGeometry: radius must be > 0");
    if (!(distance > 0.0))
        throw std::invalid_argument("SpherePlateGeometry: distance must be > 0");
}

void CantileverSpec::validate() const {
    if (!(spring_k > 0.0)) throw std::invalid_argument("CantileverSpec: spring_k must be > 0");
    if (!(quality_q >= 1.0)) throw std::invalid_argument("CantileverSpec: Q must be >= 1");
    if (!(omega_r > 0.0)) throw std::invalid_argument("CantileverSpec: omega_r must be > 0");
    if (!(deflection_dx >= 0.0))
        throw std::invalid_argument("CantileverSpec: deflection must be >= 0");
    if (!(temperature >= 0.0))
        throw std::invalid_argument("CantileverSpec: temperature must be >= 0");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("CantileverSpec: bandwidth must be > 0");
}

CantileverSpec CantileverSpec::from_ordinary_resonance(double spring_k, double quality_q,
                                                       double resonance_hz,
                                                       double deflection_dx,
                                                       double temperature,
                                                       double bandwidth_hz) {
    CantileverSpec s;
    s.spring_k = spring_k;
    s.quality_q = quality_q;
    s.omega_r = 2.0 * pi * resonance_hz;
    s.deflection_dx = deflection_dx;
    s.temperature = temperature;
    s.bandwidth = bandwidth_hz;
    s.validate();
    return s;
}

double pfa_force(const std::function<double(double)>& energy_per_area,
                 const SpherePlateGeometry& geom) {
    geom.validate();
    if (!geom.pfa_valid())
        std::cerr << "warning: D/R = " << geom.distance / geom.radius
                  << " > 1e-2; proximity force approximation is marginal\n";
    return 2.0 * pi * geom.radius * energy_per_area(geom.distance);
}

double min_force_deflection(const CantileverSpec& spec) {
    spec.validate();
    return spec.spring_k * spec.deflection_dx / spec.quality_q;
}

double min_force_thermal(const CantileverSpec& spec, const PhysicalConstants& pc) {
    spec.validate();
    return std::sqrt(4.0 * pc.k_B * spec.temperature * spec.bandwidth * spec.spring_k /
                     (spec.omega_r * spec.quality_q));
}

DetectabilityReport detectability_report(const MirrorPair& pair,
                                         const SpherePlateGeometry& geom,
                                         const CantileverSpec& spec,
                                         const std::vector<double>& distances,
                                         const QuadratureConfig& cfg,
                                         double parasitic_bound,
                                         const PhysicalConstants& pc) {
    spec.validate();
    if (distances.empty())
        throw std::invalid_argument("detectability_report: empty distance grid");

    DetectabilityReport rep;
    rep.cantilever = spec;
    rep.geometry = geom;
    rep.parasitic_bound = parasitic_bound;
    rep.bandwidth_note = spec.bandwidth;

    const double lim_dx = min_force_deflection(spec);
    const double lim_th = min_force_thermal(spec, pc);
    const double floor = std::max(lim_dx, lim_th);

    for (double D : distances) {
        SpherePlateGeometry g = geom;
        g.distance = D;
        DetectabilityRow row;
        row.distance = D;
        row.limit_deflection = lim_dx;
        row.limit_thermal = lim_th;
        row.delta_f_sphere = pfa_force(
            [&](double d) { return delta_energy_perturbative(pair, d, cfg, pc).value; }, g);
        MirrorPair fm = pair;
        fm.alignment = Alignment::FM;
        row.f_sphere =
            pfa_force([&](double d) { return energy_exact(fm, d, cfg, pc).value; }, g);
        row.snr = floor > 0.0 ? std::abs(row.delta_f_sphere) / floor : 0.0;
        row.detectable = row.snr > 1.0;
        rep.rows.push_back(row);
    }
    rep.geometry.distance = rep.rows.front().distance;
    return rep;
}

}  // namespace casimag
