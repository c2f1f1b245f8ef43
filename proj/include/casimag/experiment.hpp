#ifndef CASIMAG_EXPERIMENT_HPP
#define CASIMAG_EXPERIMENT_HPP

#include <functional>
#include <vector>

#include "casimag/casimir.hpp"
#include "casimag/units.hpp"

// Sphere-plate conversion by the proximity force theorem, cantilever
// detectability limits, and the per-distance detectability report for the
// proposed resonant differential measurement.

namespace casimag {

struct SpherePlateGeometry {
    double radius = 0.0;    // cm, lens curvature radius
    double distance = 0.0;  // cm, shortest gap

    void validate() const;
    bool pfa_valid() const { return distance / radius <= 1e-2; }
};

struct CantileverSpec {
    double spring_k = 0.0;       // dyn/cm
    double quality_q = 0.0;
    double omega_r = 0.0;        // rad/s (angular resonance frequency)
    double deflection_dx = 0.0;  // cm
    double temperature = 0.0;    // K
    double bandwidth = 1.0;      // Hz (ordinary frequency)

    void validate() const;

    // The resonance is conventionally quoted as an ordinary frequency
    // ("1.4 kHz" style); stored internally as angular.
    static CantileverSpec from_ordinary_resonance(double spring_k, double quality_q,
                                                  double resonance_hz,
                                                  double deflection_dx, double temperature,
                                                  double bandwidth_hz = 1.0);
};

// F_sphere(D) = 2 pi R E_plate(D); applies to the magnetic difference dE and
// to the full Casimir energy alike. Returns dyn.
double pfa_force(const std::function<double(double)>& energy_per_area,
                 const SpherePlateGeometry& geom);

// |dF_min| >= k dx / Q
double min_force_deflection(const CantileverSpec& spec);

// |dF_min| >= sqrt(4 k_B T dnu k / (omega_r Q))
double min_force_thermal(const CantileverSpec& spec,
                         const PhysicalConstants& pc = constants::cgs);

struct DetectabilityRow {
    double distance = 0.0;          // cm
    double delta_f_sphere = 0.0;    // dyn
    double f_sphere = 0.0;          // dyn (FM alignment)
    double limit_deflection = 0.0;  // dyn
    double limit_thermal = 0.0;     // dyn
    double snr = 0.0;               // |dF|/max(limits)
    bool detectable = false;
};

struct DetectabilityReport {
    std::vector<DetectabilityRow> rows;
    CantileverSpec cantilever;
    SpherePlateGeometry geometry;      // distance field = smallest sweep D
    double parasitic_bound = 0.0;      // dyn, user-supplied (not computed)
    double bandwidth_note = 1.0;       // Hz, restated for output metadata
};

DetectabilityReport detectability_report(const MirrorPair& pair,
                                         const SpherePlateGeometry& geom,
                                         const CantileverSpec& spec,
                                         const std::vector<double>& distances,
                                         const QuadratureConfig& cfg,
                                         double parasitic_bound = 0.0,
                                         const PhysicalConstants& pc = constants::cgs);

}  // namespace casimag

#endif
