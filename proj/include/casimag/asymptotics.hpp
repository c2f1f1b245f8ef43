#ifndef CASIMAG_ASYMPTOTICS_HPP
#define CASIMAG_ASYMPTOTICS_HPP

#include "casimag/materials.hpp"
#include "casimag/units.hpp"

// Closed-form limiting expressions for the magnetization-dependent Casimir
// energy/force difference dE = E_AF - E_FM and dF = -d(dE)/dD, in every
// distance regime with an explicit form, plus regime classification.
// Each dF is the exact derivative of its paired dE with the cutoff held
// fixed. Results are for equivalent mirrors unless noted.

namespace casimag {

enum class RegimeTag {
    LongDrude,
    IntermediateDrude,
    ShortDrude,
    LongRealistic,
    ShortRealistic,
    OscillatorShort,
};

const char* regime_name(RegimeTag t);

struct Regime {
    RegimeTag tag;
    double d_min = 0.0;        // cm, window lower edge (0 = open)
    double d_max = 0.0;        // cm, window upper edge (inf -> 0 = open)
    double margin_long = 0.0;  // D / (c tau)
    double margin_short = 0.0; // D omega_p / c
};

struct AsymptoticResult {
    double delta_e = 0.0;      // erg/cm^2
    double delta_f = 0.0;      // dyn/cm^2
    RegimeTag formula_id = RegimeTag::LongDrude;
    double cutoff_used = 0.0;  // s^-1; 0 = formula has no cutoff
    bool in_window = true;
};

// Drude windows: (i) D >> c tau, (ii) c/omega_p << D << c tau,
// (iii) D << c/omega_p.
Regime classify(const DrudeParams& params, double distance,
                const PhysicalConstants& pc = constants::cgs);

// (i): dE = -(3 zeta(3)/16 pi^2) (hbar c^2/D^4) (omega_c^2 tau/omega_p^2)
AsymptoticResult drude_long(const DrudeParams& params, double distance,
                            const PhysicalConstants& pc = constants::cgs);

// (ii): dE = -(1/24)(hbar c/D^3)(omega_c/omega_p)^2
AsymptoticResult drude_intermediate(const DrudeParams& params, double distance,
                                    const PhysicalConstants& pc = constants::cgs);

// (iii): dE = -(1/(16 pi sqrt2))(hbar/c^2) ln(c/(omega* D)) omega_c^2 omega_p;
// omega_star <= 0 selects the default cutoff omega_p.
AsymptoticResult drude_short(const DrudeParams& params, double distance,
                             double omega_star = 0.0,
                             const PhysicalConstants& pc = constants::cgs);

// dE = -(3 zeta(3)/64 pi^3)(hbar c^2/D^4) theta_A theta_B / sqrt(sigma_A sigma_B)
AsymptoticResult realistic_long(const DcTransportParams& a, const DcTransportParams& b,
                                double distance,
                                const PhysicalConstants& pc = constants::cgs);

// dE = -(1/4 pi^2)(hbar/c^2) ln(c/(omega* D)) *
//      int_0^inf w^2 eps_xy^A eps_xy^B / [(1+eps_xx^A)(1+eps_xx^B)] dw,
// 1-D adaptive quadrature; omega_star <= 0 selects a per-material default.
// Throws std::domain_error for materials with a non-integrable tail
// (dc transport).
AsymptoticResult realistic_short(const MaterialModel& a, const MaterialModel& b,
                                 double distance, double omega_star = 0.0,
                                 const PhysicalConstants& pc = constants::cgs);

// Single-line oscillator closed form,
//   dF = -(1/16 pi^3)(hbar/(c^2 D)) w0^3 (eps_xy_eff)^2 / (1+eps_xx_eff/pi)^{3/2}.
// Equal line frequencies are required. Unequal spectral weights combine as
// eps_xy^A eps_xy^B and the geometric mean of the (1+eps_xx_eff/pi) factors
// (an extension; the symmetric case is the derived one).
AsymptoticResult oscillator_short(const OscillatorParams& a, const OscillatorParams& b,
                                  double distance,
                                  const PhysicalConstants& pc = constants::cgs);

}  // namespace casimag

#endif
