#ifndef CASIMAG_REFLECTIVITY_HPP
#define CASIMAG_REFLECTIVITY_HPP

#include "casimag/materials.hpp"
#include "casimag/units.hpp"

// 2x2 reflection matrix of a magnetized mirror at imaginary frequency and
// imaginary normal wavevector. With all arguments on the imaginary axis the
// coefficients are real, and r_sp = r_ps (the s axis is unchanged upon
// reflection). The magnetization sign convention is fixed by the material:
// +1 means magnetized along the mirror's own outward normal.

namespace casimag {

struct ReflectionMatrix {
    double r_ss = 0.0;
    double r_pp = 0.0;
    double r_sp = 0.0;  // == r_ps
    double r_ps() const { return r_sp; }
};

// A point on the rotated contour: both omega and k_perp imaginary-axis
// values, with omega <= k_perp * c.
struct KPoint {
    double omega = 0.0;   // s^-1
    double k_perp = 0.0;  // cm^-1
};

ReflectionMatrix reflection_matrix(const MaterialModel& model, const KPoint& p,
                                   const PhysicalConstants& pc = constants::cgs);

enum class DrudeRegime { Long, Intermediate, Short };

// Closed-form limiting matrices of the Drude model in the three distance
// regimes, for diagnostics and tests. Throws std::domain_error when the
// point does not satisfy the regime's defining inequalities (factor-10
// margins).
ReflectionMatrix reflection_limit_check(const MaterialModel& model, DrudeRegime regime,
                                        const KPoint& p,
                                        const PhysicalConstants& pc = constants::cgs);

}  // namespace casimag

#endif
