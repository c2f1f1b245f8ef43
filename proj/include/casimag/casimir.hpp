#ifndef CASIMAG_CASIMIR_HPP
#define CASIMAG_CASIMIR_HPP

#include <functional>

#include "casimag/materials.hpp"
#include "casimag/quadrature.hpp"
#include "casimag/reflectivity.hpp"
#include "casimag/units.hpp"

// Exact T = 0 Casimir energy per unit area between two mirrors,
//
//   E = (hbar / 4 pi^2) int_0^inf k dk int_0^{kc} dw Tr ln[1 - R_A R_B e^{-2kD}],
//
// its FM/AF difference, the lowest-order perturbative difference, and the
// corresponding forces. The integral is evaluated on the fixed rectangle
// u = 2 k D in (0, u_max], t = w/(k c) in (0, 1], where it becomes
// (hbar c / 32 pi^2 D^3) int u^2 du int dt ln det[1 - M(u, t)].
//
// Alignment bookkeeping: each material's magnetization_sign is defined
// against its own outward normal. Two facing mirrors have opposite outward
// normals, so lab-parallel (FM) magnetizations mean mirror B is magnetized
// *inward* in its own frame. Operationally: FM flips the sign of mirror B's
// r_sp relative to the constructed material, AF keeps it. This makes the
// interaction of two identically-constructed mirrors antiferromagnetic
// (E_AF < E_FM) and keeps the perturbative difference
//
//   dE = -(hbar/pi^2) int k dk int dw  r_sp^A r_sp^B e^{-2kD} /
//        [(1 - r_ss^A r_ss^B e^{-2kD})(1 - r_pp^A r_pp^B e^{-2kD})]
//
// expressed through the own-normal coefficients of the two materials.

namespace casimag {

enum class Alignment { FM, AF };

struct MirrorPair {
    MaterialModel material_a;
    MaterialModel material_b;
    Alignment alignment = Alignment::FM;
};

struct EnergyResult {
    double value = 0.0;           // erg/cm^2 (energy ops) or dyn/cm^2 (force ops)
    double error_estimate = 0.0;  // same units as value
    long evaluations = 0;
    bool converged = false;
};

using ForceResult = EnergyResult;

// Own-normal reflection coefficients of one mirror as a function of
// (omega, k_perp); the injection point for idealized test mirrors.
using ReflectionFn = std::function<ReflectionMatrix(double omega, double k_perp)>;

ReflectionFn material_reflection(const MaterialModel& model,
                                 const PhysicalConstants& pc = constants::cgs);

// --- generic (provider-based) entry points ------------------------------

EnergyResult energy_exact(const ReflectionFn& mirror_a, const ReflectionFn& mirror_b,
                          Alignment alignment, double distance,
                          const QuadratureConfig& cfg,
                          const PhysicalConstants& pc = constants::cgs);

ForceResult force_exact(const ReflectionFn& mirror_a, const ReflectionFn& mirror_b,
                        Alignment alignment, double distance,
                        const QuadratureConfig& cfg,
                        const PhysicalConstants& pc = constants::cgs);

// --- material-pair entry points ------------------------------------------

EnergyResult energy_exact(const MirrorPair& pair, double distance,
                          const QuadratureConfig& cfg,
                          const PhysicalConstants& pc = constants::cgs);

ForceResult force_exact(const MirrorPair& pair, double distance,
                        const QuadratureConfig& cfg,
                        const PhysicalConstants& pc = constants::cgs);

// E_AF - E_FM with both integrands evaluated at identical nodes and
// differenced analytically per node (no cancellation even for tiny r_sp).
EnergyResult delta_energy_exact(const MirrorPair& pair, double distance,
                                const QuadratureConfig& cfg,
                                const PhysicalConstants& pc = constants::cgs);

// Lowest order in the magneto-optical coefficients. Warns on stderr when
// max |r_sp| over the quadrature domain exceeds 0.3.
EnergyResult delta_energy_perturbative(const MirrorPair& pair, double distance,
                                       const QuadratureConfig& cfg,
                                       const PhysicalConstants& pc = constants::cgs);

enum class DeltaMethod { Perturbative, ExactDifference };

ForceResult delta_force(const MirrorPair& pair, double distance,
                        const QuadratureConfig& cfg,
                        DeltaMethod method = DeltaMethod::Perturbative,
                        const PhysicalConstants& pc = constants::cgs);

// Largest |r_sp| of either mirror over the quadrature grid at this distance;
// diagnostic for the perturbative expansion.
double max_offdiagonal_reflectivity(const MirrorPair& pair, double distance,
                                    const QuadratureConfig& cfg,
                                    const PhysicalConstants& pc = constants::cgs);

}  // namespace casimag

#endif
