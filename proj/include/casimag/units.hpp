#ifndef CASIMAG_UNITS_HPP
#define CASIMAG_UNITS_HPP

#include <stdexcept>
#include <string>

// All internal computation is done in Gaussian cgs units: lengths in cm,
// frequencies in s^-1 (angular), energy per area in erg/cm^2, force in dyn.
// SI appears only at the CLI boundary. A "natural" constant set (hbar = c = 1)
// is available for dimensionless kernel tests.

namespace casimag {

struct PhysicalConstants {
    double hbar;  // erg s
    double c;     // cm/s
    double k_B;   // erg/K
};

namespace constants {

inline constexpr PhysicalConstants cgs{1.054571817e-27, 2.99792458e10, 1.380649e-16};
inline constexpr PhysicalConstants natural{1.0, 1.0, 1.0};

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double zeta3 = 1.2020569031595942854;

// 1/(4 pi eps0) in SI, used for S/m -> s^-1 conductivity conversion.
inline constexpr double coulomb_constant_si = 8.9875517873681764e9;

inline constexpr double electron_charge_esu = 4.80320425e-10;  // statC
inline constexpr double electron_mass_g = 9.1093837015e-28;

}  // namespace constants

// --- SI <-> Gaussian boundary conversions -------------------------------

// sigma[S/m] -> sigma[s^-1], Gaussian sigma = sigma_SI / (4 pi eps0)
double si_conductivity_to_gaussian(double sigma_si);
double gaussian_conductivity_to_si(double sigma_gauss);

inline double newton_from_gaussian_force(double dyn) { return dyn * 1e-5; }
inline double dyne_from_si_force(double newton) { return newton * 1e5; }

inline constexpr double cm_per_m = 100.0;
inline constexpr double erg_per_joule = 1e7;
// erg/cm^2 -> J/m^2
inline constexpr double si_energy_per_area = 1e-3;
// dyn/cm^2 -> Pa
inline constexpr double si_force_per_area = 0.1;
// dyn/cm -> N/m
inline constexpr double si_spring_constant = 1e-3;

// --- dimension-tagged scalar --------------------------------------------

enum class Dimension {
    EnergyPerArea,
    ForcePerArea,
    Force,
    Frequency,
    Length,
    Area,
    ConductivityGaussian,
    Dimensionless,
};

const char* dimension_name(Dimension d);

// Minimal tagged quantity: addition/subtraction require matching tags, and
// only the product/quotient rules this project needs are defined. Anything
// else throws.
struct Quantity {
    double value = 0.0;
    Dimension dim = Dimension::Dimensionless;

    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    Quantity operator*(double s) const { return {value * s, dim}; }
    Quantity operator/(double s) const { return {value / s, dim}; }
};

}  // namespace casimag

#endif
