#include "casimag/units.hpp"

#include <cmath>

namespace casimag {

double si_conductivity_to_gaussian(double sigma_si) {
    if (!(sigma_si >= 0.0))
        throw std::invalid_argument("si_conductivity_to_gaussian: sigma must be >= 0");
    return sigma_si * constants::coulomb_constant_si;
}

double gaussian_conductivity_to_si(double sigma_gauss) {
    if (!(sigma_gauss >= 0.0))
        throw std::invalid_argument("gaussian_conductivity_to_si: sigma must be >= 0");
    return sigma_gauss / constants::coulomb_constant_si;
}

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::EnergyPerArea: return "energy-per-area";
        case Dimension::ForcePerArea: return "force-per-area";
        case Dimension::Force: return "force";
        case Dimension::Frequency: return "frequency";
        case Dimension::Length: return "length";
        case Dimension::Area: return "area";
        case Dimension::ConductivityGaussian: return "conductivity-gaussian";
        case Dimension::Dimensionless: return "dimensionless";
    }
    return "?";
}

namespace {

[[noreturn]] void bad_dims(const char* op, Dimension a, Dimension b) {
    throw std::invalid_argument(std::string("Quantity: unsupported ") + op + " of " +
                                dimension_name(a) + " and " + dimension_name(b));
}

}  // namespace

Quantity Quantity::operator+(const Quantity& o) const {
    if (dim != o.dim) bad_dims("+", dim, o.dim);
    return {value + o.value, dim};
}

Quantity Quantity::operator-(const Quantity& o) const {
    if (dim != o.dim) bad_dims("-", dim, o.dim);
    return {value - o.value, dim};
}

Quantity Quantity::operator*(const Quantity& o) const {
    auto match = [&](Dimension a, Dimension b) {
        return (dim == a && o.dim == b) || (dim == b && o.dim == a);
    };
    if (match(Dimension::ForcePerArea, Dimension::Area))
        return {value * o.value, Dimension::Force};
    if (match(Dimension::Length, Dimension::Length))
        return {value * o.value, Dimension::Area};
    if (match(Dimension::ForcePerArea, Dimension::Length))
        return {value * o.value, Dimension::EnergyPerArea};
    if (dim == Dimension::Dimensionless) return {value * o.value, o.dim};
    if (o.dim == Dimension::Dimensionless) return {value * o.value, dim};
    bad_dims("*", dim, o.dim);
}

Quantity Quantity::operator/(const Quantity& o) const {
    if (dim == o.dim) return {value / o.value, Dimension::Dimensionless};
    if (dim == Dimension::EnergyPerArea && o.dim == Dimension::Length)
        return {value / o.value, Dimension::ForcePerArea};
    if (dim == Dimension::Force && o.dim == Dimension::Area)
        return {value / o.value, Dimension::ForcePerArea};
    if (o.dim == Dimension::Dimensionless) return {value / o.value, dim};
    bad_dims("/", dim, o.dim);
}

}  // namespace casimag
