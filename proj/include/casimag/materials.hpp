#ifndef CASIMAG_MATERIALS_HPP
#define CASIMAG_MATERIALS_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "casimag/units.hpp"

// Dielectric tensor elements eps_xx(i omega) and eps_xy(i omega) at imaginary
// frequency for the four supported mirror models. All frequencies are angular
// (s^-1). eps_xy as returned already carries the mirror's magnetization sign
// (+1: along the mirror's own outward normal, -1: against it).

namespace casimag {

struct DrudeParams {
    double omega_p = 0.0;  // plasma frequency, s^-1
    double omega_c = 0.0;  // cyclotron frequency; sign follows B_eff
    double tau = 0.0;      // relaxation time, s

    void validate() const;
    // true when omega_c*tau << 1 << omega_p*tau holds (factor-10 margins)
    bool usual_window() const;
    std::vector<std::string> warnings() const;

    // omega_p^2 = 4 pi n e^2 / m_star, omega_c = e B_eff / (m_star c), cgs.
    static DrudeParams from_microscopic(double n_per_cm3, double m_star_g,
                                        double b_eff_gauss, double tau_s,
                                        const PhysicalConstants& pc = constants::cgs);
};

struct DcTransportParams {
    double sigma = 0.0;  // dc conductivity, Gaussian, s^-1
    double theta = 0.0;  // anomalous Hall angle
    // The dc form eps = 1 + 4 pi sigma / omega is trusted only for
    // omega <~ 1/tau of the underlying metal; tau is not derivable from
    // (sigma, theta), so it is carried as validity metadata.
    double tau_validity = 1e-14;  // s

    void validate() const;
    std::vector<std::string> warnings() const;
};

struct OscillatorParams {
    double omega_0 = 0.0;      // absorption line frequency, s^-1
    double eps_xx_eff = 0.0;   // spectral weight (0 = vacuum)
    double eps_xy_eff = 0.0;   // magneto-optical weight

    void validate() const;
};

struct TabulatedSpectrum {
    std::vector<double> grid;        // strictly increasing omega', s^-1
    std::vector<double> im_eps_xx;   // Im eps_xx(omega') >= 0
    std::vector<double> re_eps_xy;   // Re eps_xy(omega')
    // Optional A/omega^3 extrapolation of Im eps_xx beyond the last grid
    // point, with A fixed by continuity. Default: spectrum is zero outside
    // the grid.
    bool cubic_tail = false;

    void validate() const;
};

// Strict parser for the plain-text spectrum format:
//   # omega[s^-1] im_eps_xx re_eps_xy
// whitespace-separated columns, '#' comments. Malformed rows are errors.
TabulatedSpectrum read_spectrum(std::istream& in);
TabulatedSpectrum read_spectrum_file(const std::string& path);

struct MaterialModel {
    std::variant<DrudeParams, DcTransportParams, OscillatorParams, TabulatedSpectrum> params;
    int magnetization_sign = +1;  // +1 along own outward normal, -1 against

    void validate() const;
    MaterialModel with_magnetization(int sign) const;
    MaterialModel reversed() const { return with_magnetization(-magnetization_sign); }

    bool is_dc_transport() const {
        return std::holds_alternative<DcTransportParams>(params);
    }
    const DrudeParams* drude() const { return std::get_if<DrudeParams>(&params); }

    static MaterialModel vacuum();
};

double eps_xx(const MaterialModel& model, double omega);
double eps_xy(const MaterialModel& model, double omega);

// Causality transforms of a tabulated spectrum, linear interpolation between
// samples with the rational kernel integrated analytically per segment:
//   eps_xx(i w) = 1 + (2/pi)  int w' Im eps_xx(w') / (w'^2 + w^2) dw'
//   eps_xy(i w) = (2/(w pi)) int w'^2 Re eps_xy(w') / (w'^2 + w^2) dw'
double kk_transform_xx(const TabulatedSpectrum& spec, double omega);
double kk_transform_xy(const TabulatedSpectrum& spec, double omega);

}  // namespace casimag

#endif
