#include "casimag/materials.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace casimag {

using constants::pi;

void DrudeParams::validate() const {
    if (!(omega_p > 0.0)) throw std::invalid_argument("DrudeParams: omega_p must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("DrudeParams: tau must be > 0");
    if (!std::isfinite(omega_c)) throw std::invalid_argument("DrudeParams: omega_c must be finite");
}

bool DrudeParams::usual_window() const {
    return std::abs(omega_c) * tau < 0.1 && omega_p * tau > 10.0;
}

std::vector<std::string> DrudeParams::warnings() const {
    std::vector<std::string> w;
    if (!usual_window())
        w.push_back("Drude parameters outside the usual window omega_c*tau << 1 << omega_p*tau");
    return w;
}

DrudeParams DrudeParams::from_microscopic(double n_per_cm3, double m_star_g,
                                          double b_eff_gauss, double tau_s,
                                          const PhysicalConstants& pc) {
    if (!(n_per_cm3 > 0.0) || !(m_star_g > 0.0) || !(tau_s > 0.0))
        throw std::invalid_argument("from_microscopic: n, m_star, tau must be > 0");
    const double e = constants::electron_charge_esu;
    DrudeParams p;
    p.omega_p = std::sqrt(4.0 * pi * n_per_cm3 * e * e / m_star_g);
    p.omega_c = e * b_eff_gauss / (m_star_g * pc.c);
    p.tau = tau_s;
    return p;
}

void DcTransportParams::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("DcTransportParams: sigma must be > 0");
    if (!(std::abs(theta) < 1.0))
        throw std::invalid_argument("DcTransportParams: |theta| must be < 1");
    if (!(tau_validity > 0.0))
        throw std::invalid_argument("DcTransportParams: tau_validity must be > 0");
}

std::vector<std::string> DcTransportParams::warnings() const {
    std::vector<std::string> w;
    if (std::abs(theta) > 0.1)
        w.push_back("Hall angle |theta| > 0.1 is unusually large for a ferromagnet");
    return w;
}

void OscillatorParams::validate() const {
    if (!(omega_0 > 0.0)) throw std::invalid_argument("OscillatorParams: omega_0 must be > 0");
    if (!(eps_xx_eff >= 0.0))
        throw std::invalid_argument("OscillatorParams: eps_xx_eff must be >= 0");
    if (!std::isfinite(eps_xy_eff))
        throw std::invalid_argument("OscillatorParams: eps_xy_eff must be finite");
}

void TabulatedSpectrum::validate() const {
    if (grid.size() < 8)
        throw std::invalid_argument("TabulatedSpectrum: need at least 8 grid points");
    if (im_eps_xx.size() != grid.size() || re_eps_xy.size() != grid.size())
        throw std::invalid_argument("TabulatedSpectrum: column length mismatch");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(im_eps_xx[i]) || !std::isfinite(re_eps_xy[i]))
            throw std::invalid_argument("TabulatedSpectrum: non-finite entry");
        if (!(grid[i] > 0.0))
            throw std::invalid_argument("TabulatedSpectrum: frequencies must be > 0");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("TabulatedSpectrum: grid must be strictly increasing");
        if (im_eps_xx[i] < 0.0)
            throw std::invalid_argument("TabulatedSpectrum: Im eps_xx must be >= 0 (passivity)");
    }
}

TabulatedSpectrum read_spectrum(std::istream& in) {
    TabulatedSpectrum spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double w, ixx, rxy;
        if (!(row >> w)) continue;  // blank or comment-only line
        if (!(row >> ixx >> rxy))
            throw std::invalid_argument("spectrum line " + std::to_string(lineno) +
                                        ": expected 3 numeric columns");
        std::string trailing;
        if (row >> trailing)
            throw std::invalid_argument("spectrum line " + std::to_string(lineno) +
                                        ": trailing garbage '" + trailing + "'");
        spec.grid.push_back(w);
        spec.im_eps_xx.push_back(ixx);
        spec.re_eps_xy.push_back(rxy);
    }
    spec.validate();
    return spec;
}

TabulatedSpectrum read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    return read_spectrum(in);
}

void MaterialModel::validate() const {
    if (magnetization_sign != 1 && magnetization_sign != -1)
        throw std::invalid_argument("MaterialModel: magnetization_sign must be +1 or -1");
    std::visit([](const auto& p) { p.validate(); }, params);
}

MaterialModel MaterialModel::with_magnetization(int sign) const {
    MaterialModel m = *this;
    m.magnetization_sign = sign;
    return m;
}

MaterialModel MaterialModel::vacuum() {
    return MaterialModel{OscillatorParams{1.0, 0.0, 0.0}, +1};
}

namespace {

void check_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("material evaluation requires omega > 0");
}

// atan(b/w) - atan(a/w) without cancellation for a, b >> w
double atan_diff(double a, double b, double w) {
    return std::atan(w * (b - a) / (w * w + a * b));
}

// log((b^2+w^2)/(a^2+w^2))
double log_ratio(double a, double b, double w) {
    return std::log1p((b - a) * (b + a) / (a * a + w * w));
}

}  // namespace

double kk_transform_xx(const TabulatedSpectrum& spec, double omega) {
    check_omega(omega);
    spec.validate();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < spec.grid.size(); ++i) {
        const double a = spec.grid[i], b = spec.grid[i + 1];
        const double fa = spec.im_eps_xx[i], fb = spec.im_eps_xx[i + 1];
        const double q = (fb - fa) / (b - a);
        const double p = fa - q * a;
        // int_a^b w' (p + q w') / (w'^2 + omega^2) dw'
        acc += 0.5 * p * log_ratio(a, b, omega) +
               q * ((b - a) - omega * atan_diff(a, b, omega));
    }
    if (spec.cubic_tail) {
        const double b = spec.grid.back();
        const double A = spec.im_eps_xx.back() * b * b * b;
        acc += (A / (omega * omega)) *
               (1.0 / b - (0.5 * pi - std::atan(b / omega)) / omega);
    }
    return 1.0 + (2.0 / pi) * acc;
}

double kk_transform_xy(const TabulatedSpectrum& spec, double omega) {
    check_omega(omega);
    spec.validate();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < spec.grid.size(); ++i) {
        const double a = spec.grid[i], b = spec.grid[i + 1];
        const double fa = spec.re_eps_xy[i], fb = spec.re_eps_xy[i + 1];
        const double q = (fb - fa) / (b - a);
        const double p = fa - q * a;
        // int_a^b w'^2 (p + q w') / (w'^2 + omega^2) dw'
        acc += p * ((b - a) - omega * atan_diff(a, b, omega)) +
               q * (0.5 * (b - a) * (b + a) -
                    0.5 * omega * omega * log_ratio(a, b, omega));
    }
    return (2.0 / (omega * pi)) * acc;
}

double eps_xx(const MaterialModel& model, double omega) {
    check_omega(omega);
    struct Visitor {
        double w;
        double operator()(const DrudeParams& p) const {
            return 1.0 + p.omega_p * p.omega_p * p.tau / (w * (1.0 + w * p.tau));
        }
        double operator()(const DcTransportParams& p) const {
            return 1.0 + 4.0 * pi * p.sigma / w;
        }
        double operator()(const OscillatorParams& p) const {
            return 1.0 + (2.0 / pi) * p.omega_0 * p.omega_0 * p.eps_xx_eff /
                             (p.omega_0 * p.omega_0 + w * w);
        }
        double operator()(const TabulatedSpectrum& s) const { return kk_transform_xx(s, w); }
    };
    return std::visit(Visitor{omega}, model.params);
}

double eps_xy(const MaterialModel& model, double omega) {
    check_omega(omega);
    struct Visitor {
        double w;
        double operator()(const DrudeParams& p) const {
            const double d = 1.0 + w * p.tau;
            return p.omega_p * p.omega_p * p.omega_c * p.tau * p.tau / (w * d * d);
        }
        double operator()(const DcTransportParams& p) const {
            return 4.0 * pi * p.sigma * p.theta / w;
        }
        double operator()(const OscillatorParams& p) const {
            const double w0 = p.omega_0;
            return (2.0 / (pi * w)) * w0 * w0 * w0 * p.eps_xy_eff / (w0 * w0 + w * w);
        }
        double operator()(const TabulatedSpectrum& s) const { return kk_transform_xy(s, w); }
    };
    return model.magnetization_sign * std::visit(Visitor{omega}, model.params);
}

}  // namespace casimag
