#include "casimag/casimir.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace casimag {

using constants::pi;

namespace {

// Even/odd decomposition of det(1 - M) and Tr[(1-M)^{-1} M] at one node,
// M = R_A R_B e^{-u}. With P = 2 e^{-u} r_sp^A r_sp^B (odd under a single
// magnetization reversal) and G, T, dm even:
//   det(1 - M)          = G - sigma P      (sigma = +1 AF, -1 FM)
//   Tr[(1-M)^{-1} M]    = (T + sigma P - 2 dm) / (G - sigma P)
//   lndet_AF - lndet_FM = -2 atanh(P / G)
//   Tr_AF - Tr_FM       =  2 P (1 - dm) / (G^2 - P^2)
struct NodeKernel {
    double G, P, T, dm;
    double a, b, x;       // r_ss^A r_ss^B, r_pp^A r_pp^B, e^{-u}
    double rsp_product;   // r_sp^A r_sp^B
};

NodeKernel eval_node(const ReflectionFn& A, const ReflectionFn& B, double u, double t,
                     double D, const PhysicalConstants& pc) {
    const double k = u / (2.0 * D);
    const double omega = t * k * pc.c;
    const ReflectionMatrix ra = A(omega, k);
    const ReflectionMatrix rb = B(omega, k);
    NodeKernel n;
    n.x = std::exp(-u);
    n.a = ra.r_ss * rb.r_ss;
    n.b = ra.r_pp * rb.r_pp;
    n.rsp_product = ra.r_sp * rb.r_sp;
    n.T = n.x * (n.a + n.b);
    n.P = 2.0 * n.x * n.rsp_product;
    const double det_a = ra.r_ss * ra.r_pp - ra.r_sp * ra.r_sp;
    const double det_b = rb.r_ss * rb.r_pp - rb.r_sp * rb.r_sp;
    n.dm = n.x * n.x * det_a * det_b;
    n.G = 1.0 - n.T + n.dm;
    return n;
}

double alignment_sigma(Alignment a) { return a == Alignment::AF ? +1.0 : -1.0; }

// Re ln det for one configuration. Passive mirrors (|r| <= 1) always give
// det > 0; the single-line oscillator model loses passivity at omega << omega_0
// (eps_xy ~ 1/omega with bounded eps_xx), where the real part of the log is
// ln|det| exactly as the energy formula prescribes.
double re_ln_det(double det, long* nonpassive) {
    if (det == 0.0) throw std::domain_error("casimir: 1 - M singular");
    if (det < 0.0) ++*nonpassive;
    return std::log(std::abs(det));
}

void warn_nonpassive(const char* where, long count) {
    if (count > 0)
        std::cerr << "warning: " << where << ": " << count
                  << " quadrature nodes with non-passive reflection (det(1-M) < 0); "
                     "Re ln det evaluated\n";
}

EnergyResult wrap(const IntegralResult& r, double prefactor) {
    EnergyResult e;
    e.value = prefactor * r.value;
    e.error_estimate = std::abs(prefactor) * r.error;
    e.evaluations = r.evaluations;
    e.converged = r.converged;
    return e;
}

void check_distance(double D) {
    if (!(D > 0.0) || !std::isfinite(D))
        throw std::invalid_argument("distance must be > 0");
}

void check_material_validity(const MirrorPair& pair, double D, const QuadratureConfig& cfg,
                             const PhysicalConstants& pc) {
    if (cfg.override_material_validity) return;
    for (const MaterialModel* m : {&pair.material_a, &pair.material_b}) {
        if (const auto* dc = std::get_if<DcTransportParams>(&m->params)) {
            const double d_min = 10.0 * pc.c * dc->tau_validity;
            if (D < d_min)
                throw std::domain_error(
                    "dc-transport material is valid only at low imaginary frequency; "
                    "need D >= 10 c tau_validity (or override_material_validity)");
        }
    }
}

}  // namespace

ReflectionFn material_reflection(const MaterialModel& model, const PhysicalConstants& pc) {
    model.validate();
    return [model, pc](double omega, double k_perp) {
        return reflection_matrix(model, KPoint{omega, k_perp}, pc);
    };
}

EnergyResult energy_exact(const ReflectionFn& A, const ReflectionFn& B, Alignment alignment,
                          double D, const QuadratureConfig& cfg,
                          const PhysicalConstants& pc) {
    check_distance(D);
    const double sigma = alignment_sigma(alignment);
    long nonpassive = 0;
    auto f = [&](double u, double t) {
        const NodeKernel n = eval_node(A, B, u, t, D, pc);
        return u * u * re_ln_det(n.G - sigma * n.P, &nonpassive);
    };
    const double pref = pc.hbar * pc.c / (32.0 * pi * pi * D * D * D);
    const EnergyResult r = wrap(integrate_rectangle(f, cfg), pref);
    warn_nonpassive("energy_exact", nonpassive);
    return r;
}

ForceResult force_exact(const ReflectionFn& A, const ReflectionFn& B, Alignment alignment,
                        double D, const QuadratureConfig& cfg,
                        const PhysicalConstants& pc) {
    check_distance(D);
    const double sigma = alignment_sigma(alignment);
    long nonpassive = 0;
    auto f = [&](double u, double t) {
        const NodeKernel n = eval_node(A, B, u, t, D, pc);
        const double det = n.G - sigma * n.P;
        if (det == 0.0) throw std::domain_error("force_exact: 1 - M singular");
        if (det < 0.0) ++nonpassive;
        return u * u * u * (n.T + sigma * n.P - 2.0 * n.dm) / det;
    };
    const double pref = -pc.hbar * pc.c / (32.0 * pi * pi * D * D * D * D);
    const ForceResult r = wrap(integrate_rectangle(f, cfg), pref);
    warn_nonpassive("force_exact", nonpassive);
    return r;
}

EnergyResult energy_exact(const MirrorPair& pair, double D, const QuadratureConfig& cfg,
                          const PhysicalConstants& pc) {
    check_material_validity(pair, D, cfg, pc);
    return energy_exact(material_reflection(pair.material_a, pc),
                        material_reflection(pair.material_b, pc), pair.alignment, D, cfg,
                        pc);
}

ForceResult force_exact(const MirrorPair& pair, double D, const QuadratureConfig& cfg,
                        const PhysicalConstants& pc) {
    check_material_validity(pair, D, cfg, pc);
    return force_exact(material_reflection(pair.material_a, pc),
                       material_reflection(pair.material_b, pc), pair.alignment, D, cfg,
                       pc);
}

EnergyResult delta_energy_exact(const MirrorPair& pair, double D,
                                const QuadratureConfig& cfg, const PhysicalConstants& pc) {
    check_distance(D);
    check_material_validity(pair, D, cfg, pc);
    const ReflectionFn A = material_reflection(pair.material_a, pc);
    const ReflectionFn B = material_reflection(pair.material_b, pc);
    long nonpassive = 0;
    auto f = [&](double u, double t) {
        const NodeKernel n = eval_node(A, B, u, t, D, pc);
        // ln det_AF - ln det_FM; atanh keeps full precision when the two
        // configurations differ by a tiny amount
        const double ratio = n.P / n.G;
        if (std::abs(ratio) < 0.5) return u * u * (-2.0 * std::atanh(ratio));
        return u * u * (re_ln_det(n.G - n.P, &nonpassive) -
                        re_ln_det(n.G + n.P, &nonpassive));
    };
    const double pref = pc.hbar * pc.c / (32.0 * pi * pi * D * D * D);
    const EnergyResult r = wrap(integrate_rectangle(f, cfg), pref);
    warn_nonpassive("delta_energy_exact", nonpassive);
    return r;
}

EnergyResult delta_energy_perturbative(const MirrorPair& pair, double D,
                                       const QuadratureConfig& cfg,
                                       const PhysicalConstants& pc) {
    check_distance(D);
    check_material_validity(pair, D, cfg, pc);
    const double max_rsp = max_offdiagonal_reflectivity(pair, D, cfg, pc);
    if (max_rsp >= 0.3)
        std::cerr << "warning: max |r_sp| = " << max_rsp
                  << " >= 0.3; perturbative expansion is unreliable\n";
    const ReflectionFn A = material_reflection(pair.material_a, pc);
    const ReflectionFn B = material_reflection(pair.material_b, pc);
    auto f = [&](double u, double t) {
        const NodeKernel n = eval_node(A, B, u, t, D, pc);
        return u * u * n.rsp_product * n.x /
               ((1.0 - n.a * n.x) * (1.0 - n.b * n.x));
    };
    const double pref = -pc.hbar * pc.c / (8.0 * pi * pi * D * D * D);
    return wrap(integrate_rectangle(f, cfg), pref);
}

ForceResult delta_force(const MirrorPair& pair, double D, const QuadratureConfig& cfg,
                        DeltaMethod method, const PhysicalConstants& pc) {
    check_distance(D);
    check_material_validity(pair, D, cfg, pc);
    const ReflectionFn A = material_reflection(pair.material_a, pc);
    const ReflectionFn B = material_reflection(pair.material_b, pc);
    if (method == DeltaMethod::Perturbative) {
        auto f = [&](double u, double t) {
            const NodeKernel n = eval_node(A, B, u, t, D, pc);
            const double da = 1.0 - n.a * n.x;
            const double db = 1.0 - n.b * n.x;
            return u * u * u * n.rsp_product * n.x *
                   (1.0 - n.a * n.b * n.x * n.x) / (da * da * db * db);
        };
        const double pref = -pc.hbar * pc.c / (8.0 * pi * pi * D * D * D * D);
        return wrap(integrate_rectangle(f, cfg), pref);
    }
    auto f = [&](double u, double t) {
        const NodeKernel n = eval_node(A, B, u, t, D, pc);
        const double denom = n.G * n.G - n.P * n.P;
        if (denom == 0.0) throw std::domain_error("delta_force: 1 - M singular");
        return u * u * u * 2.0 * n.P * (1.0 - n.dm) / denom;
    };
    const double pref = -pc.hbar * pc.c / (32.0 * pi * pi * D * D * D * D);
    return wrap(integrate_rectangle(f, cfg), pref);
}

double max_offdiagonal_reflectivity(const MirrorPair& pair, double D,
                                    const QuadratureConfig& cfg,
                                    const PhysicalConstants& pc) {
    check_distance(D);
    const ReflectionFn A = material_reflection(pair.material_a, pc);
    const ReflectionFn B = material_reflection(pair.material_b, pc);
    // log grid in u down to the smallest seeded panel, linear in t
    double max_rsp = 0.0;
    for (int i = 0; i <= 48; ++i) {
        const double u = cfg.u_max * std::pow(2.0, -0.25 * (48 - i));
        const double k = u / (2.0 * D);
        for (int j = 1; j <= 16; ++j) {
            const double t = j / 16.0;
            const double omega = t * k * pc.c;
            max_rsp = std::max({max_rsp, std::abs(A(omega, k).r_sp),
                                std::abs(B(omega, k).r_sp)});
        }
    }
    return max_rsp;
}

}  // namespace casimag
