#ifndef CASIMAG_QUADRATURE_HPP
#define CASIMAG_QUADRATURE_HPP

#include <functional>
#include <vector>

// Deterministic adaptive quadrature. The 2-D driver integrates over the
// fixed rectangle (u, t) in (0, u_max] x (0, 1]: adaptive Gauss-Kronrod 7-15
// panels in u, a fixed-order Gauss-Legendre rule in t. Panels are seeded
// geometrically toward u = 0 because metallic mirrors concentrate integrand
// structure at u ~ 2 D omega_p / c, far below the e^{-u} peak.

namespace casimag {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;          // absolute floor; 0 = purely relative
    long max_evaluations = 20000000;
    double u_max = 80.0;           // u = 2 k_perp D cutoff; e^{-80} ~ 2e-35
    int t_order = 64;              // Gauss-Legendre order in t
    bool override_material_validity = false;

    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Gauss-Legendre nodes/weights on (0, 1), cached per order. Thread-safe.
const std::vector<double>& gauss_legendre_nodes01(int order);
const std::vector<double>& gauss_legendre_weights01(int order);

// Adaptive GK7-15 over the union of [breakpoints[i], breakpoints[i+1]].
// evals_per_call scales the evaluation budget accounting (an f-call that
// internally sums an n-point rule should report n).
IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double rel_tol, double abs_tol,
                                  long max_evaluations, long evals_per_call = 1);

// 2-D driver: f(u, t) integrated du dt over (0, u_max] x (0, 1].
IntegralResult integrate_rectangle(const std::function<double(double, double)>& f,
                                   const QuadratureConfig& cfg);

// int_0^infty f(w) dw via w = scale * v/(1-v). Throws std::domain_error if
// the mapped tail fails to decay (integrand not integrable).
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double scale, double rel_tol,
                                       double abs_tol = 0.0,
                                       long max_evaluations = 2000000);

}  // namespace casimag

#endif
