#include "casimag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace casimag {

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw std::invalid_argument("QuadratureConfig: rel_tol must be in (0, 1e-2]");
    if (!(abs_tol >= 0.0))
        throw std::invalid_argument("QuadratureConfig: abs_tol must be >= 0");
    if (!(u_max >= 40.0))
        throw std::invalid_argument("QuadratureConfig: u_max must be >= 40");
    if (t_order < 4 || t_order > 4096)
        throw std::invalid_argument("QuadratureConfig: t_order must be in [4, 4096]");
    if (max_evaluations < 1000)
        throw std::invalid_argument("QuadratureConfig: max_evaluations too small");
}

namespace {

// Gauss-Kronrod 7-15 abscissae/weights (QUADPACK dqk15 values).
constexpr double kGKNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool refinable = true;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kKronrodW[7] * fc;
    double resg = kGaussW[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGKNodes[i];
        const double s = f(c - dx) + f(c + dx);
        resk += kKronrodW[i] * s;
        if (i % 2 == 1) resg += kGaussW[(i - 1) / 2] * s;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

struct GLRule {
    std::vector<double> nodes, weights;  // on (0, 1)
};

const GLRule& gl_rule(int order) {
    static std::map<int, GLRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GLRule r;
    r.nodes.resize(order);
    r.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1,1] -> [0,1]
        r.nodes[i] = 0.5 * (1.0 - x);
        r.nodes[order - 1 - i] = 0.5 * (1.0 + x);
        r.weights[i] = 0.5 * w;
        r.weights[order - 1 - i] = 0.5 * w;
    }
    auto [pos, ok] = cache.emplace(order, std::move(r));
    (void)ok;
    return pos->second;
}

}  // namespace

const std::vector<double>& gauss_legendre_nodes01(int order) { return gl_rule(order).nodes; }
const std::vector<double>& gauss_legendre_weights01(int order) { return gl_rule(order).weights; }

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  double rel_tol, double abs_tol,
                                  long max_evaluations, long evals_per_call) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least 2 breakpoints");

    std::vector<Panel> panels;
    panels.reserve(256);
    long evals = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("integrate_adaptive: breakpoints must increase");
        panels.push_back(gk15(f, breakpoints[i], breakpoints[i + 1]));
        evals += 15 * evals_per_call;
    }
    const double span = breakpoints.back() - breakpoints.front();
    const double min_width = 1e-15 * span;

    IntegralResult res;
    for (;;) {
        double total = 0.0, err = 0.0;
        std::size_t worst = panels.size();
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].error;
            if (panels[i].refinable && panels[i].error > worst_err) {
                worst_err = panels[i].error;
                worst = i;
            }
        }
        res.value = total;
        res.error = err;
        res.evaluations = evals;
        if (err <= std::max(rel_tol * std::abs(total), abs_tol)) {
            res.converged = true;
            return res;
        }
        if (worst == panels.size()) return res;  // nothing refinable left
        if (evals + 30 * evals_per_call > max_evaluations) return res;

        Panel p = panels[worst];
        if (p.b - p.a < min_width) {
            panels[worst].refinable = false;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = gk15(f, p.a, mid);
        panels.push_back(gk15(f, mid, p.b));
        evals += 30 * evals_per_call;
    }
}

IntegralResult integrate_rectangle(const std::function<double(double, double)>& f,
                                   const QuadratureConfig& cfg) {
    cfg.validate();
    const GLRule& rule = gl_rule(cfg.t_order);

    auto inner = [&](double u) {
        double acc = 0.0;
        for (int j = 0; j < cfg.t_order; ++j) acc += rule.weights[j] * f(u, rule.nodes[j]);
        return acc;
    };

    std::vector<double> bp;
    for (double b : {0.0, 0.0009765625, 0.00390625, 0.015625, 0.0625, 0.25, 1.0, 2.0,
                     4.0, 8.0, 16.0, 32.0, 64.0})
        if (b < cfg.u_max) bp.push_back(b);
    bp.push_back(cfg.u_max);

    return integrate_adaptive(inner, bp, cfg.rel_tol, cfg.abs_tol, cfg.max_evaluations,
                              cfg.t_order);
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       double scale, double rel_tol, double abs_tol,
                                       long max_evaluations) {
    if (!(scale > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: scale must be > 0");

    auto g = [&](double v) {
        const double om = scale * v / (1.0 - v);
        const double jac = scale / ((1.0 - v) * (1.0 - v));
        return f(om) * jac;
    };

    // Integrability pre-check: the mapped integrand must decay toward v = 1,
    // i.e. f must fall off faster than 1/omega^2.
    const double g9 = std::abs(g(1.0 - 1e-5));
    const double g6 = std::abs(g(1.0 - 1e-4));
    if (g9 > 10.0 * g6 && g9 > 1e-300)
        throw std::domain_error(
            "integrate_semi_infinite: integrand does not decay (divergent tail)");

    const std::vector<double> bp = {0.0,  0.1,  0.2,  0.3,   0.4,    0.5,    0.6,
                                    0.7,  0.8,  0.9,  0.99,  0.999,  0.9999, 1.0 - 1e-7,
                                    1.0 - 1e-10};
    return integrate_adaptive(g, bp, rel_tol, abs_tol, max_evaluations, 1);
}

}  // namespace casimag
