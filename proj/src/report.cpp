#include "casimag/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace casimag {

using ordered_json = nlohmann::ordered_json;

void parallel_for_indexed(std::size_t n, int threads,
                          const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += nt) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<EnergyRow> compute_energy_rows(const RunConfig& cfg) {
    const std::vector<double> ds = cfg.distance_grid();
    std::vector<EnergyRow> rows(ds.size());
    const MirrorPair base = cfg.pair();
    parallel_for_indexed(ds.size(), cfg.threads, [&](std::size_t i) {
        MirrorPair p = base;
        EnergyRow r;
        r.distance = ds[i];
        p.alignment = Alignment::FM;
        r.e_fm = energy_exact(p, ds[i], cfg.quadrature);
        p.alignment = Alignment::AF;
        r.e_af = energy_exact(p, ds[i], cfg.quadrature);
        r.de_exact = delta_energy_exact(base, ds[i], cfg.quadrature);
        r.de_pert = delta_energy_perturbative(base, ds[i], cfg.quadrature);
        rows[i] = r;
    });
    return rows;
}

std::vector<ForceRow> compute_force_rows(const RunConfig& cfg) {
    const std::vector<double> ds = cfg.distance_grid();
    std::vector<ForceRow> rows(ds.size());
    const MirrorPair base = cfg.pair();
    parallel_for_indexed(ds.size(), cfg.threads, [&](std::size_t i) {
        MirrorPair p = base;
        ForceRow r;
        r.distance = ds[i];
        p.alignment = Alignment::FM;
        r.f_fm = force_exact(p, ds[i], cfg.quadrature);
        p.alignment = Alignment::AF;
        r.f_af = force_exact(p, ds[i], cfg.quadrature);
        r.df_exact = delta_force(base, ds[i], cfg.quadrature, DeltaMethod::ExactDifference);
        r.df_pert = delta_force(base, ds[i], cfg.quadrature, DeltaMethod::Perturbative);
        rows[i] = r;
    });
    return rows;
}

namespace {

AsymptoticResult select_asymptote(const MirrorPair& pair, double D) {
    const auto& pa = pair.material_a.params;
    const auto& pb = pair.material_b.params;
    if (const auto* da = std::get_if<DrudeParams>(&pa)) {
        if (!std::holds_alternative<DrudeParams>(pb))
            throw std::invalid_argument("compare: mirror models must match");
        switch (classify(*da, D).tag) {
            case RegimeTag::LongDrude: return drude_long(*da, D);
            case RegimeTag::IntermediateDrude: return drude_intermediate(*da, D);
            default: return drude_short(*da, D);
        }
    }
    if (const auto* ca = std::get_if<DcTransportParams>(&pa)) {
        const auto* cb = std::get_if<DcTransportParams>(&pb);
        if (!cb) throw std::invalid_argument("compare: mirror models must match");
        return realistic_long(*ca, *cb, D);
    }
    if (const auto* oa = std::get_if<OscillatorParams>(&pa)) {
        const auto* ob = std::get_if<OscillatorParams>(&pb);
        if (!ob) throw std::invalid_argument("compare: mirror models must match");
        return oscillator_short(*oa, *ob, D);
    }
    throw std::invalid_argument("compare: no closed-form asymptote for tabulated mirrors");
}

}  // namespace

std::vector<CompareRow> compute_compare_rows(const RunConfig& cfg) {
    const std::vector<double> ds = cfg.distance_grid();
    std::vector<CompareRow> rows(ds.size());
    const MirrorPair base = cfg.pair();
    parallel_for_indexed(ds.size(), cfg.threads, [&](std::size_t i) {
        CompareRow r;
        r.distance = ds[i];
        r.df_numeric = delta_force(base, ds[i], cfg.quadrature, DeltaMethod::Perturbative);
        r.asymptotic = select_asymptote(base, ds[i]);
        const double a = r.asymptotic.delta_f;
        r.rel_deviation = a != 0.0 ? std::abs(r.df_numeric.value - a) / std::abs(a) : 0.0;
        rows[i] = r;
    });
    return rows;
}

std::vector<CompareSummary> summarize_compare(const std::vector<CompareRow>& rows) {
    std::map<RegimeTag, std::vector<const CompareRow*>> groups;
    for (const auto& r : rows) groups[r.asymptotic.formula_id].push_back(&r);
    std::vector<CompareSummary> out;
    for (const auto& [tag, list] : groups) {
        CompareSummary s;
        s.regime = tag;
        s.points = int(list.size());
        std::vector<double> xs, ys;
        for (const auto* r : list) {
            s.max_rel_deviation = std::max(s.max_rel_deviation, r->rel_deviation);
            xs.push_back(r->distance);
            ys.push_back(r->df_numeric.value);
        }
        s.loglog_slope = xs.size() >= 2 ? fit_loglog_slope(xs, ys) : 0.0;
        out.push_back(s);
    }
    return out;
}

DetectabilityReport compute_detect_report(const RunConfig& cfg) {
    if (cfg.geometry != GeometryKind::SpherePlate)
        throw std::invalid_argument("detect requires sphere-plate geometry");
    if (!cfg.has_cantilever)
        throw std::invalid_argument("detect requires a [cantilever] section");
    SpherePlateGeometry geom{cfg.radius, cfg.distance_grid().front()};
    return detectability_report(cfg.pair(), geom, cfg.cantilever, cfg.distance_grid(),
                                cfg.quadrature, cfg.parasitic_bound);
}

namespace {

// cgs -> SI factors for the emitted columns
constexpr double kLen = 0.01;     // cm -> m
constexpr double kEpa = 1e-3;     // erg/cm^2 -> J/m^2
constexpr double kFpa = 0.1;      // dyn/cm^2 -> Pa
constexpr double kForce = 1e-5;   // dyn -> N

ordered_json material_json(const MaterialModel& m) {
    ordered_json j;
    j["magnetization"] = m.magnetization_sign > 0 ? "outward" : "inward";
    if (const auto* d = std::get_if<DrudeParams>(&m.params)) {
        j["model"] = "drude";
        j["omega_p[rad/s]"] = d->omega_p;
        j["omega_c[rad/s]"] = d->omega_c;
        j["tau[s]"] = d->tau;
    } else if (const auto* c = std::get_if<DcTransportParams>(&m.params)) {
        j["model"] = "dc-transport";
        j["sigma[S/m]"] = gaussian_conductivity_to_si(c->sigma);
        j["hall_angle"] = c->theta;
        j["tau_validity[s]"] = c->tau_validity;
    } else if (const auto* o = std::get_if<OscillatorParams>(&m.params)) {
        j["model"] = o->eps_xx_eff == 0.0 && o->eps_xy_eff == 0.0 ? "vacuum" : "oscillator";
        j["omega_0[rad/s]"] = o->omega_0;
        j["eps_xx_eff"] = o->eps_xx_eff;
        j["eps_xy_eff"] = o->eps_xy_eff;
    } else if (const auto* t = std::get_if<TabulatedSpectrum>(&m.params)) {
        j["model"] = "tabulated";
        j["points"] = t->grid.size();
        j["omega_min[rad/s]"] = t->grid.front();
        j["omega_max[rad/s]"] = t->grid.back();
        j["cubic_tail"] = t->cubic_tail;
    }
    return j;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["source"] = cfg.source_path;
    j["units_in"] = cfg.units_in;
    j["threads"] = cfg.threads;
    for (const auto& name : cfg.material_order)
        j["materials"][name] = material_json(cfg.materials.at(name));
    j["pair"]["mirror_a"] = cfg.mirror_a;
    j["pair"]["mirror_b"] = cfg.mirror_b;
    j["geometry"]["type"] =
        cfg.geometry == GeometryKind::SpherePlate ? "sphere-plate" : "plate-plate";
    if (cfg.radius > 0.0) j["geometry"]["radius[m]"] = cfg.radius * kLen;
    if (cfg.distance > 0.0) j["geometry"]["distance[m]"] = cfg.distance * kLen;
    if (cfg.sweep.active()) {
        j["sweep"]["start[m]"] = cfg.sweep.start * kLen;
        j["sweep"]["stop[m]"] = cfg.sweep.stop * kLen;
        j["sweep"]["points"] = cfg.sweep.points;
    }
    j["quadrature"]["rel_tol"] = cfg.quadrature.rel_tol;
    j["quadrature"]["abs_tol"] = cfg.quadrature.abs_tol;
    j["quadrature"]["u_max"] = cfg.quadrature.u_max;
    j["quadrature"]["t_order"] = cfg.quadrature.t_order;
    j["quadrature"]["max_evaluations"] = cfg.quadrature.max_evaluations;
    j["quadrature"]["override_material_validity"] =
        cfg.quadrature.override_material_validity;
    if (cfg.has_cantilever) {
        j["cantilever"]["spring[N/m]"] = cfg.cantilever.spring_k * 1e-3;
        j["cantilever"]["quality"] = cfg.cantilever.quality_q;
        j["cantilever"]["omega_r[rad/s]"] = cfg.cantilever.omega_r;
        j["cantilever"]["deflection[m]"] = cfg.cantilever.deflection_dx * kLen;
        j["cantilever"]["temperature[K]"] = cfg.cantilever.temperature;
        j["cantilever"]["bandwidth[Hz]"] = cfg.cantilever.bandwidth;
        j["cantilever"]["parasitic_bound[N]"] = cfg.parasitic_bound * kForce;
    }
    return j;
}

void csv_preamble(std::ostream& os, const char* command, const RunConfig& cfg) {
    os << "# casimag " << command << "\n";
    os << "# config: " << cfg.source_path << "\n";
    os << "# mirrors: " << cfg.mirror_a << " | " << cfg.mirror_b << "\n";
    os << "# units: SI\n";
}

}  // namespace

bool all_converged(const std::vector<EnergyRow>& rows) {
    for (const auto& r : rows)
        if (!r.e_fm.converged || !r.e_af.converged || !r.de_exact.converged ||
            !r.de_pert.converged)
            return false;
    return true;
}

bool all_converged(const std::vector<ForceRow>& rows) {
    for (const auto& r : rows)
        if (!r.f_fm.converged || !r.f_af.converged || !r.df_exact.converged ||
            !r.df_pert.converged)
            return false;
    return true;
}

bool all_converged(const std::vector<CompareRow>& rows) {
    for (const auto& r : rows)
        if (!r.df_numeric.converged) return false;
    return true;
}

void write_energy_csv(std::ostream& os, const RunConfig& cfg,
                      const std::vector<EnergyRow>& rows) {
    csv_preamble(os, "energy", cfg);
    os << "D[m],E_FM[J/m^2],E_FM_err[J/m^2],E_AF[J/m^2],E_AF_err[J/m^2],"
          "dE_exact[J/m^2],dE_exact_err[J/m^2],dE_pert[J/m^2],dE_pert_err[J/m^2],"
          "evaluations,converged\n";
    for (const auto& r : rows) {
        const long evals = r.e_fm.evaluations + r.e_af.evaluations +
                           r.de_exact.evaluations + r.de_pert.evaluations;
        const bool conv = r.e_fm.converged && r.e_af.converged && r.de_exact.converged &&
                          r.de_pert.converged;
        os << format_g17(r.distance * kLen) << ',' << format_g17(r.e_fm.value * kEpa) << ','
           << format_g17(r.e_fm.error_estimate * kEpa) << ','
           << format_g17(r.e_af.value * kEpa) << ','
           << format_g17(r.e_af.error_estimate * kEpa) << ','
           << format_g17(r.de_exact.value * kEpa) << ','
           << format_g17(r.de_exact.error_estimate * kEpa) << ','
           << format_g17(r.de_pert.value * kEpa) << ','
           << format_g17(r.de_pert.error_estimate * kEpa) << ',' << evals << ','
           << (conv ? 1 : 0) << "\n";
    }
}

void write_force_csv(std::ostream& os, const RunConfig& cfg,
                     const std::vector<ForceRow>& rows) {
    csv_preamble(os, "force", cfg);
    os << "D[m],F_FM[Pa],F_FM_err[Pa],F_AF[Pa],F_AF_err[Pa],dF_exact[Pa],"
          "dF_exact_err[Pa],dF_pert[Pa],dF_pert_err[Pa],evaluations,converged\n";
    for (const auto& r : rows) {
        const long evals = r.f_fm.evaluations + r.f_af.evaluations +
                           r.df_exact.evaluations + r.df_pert.evaluations;
        const bool conv = r.f_fm.converged && r.f_af.converged && r.df_exact.converged &&
                          r.df_pert.converged;
        os << format_g17(r.distance * kLen) << ',' << format_g17(r.f_fm.value * kFpa) << ','
           << format_g17(r.f_fm.error_estimate * kFpa) << ','
           << format_g17(r.f_af.value * kFpa) << ','
           << format_g17(r.f_af.error_estimate * kFpa) << ','
           << format_g17(r.df_exact.value * kFpa) << ','
           << format_g17(r.df_exact.error_estimate * kFpa) << ','
           << format_g17(r.df_pert.value * kFpa) << ','
           << format_g17(r.df_pert.error_estimate * kFpa) << ',' << evals << ','
           << (conv ? 1 : 0) << "\n";
    }
}

void write_compare_csv(std::ostream& os, const RunConfig& cfg,
                       const std::vector<CompareRow>& rows,
                       const std::vector<CompareSummary>& summary) {
    csv_preamble(os, "compare", cfg);
    for (const auto& s : summary)
        os << "# summary: regime=" << regime_name(s.regime) << " points=" << s.points
           << " max_rel_deviation=" << format_g17(s.max_rel_deviation)
           << " loglog_slope=" << format_g17(s.loglog_slope) << "\n";
    os << "D[m],dF_numeric[Pa],dF_numeric_err[Pa],dF_asymptotic[Pa],regime,"
          "rel_deviation\n";
    for (const auto& r : rows) {
        os << format_g17(r.distance * kLen) << ','
           << format_g17(r.df_numeric.value * kFpa) << ','
           << format_g17(r.df_numeric.error_estimate * kFpa) << ','
           << format_g17(r.asymptotic.delta_f * kFpa) << ','
           << regime_name(r.asymptotic.formula_id) << ',' << format_g17(r.rel_deviation)
           << "\n";
    }
}

void write_detect_csv(std::ostream& os, const RunConfig& cfg,
                      const DetectabilityReport& rep) {
    csv_preamble(os, "detect", cfg);
    os << "# radius[m]: " << format_g17(rep.geometry.radius * kLen) << "\n";
    os << "# bandwidth[Hz]: " << format_g17(rep.bandwidth_note) << "\n";
    os << "# parasitic_bound[N]: " << format_g17(rep.parasitic_bound * kForce) << "\n";
    if (!rep.rows.empty()) {
        os << "# headline: |dF_sphere[N]| max "
           << format_g17(std::abs(rep.rows.front().delta_f_sphere) * kForce);
        double best = 0.0;
        for (const auto& r : rep.rows)
            best = std::max(best, std::abs(r.delta_f_sphere));
        os << " over sweep " << format_g17(best * kForce) << "\n";
    }
    os << "D[m],dF_sphere[N],F_sphere[N],limit_deflection[N],limit_thermal[N],snr,"
          "detectable\n";
    for (const auto& r : rep.rows) {
        os << format_g17(r.distance * kLen) << ',' << format_g17(r.delta_f_sphere * kForce)
           << ',' << format_g17(r.f_sphere * kForce) << ','
           << format_g17(r.limit_deflection * kForce) << ','
           << format_g17(r.limit_thermal * kForce) << ',' << format_g17(r.snr) << ','
           << (r.detectable ? 1 : 0) << "\n";
    }
}

namespace {

ordered_json result_json(const EnergyResult& r, double unit) {
    return ordered_json{{"value", r.value * unit},
                        {"error", r.error_estimate * unit},
                        {"evaluations", r.evaluations},
                        {"converged", r.converged}};
}

}  // namespace

void write_energy_json(std::ostream& os, const RunConfig& cfg,
                       const std::vector<EnergyRow>& rows) {
    ordered_json j;
    j["command"] = "energy";
    j["config"] = config_json(cfg);
    j["units"] = {{"D", "m"}, {"E", "J/m^2"}};
    for (const auto& r : rows) {
        ordered_json row;
        row["D[m]"] = r.distance * kLen;
        row["E_FM"] = result_json(r.e_fm, kEpa);
        row["E_AF"] = result_json(r.e_af, kEpa);
        row["dE_exact"] = result_json(r.de_exact, kEpa);
        row["dE_pert"] = result_json(r.de_pert, kEpa);
        j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
}

void write_force_json(std::ostream& os, const RunConfig& cfg,
                      const std::vector<ForceRow>& rows) {
    ordered_json j;
    j["command"] = "force";
    j["config"] = config_json(cfg);
    j["units"] = {{"D", "m"}, {"F", "Pa"}};
    for (const auto& r : rows) {
        ordered_json row;
        row["D[m]"] = r.distance * kLen;
        row["F_FM"] = result_json(r.f_fm, kFpa);
        row["F_AF"] = result_json(r.f_af, kFpa);
        row["dF_exact"] = result_json(r.df_exact, kFpa);
        row["dF_pert"] = result_json(r.df_pert, kFpa);
        j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
}

void write_compare_json(std::ostream& os, const RunConfig& cfg,
                        const std::vector<CompareRow>& rows,
                        const std::vector<CompareSummary>& summary) {
    ordered_json j;
    j["command"] = "compare";
    j["config"] = config_json(cfg);
    j["units"] = {{"D", "m"}, {"dF", "Pa"}};
    for (const auto& r : rows) {
        ordered_json row;
        row["D[m]"] = r.distance * kLen;
        row["dF_numeric[Pa]"] = r.df_numeric.value * kFpa;
        row["dF_numeric_err[Pa]"] = r.df_numeric.error_estimate * kFpa;
        row["dF_asymptotic[Pa]"] = r.asymptotic.delta_f * kFpa;
        row["regime"] = regime_name(r.asymptotic.formula_id);
        row["rel_deviation"] = r.rel_deviation;
        j["rows"].push_back(row);
    }
    for (const auto& s : summary) {
        ordered_json sj;
        sj["regime"] = regime_name(s.regime);
        sj["points"] = s.points;
        sj["max_rel_deviation"] = s.max_rel_deviation;
        sj["loglog_slope"] = s.loglog_slope;
        j["summary"].push_back(sj);
    }
    os << j.dump(2) << "\n";
}

void write_detect_json(std::ostream& os, const RunConfig& cfg,
                       const DetectabilityReport& rep) {
    ordered_json j;
    j["command"] = "detect";
    j["config"] = config_json(cfg);
    j["units"] = {{"D", "m"}, {"F", "N"}};
    j["limits"] = {
        {"deflection[N]",
         rep.rows.empty() ? 0.0 : rep.rows.front().limit_deflection * kForce},
        {"thermal[N]", rep.rows.empty() ? 0.0 : rep.rows.front().limit_thermal * kForce},
        {"parasitic_bound[N]", rep.parasitic_bound * kForce}};
    for (const auto& r : rep.rows) {
        ordered_json row;
        row["D[m]"] = r.distance * kLen;
        row["dF_sphere[N]"] = r.delta_f_sphere * kForce;
        row["F_sphere[N]"] = r.f_sphere * kForce;
        row["snr"] = r.snr;
        row["detectable"] = r.detectable;
        j["rows"].push_back(row);
    }
    os << j.dump(2) << "\n";
}

}  // namespace casimag
