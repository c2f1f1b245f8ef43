#ifndef CASIMAG_REPORT_HPP
#define CASIMAG_REPORT_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimag/asymptotics.hpp"
#include "casimag/experiment.hpp"
#include "casimag/run_config.hpp"

// Sweep drivers and machine-readable writers. All emitted numbers are SI;
// every numeric column carries a unit suffix in its header; floating point
// is serialized with 17 significant digits so reruns round-trip bit-exactly.

namespace casimag {

struct EnergyRow {
    double distance = 0.0;  // cm (converted on output)
    EnergyResult e_fm, e_af, de_exact, de_pert;
};

struct ForceRow {
    double distance = 0.0;
    ForceResult f_fm, f_af, df_exact, df_pert;
};

struct CompareRow {
    double distance = 0.0;
    ForceResult df_numeric;
    AsymptoticResult asymptotic;
    double rel_deviation = 0.0;
};

struct CompareSummary {
    RegimeTag regime;
    int points = 0;
    double max_rel_deviation = 0.0;
    double loglog_slope = 0.0;  // of |dF_numeric| vs D
};

// Deterministic static round-robin; results must be written by index.
void parallel_for_indexed(std::size_t n, int threads,
                          const std::function<void(std::size_t)>& fn);

std::vector<EnergyRow> compute_energy_rows(const RunConfig& cfg);
std::vector<ForceRow> compute_force_rows(const RunConfig& cfg);
std::vector<CompareRow> compute_compare_rows(const RunConfig& cfg);
std::vector<CompareSummary> summarize_compare(const std::vector<CompareRow>& rows);
DetectabilityReport compute_detect_report(const RunConfig& cfg);

// slope of log|y| vs log x by least squares
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string format_g17(double v);

void write_energy_csv(std::ostream& os, const RunConfig& cfg,
                      const std::vector<EnergyRow>& rows);
void write_energy_json(std::ostream& os, const RunConfig& cfg,
                       const std::vector<EnergyRow>& rows);
void write_force_csv(std::ostream& os, const RunConfig& cfg,
                     const std::vector<ForceRow>& rows);
void write_force_json(std::ostream& os, const RunConfig& cfg,
                      const std::vector<ForceRow>& rows);
void write_compare_csv(std::ostream& os, const RunConfig& cfg,
                       const std::vector<CompareRow>& rows,
                       const std::vector<CompareSummary>& summary);
void write_compare_json(std::ostream& os, const RunConfig& cfg,
                        const std::vector<CompareRow>& rows,
                        const std::vector<CompareSummary>& summary);
void write_detect_csv(std::ostream& os, const RunConfig& cfg,
                      const DetectabilityReport& rep);
void write_detect_json(std::ostream& os, const RunConfig& cfg,
                       const DetectabilityReport& rep);

bool all_converged(const std::vector<EnergyRow>& rows);
bool all_converged(const std::vector<ForceRow>& rows);
bool all_converged(const std::vector<CompareRow>& rows);

}  // namespace casimag

#endif
