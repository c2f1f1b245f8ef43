// casimag: Casimir magnetic interaction between parallel mirrors.
//
// Subcommands: energy, force, compare, detect, materials validate.
// Exit codes: 0 ok, 2 config error, 3 numerical non-convergence (rows are
// still written, flagged in the converged column), 4 I/O error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "casimag/report.hpp"

namespace {

using namespace casimag;

struct CommonOpts {
    std::string config_path;
    std::string output_path;
    std::string format;
    double tol = 0.0;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "run configuration file")->required();
    cmd->add_option("--output", o.output_path, "output path (default from config/stdout)");
    cmd->add_option("--format", o.format, "csv or json (default from config)");
    cmd->add_option("--tol", o.tol, "override quadrature relative tolerance");
    cmd->add_option("--threads", o.threads, "worker threads for sweep points");
}

RunConfig load_config(const CommonOpts& o) {
    RunConfig cfg = parse_config_file(o.config_path);
    if (!o.format.empty()) cfg.output_format = o.format;
    if (!o.output_path.empty()) cfg.output_path = o.output_path;
    if (o.tol > 0.0) cfg.quadrature.rel_tol = o.tol;
    if (o.threads > 0) cfg.threads = o.threads;
    if (const char* env = std::getenv("CASIMIR_MAG_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) cfg.threads = n;
    }
    cfg.validate();
    return cfg;
}

int write_out(const RunConfig& cfg, const std::function<void(std::ostream&)>& writer) {
    if (cfg.output_path.empty()) {
        writer(std::cout);
        return std::cout.good() ? 0 : 4;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << cfg.output_path << "\n";
        return 4;
    }
    writer(out);
    out.flush();
    if (!out.good()) {
        std::cerr << "error: write failed: " << cfg.output_path << "\n";
        return 4;
    }
    return 0;
}

int cmd_energy(const CommonOpts& o) {
    const RunConfig cfg = load_config(o);
    const auto rows = compute_energy_rows(cfg);
    const int io = write_out(cfg, [&](std::ostream& os) {
        cfg.output_format == "json" ? write_energy_json(os, cfg, rows)
                                    : write_energy_csv(os, cfg, rows);
    });
    if (io != 0) return io;
    return all_converged(rows) ? 0 : 3;
}

int cmd_force(const CommonOpts& o) {
    const RunConfig cfg = load_config(o);
    const auto rows = compute_force_rows(cfg);
    const int io = write_out(cfg, [&](std::ostream& os) {
        cfg.output_format == "json" ? write_force_json(os, cfg, rows)
                                    : write_force_csv(os, cfg, rows);
    });
    if (io != 0) return io;
    return all_converged(rows) ? 0 : 3;
}

int cmd_compare(const CommonOpts& o) {
    const RunConfig cfg = load_config(o);
    const auto rows = compute_compare_rows(cfg);
    const auto summary = summarize_compare(rows);
    const int io = write_out(cfg, [&](std::ostream& os) {
        cfg.output_format == "json" ? write_compare_json(os, cfg, rows, summary)
                                    : write_compare_csv(os, cfg, rows, summary);
    });
    if (io != 0) return io;
    return all_converged(rows) ? 0 : 3;
}

int cmd_detect(const CommonOpts& o) {
    const RunConfig cfg = load_config(o);
    const DetectabilityReport rep = compute_detect_report(cfg);
    return write_out(cfg, [&](std::ostream& os) {
        cfg.output_format == "json" ? write_detect_json(os, cfg, rep)
                                    : write_detect_csv(os, cfg, rep);
    });
}

int cmd_materials_validate(const CommonOpts& o) {
    const RunConfig cfg = load_config(o);
    bool ok = true;
    std::ostringstream os;
    for (const auto& name : cfg.material_order) {
        const MaterialModel& m = cfg.materials.at(name);
        os << "material " << name << ": ";
        try {
            m.validate();
            // invariant sweep: eps_xx >= 1 and monotonically decreasing
            double scale = 1e15;
            if (const auto* d = m.drude()) scale = d->omega_p;
            if (const auto* osc = std::get_if<OscillatorParams>(&m.params))
                scale = osc->omega_0;
            if (const auto* dc = std::get_if<DcTransportParams>(&m.params))
                scale = 0.1 / dc->tau_validity;
            if (const auto* tab = std::get_if<TabulatedSpectrum>(&m.params))
                scale = tab->grid.back();
            double prev = std::numeric_limits<double>::infinity();
            for (int i = -40; i <= 40; ++i) {
                const double w = scale * std::pow(10.0, 0.1 * i);
                const double e = eps_xx(m, w);
                if (!(e >= 1.0) || e > prev + 1e-12 * std::abs(prev)) {
                    os << "INVARIANT VIOLATION at omega=" << w << " ";
                    ok = false;
                    break;
                }
                prev = e;
            }
            os << "ok";
            if (const auto* d = m.drude())
                for (const auto& w : d->warnings()) os << "\n  warning: " << w;
            if (const auto* dc = std::get_if<DcTransportParams>(&m.params))
                for (const auto& w : dc->warnings()) os << "\n  warning: " << w;
        } catch (const std::exception& e) {
            os << "INVALID: " << e.what();
            ok = false;
        }
        os << "\n";
    }
    std::cout << os.str();
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir magnetic interaction between parallel mirrors"};
    app.require_subcommand(1);

    CommonOpts oe, of, oc, od, om;
    CLI::App* energy = app.add_subcommand("energy", "FM/AF energies and differences");
    add_common(energy, oe);
    CLI::App* force = app.add_subcommand("force", "FM/AF forces and differences");
    add_common(force, of);
    CLI::App* compare =
        app.add_subcommand("compare", "numeric vs closed-form asymptotics");
    add_common(compare, oc);
    CLI::App* detect = app.add_subcommand("detect", "sphere-plate detectability report");
    add_common(detect, od);
    CLI::App* materials = app.add_subcommand("materials", "material utilities");
    materials->require_subcommand(1);
    CLI::App* validate =
        materials->add_subcommand("validate", "check material definitions");
    add_common(validate, om);

    CLI11_PARSE(app, argc, argv);

    try {
        if (energy->parsed()) return cmd_energy(oe);
        if (force->parsed()) return cmd_force(of);
        if (compare->parsed()) return cmd_compare(oc);
        if (detect->parsed()) return cmd_detect(od);
        if (materials->parsed() && validate->parsed()) return cmd_materials_validate(om);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
