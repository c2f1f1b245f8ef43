#include "casimag/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace casimag {

using constants::pi;

std::vector<double> SweepSpec::grid() const {
    std::vector<double> g;
    if (!active()) return g;
    const double la = std::log(start), lb = std::log(stop);
    for (int i = 0; i < points; ++i)
        g.push_back(std::exp(la + (lb - la) * i / double(points - 1)));
    return g;
}

MirrorPair RunConfig::pair() const {
    auto a = materials.find(mirror_a);
    auto b = materials.find(mirror_b);
    if (a == materials.end() || b == materials.end())
        throw std::invalid_argument("config: pair references unknown material");
    return MirrorPair{a->second, b->second, Alignment::FM};
}

std::vector<double> RunConfig::distance_grid() const {
    if (sweep.active()) return sweep.grid();
    return {distance};
}

void RunConfig::validate() const {
    if (materials.empty()) throw std::invalid_argument("config: no materials defined");
    pair();
    if (sweep.active()) {
        if (!(sweep.start > 0.0) || !(sweep.start < sweep.stop))
            throw std::invalid_argument("config: sweep requires 0 < start < stop");
        if (sweep.points < 2) throw std::invalid_argument("config: sweep points must be >= 2");
    } else if (!(distance > 0.0)) {
        throw std::invalid_argument("config: need [geometry] distance or a [sweep]");
    }
    if (geometry == GeometryKind::SpherePlate && !(radius > 0.0))
        throw std::invalid_argument("config: sphere-plate geometry requires a radius");
    if (output_format != "csv" && output_format != "json")
        throw std::invalid_argument("config: output format must be csv or json");
    if (threads < 1 || threads > 256)
        throw std::invalid_argument("config: threads must be in [1, 256]");
    quadrature.validate();
    if (has_cantilever) cantilever.validate();
}

namespace {

struct UnitEntry {
    const char* name;
    double factor;
};

// Conversions to Gaussian cgs. Angular-frequency fields take Hz-family
// units as ordinary frequencies (x 2 pi); /s, s^-1, rad/s are direct; eV is
// a photon energy divided by hbar.
const UnitEntry kLength[] = {{"nm", 1e-7}, {"um", 1e-4}, {"µm", 1e-4}, {"mm", 0.1},
                             {"cm", 1.0},  {"m", 100.0}, {"A", 1e-8},  {"angstrom", 1e-8}};
const UnitEntry kTime[] = {{"s", 1.0},    {"ms", 1e-3}, {"us", 1e-6},
                           {"ns", 1e-9},  {"ps", 1e-12}, {"fs", 1e-15}};
const UnitEntry kAngFreq[] = {{"/s", 1.0},      {"1/s", 1.0},      {"s^-1", 1.0},
                              {"rad/s", 1.0},   {"Hz", 2.0 * pi},  {"kHz", 2e3 * pi},
                              {"MHz", 2e6 * pi}, {"GHz", 2e9 * pi}, {"THz", 2e12 * pi},
                              {"eV", 1.519267447e15}};
const UnitEntry kOrdFreq[] = {{"Hz", 1.0}, {"mHz", 1e-3}, {"kHz", 1e3}, {"/s", 1.0}};
const UnitEntry kConductivity[] = {{"S/m", constants::coulomb_constant_si},
                                   {"/s", 1.0},
                                   {"1/s", 1.0},
                                   {"s^-1", 1.0}};
const UnitEntry kSpring[] = {{"mN/m", 1.0}, {"N/m", 1e3}, {"uN/m", 1e-3}, {"dyn/cm", 1.0}};
const UnitEntry kTemperature[] = {{"K", 1.0}};
const UnitEntry kForce[] = {{"N", 1e5},   {"mN", 1e2},  {"uN", 1e-1}, {"nN", 1e-4},
                            {"pN", 1e-7}, {"fN", 1e-10}, {"aN", 1e-13}, {"dyn", 1.0}};

template <std::size_t N>
const UnitEntry* find_unit(const UnitEntry (&table)[N], const std::string& name) {
    for (const auto& e : table)
        if (name == e.name) return &e;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

double parse_quantity(const std::string& text, UnitKind kind, bool gaussian_mode) {
    std::istringstream in(trim(text));
    double value;
    if (!(in >> value)) throw std::invalid_argument("cannot parse number from '" + text + "'");
    std::string unit;
    in >> unit;
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing tokens in quantity '" + text + "'");

    if (kind == UnitKind::Dimensionless) {
        if (!unit.empty())
            throw std::invalid_argument("dimensionless value '" + text + "' must not carry units");
        return value;
    }
    if (unit.empty()) {
        if (gaussian_mode) return value;  // bare cgs number
        throw std::invalid_argument("value '" + text + "' needs a unit suffix (units_in = si)");
    }

    const UnitEntry* e = nullptr;
    switch (kind) {
        case UnitKind::Length: e = find_unit(kLength, unit); break;
        case UnitKind::Time: e = find_unit(kTime, unit); break;
        case UnitKind::AngularFrequency: e = find_unit(kAngFreq, unit); break;
        case UnitKind::OrdinaryFrequency: e = find_unit(kOrdFreq, unit); break;
        case UnitKind::Conductivity: e = find_unit(kConductivity, unit); break;
        case UnitKind::SpringConstant: e = find_unit(kSpring, unit); break;
        case UnitKind::Temperature: e = find_unit(kTemperature, unit); break;
        case UnitKind::Force: e = find_unit(kForce, unit); break;
        case UnitKind::Dimensionless: break;
    }
    if (!e) throw std::invalid_argument("unknown unit '" + unit + "' in '" + text + "'");
    return value * e->factor;
}

namespace {

using KVMap = std::map<std::string, std::string>;

struct ParsedSections {
    KVMap top;
    std::map<std::string, KVMap> sections;  // in encounter order via order vector
    std::vector<std::string> order;
};

ParsedSections parse_ini(const std::string& text, const std::string& src) {
    ParsedSections out;
    std::istringstream in(text);
    std::string line, current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(src + ":" + std::to_string(lineno) +
                                            ": malformed section header");
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty())
                throw std::invalid_argument(src + ":" + std::to_string(lineno) +
                                            ": empty section name");
            if (!out.sections.count(current)) out.order.push_back(current);
            out.sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(src + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument(src + ":" + std::to_string(lineno) +
                                        ": empty key or value");
        KVMap& map = current.empty() ? out.top : out.sections[current];
        if (map.count(key))
            throw std::invalid_argument(src + ":" + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
        map[key] = val;
    }
    return out;
}

class SectionReader {
  public:
    SectionReader(const KVMap& map, std::string name, bool gaussian)
        : map_(map), name_(std::move(name)), gaussian_(gaussian) {}

    bool has(const std::string& key) const { return map_.count(key) > 0; }

    std::string str(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end())
            throw std::invalid_argument("[" + name_ + "] missing key '" + key + "'");
        used_.push_back(key);
        return it->second;
    }

    std::string str_or(const std::string& key, const std::string& dflt) const {
        return has(key) ? str(key) : dflt;
    }

    double quantity(const std::string& key, UnitKind kind) const {
        try {
            return parse_quantity(str(key), kind, gaussian_);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("[" + name_ + "] " + key + ": " + e.what());
        }
    }

    double quantity_or(const std::string& key, UnitKind kind, double dflt) const {
        return has(key) ? quantity(key, kind) : dflt;
    }

    long integer(const std::string& key) const {
        const double v = quantity(key, UnitKind::Dimensionless);
        if (v != std::floor(v))
            throw std::invalid_argument("[" + name_ + "] " + key + " must be an integer");
        return static_cast<long>(v);
    }

    bool boolean(const std::string& key, bool dflt) const {
        if (!has(key)) return dflt;
        const std::string v = str(key);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw std::invalid_argument("[" + name_ + "] " + key + ": expected true/false");
    }

    void reject_unknown() const {
        for (const auto& [k, v] : map_)
            if (std::find(used_.begin(), used_.end(), k) == used_.end())
                throw std::invalid_argument("[" + name_ + "] unknown key '" + k + "'");
    }

  private:
    const KVMap& map_;
    std::string name_;
    bool gaussian_;
    mutable std::vector<std::string> used_;
};

MaterialModel parse_material(const SectionReader& r, const std::string& cfg_dir) {
    MaterialModel m;
    const std::string kind = r.str("model");
    const std::string mag = r.str_or("magnetization", "outward");
    if (mag == "outward")
        m.magnetization_sign = +1;
    else if (mag == "inward")
        m.magnetization_sign = -1;
    else
        throw std::invalid_argument("magnetization must be outward or inward");

    if (kind == "drude") {
        DrudeParams p;
        p.omega_p = r.quantity("omega_p", UnitKind::AngularFrequency);
        p.omega_c = r.quantity("omega_c", UnitKind::AngularFrequency);
        p.tau = r.quantity("tau", UnitKind::Time);
        m.params = p;
    } else if (kind == "dc" || kind == "dc-transport") {
        DcTransportParams p;
        p.sigma = r.quantity("sigma", UnitKind::Conductivity);
        p.theta = r.quantity("hall_angle", UnitKind::Dimensionless);
        p.tau_validity = r.quantity_or("tau_validity", UnitKind::Time, 1e-14);
        m.params = p;
    } else if (kind == "oscillator") {
        OscillatorParams p;
        p.omega_0 = r.quantity("omega_0", UnitKind::AngularFrequency);
        p.eps_xx_eff = r.quantity("eps_xx_eff", UnitKind::Dimensionless);
        p.eps_xy_eff = r.quantity("eps_xy_eff", UnitKind::Dimensionless);
        m.params = p;
    } else if (kind == "tabulated") {
        std::string path = r.str("file");
        if (!path.empty() && path.front() != '/' && !cfg_dir.empty())
            path = cfg_dir + "/" + path;
        TabulatedSpectrum s = read_spectrum_file(path);
        s.cubic_tail = r.boolean("cubic_tail", false);
        m.params = s;
    } else if (kind == "vacuum") {
        m = MaterialModel::vacuum().with_magnetization(m.magnetization_sign);
    } else {
        throw std::invalid_argument("unknown material model '" + kind + "'");
    }
    r.reject_unknown();
    m.validate();
    return m;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& source_name) {
    const ParsedSections ini = parse_ini(text, source_name);
    RunConfig cfg;
    cfg.source_path = source_name;

    std::string cfg_dir;
    const auto slash = source_name.find_last_of('/');
    if (slash != std::string::npos) cfg_dir = source_name.substr(0, slash);

    {
        SectionReader top(ini.top, "top-level", false);
        cfg.units_in = top.str_or("units_in", "si");
        if (cfg.units_in != "si" && cfg.units_in != "gaussian")
            throw std::invalid_argument("units_in must be si or gaussian");
        if (top.has("threads")) cfg.threads = static_cast<int>(top.integer("threads"));
        top.reject_unknown();
    }
    const bool gaussian = cfg.units_in == "gaussian";

    for (const std::string& name : ini.order) {
        if (name.rfind("material.", 0) != 0) continue;
        const std::string short_name = name.substr(9);
        if (short_name.empty())
            throw std::invalid_argument("material section needs a name: [material.<name>]");
        SectionReader r(ini.sections.at(name), name, gaussian);
        cfg.materials[short_name] = parse_material(r, cfg_dir);
        cfg.material_order.push_back(short_name);
    }

    if (ini.sections.count("pair")) {
        SectionReader r(ini.sections.at("pair"), "pair", gaussian);
        cfg.mirror_a = r.str("mirror_a");
        cfg.mirror_b = r.str("mirror_b");
        r.reject_unknown();
    } else if (cfg.material_order.size() == 1) {
        cfg.mirror_a = cfg.mirror_b = cfg.material_order.front();
    } else if (cfg.material_order.size() == 2) {
        cfg.mirror_a = cfg.material_order[0];
        cfg.mirror_b = cfg.material_order[1];
    }

    if (ini.sections.count("geometry")) {
        SectionReader r(ini.sections.at("geometry"), "geometry", gaussian);
        const std::string type = r.str_or("type", "plate-plate");
        if (type == "plate-plate")
            cfg.geometry = GeometryKind::PlatePlate;
        else if (type == "sphere-plate")
            cfg.geometry = GeometryKind::SpherePlate;
        else
            throw std::invalid_argument("geometry type must be plate-plate or sphere-plate");
        cfg.radius = r.quantity_or("radius", UnitKind::Length, 0.0);
        cfg.distance = r.quantity_or("distance", UnitKind::Length, 0.0);
        r.reject_unknown();
    }

    if (ini.sections.count("sweep")) {
        SectionReader r(ini.sections.at("sweep"), "sweep", gaussian);
        cfg.sweep.start = r.quantity("start", UnitKind::Length);
        cfg.sweep.stop = r.quantity("stop", UnitKind::Length);
        cfg.sweep.points = static_cast<int>(r.integer("points"));
        r.reject_unknown();
    }

    if (ini.sections.count("quadrature")) {
        SectionReader r(ini.sections.at("quadrature"), "quadrature", gaussian);
        cfg.quadrature.rel_tol =
            r.quantity_or("rel_tol", UnitKind::Dimensionless, cfg.quadrature.rel_tol);
        cfg.quadrature.abs_tol =
            r.quantity_or("abs_tol", UnitKind::Dimensionless, cfg.quadrature.abs_tol);
        cfg.quadrature.u_max =
            r.quantity_or("u_max", UnitKind::Dimensionless, cfg.quadrature.u_max);
        if (r.has("t_order")) cfg.quadrature.t_order = static_cast<int>(r.integer("t_order"));
        if (r.has("max_evaluations"))
            cfg.quadrature.max_evaluations = r.integer("max_evaluations");
        cfg.quadrature.override_material_validity =
            r.boolean("override_material_validity", false);
        r.reject_unknown();
    }

    if (ini.sections.count("cantilever")) {
        SectionReader r(ini.sections.at("cantilever"), "cantilever", gaussian);
        CantileverSpec s;
        s.spring_k = r.quantity("spring", UnitKind::SpringConstant);
        s.quality_q = r.quantity("quality", UnitKind::Dimensionless);
        s.omega_r = r.quantity("resonance", UnitKind::AngularFrequency);
        s.deflection_dx = r.quantity_or("deflection", UnitKind::Length, 1.5e-7);
        s.temperature = r.quantity("temperature", UnitKind::Temperature);
        s.bandwidth = r.quantity_or("bandwidth", UnitKind::OrdinaryFrequency, 1.0);
        cfg.parasitic_bound = r.quantity_or("parasitic_bound", UnitKind::Force, 0.0);
        r.reject_unknown();
        cfg.cantilever = s;
        cfg.has_cantilever = true;
    }

    if (ini.sections.count("output")) {
        SectionReader r(ini.sections.at("output"), "output", gaussian);
        cfg.output_format = r.str_or("format", "csv");
        cfg.output_path = r.str_or("path", "");
        r.reject_unknown();
    }

    for (const std::string& name : ini.order) {
        if (name.rfind("material.", 0) == 0 || name == "pair" || name == "geometry" ||
            name == "sweep" || name == "quadrature" || name == "cantilever" ||
            name == "output")
            continue;
        throw std::invalid_argument("unknown config section [" + name + "]");
    }

    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace casimag
