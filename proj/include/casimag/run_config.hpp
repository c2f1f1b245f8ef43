#ifndef CASIMAG_RUN_CONFIG_HPP
#define CASIMAG_RUN_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "casimag/casimir.hpp"
#include "casimag/experiment.hpp"

// Key-value run configuration with nested [section] headers and '#'
// comments. All physical inputs accept SI values with unit suffixes
// ("50 nm", "1e7 S/m", "1 mN/m") and are converted to Gaussian cgs at parse
// time; units_in = gaussian admits bare cgs numbers instead.

namespace casimag {

enum class GeometryKind { PlatePlate, SpherePlate };

struct SweepSpec {
    double start = 0.0;  // cm
    double stop = 0.0;   // cm
    int points = 0;      // >= 2 when active

    bool active() const { return points > 0; }
    std::vector<double> grid() const;  // log-spaced
};

struct RunConfig {
    std::vector<std::string> material_order;
    std::map<std::string, MaterialModel> materials;
    std::string mirror_a, mirror_b;

    GeometryKind geometry = GeometryKind::PlatePlate;
    double radius = 0.0;     // cm, sphere-plate only
    double distance = 0.0;   // cm, single-point runs
    SweepSpec sweep;

    QuadratureConfig quadrature;

    bool has_cantilever = false;
    CantileverSpec cantilever;
    double parasitic_bound = 0.0;  // dyn

    std::string output_format = "csv";  // csv | json
    std::string output_path;            // empty = stdout
    std::string units_in = "si";
    int threads = 1;

    std::string source_path;  // provenance

    MirrorPair pair() const;
    std::vector<double> distance_grid() const;  // sweep or the single point
    void validate() const;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& source_name);

// "1.4 kHz" -> rad/s etc. Exposed for tests.
enum class UnitKind {
    Length,
    Time,
    AngularFrequency,
    OrdinaryFrequency,
    Conductivity,
    SpringConstant,
    Temperature,
    Force,
    Dimensionless,
};

double parse_quantity(const std::string& text, UnitKind kind, bool gaussian_mode);

}  // namespace casimag

#endif
