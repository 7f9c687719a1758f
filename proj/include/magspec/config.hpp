#ifndef MAGSPEC_CONFIG_HPP
#define MAGSPEC_CONFIG_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "magspec/models.hpp"

namespace magspec {

enum class FieldType { zero, constant, sine, quadratic };

struct FieldSpec {
    FieldType type = FieldType::constant;
    double b0 = 0.0;  // base field strength / sine amplitude
    double db = 1.0;  // perturbation field strength (theorem2)
};

struct SweepSpec {
    std::string quantity = "hausdorff";  // hausdorff|defect|theorem2|alpha0
    double b_min = 1e-3;
    double b_max = 1e-1;
    int points_per_decade = 6;
    std::vector<Complex> z;  // defect/certify probe points (empty: defaults)
    std::vector<double> M;   // alpha0 truncation radii (empty: defaults)
};

struct RunConfig {
    // model block
    std::string kind = "harper";  // harper|longrange|mag_schrodinger
    int dim = 1;
    double L = 64.0;
    double h = 1.0;
    double J = 1.0;
    std::string decay_type = "exponential";  // exponential|power
    double decay_rate = 1.0;
    double potential_lambda = 1.0;
    double potential_sigma = 0.6180339887498949;
    double a_shift = 1.0;

    FieldSpec field;
    SweepSpec sweep;

    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int workers = 1;

    ModelSpec model_spec() const;
    MagneticField magnetic_field() const;   // base field B0
    MagneticField perturbation_field() const;  // frak_b
    // The b-family phase: transverse-gauge line phase in 2D, synthetic
    // phase in 1D.
    PhaseFunction phase() const;
    // Default certificate probe points: min sigma(H) - {1,2,4} and
    // min sigma(H) - 1 + i.
    std::vector<Complex> default_z(double spectrum_min) const;

    // FNV-1a hash of the canonical serialized form.
    std::string hash() const;
    std::string canonical() const;
};

// Parses TOML (flat [section] tables) or JSON, keyed on file extension.
RunConfig load_config(const std::string& path);
RunConfig parse_config_toml(const std::string& text);
RunConfig parse_config_json(const std::string& text);

}  // namespace magspec

#endif
