#ifndef MBGK_CONFIG_HPP
#define MBGK_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbgk/model.hpp"

namespace mbgk {

/** One parse or validation problem, tied to the offending line (0 = whole file). */
struct Diagnostic {
    int line = 0;
    std::string message;
    bool admissibility = false;  // true when the parameters, not the syntax, are at fault
};

/** Initial-condition profile over x in [0, length); the fixed function set. */
struct ProfileSpec {
    enum class Kind { constant, sine, pulse };
    Kind kind = Kind::constant;
    double base = 0.0;
    double amplitude = 0.0;
    double periods = 1.0;  // sine
    double x0 = 0.0;       // pulse window
    double x1 = 0.0;

    double eval(double x, double length) const;
    bool operator==(const ProfileSpec&) const = default;
};

struct SpeciesConfig {
    double mass = 1.0;
    double nu_intra = 0.0;
    double n = 1.0;
    Vec3 u{};
    double T = 1.0;
    std::optional<ProfileSpec> n_profile;
    std::optional<ProfileSpec> ux_profile;
    std::optional<ProfileSpec> T_profile;

    bool operator==(const SpeciesConfig& o) const;
};

enum class Scenario { validate, homogeneous, transport, match_rates, presets };
enum class InteractionMode { explicit_params, hamel, match };
enum class SchemeChoice { rk4, implicit_euler, imex1, imex2 };

struct Tolerances {
    double conservation_step = 1e-12;
    double conservation_total = 1e-10;
    double closed_form = 1e-4;
    double entropy_slack = 1e-10;

    bool operator==(const Tolerances&) const = default;
};

struct RunConfig {
    Scenario scenario = Scenario::validate;
    SpeciesConfig species1;
    SpeciesConfig species2;

    InteractionMode mode = InteractionMode::explicit_params;
    InteractionParams interaction;        // materialized (preset/match expanded)
    ValidationReport interaction_report;  // non-empty when inadmissible
    double alpha12 = 0.0;                 // match mode and density-dependent nu
    bool density_dependent_nu = false;

    int grid_nodes = 32;
    std::optional<double> v_min;  // both set, or both defaulted by the sizing rule
    std::optional<double> v_max;

    int mesh_cells = 100;
    double mesh_length = 1.0;

    double dt = 1e-3;
    double t_end = 1.0;
    int output_stride = 10;
    std::optional<double> output_dt;  // alternative to the stride

    SchemeChoice scheme = SchemeChoice::rk4;
    std::string output_dir = "out";
    Tolerances tolerances;

    bool operator==(const RunConfig& o) const;
};

struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<Diagnostic> diagnostics;

    /// True when the text parsed cleanly and the parameters are admissible.
    bool ok() const { return config.has_value() && diagnostics.empty(); }
};

/**
 * Parses the line-oriented `section.key = value` configuration format.
 * Unknown keys and missing required keys are errors. Interaction presets and
 * match blocks are expanded into the materialized InteractionParams; explicit
 * inadmissible parameters produce admissibility diagnostics, a match result
 * only fills interaction_report.
 */
ParseResult parse_config(std::string_view text);

/// Canonical, re-parseable rendering of a config (used for the run manifest).
std::string serialize_config(const RunConfig& cfg);

std::string to_string(Scenario s);
std::string to_string(SchemeChoice s);

} // namespace mbgk

#endif
