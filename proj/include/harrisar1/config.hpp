#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "harrisar1/laws.hpp"
#include "harrisar1/process.hpp"
#include "harrisar1/rng.hpp"
#include "harrisar1/verify.hpp"

namespace harrisar1 {

enum class Command { Sample, Simulate, Verify, Report };

const char* to_string(Command c);

/// Invalid or ill-typed configuration. The message carries the offending key
/// path and, when the config came from a file, the line it appears on.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Law family plus the construction parameters shared across families.
/// Unused fields keep their defaults (a harris law ignores lambda..b, a
/// continuous family ignores gap and a). Ranges are validated up front.
struct LawConfig {
    std::string family; // one of law_families(), or "harris"
    double lambda = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    double b = 0.5;
    int k = 1;
    int gap = 1;    // discrete_gen_semi_ml only
    double a = 2.0; // harris only
};

struct SchemeConfig {
    std::string combiner; // add | max | min | thinned_add
    bool randomized = true;
    double p = 0.5;
    double b = 0.5;
    int k = 1;
};

struct GridConfig {
    int decades = 4;
    int per_decade = 256;
};

struct RunConfig {
    Command command = Command::Verify;
    std::uint64_t seed = 1;
    std::string out = ".";
    LawConfig law;
    SchemeConfig scheme;
    std::int64_t n_steps = 50;
    std::int64_t n_paths = 100;
    std::int64_t n_samples = 1000;
    std::string check;               // verify: empty means the full suite
    std::vector<std::string> inputs; // report: JSON reports to aggregate
    GridConfig grid;

    /// Canonical serialization (fixed key order); its hash stamps artifacts.
    nlohmann::ordered_json to_json() const;
    std::uint64_t hash() const;
};

/// Parse and validate a config file. Bad syntax, unknown keys, wrong types
/// and out-of-range values all throw ConfigError with a line reference.
RunConfig parse_config_text(const std::string& text);

/// Same checks for an already-parsed document (no line references).
RunConfig parse_config_json(const nlohmann::ordered_json& doc);

/// Range checks shared by the parsers and the flag-override path.
void validate(const RunConfig& config);

const std::vector<std::string>& law_families();

SemiStableExponent build_exponent(const LawConfig& law);
TransformLaw build_transform(const LawConfig& law);

/// A draw from the configured law. Transform-side families (cf/lt/pgf kinds)
/// sample through their beta = 0 mixture or lattice form and reject beta != 0.
std::function<double(RandomStream&)> build_sampler(const LawConfig& law);

/// Scheme with the configured law as its component innovation.
SchemeSpec build_scheme(const RunConfig& config);

} // namespace harrisar1
