#include "harrisar1/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "harrisar1/harris.hpp"
#include "harrisar1/io.hpp"
#include "harrisar1/lattice_pmf.hpp"
#include "harrisar1/pgf_extract.hpp"
#include "harrisar1/samplers.hpp"

namespace harrisar1 {

namespace {

using json = nlohmann::ordered_json;

struct Source {
    const std::string* text = nullptr; // raw file text, when there is one
};

// 1-based line of the last segment of a dotted key path, found by walking the
// segments in order so "scheme.b" does not hit the law's "b". 0 if absent.
int line_of_path(const std::string& text, const std::string& path) {
    std::size_t from = 0;
    std::size_t hit = std::string::npos;
    std::size_t start = 0;
    while (start <= path.size()) {
        const std::size_t dot = path.find('.', start);
        const std::string segment =
            path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        const std::string needle = "\"" + segment + "\"";
        hit = text.find(needle, from);
        if (hit == std::string::npos) return 0;
        from = hit + needle.size();
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + hit, '\n'));
}

[[noreturn]] void fail(const Source& src, const std::string& path, const std::string& msg) {
    std::string where = path;
    if (src.text)
        if (const int line = line_of_path(*src.text, path))
            where += " (line " + std::to_string(line) + ")";
    throw ConfigError("config error at " + where + ": " + msg);
}

void reject_unknown(const Source& src, const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known)
            fail(src, path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
}

std::string join(const std::string& path, const char* key) {
    return path.empty() ? key : path + "." + key;
}

double num_field(const Source& src, const json& obj, const std::string& path, const char* key,
                 double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(src, join(path, key), "expected a number");
    return v.get<double>();
}

std::int64_t int_field(const Source& src, const json& obj, const std::string& path,
                       const char* key, std::int64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(src, join(path, key), "expected an integer");
    return v.get<std::int64_t>();
}

std::uint64_t seed_field(const Source& src, const json& obj, const char* key,
                         std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                   v.get<std::int64_t>() < 0))
        fail(src, key, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

bool bool_field(const Source& src, const json& obj, const std::string& path, const char* key,
                bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(src, join(path, key), "expected true or false");
    return v.get<bool>();
}

std::string str_field(const Source& src, const json& obj, const std::string& path,
                      const char* key, std::string fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(src, join(path, key), "expected a string");
    return v.get<std::string>();
}

bool is_extreme_family(const std::string& family) {
    return family == "gamma_max_semi_stable" || family == "max_semi_stable";
}

void validate_impl(const RunConfig& c, const Source& src) {
    if (c.n_steps < 1) fail(src, "n_steps", "must be at least 1");
    if (c.n_paths < 1) fail(src, "n_paths", "must be at least 1");
    if (c.n_samples < 1) fail(src, "n_samples", "must be at least 1");
    if (c.grid.decades < 1 || c.grid.decades > 12)
        fail(src, "grid.decades", "must be in [1, 12]");
    if (c.grid.per_decade < 2 || c.grid.per_decade > 4096)
        fail(src, "grid.per_decade", "must be in [2, 4096]");

    const bool needs_law = c.command == Command::Sample || c.command == Command::Simulate;
    if (needs_law && c.law.family.empty())
        fail(src, "law.family", "required for this command");
    if (c.command == Command::Simulate && c.scheme.combiner.empty())
        fail(src, "scheme.combiner", "required for this command");
    if (c.command == Command::Report && c.inputs.empty())
        fail(src, "inputs", "report needs at least one JSON report file");

    if (!c.law.family.empty()) {
        const auto& fams = law_families();
        if (std::find(fams.begin(), fams.end(), c.law.family) == fams.end())
            fail(src, "law.family", "unknown family '" + c.law.family + "'");
        if (c.law.k < 1) fail(src, "law.k", "must be at least 1");
        if (c.law.family == "harris") {
            if (!(c.law.a > 1.0) || !std::isfinite(c.law.a))
                fail(src, "law.a", "must be finite and greater than 1");
        } else {
            if (!(c.law.lambda > 0.0) || !std::isfinite(c.law.lambda))
                fail(src, "law.lambda", "must be finite and positive");
            if (!(c.law.alpha > 0.0) || !std::isfinite(c.law.alpha))
                fail(src, "law.alpha", "must be finite and positive");
            if (c.law.family == "gen_semi_alpha_laplace" && c.law.alpha > 2.0)
                fail(src, "law.alpha", "must be at most 2 for this family");
            if ((c.law.family == "gen_semi_mittag_leffler" ||
                 c.law.family == "discrete_gen_semi_ml") &&
                c.law.alpha > 1.0)
                fail(src, "law.alpha", "must be at most 1 for this family");
            if (!(c.law.b > 0.0 && c.law.b < 1.0))
                fail(src, "law.b", "must be in (0, 1)");
            const double bound = SemiStableExponent::beta_bound(c.law.alpha, c.law.b);
            if (!std::isfinite(c.law.beta) || std::abs(c.law.beta) > bound)
                fail(src, "law.beta",
                     "must satisfy |beta| <= " + format_g17(bound) + " for this (alpha, b)");
            if (c.law.gap < 1) fail(src, "law.gap", "must be at least 1");
        }
    }

    if (!c.scheme.combiner.empty()) {
        const std::string& cb = c.scheme.combiner;
        if (cb != "add" && cb != "max" && cb != "min" && cb != "thinned_add")
            fail(src, "scheme.combiner", "must be add, max, min or thinned_add");
        if (c.scheme.k < 1) fail(src, "scheme.k", "must be at least 1");
        if (c.scheme.randomized && !(c.scheme.p > 0.0 && c.scheme.p < 1.0))
            fail(src, "scheme.p", "must be in (0, 1)");
        if (!(c.scheme.b > 0.0) || !std::isfinite(c.scheme.b))
            fail(src, "scheme.b", "must be finite and positive");
        if ((cb == "add" || cb == "thinned_add") && c.scheme.b >= 1.0)
            fail(src, "scheme.b", "must be below 1 for additive schemes");
        if (cb == "min" && c.scheme.b <= 1.0)
            fail(src, "scheme.b", "must exceed 1 for min schemes");
    }
}

RunConfig parse_impl(const json& doc, const Source& src) {
    if (!doc.is_object()) fail(src, "config", "top level must be a JSON object");
    reject_unknown(src, doc, "",
                   {"command", "seed", "out", "law", "scheme", "n_steps", "n_paths", "n_samples",
                    "check", "inputs", "grid"});

    RunConfig c;
    // Optional here: the CLI subcommand wins over the file anyway.
    const std::string cmd = str_field(src, doc, "", "command", "verify");
    if (cmd == "sample")
        c.command = Command::Sample;
    else if (cmd == "simulate")
        c.command = Command::Simulate;
    else if (cmd == "verify")
        c.command = Command::Verify;
    else if (cmd == "report")
        c.command = Command::Report;
    else
        fail(src, "command", "unknown command '" + cmd + "'");

    c.seed = seed_field(src, doc, "seed", c.seed);
    c.out = str_field(src, doc, "", "out", c.out);
    c.n_steps = int_field(src, doc, "", "n_steps", c.n_steps);
    c.n_paths = int_field(src, doc, "", "n_paths", c.n_paths);
    c.n_samples = int_field(src, doc, "", "n_samples", c.n_samples);
    c.check = str_field(src, doc, "", "check", c.check);

    if (doc.contains("law")) {
        const json& law = doc.at("law");
        if (!law.is_object()) fail(src, "law", "expected an object");
        reject_unknown(src, law, "law",
                       {"family", "lambda", "alpha", "beta", "b", "k", "gap", "a"});
        c.law.family = str_field(src, law, "law", "family", "");
        c.law.lambda = num_field(src, law, "law", "lambda", c.law.lambda);
        c.law.alpha = num_field(src, law, "law", "alpha", c.law.alpha);
        c.law.beta = num_field(src, law, "law", "beta", c.law.beta);
        c.law.b = num_field(src, law, "law", "b", c.law.b);
        c.law.k = static_cast<int>(int_field(src, law, "law", "k", c.law.k));
        c.law.gap = static_cast<int>(int_field(src, law, "law", "gap", c.law.gap));
        c.law.a = num_field(src, law, "law", "a", c.law.a);
    }

    if (doc.contains("scheme")) {
        const json& scheme = doc.at("scheme");
        if (!scheme.is_object()) fail(src, "scheme", "expected an object");
        reject_unknown(src, scheme, "scheme", {"combiner", "randomized", "p", "b", "k"});
        c.scheme.combiner = str_field(src, scheme, "scheme", "combiner", "");
        c.scheme.randomized = bool_field(src, scheme, "scheme", "randomized", c.scheme.randomized);
        c.scheme.p = num_field(src, scheme, "scheme", "p", c.scheme.p);
        c.scheme.b = num_field(src, scheme, "scheme", "b", c.scheme.b);
        c.scheme.k = static_cast<int>(int_field(src, scheme, "scheme", "k", c.scheme.k));
    }

    if (doc.contains("inputs")) {
        const json& inputs = doc.at("inputs");
        if (!inputs.is_array()) fail(src, "inputs", "expected an array of file paths");
        for (const json& v : inputs) {
            if (!v.is_string()) fail(src, "inputs", "expected an array of file paths");
            c.inputs.push_back(v.get<std::string>());
        }
    }

    if (doc.contains("grid")) {
        const json& grid = doc.at("grid");
        if (!grid.is_object()) fail(src, "grid", "expected an object");
        reject_unknown(src, grid, "grid", {"decades", "per_decade"});
        c.grid.decades = static_cast<int>(int_field(src, grid, "grid", "decades", c.grid.decades));
        c.grid.per_decade =
            static_cast<int>(int_field(src, grid, "grid", "per_decade", c.grid.per_decade));
    }

    validate_impl(c, src);
    return c;
}

} // namespace

const char* to_string(Command c) {
    switch (c) {
        case Command::Sample: return "sample";
        case Command::Simulate: return "simulate";
        case Command::Verify: return "verify";
        case Command::Report: return "report";
    }
    return "?";
}

nlohmann::ordered_json RunConfig::to_json() const {
    // "out" is deliberately absent: where artifacts land must not change
    // their bytes, and this serialization feeds the stamped hash.
    json j;
    j["command"] = to_string(command);
    j["seed"] = seed;
    json l;
    l["family"] = law.family;
    l["lambda"] = law.lambda;
    l["alpha"] = law.alpha;
    l["beta"] = law.beta;
    l["b"] = law.b;
    l["k"] = law.k;
    l["gap"] = law.gap;
    l["a"] = law.a;
    j["law"] = std::move(l);
    json s;
    s["combiner"] = scheme.combiner;
    s["randomized"] = scheme.randomized;
    s["p"] = scheme.p;
    s["b"] = scheme.b;
    s["k"] = scheme.k;
    j["scheme"] = std::move(s);
    j["n_steps"] = n_steps;
    j["n_paths"] = n_paths;
    j["n_samples"] = n_samples;
    j["check"] = check;
    j["inputs"] = inputs;
    json g;
    g["decades"] = grid.decades;
    g["per_decade"] = grid.per_decade;
    j["grid"] = std::move(g);
    return j;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(to_json().dump()); }

RunConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw ConfigError("config error at line " + std::to_string(line) + ": " +
                          std::string(e.what()));
    }
    Source src{&text};
    return parse_impl(doc, src);
}

RunConfig parse_config_json(const nlohmann::ordered_json& doc) {
    return parse_impl(doc, Source{});
}

void validate(const RunConfig& config) { validate_impl(config, Source{}); }

const std::vector<std::string>& law_families() {
    static const std::vector<std::string> fams = {
        "gen_semi_alpha_laplace", "gen_semi_mittag_leffler", "discrete_gen_semi_ml",
        "gen_semi_pareto",        "gamma_max_semi_stable",   "max_semi_stable",
        "harris"};
    return fams;
}

SemiStableExponent build_exponent(const LawConfig& law) {
    const Tail tail = is_extreme_family(law.family) ? Tail::Decreasing : Tail::Increasing;
    return SemiStableExponent(law.lambda, law.alpha, law.beta, law.b, tail);
}

TransformLaw build_transform(const LawConfig& law) {
    if (law.family == "harris") {
        const HarrisLaw h(law.a, law.k);
        TransformLaw t;
        t.kind = TransformKind::PGF;
        t.name = "harris";
        t.eval = [h](double s) { return h.pgf(s); };
        t.scale = 1.0;
        return t;
    }
    const SemiStableExponent psi = build_exponent(law);
    if (law.family == "gen_semi_alpha_laplace")
        return transform_of(GenSemiAlphaLaplaceLaw(psi, law.k));
    if (law.family == "gen_semi_mittag_leffler")
        return transform_of(GenSemiMLLaw(psi, law.k));
    if (law.family == "discrete_gen_semi_ml")
        return transform_of(DiscreteGenSemiMLLaw(psi, law.k, law.gap));
    if (law.family == "gen_semi_pareto") return transform_of(GenSemiParetoLaw(psi, law.k));
    if (law.family == "gamma_max_semi_stable")
        return transform_of(GammaMaxSemiStableLaw(psi, law.k));
    if (law.family == "max_semi_stable") {
        const MaxSemiStableLaw m(psi);
        TransformLaw t;
        t.kind = TransformKind::DF;
        t.name = "max_semi_stable";
        t.eval = [m](double x) { return m.df(x); };
        t.scale = psi.natural_scale();
        return t;
    }
    throw ConfigError("config error at law.family: unknown family '" + law.family + "'");
}

std::function<double(RandomStream&)> build_sampler(const LawConfig& law) {
    if (law.family == "harris") {
        const HarrisLaw h(law.a, law.k);
        return [h](RandomStream& rng) { return static_cast<double>(h.sample(rng)); };
    }
    const SemiStableExponent psi = build_exponent(law);
    if (law.family == "gen_semi_pareto") {
        const GenSemiParetoLaw l(psi, law.k);
        return [l](RandomStream& rng) { return l.sample(rng); };
    }
    if (law.family == "gamma_max_semi_stable") {
        const GammaMaxSemiStableLaw l(psi, law.k);
        return [l](RandomStream& rng) { return l.sample(rng); };
    }
    if (law.family == "max_semi_stable") {
        const MaxSemiStableLaw l(psi);
        return [l](RandomStream& rng) { return l.sample(rng); };
    }
    // Transform-side families sample through their mixture or lattice form,
    // which exists for the pure power exponent only.
    if (law.beta != 0.0)
        throw ConfigError("config error at law.beta: must be 0 to sample family '" + law.family +
                          "'");
    if (law.family == "gen_semi_alpha_laplace") {
        const double alpha = law.alpha, lambda = law.lambda;
        const int k = law.k;
        return [alpha, lambda, k](RandomStream& rng) {
            return sample_linnik(rng, alpha, lambda, k);
        };
    }
    if (law.family == "gen_semi_mittag_leffler") {
        const double alpha = law.alpha, lambda = law.lambda;
        const int k = law.k;
        return [alpha, lambda, k](RandomStream& rng) {
            return sample_ml_positive(rng, alpha, lambda, k);
        };
    }
    if (law.family == "discrete_gen_semi_ml") {
        const DiscreteGenSemiMLLaw l(psi, law.k, law.gap);
        PgfExtractResult ext = l.pmf();
        if (ext.pmf.truncation_mass > 1e-9)
            throw ConfigError("config error at law: lattice table truncation too large to sample");
        const LatticePmf table = std::move(ext.pmf);
        return [table](RandomStream& rng) { return static_cast<double>(table.sample(rng)); };
    }
    throw ConfigError("config error at law.family: unknown family '" + law.family + "'");
}

SchemeSpec build_scheme(const RunConfig& config) {
    SchemeSpec spec;
    const std::string& cb = config.scheme.combiner;
    if (cb == "add")
        spec.combiner = Combiner::Add;
    else if (cb == "max")
        spec.combiner = Combiner::Max;
    else if (cb == "min")
        spec.combiner = Combiner::Min;
    else if (cb == "thinned_add")
        spec.combiner = Combiner::ThinnedAdd;
    else
        throw ConfigError("config error at scheme.combiner: must be add, max, min or thinned_add");
    spec.randomized = config.scheme.randomized;
    if (spec.randomized) spec.p = config.scheme.p;
    spec.b = config.scheme.b;
    spec.k = config.scheme.k;
    spec.innovation = build_sampler(config.law);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config error at scheme: ") + e.what());
    }
    return spec;
}

} // namespace harrisar1
