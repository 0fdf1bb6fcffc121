#include "doctest.h"

#include <cmath>
#include <string>

#include "harrisar1/config.hpp"

using namespace harrisar1;

namespace {

std::string sample_text() {
    return R"({
  "command": "sample",
  "seed": 7,
  "law": {
    "family": "gen_semi_pareto",
    "alpha": 1.0,
    "b": 0.5,
    "k": 2
  },
  "n_samples": 100
})";
}

bool fails_mentioning(const std::string& text, const std::string& needle) {
    try {
        parse_config_text(text);
        return false;
    } catch (const ConfigError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("round trip of a valid config") {
    const RunConfig cfg = parse_config_text(sample_text());
    CHECK(cfg.command == Command::Sample);
    CHECK(cfg.seed == 7);
    CHECK(cfg.law.family == "gen_semi_pareto");
    CHECK(cfg.law.k == 2);
    CHECK(cfg.n_samples == 100);
    CHECK(cfg.n_paths == 100); // untouched default
}

TEST_CASE("unknown keys are rejected with their line") {
    const std::string text = R"({
  "command": "verify",
  "bogus": 1
})";
    CHECK(fails_mentioning(text, "bogus"));
    CHECK(fails_mentioning(text, "line 3"));

    const std::string nested = R"({
  "command": "sample",
  "law": {
    "family": "gen_semi_pareto",
    "fishy": true
  }
})";
    CHECK(fails_mentioning(nested, "law.fishy"));
    CHECK(fails_mentioning(nested, "line 5"));
}

TEST_CASE("syntax errors carry a line reference") {
    const std::string text = "{\n  \"command\": \"verify\",\n  oops\n}";
    CHECK(fails_mentioning(text, "line 3"));
}

TEST_CASE("type errors") {
    CHECK(fails_mentioning(R"({"command": "verify", "seed": "high"})", "seed"));
    CHECK(fails_mentioning(R"({"command": "verify", "seed": -4})", "seed"));
    CHECK(fails_mentioning(R"({"command": "verify", "n_paths": 2.5})", "n_paths"));
    CHECK(fails_mentioning(R"({"command": "nonsense"})", "command"));
}

TEST_CASE("range validation before any computation") {
    CHECK(fails_mentioning(R"({"command": "verify", "n_steps": 0})", "n_steps"));
    CHECK(fails_mentioning(
        R"({"command": "sample", "law": {"family": "gen_semi_pareto", "b": 1.5}})", "law.b"));
    CHECK(fails_mentioning(
        R"({"command": "sample", "law": {"family": "gen_semi_pareto", "beta": 9.0}})",
        "law.beta"));
    CHECK(fails_mentioning(
        R"({"command": "sample", "law": {"family": "gen_semi_alpha_laplace", "alpha": 2.5}})",
        "law.alpha"));
    CHECK(fails_mentioning(R"({"command": "sample", "law": {"family": "unheard_of"}})",
                           "family"));
    CHECK(fails_mentioning(R"({"command": "sample"})", "law.family"));

    // simulate with p outside (0, 1) is a config error
    const std::string bad_p = R"({
  "command": "simulate",
  "law": {"family": "gen_semi_pareto"},
  "scheme": {"combiner": "min", "p": 1.5, "b": 2.0, "k": 2}
})";
    CHECK(fails_mentioning(bad_p, "scheme.p"));

    const std::string bad_b = R"({
  "command": "simulate",
  "law": {"family": "gen_semi_pareto"},
  "scheme": {"combiner": "min", "p": 0.5, "b": 0.5, "k": 2}
})";
    CHECK(fails_mentioning(bad_b, "scheme.b"));
}

TEST_CASE("hash is canonical and sensitive") {
    const RunConfig a = parse_config_text(sample_text());
    const RunConfig b = parse_config_text(sample_text());
    CHECK(a.hash() == b.hash());
    RunConfig c = a;
    c.seed = 8;
    CHECK(a.hash() != c.hash());
    RunConfig d = a;
    d.law.alpha = 0.9;
    CHECK(a.hash() != d.hash());
    // The output directory is a disposition, not an input: same hash.
    RunConfig e = a;
    e.out = "/somewhere/else";
    CHECK(a.hash() == e.hash());
}

TEST_CASE("builders honor the config") {
    RunConfig cfg = parse_config_text(sample_text());
    const TransformLaw t = build_transform(cfg.law);
    CHECK(t.kind == TransformKind::SF);
    CHECK(t.name == "gen_semi_pareto");
    CHECK(t.eval(1.0) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));

    RandomStream rng(3);
    const auto draw = build_sampler(cfg.law);
    const double x = draw(rng);
    CHECK(x > 0.0);

    // transform-side families need beta = 0 to sample
    LawConfig bent;
    bent.family = "gen_semi_alpha_laplace";
    bent.alpha = 1.0;
    bent.b = 0.5;
    bent.beta = 0.05;
    CHECK_THROWS_AS(build_sampler(bent), ConfigError);
    // but their survival-side cousins accept beta != 0
    bent.family = "gen_semi_pareto";
    CHECK_NOTHROW(build_sampler(bent));
}

TEST_CASE("scheme builder validates through the process spec") {
    RunConfig cfg = parse_config_text(sample_text());
    cfg.scheme.combiner = "min";
    cfg.scheme.p = 0.5;
    cfg.scheme.b = 2.0;
    cfg.scheme.k = 2;
    const SchemeSpec spec = build_scheme(cfg);
    CHECK(spec.combiner == Combiner::Min);
    CHECK(spec.k == 2);
    CHECK(spec.p.has_value());

    cfg.scheme.combiner = "warp";
    CHECK_THROWS_AS(build_scheme(cfg), ConfigError);
}

TEST_CASE("harris family config") {
    LawConfig law;
    law.family = "harris";
    law.a = 2.0;
    law.k = 2;
    const TransformLaw t = build_transform(law);
    CHECK(t.kind == TransformKind::PGF);
    CHECK(t.eval(0.5) == doctest::Approx(0.5 / std::sqrt(2.0 - 0.25)).epsilon(1e-12));
    RandomStream rng(1);
    const auto draw = build_sampler(law);
    for (int i = 0; i < 50; ++i) {
        const double v = draw(rng);
        CHECK(v >= 1.0);
        CHECK(static_cast<long long>(v) % 2 == 1);
    }
}

} // TEST_SUITE
