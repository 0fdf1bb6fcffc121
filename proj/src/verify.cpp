#include "harrisar1/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "harrisar1/harris.hpp"
#include "harrisar1/pgf_extract.hpp"

namespace harrisar1 {

namespace {

std::string describe_grid(std::span<const double> grid) {
    if (grid.empty()) return "empty grid";
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu points in [%.6g, %.6g]", grid.size(), grid.front(),
                  grid.back());
    return buf;
}

// Collects residuals, keeping the top offenders plus any skipped-point notes.
struct Accumulator {
    double max_residual = 0.0;
    std::vector<PointRecord> worst;
    std::vector<PointRecord> noted;

    void add(double point, double lhs, double rhs, double residual, std::string note = {}) {
        max_residual = std::max(max_residual, residual);
        worst.push_back(PointRecord{point, lhs, rhs, residual, std::move(note)});
        std::sort(worst.begin(), worst.end(),
                  [](const PointRecord& x, const PointRecord& y) { return x.residual > y.residual; });
        if (worst.size() > 5) worst.pop_back();
    }

    void note_point(double point, std::string note) {
        noted.push_back(PointRecord{point, 0.0, 0.0, 0.0, std::move(note)});
    }

    void finish(VerificationReport& rep) const {
        rep.max_residual = max_residual;
        rep.worst = worst;
        rep.worst.insert(rep.worst.end(), noted.begin(), noted.end());
        rep.passed = max_residual <= rep.threshold;
    }
};

void require_pairing(const TransformLaw& law, StabilityKind kind) {
    const bool ok = (kind == StabilityKind::Sum &&
                     (law.kind == TransformKind::CF || law.kind == TransformKind::LT ||
                      law.kind == TransformKind::PGF)) ||
                    (kind == StabilityKind::Max && law.kind == TransformKind::DF) ||
                    (kind == StabilityKind::Min && law.kind == TransformKind::SF);
    if (!ok)
        throw std::invalid_argument(std::string("verify: a ") + to_string(kind) +
                                    " pairing cannot be checked through a " + to_string(law.kind) +
                                    " transform");
}

// Min schemes contract by dividing through b > 1; sum and max schemes carry
// a multiplier in (0,1).
void require_multiplier(StabilityKind kind, double b) {
    const bool ok = kind == StabilityKind::Min ? b > 1.0 : (b > 0.0 && b < 1.0);
    if (!ok) throw std::invalid_argument("verify: multiplier b outside the scheme's range");
}

StabilityKind scheme_of(TransformKind kind) {
    switch (kind) {
        case TransformKind::SF: return StabilityKind::Min;
        case TransformKind::DF: return StabilityKind::Max;
        default: return StabilityKind::Sum;
    }
}

} // namespace

const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::CF: return "cf";
        case TransformKind::LT: return "lt";
        case TransformKind::PGF: return "pgf";
        case TransformKind::SF: return "sf";
        case TransformKind::DF: return "df";
    }
    return "?";
}

const char* to_string(StabilityKind k) {
    switch (k) {
        case StabilityKind::Sum: return "sum";
        case StabilityKind::Max: return "max";
        case StabilityKind::Min: return "min";
    }
    return "?";
}

TransformLaw transform_of(const GenSemiAlphaLaplaceLaw& law) {
    TransformLaw t;
    t.kind = TransformKind::CF;
    t.name = "gen_semi_alpha_laplace";
    t.eval = [law](double x) { return law.cf(x); };
    t.scale = law.exponent.natural_scale();
    return t;
}

TransformLaw transform_of(const GenSemiMLLaw& law) {
    TransformLaw t;
    t.kind = TransformKind::LT;
    t.name = "gen_semi_mittag_leffler";
    t.eval = [law](double s) { return law.lt(s); };
    t.scale = law.exponent.natural_scale();
    return t;
}

TransformLaw transform_of(const DiscreteGenSemiMLLaw& law) {
    TransformLaw t;
    t.kind = TransformKind::PGF;
    t.name = "discrete_gen_semi_ml";
    t.eval = [law](double s) { return law.pgf(s); };
    t.eval_at_deficit = [law](std::complex<double> w) { return law.pgf_at_deficit(w); };
    t.gap = law.m;
    return t;
}

TransformLaw transform_of(const GenSemiParetoLaw& law) {
    TransformLaw t;
    t.kind = TransformKind::SF;
    t.name = "gen_semi_pareto";
    t.eval = [law](double x) { return law.sf(x); };
    t.scale = law.exponent.natural_scale();
    return t;
}

TransformLaw transform_of(const GammaMaxSemiStableLaw& law) {
    TransformLaw t;
    t.kind = TransformKind::DF;
    t.name = "gamma_max_semi_stable";
    t.eval = [law](double x) { return law.df(x); };
    t.scale = law.exponent.natural_scale();
    return t;
}

double scaled_point(TransformKind kind, int gap, double b, double point) {
    switch (kind) {
        case TransformKind::CF:
        case TransformKind::LT:
            return b * point;
        case TransformKind::PGF: {
            const double w = 1.0 - std::pow(point, gap);
            return std::min(1.0, std::pow(1.0 - b * w, 1.0 / gap));
        }
        case TransformKind::DF:
        case TransformKind::SF:
            return point / b;
    }
    throw std::logic_error("scaled_point: unreachable");
}

std::vector<double> default_grid(const TransformLaw& law) {
    if (law.kind == TransformKind::PGF) {
        // s mapped from log-spaced deficits; w = 1 exactly puts s = 0 on the grid.
        const auto w = log_spaced(1e-4, 1.0, 1025);
        std::vector<double> s(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            s[i] = std::pow(1.0 - w[w.size() - 1 - i], 1.0 / law.gap);
        return s;
    }
    return standard_grid(law.scale);
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["check_name"] = check_name;
    j["parameters"] = parameters.is_null() ? nlohmann::ordered_json::object() : parameters;
    j["grid"] = grid;
    j["max_residual"] = max_residual;
    j["threshold"] = threshold;
    j["passed"] = passed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : worst) {
        nlohmann::ordered_json e;
        e["point"] = r.point;
        e["lhs"] = r.lhs;
        e["rhs"] = r.rhs;
        e["residual"] = r.residual;
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(std::move(e));
    }
    j["worst"] = std::move(arr);
    if (!residual_table.empty()) {
        auto t = nlohmann::ordered_json::array();
        for (const auto& [x, r] : residual_table) t.push_back({x, r});
        j["residual_table"] = std::move(t);
    }
    return j;
}

VerificationReport harris_fixed_point_residual(const TransformLaw& law, double a, double b,
                                               double k, StabilityKind kind,
                                               std::span<const double> grid, double threshold) {
    require_pairing(law, kind);
    require_multiplier(kind, b);
    if (!(a > 1.0)) throw std::invalid_argument("verify: a must exceed 1");
    if (!(k > 0.0)) throw std::invalid_argument("verify: k must be positive");

    VerificationReport rep;
    rep.check_name = "harris_fixed_point";
    rep.grid = describe_grid(grid);
    rep.threshold = threshold;
    rep.parameters = {{"law", law.name},   {"transform", to_string(law.kind)},
                      {"scheme", to_string(kind)}, {"a", a},
                      {"b", b},            {"k", k}};
    if (law.gap > 1) rep.parameters["gap"] = law.gap;

    Accumulator acc;
    for (double x : grid) {
        double lhs = 0.0, inner = 0.0;
        try {
            lhs = law.eval(x);
            inner = law.eval(scaled_point(law.kind, law.gap, b, x));
        } catch (const std::domain_error& e) {
            acc.note_point(x, std::string("skipped: ") + e.what());
            continue;
        }
        const double rhs = harris_compose(inner, a, k);
        acc.add(x, lhs, rhs, std::abs(lhs - rhs));
    }
    acc.finish(rep);
    return rep;
}

VerificationReport stationarity_identity_residual(const TransformLaw& law, double p, double b,
                                                  int k, std::span<const double> grid,
                                                  double threshold) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("verify: p must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("verify: k must be a positive integer");
    require_multiplier(scheme_of(law.kind), b);

    VerificationReport rep;
    rep.check_name = "stationarity_identity";
    rep.grid = describe_grid(grid);
    rep.threshold = threshold;
    rep.parameters = {{"law", law.name}, {"transform", to_string(law.kind)}, {"p", p}, {"b", b},
                      {"k", k}};

    Accumulator acc;
    for (double x : grid) {
        double tx = 0.0, ts = 0.0;
        try {
            tx = law.eval(x);
            ts = law.eval(scaled_point(law.kind, law.gap, b, x));
        } catch (const std::domain_error& e) {
            acc.note_point(x, std::string("skipped: ") + e.what());
            continue;
        }
        const double tkx = std::pow(tx, k);
        const double tks = std::pow(ts, k);
        const double lhs = p * tks + (1.0 - p) * tks * tkx;
        acc.add(x, lhs, tkx, std::abs(lhs - tkx));
    }
    acc.finish(rep);
    return rep;
}

VerificationReport ssd_residual(const TransformLaw& law, double scale,
                                std::span<const double> grid) {
    if (law.kind == TransformKind::PGF)
        throw std::invalid_argument("ssd_residual: lattice laws use ssd_residual_pgf");
    const bool shrinking = law.kind != TransformKind::DF;
    if (shrinking ? !(scale > 0.0 && scale <= 1.0) : !(scale >= 1.0))
        throw std::invalid_argument("ssd_residual: scale outside the factorization's range");

    VerificationReport rep;
    rep.check_name = "ssd_residual";
    rep.grid = describe_grid(grid);
    rep.threshold = 0.0; // residuals below are excess beyond each condition's slack
    rep.parameters = {{"law", law.name}, {"transform", to_string(law.kind)}, {"scale", scale}};

    constexpr double kRangeSlack = 1e-12;
    constexpr double kMonotoneSlack = 1e-12;
    constexpr double kLimitTol = 1e-3;

    Accumulator acc;
    std::vector<double> xs, rs;
    for (double x : grid) {
        double num = 0.0, den = 0.0;
        try {
            num = law.eval(x);
            den = law.eval(scale * x);
        } catch (const std::domain_error& e) {
            acc.note_point(x, std::string("skipped: ") + e.what());
            continue;
        }
        if (den < 1e-300) {
            acc.note_point(x, "excluded: scaled transform underflows");
            continue;
        }
        const double r = num / den;
        xs.push_back(x);
        rs.push_back(r);
        rep.residual_table.emplace_back(x, r);
    }

    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double excess = std::max(rs[i] - 1.0, -rs[i]) - kRangeSlack;
        if (excess > 0.0) acc.add(xs[i], rs[i], 0.0, excess, "range [0,1]");
    }
    if (law.kind == TransformKind::SF || law.kind == TransformKind::DF) {
        for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
            const double viol = (law.kind == TransformKind::SF ? rs[i + 1] - rs[i]
                                                               : rs[i] - rs[i + 1]) -
                                kMonotoneSlack;
            if (viol > 0.0) acc.add(xs[i + 1], rs[i], rs[i + 1], viol, "monotonicity");
        }
        if (!xs.empty()) {
            // The defining limit sits far outside any reasonable grid; probe it
            // twelve decades out.
            const bool at_zero = law.kind == TransformKind::SF;
            const double probe = at_zero ? xs.front() * 1e-12 : xs.back() * 1e12;
            try {
                const double den_p = law.eval(scale * probe);
                if (den_p >= 1e-300) {
                    const double rp = law.eval(probe) / den_p;
                    const double excess = std::abs(rp - 1.0) - kLimitTol;
                    if (excess > 0.0)
                        acc.add(probe, rp, 1.0, excess, at_zero ? "r(0+) = 1" : "r(inf) = 1");
                }
            } catch (const std::domain_error&) {
                acc.note_point(probe, "limit probe outside domain");
            }
        }
    } else {
        const double r0 = law.eval(0.0) / law.eval(0.0);
        const double excess = std::abs(r0 - 1.0) - kRangeSlack;
        if (excess > 0.0) acc.add(0.0, r0, 1.0, excess, "r(0) = 1");
        acc.note_point(0.0, "Hermitian symmetry holds by construction: the transform is real and even");
    }
    acc.finish(rep);
    return rep;
}

VerificationReport ssd_residual_pgf(const DiscreteGenSemiMLLaw& law, double scale,
                                    std::size_t n_points) {
    if (!(scale > 0.0 && scale <= 1.0))
        throw std::invalid_argument("ssd_residual_pgf: scale must lie in (0,1]");

    VerificationReport rep;
    rep.check_name = "ssd_residual_pgf";
    rep.threshold = 0.0;
    {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "unit circle, %zu points, stride %d", n_points, law.m);
        rep.grid = buf;
    }
    rep.parameters = {{"law", "discrete_gen_semi_ml"},
                      {"scale", scale},
                      {"k", law.k},
                      {"gap", law.m},
                      {"n_points", n_points}};

    const SemiStableExponent& psi = law.exponent;
    const double kk = law.k;
    const auto ratio = [&](std::complex<double> z) -> std::complex<double> {
        const std::complex<double> w = 1.0 - std::pow(z, law.m);
        if (w == std::complex<double>{0.0, 0.0}) return {1.0, 0.0};
        const auto lw = log_one_plus_exp(psi.log_eval(w));
        const auto ls = log_one_plus_exp(psi.log_eval(scale * w));
        return std::exp(-(lw - ls) / kk);
    };

    PgfExtractOptions opts;
    opts.n_points = n_points;
    opts.stride = law.m;
    opts.offset = 0;
    opts.fail_floor = -1e-10;
    const PgfExtractResult ext = pmf_from_pgf(ratio, opts);
    rep.parameters["min_coefficient"] = ext.min_coefficient;
    rep.parameters["coefficient_sum"] = ext.coefficient_sum;
    rep.parameters["truncation_mass"] = ext.pmf.truncation_mass;

    Accumulator acc;
    const double neg_excess = -ext.min_coefficient - 1e-10;
    if (neg_excess > 0.0)
        acc.add(0.0, ext.min_coefficient, 0.0, neg_excess, "negative coefficient");
    // Raw coefficients sum to ratio(1) = 1; a larger gap means the FFT or the
    // evaluation itself misbehaved.
    const double sum_excess = std::abs(ext.coefficient_sum - 1.0) - 1e-8;
    if (sum_excess > 0.0) acc.add(1.0, ext.coefficient_sum, 1.0, sum_excess, "coefficient sum");

    if (std::abs(scale - psi.b()) <= 1e-15 * psi.b()) {
        // With scale = b the cofactor must be exactly the zero-offset
        // Harris-sum transform of the scaled p.g.f.
        const double a = psi.a();
        double ident = 0.0;
        double ident_at = 0.0;
        for (double w : log_spaced(1e-4, 1.0, 513)) {
            const double r = (law.pgf_at_deficit({w, 0.0}) / law.pgf_at_deficit({scale * w, 0.0})).real();
            const double z = law.pgf_at_deficit({scale * w, 0.0}).real();
            const double g = std::pow(a - (a - 1.0) * std::pow(z, kk), -1.0 / kk);
            if (std::abs(r - g) > ident) {
                ident = std::abs(r - g);
                ident_at = w;
            }
        }
        rep.parameters["identification_residual"] = ident;
        const double ident_excess = ident - 1e-11;
        if (ident_excess > 0.0)
            acc.add(ident_at, 0.0, 0.0, ident_excess, "Harris-sum identification");
        else
            acc.note_point(ident_at, "cofactor identified with the closed Harris-sum transform");
    } else {
        acc.note_point(0.0, "identification skipped: scale differs from the exponent's b");
    }
    acc.finish(rep);
    return rep;
}

VerificationReport ssd_cofactor_identification(const TransformLaw& law, double scale, double a,
                                               double k, std::span<const double> grid,
                                               double threshold) {
    if (law.kind == TransformKind::PGF)
        throw std::invalid_argument("ssd_cofactor_identification: lattice laws use ssd_residual_pgf");
    const bool shrinking = law.kind != TransformKind::DF;
    if (shrinking ? !(scale > 0.0 && scale <= 1.0) : !(scale >= 1.0))
        throw std::invalid_argument("ssd_cofactor_identification: scale outside the factorization's range");

    VerificationReport rep;
    rep.check_name = "ssd_cofactor_identification";
    rep.grid = describe_grid(grid);
    rep.threshold = threshold;
    rep.parameters = {{"law", law.name}, {"transform", to_string(law.kind)}, {"scale", scale},
                      {"a", a},          {"k", k}};

    Accumulator acc;
    for (double x : grid) {
        double num = 0.0, den = 0.0;
        try {
            num = law.eval(x);
            den = law.eval(scale * x);
        } catch (const std::domain_error& e) {
            acc.note_point(x, std::string("skipped: ") + e.what());
            continue;
        }
        if (den < 1e-300) {
            acc.note_point(x, "excluded: scaled transform underflows");
            continue;
        }
        const double r = num / den;
        const double g = std::pow(a - (a - 1.0) * std::pow(den, k), -1.0 / k);
        acc.add(x, r, g, std::abs(r - g));
    }
    acc.finish(rep);
    return rep;
}

LatticePmf harris_sum_convolution_oracle(const LatticePmf& innov, double a, int k,
                                         std::int64_t n_trunc, std::int64_t max_value) {
    if (innov.weights.empty())
        throw std::invalid_argument("harris_sum_convolution_oracle: empty innovation table");
    if (innov.offset < 0)
        throw std::invalid_argument("harris_sum_convolution_oracle: innovations must be nonnegative");
    if (innov.truncation_mass >= 1e-10)
        throw std::invalid_argument(
            "harris_sum_convolution_oracle: innovation table truncates more than 1e-10");
    if (max_value < 0) throw std::invalid_argument("harris_sum_convolution_oracle: bad max_value");

    HarrisLaw counts(a, k);
    const LatticePmf np = counts.pmf(n_trunc);
    if (np.truncation_mass >= 1e-10) {
        std::int64_t need = 0;
        for (std::int64_t trial = std::max<std::int64_t>(2 * n_trunc, 16);
             trial <= (std::int64_t{1} << 24); trial *= 2) {
            if (counts.pmf(trial).truncation_mass < 1e-10) {
                need = trial;
                break;
            }
        }
        char buf[176];
        std::snprintf(buf, sizeof(buf),
                      "harris_sum_convolution_oracle: count tail beyond n_trunc=%lld is %.3e; "
                      "n_trunc >= %lld would fit the 1e-10 budget",
                      static_cast<long long>(n_trunc), np.truncation_mass,
                      static_cast<long long>(need));
        throw std::invalid_argument(buf);
    }

    std::vector<double> acc(static_cast<std::size_t>(max_value) + 1, 0.0);
    LatticePmf power = innov; // innov^{*j}
    double remaining = 1.0;   // count mass not yet folded in
    for (std::int64_t j = 1; j <= n_trunc && remaining > 1e-18; ++j) {
        if (j > 1) power = convolve(power, innov, max_value);
        if ((j - 1) % k != 0) continue;
        const auto m = static_cast<std::size_t>((j - 1) / k);
        if (m >= np.weights.size()) break;
        const double wj = np.weights[m];
        remaining -= wj;
        if (wj == 0.0) continue;
        for (std::size_t i = 0; i < power.weights.size(); ++i) {
            if (power.weights[i] == 0.0) continue;
            acc[static_cast<std::size_t>(power.value_at(i))] += wj * power.weights[i];
        }
    }

    // Compress the dense accumulator back onto its lattice.
    std::int64_t first = -1, last = -1;
    for (std::int64_t v = 0; v <= max_value; ++v) {
        if (acc[static_cast<std::size_t>(v)] != 0.0) {
            if (first < 0) first = v;
            last = v;
        }
    }
    LatticePmf out;
    if (first < 0) {
        out.truncation_mass = 1.0;
        return out;
    }
    std::int64_t stride = 0;
    for (std::int64_t v = first; v <= last; ++v)
        if (acc[static_cast<std::size_t>(v)] != 0.0) stride = std::gcd(stride, v - first);
    if (stride == 0) stride = 1;
    out.offset = first;
    out.stride = stride;
    out.weights.reserve(static_cast<std::size_t>((last - first) / stride) + 1);
    for (std::int64_t v = first; v <= last; v += stride)
        out.weights.push_back(acc[static_cast<std::size_t>(v)]);
    out.truncation_mass = std::max(0.0, 1.0 - out.table_mass());
    return out;
}

VerificationReport harris_extreme_series_oracle(const TransformLaw& law, double a, int k,
                                                std::span<const double> x_grid,
                                                std::int64_t n_trunc) {
    if (law.kind != TransformKind::SF && law.kind != TransformKind::DF)
        throw std::invalid_argument("harris_extreme_series_oracle: law must carry an s.f. or d.f.");
    HarrisLaw counts(a, k);
    const LatticePmf np = counts.pmf(n_trunc);

    VerificationReport rep;
    rep.check_name = "harris_extreme_series_oracle";
    rep.grid = describe_grid(x_grid);
    rep.threshold = np.truncation_mass + 1e-12;
    rep.parameters = {{"law", law.name}, {"a", a}, {"k", k}, {"n_trunc", n_trunc},
                      {"count_tail", np.truncation_mass}};

    Accumulator acc;
    for (double x : x_grid) {
        const double t = law.eval(x);
        const double tk = std::pow(t, k);
        double series = 0.0;
        double pw = t; // t^{1+km}, advanced by tk each term
        for (double w : np.weights) {
            series += w * pw;
            pw *= tk;
        }
        const double closed = harris_compose(t, a, k);
        acc.add(x, series, closed, std::abs(series - closed));
    }
    acc.finish(rep);
    return rep;
}

VerificationReport incommensurable_scaling_residual(const SemiStableExponent& psi, double b2,
                                                    std::span<const double> grid,
                                                    double threshold) {
    if (!(b2 > 0.0 && b2 < 1.0))
        throw std::invalid_argument("incommensurable_scaling_residual: b2 must lie in (0,1)");
    const double a2 = std::pow(b2, -psi.alpha());
    const double r2 = psi.tail() == Tail::Increasing ? b2 : 1.0 / b2;

    VerificationReport rep;
    rep.check_name = "incommensurable_scaling";
    rep.grid = describe_grid(grid);
    rep.threshold = threshold;
    rep.parameters = {{"lambda", psi.lambda()}, {"alpha", psi.alpha()}, {"beta", psi.beta()},
                      {"b", psi.b()},           {"b2", b2}};
    rep.max_residual = scaling_residual(psi, grid, a2, r2);
    rep.passed = rep.max_residual <= threshold;
    return rep;
}

} // namespace harrisar1
