#include "harrisar1/cf_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "harrisar1/io.hpp"

namespace harrisar1 {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], positive half.
constexpr double kGlNode[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeight[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i)
        acc += kGlWeight[i] * (f(mid - half * kGlNode[i]) + f(mid + half * kGlNode[i]));
    return acc * half;
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double fa,
                        double b, double fb, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, depth);
}

} // namespace

DfValue df_from_cf(const std::function<double(double)>& cf, double x,
                   const QuadratureSpec& quad) {
    if (x == 0.0) return {0.5, 0.0};
    if (x < 0.0) {
        DfValue v = df_from_cf(cf, -x, quad);
        return {1.0 - v.value, v.error};
    }

    const auto integrand = [&](double t) {
        if (t == 0.0) return x; // limit of cf(t) sin(tx)/t
        return cf(t) * std::sin(t * x) / t;
    };

    const double lobe = std::numbers::pi / x;

    // Head lobe: the integrand is positive and, for alpha < 1 exponents, has a
    // t^alpha derivative kink at 0 that adaptive bisection grades into.
    const double head =
        adaptive_simpson(integrand, 0.0, x, lobe, integrand(lobe), quad.rel_tol * 0.1,
                         quad.head_depth);

    // Tail lobes alternate in sign with |a_j| decreasing (cf(t)/t decreasing),
    // so repeated averaging of the partial sums converges geometrically even
    // when reaching |cf(T)|/T < tail_tol directly would need ~1e9 lobes.
    const int direct = 8; // sum the first few lobes verbatim
    const auto tail_sum = [&](int n_lobes, double& residual) {
        std::vector<double> s;
        s.reserve(static_cast<std::size_t>(n_lobes - direct));
        double sum = head;
        for (int j = 1; j <= n_lobes; ++j) {
            sum += gl16(integrand, static_cast<double>(j) * lobe,
                        static_cast<double>(j + 1) * lobe);
            if (j > direct) s.push_back(sum);
        }
        double prev = s[0];
        while (s.size() > 1) {
            prev = s[0];
            for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
            s.pop_back();
        }
        residual = std::abs(s[0] - prev);
        return s[0];
    };

    int n_lobes = std::max(quad.lobes, 16);
    double residual = 0.0;
    double integral = tail_sum(n_lobes, residual);
    while (residual > quad.rel_tol && n_lobes < 512) {
        n_lobes *= 2;
        integral = tail_sum(n_lobes, residual);
    }
    // Truncation accounting: once |cf(T)|/T is under tail_tol the first
    // omitted lobe bounds what averaging had to extrapolate; otherwise widen
    // the estimate by the averaging residual itself.
    const double t_last = static_cast<double>(n_lobes + 1) * lobe;
    const double tail_ratio = std::abs(cf(t_last)) / t_last;

    DfValue out;
    out.error = residual + quad.rel_tol * 0.1;
    out.error += tail_ratio > quad.tail_tol ? residual : 2.0 * tail_ratio / x;
    out.value = std::clamp(0.5 + integral / std::numbers::pi, 0.0, 1.0);
    return out;
}

CfInversionTable::CfInversionTable(std::function<double(double)> cf, double scale,
                                   std::size_t half_points, double q_tail,
                                   const QuadratureSpec& quad)
    : q_lo_(q_tail), q_hi_(1.0 - q_tail) {
    if (!(scale > 0.0)) throw std::invalid_argument("CfInversionTable: scale must be positive");
    if (half_points < 8) throw std::invalid_argument("CfInversionTable: too few points");
    if (!(q_tail > 0.0 && q_tail < 0.5))
        throw std::invalid_argument("CfInversionTable: q_tail must lie in (0, 0.5)");

    // Find the positive abscissa reaching the upper quantile.
    double x_hi = scale;
    for (int it = 0; it < 200 && df_from_cf(cf, x_hi, quad).value < q_hi_; ++it) x_hi *= 2.0;

    const double x_lo = x_hi * 1e-9;
    std::vector<double> pos(half_points);
    const double ratio = std::log(x_hi / x_lo) / static_cast<double>(half_points - 1);
    for (std::size_t i = 0; i < half_points; ++i)
        pos[i] = x_lo * std::exp(ratio * static_cast<double>(i));

    std::vector<double> fpos(half_points);
    for (std::size_t i = 0; i < half_points; ++i) {
        const DfValue v = df_from_cf(cf, pos[i], quad);
        fpos[i] = v.value;
        max_quad_error_ = std::max(max_quad_error_, v.error);
    }

    // Mirror: the CF is even, so F(-x) = 1 - F(x).
    x_.reserve(2 * half_points + 1);
    f_.reserve(2 * half_points + 1);
    for (std::size_t i = half_points; i-- > 0;) {
        x_.push_back(-pos[i]);
        f_.push_back(1.0 - fpos[i]);
    }
    x_.push_back(0.0);
    f_.push_back(0.5);
    for (std::size_t i = 0; i < half_points; ++i) {
        x_.push_back(pos[i]);
        f_.push_back(fpos[i]);
    }

    // Monotonize; anything worse than quadrature noise means the inversion
    // itself failed and the table must not be used.
    for (std::size_t i = 1; i < f_.size(); ++i) {
        if (f_[i] < f_[i - 1] - 1e-6)
            throw std::runtime_error("CfInversionTable: d.f. values non-monotone beyond tolerance");
        f_[i] = std::max(f_[i], f_[i - 1]);
        max_cell_mass_ = std::max(max_cell_mass_, f_[i] - f_[i - 1]);
    }
}

double CfInversionTable::quantile(double u) const {
    u = std::clamp(u, q_lo_, q_hi_);
    auto it = std::upper_bound(f_.begin(), f_.end(), u);
    if (it == f_.begin()) return x_.front();
    if (it == f_.end()) return x_.back();
    const std::size_t hi = static_cast<std::size_t>(it - f_.begin());
    const std::size_t lo = hi - 1;
    const double df = f_[hi] - f_[lo];
    if (df <= 0.0) return x_[lo];
    return x_[lo] + (u - f_[lo]) / df * (x_[hi] - x_[lo]);
}

void CfInversionTable::write_csv(std::ostream& out) const {
    out << "x,F\n";
    for (std::size_t i = 0; i < x_.size(); ++i)
        out << format_g17(x_[i]) << ',' << format_g17(f_[i]) << '\n';
}

} // namespace harrisar1
