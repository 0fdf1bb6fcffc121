#include "harrisar1/lattice_pmf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "harrisar1/io.hpp"

namespace harrisar1 {

double LatticePmf::table_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

double LatticePmf::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        m += weights[i] * static_cast<double>(value_at(i));
    return m;
}

void LatticePmf::validate() const {
    if (stride <= 0) throw std::invalid_argument("LatticePmf: stride must be positive");
    for (double w : weights)
        if (w < -1e-12 || !std::isfinite(w))
            throw std::invalid_argument("LatticePmf: negative or non-finite weight");
    if (truncation_mass < -1e-12)
        throw std::invalid_argument("LatticePmf: negative truncation mass");
    if (std::abs(table_mass() + truncation_mass - 1.0) > 1e-12)
        throw std::invalid_argument("LatticePmf: mass does not sum to 1");
}

std::int64_t LatticePmf::sample(RandomStream& rng) const {
    if (truncation_mass >= 1e-9)
        throw std::runtime_error(
            "LatticePmf::sample: truncation mass >= 1e-9; rebuild with a larger n_max");
    const double u = rng.uniform01() * table_mass();
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return value_at(i);
    }
    // Rounding pushed u past the last cumulative value.
    for (std::size_t i = weights.size(); i-- > 0;)
        if (weights[i] > 0.0) return value_at(i);
    throw std::runtime_error("LatticePmf::sample: empty table");
}

void LatticePmf::write_csv(std::ostream& os) const {
    os << "value,probability\n";
    for (std::size_t i = 0; i < weights.size(); ++i)
        os << value_at(i) << ',' << format_g17(weights[i]) << '\n';
}

namespace {
std::map<std::int64_t, double> as_map(const LatticePmf& p) {
    std::map<std::int64_t, double> m;
    for (std::size_t i = 0; i < p.weights.size(); ++i)
        if (p.weights[i] != 0.0) m[p.value_at(i)] += p.weights[i];
    return m;
}
} // namespace

double total_variation(const LatticePmf& p, const LatticePmf& q) {
    auto mp = as_map(p), mq = as_map(q);
    double sum = 0.0;
    for (const auto& [v, w] : mp) {
        auto it = mq.find(v);
        sum += std::abs(w - (it == mq.end() ? 0.0 : it->second));
    }
    for (const auto& [v, w] : mq)
        if (!mp.count(v)) sum += std::abs(w);
    return 0.5 * (sum + p.truncation_mass + q.truncation_mass);
}

LatticePmf convolve(const LatticePmf& p, const LatticePmf& q, std::int64_t max_value) {
    LatticePmf out;
    out.offset = p.offset + q.offset;
    out.stride = std::gcd(p.stride, q.stride);
    const std::int64_t hi = std::min<std::int64_t>(
        max_value, p.value_at(p.weights.empty() ? 0 : p.weights.size() - 1) +
                       q.value_at(q.weights.empty() ? 0 : q.weights.size() - 1));
    if (hi < out.offset) {
        out.weights.clear();
        out.truncation_mass = 1.0;
        return out;
    }
    const std::size_t n = static_cast<std::size_t>((hi - out.offset) / out.stride) + 1;
    out.weights.assign(n, 0.0);
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (p.weights[i] == 0.0) continue;
        for (std::size_t j = 0; j < q.weights.size(); ++j) {
            const std::int64_t v = p.value_at(i) + q.value_at(j);
            if (v > hi) break;
            out.weights[static_cast<std::size_t>((v - out.offset) / out.stride)] +=
                p.weights[i] * q.weights[j];
        }
    }
    out.truncation_mass = std::max(0.0, 1.0 - out.table_mass());
    return out;
}

} // namespace harrisar1
