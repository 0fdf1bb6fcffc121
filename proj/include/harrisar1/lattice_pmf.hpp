#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "harrisar1/rng.hpp"

namespace harrisar1 {

/// Finite table of a lattice distribution: probability weights[i] sits on the
/// value offset + stride*i.  Mass not captured by the table is recorded in
/// truncation_mass, so weights.sum() + truncation_mass == 1 within 1e-12.
struct LatticePmf {
    std::int64_t offset = 0;
    std::int64_t stride = 1;
    std::vector<double> weights;
    double truncation_mass = 0.0;

    std::int64_t value_at(std::size_t i) const {
        return offset + stride * static_cast<std::int64_t>(i);
    }
    double table_mass() const;
    double mean() const;

    /// Throws std::invalid_argument if any weight is negative (beyond -1e-12),
    /// or the total is off from 1 by more than 1e-12.
    void validate() const;

    /// Inverse-CDF draw on the lattice.  Requires truncation_mass < 1e-9;
    /// throws std::runtime_error telling the caller to enlarge the table
    /// otherwise.
    std::int64_t sample(RandomStream& rng) const;

    /// CSV with header "value,probability".
    void write_csv(std::ostream& os) const;
};

/// 0.5 * sum |p_i - q_i| over the union of supports, counting each table's
/// truncated tail against the other at full weight.
double total_variation(const LatticePmf& p, const LatticePmf& q);

/// Convolution of two tables, truncated at value <= max_value.  Mass falling
/// beyond max_value moves into truncation_mass.
LatticePmf convolve(const LatticePmf& p, const LatticePmf& q, std::int64_t max_value);

} // namespace harrisar1
