#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "harrisar1/lattice_pmf.hpp"

namespace harrisar1 {

// In-place radix-2 Cooley-Tukey; data.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse);

struct PgfExtractOptions {
    std::size_t n_points = 1 << 14;  // power of two
    std::int64_t stride = 1;         // support lives on offset + stride*Z
    std::int64_t offset = 0;
    std::int64_t max_value = -1;     // drop atoms above this value; -1 keeps all
    // Negative coefficients are clamped to zero; anything below fail_floor
    // additionally marks the pgf as not a genuine generating function.
    double fail_floor = -1e-8;
    double zero_cutoff = 1e-13;
};

struct PgfExtractResult {
    LatticePmf pmf;
    bool valid = true;            // false when a coefficient fell below fail_floor
    double min_coefficient = 0;   // most negative raw coefficient seen
    double coefficient_sum = 0;   // raw sum before clamping; equals pgf(1) up to FFT rounding
};

// Recovers lattice probabilities from a pgf restricted to the unit circle.
// The callable must accept any complex s with |s| = 1.
PgfExtractResult pmf_from_pgf(const std::function<std::complex<double>(std::complex<double>)>& pgf,
                              const PgfExtractOptions& opts = {});

// Mass the pgf places outside offset + stride*Z, evaluated exactly from the
// stride-th roots of unity.
double off_lattice_mass(const std::function<std::complex<double>(std::complex<double>)>& pgf,
                        std::int64_t stride, std::int64_t offset);

} // namespace harrisar1
