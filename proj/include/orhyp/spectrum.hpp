#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orhyp/int_matrix.hpp"

namespace orhyp {

// Pairing tolerance for eigenvalue comparisons and the zero threshold.
inline constexpr double kSpectralTolerance = 1e-8;

struct JacobiOptions {
    double tolerance = 1e-10;  // stop when the off-diagonal Frobenius norm drops below
    int max_sweeps = 100;
};

// Real eigenvalues of a symmetric matrix, sorted so that
// values[0] = lambda_max >= ... >= values[n-1] = lambda_min.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values, double zero_tolerance = kSpectralTolerance);

    const std::vector<double>& values() const noexcept { return values_; }
    double zero_tolerance() const noexcept { return zero_tolerance_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    // Throw domain_error on an empty spectrum.
    double max() const;
    double min() const;
    double sum() const noexcept;

    // Values with |lambda| >= zero tolerance, still descending.
    std::vector<double> nonzero() const;

private:
    std::vector<double> values_;
    double zero_tolerance_ = kSpectralTolerance;
};

// Cyclic Jacobi rotations. Throws domain_error for non-square or
// non-symmetric input and convergence_error when max_sweeps is exhausted or
// the eigenvalue sum drifts from the trace by more than 1e-8 * n.
Spectrum symmetric_eigenvalues(const IntMatrix& m, const JacobiOptions& options = {});
Spectrum symmetric_eigenvalues(std::span<const double> row_major, std::size_t n, const JacobiOptions& options = {});

// Multisets equal after sorting, pairwise within tolerance.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tolerance = kSpectralTolerance);

// Strips |lambda| < zero tolerance from both sides, then compares as spectra_equal.
bool nonzero_spectra_equal(const Spectrum& a, const Spectrum& b, double tolerance = kSpectralTolerance);

// Fixed 6-decimal rendering of a single eigenvalue; tiny values print as 0.
std::string format_eigenvalue(double value);

// One value per line.
std::string format_spectrum(const Spectrum& s);

} // namespace orhyp
