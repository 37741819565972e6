#include "orhyp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

#include "orhyp/errors.hpp"

namespace orhyp {

Spectrum::Spectrum(std::vector<double> values, double zero_tolerance)
    : values_(std::move(values)), zero_tolerance_(zero_tolerance) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::max() const {
    if (values_.empty()) throw domain_error("maximum of an empty spectrum");
    return values_.front();
}

double Spectrum::min() const {
    if (values_.empty()) throw domain_error("minimum of an empty spectrum");
    return values_.back();
}

double Spectrum::sum() const noexcept { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::vector<double> Spectrum::nonzero() const {
    std::vector<double> out;
    for (double x : values_)
        if (std::abs(x) >= zero_tolerance_) out.push_back(x);
    return out;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += a[i * n + j] * a[i * n + j];
    return std::sqrt(sum);
}

// Annihilates a(p,q) with a symmetric Schur rotation applied on both sides.
void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
    const double apq = a[p * n + q];
    if (apq == 0.0) return;
    const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a[k * n + p];
        const double akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a[p * n + k];
        const double aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

Spectrum jacobi(std::vector<double> a, std::size_t n, const JacobiOptions& options) {
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];

    for (int sweep = 0;; ++sweep) {
        if (off_diagonal_norm(a, n) < options.tolerance) break;
        if (sweep == options.max_sweeps) {
            throw convergence_error("Jacobi iteration did not converge after " + std::to_string(options.max_sweeps) +
                                    " sweeps (off-diagonal norm " + std::to_string(off_diagonal_norm(a, n)) + ")");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, n, p, q);
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
    Spectrum s(std::move(values));
    const double drift = std::abs(s.sum() - trace);
    if (drift > kSpectralTolerance * static_cast<double>(std::max<std::size_t>(n, 1))) {
        throw convergence_error("eigenvalue sum deviates from the trace by " + std::to_string(drift));
    }
    return s;
}

} // namespace

Spectrum symmetric_eigenvalues(const IntMatrix& m, const JacobiOptions& options) {
    if (!m.square()) throw domain_error("eigenvalues requested for a non-square matrix");
    if (!m.is_symmetric()) throw domain_error("eigenvalues requested for a non-symmetric matrix");
    std::vector<double> a(m.data().begin(), m.data().end());
    return jacobi(std::move(a), m.rows(), options);
}

Spectrum symmetric_eigenvalues(std::span<const double> row_major, std::size_t n, const JacobiOptions& options) {
    if (row_major.size() != n * n) throw domain_error("eigenvalues requested for a non-square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (row_major[i * n + j] != row_major[j * n + i])
                throw domain_error("eigenvalues requested for a non-symmetric matrix");
    return jacobi(std::vector<double>(row_major.begin(), row_major.end()), n, options);
}

namespace {

bool pairwise_close(const std::vector<double>& a, const std::vector<double>& b, double tolerance) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tolerance) return false;
    return true;
}

} // namespace

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tolerance) {
    return pairwise_close(a.values(), b.values(), tolerance);
}

bool nonzero_spectra_equal(const Spectrum& a, const Spectrum& b, double tolerance) {
    return pairwise_close(a.nonzero(), b.nonzero(), tolerance);
}

std::string format_eigenvalue(double value) {
    if (std::abs(value) < 5e-7) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string format_spectrum(const Spectrum& s) {
    std::string out;
    for (double x : s.values()) {
        out += format_eigenvalue(x);
        out += '\n';
    }
    return out;
}

} // namespace orhyp
