#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <string>

namespace pid {

namespace tol {
// Normalization slack accepted on ingestion; inputs inside it are renormalized.
inline constexpr double norm = 1e-9;
// Equality residual / inequality slack for axiom checks, in bits.
inline constexpr double check = 1e-9;
// Reconstruction identities (marginal consistency, row conditionals).
inline constexpr double tight = 1e-12;
// Bit-level identities (do-operation with the distribution's own marginal).
inline constexpr double exact = 1e-15;
// Default smoke ceiling for the continuity probe at its smallest radius, in bits.
inline constexpr double continuity_ceiling = 1e-3;
} // namespace tol

/// Kahan-Babuska-Neumaier compensated accumulator. All tensor reductions go
/// through this with a fixed traversal order (x-major, then y, then z) so
/// residuals are reproducible run to run.
class NeumaierSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) {
    NeumaierSum s;
    for (double v : values) s.add(v);
    return s.value();
}

/// Serializes a double with 17 significant digits, enough to round-trip any
/// binary64 value exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace pid
