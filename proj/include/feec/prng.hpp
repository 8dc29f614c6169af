#pragma once

#include <cstdint>
#include <random>

#include "feec/rational.hpp"

namespace feec {

/// Deterministic random scalars for the verification suites. Values are
/// derived from the raw engine output (not std distributions) so identical
/// seeds give identical streams on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    /// Small random rational with numerator in [-max_abs, max_abs] and
    /// denominator in [1, max_den].
    Rational rational(int max_abs = 9, int max_den = 9) {
        return make_rational(uniform(-max_abs, max_abs), uniform(1, max_den));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace feec
