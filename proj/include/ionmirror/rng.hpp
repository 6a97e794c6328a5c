#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ionmirror {

// Seeded gaussian source with a bit-reproducible algorithm. std::mt19937_64
// output is pinned by the standard but std::normal_distribution is not, so
// Box-Muller is spelled out here; the same seed gives the same stream on any
// conforming implementation.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    // uniform on [0, 1) with 53 significant bits
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double next()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ionmirror
