#ifndef MFSAI_RNG_HPP
#define MFSAI_RNG_HPP

#include <cstdint>
#include <random>

namespace mfsai::detail {

/// Uniform double in [0, 1) mapped directly from the engine's 64-bit output.
/// std::uniform_real_distribution is not reproducible across standard
/// libraries; this mapping is, and seeded outputs must be bit-stable.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace mfsai::detail

#endif
