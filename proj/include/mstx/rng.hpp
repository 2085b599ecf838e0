#ifndef MSTX_RNG_HPP
#define MSTX_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mstx {

// Philox4x32-10 counter-based generator. Each (seed, stream) pair is an
// independent deterministic stream, so draw i of a sample can use stream i
// and be generated in parallel by index partitioning.
class Philox {
  public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (index_ == 4) {
            generate_block();
            index_ = 0;
        }
        return block_[index_++];
    }

    // Uniform double in (0, 1), 53 random bits.
    double next_uniform() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        const std::uint64_t bits = (hi << 21) ^ (lo >> 6);  // 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    // Standard normal, Box-Muller; pairs are cached.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Gamma(alpha, 1), Marsaglia-Tsang squeeze; alpha < 1 boosted via
    // Gamma(alpha+1) * U^{1/alpha}.
    double next_gamma(double alpha) {
        if (alpha < 1.0) {
            const double u = next_uniform();
            return next_gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double t;
            do {
                x = next_normal();
                t = 1.0 + c * x;
            } while (t <= 0.0);
            const double g = t * t * t;
            const double u = next_uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * g;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - g + std::log(g))) return d * g;
        }
    }

    double next_chi_squared(double v) { return 2.0 * next_gamma(0.5 * v); }

  private:
    static std::uint32_t mul_hi(std::uint32_t a, std::uint32_t b, std::uint32_t* lo) {
        const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
        *lo = static_cast<std::uint32_t>(prod);
        return static_cast<std::uint32_t>(prod >> 32);
    }

    void generate_block() {
        std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
        std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
        std::uint32_t c2 = stream_lo_;
        std::uint32_t c3 = stream_hi_;
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, lo1;
            const std::uint32_t hi0 = mul_hi(0xD2511F53u, c0, &lo0);
            const std::uint32_t hi1 = mul_hi(0xCD9E8D57u, c2, &lo1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_[0] = c0;
        block_[1] = c1;
        block_[2] = c2;
        block_[3] = c3;
        ++counter_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t counter_ = 0;
    std::uint32_t block_[4] = {};
    int index_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mstx

#endif
