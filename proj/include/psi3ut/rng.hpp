#pragma once

#include <cstdint>
#include <vector>

#include "psi3ut/dyadic.hpp"

namespace psi3ut {

// Counter-based generator: output i is a bit mix of (seed, i). There is no
// hidden state beyond the counter, so streams are reproducible across
// platforms and independent draws can be sliced off anywhere.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return mix(seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    // Uniform integer in [0, 2^nbits).
    Integer next_bits(unsigned nbits) {
        unsigned nwords = (nbits + 63) / 64;
        std::vector<std::uint64_t> words(nwords);
        for (auto& w : words) w = next_u64();
        Integer r;
        // Fixed word/byte order keeps the stream identical across platforms.
        mpz_import(r.get_mpz_t(), nwords, -1, sizeof(std::uint64_t), -1, 0, words.data());
        mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), nbits);
        return r;
    }

    Z2Residue next_residue(unsigned mod2exp) { return {next_bits(mod2exp), mod2exp}; }

    Z2Residue next_odd_residue(unsigned mod2exp) {
        Integer v = next_bits(mod2exp);
        v |= 1;
        return {std::move(v), mod2exp};
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }
};

} // namespace psi3ut
