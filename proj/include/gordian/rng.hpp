#ifndef GORDIAN_RNG_HPP
#define GORDIAN_RNG_HPP

#include <cstdint>
#include <random>

namespace gordian {

/// Deterministic seeded random source. The mt19937_64 stream is fixed by
/// the C++ standard and the bounded draw uses plain rejection sampling, so
/// identical seeds produce identical draws on every platform. Audit reports
/// carry kAlgorithmId so runs can be reproduced.
class SeededRng {
public:
    static constexpr const char* kAlgorithmId = "mt19937_64/rejection-v1";

    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n), unbiased via rejection. n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace gordian

#endif  // GORDIAN_RNG_HPP
