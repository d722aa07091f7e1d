#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace folia {

// All "generic" choices flow through this generator. The stream name keeps
// draws for different purposes independent of each other under one seed.
// Identifier reported alongside every seeded result: "mt19937_64/v1".
class Rng {
public:
    static constexpr const char* kName = "mt19937_64/v1";

    explicit Rng(std::uint64_t seed, const std::string& stream = "")
        : engine_(seed ^ fnv1a(stream)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi], deterministic across platforms
    // (uniform_int_distribution is not portable, so we roll our own).
    long uniform(long lo, long hi);

    // Uniform nonzero integer in [-bound, bound].
    long nonzero(long bound);

private:
    static std::uint64_t fnv1a(const std::string& s);
    std::mt19937_64 engine_;
};

} // namespace folia
