#include "folia/rng.hpp"

namespace folia {

std::uint64_t Rng::fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

long Rng::uniform(long lo, long hi) {
    // Modulo bias is irrelevant here: ranges are tiny against 2^64 and the
    // only contract is determinism.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

long Rng::nonzero(long bound) {
    long v = uniform(1, 2 * bound);
    return v <= bound ? v : bound - v; // 1..bound, then -1..-bound
}

} // namespace folia
