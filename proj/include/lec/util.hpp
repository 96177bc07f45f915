#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace lec {

// Counter-based splittable generator. Every node derives an independent
// stream from (global seed, node id, tag) so replays are bit-exact.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound must be > 0.
    std::uint64_t bounded(std::uint64_t bound) {
        // Rejection-free modulo is fine here; streams are long and bounds small.
        return next() % bound;
    }

    bool coin() { return (next() & 1ULL) != 0; }

    double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

private:
    std::uint64_t state_;
};

inline std::uint64_t mixSeed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mixSeed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mixSeed(mixSeed(a, b), c);
}

// Messages are opaque byte strings; these helpers give programs a fixed
// little-endian integer encoding.
inline void pushI64(std::string& msg, std::int64_t v) {
    char buf[8];
    std::memcpy(buf, &v, 8);
    msg.append(buf, 8);
}

inline std::int64_t readI64(const std::string& msg, std::size_t index) {
    std::int64_t v;
    std::memcpy(&v, msg.data() + index * 8, 8);
    return v;
}

inline std::size_t i64Count(const std::string& msg) { return msg.size() / 8; }

inline bool isPrime(long x) {
    if (x < 2) return false;
    for (long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

inline long nextPrimeAtLeast(long x) {
    long p = x < 2 ? 2 : x;
    while (!isPrime(p)) ++p;
    return p;
}

}  // namespace lec
