#pragma once

#include <cstdint>
#include <vector>

namespace fvw {

// SplitMix64. Chosen because the output sequence is fully determined by the
// seed across platforms, unlike the std distribution adaptors.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; modulo bias is irrelevant at desk-scale n
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // inclusive range
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    template <class T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

    // per-case seed derivation: suites key every case by index so that the
    // result is independent of scheduling
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x517cc1b727220a95ull * (index + 1)));
        return r.next();
    }

  private:
    std::uint64_t state_;
};

} // namespace fvw
