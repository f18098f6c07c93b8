#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace vknot {

// Seeded generator with portable sampling: the engine's output sequence is
// fixed by the standard, and the helpers below avoid the library-specific
// distribution classes so that seeds reproduce across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n <= 1)
            return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = eng_();
        while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    bool coin() { return (eng_() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace vknot
