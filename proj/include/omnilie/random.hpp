#pragma once

#include "omnilie/exactla.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace omnilie {

/// Seeded generator. Streams are keyed by (seed, tags...) so a parallel
/// sweep gets the same draws for item i no matter which thread runs it.
class Rng {
public:
    explicit Rng(std::initializer_list<std::uint64_t> key)
    {
        std::vector<std::uint32_t> words;
        for (auto k : key) {
            words.push_back(static_cast<std::uint32_t>(k));
            words.push_back(static_cast<std::uint32_t>(k >> 32));
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    /// Numerator in [-9, 9], denominator in [1, 4].
    Rat small_rat()
    {
        Rat r(static_cast<long>(uniform(-9, 9)), static_cast<unsigned long>(uniform(1, 4)));
        r.canonicalize();
        return r;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace omnilie
