#pragma once
// Deterministic randomness. mt19937_64 is bit-exact across platforms; bounded
// draws use rejection (std::uniform_int_distribution is not portable).

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace eqlc {

struct rng {
    std::mt19937_64 gen;
    explicit rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t next() { return gen(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng::below: zero bound");
        std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = gen();
            if (r >= reject) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    bool coin() { return next() & 1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below_int(i + 1)]);
    }

    // random size-r subset of [0,n)
    std::vector<int> sample(int n, int r) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        shuffle(pool);
        pool.resize(r);
        return pool;
    }
};

}  // namespace eqlc
