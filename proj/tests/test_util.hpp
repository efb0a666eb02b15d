#ifndef GRCERT_TEST_UTIL_HPP
#define GRCERT_TEST_UTIL_HPP

#include <random>
#include <set>
#include <vector>

#include "grcert/linear_code.hpp"

namespace grcert::testutil {

// Independent distance oracle: enumerates every one of the q^k messages
// (no projective shortcut) and takes the minimum nonzero-codeword weight.
inline std::uint32_t naive_min_distance(const LinearCode& c) {
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k(), n = c.n();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= q;
    std::uint32_t best = n;
    std::vector<Fel> word(n);
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::fill(word.begin(), word.end(), 0);
        std::uint64_t rest = msg;
        for (std::uint32_t i = 0; i < k; ++i) {
            const Fel d = static_cast<Fel>(rest % q);
            rest /= q;
            if (d == 0) continue;
            for (std::uint32_t s = 0; s < n; ++s) word[s] = tw.add(word[s], tw.mul(d, c.at(i, s)));
        }
        std::uint32_t w = 0;
        for (Fel x : word) w += (x != 0);
        best = std::min(best, w);
    }
    return best;
}

// All codewords of a small code, as a set (used for brute-force membership
// oracles).
inline std::set<std::vector<Fel>> all_codewords(const LinearCode& c) {
    const auto& tw = *c.tower();
    const std::uint32_t q = tw.q(), k = c.k(), n = c.n();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= q;
    std::set<std::vector<Fel>> out;
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        std::vector<Fel> word(n, 0);
        std::uint64_t rest = msg;
        for (std::uint32_t i = 0; i < k; ++i) {
            const Fel d = static_cast<Fel>(rest % q);
            rest /= q;
            if (d == 0) continue;
            for (std::uint32_t s = 0; s < n; ++s) word[s] = tw.add(word[s], tw.mul(d, c.at(i, s)));
        }
        out.insert(std::move(word));
    }
    return out;
}

// Random code of the requested dimension, rejection-sampled to full rank.
inline LinearCode random_code(const std::shared_ptr<const FieldTower>& tower, std::uint32_t n,
                              std::uint32_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, tower->q() - 1);
    for (;;) {
        std::vector<std::vector<Fel>> rows(k, std::vector<Fel>(n));
        for (auto& row : rows)
            for (auto& x : row) x = static_cast<Fel>(dist(rng));
        auto code = LinearCode::from_rows(tower, n, rows);
        if (code.k() == k) return code;
    }
}

inline Multipliers random_multipliers(const std::shared_ptr<const FieldTower>& tower,
                                      std::uint32_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(1, tower->q() - 1);
    Multipliers theta(n);
    for (auto& t : theta) t = static_cast<Fel>(dist(rng));
    return theta;
}

} // namespace grcert::testutil

#endif
