#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stlab {

// Deterministic PRNG used everywhere randomness appears. splitmix64 is tiny,
// fast, and identical on every platform, which keeps report output bit-stable
// for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (platform independent, unlike
    // std::normal_distribution)
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double uized = 0.0;
        do {
            uized = uniform();
        } while (uized <= 0.0);
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(uized));
        spare_ = r * std::sin(2.0 * M_PI * v);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * v);
    }

    // small signed integer in [-range, range], handy for exact-arithmetic tests
    int small_int(int range) {
        return static_cast<int>(next_u64() % (2 * range + 1)) - range;
    }

    // derive an independent stream, e.g. one per trial or per suite case
    Rng fork(std::uint64_t tag) const {
        Rng child(state_ ^ (0xa0761d6478bd642fULL * (tag + 1)));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Pairwise (cascade) summation: deterministic and far more accurate than a
// running sum for the long alternating series produced by permutation sums.
inline double pairwise_sum(std::vector<double>& terms) {
    if (terms.empty()) return 0.0;
    std::size_t n = terms.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i)
            terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2 == 1) terms[half] = terms[n - 1];
        n = half + n % 2;
    }
    return terms[0];
}

inline double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// log Gamma(n/2) for integer n >= 1, by exact recursion from Gamma(1/2) and
// Gamma(1). Only half-integers are ever needed for sphere volumes.
inline double log_gamma_half(int twice_x) {
    if (twice_x < 1) throw std::invalid_argument("log_gamma_half: argument < 1/2");
    if (twice_x == 1) return 0.5 * std::log(M_PI);  // Gamma(1/2) = sqrt(pi)
    if (twice_x == 2) return 0.0;                   // Gamma(1) = 1
    // Gamma(x) = (x-1) Gamma(x-1)
    return std::log(0.5 * (twice_x - 2)) + log_gamma_half(twice_x - 2);
}

// Volume of the unit k-sphere S^k (as a k-dimensional manifold):
// vol(S^k) = 2 pi^{(k+1)/2} / Gamma((k+1)/2), vol(S^0) = 2.
inline double sphere_volume(int k) {
    if (k < 0) throw std::invalid_argument("sphere_volume: negative dimension");
    return 2.0 * std::exp(0.5 * (k + 1) * std::log(M_PI) - log_gamma_half(k + 1));
}

// Volume of the unit ball D^m: pi^{m/2} / Gamma(m/2 + 1).
inline double ball_volume(int m) {
    if (m < 0) throw std::invalid_argument("ball_volume: negative dimension");
    return std::exp(0.5 * m * std::log(M_PI) - log_gamma_half(m + 2));
}

}  // namespace stlab
