#pragma once

#include <cstdint>
#include <random>

namespace markovlab {

std::uint64_t splitmix64(std::uint64_t x);

// Seed for task `index` of stream `stream` under the user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();        // [0, 1)
    double uniform_open();   // (0, 1)
    double normal();         // polar Box-Muller
    double gamma(double shape, double scale);  // Marsaglia-Tsang
    double chi(double dof);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

namespace streams {
inline constexpr std::uint64_t de = 1;
inline constexpr std::uint64_t gue = 2;
inline constexpr std::uint64_t unimodular = 3;
inline constexpr std::uint64_t plancherel = 4;
inline constexpr std::uint64_t pairs = 5;
inline constexpr std::uint64_t jacobi = 6;
}  // namespace streams

}  // namespace markovlab
