#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lexalign {

/// Derives a child seed for a named random stream. mt19937_64 plus the
/// hand-rolled draws below keep every sampled quantity reproducible across
/// standard-library implementations, so a recorded root seed replays a run
/// exactly.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform draw in the open interval (0, 1).
    double uniform01();

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller.
    double gaussian();

    /// k distinct indices drawn uniformly from {0..population-1}, in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t k);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace lexalign
