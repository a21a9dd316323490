#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "permstat/permutation.hpp"

namespace permstat {

// Identifies the stream family that produced a sample set. Embedded in every
// trial report so that tables can be regenerated bit for bit.
struct GeneratorMetadata {
  std::string algorithm_id;
  std::uint64_t seed = 0;
  std::uint64_t streams = 1;
};

// Deterministic pseudorandom source. The engine is std::mt19937_64 (fully
// specified by the C++ standard) initialised through std::seed_seq from the
// four 32-bit halves of (seed, stream_index). Bounded draws use Lemire's
// multiply-and-reject method, so results do not depend on the standard
// library's distribution implementations.
//
// Single owner: do not share one generator between threads.
class SeededGenerator {
 public:
  static constexpr std::string_view kAlgorithmId = "mt19937_64+seed_seq+lemire";

  explicit SeededGenerator(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }
  std::string_view algorithm_id() const noexcept { return kAlgorithmId; }

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t bounded(std::uint64_t bound);

  // Fisher-Yates shuffle of `values` in place.
  void shuffle(std::span<std::uint32_t> values);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// Uniform permutation of [n]. Advances `gen`. Throws DomainError for n = 0.
Permutation sample_permutation(std::size_t n, SeededGenerator& gen);

// Refills `values` (size n) with a uniform permutation of [n].
void sample_permutation_into(std::span<std::uint32_t> values, SeededGenerator& gen);

}  // namespace permstat
