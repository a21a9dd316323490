#include "permstat/sampler.hpp"

#include <numeric>
#include <vector>

#include "permstat/error.hpp"

namespace permstat {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index), engine_(make_engine(seed, stream_index)) {}

std::uint64_t SeededGenerator::bounded(std::uint64_t bound) {
  if (bound == 0) throw DomainError("bounded draw requires a positive bound");
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

void SeededGenerator::shuffle(std::span<std::uint32_t> values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(i));
    std::swap(values[i - 1], values[j]);
  }
}

void sample_permutation_into(std::span<std::uint32_t> values, SeededGenerator& gen) {
  std::iota(values.begin(), values.end(), std::uint32_t{1});
  gen.shuffle(values);
}

Permutation sample_permutation(std::size_t n, SeededGenerator& gen) {
  if (n == 0) throw DomainError("sample_permutation requires n >= 1");
  std::vector<std::uint32_t> values(n);
  sample_permutation_into(values, gen);
  return Permutation::from_trusted(std::move(values));
}

}  // namespace permstat
