#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permstat/exact_rational.hpp"

namespace permstat {

// Integer partition, parts in non-increasing order.
using Partition = std::vector<unsigned>;

// Run structure of a subset I of [n-1]. The type is the partition whose parts
// are (run length - 1) over runs of length at least two; the irregularity z
// is the sum of the type, and the run count is c = |I| - z.
struct SubsetProfile {
  unsigned universe_n = 0;
  std::vector<unsigned> elements;
  std::vector<unsigned> run_lengths;
  Partition type;
  unsigned irregularity = 0;
  unsigned run_count = 0;

  unsigned size() const noexcept { return static_cast<unsigned>(elements.size()); }
  // rho: number of parts of the type.
  unsigned type_parts() const noexcept { return static_cast<unsigned>(type.size()); }
};

// Elements must be distinct and lie in [1, n-1]; order does not matter.
SubsetProfile profile_subset(std::span<const unsigned> subset, unsigned n);

// Number of m-subsets of [n-1] whose type is `type`:
//   multinomial(m - z; u_1, ..., u_z, m - z - rho) * C(n - m, m - z)
// where u_i counts the parts equal to i. Zero when m < z + rho.
BigInt count_subsets_of_type(unsigned n, unsigned m, const Partition& type);

// All partitions of z, each in non-increasing order; {{}} for z = 0.
std::vector<Partition> partitions_of(unsigned z);

// Smallest subset of [1, ...] with m elements and the given type, laid out as
// runs of length part+1 followed by singletons, one gap between runs.
std::vector<unsigned> canonical_subset(unsigned m, const Partition& type);

}  // namespace permstat
