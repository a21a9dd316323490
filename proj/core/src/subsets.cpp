#include "permstat/subsets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

SubsetProfile profile_subset(std::span<const unsigned> subset, unsigned n) {
  SubsetProfile profile;
  profile.universe_n = n;
  profile.elements.assign(subset.begin(), subset.end());
  std::sort(profile.elements.begin(), profile.elements.end());
  for (std::size_t k = 0; k < profile.elements.size(); ++k) {
    const unsigned e = profile.elements[k];
    if (e < 1 || e + 1 > n) {
      throw DomainError("subset element " + std::to_string(e) + " outside [1, " +
                        std::to_string(n > 0 ? n - 1 : 0) + "]");
    }
    if (k > 0 && profile.elements[k - 1] == e) {
      throw DomainError("subset element " + std::to_string(e) + " repeated");
    }
  }

  for (std::size_t k = 0; k < profile.elements.size(); ++k) {
    if (k == 0 || profile.elements[k] != profile.elements[k - 1] + 1) {
      profile.run_lengths.push_back(1);
    } else {
      ++profile.run_lengths.back();
    }
  }
  for (unsigned len : profile.run_lengths) {
    if (len >= 2) profile.type.push_back(len - 1);
  }
  std::sort(profile.type.begin(), profile.type.end(), std::greater<>());
  profile.irregularity = std::accumulate(profile.type.begin(), profile.type.end(), 0u);
  profile.run_count = static_cast<unsigned>(profile.run_lengths.size());
  return profile;
}

BigInt count_subsets_of_type(unsigned n, unsigned m, const Partition& type) {
  unsigned z = 0;
  std::map<unsigned, unsigned> multiplicity;
  for (unsigned part : type) {
    if (part == 0) throw DomainError("partition parts must be positive");
    z += part;
    ++multiplicity[part];
  }
  const auto rho = static_cast<unsigned>(type.size());
  if (m < z + rho) return 0;
  if (n < 1) return 0;
  const unsigned runs = m - z;
  // Choose which runs get which lengths, then the gap lengths between runs.
  BigInt ways = factorial(runs);
  for (const auto& [part, u] : multiplicity) ways /= factorial(u);
  ways /= factorial(runs - rho);
  return ways * binomial(static_cast<std::int64_t>(n) - m, runs);
}

std::vector<Partition> partitions_of(unsigned z) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(z, z);
  return out;
}

std::vector<unsigned> canonical_subset(unsigned m, const Partition& type) {
  const unsigned z = std::accumulate(type.begin(), type.end(), 0u);
  if (m < z + type.size()) {
    throw DomainError("no " + std::to_string(m) + "-subset has a type with z = " +
                      std::to_string(z) + " and " + std::to_string(type.size()) + " parts");
  }
  std::vector<unsigned> subset;
  unsigned next = 1;
  for (unsigned part : type) {
    for (unsigned k = 0; k <= part; ++k) subset.push_back(next++);
    ++next;
  }
  while (subset.size() < m) {
    subset.push_back(next);
    next += 2;
  }
  return subset;
}

}  // namespace permstat
