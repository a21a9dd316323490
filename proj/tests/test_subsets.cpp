#include <gtest/gtest.h>

#include <map>

#include "permstat/error.hpp"
#include "permstat/subsets.hpp"

namespace permstat {
namespace {

TEST(Profile, WorkedExample) {
  const std::vector<unsigned> I{3, 4, 6, 7, 8, 10};
  const auto p = profile_subset(I, 12);
  EXPECT_EQ(p.run_lengths, (std::vector<unsigned>{2, 3, 1}));
  EXPECT_EQ(p.type, (Partition{2, 1}));
  EXPECT_EQ(p.irregularity, 3u);
  EXPECT_EQ(p.run_count, 3u);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.type_parts(), 2u);
}

TEST(Profile, OrderIrrelevantAndEmpty) {
  const std::vector<unsigned> a{10, 3, 8, 4, 7, 6};
  EXPECT_EQ(profile_subset(a, 12).type, (Partition{2, 1}));
  const auto e = profile_subset(std::vector<unsigned>{}, 5);
  EXPECT_EQ(e.irregularity, 0u);
  EXPECT_EQ(e.run_count, 0u);
  EXPECT_TRUE(e.type.empty());
}

TEST(Profile, Rejects) {
  EXPECT_THROW(profile_subset(std::vector<unsigned>{0}, 5), DomainError);
  EXPECT_THROW(profile_subset(std::vector<unsigned>{5}, 5), DomainError);
  EXPECT_THROW(profile_subset(std::vector<unsigned>{2, 2}, 5), DomainError);
}

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned z = 0; z < p.size(); ++z) EXPECT_EQ(partitions_of(z).size(), p[z]);
  EXPECT_EQ(partitions_of(4), (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(TypeCounts, MatchBruteForce) {
  for (unsigned n = 2; n <= 12; ++n) {
    const unsigned universe = n - 1;
    std::map<std::pair<unsigned, Partition>, std::uint64_t> tally;
    for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
      const unsigned m = static_cast<unsigned>(__builtin_popcount(mask));
      if (m > 5) continue;
      std::vector<unsigned> I;
      for (unsigned i = 0; i < universe; ++i) {
        if (mask >> i & 1) I.push_back(i + 1);
      }
      ++tally[{m, profile_subset(I, n).type}];
    }
    for (unsigned m = 0; m <= std::min(5u, universe); ++m) {
      BigInt total = 0;
      for (unsigned z = 0; z < std::max(m, 1u); ++z) {
        for (const auto& type : partitions_of(z)) {
          const auto it = tally.find({m, type});
          const std::uint64_t expected = it == tally.end() ? 0 : it->second;
          const BigInt got = count_subsets_of_type(n, m, type);
          EXPECT_EQ(got, expected) << "n=" << n << " m=" << m << " z=" << z;
          total += got;
        }
      }
      EXPECT_EQ(total, binomial(universe, m));
    }
  }
}

TEST(TypeCounts, Degenerate) {
  EXPECT_EQ(count_subsets_of_type(10, 2, {2}), 0);  // a run of three needs three elements
  EXPECT_EQ(count_subsets_of_type(10, 0, {}), 1);
  EXPECT_THROW(count_subsets_of_type(10, 3, {1, 0}), DomainError);
}

TEST(CanonicalSubset, HasRequestedType) {
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned z = 0; z < m; ++z) {
      for (const auto& type : partitions_of(z)) {
        if (m < z + type.size()) continue;
        const auto I = canonical_subset(m, type);
        const auto p = profile_subset(I, I.back() + 1);
        EXPECT_EQ(p.size(), m);
        EXPECT_EQ(p.type, type);
      }
    }
  }
}

}  // namespace
}  // namespace permstat
