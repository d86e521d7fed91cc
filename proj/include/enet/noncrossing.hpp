#pragma once
#include <string>
#include <vector>

#include "enet/matrix.hpp"

namespace enet {

/* blocks of {1..n}; canonical form: each block ascending, blocks by minimum */
struct NonCrossingPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  auto operator<=>(const NonCrossingPartition&) const = default;
};

/* (sigma | dual sigma) on {1..2n}: bar i at 2i-1, tilde i at 2i */
struct MergedPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  auto operator<=>(const MergedPartition&) const = default;
};

struct LagrangianExtension {
  std::vector<std::vector<int>> sub_components;  // disjoint, ascending, within [2n-2]
};

NonCrossingPartition make_partition(int n, std::vector<std::vector<int>> blocks);
bool is_noncrossing(const NonCrossingPartition& p);

std::vector<NonCrossingPartition> enumerate_nc(int n);  // Catalan(n) of them
Integer catalan(int n);

NonCrossingPartition dual(const NonCrossingPartition& sigma);
/* the partition whose dual is the given one */
NonCrossingPartition dual_inverse(const NonCrossingPartition& sigma_tilde);
MergedPartition merge(const NonCrossingPartition& sigma);
NonCrossingPartition sigma_of(const MergedPartition& m);       // odd positions
NonCrossingPartition sigma_tilde_of(const MergedPartition& m); // even positions

bool is_concordant(const IndexSet& I, const NonCrossingPartition& sigma);
bool is_coconcordant(const IndexSet& I, const NonCrossingPartition& sigma);

MergedPartition isolate(const MergedPartition& m, int i);  // i in [2n]

int pairing(const NonCrossingPartition& tau, const NonCrossingPartition& sigma);  // 0 or 1

LagrangianExtension lagrangian_extension(const NonCrossingPartition& sigma);
bool is_lagrangian_concordant(const IndexSet& I, const NonCrossingPartition& sigma);

/* text form "1 4 6|2 3|5" */
std::string partition_str(const NonCrossingPartition& p);
NonCrossingPartition partition_parse(const std::string& text, int n = 0);
std::string lext_str(const LagrangianExtension& e);

}  // namespace enet
