#pragma once

#include <cstdint>
#include <vector>

#include "coopic/graph.hpp"
#include "coopic/network.hpp"
#include "coopic/types.hpp"

namespace coopic {

/// Numeric rank: the number of singular values above rel_tol times the largest one.
/// The all-zero (or empty) matrix has rank 0. Throws NonFinite on NaN/Inf entries,
/// InvalidArgument for rel_tol outside (0, 1). Accepts any dense complex matrix or
/// block view without copying.
int numeric_rank(const Eigen::Ref<const CMat>& matrix, double rel_tol = 1e-9);

struct RankTrialViolation {
    int trial = 0;
    int observed_rank = 0;
    int full_rank = 0;         // M * min(|tx_set|, |rx_set|)
    bool matching_saturates = false;
};

struct RankConsistency {
    bool consistent = true;
    int trials = 0;
    std::vector<RankTrialViolation> violations;
};

/// Checks that the bipartite matching verdict predicts the numeric rank of sampled
/// block submatrices: over `trials` independent draws, the |rx_set|*M x |tx_set|*M
/// submatrix has full rank exactly when a matching saturates the smaller side.
/// The antenna count M may differ from the topology's; only its adjacency is used.
RankConsistency matching_predicts_rank(const NetworkTopology& topology, const std::vector<int>& tx_set,
                                       const std::vector<int>& rx_set, int M, int trials,
                                       std::uint64_t seed);

struct ConditionVerdict {
    bool holds = false;
    int spot_checks = 0;
    int spot_violations = 0;  // disagreements between matching verdict and sampled rank
};

/// Half-size submatrix rank condition (condition "b" of the verify-conditions
/// triple): for every pair of subset sizes l1, l2 in {ceil(K/2), floor(K/2)} with
/// l1 + l2 >= K, every transmitter subset of size l1 and receiver subset of size l2
/// admit a matching saturating the smaller side, so the corresponding channel
/// submatrix is full rank almost surely. The verdict is combinatorial; `trials`
/// random subsets are additionally spot-checked against sampled numeric ranks.
ConditionVerdict check_condition_b(const NetworkTopology& topology, int trials, std::uint64_t seed,
                                   int exhaustive_limit = kDefaultExhaustiveLimit);

/// Non-degenerate direct and cross channel condition (condition "c"): for every
/// user set S with |S| in {ceil(K/2), floor(K/2)}, both the direct block (S -> S)
/// and the cross block (S -> complement) admit saturating matchings.
ConditionVerdict check_condition_c(const NetworkTopology& topology, int trials, std::uint64_t seed,
                                   int exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace coopic
