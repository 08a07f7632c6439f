#include "coopic/rank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <Eigen/SVD>

#include "coopic/random.hpp"

namespace coopic {

int numeric_rank(const Eigen::Ref<const CMat>& matrix, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw InvalidArgument("rel_tol must be in (0, 1)");
    if (matrix.size() == 0) return 0;
    if (!matrix.allFinite()) throw NonFinite("matrix has NaN or infinite entries");
    const Eigen::JacobiSVD<CMat> svd(matrix);
    const auto& sigma = svd.singularValues();
    const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
    if (largest == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > rel_tol * largest) ++rank;
    return rank;
}

namespace {

void check_subset(const NetworkTopology& topology, const std::vector<int>& set, const char* what) {
    for (int id : set)
        if (id < 0 || id >= topology.num_users())
            throw InvalidArgument(std::string(what) + " id out of range: " + std::to_string(id));
}

/// Visits every size-`count` subset of {0..n-1} until the callback returns false.
bool for_each_subset(int n, int count, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> subset(count);
    std::iota(subset.begin(), subset.end(), 0);
    if (count == 0) return visit(subset);
    while (true) {
        if (!visit(subset)) return false;
        int i = count - 1;
        while (i >= 0 && subset[i] == n - count + i) --i;
        if (i < 0) return true;
        ++subset[i];
        for (int j = i + 1; j < count; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::vector<int> random_subset(int n, int count, rng::Stream& stream) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < count; ++i)
        std::swap(pool[i], pool[i + static_cast<int>(stream.below(n - i))]);
    std::vector<int> subset(pool.begin(), pool.begin() + count);
    std::sort(subset.begin(), subset.end());
    return subset;
}

/// One sampled confirmation that the matching verdict predicts the numeric rank of
/// the (rx_set, tx_set) block submatrix. Returns true when they agree.
bool spot_check_rank(const NetworkTopology& topology, const std::vector<int>& tx_set,
                     const std::vector<int>& rx_set, std::uint64_t seed) {
    const int M = topology.num_antennas();
    const int full = M * static_cast<int>(std::min(tx_set.size(), rx_set.size()));
    const bool saturates =
        max_matching(topology, tx_set, rx_set) == static_cast<int>(std::min(tx_set.size(), rx_set.size()));
    const ChannelRealization channel = sample_channel(topology, seed);
    const int rank = numeric_rank(block_submatrix(channel, rx_set, tx_set));
    return (rank == full) == saturates;
}

}  // namespace

RankConsistency matching_predicts_rank(const NetworkTopology& topology, const std::vector<int>& tx_set,
                                       const std::vector<int>& rx_set, int M, int trials,
                                       std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
    if (tx_set.empty() || rx_set.empty()) throw InvalidArgument("node sets must be nonempty");
    check_subset(topology, tx_set, "transmitter");
    check_subset(topology, rx_set, "receiver");
    const NetworkTopology probe = make_topology(topology.num_users(), M, topology.adjacency());

    const int full = M * static_cast<int>(std::min(tx_set.size(), rx_set.size()));
    const bool saturates =
        max_matching(probe, tx_set, rx_set) == static_cast<int>(std::min(tx_set.size(), rx_set.size()));

    RankConsistency report;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        const ChannelRealization channel =
            sample_channel(probe, rng::derive_seed(seed, 0x72616e6bull, static_cast<std::uint64_t>(trial)));
        const int rank = numeric_rank(block_submatrix(channel, rx_set, tx_set));
        if ((rank == full) != saturates) {
            report.consistent = false;
            report.violations.push_back({trial, rank, full, saturates});
        }
    }
    return report;
}

ConditionVerdict check_condition_b(const NetworkTopology& topology, int trials, std::uint64_t seed,
                                   int exhaustive_limit) {
    const int K = topology.num_users();
    if (K > exhaustive_limit)
        throw LimitExceeded("K=" + std::to_string(K) + " above the exhaustive limit " +
                            std::to_string(exhaustive_limit));
    const int lo = K / 2;
    const int hi = (K + 1) / 2;

    std::vector<std::pair<int, int>> families;
    for (int l1 : {hi, lo})
        for (int l2 : {hi, lo})
            if (l1 + l2 >= K && l1 >= 1 && l2 >= 1 &&
                std::find(families.begin(), families.end(), std::make_pair(l1, l2)) == families.end())
                families.push_back({l1, l2});

    ConditionVerdict verdict;
    verdict.holds = true;
    for (const auto& [l1, l2] : families) {
        const bool ok = for_each_subset(K, l1, [&](const std::vector<int>& tx_set) {
            return for_each_subset(K, l2, [&](const std::vector<int>& rx_set) {
                return max_matching(topology, tx_set, rx_set) == std::min(l1, l2);
            });
        });
        if (!ok) {
            verdict.holds = false;
            break;
        }
    }

    rng::Stream stream(rng::derive_seed(seed, 0x636f6e64ull, 0xb));
    for (int t = 0; t < trials; ++t) {
        const auto& [l1, l2] = families[stream.below(families.size())];
        const std::vector<int> tx_set = random_subset(K, l1, stream);
        const std::vector<int> rx_set = random_subset(K, l2, stream);
        ++verdict.spot_checks;
        if (!spot_check_rank(topology, tx_set, rx_set, stream.next_u64())) ++verdict.spot_violations;
    }
    return verdict;
}

ConditionVerdict check_condition_c(const NetworkTopology& topology, int trials, std::uint64_t seed,
                                   int exhaustive_limit) {
    const int K = topology.num_users();
    if (K > exhaustive_limit)
        throw LimitExceeded("K=" + std::to_string(K) + " above the exhaustive limit " +
                            std::to_string(exhaustive_limit));
    const int lo = K / 2;
    const int hi = (K + 1) / 2;
    std::vector<int> sizes{hi};
    if (lo >= 1 && lo != hi) sizes.push_back(lo);

    const auto set_ok = [&](const std::vector<int>& users) {
        std::vector<int> complement;
        for (int i = 0; i < K; ++i)
            if (std::find(users.begin(), users.end(), i) == users.end()) complement.push_back(i);
        const int l = static_cast<int>(users.size());
        if (max_matching(topology, users, users) != l) return false;  // direct block
        if (complement.empty()) return true;
        const int cross_full = static_cast<int>(std::min(users.size(), complement.size()));
        return max_matching(topology, users, complement) == cross_full;  // cross block
    };

    ConditionVerdict verdict;
    verdict.holds = true;
    for (int l : sizes) {
        if (!for_each_subset(K, l, set_ok)) {
            verdict.holds = false;
            break;
        }
    }

    rng::Stream stream(rng::derive_seed(seed, 0x636f6e64ull, 0xc));
    for (int t = 0; t < trials; ++t) {
        const int l = sizes[stream.below(sizes.size())];
        const std::vector<int> users = random_subset(K, l, stream);
        std::vector<int> complement;
        for (int i = 0; i < K; ++i)
            if (std::find(users.begin(), users.end(), i) == users.end()) complement.push_back(i);
        ++verdict.spot_checks;
        bool agree = spot_check_rank(topology, users, users, stream.next_u64());
        if (!complement.empty())
            agree = spot_check_rank(topology, users, complement, stream.next_u64()) && agree;
        if (!agree) ++verdict.spot_violations;
    }
    return verdict;
}

}  // namespace coopic
