#include "coopic/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coopic {

namespace {

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

void check_load(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw InvalidArgument("backhaul load must be finite and >= 0");
}

void check_antennas(int M) {
    if (M < 1) throw InvalidArgument("antennas per node must be >= 1");
}

}  // namespace

double tradeoff_even(int K, int M, double alpha) {
    if (K < 2 || K % 2 != 0) throw OddK("even-K trade-off needs even K >= 2, got " + std::to_string(K));
    check_antennas(M);
    check_load(alpha);
    return std::min<double>(M, 0.5 * (M + K * alpha / (2.0 * (K - 1))));
}

OddBounds tradeoff_odd(int K, int M, double alpha) {
    if (K < 3 || K % 2 == 0) throw EvenK("odd-K trade-off needs odd K >= 3, got " + std::to_string(K));
    check_antennas(M);
    check_load(alpha);
    OddBounds bounds;
    bounds.lower = std::min<double>(M, 0.5 * (M + K * alpha / (2.0 * (K - 1))));
    bounds.upper = std::min<double>(M, (K + 1) * (M + alpha * 0.5) / (2.0 * K));
    return bounds;
}

double tradeoff_asymptotic(int M, double alpha) {
    check_antennas(M);
    check_load(alpha);
    return std::min<double>(M, 0.5 * M + 0.25 * alpha);
}

double alpha_min_converse(int K, int M) {
    if (K < 2) throw InvalidArgument("need K >= 2");
    check_antennas(M);
    return 2.0 * M * (K - 1) / (K + 1);
}

std::pair<double, double> two_user_region_bounds(const TwoUserConfig& config) {
    const auto cfg = make_two_user_config(config.M1, config.N1, config.M2, config.N2, config.cB12,
                                          config.cB21);
    const double bound1 = std::min<double>(cfg.N1, positive_part(cfg.M1 - cfg.N2)) +
                          std::min<double>(cfg.N2, cfg.M1 + cfg.M2) + cfg.cB12;
    const double bound2 = std::min<double>(cfg.N2, positive_part(cfg.M2 - cfg.N1)) +
                          std::min<double>(cfg.N1, cfg.M1 + cfg.M2) + cfg.cB21;
    return {bound1, bound2};
}

double two_user_tradeoff(int M1, int M2, double alpha) {
    if (M1 < 1 || M2 < 1) throw InvalidArgument("antenna counts must be >= 1");
    check_load(alpha);
    return 0.5 * std::min<double>(M1 + M2, alpha + std::max(M1, M2));
}

double partition_bound(int K, int M, const BackhaulGraph& backhaul, const std::vector<int>& group1) {
    check_antennas(M);
    if (backhaul.num_nodes() != K)
        throw InvalidArgument("backhaul graph has " + std::to_string(backhaul.num_nodes()) +
                              " nodes, expected " + std::to_string(K));
    if (group1.empty() || static_cast<int>(group1.size()) >= K)
        throw EmptyPartition("group must be a nonempty proper subset of the users");
    std::vector<bool> in_group1(K, false);
    for (int id : group1) {
        if (id < 0 || id >= K) throw InvalidArgument("user id out of range: " + std::to_string(id));
        if (in_group1[id]) throw InvalidArgument("duplicate user id: " + std::to_string(id));
        in_group1[id] = true;
    }

    const int k1 = static_cast<int>(group1.size());
    const int k2 = K - k1;
    double cross12 = 0.0;  // group 1 -> group 2 aggregate capacity
    double cross21 = 0.0;
    for (const auto& [pair, c] : backhaul.links()) {
        if (in_group1[pair.first] && !in_group1[pair.second]) cross12 += c;
        if (!in_group1[pair.first] && in_group1[pair.second]) cross21 += c;
    }
    return 0.5 * (M * positive_part(k1 - k2) + static_cast<double>(M) * k2 + cross12 +
                  M * positive_part(k2 - k1) + static_cast<double>(M) * k1 + cross21);
}

double converse_enumerate(int K, int M, const BackhaulGraph& backhaul, int exhaustive_limit) {
    if (K < 2) throw InvalidArgument("need K >= 2");
    if (K > exhaustive_limit)
        throw LimitExceeded("K=" + std::to_string(K) + " above the exhaustive limit " +
                            std::to_string(exhaustive_limit));
    check_antennas(M);
    if (backhaul.num_nodes() != K)
        throw InvalidArgument("backhaul graph has " + std::to_string(backhaul.num_nodes()) +
                              " nodes, expected " + std::to_string(K));

    const int group_size = K % 2 == 0 ? K / 2 : (K - 1) / 2;
    double sum = 0.0;
    long count = 0;
    std::vector<int> subset(group_size);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        sum += partition_bound(K, M, backhaul, subset);
        ++count;
        int i = group_size - 1;
        while (i >= 0 && subset[i] == K - group_size + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < group_size; ++j) subset[j] = subset[j - 1] + 1;
    }
    return std::min<double>(M, sum / count / K);
}

std::pair<double, double> claims_load_lower_bounds(int K, int M) {
    if (K < 2) throw InvalidArgument("need K >= 2");
    check_antennas(M);
    return {static_cast<double>(M), static_cast<double>(M) * (K - 1)};
}

TradeoffCurve sample_tradeoff_curve(int K, int M, double alpha_max, int steps) {
    if (steps < 2) throw InvalidArgument("need at least 2 sample steps");
    if (!(alpha_max > 0.0) || !std::isfinite(alpha_max))
        throw InvalidArgument("alpha_max must be finite and > 0");
    TradeoffCurve curve;
    curve.points.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        const double alpha = alpha_max * s / (steps - 1);
        TradeoffPoint point;
        point.alpha = alpha;
        if (K % 2 == 0) {
            point.dof_lower = point.dof_upper = tradeoff_even(K, M, alpha);
        } else {
            const OddBounds bounds = tradeoff_odd(K, M, alpha);
            point.dof_lower = bounds.lower;
            point.dof_upper = bounds.upper;
        }
        curve.points.push_back(point);
    }
    return curve;
}

}  // namespace coopic
