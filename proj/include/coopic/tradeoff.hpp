#pragma once

#include <utility>
#include <vector>

#include "coopic/network.hpp"
#include "coopic/types.hpp"

namespace coopic {

/// Optimal per-user DoF at average backhaul load alpha for even K:
///   min{ M, (M + K*alpha / (2(K-1))) / 2 }.
/// Throws OddK for odd K.
double tradeoff_even(int K, int M, double alpha);

struct OddBounds {
    double lower = 0.0;  // achievable
    double upper = 0.0;  // converse
};

/// Per-user DoF bounds at load alpha for odd K >= 3:
///   lower = min{ M, (M + K*alpha / (2(K-1))) / 2 }
///   upper = min{ M, (K+1)(M + alpha/2) / (2K) }.
/// Throws EvenK for even K.
OddBounds tradeoff_odd(int K, int M, double alpha);

/// Large-network limit of the trade-off curve: min{ M, M/2 + alpha/4 }.
double tradeoff_asymptotic(int M, double alpha);

/// Minimum load at which the converse permits full DoF M per user:
/// 2M(K-1)/(K+1), the full-DoF corner of the odd-K upper bound.
double alpha_min_converse(int K, int M);

/// Sum-DoF bounds of a general two-user channel with one-directional cooperation
/// capacities: returns
///   bound1 = min{N1, (M1-N2)+} + min{N2, M1+M2} + cB12
///   bound2 = min{N2, (M2-N1)+} + min{N1, M1+M2} + cB21.
std::pair<double, double> two_user_region_bounds(const TwoUserConfig& config);

/// Optimal per-user DoF of the two-user channel with N_i = M_i at load alpha:
///   min{ M1+M2, alpha + max(M1,M2) } / 2.
double two_user_tradeoff(int M1, int M2, double alpha);

/// Upper bound on the total DoF from one bipartition of the users into group1 and
/// its complement: both groups fully cooperate internally for free, the channel
/// collapses to a two-user channel whose cross-group cooperation capacities are the
/// sums of the individual link capacities, and the two resulting sum-DoF bounds are
/// averaged. Throws EmptyPartition when group1 is empty or contains every user.
double partition_bound(int K, int M, const BackhaulGraph& backhaul, const std::vector<int>& group1);

/// Per-user converse from enumerating all balanced bipartitions (|group1| = K/2 for
/// even K, (K-1)/2 for odd K), averaging their partition bounds, dividing by K and
/// capping at the single-user bound M. For uniform capacities this collapses to the
/// closed-form curves. Throws LimitExceeded for K above the limit.
double converse_enumerate(int K, int M, const BackhaulGraph& backhaul, int exhaustive_limit = 14);

/// Lower bounds on the backhaul loads of any full-DoF centralized scheme:
/// every cooperating node must send and receive load M, and the central processor
/// must receive load M(K-1). Returned as (per_node_min, central_min).
std::pair<double, double> claims_load_lower_bounds(int K, int M);

struct TradeoffPoint {
    double alpha = 0.0;
    double dof_lower = 0.0;
    double dof_upper = 0.0;
};

/// Sampled trade-off boundary. Alphas are strictly increasing, lower <= upper
/// everywhere, and both columns are nondecreasing, concave and capped at M.
struct TradeoffCurve {
    std::vector<TradeoffPoint> points;
};

/// Samples the trade-off curve at `steps` evenly spaced loads in [0, alpha_max].
/// For even K the lower and upper columns coincide.
TradeoffCurve sample_tradeoff_curve(int K, int M, double alpha_max, int steps);

}  // namespace coopic
