#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coopic/network.hpp"
#include "coopic/types.hpp"

namespace coopic {

/// Per-user rates (bits per channel use) of the centralized zero-forcing scheme:
/// the central processor inverts the super channel matrix, quantizes the precoded
/// signals with unit-variance distortion and forwards them, and the transmit power
/// is scaled so every transmitter meets its average power constraint. Each receiver
/// then sees an interference-free M-antenna link. Throws SingularChannel when the
/// super matrix is numerically rank deficient.
std::vector<double> zf_centralized_rates(const ChannelRealization& channel, double P);

/// Per-user rates of quantize-and-forward receiver cooperation: every receiver
/// except the central one (node 0) forwards its observation with additive
/// quantization noise of the given variance, the central processor decodes all
/// messages jointly, and the sum rate is split evenly across users.
std::vector<double> quantize_forward_rates(const ChannelRealization& channel, double P,
                                           double quantization_variance = 1.0);

/// Sum rate of the fully pooled receiver array (no quantization penalty);
/// quantize_forward_rates degenerates to this when the quantization variance is 0.
double pooled_sum_rate(const ChannelRealization& channel, double P);

/// Least-squares fit of rate against log2(P): the slope estimates DoF.
struct SlopeEstimate {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> power_grid;
    std::vector<double> rates;
};

/// Fits rate_fn over the grid. The grid must have >= 3 strictly increasing positive
/// points spanning at least two decades; throws DegenerateGrid otherwise.
SlopeEstimate fit_dof_slope(const std::function<double(double)>& rate_fn,
                            const std::vector<double>& power_grid);

struct SlopeCheck {
    bool pass = false;
    double measured = 0.0;
    double target = 0.0;
};

/// Verifies the high-SNR slope of log2 det(I_N + P * sum_i H_i H_i^dagger) for
/// independent Gaussian H_i of sizes N x M_i: the slope must be within 5% of
/// min{N, sum M_i} (absolute 0.05 when the target is 0). Rates are averaged over
/// `trials` draws before fitting.
SlopeCheck check_logdet_sum_slope(int N, const std::vector<int>& M_list,
                                  const std::vector<double>& power_grid, int trials,
                                  std::uint64_t seed);

/// Verifies the high-SNR slope of the interference-hardened link
///   log2 det(I_Ni + P H_ii (I_Mi + P H_ji^dagger H_ji)^{-1} H_ii^dagger)
/// against min{Ni, (Mi - Nj)+}, with the same tolerance and averaging rules.
SlopeCheck check_logdet_interference_slope(int Ni, int Mi, int Nj,
                                           const std::vector<double>& power_grid, int trials,
                                           std::uint64_t seed);

enum class CoopScheme { ZfCentralized, QuantizeForward };

/// Per-user backhaul load consumed by either centralized scheme at full DoF:
/// K-1 inbound and K-1 outbound loads of M, normalized by K, i.e. 2M(K-1)/K.
double account_backhaul_load(CoopScheme scheme, int K, int M);

}  // namespace coopic
