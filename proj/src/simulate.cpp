#include "coopic/simulate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "coopic/random.hpp"
#include "coopic/rank.hpp"

namespace coopic {

namespace {

constexpr double kLog2 = 0.6931471805599453;  // ln 2

/// log2 det of a Hermitian positive definite matrix via its eigenvalues.
double log2_det_hermitian(const CMat& matrix) {
    const Eigen::SelfAdjointEigenSolver<CMat> solver(matrix, Eigen::EigenvaluesOnly);
    double out = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        out += std::log(solver.eigenvalues()(i));
    return out / kLog2;
}

CMat checked_super_matrix(const ChannelRealization& channel) {
    CMat super = channel.super_matrix();
    if (numeric_rank(super) < super.rows())
        throw SingularChannel("super channel matrix is numerically rank deficient");
    return super;
}

void check_power(double P) {
    if (!(P >= 0.0) || !std::isfinite(P)) throw InvalidArgument("power must be finite and >= 0");
}

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 3) throw DegenerateGrid("need at least 3 grid points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
            throw DegenerateGrid("grid powers must be finite and > 0");
        if (i > 0 && grid[i] <= grid[i - 1]) throw DegenerateGrid("grid must be strictly increasing");
    }
    if (grid.back() / grid.front() < 100.0) throw DegenerateGrid("grid must span at least two decades");
}

SlopeCheck run_slope_check(const std::function<double(double, std::uint64_t)>& rate_at, double target,
                           const std::vector<double>& grid, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
    check_grid(grid);
    std::vector<double> mean_rates(grid.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t draw = rng::derive_seed(seed, 0x74726c73ull, static_cast<std::uint64_t>(t));
        for (std::size_t g = 0; g < grid.size(); ++g) mean_rates[g] += rate_at(grid[g], draw);
    }
    for (double& r : mean_rates) r /= trials;

    const SlopeEstimate fit = fit_dof_slope(
        [&](double P) {
            const auto it = std::find(grid.begin(), grid.end(), P);
            return mean_rates[static_cast<std::size_t>(it - grid.begin())];
        },
        grid);
    SlopeCheck check;
    check.measured = fit.slope;
    check.target = target;
    const double tolerance = target == 0.0 ? 0.05 : 0.05 * target;
    check.pass = std::abs(fit.slope - target) <= tolerance;
    return check;
}

}  // namespace

std::vector<double> zf_centralized_rates(const ChannelRealization& channel, double P) {
    check_power(P);
    const int K = channel.topology().num_users();
    const int M = channel.topology().num_antennas();
    const CMat super = checked_super_matrix(channel);
    const CMat inverse = super.inverse();

    // Worst-transmitter power of the zero-forcing output per unit signal power.
    double worst_row_power = 0.0;
    for (int k = 0; k < K; ++k)
        worst_row_power = std::max(worst_row_power, inverse.middleRows(k * M, M).squaredNorm());

    // The forwarded signals carry unit-variance quantization noise on each of the
    // M antennas, so the usable transmit power is P - M and every receiver sees an
    // interference-free link with effective noise 2 (AWGN plus quantization).
    const double signal_power = std::max(P - M, 0.0) / worst_row_power;
    const double effective_power = signal_power / 2.0;
    return std::vector<double>(K, M * std::log1p(effective_power) / kLog2);
}

std::vector<double> quantize_forward_rates(const ChannelRealization& channel, double P,
                                           double quantization_variance) {
    check_power(P);
    if (!(quantization_variance >= 0.0)) throw InvalidArgument("quantization variance must be >= 0");
    const int K = channel.topology().num_users();
    const int M = channel.topology().num_antennas();
    const int n = K * M;
    const CMat super = checked_super_matrix(channel);

    // Effective noise: unit AWGN everywhere plus quantization noise at every
    // receiver except the central processor (node 0).
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> noise_inverse(n);
    for (int i = 0; i < K; ++i)
        noise_inverse.segment(i * M, M).setConstant(i == 0 ? 1.0 : 1.0 / (1.0 + quantization_variance));

    const CMat gram = super.adjoint() * (noise_inverse.asDiagonal() * super).eval();
    const CMat argument = CMat::Identity(n, n) + (P / M) * gram;
    const double sum_rate = log2_det_hermitian(argument);
    return std::vector<double>(K, sum_rate / K);
}

double pooled_sum_rate(const ChannelRealization& channel, double P) {
    check_power(P);
    const int M = channel.topology().num_antennas();
    const CMat super = checked_super_matrix(channel);
    const int n = static_cast<int>(super.rows());
    const CMat argument = CMat::Identity(n, n) + (P / M) * (super.adjoint() * super);
    return log2_det_hermitian(argument);
}

SlopeEstimate fit_dof_slope(const std::function<double(double)>& rate_fn,
                            const std::vector<double>& power_grid) {
    check_grid(power_grid);
    SlopeEstimate estimate;
    estimate.power_grid = power_grid;
    estimate.rates.reserve(power_grid.size());
    for (double P : power_grid) estimate.rates.push_back(rate_fn(P));

    const std::size_t n = power_grid.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += std::log2(power_grid[i]);
        mean_y += estimate.rates[i];
    }
    mean_x /= n;
    mean_y /= n;
    double covariance = 0.0, variance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log2(power_grid[i]) - mean_x;
        covariance += dx * (estimate.rates[i] - mean_y);
        variance += dx * dx;
    }
    estimate.slope = covariance / variance;
    estimate.intercept = mean_y - estimate.slope * mean_x;
    return estimate;
}

SlopeCheck check_logdet_sum_slope(int N, const std::vector<int>& M_list,
                                  const std::vector<double>& power_grid, int trials,
                                  std::uint64_t seed) {
    if (N < 1) throw InvalidArgument("N must be >= 1");
    if (M_list.empty()) throw InvalidArgument("need at least one channel matrix");
    int total_m = 0;
    for (int m : M_list) {
        if (m < 1) throw InvalidArgument("all dimensions must be >= 1");
        total_m += m;
    }
    const double target = std::min(N, total_m);

    const auto rate_at = [&](double P, std::uint64_t draw) {
        CMat sum = CMat::Identity(N, N);
        for (std::size_t i = 0; i < M_list.size(); ++i) {
            const CMat h =
                rng::complex_gaussian_matrix(N, M_list[i], rng::derive_seed(draw, 0x73756dull, i));
            sum += P * (h * h.adjoint());
        }
        return log2_det_hermitian(sum);
    };
    return run_slope_check(rate_at, target, power_grid, trials, seed);
}

SlopeCheck check_logdet_interference_slope(int Ni, int Mi, int Nj,
                                           const std::vector<double>& power_grid, int trials,
                                           std::uint64_t seed) {
    if (Ni < 1 || Mi < 1 || Nj < 1) throw InvalidArgument("all dimensions must be >= 1");
    const double target = std::min<double>(Ni, std::max(Mi - Nj, 0));

    const auto rate_at = [&](double P, std::uint64_t draw) {
        const CMat h_ii = rng::complex_gaussian_matrix(Ni, Mi, rng::derive_seed(draw, 0x696eull, 0));
        const CMat h_ji = rng::complex_gaussian_matrix(Nj, Mi, rng::derive_seed(draw, 0x696eull, 1));
        // Equivalent well-conditioned form of
        //   I + P Hii Hii' - P^2 Hii Hji' (I + P Hji Hji')^{-1} Hji Hii'.
        const CMat core = CMat::Identity(Mi, Mi) + P * (h_ji.adjoint() * h_ji);
        const CMat argument =
            CMat::Identity(Ni, Ni) + P * (h_ii * core.llt().solve(h_ii.adjoint()));
        return log2_det_hermitian(argument);
    };
    return run_slope_check(rate_at, target, power_grid, trials, seed);
}

double account_backhaul_load(CoopScheme, int K, int M) {
    if (K < 2) throw InvalidArgument("need K >= 2");
    if (M < 1) throw InvalidArgument("antennas per node must be >= 1");
    return 2.0 * M * (K - 1) / K;
}

}  // namespace coopic
