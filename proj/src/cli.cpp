#include "coopic/cli.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coopic/graph.hpp"
#include "coopic/network.hpp"
#include "coopic/rank.hpp"
#include "coopic/simulate.hpp"
#include "coopic/tradeoff.hpp"

namespace coopic {

namespace {

/// Fixed 6-decimal formatting with trailing zeros trimmed down to one decimal,
/// so 2/3 prints as 0.666667 and 1 prints as 1.0.
std::string format_fixed6(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string out = buffer;
    const std::size_t dot = out.find('.');
    std::size_t end = out.size();
    while (end > dot + 2 && out[end - 1] == '0') --end;
    out.resize(end);
    return out;
}

std::string format_members(const PisResult& pis) {
    std::string out = "{";
    bool first = true;
    for (int tx : pis.transmitters) {
        out += (first ? "t" : ",t") + std::to_string(tx);
        first = false;
    }
    for (int rx : pis.receivers) {
        out += (first ? "r" : ",r") + std::to_string(rx);
        first = false;
    }
    return out + "}";
}

struct CliOptions {
    std::string topology_file;
    std::string backhaul_file;
    int K = 2;
    int M = 1;
    double alpha_max = 2.0;
    int steps = 21;
    std::uint64_t seed = 42;
    int trials = 20;
    std::string mode = "finite";
    double epsilon = 0.1;
    std::string scheme;
    std::vector<double> grid{1e3, 1e4, 1e5, 1e6};
};

int cmd_check_ehc(const CliOptions& opt, std::ostream& out) {
    const NetworkTopology topology = load_topology(opt.topology_file);
    const PisResult pis = max_pis_global(topology);
    const bool holds = pis.size() <= (topology.num_users() + 1) / 2;
    out << "# seed=" << opt.seed << "\n";
    out << "EHC: " << (holds ? "HOLDS" : "FAILS") << "\n";
    out << "max_pis_size=" << pis.size() << "\n";
    out << "witness=" << format_members(pis) << "\n";
    return holds ? 0 : 1;
}

int cmd_tradeoff(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const TradeoffCurve curve = sample_tradeoff_curve(opt.K, opt.M, opt.alpha_max, opt.steps);
    err << "# seed=" << opt.seed << "\n";
    out << "alpha,dof_lower,dof_upper\n";
    for (const TradeoffPoint& point : curve.points)
        out << format_fixed6(point.alpha) << ',' << format_fixed6(point.dof_lower) << ','
            << format_fixed6(point.dof_upper) << "\n";
    return 0;
}

int cmd_feasibility(const CliOptions& opt, std::ostream& out) {
    const BackhaulGraph backhaul = load_backhaul(opt.backhaul_file);
    const FeasibilityMode mode =
        opt.mode == "finite" ? FeasibilityMode::Finite : FeasibilityMode::Asymptotic;
    const FeasibilityVerdict verdict = check_feasibility(backhaul, mode, opt.epsilon);
    out << "# seed=" << opt.seed << "\n";
    if (verdict.feasible) {
        out << "FEASIBLE witness=" << *verdict.witness << "\n";
        return 0;
    }
    out << "INFEASIBLE\n";
    return 1;
}

int cmd_simulate(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    const NetworkTopology topology = load_topology(opt.topology_file);
    const ChannelRealization channel = sample_channel(topology, opt.seed);
    const int K = topology.num_users();
    err << "# seed=" << opt.seed << "\n";

    std::vector<std::vector<double>> rate_rows;
    rate_rows.reserve(opt.grid.size());
    const auto mean_rate = [&](double P) {
        const std::vector<double> rates = opt.scheme == "zf" ? zf_centralized_rates(channel, P)
                                                             : quantize_forward_rates(channel, P);
        rate_rows.push_back(rates);
        double mean = 0.0;
        for (double r : rates) mean += r;
        return mean / K;
    };
    const SlopeEstimate fit = fit_dof_slope(mean_rate, opt.grid);

    out << "P";
    for (int i = 0; i < K; ++i) out << ",rate_user_" << i;
    out << ",slope_fit\n";
    for (std::size_t g = 0; g < opt.grid.size(); ++g) {
        out << format_fixed6(opt.grid[g]);
        for (int i = 0; i < K; ++i) out << ',' << format_fixed6(rate_rows[g][i]);
        out << ',' << format_fixed6(fit.slope) << "\n";
    }
    return 0;
}

int cmd_verify_conditions(const CliOptions& opt, std::ostream& out) {
    const NetworkTopology topology = load_topology(opt.topology_file);
    const bool a = check_ehc(topology);
    const ConditionVerdict b = check_condition_b(topology, opt.trials, opt.seed);
    const ConditionVerdict c = check_condition_c(topology, opt.trials, opt.seed);
    const bool consistent = a == b.holds && b.holds == c.holds;
    const int violations = b.spot_violations + c.spot_violations;

    out << "# seed=" << opt.seed << "\n";
    out << "a=" << (a ? "HOLDS" : "FAILS") << " b=" << (b.holds ? "HOLDS" : "FAILS")
        << " c=" << (c.holds ? "HOLDS" : "FAILS") << ' '
        << (consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
    out << "spot_checks=" << b.spot_checks + c.spot_checks << " violations=" << violations << "\n";
    if (!consistent || violations > 0) return 3;
    return a ? 0 : 1;
}

int cmd_partition_converse(const CliOptions& opt, std::ostream& out) {
    const NetworkTopology topology = load_topology(opt.topology_file);
    const BackhaulGraph backhaul = load_backhaul(opt.backhaul_file);
    const int K = topology.num_users();
    const int M = topology.num_antennas();
    if (backhaul.num_nodes() != K)
        throw InvalidArgument("topology has K=" + std::to_string(K) + " but backhaul has K=" +
                              std::to_string(backhaul.num_nodes()));
    const double bound = converse_enumerate(K, M, backhaul);
    out << "# seed=" << opt.seed << "\n";
    out << "K=" << K << " M=" << M << " alpha=" << format_fixed6(backhaul.per_user_load()) << "\n";
    out << "converse_per_user=" << format_fixed6(bound) << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliOptions opt;
    CLI::App app{"K-user interference channel with backhaul cooperation: trade-off curves, "
                 "connectivity conditions and scheme simulation"};
    app.require_subcommand(1);

    const auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "random seed (printed in the report header)");
    };

    CLI::App* check = app.add_subcommand("check-ehc", "verify the extended Hall condition");
    check->add_option("--topology", opt.topology_file, "topology file")->required();
    add_seed(check);

    CLI::App* tradeoff = app.add_subcommand("tradeoff", "emit the DoF vs load curve as CSV");
    tradeoff->add_option("--K", opt.K, "number of users")->required();
    tradeoff->add_option("--M", opt.M, "antennas per node")->required();
    tradeoff->add_option("--alpha-max", opt.alpha_max, "largest sampled load")->required();
    tradeoff->add_option("--steps", opt.steps, "number of samples (default 21)");
    add_seed(tradeoff);

    CLI::App* feas = app.add_subcommand("feasibility", "check centralized-scheme feasibility");
    feas->add_option("--backhaul", opt.backhaul_file, "backhaul file")->required();
    feas->add_option("--mode", opt.mode, "finite|asymptotic (default finite)")
        ->check(CLI::IsMember({"finite", "asymptotic"}));
    feas->add_option("--epsilon", opt.epsilon, "asymptotic-mode slack (default 0.1)");
    add_seed(feas);

    CLI::App* sim = app.add_subcommand("simulate", "simulate a cooperation scheme, emit rate CSV");
    sim->add_option("--topology", opt.topology_file, "topology file")->required();
    sim->add_option("--scheme", opt.scheme, "zf|qf")->required()->check(CLI::IsMember({"zf", "qf"}));
    sim->add_option("--grid", opt.grid, "power grid (default 1e3,1e4,1e5,1e6)")->delimiter(',');
    add_seed(sim);

    CLI::App* verify = app.add_subcommand("verify-conditions", "verify the a/b/c condition triple");
    verify->add_option("--topology", opt.topology_file, "topology file")->required();
    verify->add_option("--trials", opt.trials, "rank spot checks per condition (default 20)");
    add_seed(verify);

    CLI::App* conv = app.add_subcommand("partition-converse", "enumerated converse bound");
    conv->add_option("--topology", opt.topology_file, "topology file")->required();
    conv->add_option("--backhaul", opt.backhaul_file, "backhaul file")->required();
    add_seed(conv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check_ehc(opt, out);
        if (tradeoff->parsed()) return cmd_tradeoff(opt, out, err);
        if (feas->parsed()) return cmd_feasibility(opt, out);
        if (sim->parsed()) return cmd_simulate(opt, out, err);
        if (verify->parsed()) return cmd_verify_conditions(opt, out);
        if (conv->parsed()) return cmd_partition_converse(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace coopic
