#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coopic/network.hpp"
#include "coopic/types.hpp"

namespace coopic {

/// Largest network size for which exhaustive subset enumeration is allowed.
inline constexpr int kDefaultExhaustiveLimit = 12;

enum class Side { Transmitters, Receivers };

/// Directed capacitated graph with a distinguished source and sink.
/// Invariants: source != sink, capacities >= 0, no edge into the source,
/// no edge out of the sink.
class FlowNetwork {
public:
    struct Edge {
        int from = 0;
        int to = 0;
        std::int64_t capacity = 0;
    };

    int num_nodes() const { return n_; }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    friend FlowNetwork make_flow_network(int num_nodes, int source, int sink,
                                         std::vector<FlowNetwork::Edge> edges);
    FlowNetwork(int n, int source, int sink, std::vector<Edge> edges)
      : n_(n), source_(source), sink_(sink), edges_(std::move(edges)) {}

    int n_;
    int source_;
    int sink_;
    std::vector<Edge> edges_;
};

FlowNetwork make_flow_network(int num_nodes, int source, int sink,
                              std::vector<FlowNetwork::Edge> edges);

struct MaxFlowResult {
    std::int64_t value = 0;
    /// Nodes reachable from the source in the final residual graph; the edges
    /// leaving this set form a minimum cut.
    std::vector<bool> source_side;
};

/// Exact integral maximum flow (Dinic's algorithm).
MaxFlowResult max_flow(const FlowNetwork& network);

/// A proper independent set of the bipartite connectivity graph: no wireless link
/// between any member transmitter and member receiver, and at least one node from
/// each side when nonempty.
struct PisResult {
    std::vector<int> transmitters;  // sorted
    std::vector<int> receivers;     // sorted

    int size() const { return static_cast<int>(transmitters.size() + receivers.size()); }
    bool empty() const { return transmitters.empty() && receivers.empty(); }
};

/// Neighbors of a node set on one side of the bipartite connectivity graph,
/// returned as sorted ids on the opposite side.
std::vector<int> neighbors(const NetworkTopology& topology, Side side, const std::vector<int>& set);

/// Maximum matching cardinality in the sub-bipartite-graph induced by the given
/// transmitter and receiver sets. Saturates the transmitter set iff the result
/// equals its size.
int max_matching(const NetworkTopology& topology, const std::vector<int>& tx_set,
                 const std::vector<int>& rx_set);

/// Source/sink flow reduction for the largest proper independent set containing
/// transmitter a and receiver b. Requires that b does not hear a (throws
/// AdjacentPair otherwise). Wireless edges, source->a and b->sink get a large
/// surrogate capacity; the remaining source/sink edges get capacity one, so a
/// minimum cut counts exactly the nodes expelled from the independent set.
FlowNetwork build_flow_network(const NetworkTopology& topology, int a, int b);

/// Largest proper independent set containing transmitter a and receiver b
/// (empty when they are adjacent). Size satisfies
///   min_cut(flow network of (a,b)) + size = 2K
/// and the members are recovered from one minimum cut.
PisResult max_pis(const NetworkTopology& topology, int a, int b);

/// Largest proper independent set over all transmitter/receiver anchor pairs;
/// empty when the bipartite graph has no proper independent set.
PisResult max_pis_global(const NetworkTopology& topology);

/// Extended Hall condition: every set of l <= ceil(K/2) transmitters has at least
/// floor(K/2) + l neighboring receivers. Verified in polynomial time through the
/// equivalent bound max_pis_global(topology).size() <= ceil(K/2).
bool check_ehc(const NetworkTopology& topology);

/// Direct exhaustive verification of the extended Hall condition over all
/// transmitter subsets. Throws LimitExceeded for K above the given limit.
bool check_ehc_bruteforce(const NetworkTopology& topology, int exhaustive_limit = kDefaultExhaustiveLimit);

/// The receiver-side dual: every set of l <= ceil(K/2) receivers has at least
/// floor(K/2) + l neighboring transmitters. Equivalent to check_ehc; implemented
/// by direct enumeration as an independent route.
bool check_ehc_dual(const NetworkTopology& topology);

/// Normalized closeness centrality (K-1) / sum of hop distances from the node,
/// over the undirected connectivity of the backhaul graph. Throws Unreachable
/// when some node cannot be reached.
double closeness_centrality(const BackhaulGraph& backhaul, int node);

enum class FeasibilityMode { Finite, Asymptotic };

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<int> witness;  // a qualifying hub node
};

/// Whether full-DoF centralized processing is feasible on this backhaul graph:
/// finite mode requires a node of undirected degree exactly K-1; asymptotic mode
/// uses the finite-size surrogate degree >= (1-epsilon)(K-1).
FeasibilityVerdict check_feasibility(const BackhaulGraph& backhaul, FeasibilityMode mode,
                                     double epsilon = 0.1);

/// Per-user backhaul load of a centralized scheme hosted at the given node:
/// M * (sum of hop distances from the center + K - 1) / K.
double min_centralized_load(const BackhaulGraph& backhaul, int M, int center);

}  // namespace coopic
