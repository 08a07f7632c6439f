#include "coopic/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace coopic {

namespace {

void check_node_ids(const NetworkTopology& topology, const std::vector<int>& set, const char* what) {
    for (int id : set)
        if (id < 0 || id >= topology.num_users())
            throw InvalidArgument(std::string(what) + " id out of range: " + std::to_string(id));
}

/// Dinic's algorithm on an adjacency-list residual graph.
class Dinic {
public:
    explicit Dinic(int n) : head_(n), level_(n), iter_(n) {}

    void add_edge(int from, int to, std::int64_t capacity) {
        head_[from].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, capacity});
        head_[to].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0});
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (build_levels(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (std::int64_t pushed = augment(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += pushed;
        }
        return flow;
    }

    /// Nodes reachable from s in the residual graph of the final flow.
    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> queue;
        seen[s] = true;
        queue.push(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int id : head_[u]) {
                const Edge& e = edges_[id];
                if (e.residual > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    queue.push(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        std::int64_t residual;
    };

    bool build_levels(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int id : head_[u]) {
                const Edge& e = edges_[id];
                if (e.residual > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    queue.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t augment(int u, int t, std::int64_t limit) {
        if (u == t) return limit;
        for (int& i = iter_[u]; i < static_cast<int>(head_[u].size()); ++i) {
            const int id = head_[u][i];
            Edge& e = edges_[id];
            if (e.residual <= 0 || level_[e.to] != level_[u] + 1) continue;
            if (std::int64_t pushed = augment(e.to, t, std::min(limit, e.residual))) {
                e.residual -= pushed;
                edges_[id ^ 1].residual += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

/// Surrogate for an infinite edge capacity. Any value above the largest possible
/// finite cut 2K-2 works; kept at ceil(K/2)^3 except for K < 3 where that cube is
/// itself too small.
std::int64_t infinite_surrogate(int K) {
    const std::int64_t half = (K + 1) / 2;
    return std::max<std::int64_t>(half * half * half, 2 * K - 1);
}

std::uint64_t transmitter_neighbor_mask(const NetworkTopology& topology, int tx) {
    std::uint64_t mask = 0;
    for (int i = 0; i < topology.num_users(); ++i)
        if (topology.link(i, tx)) mask |= (std::uint64_t{1} << i);
    return mask;
}

std::uint64_t receiver_neighbor_mask(const NetworkTopology& topology, int rx) {
    std::uint64_t mask = 0;
    for (int j = 0; j < topology.num_users(); ++j)
        if (topology.link(rx, j)) mask |= (std::uint64_t{1} << j);
    return mask;
}

/// Checks the Hall-style neighborhood bound |N(S)| >= floor(K/2) + |S| over all
/// subsets of size 1..ceil(K/2) on one side, given per-node neighbor masks.
bool halved_hall_condition(int K, const std::vector<std::uint64_t>& neighbor_mask) {
    const int ceil_half = (K + 1) / 2;
    const int floor_half = K / 2;
    const std::uint64_t full = (K == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << K) - 1);
    for (std::uint64_t set = 1; set <= full; ++set) {
        const int size = std::popcount(set);
        if (size > ceil_half) continue;
        std::uint64_t joined = 0;
        for (std::uint64_t rest = set; rest != 0; rest &= rest - 1)
            joined |= neighbor_mask[std::countr_zero(rest)];
        if (std::popcount(joined) < floor_half + size) return false;
    }
    return true;
}

}  // namespace

FlowNetwork make_flow_network(int num_nodes, int source, int sink,
                              std::vector<FlowNetwork::Edge> edges) {
    if (num_nodes < 2) throw InvalidArgument("flow network needs at least source and sink");
    if (source == sink) throw InvalidArgument("source and sink must differ");
    if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes)
        throw InvalidArgument("source or sink id out of range");
    for (const auto& e : edges) {
        if (e.from < 0 || e.from >= num_nodes || e.to < 0 || e.to >= num_nodes)
            throw InvalidArgument("flow edge endpoint out of range");
        if (e.capacity < 0) throw InvalidArgument("flow edge capacity must be >= 0");
        if (e.to == source) throw InvalidArgument("no edge may enter the source");
        if (e.from == sink) throw InvalidArgument("no edge may leave the sink");
    }
    return FlowNetwork(num_nodes, source, sink, std::move(edges));
}

MaxFlowResult max_flow(const FlowNetwork& network) {
    Dinic dinic(network.num_nodes());
    for (const auto& e : network.edges()) dinic.add_edge(e.from, e.to, e.capacity);
    MaxFlowResult result;
    result.value = dinic.run(network.source(), network.sink());
    result.source_side = dinic.residual_reachable(network.source());
    return result;
}

std::vector<int> neighbors(const NetworkTopology& topology, Side side, const std::vector<int>& set) {
    check_node_ids(topology, set, side == Side::Transmitters ? "transmitter" : "receiver");
    std::set<int> out;
    for (int id : set) {
        for (int other = 0; other < topology.num_users(); ++other) {
            const bool connected =
                side == Side::Transmitters ? topology.link(other, id) : topology.link(id, other);
            if (connected) out.insert(other);
        }
    }
    return {out.begin(), out.end()};
}

int max_matching(const NetworkTopology& topology, const std::vector<int>& tx_set,
                 const std::vector<int>& rx_set) {
    check_node_ids(topology, tx_set, "transmitter");
    check_node_ids(topology, rx_set, "receiver");
    // Kuhn's augmenting-path matching on the induced sub-bipartite-graph.
    const int left = static_cast<int>(tx_set.size());
    const int right = static_cast<int>(rx_set.size());
    std::vector<std::vector<int>> adj(left);
    for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r)
            if (topology.link(rx_set[r], tx_set[l])) adj[l].push_back(r);
    std::vector<int> match_right(right, -1);
    std::vector<bool> visited(right);

    const std::function<bool(int)> try_augment = [&](int l) -> bool {
        for (int r : adj[l]) {
            if (visited[r]) continue;
            visited[r] = true;
            if (match_right[r] < 0 || try_augment(match_right[r])) {
                match_right[r] = l;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int l = 0; l < left; ++l) {
        std::fill(visited.begin(), visited.end(), false);
        if (try_augment(l)) ++size;
    }
    return size;
}

FlowNetwork build_flow_network(const NetworkTopology& topology, int a, int b) {
    const int K = topology.num_users();
    check_node_ids(topology, {a}, "transmitter");
    check_node_ids(topology, {b}, "receiver");
    if (topology.link(b, a))
        throw AdjacentPair("receiver " + std::to_string(b) + " hears transmitter " + std::to_string(a));

    // Nodes: transmitters 0..K-1, receivers K..2K-1, source 2K, sink 2K+1.
    const int source = 2 * K;
    const int sink = 2 * K + 1;
    const std::int64_t big = infinite_surrogate(K);
    std::vector<FlowNetwork::Edge> edges;
    edges.reserve(static_cast<std::size_t>(2 * K) + static_cast<std::size_t>(K) * K);
    for (int j = 0; j < K; ++j) edges.push_back({source, j, j == a ? big : 1});
    for (int j = 0; j < K; ++j)
        for (int i = 0; i < K; ++i)
            if (topology.link(i, j)) edges.push_back({j, K + i, big});
    for (int i = 0; i < K; ++i) edges.push_back({K + i, sink, i == b ? big : 1});
    return make_flow_network(2 * K + 2, source, sink, std::move(edges));
}

PisResult max_pis(const NetworkTopology& topology, int a, int b) {
    const int K = topology.num_users();
    check_node_ids(topology, {a}, "transmitter");
    check_node_ids(topology, {b}, "receiver");
    if (topology.link(b, a)) return {};

    const MaxFlowResult flow = max_flow(build_flow_network(topology, a, b));
    // A minimum cut consists of unit source/sink edges only; the independent set is
    // made of the nodes incident to none of them: transmitters still on the source
    // side, receivers already on the sink side.
    PisResult result;
    for (int j = 0; j < K; ++j)
        if (flow.source_side[j]) result.transmitters.push_back(j);
    for (int i = 0; i < K; ++i)
        if (!flow.source_side[K + i]) result.receivers.push_back(i);
    if (result.size() != 2 * K - static_cast<int>(flow.value))
        throw Error("min-cut/independent-set correspondence violated");  // unreachable
    return result;
}

PisResult max_pis_global(const NetworkTopology& topology) {
    const int K = topology.num_users();
    PisResult best;
    for (int a = 0; a < K; ++a) {
        for (int b = 0; b < K; ++b) {
            if (topology.link(b, a)) continue;
            PisResult candidate = max_pis(topology, a, b);
            if (candidate.size() > best.size()) best = std::move(candidate);
        }
    }
    return best;
}

bool check_ehc(const NetworkTopology& topology) {
    const int K = topology.num_users();
    return max_pis_global(topology).size() <= (K + 1) / 2;
}

bool check_ehc_bruteforce(const NetworkTopology& topology, int exhaustive_limit) {
    const int K = topology.num_users();
    if (K > exhaustive_limit)
        throw LimitExceeded("K=" + std::to_string(K) + " above the exhaustive limit " +
                            std::to_string(exhaustive_limit));
    std::vector<std::uint64_t> masks(K);
    for (int j = 0; j < K; ++j) masks[j] = transmitter_neighbor_mask(topology, j);
    return halved_hall_condition(K, masks);
}

bool check_ehc_dual(const NetworkTopology& topology) {
    const int K = topology.num_users();
    if (K > 62) throw LimitExceeded("receiver-side enumeration supports K <= 62");
    std::vector<std::uint64_t> masks(K);
    for (int i = 0; i < K; ++i) masks[i] = receiver_neighbor_mask(topology, i);
    return halved_hall_condition(K, masks);
}

namespace {

/// Unweighted hop distances from start over the undirected backhaul connectivity;
/// -1 marks unreachable nodes.
std::vector<int> hop_distances(const BackhaulGraph& backhaul, int start) {
    const int K = backhaul.num_nodes();
    if (start < 0 || start >= K) throw InvalidArgument("node id out of range: " + std::to_string(start));
    std::vector<std::vector<int>> adj(K);
    for (const auto& [pair, c] : backhaul.links()) {
        if (c <= 0.0) continue;
        adj[pair.first].push_back(pair.second);
        adj[pair.second].push_back(pair.first);
    }
    std::vector<int> dist(K, -1);
    std::queue<int> queue;
    dist[start] = 0;
    queue.push(start);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (int v : adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

int distance_sum_or_throw(const BackhaulGraph& backhaul, int node) {
    const std::vector<int> dist = hop_distances(backhaul, node);
    int sum = 0;
    for (int d : dist) {
        if (d < 0)
            throw Unreachable("some node is disconnected from node " + std::to_string(node));
        sum += d;
    }
    return sum;
}

}  // namespace

double closeness_centrality(const BackhaulGraph& backhaul, int node) {
    const int K = backhaul.num_nodes();
    const int sum = distance_sum_or_throw(backhaul, node);
    if (sum == 0) return 0.0;  // single-node graph
    return static_cast<double>(K - 1) / sum;
}

FeasibilityVerdict check_feasibility(const BackhaulGraph& backhaul, FeasibilityMode mode,
                                     double epsilon) {
    const int K = backhaul.num_nodes();
    if (K < 2) throw InvalidArgument("feasibility needs K >= 2");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InvalidArgument("epsilon must be in [0, 1]");
    const double threshold =
        mode == FeasibilityMode::Finite ? K - 1 : (1.0 - epsilon) * (K - 1);
    for (int node = 0; node < K; ++node) {
        const int degree = backhaul.undirected_degree(node);
        const bool ok = mode == FeasibilityMode::Finite ? degree == K - 1
                                                        : static_cast<double>(degree) >= threshold;
        if (ok) return {true, node};
    }
    return {false, std::nullopt};
}

double min_centralized_load(const BackhaulGraph& backhaul, int M, int center) {
    if (M < 1) throw InvalidArgument("antennas per node must be >= 1");
    const int K = backhaul.num_nodes();
    const int sum = distance_sum_or_throw(backhaul, center);
    return static_cast<double>(M) * (sum + K - 1) / K;
}

}  // namespace coopic
