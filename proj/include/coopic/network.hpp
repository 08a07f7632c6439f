#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include "coopic/types.hpp"

namespace coopic {

/// Large-scale connectivity of a K-user interference channel: K transmitter-receiver
/// pairs, M antennas at every node, and a K x K binary adjacency matrix whose entry
/// (i, j) says whether receiver i hears transmitter j. Immutable after construction.
class NetworkTopology {
public:
    int num_users() const { return k_; }
    int num_antennas() const { return m_; }
    const BinMat& adjacency() const { return adj_; }

    /// True when receiver rx hears transmitter tx.
    bool link(int rx, int tx) const { return adj_(rx, tx) != 0; }

private:
    friend NetworkTopology make_topology(int K, int M, BinMat adjacency);
    NetworkTopology(int K, int M, BinMat adjacency) : k_(K), m_(M), adj_(std::move(adjacency)) {}

    int k_;
    int m_;
    BinMat adj_;
};

/// Validates and builds a topology. Every diagonal entry of the adjacency matrix must
/// be one (each receiver hears its own transmitter); throws DirectLinkMissing otherwise.
/// Non-binary entries or a shape mismatch throw InvalidArgument.
NetworkTopology make_topology(int K, int M, BinMat adjacency);

/// One directed backhaul link with a DoF-normalized capacity.
struct BackhaulLink {
    int from = 0;
    int to = 0;
    double capacity = 0.0;
};

/// Directed capacitated cooperation graph among the K cooperating nodes.
/// Absent pairs have capacity zero. Immutable after construction.
class BackhaulGraph {
public:
    int num_nodes() const { return k_; }

    /// Capacity of the directed link from -> to; zero when the link is absent.
    double capacity(int from, int to) const;

    const std::map<std::pair<int, int>, double>& links() const { return capacity_; }

    /// Average per-user load: the sum of all link capacities divided by K.
    double per_user_load() const;

    /// Number of distinct neighbors reachable through a positive-capacity link
    /// in either direction.
    int undirected_degree(int node) const;

    /// Sorted neighbor ids under the same undirected notion of connectivity.
    std::vector<int> undirected_neighbors(int node) const;

private:
    friend BackhaulGraph make_backhaul(int K, const std::vector<BackhaulLink>& links);
    explicit BackhaulGraph(int K) : k_(K) {}

    int k_;
    std::map<std::pair<int, int>, double> capacity_;
};

/// Validates and builds a backhaul graph: no self-loops, indices in range,
/// capacities finite and nonnegative, no duplicate directed pairs.
BackhaulGraph make_backhaul(int K, const std::vector<BackhaulLink>& links);

/// Fully connected backhaul with the same capacity on all K(K-1) directed links.
BackhaulGraph uniform_backhaul(int K, double capacity);

/// One draw of the small-scale channel: a K x K array of complex M x M blocks,
/// zero exactly where the adjacency matrix is zero.
class ChannelRealization {
public:
    const NetworkTopology& topology() const { return topology_; }
    const CMat& block(int rx, int tx) const { return blocks_[static_cast<std::size_t>(rx) * topology_.num_users() + tx]; }

    /// The MK x MK matrix assembled from all blocks, receiver-major.
    CMat super_matrix() const;

private:
    friend ChannelRealization make_channel_realization(NetworkTopology topology, std::vector<CMat> blocks);
    ChannelRealization(NetworkTopology topology, std::vector<CMat> blocks)
      : topology_(std::move(topology)), blocks_(std::move(blocks)) {}

    NetworkTopology topology_;
    std::vector<CMat> blocks_;  // row-major (rx, tx)
};

/// Draws all nonzero blocks i.i.d. CN(0,1). A pure function of (topology, seed):
/// each block has its own derived stream, so realizations of two topologies agree
/// on every link they share.
ChannelRealization sample_channel(const NetworkTopology& topology, std::uint64_t seed);

/// Builds a realization from explicit blocks (row-major rx, tx). Blocks must be
/// M x M and zero exactly where the adjacency matrix is zero. Library code always
/// samples; this exists for consumers that need a handcrafted realization.
ChannelRealization make_channel_realization(NetworkTopology topology, std::vector<CMat> blocks);

/// Stacks the blocks of the given receivers (rows) and transmitters (columns)
/// into an |rx_set|*M x |tx_set|*M matrix, in the given order.
CMat block_submatrix(const ChannelRealization& channel, const std::vector<int>& rx_set,
                     const std::vector<int>& tx_set);

/// Two-user interference channel with per-node antenna counts and one directed
/// backhaul capacity in each direction.
struct TwoUserConfig {
    int M1 = 1;
    int N1 = 1;
    int M2 = 1;
    int N2 = 1;
    double cB12 = 0.0;
    double cB21 = 0.0;
};

/// Validates a two-user configuration: all antenna counts >= 1, capacities >= 0.
TwoUserConfig make_two_user_config(int M1, int N1, int M2, int N2, double cB12, double cB21);

/// Parses a topology document: a JSON object with exactly the fields
///   K (int), M (int), L (K rows of K entries in {0,1}).
/// Unknown fields are rejected.
NetworkTopology parse_topology(const std::string& text);
NetworkTopology load_topology(const std::filesystem::path& path);

/// Parses a backhaul document: a JSON object with exactly the fields
///   K (int), links (array of {from, to, capacity} records, 0-based indices).
/// Unknown fields are rejected.
BackhaulGraph parse_backhaul(const std::string& text);
BackhaulGraph load_backhaul(const std::filesystem::path& path);

}  // namespace coopic
