#include "coopic/network.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coopic/random.hpp"

namespace coopic {

NetworkTopology make_topology(int K, int M, BinMat adjacency) {
    if (K < 1) throw InvalidArgument("number of users must be >= 1, got " + std::to_string(K));
    if (M < 1) throw InvalidArgument("antennas per node must be >= 1, got " + std::to_string(M));
    if (adjacency.rows() != K || adjacency.cols() != K)
        throw InvalidArgument("adjacency matrix must be " + std::to_string(K) + "x" + std::to_string(K));
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) {
            const int v = adjacency(i, j);
            if (v != 0 && v != 1)
                throw InvalidArgument("adjacency entries must be 0 or 1, got " + std::to_string(v) +
                                      " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (adjacency(i, i) != 1)
            throw DirectLinkMissing("user " + std::to_string(i) + " does not hear its own transmitter");
    }
    return NetworkTopology(K, M, std::move(adjacency));
}

double BackhaulGraph::capacity(int from, int to) const {
    const auto it = capacity_.find({from, to});
    return it == capacity_.end() ? 0.0 : it->second;
}

double BackhaulGraph::per_user_load() const {
    double total = 0.0;
    for (const auto& [pair, c] : capacity_) total += c;
    return total / k_;
}

int BackhaulGraph::undirected_degree(int node) const {
    return static_cast<int>(undirected_neighbors(node).size());
}

std::vector<int> BackhaulGraph::undirected_neighbors(int node) const {
    if (node < 0 || node >= k_) throw InvalidArgument("node id out of range: " + std::to_string(node));
    std::set<int> out;
    for (const auto& [pair, c] : capacity_) {
        if (c <= 0.0) continue;
        if (pair.first == node) out.insert(pair.second);
        if (pair.second == node) out.insert(pair.first);
    }
    return {out.begin(), out.end()};
}

BackhaulGraph make_backhaul(int K, const std::vector<BackhaulLink>& links) {
    if (K < 1) throw InvalidArgument("backhaul node count must be >= 1, got " + std::to_string(K));
    BackhaulGraph graph(K);
    for (const auto& link : links) {
        if (link.from < 0 || link.from >= K || link.to < 0 || link.to >= K)
            throw InvalidArgument("backhaul link endpoint out of range: " + std::to_string(link.from) +
                                  "->" + std::to_string(link.to));
        if (link.from == link.to)
            throw InvalidArgument("backhaul self-loop at node " + std::to_string(link.from));
        if (!std::isfinite(link.capacity) || link.capacity < 0.0)
            throw InvalidArgument("backhaul capacity must be finite and >= 0");
        if (!graph.capacity_.emplace(std::make_pair(link.from, link.to), link.capacity).second)
            throw InvalidArgument("duplicate backhaul link " + std::to_string(link.from) + "->" +
                                  std::to_string(link.to));
    }
    return graph;
}

BackhaulGraph uniform_backhaul(int K, double capacity) {
    std::vector<BackhaulLink> links;
    links.reserve(static_cast<std::size_t>(K) * (K - 1));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j)
            if (i != j) links.push_back({i, j, capacity});
    return make_backhaul(K, links);
}

CMat ChannelRealization::super_matrix() const {
    const int K = topology_.num_users();
    const int M = topology_.num_antennas();
    CMat super(K * M, K * M);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) super.block(i * M, j * M, M, M) = block(i, j);
    return super;
}

ChannelRealization sample_channel(const NetworkTopology& topology, std::uint64_t seed) {
    const int K = topology.num_users();
    const int M = topology.num_antennas();
    std::vector<CMat> blocks;
    blocks.reserve(static_cast<std::size_t>(K) * K);
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) {
            if (topology.link(i, j))
                blocks.push_back(rng::complex_gaussian_matrix(
                    M, M, rng::derive_seed(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j))));
            else
                blocks.push_back(CMat::Zero(M, M));
        }
    }
    return make_channel_realization(topology, std::move(blocks));
}

ChannelRealization make_channel_realization(NetworkTopology topology, std::vector<CMat> blocks) {
    const int K = topology.num_users();
    const int M = topology.num_antennas();
    if (blocks.size() != static_cast<std::size_t>(K) * K)
        throw InvalidArgument("expected " + std::to_string(K * K) + " channel blocks");
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) {
            const CMat& b = blocks[static_cast<std::size_t>(i) * K + j];
            if (b.rows() != M || b.cols() != M)
                throw InvalidArgument("channel block (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") must be " + std::to_string(M) + "x" + std::to_string(M));
            const bool zero = b.isZero(0.0);
            if (topology.link(i, j) && zero)
                throw InvalidArgument("connected block (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") must be nonzero");
            if (!topology.link(i, j) && !zero)
                throw InvalidArgument("disconnected block (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") must be zero");
        }
    }
    return ChannelRealization(std::move(topology), std::move(blocks));
}

CMat block_submatrix(const ChannelRealization& channel, const std::vector<int>& rx_set,
                     const std::vector<int>& tx_set) {
    const int K = channel.topology().num_users();
    const int M = channel.topology().num_antennas();
    for (int id : rx_set)
        if (id < 0 || id >= K) throw InvalidArgument("receiver id out of range: " + std::to_string(id));
    for (int id : tx_set)
        if (id < 0 || id >= K) throw InvalidArgument("transmitter id out of range: " + std::to_string(id));
    CMat out(static_cast<Eigen::Index>(rx_set.size()) * M, static_cast<Eigen::Index>(tx_set.size()) * M);
    for (std::size_t r = 0; r < rx_set.size(); ++r)
        for (std::size_t c = 0; c < tx_set.size(); ++c)
            out.block(static_cast<Eigen::Index>(r) * M, static_cast<Eigen::Index>(c) * M, M, M) =
                channel.block(rx_set[r], tx_set[c]);
    return out;
}

TwoUserConfig make_two_user_config(int M1, int N1, int M2, int N2, double cB12, double cB21) {
    if (M1 < 1 || N1 < 1 || M2 < 1 || N2 < 1)
        throw InvalidArgument("all antenna counts must be >= 1");
    if (!std::isfinite(cB12) || cB12 < 0.0 || !std::isfinite(cB21) || cB21 < 0.0)
        throw InvalidArgument("cooperation capacities must be finite and >= 0");
    return TwoUserConfig{M1, N1, M2, N2, cB12, cB21};
}

namespace {

using nlohmann::json;

// Cap on K and M in input files; far beyond any analyzable size, it only keeps a
// corrupt header from triggering a giant allocation.
constexpr long long kMaxNetworkSize = 4096;

json parse_json_object(const std::string& text, const char* what) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(std::string(what) + ": top-level value must be an object");
    return doc;
}

void reject_unknown_fields(const json& doc, const std::set<std::string>& allowed, const char* what) {
    for (const auto& item : doc.items())
        if (!allowed.contains(item.key()))
            throw ParseError(std::string(what) + ": unknown field '" + item.key() + "'");
}

int require_int(const json& doc, const char* field, const char* what) {
    if (!doc.contains(field)) throw ParseError(std::string(what) + ": missing field '" + field + "'");
    const auto& v = doc.at(field);
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": field '" + field + "' must be an integer");
    const auto wide = v.get<long long>();
    if (wide < -kMaxNetworkSize || wide > kMaxNetworkSize)
        throw ParseError(std::string(what) + ": field '" + field + "' out of range");
    return static_cast<int>(wide);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

NetworkTopology parse_topology(const std::string& text) {
    const char* what = "topology";
    const json doc = parse_json_object(text, what);
    reject_unknown_fields(doc, {"K", "M", "L"}, what);
    const int K = require_int(doc, "K", what);
    const int M = require_int(doc, "M", what);
    if (!doc.contains("L")) throw ParseError("topology: missing field 'L'");
    const auto& rows = doc.at("L");
    if (!rows.is_array() || static_cast<int>(rows.size()) != K)
        throw ParseError("topology: field 'L' must be an array of K rows");
    if (K < 1) throw ParseError("topology: K must be >= 1");
    BinMat adjacency(K, K);
    for (int i = 0; i < K; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != K)
            throw ParseError("topology: row " + std::to_string(i) + " of 'L' must have K entries");
        for (int j = 0; j < K; ++j) {
            const auto& cell = row.at(j);
            if (!cell.is_number_integer())
                throw ParseError("topology: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") of 'L' must be an integer");
            adjacency(i, j) = cell.get<int>();
        }
    }
    try {
        return make_topology(K, M, std::move(adjacency));
    } catch (const Error& e) {
        throw ParseError(std::string("topology: ") + e.what());
    }
}

NetworkTopology load_topology(const std::filesystem::path& path) { return parse_topology(read_file(path)); }

BackhaulGraph parse_backhaul(const std::string& text) {
    const char* what = "backhaul";
    const json doc = parse_json_object(text, what);
    reject_unknown_fields(doc, {"K", "links"}, what);
    const int K = require_int(doc, "K", what);
    if (!doc.contains("links")) throw ParseError("backhaul: missing field 'links'");
    const auto& records = doc.at("links");
    if (!records.is_array()) throw ParseError("backhaul: field 'links' must be an array");
    std::vector<BackhaulLink> links;
    links.reserve(records.size());
    for (std::size_t n = 0; n < records.size(); ++n) {
        const auto& rec = records.at(n);
        const std::string where = "backhaul: link record " + std::to_string(n);
        if (!rec.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_fields(rec, {"from", "to", "capacity"}, where.c_str());
        BackhaulLink link;
        link.from = require_int(rec, "from", where.c_str());
        link.to = require_int(rec, "to", where.c_str());
        if (!rec.contains("capacity")) throw ParseError(where + ": missing field 'capacity'");
        if (!rec.at("capacity").is_number()) throw ParseError(where + ": field 'capacity' must be a number");
        link.capacity = rec.at("capacity").get<double>();
        links.push_back(link);
    }
    try {
        return make_backhaul(K, links);
    } catch (const Error& e) {
        throw ParseError(std::string("backhaul: ") + e.what());
    }
}

BackhaulGraph load_backhaul(const std::filesystem::path& path) { return parse_backhaul(read_file(path)); }

}  // namespace coopic
