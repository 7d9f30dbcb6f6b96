#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sgt/errors.hpp"

namespace sgt {

namespace limits {
/// 2^(n-1) switchings are enumerated exhaustively up to this order.
inline constexpr int kSwitchingEnumeration = 20;
/// Canonical labeling (n! permutations with pruning) is attempted up to this order.
inline constexpr int kCanonicalization = 10;
/// Neighbor bitmasks use a single 64-bit word.
inline constexpr int kBitmask = 64;
}  // namespace limits

/// An undirected edge with endpoints u < v and sign +1 or -1.
struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = +1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// A subset of vertices encoded as a 64-bit mask. Switching at a set and at
/// its complement produce the same graph, so sets are usually canonicalized
/// to exclude vertex 0.
struct SwitchingSet {
    std::uint64_t bits = 0;

    SwitchingSet() = default;
    explicit SwitchingSet(std::uint64_t mask) : bits(mask) {}
    static SwitchingSet of(std::initializer_list<int> vertices);

    bool contains(int v) const { return (bits >> v) & 1ULL; }
    bool empty() const { return bits == 0; }
    int count() const;
    std::vector<int> vertices(int n) const;

    /// Complement within 0..n-1 if vertex 0 is a member, so that the
    /// representative of each switching never contains vertex 0.
    SwitchingSet canonicalized(int n) const;

    friend bool operator==(const SwitchingSet&, const SwitchingSet&) = default;
};

/// Immutable simple graph with +1/-1 edge signs. Vertices are 0..n-1.
/// Disconnected graphs are legal everywhere.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and normalizes: endpoints in range, u != v, signs in {-1,+1},
    /// no duplicate pairs. Edges are stored sorted by (u, v) with u < v.
    SignedGraph(int n, std::vector<SignedEdge> edges);

    /// All-positive complete graph on n vertices.
    static SignedGraph complete(int n);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    /// Sign of edge (u, v), or 0 when not adjacent.
    int sign(int u, int v) const;
    bool adjacent(int u, int v) const { return sign(u, v) != 0; }

    int negative_edge_count() const;
    std::vector<SignedEdge> negative_edges() const;
    std::vector<int> degrees() const;
    int max_degree() const;

    /// Per-vertex neighbor bitmask over the underlying graph. Requires n <= 64.
    std::vector<std::uint64_t> neighbor_masks() const;

    bool connected() const;
    /// Component id per vertex, ids assigned in order of first appearance.
    std::vector<int> component_labels() const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

/// True iff every cycle carries an even number of negative edges. Checked per
/// connected component by spanning-tree label propagation in O(n + m).
bool is_balanced(const SignedGraph& g);

/// Flip the sign of every edge with exactly one endpoint in `set`.
/// Involution: switched(switched(g, u), u) == g.
SignedGraph switched(const SignedGraph& g, const SwitchingSet& set);

/// Relabel vertices: vertex i of `g` becomes perm[i] in the result.
SignedGraph permuted(const SignedGraph& g, const std::vector<int>& perm);

/// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<int>& vertices);

/// Switching-equivalent graph with the minimum number of negative edges over
/// all 2^(n-1) switchings; ties broken by the lexicographically smallest
/// negative-edge set. Balanced inputs come back all-positive.
std::pair<SignedGraph, SwitchingSet> negative_edge_minimize(
    const SignedGraph& g, int max_order = limits::kSwitchingEnumeration);

/// Parse the `.sg` text format:
///   line 1: "n m"; then m lines "u v s" with 0 <= u < v < n and s one of
///   +, -, +1, -1. Lines starting with '#' are comments.
SignedGraph read_graph(const std::string& text);
SignedGraph read_graph_file(const std::string& path);

/// Canonical `.sg` text: edges sorted by (u, v), signs written as '+'/'-'.
std::string write_graph(const SignedGraph& g);
void write_graph_file(const SignedGraph& g, const std::string& path);

}  // namespace sgt
