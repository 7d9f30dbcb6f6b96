#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

/// A family of forbidden unbalanced signed subgraphs, identified by the
/// underlying pattern: complete bipartite K_{s,t}, complete K_r, or cycle C_k.
struct ForbiddenFamily {
    enum class Kind { CompleteBipartite, Complete, Cycle };
    Kind kind = Kind::CompleteBipartite;
    int s = 3;
    int t = 3;  // r and k reuse `s`

    static ForbiddenFamily kst(int s, int t) { return {Kind::CompleteBipartite, s, t}; }
    static ForbiddenFamily kr(int r) { return {Kind::Complete, r, 0}; }
    static ForbiddenFamily ck(int k) { return {Kind::Cycle, k, 0}; }

    /// Bipartite: s, t >= 2. Complete: r >= 3. Cycle: k >= 3.
    void validate() const;
    std::string str() const;
    static std::optional<ForbiddenFamily> parse(const std::string& text);

    friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;
};

/// A concrete occurrence of a forbidden subgraph: the vertices realizing the
/// pattern (for K_{s,t} the first s form one side) and a negative cycle
/// inside it as the unbalance certificate.
struct Witness {
    std::vector<int> vertices;
    std::vector<int> certificate_cycle;
};

/// First unbalanced K_{s,t} subgraph, or nullopt. Every unbalanced complete
/// bipartite sign pattern contains a negative cross edge, so enumeration is
/// anchored at negative edges: A runs over {u} plus (s-1)-subsets of N(v),
/// B over {v} plus (t-1)-subsets of the common neighborhood of A. A 2x2
/// submatrix with negative product yields the C4 certificate.
std::optional<Witness> find_unbalanced_kst(const SignedGraph& g, int s, int t);

/// First r-clique of the underlying graph whose induced signed subgraph is
/// unbalanced; the certificate is a negative triangle inside the clique.
std::optional<Witness> find_unbalanced_kr(const SignedGraph& g, int r);

/// First k-cycle with an odd number of negative edges. k = 3 enumerates
/// triangles by neighborhood masks; larger k walks simple paths under a work
/// cap (throws WorkCapExceeded past `work_cap` extension steps).
std::optional<Witness> find_unbalanced_ck(const SignedGraph& g, int k,
                                          std::uint64_t work_cap = 10'000'000);

/// True iff the corresponding find_* returns no witness.
bool is_free(const SignedGraph& g, const ForbiddenFamily& fam);

/// Revalidates a witness against the graph: pattern edges present and the
/// certificate cycle is negative.
bool witness_valid(const SignedGraph& g, const ForbiddenFamily& fam, const Witness& w);

}  // namespace sgt
