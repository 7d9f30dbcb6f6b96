#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

/// Total-order key with the property that two signed graphs have equal keys
/// iff they are switching isomorphic (graphs within the canonicalization
/// order limit only).
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

    std::string hex() const;
};

/// Minimizes an encoding over vertex relabelings and switchings: the
/// underlying graph is canonically labeled first (permutation backtracking
/// with prefix pruning), then the signature is minimized over the switching
/// class within the tied labelings (lex-min coset element of the cut space).
CanonicalKey canonical_key(const SignedGraph& g, int limit = limits::kCanonicalization);

bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                          int limit = limits::kCanonicalization);

}  // namespace sgt
