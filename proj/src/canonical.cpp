#include "sgt/canonical.hpp"

#include <algorithm>
#include <bit>

namespace sgt {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 0xF];
    }
    return s;
}

namespace {

// Signature strings are compared position by position, edge 0 first,
// with 0 (positive) ordered before 1 (negative).
bool sig_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
    return (a & low) == 0;
}

struct Canonicalizer {
    const SignedGraph& g;
    int n;
    int total_bits;
    std::vector<std::uint64_t> nbr;

    std::vector<int> old_of_new;
    std::vector<char> used;

    bool have_leaf = false;
    std::uint64_t best_enc = ~0ULL;
    std::uint64_t best_sig = 0;
    std::vector<std::pair<int, int>> canon_edges;   // new labels, sorted (u, v)
    std::vector<std::uint64_t> cut_basis;           // indexed by pivot edge

    explicit Canonicalizer(const SignedGraph& graph)
        : g(graph),
          n(graph.order()),
          total_bits(n * (n - 1) / 2),
          nbr(graph.neighbor_masks()),
          old_of_new(static_cast<std::size_t>(n), -1),
          used(static_cast<std::size_t>(n), 0) {}

    // Bit of the canonical underlying encoding for the new-label pair (j, i), j < i.
    bool enc_bit(std::uint64_t enc, int j, int i) const {
        int pos = i * (i - 1) / 2 + j;
        return (enc >> (total_bits - 1 - pos)) & 1ULL;
    }

    void rebuild_signature_support(std::uint64_t enc) {
        canon_edges.clear();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (enc_bit(enc, u, v)) canon_edges.push_back({u, v});
        const int m = static_cast<int>(canon_edges.size());
        // Cut space of the canonical underlying graph: one generator per
        // vertex 1..n-1 (switching at vertex 0 is redundant by complementation).
        cut_basis.assign(static_cast<std::size_t>(m), 0);
        for (int w = 1; w < n; ++w) {
            std::uint64_t row = 0;
            for (int e = 0; e < m; ++e)
                if (canon_edges[static_cast<std::size_t>(e)].first == w ||
                    canon_edges[static_cast<std::size_t>(e)].second == w)
                    row |= 1ULL << e;
            for (int p = 0; p < m && row; ++p) {
                if (!((row >> p) & 1ULL)) continue;
                if (cut_basis[static_cast<std::size_t>(p)])
                    row ^= cut_basis[static_cast<std::size_t>(p)];
                else {
                    cut_basis[static_cast<std::size_t>(p)] = row;
                    break;
                }
            }
        }
    }

    std::uint64_t reduced_signature() const {
        std::uint64_t sig = 0;
        const int m = static_cast<int>(canon_edges.size());
        for (int e = 0; e < m; ++e) {
            const auto [u, v] = canon_edges[static_cast<std::size_t>(e)];
            if (g.sign(old_of_new[static_cast<std::size_t>(u)], old_of_new[static_cast<std::size_t>(v)]) < 0)
                sig |= 1ULL << e;
        }
        for (int p = 0; p < m; ++p)
            if (((sig >> p) & 1ULL) && cut_basis[static_cast<std::size_t>(p)])
                sig ^= cut_basis[static_cast<std::size_t>(p)];
        return sig;
    }

    void leaf(std::uint64_t enc) {
        if (!have_leaf || enc < best_enc) {
            have_leaf = true;
            best_enc = enc;
            rebuild_signature_support(enc);
            best_sig = reduced_signature();
            return;
        }
        std::uint64_t sig = reduced_signature();
        if (sig_less(sig, best_sig)) best_sig = sig;
    }

    void dfs(int depth, std::uint64_t enc, int bits) {
        if (depth == n) {
            leaf(enc);
            return;
        }
        // Candidate rows sorted ascending explore small encodings first.
        std::vector<std::pair<std::uint64_t, int>> cands;
        cands.reserve(static_cast<std::size_t>(n - depth));
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            std::uint64_t row = 0;
            for (int j = 0; j < depth; ++j) {
                row <<= 1;
                row |= (nbr[static_cast<std::size_t>(v)] >>
                        old_of_new[static_cast<std::size_t>(j)]) & 1ULL;
            }
            cands.push_back({row, v});
        }
        std::sort(cands.begin(), cands.end());
        for (auto [row, v] : cands) {
            std::uint64_t enc2 = (enc << depth) | row;
            int bits2 = bits + depth;
            if (have_leaf && enc2 > (best_enc >> (total_bits - bits2))) continue;
            used[static_cast<std::size_t>(v)] = 1;
            old_of_new[static_cast<std::size_t>(depth)] = v;
            dfs(depth + 1, enc2, bits2);
            used[static_cast<std::size_t>(v)] = 0;
        }
    }

    CanonicalKey key() {
        CanonicalKey k;
        if (n == 0) {
            k.bytes = {0};
            return k;
        }
        dfs(0, 0, 0);
        k.bytes.push_back(static_cast<std::uint8_t>(n));
        auto push_bits = [&](std::uint64_t word, int nbits) {
            std::uint8_t acc = 0;
            int filled = 0;
            for (int i = nbits - 1; i >= 0; --i) {
                acc = static_cast<std::uint8_t>((acc << 1) | ((word >> i) & 1ULL));
                if (++filled == 8) {
                    k.bytes.push_back(acc);
                    acc = 0;
                    filled = 0;
                }
            }
            if (filled) k.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
        };
        push_bits(best_enc, total_bits);
        push_bits(best_sig, static_cast<int>(canon_edges.size()));
        return k;
    }
};

}  // namespace

CanonicalKey canonical_key(const SignedGraph& g, int limit) {
    if (g.order() > limit)
        throw LimitExceeded("canonical_key: order " + std::to_string(g.order()) +
                            " above canonicalization limit " + std::to_string(limit));
    if (g.order() > 11)
        throw LimitExceeded("canonical_key: encodings use one 64-bit word, order <= 11 only");
    Canonicalizer c(g);
    return c.key();
}

bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b, int limit) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() > limit)
        throw LimitExceeded("switching_isomorphic: order above canonicalization limit");
    return canonical_key(a, limit) == canonical_key(b, limit);
}

}  // namespace sgt
