#include "sgt/forbidden.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

namespace sgt {

void ForbiddenFamily::validate() const {
    switch (kind) {
        case Kind::CompleteBipartite:
            if (s < 2 || t < 2) throw InvariantViolation("K_{s,t} family requires s, t >= 2");
            break;
        case Kind::Complete:
            if (s < 3) throw InvariantViolation("K_r family requires r >= 3");
            break;
        case Kind::Cycle:
            if (s < 3) throw InvariantViolation("C_k family requires k >= 3");
            break;
    }
}

std::string ForbiddenFamily::str() const {
    switch (kind) {
        case Kind::CompleteBipartite:
            return "kst:" + std::to_string(s) + "," + std::to_string(t);
        case Kind::Complete:
            return "kr:" + std::to_string(s);
        case Kind::Cycle:
            return "ck:" + std::to_string(s);
    }
    return "?";
}

std::optional<ForbiddenFamily> ForbiddenFamily::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = text.substr(0, colon), args = text.substr(colon + 1);
    try {
        if (head == "kst") {
            auto comma = args.find(',');
            if (comma == std::string::npos) return std::nullopt;
            return kst(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
        }
        if (head == "kr") return kr(std::stoi(args));
        if (head == "ck") return ck(std::stoi(args));
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

// Visit all k-subsets of `pool` in lexicographic order; stop early on true.
bool for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<bool(const std::vector<int>&)>& visit) {
    const int p = static_cast<int>(pool.size());
    if (k > p) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> subset(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (visit(subset)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Unbalance test for a complete bipartite sign pattern: balanced iff every
// 2x2 submatrix has product +1. Returns the violating C4 as vertex indices.
std::optional<std::array<int, 4>> bipartite_violation(const SignedGraph& g,
                                                      const std::vector<int>& a,
                                                      const std::vector<int>& b) {
    for (std::size_t i = 1; i < a.size(); ++i)
        for (std::size_t j = 1; j < b.size(); ++j) {
            int prod = g.sign(a[0], b[0]) * g.sign(a[i], b[0]) * g.sign(a[i], b[j]) *
                       g.sign(a[0], b[j]);
            if (prod < 0) return std::array<int, 4>{a[0], b[0], a[i], b[j]};
        }
    return std::nullopt;
}

std::optional<Witness> kst_anchored(const SignedGraph& g, int s, int t,
                                    const std::vector<std::uint64_t>& nbr) {
    std::optional<Witness> found;
    for (const auto& e : g.edges()) {
        if (e.sign > 0) continue;
        // Two orientations: the anchor edge sits in A x B either way.
        for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (s == t && u > v) continue;  // symmetric pattern, one orientation suffices
            std::uint64_t a_pool_mask = nbr[static_cast<std::size_t>(v)] & ~(1ULL << u);
            auto a_pool = mask_vertices(a_pool_mask);
            bool stop = for_each_subset(a_pool, s - 1, [&](const std::vector<int>& a_rest) {
                std::vector<int> a = {u};
                a.insert(a.end(), a_rest.begin(), a_rest.end());
                std::uint64_t common = ~0ULL;
                for (int x : a) common &= nbr[static_cast<std::size_t>(x)];
                for (int x : a) common &= ~(1ULL << x);
                common &= ~(1ULL << v);
                auto b_pool = mask_vertices(common);
                return for_each_subset(b_pool, t - 1, [&](const std::vector<int>& b_rest) {
                    std::vector<int> b = {v};
                    b.insert(b.end(), b_rest.begin(), b_rest.end());
                    auto c4 = bipartite_violation(g, a, b);
                    if (!c4) return false;
                    Witness w;
                    w.vertices = a;
                    w.vertices.insert(w.vertices.end(), b.begin(), b.end());
                    w.certificate_cycle = {(*c4)[0], (*c4)[1], (*c4)[2], (*c4)[3]};
                    found = std::move(w);
                    return true;
                });
            });
            if (stop) return found;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_unbalanced_kst(const SignedGraph& g, int s, int t) {
    if (s < 2 || t < 2) throw InvariantViolation("find_unbalanced_kst requires s, t >= 2");
    if (g.order() > limits::kBitmask)
        throw LimitExceeded("find_unbalanced_kst: order above bitmask limit");
    if (s + t > g.order() || g.negative_edge_count() == 0) return std::nullopt;
    return kst_anchored(g, s, t, g.neighbor_masks());
}

namespace {

std::optional<Witness> clique_extend(const SignedGraph& g, const std::vector<std::uint64_t>& nbr,
                                     std::vector<int>& clique, std::uint64_t cand, int r) {
    if (static_cast<int>(clique.size()) == r) {
        // Labels x_i = sign(c0, ci); balanced iff sign(ci, cj) == x_i * x_j.
        for (std::size_t i = 1; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                int prod = g.sign(clique[0], clique[i]) * g.sign(clique[0], clique[j]) *
                           g.sign(clique[i], clique[j]);
                if (prod < 0) {
                    Witness w;
                    w.vertices = clique;
                    w.certificate_cycle = {clique[0], clique[i], clique[j]};
                    return w;
                }
            }
        return std::nullopt;
    }
    std::uint64_t rest = cand;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        clique.push_back(v);
        std::uint64_t next = cand & nbr[static_cast<std::size_t>(v)] &
                             ~((1ULL << (v + 1)) - 1);
        if (auto w = clique_extend(g, nbr, clique, next, r)) return w;
        clique.pop_back();
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_unbalanced_kr(const SignedGraph& g, int r) {
    if (r < 3) throw InvariantViolation("find_unbalanced_kr requires r >= 3");
    if (g.order() > limits::kBitmask)
        throw LimitExceeded("find_unbalanced_kr: order above bitmask limit");
    if (r > g.order() || g.negative_edge_count() == 0) return std::nullopt;
    auto nbr = g.neighbor_masks();
    std::vector<int> clique;
    std::uint64_t all = (g.order() >= 64) ? ~0ULL : ((1ULL << g.order()) - 1);
    return clique_extend(g, nbr, clique, all, r);
}

std::optional<Witness> find_unbalanced_ck(const SignedGraph& g, int k, std::uint64_t work_cap) {
    if (k < 3) throw InvariantViolation("find_unbalanced_ck requires k >= 3");
    if (g.order() > limits::kBitmask)
        throw LimitExceeded("find_unbalanced_ck: order above bitmask limit");
    if (k > g.order() || g.negative_edge_count() == 0) return std::nullopt;
    auto nbr = g.neighbor_masks();
    const int n = g.order();

    if (k == 3) {
        for (const auto& e : g.edges()) {
            std::uint64_t common = nbr[static_cast<std::size_t>(e.u)] &
                                   nbr[static_cast<std::size_t>(e.v)];
            while (common) {
                int w = std::countr_zero(common);
                common &= common - 1;
                if (w < e.v) continue;  // visit each triangle once: w > v > u
                if (e.sign * g.sign(e.u, w) * g.sign(e.v, w) < 0) {
                    Witness wit;
                    wit.vertices = {e.u, e.v, w};
                    wit.certificate_cycle = wit.vertices;
                    return wit;
                }
            }
        }
        return std::nullopt;
    }

    // Simple paths anchored at their smallest vertex; the second vertex is
    // kept below the last one so each cycle is enumerated once.
    std::uint64_t work = 0;
    std::vector<int> path;
    std::optional<Witness> found;
    auto dfs = [&](auto&& self, std::uint64_t visited, int sign_prod) -> bool {
        if (static_cast<int>(path.size()) == k) {
            int a = path.front(), z = path.back();
            if (path[1] > z) return false;
            int closing = g.sign(a, z);
            if (closing != 0 && sign_prod * closing < 0) {
                Witness w;
                w.vertices = path;
                w.certificate_cycle = path;
                found = std::move(w);
                return true;
            }
            return false;
        }
        int last = path.back();
        std::uint64_t nexts = nbr[static_cast<std::size_t>(last)] & ~visited;
        nexts &= ~((1ULL << path[0]) - 1) & ~(1ULL << path[0]);  // stay above anchor
        while (nexts) {
            if (++work > work_cap) throw WorkCapExceeded("find_unbalanced_ck work cap hit");
            int v = std::countr_zero(nexts);
            nexts &= nexts - 1;
            path.push_back(v);
            if (self(self, visited | (1ULL << v), sign_prod * g.sign(last, v))) return true;
            path.pop_back();
        }
        return false;
    };
    for (int a = 0; a + k <= n; ++a) {
        path = {a};
        if (dfs(dfs, 1ULL << a, 1)) return found;
    }
    return std::nullopt;
}

bool is_free(const SignedGraph& g, const ForbiddenFamily& fam) {
    fam.validate();
    switch (fam.kind) {
        case ForbiddenFamily::Kind::CompleteBipartite:
            return !find_unbalanced_kst(g, fam.s, fam.t).has_value();
        case ForbiddenFamily::Kind::Complete:
            return !find_unbalanced_kr(g, fam.s).has_value();
        case ForbiddenFamily::Kind::Cycle:
            return !find_unbalanced_ck(g, fam.s).has_value();
    }
    return true;
}

bool witness_valid(const SignedGraph& g, const ForbiddenFamily& fam, const Witness& w) {
    fam.validate();
    // Certificate cycle: edges present, odd negative count, distinct vertices.
    const auto& c = w.certificate_cycle;
    if (c.size() < 3) return false;
    int neg = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int s = g.sign(c[i], c[(i + 1) % c.size()]);
        if (s == 0) return false;
        if (s < 0) ++neg;
    }
    if (neg % 2 == 0) return false;
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    switch (fam.kind) {
        case ForbiddenFamily::Kind::CompleteBipartite: {
            if (static_cast<int>(w.vertices.size()) != fam.s + fam.t) return false;
            for (int i = 0; i < fam.s; ++i)
                for (int j = 0; j < fam.t; ++j)
                    if (!g.adjacent(w.vertices[static_cast<std::size_t>(i)],
                                    w.vertices[static_cast<std::size_t>(fam.s + j)]))
                        return false;
            return true;
        }
        case ForbiddenFamily::Kind::Complete: {
            if (static_cast<int>(w.vertices.size()) != fam.s) return false;
            for (std::size_t i = 0; i < w.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
                    if (!g.adjacent(w.vertices[i], w.vertices[j])) return false;
            return true;
        }
        case ForbiddenFamily::Kind::Cycle:
            return static_cast<int>(w.vertices.size()) == fam.s && c == w.vertices;
    }
    return false;
}

}  // namespace sgt
