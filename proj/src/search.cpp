#include "sgt/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include <json.hpp>

#include "sgt/families.hpp"

namespace sgt {

const char* search_mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive: return "exhaustive";
        case SearchMode::GuidedOneNegativeEdge: return "guided";
        case SearchMode::Anneal: return "anneal";
        case SearchMode::HillClimb: return "hillclimb";
    }
    return "?";
}

std::optional<SearchMode> search_mode_from_string(const std::string& s) {
    if (s == "exhaustive") return SearchMode::Exhaustive;
    if (s == "guided") return SearchMode::GuidedOneNegativeEdge;
    if (s == "anneal") return SearchMode::Anneal;
    if (s == "hillclimb") return SearchMode::HillClimb;
    return std::nullopt;
}

void SearchConfig::validate() const {
    family.validate();
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (restarts < 1) throw ConfigError("restarts must be >= 1");
    if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
    if (!(tol > 0)) throw ConfigError("tol must be positive");
    if (!(t0 > 0) || !(cooling > 0) || cooling >= 1.0)
        throw ConfigError("annealing schedule requires t0 > 0 and 0 < cooling < 1");
    switch (mode) {
        case SearchMode::Exhaustive:
            if (n < 2 || n > 6) throw ConfigError("exhaustive mode requires 2 <= n <= 6");
            break;
        case SearchMode::GuidedOneNegativeEdge:
            if (n < 7 || n > 8) throw ConfigError("guided mode requires n in {7, 8}");
            break;
        case SearchMode::Anneal:
        case SearchMode::HillClimb:
            if (n < 4 || n > 32) throw ConfigError("stochastic modes require 4 <= n <= 32");
            break;
    }
}

const char* move_rule_name(Move::Rule r) {
    switch (r) {
        case Move::Rule::AddPositiveEdge: return "add-positive-edge";
        case Move::Rule::RemoveNegativeEdge: return "remove-negative-edge";
        case Move::Rule::ReverseNegativeEdge: return "reverse-negative-edge";
        case Move::Rule::RotateEdge: return "rotate-edge";
    }
    return "?";
}

std::tuple<SignedGraph, SwitchingSet, PerronVector> normalize_to_nonneg(const SignedGraph& g,
                                                                        double tol) {
    if (!g.connected()) throw Disconnected("normalize_to_nonneg requires a connected graph");
    auto eig = jacobi_eigen(adjacency(g), /*with_vectors=*/true);
    Eigen::VectorXd x = eig.vectors.col(0);
    SwitchingSet set;
    for (int i = 0; i < g.order(); ++i)
        if (x(i) < 0) set.bits |= 1ULL << i;
    SignedGraph flipped = switched(g, set);
    Eigen::VectorXd y = x;
    for (int i = 0; i < g.order(); ++i)
        if (set.contains(i)) y(i) = -y(i);
    (void)tol;
    return {std::move(flipped), set, PerronVector{std::move(y), eig.values(0)}};
}

std::vector<Move> enumerate_moves(const SignedGraph& g, const PerronVector& x, double zero_tol) {
    const int n = g.order();
    std::vector<Move> moves;
    auto positive = [&](int v) { return x.entries(v) > zero_tol; };
    // (a) add a positive edge between nonadjacent r < s, not both zero.
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            if (!g.adjacent(r, s) && (positive(r) || positive(s)))
                moves.push_back({Move::Rule::AddPositiveEdge, r, s, -1});
    // (b), (c) on each negative edge.
    for (const auto& e : g.negative_edges()) {
        moves.push_back({Move::Rule::RemoveNegativeEdge, e.u, e.v, -1});
        moves.push_back({Move::Rule::ReverseNegativeEdge, e.u, e.v, -1});
    }
    // (d) rotate positive edge sw to rw: x_r >= x_s, w in N(s)\N[r], x_w > 0.
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (r == s || x.entries(r) < x.entries(s)) continue;
            for (int w = 0; w < n; ++w) {
                if (w == r || w == s || !positive(w)) continue;
                if (g.sign(s, w) != +1) continue;
                if (g.adjacent(r, w)) continue;
                moves.push_back({Move::Rule::RotateEdge, r, s, w});
            }
        }
    return moves;
}

SignedGraph apply_move(const SignedGraph& g, const Move& m) {
    auto es = g.edges();
    auto erase_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        es.erase(std::remove_if(es.begin(), es.end(),
                                [&](const SignedEdge& e) { return e.u == a && e.v == b; }),
                 es.end());
    };
    switch (m.rule) {
        case Move::Rule::AddPositiveEdge:
            es.push_back({std::min(m.r, m.s), std::max(m.r, m.s), +1});
            break;
        case Move::Rule::RemoveNegativeEdge:
            erase_edge(m.r, m.s);
            break;
        case Move::Rule::ReverseNegativeEdge:
            for (auto& e : es)
                if (e.u == std::min(m.r, m.s) && e.v == std::max(m.r, m.s)) e.sign = -e.sign;
            break;
        case Move::Rule::RotateEdge:
            erase_edge(m.s, m.w);
            es.push_back({std::min(m.r, m.w), std::max(m.r, m.w), +1});
            break;
    }
    return SignedGraph(g.order(), std::move(es));
}

std::vector<std::pair<Move, SignedGraph>> perturb_moves(const SignedGraph& g,
                                                        const PerronVector& x, double zero_tol) {
    std::vector<std::pair<Move, SignedGraph>> out;
    for (const auto& m : enumerate_moves(g, x, zero_tol)) out.push_back({m, apply_move(g, m)});
    return out;
}

double bound_c3free(int n) {
    if (n < 3) throw PreconditionViolated("bound_c3free requires n >= 3");
    return 0.5 * (std::sqrt(static_cast<double>(n) * n - 8.0) + n - 4.0);
}

bool bound_k4free_check(const SignedGraph& g, double tol) {
    if (g.order() < 7) throw PreconditionViolated("bound_k4free_check requires order >= 7");
    if (is_balanced(g)) throw PreconditionViolated("bound_k4free_check requires an unbalanced graph");
    if (find_unbalanced_kr(g, 4))
        throw PreconditionViolated("bound_k4free_check requires an unbalanced-K4-free graph");
    return spectrum(g).rho <= g.order() - 2 + tol;
}

// ---------------------------------------------------------------------------
// run_search
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

// Bridge detection (low-link) over an edge subset given as pair indices.
std::vector<char> find_bridges(int n, const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& edge_ids) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (to, local edge idx)
    for (std::size_t i = 0; i < edge_ids.size(); ++i) {
        auto [u, v] = pairs[static_cast<std::size_t>(edge_ids[i])];
        adj[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(i)});
        adj[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(i)});
    }
    std::vector<char> bridge(edge_ids.size(), 0);
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        for (auto [to, ei] : adj[static_cast<std::size_t>(v)]) {
            if (ei == parent_edge) continue;
            if (disc[static_cast<std::size_t>(to)] != -1) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(to)]);
            } else {
                self(self, to, ei);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(to)]);
                if (low[static_cast<std::size_t>(to)] > disc[static_cast<std::size_t>(v)]) bridge[static_cast<std::size_t>(ei)] = 1;
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<std::size_t>(v)] == -1) dfs(dfs, v, -1);
    return bridge;
}

struct LocalResult {
    double best = -1e300;
    bool have = false;
    // Graphs with lambda1 within tol of the local best seen so far.
    std::vector<std::pair<double, SignedGraph>> near_max;
    std::map<long, std::uint64_t> hist;
    std::map<std::string, std::uint64_t> stats;

    void offer(double lambda, const SignedGraph& g, double tol) {
        if (!have || lambda > best) {
            have = true;
            best = lambda;
            std::erase_if(near_max, [&](const auto& p) { return p.first < best - tol; });
        }
        if (lambda >= best - tol) near_max.push_back({lambda, g});
    }
};

double lambda1_of(const SignedGraph& g) { return jacobi_eigen(adjacency(g)).values(0); }

// Shared finishing steps: re-validate the winner, decide the verdict, check
// the Gamma_{n,3} match.
void finalize_certificate(SearchCertificate& cert, const SearchConfig& cfg) {
    const SignedGraph& best = cert.best_graph;
    if (is_balanced(best)) throw Error("internal: search winner is balanced");
    if (!is_free(best, cfg.family)) throw Error("internal: search winner is not family-free");
    double lambda = lambda1_of(best);
    if (std::abs(lambda - cert.best_lambda1) > std::max(cfg.tol, 1e-9))
        throw Error("internal: winner lambda1 failed re-validation");
    cert.bound = cfg.n - 2.0;
    cert.verdict = cert.best_lambda1 > cert.bound + cfg.tol ? Verdict::CounterexampleFound
                                                            : Verdict::BoundHolds;
    SignedGraph gamma = build(FamilySpec::gamma(cfg.n, 3));
    if (cfg.n <= cfg.canon_limit && cfg.n <= 11) {
        cert.match_method = "canonical-key";
        cert.matches_gamma_n3 = switching_isomorphic(best, gamma, cfg.canon_limit);
    } else {
        cert.match_method = "lambda-within-tol";
        cert.matches_gamma_n3 = std::abs(cert.best_lambda1 - cert.bound) <= cfg.tol;
    }
}

// Deterministic pick among near-maximal graphs: highest lambda1 rounded to
// 1e-12, then smallest canonical key when available, then smallest text.
SignedGraph pick_winner(std::vector<std::pair<double, SignedGraph>> pool, const SearchConfig& cfg,
                        double* out_lambda) {
    if (pool.empty()) throw Error("internal: search found no feasible graph");
    long long best_round = llround(pool.front().first * 1e12);
    for (const auto& [lam, g] : pool) best_round = std::max(best_round, llround(lam * 1e12));
    std::vector<std::pair<std::string, std::size_t>> keys;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (llround(pool[i].first * 1e12) != best_round) continue;
        std::string key;
        if (cfg.n <= cfg.canon_limit && cfg.n <= 11) {
            auto k = canonical_key(pool[i].second, cfg.canon_limit).bytes;
            key.assign(k.begin(), k.end());
            key += '\0' + write_graph(pool[i].second);
        } else {
            key = write_graph(pool[i].second);
        }
        keys.push_back({std::move(key), i});
    }
    auto it = std::min_element(keys.begin(), keys.end());
    *out_lambda = pool[it->second].first;
    return pool[it->second].second;
}

void merge_stats(std::map<std::string, std::uint64_t>& into,
                 const std::map<std::string, std::uint64_t>& from) {
    for (const auto& [k, v] : from) into[k] += v;
}

// ---- exhaustive and guided enumeration ------------------------------------

SearchCertificate enumerate_search(const SearchConfig& cfg) {
    const int n = cfg.n;
    const auto pairs = all_pairs(n);
    const int np = static_cast<int>(pairs.size());
    const std::uint64_t total = 1ULL << np;
    const bool guided = cfg.mode == SearchMode::GuidedOneNegativeEdge;

    auto worker_run = [&](std::uint64_t begin, std::uint64_t end, LocalResult& local) {
        std::vector<int> edge_ids;
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t code = total - 1 - i;  // densest first
            const int m = std::popcount(code);
            local.stats["graphs_total"] += 1;
            if (m == 0) continue;

            edge_ids.clear();
            std::fill(deg.begin(), deg.end(), 0);
            for (int e = 0; e < np; ++e)
                if ((code >> e) & 1ULL) {
                    edge_ids.push_back(e);
                    ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].first)];
                    ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(e)].second)];
                }

            // Count signature classes before any pruning so the census stays
            // exact: spanning-forest representatives, 2^(m-n+c) per graph.
            DisjointSet ds(n);
            std::vector<int> nontree;
            for (int e : edge_ids)
                if (!ds.unite(pairs[static_cast<std::size_t>(e)].first, pairs[static_cast<std::size_t>(e)].second))
                    nontree.push_back(e);
            if (!guided)
                local.stats["signature_classes"] += 1ULL << nontree.size();
            if (nontree.empty()) {
                local.stats["graphs_forest"] += 1;
                continue;  // forests are balanced under every signature
            }

            // lambda1(signed) <= lambda1(underlying) <= min(max degree, sqrt(2m)).
            const int max_deg = *std::max_element(deg.begin(), deg.end());
            const double cheap_bound =
                std::min(static_cast<double>(max_deg), std::sqrt(2.0 * m));
            if (local.have && cheap_bound < local.best - cfg.tol) {
                local.stats["pruned_cheap"] += 1;
                continue;
            }
            RealMatrix underlying = RealMatrix::Zero(n, n);
            for (int e : edge_ids) {
                auto [u, v] = pairs[static_cast<std::size_t>(e)];
                underlying(u, v) = underlying(v, u) = 1.0;
            }
            const double lambda_underlying = jacobi_eigen(underlying).values(0);
            local.stats["underlying_eigs"] += 1;
            if (local.have && lambda_underlying < local.best - cfg.tol) {
                local.stats["pruned_underlying"] += 1;
                continue;
            }

            if (guided) {
                // All single-negative-edge signatures; a negative bridge
                // cannot lie on a cycle, so only non-bridges can unbalance.
                auto bridge = find_bridges(n, pairs, edge_ids);
                for (std::size_t j = 0; j < edge_ids.size(); ++j) {
                    local.stats["signature_classes"] += 1;
                    if (bridge[j]) {
                        local.stats["balanced_rejected"] += 1;
                        continue;
                    }
                    std::vector<SignedEdge> es;
                    es.reserve(edge_ids.size());
                    for (std::size_t k2 = 0; k2 < edge_ids.size(); ++k2) {
                        auto [u, v] = pairs[static_cast<std::size_t>(edge_ids[k2])];
                        es.push_back({u, v, k2 == j ? -1 : +1});
                    }
                    SignedGraph g(n, std::move(es));
                    if (!is_free(g, cfg.family)) {
                        local.stats["family_rejected"] += 1;
                        continue;
                    }
                    const double lambda = lambda1_of(g);
                    local.stats["eigs"] += 1;
                    local.hist[static_cast<long>(std::floor(lambda / 0.01))] += 1;
                    local.offer(lambda, g, cfg.tol);
                }
            } else {
                // Forest-positive representatives: tree edges positive, each
                // nonempty sign pattern on non-tree edges is one unbalanced
                // switching class.
                std::vector<char> is_nontree(static_cast<std::size_t>(np), 0);
                for (int e : nontree) is_nontree[static_cast<std::size_t>(e)] = 1;
                const std::uint64_t patterns = 1ULL << nontree.size();
                for (std::uint64_t sig = 1; sig < patterns; ++sig) {
                    std::vector<SignedEdge> es;
                    es.reserve(edge_ids.size());
                    std::size_t nt_idx = 0;
                    for (int e : edge_ids) {
                        auto [u, v] = pairs[static_cast<std::size_t>(e)];
                        int s = +1;
                        if (is_nontree[static_cast<std::size_t>(e)]) {
                            if ((sig >> nt_idx) & 1ULL) s = -1;
                            ++nt_idx;
                        }
                        es.push_back({u, v, s});
                    }
                    SignedGraph g(n, std::move(es));
                    if (!is_free(g, cfg.family)) {
                        local.stats["family_rejected"] += 1;
                        continue;
                    }
                    const double lambda = lambda1_of(g);
                    local.stats["eigs"] += 1;
                    local.hist[static_cast<long>(std::floor(lambda / 0.01))] += 1;
                    local.offer(lambda, g, cfg.tol);
                }
            }
        }
    };

    std::vector<LocalResult> locals(static_cast<std::size_t>(cfg.workers));
    if (cfg.workers == 1) {
        worker_run(0, total, locals[0]);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < cfg.workers; ++w) {
            std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(cfg.workers);
            std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(cfg.workers);
            threads.emplace_back(worker_run, begin, end, std::ref(locals[static_cast<std::size_t>(w)]));
        }
        for (auto& t : threads) t.join();
    }

    SearchCertificate cert;
    cert.config = cfg;
    double gbest = -1e300;
    bool have = false;
    for (const auto& l : locals)
        if (l.have && (!have || l.best > gbest)) {
            gbest = l.best;
            have = true;
        }
    if (!have) throw Error("search space contained no unbalanced family-free graph");

    std::vector<std::pair<double, SignedGraph>> pool;
    for (auto& l : locals) {
        for (auto& p : l.near_max)
            if (p.first >= gbest - cfg.tol) pool.push_back(std::move(p));
        for (const auto& [k, v] : l.hist) cert.histogram[k] += v;
        merge_stats(cert.stats, l.stats);
    }

    // Maximizer census: how many switching-isomorphism classes reach the top.
    if (n <= cfg.canon_limit && n <= 11) {
        std::vector<CanonicalKey> keys;
        for (const auto& [lam, g] : pool) keys.push_back(canonical_key(g, cfg.canon_limit));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        cert.stats["maximizer_classes"] = keys.size();
        CanonicalKey gamma_key = canonical_key(build(FamilySpec::gamma(n, 3)), cfg.canon_limit);
        cert.stats["maximizer_classes_matching_gamma"] =
            static_cast<std::uint64_t>(std::count(keys.begin(), keys.end(), gamma_key));
    }
    cert.stats["maximizers_within_tol"] = pool.size();

    cert.best_graph = pick_winner(std::move(pool), cfg, &cert.best_lambda1);
    if (guided)
        cert.restriction =
            "signatures restricted to exactly one negative edge; extremal maximizers provably "
            "take this form up to switching, but the run is not an unrestricted verification";
    finalize_certificate(cert, cfg);
    return cert;
}

// ---- stochastic modes ------------------------------------------------------

struct RestartOutcome {
    double best = -1e300;
    SignedGraph graph;
    std::map<std::string, std::uint64_t> stats;
};

SignedGraph random_feasible_graph(int n, const ForbiddenFamily& fam, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        const double p = 0.35 + 0.55 * ((rng() >> 11) * 0x1.0p-53);
        std::vector<SignedEdge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() >> 11) * 0x1.0p-53 < p)
                    es.push_back({u, v, (rng() % 8 == 0) ? -1 : +1});
        SignedGraph g(n, std::move(es));
        if (!is_balanced(g) && is_free(g, fam)) return g;
    }
    return build(FamilySpec::gamma(n, 3));
}

RestartOutcome run_restart(const SearchConfig& cfg, int restart) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0xA5A5A5A5ULL + static_cast<std::uint64_t>(restart) * 0x9E3779B97F4A7C15ULL)));
    RestartOutcome out;
    SignedGraph current = restart == 0 ? build(FamilySpec::gamma(cfg.n, 3))
                                       : random_feasible_graph(cfg.n, cfg.family, rng);
    double lambda_cur = lambda1_of(current);
    out.best = lambda_cur;
    out.graph = current;

    bool perron_fresh = false;
    SignedGraph gauge;       // current switched to its nonnegative gauge
    PerronVector perron;
    std::vector<Move> moves;

    double temperature = cfg.t0;
    for (int step = 0; step < cfg.max_steps; ++step, temperature *= cfg.cooling) {
        out.stats["steps"] += 1;
        SignedGraph candidate;
        const bool try_structured = (rng() & 1ULL) == 0 && current.connected();
        bool built = false;
        if (try_structured) {
            if (!perron_fresh) {
                auto [gN, set, x] = normalize_to_nonneg(current, cfg.tol);
                gauge = std::move(gN);
                perron = std::move(x);
                moves = enumerate_moves(gauge, perron, cfg.tol);
                perron_fresh = true;
            }
            if (!moves.empty()) {
                candidate = apply_move(gauge, moves[rng() % moves.size()]);
                out.stats["structured_proposals"] += 1;
                built = true;
            }
        }
        if (!built) {
            // Random toggle: add a positive edge, or flip/remove an existing one.
            int u = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            auto es = current.edges();
            int sign = current.sign(u, v);
            if (sign == 0) {
                es.push_back({u, v, (rng() % 4 == 0) ? -1 : +1});
            } else if (rng() & 1ULL) {
                for (auto& e : es)
                    if (e.u == u && e.v == v) e.sign = -e.sign;
            } else {
                std::erase_if(es, [&](const SignedEdge& e) { return e.u == u && e.v == v; });
            }
            candidate = SignedGraph(cfg.n, std::move(es));
            out.stats["random_proposals"] += 1;
        }

        if (is_balanced(candidate)) {
            out.stats["rejected_balanced"] += 1;
            continue;
        }
        if (!is_free(candidate, cfg.family)) {
            out.stats["rejected_family"] += 1;
            continue;
        }
        const double lambda_cand = lambda1_of(candidate);
        out.stats["eigs"] += 1;
        const double delta = lambda_cand - lambda_cur;
        bool accept;
        if (cfg.mode == SearchMode::HillClimb) {
            accept = delta > 0;
        } else {
            accept = delta > 0 ||
                     (rng() >> 11) * 0x1.0p-53 < std::exp(delta / std::max(temperature, 1e-12));
        }
        if (!accept) {
            out.stats["rejected_metropolis"] += 1;
            continue;
        }
        current = std::move(candidate);
        lambda_cur = lambda_cand;
        perron_fresh = false;
        out.stats["accepted"] += 1;
        if (lambda_cur > out.best) {
            out.best = lambda_cur;
            out.graph = current;
        }
    }
    return out;
}

SearchCertificate stochastic_search(const SearchConfig& cfg) {
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int r = next.fetch_add(1);
            if (r >= cfg.restarts) return;
            outcomes[static_cast<std::size_t>(r)] = run_restart(cfg, r);
        }
    };
    if (cfg.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < cfg.workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    SearchCertificate cert;
    cert.config = cfg;
    std::vector<std::pair<double, SignedGraph>> pool;
    for (int r = 0; r < cfg.restarts; ++r) {
        auto& o = outcomes[static_cast<std::size_t>(r)];
        pool.push_back({o.best, std::move(o.graph)});
        merge_stats(cert.stats, o.stats);
    }
    cert.stats["restarts"] = static_cast<std::uint64_t>(cfg.restarts);
    cert.best_graph = pick_winner(std::move(pool), cfg, &cert.best_lambda1);
    finalize_certificate(cert, cfg);
    return cert;
}

}  // namespace

SearchCertificate run_search(const SearchConfig& cfg) {
    cfg.validate();
    switch (cfg.mode) {
        case SearchMode::Exhaustive:
        case SearchMode::GuidedOneNegativeEdge:
            return enumerate_search(cfg);
        case SearchMode::Anneal:
        case SearchMode::HillClimb:
            return stochastic_search(cfg);
    }
    throw ConfigError("unknown search mode");
}

std::string certificate_json(const SearchCertificate& c) {
    nlohmann::ordered_json j;
    j["tool"] = "sgt";
    j["version"] = "0.1.0";
    j["n"] = c.config.n;
    j["family"] = c.config.family.str();
    j["mode"] = search_mode_name(c.config.mode);
    j["seed"] = c.config.seed;
    j["restarts"] = c.config.restarts;
    j["max_steps"] = c.config.max_steps;
    j["tol"] = c.config.tol;
    j["workers"] = c.config.workers;
    j["bound"] = c.bound;
    j["best_lambda1"] = c.best_lambda1;
    j["verdict"] = c.verdict == Verdict::BoundHolds ? "bound-holds" : "counterexample-found";
    j["matches_gamma_n3"] = c.matches_gamma_n3;
    j["match_method"] = c.match_method;
    if (!c.restriction.empty()) j["restriction"] = c.restriction;
    nlohmann::ordered_json stats = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    j["best_graph_sg"] = write_graph(c.best_graph);
    return j.dump(2) + "\n";
}

std::string histogram_csv(const SearchCertificate& c) {
    std::string out = "bucket_lo,count\n";
    char buf[64];
    for (const auto& [bucket, count] : c.histogram) {
        std::snprintf(buf, sizeof buf, "%.2f,%llu\n", static_cast<double>(bucket) * 0.01,
                      static_cast<unsigned long long>(count));
        out += buf;
    }
    return out;
}

}  // namespace sgt
