#include "sgt/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sgt {

SwitchingSet SwitchingSet::of(std::initializer_list<int> vertices) {
    SwitchingSet s;
    for (int v : vertices) s.bits |= 1ULL << v;
    return s;
}

int SwitchingSet::count() const { return std::popcount(bits); }

std::vector<int> SwitchingSet::vertices(int n) const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

SwitchingSet SwitchingSet::canonicalized(int n) const {
    if (!contains(0)) return *this;
    std::uint64_t all = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
    return SwitchingSet(all & ~bits);
}

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvariantViolation("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw InvariantViolation("edge endpoint out of range");
        if (e.u == e.v) throw InvariantViolation("self-loop rejected");
        if (e.sign != +1 && e.sign != -1) throw InvariantViolation("edge sign must be +1 or -1");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw InvariantViolation("parallel edge rejected");
}

SignedGraph SignedGraph::complete(int n) {
    std::vector<SignedEdge> es;
    es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v, +1});
    return SignedGraph(n, std::move(es));
}

int SignedGraph::sign(int u, int v) const {
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), SignedEdge{u, v, -1});
    if (it != edges_.end() && it->u == u && it->v == v) return it->sign;
    return 0;
}

int SignedGraph::negative_edge_count() const {
    int k = 0;
    for (const auto& e : edges_) k += e.sign < 0;
    return k;
}

std::vector<SignedEdge> SignedGraph::negative_edges() const {
    std::vector<SignedEdge> out;
    for (const auto& e : edges_)
        if (e.sign < 0) out.push_back(e);
    return out;
}

std::vector<int> SignedGraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

int SignedGraph::max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::uint64_t> SignedGraph::neighbor_masks() const {
    if (n_ > limits::kBitmask) throw LimitExceeded("neighbor masks require order <= 64");
    std::vector<std::uint64_t> m(n_, 0);
    for (const auto& e : edges_) {
        m[e.u] |= 1ULL << e.v;
        m[e.v] |= 1ULL << e.u;
    }
    return m;
}

std::vector<int> SignedGraph::component_labels() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> label(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

bool SignedGraph::connected() const {
    if (n_ <= 1) return true;
    auto label = component_labels();
    return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

bool is_balanced(const SignedGraph& g) {
    const int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, sign)
    for (const auto& e : g.edges()) {
        adj[e.u].push_back({e.v, e.sign});
        adj[e.v].push_back({e.u, e.sign});
    }
    std::vector<int> mark(n, 0);  // 0 unseen, else +1/-1 label
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (mark[s] != 0) continue;
        mark[s] = +1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, sg] : adj[v]) {
                int want = mark[v] * sg;
                if (mark[w] == 0) {
                    mark[w] = want;
                    stack.push_back(w);
                } else if (mark[w] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

SignedGraph switched(const SignedGraph& g, const SwitchingSet& set) {
    auto es = g.edges();
    for (auto& e : es)
        if (set.contains(e.u) != set.contains(e.v)) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(es));
}

SignedGraph permuted(const SignedGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw InvariantViolation("permutation length must equal graph order");
    auto es = g.edges();
    for (auto& e : es) {
        e.u = perm[e.u];
        e.v = perm[e.v];
    }
    return SignedGraph(g.order(), std::move(es));
}

SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<SignedEdge> es;
    for (const auto& e : g.edges())
        if (pos[e.u] != -1 && pos[e.v] != -1) es.push_back({pos[e.u], pos[e.v], e.sign});
    return SignedGraph(static_cast<int>(vertices.size()), std::move(es));
}

namespace {

// Lexicographic order on equally-sized negative-edge sets encoded as masks
// over the sorted edge list: at the first differing edge, the set containing
// that edge is the smaller one.
bool neg_set_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t diff = a[w] ^ b[w];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a[w] & low) != 0;
        }
    }
    return false;
}

}  // namespace

std::pair<SignedGraph, SwitchingSet> negative_edge_minimize(const SignedGraph& g, int max_order) {
    const int n = g.order();
    if (n > max_order) throw LimitExceeded("negative_edge_minimize: order above switching limit");
    const auto& edges = g.edges();
    const int m = g.size();
    const int words = (m + 63) / 64;

    // Per-edge endpoint masks; a switching flips edge e iff the mask parity is odd.
    std::vector<std::uint64_t> endpoint(m);
    std::vector<std::uint64_t> base(words, 0);
    for (int e = 0; e < m; ++e) {
        endpoint[e] = (1ULL << edges[e].u) | (1ULL << edges[e].v);
        if (edges[e].sign < 0) base[e / 64] |= 1ULL << (e % 64);
    }

    std::uint64_t best_mask = 0;
    int best_count = g.negative_edge_count();
    std::vector<std::uint64_t> best_neg = base;
    std::vector<std::uint64_t> cur(words);

    const std::uint64_t top = (n <= 1) ? 1 : (1ULL << (n - 1));
    for (std::uint64_t s = 0; s < top; ++s) {
        const std::uint64_t mask = s << 1;  // vertex 0 always excluded
        std::fill(cur.begin(), cur.end(), 0);
        int count = 0;
        for (int e = 0; e < m; ++e) {
            bool neg = base[e / 64] >> (e % 64) & 1;
            if (std::popcount(mask & endpoint[e]) & 1) neg = !neg;
            if (neg) {
                cur[e / 64] |= 1ULL << (e % 64);
                ++count;
            }
        }
        if (count < best_count || (count == best_count && neg_set_less(cur, best_neg))) {
            best_count = count;
            best_neg = cur;
            best_mask = mask;
        }
    }
    SwitchingSet set{best_mask};
    return {switched(g, set), set};
}

namespace {

int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

SignedGraph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<SignedEdge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue;  // blank
        if (a[0] == '#') continue;
        if (n < 0) {
            if (!(ls >> b)) throw ParseError(lineno, "header must be 'n m'");
            n = parse_int(a, lineno, "vertex count");
            m = parse_int(b, lineno, "edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in header");
            continue;
        }
        if (!(ls >> b >> c)) throw ParseError(lineno, "edge line must be 'u v s'");
        int u = parse_int(a, lineno, "vertex");
        int v = parse_int(b, lineno, "vertex");
        int sign;
        if (c == "+" || c == "+1")
            sign = +1;
        else if (c == "-" || c == "-1")
            sign = -1;
        else
            throw InvariantViolation("line " + std::to_string(lineno) + ": bad sign '" + c + "'");
        if (u == v) throw InvariantViolation("line " + std::to_string(lineno) + ": self-loop");
        if (u > v) throw ParseError(lineno, "edges must satisfy u < v");
        if (v >= n) throw ParseError(lineno, "vertex index out of range");
        edges.push_back({u, v, sign});
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(edges.size()));
    return SignedGraph(n, std::move(edges));
}

SignedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_graph(ss.str());
}

std::string write_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

void write_graph_file(const SignedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << write_graph(g);
}

}  // namespace sgt
