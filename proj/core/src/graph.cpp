#include "symreg/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "symreg/errors.hpp"

namespace symreg {

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int SimpleGraph::edge_count() const {
    int m = 0;
    for (std::uint32_t a : adj_) m += std::popcount(a);
    return m / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw Error("edge endpoint out of range");
    if (u == v) throw Error("loops are not allowed");
    adj_[u - 1] |= (1u << (v - 1));
    adj_[v - 1] |= (1u << (u - 1));
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return (adj_[u - 1] >> (v - 1)) & 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v - 1]); }

MonomialIdeal edge_ideal(const SimpleGraph& G) {
    std::vector<Monomial> gens;
    for (auto [u, v] : G.edges()) {
        std::vector<int> e(G.n(), 0);
        e[u - 1] = 1;
        e[v - 1] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::from_generators(G.n(), std::move(gens));
}

std::vector<int> neighborhood(const SimpleGraph& G, const std::vector<int>& U, bool closed) {
    std::uint32_t m = 0;
    for (int u : U) {
        if (u < 1 || u > G.n()) throw Error("neighborhood vertex out of range");
        m |= G.adjacency_mask(u);
        if (closed) m |= (1u << (u - 1));
    }
    std::vector<int> out;
    for (int v = 1; v <= G.n(); ++v)
        if ((m >> (v - 1)) & 1) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> cliques(const SimpleGraph& G, int k) {
    if (k < 2 || k > G.n()) throw Error("clique size must satisfy 2 <= k <= n");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= G.n(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!G.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        }
    };
    rec(1);
    return out;
}

namespace {

std::array<int, 5> canonical_cycle(std::array<int, 5> c) {
    std::array<int, 5> best = c;
    for (int rev = 0; rev < 2; ++rev) {
        for (int rot = 0; rot < 5; ++rot) {
            std::array<int, 5> cand;
            for (int i = 0; i < 5; ++i) cand[i] = c[(rot + i) % 5];
            best = std::min(best, cand);
        }
        std::reverse(c.begin(), c.end());
    }
    return best;
}

}  // namespace

std::vector<std::array<int, 5>> five_cycles(const SimpleGraph& G) {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> c{};
    std::function<void(int)> rec = [&](int depth) {
        if (depth == 5) {
            if (G.has_edge(c[4], c[0])) {
                std::array<int, 5> canon = canonical_cycle(c);
                if (canon == c) out.push_back(c);
            }
            return;
        }
        for (int v = 1; v <= G.n(); ++v) {
            bool used = false;
            for (int i = 0; i < depth; ++i)
                if (c[i] == v) used = true;
            if (used) continue;
            if (depth > 0 && !G.has_edge(c[depth - 1], v)) continue;
            c[depth] = v;
            rec(depth + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

AuxIdeals aux_ideals(const SimpleGraph& G) {
    int n = G.n();
    auto support_gen = [n](const std::vector<int>& verts) {
        std::vector<int> e(n, 0);
        for (int v : verts) e[v - 1] = 1;
        return Monomial(std::move(e));
    };
    AuxIdeals out;
    std::vector<Monomial> g1, g2, g3;
    if (n >= 3)
        for (const auto& t : cliques(G, 3)) g1.push_back(support_gen(t));
    if (n >= 4)
        for (const auto& q : cliques(G, 4)) g2.push_back(support_gen(q));
    if (n >= 5) {
        for (const auto& c : five_cycles(G))
            g2.push_back(support_gen(std::vector<int>(c.begin(), c.end())));
        for (const auto& q : cliques(G, 5)) g3.push_back(support_gen(q));
    }
    out.j1 = MonomialIdeal::from_generators(n, std::move(g1));
    out.j2 = MonomialIdeal::from_generators(n, std::move(g2));
    out.j3 = MonomialIdeal::from_generators(n, std::move(g3));
    return out;
}

std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& G) {
    auto edges = G.edges();
    if (edges.empty()) throw Error("minimal vertex covers require at least one edge");
    int n = G.n();
    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(edges.size());
    for (auto [u, v] : edges) edge_masks.push_back((1u << (u - 1)) | (1u << (v - 1)));
    auto hits_all = [&](std::uint32_t s) {
        for (std::uint32_t em : edge_masks)
            if ((em & s) == 0) return false;
        return true;
    };
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (!hits_all(s)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((s >> i) & 1)
                if (hits_all(s & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> cover;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1) cover.push_back(i + 1);
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_bipartite(const SimpleGraph& G) {
    std::vector<int> color(G.n() + 1, -1);
    for (int start = 1; start <= G.n(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v = 1; v <= G.n(); ++v) {
                if (!G.has_edge(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

MatchingStats matching_stats(const SimpleGraph& G) {
    if (G.n() > 20) throw Error("matching statistics are limited to n <= 20");
    auto edges = G.edges();
    MatchingStats stats;
    // maximum matching by DP over covered-vertex masks
    std::vector<int> best(1u << G.n(), -1);
    std::function<int(std::uint32_t)> max_match = [&](std::uint32_t used) -> int {
        if (best[used] >= 0) return best[used];
        int r = 0;
        for (auto [u, v] : edges) {
            std::uint32_t em = (1u << (u - 1)) | (1u << (v - 1));
            if (em & used) continue;
            r = std::max(r, 1 + max_match(used | em));
        }
        return best[used] = r;
    };
    if (G.n() > 0) stats.matching_number = max_match(0);

    // induced matchings: edge sets pairwise disjoint with no connecting edge
    int m = static_cast<int>(edges.size());
    std::vector<std::uint32_t> closed_masks(m);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = edges[i];
        closed_masks[i] = (1u << (u - 1)) | (1u << (v - 1)) | G.adjacency_mask(u) | G.adjacency_mask(v);
    }
    std::function<int(int, std::uint32_t)> max_induced = [&](int from, std::uint32_t blocked) -> int {
        int r = 0;
        for (int i = from; i < m; ++i) {
            auto [u, v] = edges[i];
            std::uint32_t em = (1u << (u - 1)) | (1u << (v - 1));
            if (em & blocked) continue;
            r = std::max(r, 1 + max_induced(i + 1, blocked | closed_masks[i]));
        }
        return r;
    };
    stats.induced_matching_number = max_induced(0, 0);
    return stats;
}

SimpleGraph induced_subgraph(const SimpleGraph& G, const std::vector<int>& U) {
    std::uint32_t mask = 0;
    for (int v : U) {
        if (v < 1 || v > G.n()) throw Error("induced subgraph vertex out of range");
        mask |= (1u << (v - 1));
    }
    SimpleGraph H(G.n());
    for (auto [u, v] : G.edges())
        if (((mask >> (u - 1)) & 1) && ((mask >> (v - 1)) & 1)) H.add_edge(u, v);
    return H;
}

bool is_connected(const SimpleGraph& G) {
    if (G.n() <= 1) return true;
    std::uint32_t seen = 1u;
    std::vector<int> queue{1};
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        std::uint32_t nbrs = G.adjacency_mask(u) & ~seen;
        while (nbrs) {
            int v = std::countr_zero(nbrs) + 1;
            nbrs &= nbrs - 1;
            seen |= (1u << (v - 1));
            queue.push_back(v);
        }
    }
    return std::popcount(seen) == G.n();
}

SimpleGraph from_graph6(const std::string& line) {
    if (line.empty()) throw ParseError("empty graph6 line", 1);
    size_t pos = 0;
    int n;
    if (line[0] == '~') throw ParseError("graph6 with n > 62 is not supported", 1);
    n = line[0] - 63;
    if (n < 0 || n > 31) throw ParseError("graph6 vertex count out of supported range", 1);
    pos = 1;
    int bits_needed = n * (n - 1) / 2;
    int chars_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(line.size()) - 1 != chars_needed)
        throw ParseError("graph6 length does not match vertex count", 1);
    SimpleGraph G(n);
    int bit_index = 0;
    for (int ci = 0; ci < chars_needed; ++ci) {
        int c = line[pos + ci] - 63;
        if (c < 0 || c > 63) throw ParseError("graph6 character out of range", 1);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int bit = (c >> b) & 1;
            if (bit_index >= bits_needed) {
                if (bit) throw ParseError("graph6 has nonzero padding bits", 1);
                continue;
            }
            if (bit) {
                // column-major upper triangle: bit k is (row, col) with col minimal
                int col = 1, k = bit_index;
                while (k >= col) {
                    k -= col;
                    ++col;
                }
                G.add_edge(k + 1, col + 1);
            }
        }
    }
    return G;
}

std::string to_graph6(const SimpleGraph& G) {
    int n = G.n();
    if (n > 62) throw Error("graph6 output supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int bits_needed = n * (n - 1) / 2;
    int chars_needed = (bits_needed + 5) / 6;
    std::vector<int> bits;
    bits.reserve(bits_needed);
    for (int col = 2; col <= n; ++col)
        for (int row = 1; row < col; ++row) bits.push_back(G.has_edge(row, col) ? 1 : 0);
    for (int ci = 0; ci < chars_needed; ++ci) {
        int c = 0;
        for (int b = 0; b < 6; ++b) {
            int idx = ci * 6 + b;
            c = (c << 1) | (idx < bits_needed ? bits[idx] : 0);
        }
        out += static_cast<char>(c + 63);
    }
    return out;
}

std::string to_edge_list_text(const SimpleGraph& G) {
    std::ostringstream os;
    auto edges = G.edges();
    os << G.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

SimpleGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    // find first nonblank line
    while (std::getline(is, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
        throw ParseError("no graph data found", line_no == 0 ? 1 : line_no);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();

    std::istringstream header(line);
    int n, m;
    if (header >> n >> m) {
        std::string extra;
        if (header >> extra) throw ParseError("header must be exactly 'n m'", line_no);
        if (n < 0 || n > 31) throw ParseError("vertex count out of supported range", line_no);
        if (m < 0) throw ParseError("negative edge count", line_no);
        SimpleGraph G(n);
        for (int i = 0; i < m; ++i) {
            if (!std::getline(is, line)) throw ParseError("missing edge line", line_no + i + 1);
            std::istringstream es(line);
            int u, v;
            if (!(es >> u >> v)) throw ParseError("expected edge 'u v'", line_no + i + 1);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint out of range", line_no + i + 1);
            if (u == v) throw ParseError("loop edge", line_no + i + 1);
            if (G.has_edge(u, v)) throw ParseError("duplicate edge", line_no + i + 1);
            G.add_edge(u, v);
        }
        return G;
    }
    try {
        return from_graph6(line);
    } catch (const ParseError& e) {
        throw ParseError(e.message, line_no);
    }
}

}  // namespace symreg
