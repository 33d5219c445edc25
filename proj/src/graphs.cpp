#include <algorithm>
#include <queue>
#include <set>

#include "cayley/oracle.hpp"

namespace cayley {

long long GraphInstance::degree() const {
    long long deg = -1;
    for (int i = 0; i < n; ++i) {
        long long row = 0;
        for (int j = 0; j < n; ++j) row += at(i, j);
        if (deg < 0)
            deg = row;
        else if (deg != row)
            throw std::logic_error("graph '" + label + "' is not regular");
    }
    return deg;
}

std::string GraphInstance::edge_list() const {
    long long m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m += at(i, j);
    std::string out = "p edge " + std::to_string(n) + " " + std::to_string(m) + "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (at(i, j)) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

GraphInstance cayley_graph(const ConcreteRing& ring, Mode mode) {
    GraphInstance g;
    g.n = static_cast<int>(ring.n);
    g.mode = mode;
    g.label = (mode == Mode::Difference ? "G(" : "G+(") + ring.spec.label() + ")";
    g.adj.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int w = mode == Mode::Difference ? v + 1 : v; w < g.n; ++w) {
            long long c = mode == Mode::Difference ? ring.sub(w, v) : ring.add(v, w);
            if (ring.unit_mask[static_cast<std::size_t>(c)]) {
                g.adj[static_cast<std::size_t>(v) * g.n + w] = 1;
                g.adj[static_cast<std::size_t>(w) * g.n + v] = 1;
            }
        }
    }
    return g;
}

GraphInstance general_cayley_graph(const AbelianGroup& grp, const std::vector<long long>& s_set,
                                   Mode mode) {
    std::set<long long> s(s_set.begin(), s_set.end());
    if (s.count(0)) throw domain_error("connection set must not contain 0");
    for (long long x : s)
        if (!s.count(grp.neg(x))) throw domain_error("connection set must be symmetric");
    GraphInstance g;
    g.n = static_cast<int>(grp.n);
    g.mode = mode;
    g.label = mode == Mode::Difference ? "X(G,S)" : "X+(G,S)";
    g.adj.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int w = mode == Mode::Difference ? v + 1 : v; w < g.n; ++w) {
            long long c = mode == Mode::Difference ? grp.add(w, grp.neg(v)) : grp.add(v, w);
            if (s.count(c)) {
                g.adj[static_cast<std::size_t>(v) * g.n + w] = 1;
                g.adj[static_cast<std::size_t>(w) * g.n + v] = 1;
            }
        }
    }
    return g;
}

ProbeResult structural_probe(const GraphInstance& g) {
    ProbeResult r;
    const int n = g.n;
    for (int i = 0; i < n; ++i) r.loop_count += g.at(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) r.edge_count += g.at(i, j);

    // BFS: connectivity, and 2-coloring of the loop-deleted graph
    std::vector<int> color(n, -1);
    bool bip = true;
    int seen = 0;
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    ++seen;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w = 0; w < n; ++w) {
            if (w == v || !g.at(v, w)) continue;
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                q.push(w);
                ++seen;
            } else if (color[w] == color[v]) {
                bip = false;
            }
        }
    }
    r.connected = seen == n;
    if (r.connected) {
        r.bipartite = bip;
    } else {
        // check remaining components for bipartiteness too
        for (int s0 = 0; s0 < n; ++s0) {
            if (color[s0] >= 0) continue;
            color[s0] = 0;
            q.push(s0);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w = 0; w < n; ++w) {
                    if (w == v || !g.at(v, w)) continue;
                    if (color[w] < 0) {
                        color[w] = 1 - color[v];
                        q.push(w);
                    } else if (color[w] == color[v]) {
                        bip = false;
                    }
                }
            }
        }
        r.bipartite = bip;
    }

    // common-neighbor counts on the loop-deleted graph
    long long e = -1, d = -1;
    bool constant = true;
    for (int i = 0; i < n && constant; ++i) {
        for (int j = i + 1; j < n && constant; ++j) {
            long long c = 0;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && g.at(i, k) && g.at(j, k)) ++c;
            if (g.at(i, j)) {
                if (e < 0)
                    e = c;
                else if (e != c)
                    constant = false;
            } else {
                if (d < 0)
                    d = c;
                else if (d != c)
                    constant = false;
            }
        }
    }
    if (constant) r.common_neighbor_profile = std::pair{e < 0 ? 0 : e, d < 0 ? 0 : d};
    return r;
}

}  // namespace cayley
