#include "zonalg/parking.hpp"

#include <algorithm>
#include <numeric>

#include "zonalg/errors.hpp"
#include "zonalg/mpoly.hpp"

namespace zonalg {

Graph complete_graph(std::size_t vertex_count) {
    Graph g{vertex_count, {}};
    for (int i = 0; i + 1 < static_cast<int>(vertex_count); ++i)
        for (int j = i + 1; j < static_cast<int>(vertex_count); ++j)
            g.edges.emplace_back(i, j);
    return g;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

GroundSet graph_to_groundset(const Graph& g) {
    if (g.vertices < 2) throw Disconnected("graph needs at least one edge");
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t n = g.vertices - 1;
    std::vector<IntVec> cols;
    for (auto [i, j] : g.edges) {
        if (i > j) std::swap(i, j);
        if (i < 0 || static_cast<std::size_t>(j) >= g.vertices || i == j)
            throw BadIndex("edge endpoint");
        parent[find_root(parent, i)] = find_root(parent, j);
        IntVec c(n, Int(0));
        if (i > 0) c[i - 1] = 1;
        c[j - 1] = -1;
        cols.push_back(std::move(c));
    }
    for (std::size_t v = 1; v < g.vertices; ++v)
        if (find_root(parent, static_cast<int>(v)) != find_root(parent, 0))
            throw Disconnected("graph is not connected");
    return GroundSet(n, std::move(cols));
}

namespace {

// #V_{r,v} = #{v' : r(v') >= r(v)} plus the witnesses Def-style checks need.
struct LevelSet {
    int count = 0, min_v = 0, max_v = 0;
    bool tie_with_other = false;  // some v' != max_v has r(v') = r(v)
};

LevelSet level_set(const ParkingFn& r, std::size_t v) {
    LevelSet s;
    int rv = r[v];
    for (std::size_t u = 0; u < r.size(); ++u) {
        if (r[u] < rv) continue;
        ++s.count;
        if (s.count == 1) s.min_v = static_cast<int>(u);
        s.max_v = static_cast<int>(u);
    }
    for (std::size_t u = 0; u < r.size(); ++u)
        if (r[u] == rv && static_cast<int>(u) != s.max_v) {
            s.tie_with_other = true;
            break;
        }
    return s;
}

}  // namespace

bool is_external_parking(const ParkingFn& r) {
    int n = static_cast<int>(r.size());
    for (std::size_t v = 0; v < r.size(); ++v) {
        LevelSet s = level_set(r, v);
        int cap = n - r[v] + 1;
        if (s.count < cap) continue;
        if (s.count == cap && r[s.min_v] == r[v]) continue;
        return false;
    }
    return true;
}

bool is_internal_parking(const ParkingFn& r) {
    int n = static_cast<int>(r.size());
    for (std::size_t v = 0; v < r.size(); ++v) {
        LevelSet s = level_set(r, v);
        int cap = n - r[v];
        if (s.count < cap) continue;
        if (s.count == cap && s.tie_with_other) continue;
        return false;
    }
    return true;
}

namespace {

std::vector<ParkingFn> enumerate(std::size_t n, int bound, bool (*pred)(const ParkingFn&)) {
    if (bound < 0) bound = static_cast<int>(n);
    std::vector<ParkingFn> out;
    ParkingFn r(n, 0);
    while (true) {
        if (pred(r)) out.push_back(r);
        std::size_t i = 0;
        while (i < n && r[i] == bound) r[i++] = 0;
        if (i == n) break;
        ++r[i];
    }
    return out;
}

}  // namespace

std::vector<ParkingFn> external_parking(std::size_t n, int bound) {
    return enumerate(n, bound, is_external_parking);
}

std::vector<ParkingFn> internal_parking(std::size_t n, int bound) {
    return enumerate(n, bound, is_internal_parking);
}

namespace {

bool kuhn_augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
                  std::vector<int>& match_right, std::vector<bool>& seen) {
    for (std::size_t w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        if (match_right[w] < 0 ||
            kuhn_augment(static_cast<std::size_t>(match_right[w]), adj, match_right, seen)) {
            match_right[w] = static_cast<int>(u);
            return true;
        }
    }
    return false;
}

}  // namespace

ParkingMatchReport parking_basis_match(std::size_t n) {
    ParkingMatchReport rep;
    GroundSet X = graph_to_groundset(complete_graph(n + 1));
    auto rs = external_parking(n);
    auto is = independents(X);
    std::vector<MPoly> qs;
    qs.reserve(is.size());
    for (const auto& I : is) qs.push_back(p_of(X, xset(X, I)));

    std::vector<std::vector<std::size_t>> adj(rs.size());
    for (std::size_t a = 0; a < rs.size(); ++a) {
        Expo e(n, 0);
        int deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            e[v] = rs[a][v];
            deg += rs[a][v];
        }
        for (std::size_t b = 0; b < qs.size(); ++b)
            if (qs[b].degree() == deg && !qs[b].coeff(e).is_zero()) adj[a].push_back(b);
    }

    std::vector<int> match_right(qs.size(), -1);
    std::size_t matched = 0;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        std::vector<bool> seen(qs.size(), false);
        if (kuhn_augment(a, adj, match_right, seen)) ++matched;
    }
    rep.pairs = matched;
    rep.ok = rs.size() == is.size() && matched == rs.size();
    if (rep.ok) {
        rep.functions = rs;
        rep.independents.resize(rs.size());
        for (std::size_t w = 0; w < match_right.size(); ++w)
            if (match_right[w] >= 0) rep.independents[match_right[w]] = is[w];
    }
    return rep;
}

}  // namespace zonalg
