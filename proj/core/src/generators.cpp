#include "nbd/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "nbd/rng.hpp"

namespace nbd {

std::string to_string(ModelFamily family) {
    switch (family) {
        case ModelFamily::er: return "er";
        case ModelFamily::ws: return "ws";
        case ModelFamily::rr: return "rr";
        case ModelFamily::ba: return "ba";
    }
    return "?";
}

ModelFamily model_family_from_string(const std::string& name) {
    if (name == "er") return ModelFamily::er;
    if (name == "ws") return ModelFamily::ws;
    if (name == "rr") return ModelFamily::rr;
    if (name == "ba") return ModelFamily::ba;
    throw std::invalid_argument("unknown model family '" + name + "'");
}

void validate(const ModelSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
    switch (spec.family) {
        case ModelFamily::er:
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("er: p must lie in [0, 1]");
            break;
        case ModelFamily::ws:
            if (spec.k < 2 || spec.k > spec.n - 1)
                throw std::invalid_argument("ws: k must satisfy 2 <= k <= n-1");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("ws: p must lie in [0, 1]");
            break;
        case ModelFamily::rr:
            if (spec.d < 0 || spec.d >= spec.n)
                throw std::invalid_argument("rr: d must satisfy 0 <= d < n");
            if ((static_cast<long long>(spec.n) * spec.d) % 2 != 0)
                throw std::invalid_argument("rr: n*d must be even");
            break;
        case ModelFamily::ba:
            if (spec.m_attach < 1 || spec.m_attach >= spec.n)
                throw std::invalid_argument("ba: m_attach must satisfy 1 <= m_attach < n");
            break;
    }
}

namespace {

Graph generate_er(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph generate_ws(int n, int k, double p, Rng& rng) {
    // Ring lattice: floor(k/2) neighbors each side, plus one extra clockwise
    // chord when k is odd. Chord passes are ordered by chord length so the
    // rewiring sweep visits short-range edges first.
    std::set<std::pair<int, int>> present;
    std::vector<std::pair<int, int>> owned;  // (owner, far endpoint), insertion order
    const int half = k / 2;
    const int reach = (k % 2 == 0) ? half : half + 1;
    for (int j = 1; j <= reach; ++j) {
        for (int i = 0; i < n; ++i) {
            int t = (i + j) % n;
            if (t == i) continue;
            auto key = std::minmax(i, t);
            if (present.insert(key).second) owned.emplace_back(i, t);
        }
    }

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : owned) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    for (auto [owner, far] : owned) {
        if (!rng.bernoulli(p)) continue;
        if (static_cast<int>(adj[owner].size()) >= n - 1) continue;  // no valid target
        // Uniform over vertices that are neither the owner nor already
        // adjacent to it (the current far endpoint included).
        std::vector<int> candidates;
        candidates.reserve(n);
        for (int t = 0; t < n; ++t)
            if (t != owner && adj[owner].count(t) == 0) candidates.push_back(t);
        int fresh = candidates[rng.next_below(candidates.size())];
        adj[owner].erase(far);
        adj[far].erase(owner);
        adj[owner].insert(fresh);
        adj[fresh].insert(owner);
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph generate_rr(int n, int d, Rng& rng, int restart_cap) {
    if (d == 0) return Graph(n, {});
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);

    for (int attempt = 0; attempt <= restart_cap; ++attempt) {
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> seen;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(std::minmax(u, v)).second) {
                simple = false;
                break;
            }
        }
        if (simple) {
            std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
            return Graph(n, edges);
        }
    }
    throw GenerationError("rr: configuration-model pairing failed " +
                          std::to_string(restart_cap) + " consecutive restarts (n=" +
                          std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

Graph generate_ba(int n, int m_attach, Rng& rng) {
    // Single-vertex initialization: vertex 1 attaches to vertex 0
    // deterministically because the uniform zero-degree rule has one choice.
    std::vector<std::pair<int, int>> edges;
    std::vector<int> endpoints;  // every edge endpoint; sampling from it is degree-proportional
    for (int t = 1; t < n; ++t) {
        int want = std::min(m_attach, t);
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < want) {
            int candidate;
            if (endpoints.empty())
                candidate = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(t)));
            else
                candidate = endpoints[rng.next_below(endpoints.size())];
            targets.insert(candidate);
        }
        for (int target : targets) {
            edges.emplace_back(target, t);
            endpoints.push_back(target);
            endpoints.push_back(t);
        }
    }
    return Graph(n, edges);
}

}  // namespace

Graph generate(const ModelSpec& spec, int rr_restart_cap) {
    validate(spec);
    Rng rng(spec.seed);
    switch (spec.family) {
        case ModelFamily::er: return generate_er(spec.n, spec.p, rng);
        case ModelFamily::ws: return generate_ws(spec.n, spec.k, spec.p, rng);
        case ModelFamily::rr: return generate_rr(spec.n, spec.d, rng, rr_restart_cap);
        case ModelFamily::ba: return generate_ba(spec.n, spec.m_attach, rng);
    }
    throw std::logic_error("unreachable");
}

}  // namespace nbd
