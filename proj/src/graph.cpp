#include "regspec/graph.hpp"

#include "regspec/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace regspec {

RegularGraph::RegularGraph(int n_vertices, int degree, std::vector<std::pair<int, int>> edges)
    : n_(n_vertices), d_(degree), edges_(std::move(edges)) {
    if (n_ <= 0 || d_ < 0) {
        throw std::invalid_argument("graph needs positive vertex count and non-negative degree");
    }
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (auto& [u, v] : edges_) {
        if (u > v) {
            std::swap(u, v);
        }
        if (u < 0 || v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("repeated edge");
    }
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n_; ++v) {
        auto& nbrs = adjacency_[static_cast<std::size_t>(v)];
        if (static_cast<int>(nbrs.size()) != d_) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(nbrs.size()) + ", expected " +
                                        std::to_string(d_));
        }
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool RegularGraph::connected() const {
    if (n_ == 0) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n_;
}

std::string RegularGraph::edge_list_text() const {
    std::ostringstream out;
    for (const auto& [u, v] : edges_) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

RegularGraph sample_regular_graph(int n_vertices, int degree, std::uint64_t seed,
                                  const SampleOptions& opts) {
    if (n_vertices <= 0 || degree < 1) {
        throw std::invalid_argument("need N >= 1 and d >= 1");
    }
    if (degree >= n_vertices) {
        throw std::invalid_argument("degree d = " + std::to_string(degree) +
                                    " must be smaller than N = " + std::to_string(n_vertices));
    }
    if ((static_cast<std::int64_t>(n_vertices) * degree) % 2 != 0) {
        throw std::invalid_argument("N*d must be even (N = " + std::to_string(n_vertices) +
                                    ", d = " + std::to_string(degree) + ")");
    }

    Rng rng(seed);
    const std::size_t n_stubs = static_cast<std::size_t>(n_vertices) * static_cast<std::size_t>(degree);
    std::vector<int> stubs(n_stubs);
    for (std::size_t i = 0; i < n_stubs; ++i) {
        stubs[i] = static_cast<int>(i / static_cast<std::size_t>(degree));
    }

    std::vector<std::pair<int, int>> edges(n_stubs / 2);
    std::vector<std::uint64_t> seen_keys;
    for (std::uint64_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        // Fisher-Yates shuffle, then pair consecutive stubs: a uniform perfect
        // matching of the stubs.
        for (std::size_t i = n_stubs - 1; i > 0; --i) {
            const std::size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        bool simple = true;
        seen_keys.clear();
        for (std::size_t i = 0; i < n_stubs; i += 2) {
            const int u = std::min(stubs[i], stubs[i + 1]);
            const int v = std::max(stubs[i], stubs[i + 1]);
            if (u == v) {
                simple = false;
                break;
            }
            edges[i / 2] = {u, v};
            seen_keys.push_back(static_cast<std::uint64_t>(u) *
                                    static_cast<std::uint64_t>(n_vertices) +
                                static_cast<std::uint64_t>(v));
        }
        if (simple) {
            std::sort(seen_keys.begin(), seen_keys.end());
            simple = std::adjacent_find(seen_keys.begin(), seen_keys.end()) == seen_keys.end();
        }
        if (simple) {
            return RegularGraph(n_vertices, degree, edges);
        }
    }
    throw SampleRetryError(
        "no simple pairing found after " + std::to_string(opts.max_attempts) +
        " attempts (N = " + std::to_string(n_vertices) + ", d = " + std::to_string(degree) +
        "); the rejection rate grows like exp(d^2/4), consider a larger attempt budget");
}

CycleCensus count_cycles(const RegularGraph& graph, int max_length, const CycleOptions& opts) {
    if (max_length > opts.max_supported_length) {
        throw std::invalid_argument("cycle census capped at length " +
                                    std::to_string(opts.max_supported_length));
    }
    CycleCensus census;
    for (int i = 3; i <= max_length; ++i) {
        census.counts[i] = 0;
    }
    if (max_length < 3) {
        return census;
    }

    // DFS from each anchor vertex over paths through strictly larger vertices;
    // a cycle is recorded at its smallest (anchor) vertex, and once per
    // direction by requiring path[1] < path.back().
    const int n = graph.n_vertices();
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);

    auto dfs = [&](auto&& self, int anchor, int v) -> void {
        for (int w : graph.neighbors(v)) {
            if (w == anchor && path.size() >= 3) {
                if (path[1] < path.back()) {
                    ++census.counts[static_cast<int>(path.size())];
                }
            } else if (w > anchor && !on_path[static_cast<std::size_t>(w)] &&
                       static_cast<int>(path.size()) < max_length) {
                path.push_back(w);
                on_path[static_cast<std::size_t>(w)] = 1;
                self(self, anchor, w);
                on_path[static_cast<std::size_t>(w)] = 0;
                path.pop_back();
            }
        }
    };

    for (int anchor = 0; anchor < n; ++anchor) {
        path.assign(1, anchor);
        on_path[static_cast<std::size_t>(anchor)] = 1;
        dfs(dfs, anchor, anchor);
        on_path[static_cast<std::size_t>(anchor)] = 0;
    }
    return census;
}

}  // namespace regspec
