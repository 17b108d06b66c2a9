#include "regspec/capp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace regspec {

namespace {

std::string format_symbols(std::span<const Symbol> seq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << seq[i];
    }
    return out.str();
}

}  // namespace

bool is_valid_capp(std::span<const Symbol> seq) {
    if (seq.size() % 2 != 0) {
        return false;
    }
    if (seq.empty()) {
        return true;
    }
    // Walk simulation: a sequence satisfies both pattern conditions exactly
    // when it traces a closed walk on a tree (new symbol -> descend a fresh
    // edge; repeated symbol -> it must be the edge below or above the current
    // vertex, established by parity of its traversal count).
    //
    // Bookkeeping per distinct symbol: the vertex above its edge, and whether
    // the walk is currently below it (odd traversals so far). The walk is at
    // "below[e] of the most recent odd edge"; equivalently we track the current
    // vertex explicitly via a vertex counter.
    std::vector<int> edge_upper;   // per symbol id (dense after remap)
    std::vector<int> edge_lower;
    std::vector<char> below;       // parity: currently on the lower side?
    std::vector<int> remap;        // sparse symbol -> dense id
    std::vector<Symbol> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto dense_id = [&](Symbol s) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
        return static_cast<int>(it - sorted.begin());
    };

    const int n_symbols = static_cast<int>(sorted.size());
    edge_upper.assign(static_cast<std::size_t>(n_symbols), -1);
    edge_lower.assign(static_cast<std::size_t>(n_symbols), -1);
    below.assign(static_cast<std::size_t>(n_symbols), 0);

    int current = 0;
    int next_vertex = 1;
    for (Symbol s : seq) {
        const int id = dense_id(s);
        if (edge_upper[id] < 0) {
            edge_upper[id] = current;
            edge_lower[id] = next_vertex++;
            below[id] = 1;
            current = edge_lower[id];
        } else if (current == edge_upper[id] && !below[id]) {
            below[id] = 1;
            current = edge_lower[id];
        } else if (current == edge_lower[id] && below[id]) {
            below[id] = 0;
            current = edge_upper[id];
        } else {
            return false;  // repeated symbol not incident to the current vertex
        }
    }
    return current == 0;
}

Capp Capp::canonical(std::span<const Symbol> seq) {
    if (!is_valid_capp(seq)) {
        throw InvalidPatternError("not a closed acyclic path pattern: \"" +
                                  format_symbols(seq) + "\"");
    }
    std::vector<Symbol> out;
    out.reserve(seq.size());
    std::map<Symbol, Symbol> relabel;
    for (Symbol s : seq) {
        auto [it, inserted] = relabel.try_emplace(s, static_cast<Symbol>(relabel.size()));
        out.push_back(it->second);
    }
    return Capp(std::move(out), static_cast<int>(relabel.size()));
}

Capp Capp::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Symbol> seq;
    Symbol s = 0;
    while (in >> s) {
        seq.push_back(s);
    }
    if (!in.eof()) {
        throw InvalidPatternError("unparseable pattern text: \"" + std::string(text) + "\"");
    }
    return canonical(seq);
}

std::string Capp::str() const { return format_symbols(symbols_); }

Signature signature_of(const Capp& pattern) {
    Signature sig(static_cast<std::size_t>(pattern.symbol_count()), 0);
    for (Symbol s : pattern.symbols()) {
        ++sig[static_cast<std::size_t>(s)];
    }
    return sig;
}

Signature sorted_signature(Signature sig) {
    std::sort(sig.begin(), sig.end(), std::greater<int>());
    return sig;
}

bool WalkDiagram::edges_adjacent(int a, int b) const {
    const auto [au, av] = edge_endpoints(a);
    const auto [bu, bv] = edge_endpoints(b);
    return au == bu || au == bv || av == bu || av == bv;
}

WalkDiagram diagram_of(const Capp& pattern) {
    WalkDiagram diagram;
    diagram.parent.push_back(-1);
    diagram.children.emplace_back();
    diagram.traversal_count.assign(static_cast<std::size_t>(pattern.symbol_count()), 0);

    int current = 0;
    for (Symbol s : pattern.symbols()) {
        const auto e = static_cast<std::size_t>(s);
        if (diagram.traversal_count[e] == 0) {
            // first traversal: a child edge at the current vertex
            if (s != static_cast<Symbol>(diagram.parent.size()) - 1) {
                throw std::logic_error("pattern is not in canonical first-occurrence order");
            }
            diagram.children[static_cast<std::size_t>(current)].push_back(s);
            diagram.parent.push_back(current);
            diagram.children.emplace_back();
            current = s + 1;
        } else {
            const auto [u, v] = diagram.edge_endpoints(s);
            if (current == u) {
                current = v;
            } else if (current == v) {
                current = u;
            } else {
                throw std::logic_error("repeated symbol " + std::to_string(s) +
                                       " is not incident to the current vertex");
            }
        }
        ++diagram.traversal_count[e];
    }
    if (current != 0) {
        throw std::logic_error("walk does not return to the root");
    }
    return diagram;
}

BigInt MultiplicityPoly::eval(const BigInt& d) const {
    BigInt out = 1;
    for (int root : roots) {
        out *= d - root;
    }
    return out;
}

MultiplicityPoly multiplicity_poly(const Capp& pattern) {
    const WalkDiagram diagram = diagram_of(pattern);
    MultiplicityPoly poly;
    poly.roots.reserve(static_cast<std::size_t>(diagram.edge_count()));
    for (int e = 0; e < diagram.edge_count(); ++e) {
        int alpha = 0;
        for (int earlier = 0; earlier < e; ++earlier) {
            if (diagram.edges_adjacent(earlier, e)) {
                ++alpha;
            }
        }
        poly.roots.push_back(alpha);
    }
    return poly;
}

// Depth-first generation of canonical patterns. The walk state is the partial
// tree plus the current vertex; at a vertex the candidate moves, in ascending
// symbol order, are: the parent edge, existing child edges, one fresh edge.
// Pruning: the odd-parity edges are exactly the root path, so closing needs at
// least depth(current) further steps.
class CappEnumerator {
public:
    CappEnumerator(int length, const std::function<void(const CappView&)>& visit)
        : length_(length), visit_(visit) {
        seq_.reserve(static_cast<std::size_t>(length));
        const auto max_edges = static_cast<std::size_t>(length / 2);
        parent_.assign(max_edges + 1, -1);
        parent_edge_.assign(max_edges + 1, -1);
        children_.assign(max_edges + 1, {});
        alphas_.reserve(max_edges);
        counts_.reserve(max_edges);
    }

    void run() {
        if (length_ == 0) {
            visit_(CappView{});
            return;
        }
        extend(0, 0, 1);
    }

private:
    void extend(int current, int depth, int vertices) {
        const int remaining = length_ - static_cast<int>(seq_.size());
        if (remaining == 0) {
            visit_(CappView{seq_, alphas_, counts_});
            return;
        }
        if (remaining < depth) {
            return;
        }
        const auto cur = static_cast<std::size_t>(current);
        if (depth > 0) {
            step_across(parent_edge_[cur], parent_[cur], depth - 1, vertices);
        }
        if (remaining - 1 >= depth + 1) {
            for (Symbol edge : children_[cur]) {
                step_across(edge, edge + 1, depth + 1, vertices);
            }
            if (vertices - 1 < length_ / 2) {
                const Symbol edge = vertices - 1;  // fresh symbol
                const auto child = static_cast<std::size_t>(vertices);
                children_[cur].push_back(edge);
                parent_[child] = current;
                parent_edge_[child] = edge;
                // adjacency at creation: every edge already incident to the
                // attachment vertex was first-traversed earlier
                alphas_.push_back(static_cast<int>(children_[cur].size()) - 1 +
                                  (current == 0 ? 0 : 1));
                counts_.push_back(0);
                step_across(edge, static_cast<int>(child), depth + 1, vertices + 1);
                counts_.pop_back();
                alphas_.pop_back();
                children_[cur].pop_back();
            }
        }
    }

    void step_across(Symbol edge, int to_vertex, int new_depth, int vertices) {
        seq_.push_back(edge);
        ++counts_[static_cast<std::size_t>(edge)];
        extend(to_vertex, new_depth, vertices);
        --counts_[static_cast<std::size_t>(edge)];
        seq_.pop_back();
    }

    int length_;
    const std::function<void(const CappView&)>& visit_;
    std::vector<Symbol> seq_;
    std::vector<int> parent_;
    std::vector<Symbol> parent_edge_;
    std::vector<std::vector<Symbol>> children_;
    std::vector<int> alphas_;
    std::vector<int> counts_;
};

void for_each_capp(int length, const std::function<void(const CappView&)>& visit,
                   const EnumerationOptions& opts) {
    if (length < 0) {
        throw std::invalid_argument("pattern length must be non-negative");
    }
    if (length > opts.max_length) {
        throw EnumerationLimitError("length " + std::to_string(length) +
                                    " exceeds the enumeration cap " +
                                    std::to_string(opts.max_length) +
                                    " (raise max_length to override)");
    }
    if (length % 2 != 0) {
        return;  // no patterns of odd length
    }
    CappEnumerator(length, visit).run();
}

std::vector<Capp> enumerate_capps(int length, const EnumerationOptions& opts) {
    std::vector<Capp> out;
    for_each_capp(
        length,
        [&](const CappView& view) {
            out.push_back(Capp(std::vector<Symbol>(view.symbols.begin(), view.symbols.end()),
                               static_cast<int>(view.symbol_counts.size())));
        },
        opts);
    return out;
}

SignatureCensus count_by_signature(int length, const EnumerationOptions& opts) {
    SignatureCensus census;
    census.length = length;
    for_each_capp(
        length,
        [&](const CappView& view) {
            Signature partition = sorted_signature(
                Signature(view.symbol_counts.begin(), view.symbol_counts.end()));
            ++census.counts[partition];
            ++census.total;
            const bool all_twos = !partition.empty() && partition.front() == 2;
            if (all_twos) {
                ++census.all_twos;
                // |T| accumulates the adjacent-pair count, which per pattern is
                // the sum of the multiplicity roots.
                for (int alpha : view.multiplicity_roots) {
                    census.adjacent_pair_total += static_cast<std::uint64_t>(alpha);
                }
            }
            if (partition.size() >= 1 && partition.front() == 4 &&
                (partition.size() == 1 || partition[1] == 2)) {
                ++census.one_four;
            }
        },
        opts);
    census.open_total = census.total - census.counts.count(Signature{length});
    return census;
}

std::vector<DistinguishedTriple> enumerate_triples(int length, const EnumerationOptions& opts) {
    std::vector<DistinguishedTriple> out;
    for_each_capp(
        length,
        [&](const CappView& view) {
            for (int count : view.symbol_counts) {
                if (count != 2) {
                    return;
                }
            }
            Capp pattern(std::vector<Symbol>(view.symbols.begin(), view.symbols.end()),
                         static_cast<int>(view.symbol_counts.size()));
            const WalkDiagram diagram = diagram_of(pattern);
            for (int x = 0; x < diagram.edge_count(); ++x) {
                for (int y = x + 1; y < diagram.edge_count(); ++y) {
                    if (diagram.edges_adjacent(x, y)) {
                        out.push_back(DistinguishedTriple{pattern, x, y});
                    }
                }
            }
        },
        opts);
    return out;
}

std::string signature_str(const Signature& sig) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << sig[i];
    }
    out << ')';
    return out.str();
}

}  // namespace regspec
