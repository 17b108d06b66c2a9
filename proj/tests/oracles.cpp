#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace regspec::oracle {

bool literal_is_valid(const std::vector<int>& seq) {
    std::map<int, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        positions[seq[i]].push_back(i);
    }
    for (const auto& [symbol, where] : positions) {
        if (where.size() % 2 != 0) {
            return false;
        }
        for (std::size_t p = 0; p + 1 < where.size(); ++p) {
            std::map<int, int> counts;
            for (std::size_t i = where[p] + 1; i < where[p + 1]; ++i) {
                ++counts[seq[i]];
            }
            for (const auto& [s, c] : counts) {
                if (c % 2 != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> naive_canonical_strings(
    int length, const std::function<bool(const std::vector<int>&)>& filter) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
        if (filter({})) {
            out.push_back({});
        }
        return out;
    }
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int used) -> void {
        if (static_cast<int>(prefix.size()) == length) {
            if (filter(prefix)) {
                out.push_back(prefix);
            }
            return;
        }
        for (int s = 0; s <= used; ++s) {  // s == used opens a fresh symbol
            prefix.push_back(s);
            self(self, std::max(used, s + 1));
            prefix.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> string_signature(const std::vector<int>& seq) {
    std::vector<int> order;
    std::map<int, int> counts;
    for (int s : seq) {
        if (counts.try_emplace(s, 0).second) {
            order.push_back(s);
        }
        ++counts[s];
    }
    std::vector<int> sig;
    sig.reserve(order.size());
    for (int s : order) {
        sig.push_back(counts[s]);
    }
    return sig;
}

namespace {

struct ReplayedWalk {
    std::vector<std::pair<int, int>> edge_of;  // per symbol (first-appearance id)
    std::vector<int> symbol_ids;               // original symbol -> dense id
};

ReplayedWalk replay(const std::vector<int>& seq) {
    ReplayedWalk walk;
    std::map<int, int> dense;
    int current = 0;
    int next_vertex = 1;
    for (int s : seq) {
        auto [it, fresh] = dense.try_emplace(s, static_cast<int>(dense.size()));
        if (fresh) {
            walk.edge_of.emplace_back(current, next_vertex);
            current = next_vertex++;
        } else {
            const auto [u, v] = walk.edge_of[static_cast<std::size_t>(it->second)];
            if (current == u) {
                current = v;
            } else if (current == v) {
                current = u;
            } else {
                throw std::invalid_argument("oracle replay: sequence is not a tree walk");
            }
        }
    }
    if (current != 0) {
        throw std::invalid_argument("oracle replay: walk does not close");
    }
    return walk;
}

bool share_vertex(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
}

}  // namespace

std::vector<int> replay_multiplicity_roots(const std::vector<int>& seq) {
    const ReplayedWalk walk = replay(seq);
    std::vector<int> roots;
    roots.reserve(walk.edge_of.size());
    for (std::size_t j = 0; j < walk.edge_of.size(); ++j) {
        int alpha = 0;
        for (std::size_t i = 0; i < j; ++i) {
            if (share_vertex(walk.edge_of[i], walk.edge_of[j])) {
                ++alpha;
            }
        }
        roots.push_back(alpha);
    }
    return roots;
}

std::vector<std::pair<int, int>> replay_adjacent_pairs(const std::vector<int>& seq) {
    const ReplayedWalk walk = replay(seq);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < walk.edge_of.size(); ++i) {
        for (std::size_t j = i + 1; j < walk.edge_of.size(); ++j) {
            if (share_vertex(walk.edge_of[i], walk.edge_of[j])) {
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return pairs;
}

std::vector<Rational> direct_eigenmoments(int d, int max_order) {
    if (d < 2) {
        throw std::invalid_argument("oracle recursion needs d >= 2");
    }
    std::vector<Rational> mu(static_cast<std::size_t>(max_order) + 1, Rational(0));
    mu[0] = 1;
    if (max_order >= 2) {
        mu[2] = Rational(1, 4);
    }
    for (int order = 4; order <= max_order; order += 2) {
        const auto patterns = naive_canonical_strings(order, literal_is_valid);
        Rational sum(0);
        for (const auto& seq : patterns) {
            const std::vector<int> sig = string_signature(seq);
            if (sig.size() == 1) {
                continue;
            }
            Rational term(1);
            for (int alpha : replay_multiplicity_roots(seq)) {
                term *= d - alpha;
            }
            for (int n : sig) {
                term *= mu[static_cast<std::size_t>(n)];
            }
            sum += term;
        }
        const int k = order / 2;
        mu[static_cast<std::size_t>(order)] =
            sum / (Rational(integer_pow(d, static_cast<unsigned>(k))) - d);
    }
    return mu;
}

}  // namespace regspec::oracle
