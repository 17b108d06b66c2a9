#pragma once

#include "regspec/polynomial.hpp"
#include "regspec/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace regspec {

// A closed acyclic path pattern is an even-length symbol string in which every
// symbol occurs an even number of times, and the same holds within the substring
// between any two consecutive occurrences of a symbol. Such strings are exactly
// the edge sequences of closed walks on a tree.
using Symbol = int;

struct InvalidPatternError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration request exceeds the configured length cap.
struct EnumerationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    // Pattern counts grow super-exponentially in the length; the cap guards
    // against accidental huge requests and is overridable.
    int max_length = 20;
};

bool is_valid_capp(std::span<const Symbol> seq);

struct DistinguishedTriple;

/// Canonical pattern: symbols relabeled to first-occurrence order 0, 1, 2, ...
class Capp {
public:
    Capp() = default;  // the empty pattern

    /// Relabels to canonical form; throws InvalidPatternError if the sequence
    /// violates either pattern condition.
    static Capp canonical(std::span<const Symbol> seq);

    /// Parses a whitespace-separated integer string, e.g. "0 1 1 0".
    static Capp parse(std::string_view text);

    std::span<const Symbol> symbols() const { return symbols_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    int symbol_count() const { return symbol_count_; }
    std::string str() const;

    auto operator<=>(const Capp&) const = default;

private:
    friend std::vector<Capp> enumerate_capps(int, const EnumerationOptions&);
    friend std::vector<DistinguishedTriple> enumerate_triples(int, const EnumerationOptions&);
    Capp(std::vector<Symbol> canonical_symbols, int symbol_count)
        : symbols_(std::move(canonical_symbols)), symbol_count_(symbol_count) {}

    std::vector<Symbol> symbols_;
    int symbol_count_ = 0;
};

inline Capp canonicalize(std::span<const Symbol> seq) { return Capp::canonical(seq); }

/// Per-symbol occurrence counts in first-appearance order.
using Signature = std::vector<int>;

Signature signature_of(const Capp& pattern);

/// The signature sorted descending; this is the partition of the length that
/// the moment contribution depends on (e.g. both "0 0 1 1 1 1" and
/// "0 0 0 0 1 1" fall in the (4,2) bucket).
Signature sorted_signature(Signature sig);

/// The minimal rooted ordered tree traversed by a pattern's walk. Vertices are
/// numbered in creation order (root = 0, edge j creates vertex j+1), so edge j
/// joins parent(j+1) and j+1 and the first-traversal order is the symbol order.
struct WalkDiagram {
    std::vector<int> parent;                  // parent[0] == -1
    std::vector<std::vector<int>> children;   // in first-traversal order
    std::vector<int> traversal_count;         // per edge, all even and >= 2

    int vertex_count() const { return static_cast<int>(parent.size()); }
    int edge_count() const { return static_cast<int>(traversal_count.size()); }
    std::pair<int, int> edge_endpoints(int edge) const {
        return {parent[static_cast<std::size_t>(edge) + 1], edge + 1};
    }
    bool edges_adjacent(int a, int b) const;
};

WalkDiagram diagram_of(const Capp& pattern);

/// m_pi(x) = prod_j (x - alpha_j); alpha_j counts earlier-first-traversed edges
/// sharing a tree vertex with edge j. Adjacency is measured on the diagram, not
/// on string positions.
struct MultiplicityPoly {
    std::vector<int> roots;  // alpha_j in first-traversal order; roots[0] == 0

    BigInt eval(const BigInt& d) const;
    PolyInD to_poly() const { return PolyInD::from_roots(roots); }
};

MultiplicityPoly multiplicity_poly(const Capp& pattern);

/// Borrowed view of one enumerated pattern; valid only inside the visitor call.
struct CappView {
    std::span<const Symbol> symbols;
    std::span<const int> multiplicity_roots;  // per edge, first-traversal order
    std::span<const int> symbol_counts;       // signature in first-appearance order
};

/// Streams every canonical pattern of the given length, in lexicographic
/// order, without materializing the set. Odd lengths yield nothing.
void for_each_capp(int length, const std::function<void(const CappView&)>& visit,
                   const EnumerationOptions& opts = {});

std::vector<Capp> enumerate_capps(int length, const EnumerationOptions& opts = {});

struct SignatureCensus {
    int length = 0;
    std::map<Signature, std::uint64_t> counts;  // keyed by descending partition
    std::uint64_t total = 0;
    std::uint64_t all_twos = 0;      // |P^(2)|: signature (2,...,2)
    std::uint64_t one_four = 0;      // |P^(4)|: one 4, remaining entries 2
    std::uint64_t open_total = 0;    // |P^o|: everything except signature (length)
    std::uint64_t adjacent_pair_total = 0;  // |T|: adjacent edge pairs over P^(2)
};

SignatureCensus count_by_signature(int length, const EnumerationOptions& opts = {});

/// An all-twos pattern with an ordered pair of distinguished adjacent edges,
/// x first-traversed before y.
struct DistinguishedTriple {
    Capp pattern;
    Symbol x = 0;
    Symbol y = 0;

    auto operator<=>(const DistinguishedTriple&) const = default;
};

std::vector<DistinguishedTriple> enumerate_triples(int length,
                                                   const EnumerationOptions& opts = {});

std::string signature_str(const Signature& sig);

}  // namespace regspec
