#include "regspec/capp.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace regspec;

namespace {

std::vector<Symbol> seq(std::initializer_list<Symbol> s) { return std::vector<Symbol>(s); }

// the worked example walk from the pattern definition: a b c c b d d b e e b a
const std::vector<Symbol> kWorkedExample{0, 1, 2, 2, 1, 3, 3, 1, 4, 4, 1, 0};

}  // namespace

TEST_CASE("pattern validity") {
    CHECK(is_valid_capp(seq({0, 0, 1, 1})));
    CHECK_FALSE(is_valid_capp(seq({0, 1, 0, 1})));  // xyxy interleaving
    CHECK(is_valid_capp(seq({})));
    CHECK(is_valid_capp(kWorkedExample));
    CHECK_FALSE(is_valid_capp(seq({0})));
    CHECK_FALSE(is_valid_capp(seq({0, 0, 0})));      // odd length
    CHECK_FALSE(is_valid_capp(seq({0, 1, 1, 2})));   // odd occurrence counts
    CHECK_FALSE(is_valid_capp(seq({0, 0, 1, 0, 0, 1})));  // odd substring between the 1s
    CHECK(is_valid_capp(seq({0, 1, 1, 0, 0, 0})));
    // labels need not be canonical
    CHECK(is_valid_capp(seq({7, 3, 3, 7})));
    CHECK(is_valid_capp(seq({-2, -2, 5, 5})));
}

TEST_CASE("validity matches the literal definition on random strings") {
    std::mt19937 gen(12345);
    int agree_valid = 0;
    for (int round = 0; round < 4000; ++round) {
        const int length = static_cast<int>(gen() % 13);
        const int alphabet = 1 + static_cast<int>(gen() % 4);
        std::vector<Symbol> s(static_cast<std::size_t>(length));
        for (auto& x : s) {
            x = static_cast<Symbol>(gen() % static_cast<unsigned>(alphabet));
        }
        const std::vector<int> as_ints(s.begin(), s.end());
        const bool expected = oracle::literal_is_valid(as_ints);
        CHECK(is_valid_capp(s) == expected);
        agree_valid += expected;
    }
    CHECK(agree_valid > 50);  // the sample actually exercises both outcomes
}

TEST_CASE("canonicalize relabels by first occurrence and is idempotent") {
    CHECK(Capp::canonical(seq({1, 1, 0, 0})).str() == "0 0 1 1");
    CHECK(Capp::canonical(seq({0, 0, 1, 1})).str() == "0 0 1 1");
    CHECK(Capp::canonical(seq({2, 3, 3, 2})).str() == "0 1 1 0");
    const Capp once = Capp::canonical(seq({9, 4, 4, 9}));
    CHECK(Capp::canonical(once.symbols()) == once);
    CHECK_THROWS_AS(Capp::canonical(seq({0, 1, 0, 1})), InvalidPatternError);
    CHECK(Capp::parse("5 5 8 8").str() == "0 0 1 1");
    CHECK_THROWS_AS(Capp::parse("1 2 buckle"), InvalidPatternError);
}

TEST_CASE("enumeration: small lengths exactly") {
    CHECK(enumerate_capps(0).size() == 1);

    const auto p2 = enumerate_capps(2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].str() == "0 0");

    const auto p4 = enumerate_capps(4);
    REQUIRE(p4.size() == 3);
    CHECK(p4[0].str() == "0 0 0 0");
    CHECK(p4[1].str() == "0 0 1 1");
    CHECK(p4[2].str() == "0 1 1 0");

    CHECK(enumerate_capps(6).size() == 12);
    CHECK(enumerate_capps(8).size() == 57);
    CHECK(enumerate_capps(3).empty());
    CHECK(enumerate_capps(7).empty());
    CHECK_THROWS_AS(enumerate_capps(-2), std::invalid_argument);
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_capps(22), EnumerationLimitError);
    EnumerationOptions tight;
    tight.max_length = 4;
    CHECK_THROWS_AS(enumerate_capps(6, tight), EnumerationLimitError);
    EnumerationOptions raised;
    raised.max_length = 22;
    CHECK_NOTHROW(for_each_capp(2, [](const CappView&) {}, raised));
}

TEST_CASE("enumeration is deterministic, duplicate-free, and canonical") {
    for (int length : {4, 6, 8, 10}) {
        const auto first = enumerate_capps(length);
        const auto second = enumerate_capps(length);
        CHECK(first == second);
        CHECK(std::is_sorted(first.begin(), first.end()));
        CHECK(std::adjacent_find(first.begin(), first.end()) == first.end());
        for (const Capp& pattern : first) {
            CHECK(is_valid_capp(pattern.symbols()));
            CHECK(Capp::canonical(pattern.symbols()) == pattern);
        }
    }
}

TEST_CASE("naive oracle equivalence up to length 10") {
    auto filter = [](const std::vector<int>& s) {
        return is_valid_capp(std::span<const int>(s));
    };
    for (int length = 0; length <= 10; length += 2) {
        const auto expected = oracle::naive_canonical_strings(length, filter);
        const auto got = enumerate_capps(length);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(std::vector<int>(got[i].symbols().begin(), got[i].symbols().end()) ==
                  expected[i]);
        }
    }
}

TEST_CASE("signatures") {
    CHECK(signature_of(Capp::parse("0 0 0 0")) == Signature{4});
    CHECK(signature_of(Capp::parse("0 1 1 0")) == Signature{2, 2});
    CHECK(signature_of(Capp::canonical(kWorkedExample)) == Signature{2, 4, 2, 2, 2});
    CHECK(sorted_signature({2, 4, 2, 2, 2}) == Signature{4, 2, 2, 2, 2});

    for (int length : {4, 6, 8, 10}) {
        for (const Capp& pattern : enumerate_capps(length)) {
            const Signature sig = signature_of(pattern);
            int total = 0;
            for (int n : sig) {
                CHECK(n % 2 == 0);
                CHECK(n >= 2);
                total += n;
            }
            CHECK(total == length);
        }
    }
}

TEST_CASE("diagrams") {
    // path: root - v1 - v2
    const WalkDiagram path = diagram_of(Capp::parse("0 1 1 0"));
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_endpoints(0) == std::pair{0, 1});
    CHECK(path.edge_endpoints(1) == std::pair{1, 2});
    CHECK(path.traversal_count == std::vector<int>{2, 2});

    // star at the root
    const WalkDiagram star = diagram_of(Capp::parse("0 0 1 1"));
    CHECK(star.edge_endpoints(0) == std::pair{0, 1});
    CHECK(star.edge_endpoints(1) == std::pair{0, 2});

    // all three edges meet at vertex 1
    const WalkDiagram spider = diagram_of(Capp::parse("0 1 1 2 2 0"));
    CHECK(spider.edge_endpoints(0) == std::pair{0, 1});
    CHECK(spider.edge_endpoints(1) == std::pair{1, 2});
    CHECK(spider.edge_endpoints(2) == std::pair{1, 3});
    CHECK(spider.edges_adjacent(0, 1));
    CHECK(spider.edges_adjacent(0, 2));
    CHECK(spider.edges_adjacent(1, 2));
}

TEST_CASE("diagram round-trip: replaying the walk reproduces the pattern") {
    for (int length : {2, 4, 6, 8, 10}) {
        for (const Capp& pattern : enumerate_capps(length)) {
            const WalkDiagram diagram = diagram_of(pattern);
            CHECK(diagram.edge_count() == pattern.symbol_count());
            int total = 0;
            for (int count : diagram.traversal_count) {
                CHECK(count >= 2);
                CHECK(count % 2 == 0);
                total += count;
            }
            CHECK(total == pattern.length());

            // replay: follow the symbols across the reconstructed tree
            int current = 0;
            bool consistent = true;
            for (Symbol s : pattern.symbols()) {
                const auto [u, v] = diagram.edge_endpoints(s);
                if (current == u) {
                    current = v;
                } else if (current == v) {
                    current = u;
                } else {
                    consistent = false;
                    break;
                }
            }
            CHECK(consistent);
            CHECK(current == 0);
        }
    }
}

TEST_CASE("multiplicity polynomials") {
    CHECK(multiplicity_poly(Capp::parse("0 0 0 0")).roots == std::vector<int>{0});
    CHECK(multiplicity_poly(Capp::parse("0 1 1 2 2 0")).roots == std::vector<int>{0, 1, 2});
    CHECK(multiplicity_poly(Capp::canonical(kWorkedExample)).roots ==
          std::vector<int>{0, 1, 1, 2, 2});

    // m(d) = d(d-1)(d-2) evaluated
    CHECK(multiplicity_poly(Capp::parse("0 1 1 2 2 0")).eval(4) == 24);
    CHECK(multiplicity_poly(Capp::parse("0 1 1 2 2 0")).to_poly().str() == "d^3 - 3*d^2 + 2*d");

    // m(1) is 1 for the single-symbol pattern, 0 for every other pattern
    for (int length : {2, 4, 6, 8, 10}) {
        for (const Capp& pattern : enumerate_capps(length)) {
            const MultiplicityPoly m = multiplicity_poly(pattern);
            REQUIRE_FALSE(m.roots.empty());
            CHECK(m.roots.front() == 0);
            CHECK(m.eval(1) == (pattern.symbol_count() == 1 ? 1 : 0));
            CHECK(m.eval(pattern.symbol_count() + 5) > 0);
        }
    }
}

TEST_CASE("multiplicity roots agree with the replay oracle") {
    for (int length : {4, 6, 8, 10}) {
        for (const Capp& pattern : enumerate_capps(length)) {
            const std::vector<int> as_ints(pattern.symbols().begin(), pattern.symbols().end());
            CHECK(multiplicity_poly(pattern).roots == oracle::replay_multiplicity_roots(as_ints));
        }
    }
}

TEST_CASE("signature census") {
    const SignatureCensus c4 = count_by_signature(4);
    CHECK(c4.total == 3);
    CHECK(c4.counts.at({4}) == 1);
    CHECK(c4.counts.at({2, 2}) == 2);
    CHECK(c4.open_total == 2);

    const SignatureCensus c6 = count_by_signature(6);
    CHECK(c6.total == 12);
    CHECK(c6.counts.at({6}) == 1);
    CHECK(c6.counts.at({4, 2}) == 6);
    CHECK(c6.counts.at({2, 2, 2}) == 5);
    CHECK(c6.all_twos == 5);
    CHECK(c6.one_four == 6);
    CHECK(c6.open_total == 11);

    const SignatureCensus c10 = count_by_signature(10);
    CHECK(c10.counts.at({2, 2, 2, 2, 2}) == 42);  // Catalan C_5

    const SignatureCensus odd = count_by_signature(5);
    CHECK(odd.total == 0);
}

TEST_CASE("Catalan count of all-twos patterns, k = 1..8") {
    EnumerationOptions opts;
    for (int k = 1; k <= 8; ++k) {
        const SignatureCensus census = count_by_signature(2 * k, opts);
        const BigInt catalan = binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k)) /
                               (k + 1);
        CHECK(BigInt(census.all_twos) == catalan);
    }
}

TEST_CASE("distinguished triples") {
    const auto t4 = enumerate_triples(4);
    REQUIRE(t4.size() == 2);
    for (const DistinguishedTriple& triple : t4) {
        CHECK(triple.x < triple.y);
        CHECK(diagram_of(triple.pattern).edges_adjacent(triple.x, triple.y));
        CHECK(sorted_signature(signature_of(triple.pattern)) ==
              Signature(static_cast<std::size_t>(triple.pattern.symbol_count()), 2));
    }
    CHECK(enumerate_triples(6).size() == 12);
    CHECK(enumerate_triples(8).size() == 56);

    // triples per pattern match the independent replay count
    for (const DistinguishedTriple& triple : enumerate_triples(8)) {
        const std::vector<int> as_ints(triple.pattern.symbols().begin(),
                                       triple.pattern.symbols().end());
        const auto pairs = oracle::replay_adjacent_pairs(as_ints);
        CHECK(std::find(pairs.begin(), pairs.end(), std::pair{triple.x, triple.y}) !=
              pairs.end());
    }
}

TEST_CASE("serendipitous two-to-one correspondence, k = 2..7") {
    for (int k = 2; k <= 7; ++k) {
        const SignatureCensus census = count_by_signature(2 * k);
        CHECK(census.adjacent_pair_total == 2 * census.one_four);
        if (2 * k <= 10) {
            CHECK(enumerate_triples(2 * k).size() == census.adjacent_pair_total);
        }
    }
}

TEST_CASE("random relabelings canonicalize back to the enumerated pattern") {
    std::mt19937 gen(777);
    const auto patterns = enumerate_capps(8);
    for (int round = 0; round < 200; ++round) {
        const Capp& pattern = patterns[gen() % patterns.size()];
        std::vector<Symbol> relabel(static_cast<std::size_t>(pattern.symbol_count()));
        std::iota(relabel.begin(), relabel.end(), 10);
        std::shuffle(relabel.begin(), relabel.end(), gen);
        std::vector<Symbol> renamed;
        for (Symbol s : pattern.symbols()) {
            renamed.push_back(relabel[static_cast<std::size_t>(s)]);
        }
        CHECK(is_valid_capp(renamed));
        CHECK(Capp::canonical(renamed) == pattern);
    }
}
