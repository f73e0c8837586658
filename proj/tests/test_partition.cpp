#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semipart/partition.hpp"

using namespace semipart;

namespace {

Partition p(std::vector<part_t> parts) { return Partition(std::move(parts)); }

// random partition of weight <= max_weight, biased toward small parts
Partition random_partition(std::mt19937& rng, part_t max_weight) {
    std::uniform_int_distribution<part_t> weight_dist(0, max_weight);
    part_t remaining = weight_dist(rng);
    std::vector<part_t> parts;
    while (remaining > 0) {
        std::uniform_int_distribution<part_t> part_dist(1, remaining);
        part_t x = std::min(part_dist(rng), part_dist(rng));  // skew small
        parts.push_back(x);
        remaining -= x;
    }
    return Partition(std::move(parts));
}

bool canonical(const Partition& q) {
    part_t sum = 0;
    for (std::size_t i = 0; i < q.length(); ++i) {
        if (q.parts()[i] == 0) return false;
        if (i + 1 < q.length() && q.parts()[i] < q.parts()[i + 1]) return false;
        sum += q.parts()[i];
    }
    return sum == q.weight();
}

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
    CHECK(p({1, 4, 2}).parts() == std::vector<part_t>{4, 2, 1});
    CHECK(p({1, 4, 2}).weight() == 7);
    CHECK(p({}).weight() == 0);
    CHECK(p({}).empty());
    CHECK(p({4, 4, 3, 2, 2, 1}).weight() == 16);
    CHECK_THROWS_AS(p({3, 0}), std::invalid_argument);
}

TEST_CASE("multiset union, containment, subtraction") {
    CHECK(multiset_union(p({2, 1, 1}), p({3, 2, 1, 1})) == p({3, 2, 2, 1, 1, 1, 1}));
    CHECK(multiset_union(p({5}), p({})) == p({5}));
    CHECK(multiset_union(p({4}), p({4})) == p({4, 4}));

    CHECK(contains(p({7, 4, 4, 4, 2, 1, 1}), p({4, 2, 1, 1})));
    CHECK(contains(p({3, 1}), p({})));
    CHECK_FALSE(contains(p({2, 1}), p({3})));
    CHECK_FALSE(contains(p({2, 1}), p({2, 2})));

    CHECK(subtract(p({7, 4, 4, 4, 2, 1, 1}), p({4, 2, 1, 1})) == p({7, 4, 4}));
    CHECK(subtract(p({3, 1}), p({})) == p({3, 1}));
    CHECK_THROWS_AS(subtract(p({2, 1}), p({2, 2})), std::invalid_argument);
}

TEST_CASE("scale and unscale") {
    CHECK(scale(p({3, 1}), 2) == p({6, 2}));
    CHECK(unscale(p({12, 6}), 3) == p({4, 2}));
    CHECK_THROWS_AS(unscale(p({3, 2}), 2), std::invalid_argument);
    CHECK(unscale(scale(p({5, 3, 3}), 4), 4) == p({5, 3, 3}));
}

TEST_CASE("largest-part increments") {
    CHECK(increment_largest(p({4, 2})) == p({5, 2}));
    CHECK(increment_largest(p({})) == p({}));
    CHECK(increment_largest(p({1})) == p({2}));

    CHECK(add_two_to_largest_odd(p({5, 2})) == p({7, 2}));
    CHECK(add_two_to_largest_odd(p({2, 1})) == p({3, 2}));
    CHECK_THROWS_AS(add_two_to_largest_odd(p({4, 2})), std::invalid_argument);
    // only one copy of a repeated largest odd part moves
    CHECK(add_two_to_largest_odd(p({3, 3})) == p({5, 3}));
}

TEST_CASE("val2 and valuation profiles") {
    CHECK(val2(12) == 2);
    CHECK(val2(1) == 0);
    CHECK(val2(40) == 3);
    CHECK_THROWS_AS(val2(0), std::invalid_argument);

    CHECK(valuation_profile(p({40, 12, 6, 4, 4, 3, 1, 1})) ==
          ValuationProfile{3, 2, 2, 2, 1, 0, 0, 0});
    CHECK(valuation_profile(p({})) == ValuationProfile{});
    CHECK(valuation_profile(p({4, 2, 1})) == ValuationProfile{2, 1, 0});
}

TEST_CASE("rep2 and bin") {
    CHECK(rep2(p({12, 6, 1, 1, 1})) == p({4, 4, 4, 2, 2, 2, 1, 1, 1}));
    CHECK(rep2(p({12, 6, 3, 2})) == p({4, 4, 4, 2, 2, 2, 1, 1, 1}));
    CHECK(rep2(p({8})) == p({8}));

    CHECK(bin_expand(p({7, 2})) == p({4, 2, 2, 1}));
    CHECK(bin_expand(p({6, 3})) == p({4, 2, 2, 1}));
    CHECK(bin_expand(p({8})) == p({8}));
    CHECK(bin_expand_int(0) == p({}));

    CHECK(merge_equal(p({4, 4, 4, 2, 2, 2, 1, 1, 1})) == p({12, 6, 3}));
    CHECK(merge_equal(p({5})) == p({5}));
    CHECK(merge_equal(p({2, 2})) == p({4}));

    CHECK(is_binary(p({4, 2, 2, 1})));
    CHECK_FALSE(is_binary(p({6, 3})));
    CHECK(is_binary(p({})));
}

TEST_CASE("weight preservation and the binary characterization") {
    std::mt19937 rng(20240811);
    int distinct_val_cases = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Partition q = random_partition(rng, 200);
        CHECK(canonical(q));
        CHECK(rep2(q).weight() == q.weight());
        CHECK(bin_expand(q).weight() == q.weight());
        CHECK(is_binary(rep2(q)));
        CHECK(is_binary(bin_expand(q)));
        // binary iff bin = rep2
        CHECK(is_binary(q) == (bin_expand(q) == rep2(q)));
        // rep2 inverts by merging when valuations are pairwise distinct
        auto prof = valuation_profile(q);
        if (std::adjacent_find(prof.begin(), prof.end()) == prof.end()) {
            ++distinct_val_cases;
            CHECK(merge_equal(rep2(q)) == q);
        }
        // union / subtract are inverse
        Partition r = random_partition(rng, 40);
        CHECK(subtract(multiset_union(q, r), r) == q);
    }
    CHECK(distinct_val_cases > 20);
}

TEST_CASE("binary characterization, exhaustive to weight 25") {
    // every partition of every n <= 25
    for (part_t n = 0; n <= 25; ++n) {
        std::vector<std::vector<part_t>> stack{{}};
        // simple iterative enumeration
        std::vector<part_t> acc;
        auto rec = [&](auto&& self, part_t remaining, part_t maxp) -> void {
            if (remaining == 0) {
                Partition q(acc);
                CHECK(is_binary(q) == (bin_expand(q) == rep2(q)));
                return;
            }
            for (part_t x = std::min(remaining, maxp); x >= 1; --x) {
                acc.push_back(x);
                self(self, remaining - x, x);
                acc.pop_back();
            }
        };
        rec(rec, n, n == 0 ? 1 : n);
    }
}

TEST_CASE("overpartitions") {
    Overpartition op(p({4, 4, 3, 1}), {4, 1});
    CHECK(op.is_overlined(4));
    CHECK_FALSE(op.is_overlined(3));
    CHECK(op.weight() == 12);
    CHECK_THROWS_AS(Overpartition(p({3, 1}), {2}), std::invalid_argument);
}

TEST_CASE("text round trip") {
    CHECK(to_text(p({4, 2, 1})) == "4+2+1");
    CHECK(to_text(p({})) == "");
    CHECK(parse_partition("4+2+1") == p({4, 2, 1}));
    CHECK(parse_partition(" 12 + 6+1 ") == p({12, 6, 1}));
    CHECK(parse_partition("") == p({}));
    CHECK_THROWS_AS(parse_partition("4++2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4+x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4*+1"), std::invalid_argument);

    Overpartition op(p({4, 4, 2, 1}), {4, 1});
    CHECK(to_text(op) == "4*+4+2+1*");
    CHECK(parse_overpartition("4*+4+2+1*") == op);
    CHECK(parse_overpartition(to_text(op)) == op);
}

TEST_CASE("canonical ordering is lexicographic descending") {
    CHECK(canonical_before(p({5}), p({4, 1})));
    CHECK(canonical_before(p({4, 1}), p({3, 2})));
    CHECK(canonical_before(p({3, 2}), p({2, 1, 1, 1})));
    CHECK(canonical_before(p({4, 2, 1}), p({4, 2})));
    CHECK_FALSE(canonical_before(p({4, 2}), p({4, 2})));
}
