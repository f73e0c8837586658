#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "semipart/checks.hpp"
#include "semipart/families.hpp"

using namespace semipart;

namespace {

std::set<std::string> texts(const PartitionList& list) {
    std::set<std::string> out;
    for (const auto& p : list) out.insert(to_text(p));
    return out;
}

std::set<std::string> texts(const OverpartitionList& list) {
    std::set<std::string> out;
    for (const auto& p : list) out.insert(to_text(p));
    return out;
}

using SS = std::set<std::string>;

void check_set(FamilyId fid, std::uint64_t n, const SS& want) {
    CAPTURE(family_name(fid));
    CAPTURE(n);
    CHECK(texts(build_family(fid, n)) == want);
}

}  // namespace

TEST_CASE("ST printed table, weights 1..8") {
    check_set(FamilyId::ST, 1, {"1"});
    check_set(FamilyId::ST, 2, {"2"});
    check_set(FamilyId::ST, 3, {"3", "2+1"});
    check_set(FamilyId::ST, 4, {"4"});
    check_set(FamilyId::ST, 5, {"5", "3+2", "4+1", "2+1+1+1"});
    check_set(FamilyId::ST, 6, {"6", "4+2"});
    check_set(FamilyId::ST, 7,
              {"7", "4+3", "5+2", "6+1", "4+2+1", "3+2+1+1", "4+1+1+1"});
    check_set(FamilyId::ST, 8, {"8"});
}

TEST_CASE("SPa printed table, weights 1..16") {
    for (std::uint64_t n : {1, 2, 4, 8, 16}) check_set(FamilyId::SPa, n, {});
    check_set(FamilyId::SPa, 3, {"3"});
    check_set(FamilyId::SPa, 5, {"5"});
    check_set(FamilyId::SPa, 6, {"6"});
    check_set(FamilyId::SPa, 7, {"7"});
    check_set(FamilyId::SPa, 9, {"9", "6+1+1+1"});
    check_set(FamilyId::SPa, 10, {"10"});
    check_set(FamilyId::SPa, 11, {"11", "6+3+1+1"});
    check_set(FamilyId::SPa, 12, {"12"});
    check_set(FamilyId::SPa, 13, {"13", "6+5+1+1", "10+1+1+1"});
    check_set(FamilyId::SPa, 14, {"14"});
    check_set(FamilyId::SPa, 15, {"15", "7+6+1+1", "10+3+1+1", "12+1+1+1"});
}

TEST_CASE("SPa' printed table, weights 1..12") {
    check_set(FamilyId::SPa_prime, 1, {"1"});
    check_set(FamilyId::SPa_prime, 2, {"2"});
    check_set(FamilyId::SPa_prime, 3, {"3"});
    check_set(FamilyId::SPa_prime, 4, {"4"});
    check_set(FamilyId::SPa_prime, 5, {"5", "2+1+1+1"});
    check_set(FamilyId::SPa_prime, 6, {"6"});
    check_set(FamilyId::SPa_prime, 7, {"7", "3+2+1+1", "4+1+1+1"});
    check_set(FamilyId::SPa_prime, 8, {"8"});
    check_set(FamilyId::SPa_prime, 9, {"9", "4+3+1+1", "5+2+1+1", "6+1+1+1"});
    check_set(FamilyId::SPa_prime, 10, {"10", "4+2+2+2"});
    check_set(FamilyId::SPa_prime, 11,
              {"11", "5+4+1+1", "6+3+1+1", "7+2+1+1", "8+1+1+1"});
    check_set(FamilyId::SPa_prime, 12, {"12"});
}

TEST_CASE("SP printed table, weights 1..8") {
    check_set(FamilyId::SP, 1, {"1"});
    check_set(FamilyId::SP, 2, {"2"});
    check_set(FamilyId::SP, 3, {"3", "2+1", "1+1+1"});
    check_set(FamilyId::SP, 4, {"4"});
    check_set(FamilyId::SP, 5, {"5", "4+1", "3+1+1", "2+1+1+1", "1+1+1+1+1"});
    check_set(FamilyId::SP, 6, {"6", "4+2", "2+2+2"});
    check_set(FamilyId::SP, 7,
              {"7", "5+2", "3+2+2", "6+1", "4+2+1", "2+2+2+1", "5+1+1", "4+1+1+1",
               "3+1+1+1+1", "2+1+1+1+1+1", "1+1+1+1+1+1+1"});
    check_set(FamilyId::SP, 8, {"8"});
}

TEST_CASE("SNc printed table, weights 1..12") {
    check_set(FamilyId::SNc, 1, {"1"});
    check_set(FamilyId::SNc, 2, {"2"});
    check_set(FamilyId::SNc, 3, {"2+1", "3"});
    check_set(FamilyId::SNc, 4, {"4"});
    check_set(FamilyId::SNc, 5, {"4+1", "3+2"});
    check_set(FamilyId::SNc, 6, {"4+2", "6"});
    check_set(FamilyId::SNc, 7, {"4+2+1", "6+1", "4+3"});
    check_set(FamilyId::SNc, 8, {"8"});
    check_set(FamilyId::SNc, 9, {"8+1", "4+3+2", "6+3"});
    check_set(FamilyId::SNc, 10, {"8+2", "6+4"});
    check_set(FamilyId::SNc, 11, {"8+2+1", "6+4+1", "8+3"});
    check_set(FamilyId::SNc, 12, {"8+4", "12"});
}

TEST_CASE("DSF printed table, weights 1..12") {
    check_set(FamilyId::DSF, 1, {});
    check_set(FamilyId::DSF, 2, {});
    check_set(FamilyId::DSF, 3, {"2+1"});
    check_set(FamilyId::DSF, 4, {});
    check_set(FamilyId::DSF, 5, {"3+2"});
    check_set(FamilyId::DSF, 6, {"4+2"});
    check_set(FamilyId::DSF, 7, {"5+2", "4+2+1"});
    check_set(FamilyId::DSF, 8, {});
    check_set(FamilyId::DSF, 9, {"7+2", "4+3+2"});
    check_set(FamilyId::DSF, 10, {"6+4"});
    check_set(FamilyId::DSF, 11, {"9+2", "5+4+2", "6+4+1"});
    check_set(FamilyId::DSF, 12, {"8+4"});
}

TEST_CASE("SL printed table, weights 2..8") {
    check_set(FamilyId::SL, 2, {"2"});
    check_set(FamilyId::SL, 3, {"3", "2+1", "1+1+1"});
    check_set(FamilyId::SL, 4, {"4"});
    check_set(FamilyId::SL, 5, {"4+1", "3+1+1", "2+1+1+1", "1+1+1+1+1"});
    check_set(FamilyId::SL, 6, {"4+2", "2+2+2"});
    check_set(FamilyId::SL, 7,
              {"6+1", "4+2+1", "2+2+2+1", "4+1+1+1", "3+1+1+1+1", "2+1+1+1+1+1",
               "1+1+1+1+1+1+1"});
    check_set(FamilyId::SL, 8, {"8"});
    CHECK_THROWS_AS(build_family(FamilyId::SL, 1), std::domain_error);
}

TEST_CASE("SB and HB printed tables, weights 1..10") {
    check_set(FamilyId::SB, 1, {"1"});
    check_set(FamilyId::SB, 2, {"2"});
    check_set(FamilyId::SB, 3, {"3", "2+1"});
    check_set(FamilyId::SB, 4, {"4"});
    check_set(FamilyId::SB, 5, {"5", "3+2", "4+1"});
    check_set(FamilyId::SB, 6, {"6", "4+2"});
    check_set(FamilyId::SB, 7, {"7", "6+1", "4+2+1"});
    check_set(FamilyId::SB, 8, {"8"});
    check_set(FamilyId::SB, 9, {"9", "5+4", "7+2", "8+1"});
    check_set(FamilyId::SB, 10, {"10", "6+4", "8+2"});

    check_set(FamilyId::HB, 0, {""});
    check_set(FamilyId::HB, 1, {"1"});
    check_set(FamilyId::HB, 2, {"2", "1+1"});
    check_set(FamilyId::HB, 3, {"2+1"});
    check_set(FamilyId::HB, 4, {"4", "2+2", "2+1+1"});
    check_set(FamilyId::HB, 5, {"4+1", "2+2+1"});
    check_set(FamilyId::HB, 6, {"4+2", "4+1+1", "2+2+1+1"});
    check_set(FamilyId::HB, 7, {"4+2+1"});
    check_set(FamilyId::HB, 8, {"8", "4+4", "4+2+2", "4+2+1+1"});
    check_set(FamilyId::HB, 9, {"8+1", "4+4+1", "4+2+2+1"});
}

TEST_CASE("SF and OB example table, weights 1..5") {
    check_set(FamilyId::SF, 1, {"1"});
    check_set(FamilyId::SF, 2, {"2"});
    check_set(FamilyId::SF, 3, {"2+1", "3"});
    check_set(FamilyId::SF, 4, {"4"});
    check_set(FamilyId::SF, 5, {"4+1", "3+2", "5"});

    check_set(FamilyId::OB, 1, {"1"});
    check_set(FamilyId::OB, 2, {"2"});
    check_set(FamilyId::OB, 3, {"2+1", "1+1+1"});
    check_set(FamilyId::OB, 4, {"4"});
    check_set(FamilyId::OB, 5, {"4+1", "2+1+1+1", "1+1+1+1+1"});
}

TEST_CASE("constrained binary family examples") {
    CHECK(texts(enumerate_constrained_binary(FamilyId::OB_1, 7)) ==
          SS{"2+2+2+1", "1+1+1+1+1+1+1"});
    CHECK(texts(enumerate_constrained_binary(FamilyId::OB_2, 7)) ==
          SS{"4+2+1", "2+1+1+1+1+1"});
    CHECK(texts(enumerate_constrained_binary(FamilyId::OB_R, 9)) ==
          SS{"2+2+2+1+1+1", "1+1+1+1+1+1+1+1+1"});
    CHECK(texts(enumerate_constrained_binary(FamilyId::OB_13, 7)) ==
          SS{"4+2+1", "4+1+1+1", "2+2+2+1"});
    CHECK(texts(enumerate_constrained_binary(FamilyId::OB_Rp, 9)) ==
          SS{"4+1+1+1+1+1", "2+1+1+1+1+1+1+1", "2+2+2+1+1+1", "1+1+1+1+1+1+1+1+1"});
    CHECK(enumerate_constrained_binary(FamilyId::B, 6).size() == 6);
    CHECK_THROWS_AS(enumerate_constrained_binary(FamilyId::ST, 5), std::domain_error);
}

TEST_CASE("weight-0 conventions") {
    CHECK(build_family(FamilyId::ST, 0).empty());
    CHECK(build_family(FamilyId::SPa, 0) == PartitionList{Partition{}});
    CHECK(build_family(FamilyId::SNc, 0) == PartitionList{Partition{}});
    CHECK(build_family(FamilyId::SF, 0) == PartitionList{Partition{}});
    CHECK(build_family(FamilyId::HB, 0) == PartitionList{Partition{}});
    CHECK(build_family(FamilyId::HB_prime, 0) == PartitionList{Partition{}});
    CHECK(build_family(FamilyId::SPa_prime, 0).empty());
    CHECK(build_family(FamilyId::SP, 0).empty());
    CHECK(build_family(FamilyId::DSF, 0).empty());
    CHECK(build_family(FamilyId::SB, 0).empty());
    CHECK(build_family(FamilyId::OB_Rp, 0).empty());
    CHECK(build_family(FamilyId::OB_R, 0) == PartitionList{Partition{}});
    CHECK(build_over_family(FamilyId::OBbar_dag, 0).empty());
    CHECK_THROWS_AS(build_over_family(FamilyId::OBbar_star, 0), std::domain_error);
}

TEST_CASE("overpartition family printed examples") {
    CHECK(texts(build_over_family(FamilyId::OBbar_prime, 5)) ==
          SS{"4*+1", "4*+1*", "2*+1+1+1", "2*+1*+1+1", "1*+1+1+1+1"});
    CHECK(texts(build_over_family(FamilyId::OBbar_star, 5)) ==
          SS{"4+1", "2+1+1+1", "1+1+1+1+1", "1*+1+1+1+1"});
    CHECK(texts(build_over_family(FamilyId::OBbar_dag, 7)) ==
          SS{"4+2+1", "4+1+1+1", "4+1*+1+1", "2+2+2+1", "2+1+1+1+1+1",
             "2+1*+1+1+1+1", "1+1+1+1+1+1+1"});
    CHECK(texts(build_over_family(FamilyId::OBbar_star, 1)) == SS{"1", "1*"});
    // binary overpartitions of 3 from the preliminaries
    CHECK(build_over_family(FamilyId::OBbar_prime, 3).size() == 3);
}

TEST_CASE("membership predicate examples") {
    CHECK(is_member(FamilyId::ST, parse_partition("4+2+1")));
    CHECK_FALSE(is_member(FamilyId::ST, parse_partition("2+2")));
    CHECK(is_member(FamilyId::SB, parse_partition("8+1")));
    CHECK(is_member(FamilyId::SNc, parse_partition("8+3")));
    CHECK_FALSE(is_member(FamilyId::SNc, parse_partition("5+4")));
    CHECK(is_member(FamilyId::SP, parse_partition("2+2+2+1")));
    CHECK_FALSE(is_member(FamilyId::SL, parse_partition("1")));
    CHECK(is_member(FamilyId::SF, Partition{}));
    CHECK_FALSE(is_member(FamilyId::ST, Partition{}));
}

TEST_CASE("count and total-parts laws to 200") {
    for (FamilyId fid : all_families()) {
        auto seq = paired_sequence(fid);
        if (!seq) continue;
        for (std::uint64_t n = family_min_weight(fid); n <= 200; ++n) {
            std::size_t count = is_overpartition_family(fid)
                                    ? build_over_family(fid, n).size()
                                    : build_family(fid, n).size();
            if (mpz_class(static_cast<unsigned long>(count)) !=
                seq_value(*seq, paired_index(fid, n))) {
                CAPTURE(family_name(fid));
                CAPTURE(n);
                CHECK(false);
            }
            if (auto tp = paired_total_parts(fid)) {
                if (total_parts(fid, n) != seq_value(*tp, paired_index(fid, n))) {
                    CAPTURE(family_name(fid));
                    CAPTURE(n);
                    CHECK(false);
                }
            }
        }
    }
    CHECK(true);
}

TEST_CASE("total parts printed examples") {
    CHECK(total_parts(FamilyId::ST, 7) == 18);
    CHECK(total_parts(FamilyId::SB, 11) == 11);
    CHECK(total_parts(FamilyId::SPa, 4) == 0);
}

TEST_CASE("containments and family identities to 200") {
    auto subset = [](const PartitionList& a, const PartitionList& b) {
        for (const auto& p : a) {
            if (std::find(b.begin(), b.end(), p) == b.end()) return false;
        }
        return true;
    };
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CAPTURE(n);
        REQUIRE(subset(build_family(FamilyId::SPa, n), build_family(FamilyId::SPa_prime, n)));
        REQUIRE(subset(build_family(FamilyId::SPa_prime, n), build_family(FamilyId::ST, n)));
        REQUIRE(subset(build_family(FamilyId::SNc, n), build_family(FamilyId::SF, n)));
        REQUIRE(subset(build_family(FamilyId::DSF, n), build_family(FamilyId::SF, n)));
        REQUIRE(subset(build_family(FamilyId::SB, n), build_family(FamilyId::SF, n)));
        REQUIRE(subset(build_family(FamilyId::OB_R, n), build_family(FamilyId::OB_Rp, n)));
        REQUIRE(build_family(FamilyId::HB_prime, n) == build_family(FamilyId::HB, n));
        if (n >= 2)
            REQUIRE(build_family(FamilyId::SL_3ndiv, n) == build_family(FamilyId::OB, n));
    }
}

TEST_CASE("overline-free members of OBbar_dag are exactly OB") {
    for (std::uint64_t n = 0; n <= 100; ++n) {
        PartitionList plain;
        for (const auto& op : build_over_family(FamilyId::OBbar_dag, n)) {
            if (op.overlined().empty()) plain.push_back(op.base());
        }
        CAPTURE(n);
        REQUIRE(plain == build_family(FamilyId::OB, n));
    }
}

TEST_CASE("ST odd-weight parity structure") {
    for (std::uint64_t n = 1; n <= 199; n += 2) {
        for (const auto& p : build_family(FamilyId::ST, n)) {
            std::size_t odd = 0;
            for (part_t x : p.parts()) odd += x % 2;
            CAPTURE(n);
            CAPTURE(to_text(p));
            REQUIRE((odd == 1 || odd == 3));
            if (odd == 3) REQUIRE(p.multiplicity(1) >= 2);
        }
    }
}

TEST_CASE("SL split by divisibility of the largest part") {
    for (std::uint64_t n = 2; n <= 100; ++n) {
        auto all = build_family(FamilyId::SL, n);
        auto div = build_family(FamilyId::SL_3div, n);
        auto ndiv = build_family(FamilyId::SL_3ndiv, n);
        CHECK(div.size() + ndiv.size() == all.size());
        for (const auto& p : div) CHECK(p.largest() % 3 == 0);
    }
}

TEST_CASE("sb(n+1) counts hyperbinary partitions, n <= 25") {
    for (std::uint64_t n = 0; n <= 25; ++n) {
        CHECK(mpz_class(static_cast<unsigned long>(build_family(FamilyId::HB, n).size())) ==
              seq_value(SequenceId::sb, n + 1));
    }
}

TEST_CASE("family name lookup") {
    for (FamilyId fid : all_families()) CHECK(family_from_name(family_name(fid)) == fid);
    CHECK(family_from_name("XYZ") == std::nullopt);
}
