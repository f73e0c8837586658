#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "semipart/families.hpp"
#include "semipart/report.hpp"
#include "semipart/sequences.hpp"

namespace semipart {

/// One registered congruence / parity / identity statement, swept over
/// n >= min_n. modulus 0 marks an exact (big-integer) identity.
struct Check {
    std::string tag;
    std::string statement;
    std::uint64_t min_n = 0;
    unsigned modulus = 2;
};

const std::vector<Check>& check_registry();
std::optional<Check> find_check(std::string_view tag);

/// Sweeps the check for every n in [min_n, n_max]. Unknown tags throw
/// std::invalid_argument.
CheckReport run_check(std::string_view tag, std::uint64_t n_max);

/// Brute-force ground truth: enumerates ALL partitions of n and filters by
/// is_member. Throws std::invalid_argument when n exceeds the bound.
PartitionList oracle_family(FamilyId fid, std::uint64_t n, std::uint64_t bound = 30);

/// Same for the overpartition families: all odd binary overpartitions of n
/// filtered by the overline rules.
OverpartitionList oracle_over_family(FamilyId fid, std::uint64_t n,
                                     std::uint64_t bound = 30);

/// All partitions of n, weakly decreasing. Exposed for tests.
std::vector<Partition> all_partitions_of(std::uint64_t n);

/// Every registered check at n_max, plus the count-law, total-parts,
/// containment, oracle-equivalence (up to oracle_bound), bijection
/// (min(n_max, 100)) and series-comparison (min(n_max, 512)) suites.
/// Count, total-parts and containment sweeps run to min(n_max, 200).
std::vector<CheckReport> run_all(std::uint64_t n_max, std::uint64_t oracle_bound);

/// Test hook: when set, modular sequence evaluation inside checks consults
/// this first, so the harness itself can be fault-injected. Pass nullptr
/// to clear.
using ModOverride =
    std::function<std::optional<std::uint64_t>(SequenceId, std::uint64_t, std::uint64_t)>;
void set_mod_override(ModOverride fn);

}  // namespace semipart
