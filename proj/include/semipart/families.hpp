#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "semipart/partition.hpp"
#include "semipart/sequences.hpp"

namespace semipart {

/// Partition and overpartition families. The OBbar_* tags produce
/// overpartitions; everything else produces partitions.
enum class FamilyId {
    SF, SF_prime, ST, SPa, SPa_prime, SP, SNc, DSF,
    SL, SL_3div, SL_3ndiv, SB, HB, HB_prime,
    B, OB, OB_1, OB_2, OB_R, OB_Rp, OB_13,
    OBbar_prime, OBbar_star, OBbar_dag,
};

using PartitionList = std::vector<Partition>;
using OverpartitionList = std::vector<Overpartition>;

std::vector<FamilyId> all_families();
const char* family_name(FamilyId fid);
std::optional<FamilyId> family_from_name(std::string_view name);

bool is_overpartition_family(FamilyId fid);

/// True for the families defined purely by multiplicity constraints on
/// powers of 2 (B, OB, OB_1, OB_2, OB_R, OB_Rp, OB_13, HB).
bool is_constrained_binary_family(FamilyId fid);

/// Smallest weight the family is defined at (SL and SL_3* at 2,
/// OBbar_star at 1, everything else at 0).
std::uint64_t family_min_weight(FamilyId fid);

/// The sequence that counts the family, where the paper claims one
/// (nothing for B). HB and HB_prime at weight n pair with sb(n+1).
std::optional<SequenceId> paired_sequence(FamilyId fid);

/// Index the paired sequence is read at for the family at weight n.
std::uint64_t paired_index(FamilyId fid, std::uint64_t n);

/// The total-parts sequence paired with the family, where the paper
/// defines one.
std::optional<SequenceId> paired_total_parts(FamilyId fid);

/// All members of the family at weight n in canonical order (recursive
/// construction for the recursively defined families, direct enumeration
/// for the constrained binary ones). Memoized; the reference stays valid.
/// Throws std::domain_error below family_min_weight or for an
/// overpartition family.
const PartitionList& build_family(FamilyId fid, std::uint64_t n);

/// Overpartition families OBbar_prime / OBbar_star / OBbar_dag.
const OverpartitionList& build_over_family(FamilyId fid, std::uint64_t n);

/// Direct enumeration over multiplicity vectors of powers of 2; only valid
/// for the constrained binary families.
PartitionList enumerate_constrained_binary(FamilyId fid, std::uint64_t n);

/// Non-recursive membership test. Total on all partitions; weights below
/// family_min_weight are simply not members.
bool is_member(FamilyId fid, const Partition& p);

/// Membership for the overpartition families (base must be odd binary and
/// the overline rule must hold).
bool is_over_member(FamilyId fid, const Overpartition& p);

/// Sum of the number of parts over every member at weight n.
mpz_class total_parts(FamilyId fid, std::uint64_t n);

}  // namespace semipart
