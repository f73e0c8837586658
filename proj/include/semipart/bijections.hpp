#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "semipart/families.hpp"
#include "semipart/partition.hpp"
#include "semipart/report.hpp"

namespace semipart {

/// Every explicit map between families. Source -> target:
///   h_st           OBbar_dag(n)  -> ST(n)
///   phi_spa        SF_prime(n)   -> SPa(n)
///   psi_spa_prime  SPa_prime(n)  -> OB_Rp(n)
///   xi_sp          SP(n)         -> OBbar_prime(n)
///   xi_split       OB_2(n)       -> OB_1(n)
///   f_merge_sl     OB_2(n)       -> SL_3div(n)
///   theta_sb       SB(n)         -> HB(n-1)
///   rep2_sf        SF(n)         -> OB(n)
///   rep2_snc       SNc(n)        -> OB_13(n)
///   rb_st          ST(n)         -> B(n) x B(n)   (injective, no inverse map)
///   unimodal_oc    OBbar_prime(n) -> weakly unimodal binary compositions
enum class BijectionId {
    h_st, phi_spa, psi_spa_prime, xi_sp, xi_split, f_merge_sl,
    theta_sb, rep2_sf, rep2_snc, rb_st, unimodal_oc,
};

/// Composition: ordered list of positive parts (order significant).
using Composition = std::vector<part_t>;
using BinaryPair = std::pair<Partition, Partition>;

/// Value passing through a bijection: partitions, overpartitions,
/// compositions, or (rep2, bin) pairs.
using Element = std::variant<Partition, Overpartition, Composition, BinaryPair>;

std::vector<BijectionId> all_bijections();
const char* bijection_name(BijectionId bij);
std::optional<BijectionId> bijection_from_name(std::string_view name);

FamilyId source_family(BijectionId bij);
std::optional<FamilyId> target_family(BijectionId bij);  // none for rb_st / unimodal_oc

/// Applies the map after checking source membership; throws
/// std::invalid_argument on an element outside the source family or of the
/// wrong shape.
Element forward(BijectionId bij, const Element& x);

/// Inverse map, checking target membership. rb_st has no inverse and
/// throws std::invalid_argument.
Element backward(BijectionId bij, const Element& y);

/// (rep2(p), bin(p)); defined on every partition, injective on ST(n).
BinaryPair rb_pair(const Partition& p);

/// Checks totality, image membership, injectivity, surjectivity onto the
/// enumerated target, and the round trip at one weight (injectivity only
/// for rb_st; image validity instead of an enumerated target for
/// unimodal_oc). Failures are reported, not thrown.
CheckReport verify_bijection(BijectionId bij, std::uint64_t n);

/// verify_bijection swept over lo..hi; counterexamples list failing n.
CheckReport verify_bijection_range(BijectionId bij, std::uint64_t lo, std::uint64_t hi);

/// True iff the composition is weakly unimodal and every part value occurs
/// in exactly one maximal run, of odd length.
bool is_odd_colony_composition(const Composition& c);

std::string to_text(const Composition& c);

}  // namespace semipart
