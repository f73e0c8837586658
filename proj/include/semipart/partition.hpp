#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace semipart {

using part_t = std::uint64_t;

/// Integer partition held in canonical form: parts weakly decreasing,
/// every part >= 1, weight cached. The empty partition is the unique
/// partition of 0.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes (sorts descending). Throws std::invalid_argument on a
    /// zero part.
    explicit Partition(std::vector<part_t> raw);

    const std::vector<part_t>& parts() const { return parts_; }
    part_t weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Largest part; throws std::logic_error on the empty partition.
    part_t largest() const;

    std::size_t multiplicity(part_t value) const;
    bool has_part(part_t value) const { return multiplicity(value) > 0; }

    /// Distinct part values, descending.
    std::vector<part_t> distinct_parts() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<part_t> parts_;   // weakly decreasing
    part_t weight_ = 0;
};

/// Canonical "lexicographically descending" order on part lists, used to
/// keep family listings deterministic: (5) before (4,1) before (3,2).
bool canonical_before(const Partition& a, const Partition& b);

/// Partition with a subset of part values overlined. Only the first
/// occurrence of a value may carry an overline, so a set of values is a
/// complete encoding.
class Overpartition {
public:
    Overpartition() = default;

    /// Throws std::invalid_argument if an overlined value is not a part.
    Overpartition(Partition base, std::vector<part_t> overlined);

    const Partition& base() const { return base_; }
    const std::vector<part_t>& overlined() const { return over_; }  // ascending
    bool is_overlined(part_t value) const;
    part_t weight() const { return base_.weight(); }

    bool operator==(const Overpartition&) const = default;

private:
    Partition base_;
    std::vector<part_t> over_;  // ascending, distinct
};

bool canonical_before(const Overpartition& a, const Overpartition& b);

// ---- multiset algebra -------------------------------------------------

Partition multiset_union(const Partition& a, const Partition& b);

/// True iff every part of b occurs in a with at least the same multiplicity.
bool contains(const Partition& a, const Partition& b);

/// Multiset difference; throws std::invalid_argument unless contains(a, b).
Partition subtract(const Partition& a, const Partition& b);

/// Every part multiplied by m (m >= 1).
Partition scale(const Partition& p, part_t m);

/// Every part divided by m; throws std::invalid_argument on a part not
/// divisible by m.
Partition unscale(const Partition& p, part_t m);

/// Adds 1 to the largest part; the empty partition maps to itself.
Partition increment_largest(const Partition& p);

/// Adds 2 to the largest odd part and re-canonicalizes. Throws
/// std::invalid_argument if no part is odd. When the largest odd part is
/// repeated, exactly one copy is changed.
Partition add_two_to_largest_odd(const Partition& p);

// ---- 2-adic machinery -------------------------------------------------

/// Largest k with 2^k dividing m; throws std::invalid_argument on 0.
unsigned val2(part_t m);

bool is_power_of_two(part_t m);

/// Multiset of val2 of the parts, sorted non-increasing.
using ValuationProfile = std::vector<unsigned>;
ValuationProfile valuation_profile(const Partition& p);

/// Part m = 2^k * q (q odd) becomes q copies of 2^k; weight preserving,
/// image is a binary partition.
Partition rep2(const Partition& p);

/// Each part replaced by its binary expansion into distinct powers of 2,
/// all joined as a multiset; weight preserving.
Partition bin_expand(const Partition& p);

/// Binary expansion of a single integer, as a partition (distinct powers
/// of 2, descending). bin_expand_int(0) is the empty partition.
Partition bin_expand_int(part_t m);

/// Each maximal run of equal parts collapsed to one part equal to its sum.
Partition merge_equal(const Partition& p);

/// True iff all parts are powers of 2 (vacuously true for the empty
/// partition).
bool is_binary(const Partition& p);

// ---- text form ---------------------------------------------------------

/// "+"-joined parts, overlined values suffixed with "*" at their first
/// occurrence (e.g. "4*+2+1"). The empty partition renders as "".
std::string to_text(const Partition& p);
std::string to_text(const Overpartition& p);

/// Inverse of to_text; ignores whitespace. Throws std::invalid_argument on
/// malformed input.
Partition parse_partition(std::string_view text);
Overpartition parse_overpartition(std::string_view text);

}  // namespace semipart
