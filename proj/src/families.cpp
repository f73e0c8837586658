#include "semipart/families.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace semipart {

namespace {

enum class Kind { recursive, filtered, constrained, over };

struct FamilyInfo {
    FamilyId id;
    const char* name;
    Kind kind;
    std::uint64_t min_weight;
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyId::SF, "SF", Kind::recursive, 0},
    {FamilyId::SF_prime, "SF_prime", Kind::filtered, 0},
    {FamilyId::ST, "ST", Kind::recursive, 0},
    {FamilyId::SPa, "SPa", Kind::recursive, 0},
    {FamilyId::SPa_prime, "SPa_prime", Kind::recursive, 0},
    {FamilyId::SP, "SP", Kind::recursive, 0},
    {FamilyId::SNc, "SNc", Kind::recursive, 0},
    {FamilyId::DSF, "DSF", Kind::recursive, 0},
    {FamilyId::SL, "SL", Kind::recursive, 2},
    {FamilyId::SL_3div, "SL_3div", Kind::filtered, 2},
    {FamilyId::SL_3ndiv, "SL_3ndiv", Kind::filtered, 2},
    {FamilyId::SB, "SB", Kind::recursive, 0},
    {FamilyId::HB, "HB", Kind::constrained, 0},
    {FamilyId::HB_prime, "HB_prime", Kind::recursive, 0},
    {FamilyId::B, "B", Kind::constrained, 0},
    {FamilyId::OB, "OB", Kind::constrained, 0},
    {FamilyId::OB_1, "OB_1", Kind::constrained, 0},
    {FamilyId::OB_2, "OB_2", Kind::constrained, 0},
    {FamilyId::OB_R, "OB_R", Kind::constrained, 0},
    {FamilyId::OB_Rp, "OB_Rp", Kind::constrained, 0},
    {FamilyId::OB_13, "OB_13", Kind::constrained, 0},
    {FamilyId::OBbar_prime, "OBbar_prime", Kind::over, 0},
    {FamilyId::OBbar_star, "OBbar_star", Kind::over, 1},
    {FamilyId::OBbar_dag, "OBbar_dag", Kind::over, 0},
};

const FamilyInfo& info(FamilyId fid) {
    for (const auto& f : kFamilies) {
        if (f.id == fid) return f;
    }
    throw std::logic_error("unknown family id");
}

Partition make(std::initializer_list<part_t> parts) {
    return Partition(std::vector<part_t>(parts));
}

void canonicalize(PartitionList& list) {
    std::sort(list.begin(), list.end(),
              [](const Partition& a, const Partition& b) { return canonical_before(a, b); });
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

void canonicalize(OverpartitionList& list) {
    std::sort(list.begin(), list.end(), [](const Overpartition& a, const Overpartition& b) {
        return canonical_before(a, b);
    });
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

template <class Fn>
PartitionList map_members(const PartitionList& in, Fn fn) {
    PartitionList out;
    out.reserve(in.size());
    for (const Partition& p : in) out.push_back(fn(p));
    return out;
}

PartitionList joined(std::initializer_list<PartitionList> lists) {
    PartitionList out;
    for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
    canonicalize(out);
    return out;
}

PartitionList scaled2(const PartitionList& in) {
    return map_members(in, [](const Partition& p) { return scale(p, 2); });
}

PartitionList with_extra(const PartitionList& in, const Partition& extra) {
    return map_members(in, [&](const Partition& p) { return multiset_union(p, extra); });
}

PartitionList bumped_odd(const PartitionList& in) {
    return map_members(in, [](const Partition& p) { return add_two_to_largest_odd(p); });
}

// Drop 1 from the largest part after doubling, per the SB odd rule:
// (2*SB(n+1))^- takes each member of 2*SB(n+1) and lowers its first part by 1.
Partition lower_first(const Partition& p) {
    std::vector<part_t> parts = p.parts();
    parts.front() -= 1;  // parts are even and distinct, so this stays canonical
    return Partition(std::move(parts));
}

// ---- constrained binary enumeration -------------------------------------

// Multiplicity rule for one power of 2. `is_largest` marks the largest part
// value actually present in the partition being built.
bool mult_allowed(FamilyId fid, std::uint64_t m, bool is_largest) {
    switch (fid) {
        case FamilyId::B: return true;
        case FamilyId::OB: return m % 2 == 1;
        case FamilyId::OB_1: return m % 2 == 1 && (!is_largest || m >= 3);
        case FamilyId::OB_2: return m % 2 == 1;  // shape constraint handled separately
        case FamilyId::OB_R: return m % 2 == 1 && m >= 3;
        case FamilyId::OB_Rp: return m % 2 == 1 && (is_largest || m >= 3);
        case FamilyId::OB_13: return m == 1 || m == 3;
        case FamilyId::HB: return m == 1 || m == 2;
        default: throw std::logic_error("not a constrained binary family");
    }
}

bool empty_allowed(FamilyId fid) {
    switch (fid) {
        case FamilyId::B:
        case FamilyId::OB:
        case FamilyId::OB_R:
        case FamilyId::OB_13:
        case FamilyId::HB:
            return true;
        default:
            return false;
    }
}

void enumerate_rec(FamilyId fid, std::uint64_t remaining, part_t power, bool placed_any,
                   std::vector<part_t>& acc, PartitionList& out) {
    if (remaining == 0) {
        if (!placed_any && !empty_allowed(fid)) return;
        // OB_2 shape: first two parts are consecutive powers of 2
        if (fid == FamilyId::OB_2 && (acc.size() < 2 || acc[0] != 2 * acc[1])) return;
        out.push_back(Partition(acc));
        return;
    }
    if (power == 0) return;
    for (std::uint64_t m = remaining / power;; --m) {
        bool ok = (m == 0) || mult_allowed(fid, m, !placed_any);
        if (fid == FamilyId::OB_2 && !placed_any && m > 1) ok = false;
        if (ok) {
            acc.insert(acc.end(), m, power);
            enumerate_rec(fid, remaining - m * power, power / 2, placed_any || m > 0, acc,
                          out);
            acc.resize(acc.size() - m);
        }
        if (m == 0) break;
    }
}

PartitionList enumerate_constrained(FamilyId fid, std::uint64_t n) {
    PartitionList out;
    if (n == 0) {
        if (empty_allowed(fid)) out.push_back(Partition{});
        return out;
    }
    part_t top = 1;
    while (top * 2 <= n) top *= 2;
    std::vector<part_t> acc;
    enumerate_rec(fid, n, top, false, acc, out);
    canonicalize(out);
    return out;
}

// ---- membership predicates ----------------------------------------------

struct ValuationClasses {
    // one entry per distinct 2-adic valuation: valuation, multiplicity in
    // v(lambda), and the number of parts equal to 2^valuation
    struct Entry {
        unsigned val;
        std::size_t count;
        std::size_t pow2_count;
    };
    std::vector<Entry> entries;  // descending by valuation
    unsigned top_val = 0;
};

ValuationClasses classes_of(const Partition& p) {
    ValuationClasses out;
    std::map<unsigned, std::pair<std::size_t, std::size_t>> acc;
    for (part_t x : p.parts()) {
        unsigned v = val2(x);
        auto& e = acc[v];
        e.first += 1;
        if (is_power_of_two(x)) e.second += 1;
    }
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        out.entries.push_back({it->first, it->second.first, it->second.second});
    if (!out.entries.empty()) out.top_val = out.entries.front().val;
    return out;
}

bool distinct_valuations(const Partition& p) {
    auto prof = valuation_profile(p);
    return std::adjacent_find(prof.begin(), prof.end()) == prof.end();
}

bool member_ST(const Partition& p) {
    if (p.empty()) return false;
    auto cls = classes_of(p);
    if (cls.entries.front().count != 1) return false;
    for (std::size_t i = 1; i < cls.entries.size(); ++i) {
        const auto& e = cls.entries[i];
        if (e.count != 1 && e.count != 3) return false;
        if (e.count == 3 && e.pow2_count < 2) return false;
    }
    return true;
}

bool member_SPa_prime(const Partition& p) {
    if (p.empty()) return false;
    auto cls = classes_of(p);
    if (cls.entries.front().count != 1) return false;
    for (std::size_t i = 1; i < cls.entries.size(); ++i) {
        const auto& e = cls.entries[i];
        if (e.count != 3 || e.pow2_count < 2) return false;
    }
    return true;
}

bool member_SPa(const Partition& p) {
    if (p.empty()) return true;  // SPa(0) = {()}
    if (!member_SPa_prime(p)) return false;
    auto cls = classes_of(p);
    return !p.has_part(part_t{1} << cls.top_val);
}

bool member_SP(const Partition& p) {
    if (p.empty()) return false;
    Partition rest(std::vector<part_t>(p.parts().begin() + 1, p.parts().end()));
    Partition t = multiset_union(bin_expand_int(p.largest()), rest);
    if (!is_binary(t)) return false;
    for (part_t v : t.distinct_parts()) {
        if (t.multiplicity(v) % 2 == 0) return false;
    }
    return true;
}

bool member_SNc(const Partition& p) {
    if (!distinct_valuations(p)) return false;
    for (part_t x : p.parts()) {
        part_t odd = x >> val2(x);
        if (odd != 1 && odd != 3) return false;
    }
    return true;
}

bool member_DSF(const Partition& p) {
    if (p.empty() || !distinct_valuations(p)) return false;
    auto prof = valuation_profile(p);
    unsigned v1 = prof.front();
    if (v1 == 0) return false;
    if (!p.has_part(part_t{1} << v1)) return false;
    return std::find(prof.begin(), prof.end(), v1 - 1) != prof.end();
}

bool member_SL(const Partition& p) {
    if (p.weight() < 2) return false;
    auto cls = classes_of(p);
    for (const auto& e : cls.entries) {
        if (e.count % 2 == 0) return false;
    }
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!is_power_of_two(parts[i])) return false;
    }
    part_t odd = parts[0] >> val2(parts[0]);
    if (odd != 1 && odd != 3) return false;
    return val2(parts[0]) == cls.top_val;
}

bool member_SB(const Partition& p) {
    if (p.empty()) return false;
    Partition rest(std::vector<part_t>(p.parts().begin() + 1, p.parts().end()));
    return contains(bin_expand_int(p.largest() - 1), rest);
}

bool member_constrained(FamilyId fid, const Partition& p) {
    if (p.empty()) return empty_allowed(fid);
    if (!is_binary(p)) return false;
    bool largest = true;
    for (part_t v : p.distinct_parts()) {
        if (!mult_allowed(fid, p.multiplicity(v), largest)) return false;
        largest = false;
    }
    if (fid == FamilyId::OB_2)
        return p.length() >= 2 && p.parts()[0] == 2 * p.parts()[1];
    return true;
}

// ---- caches --------------------------------------------------------------

std::recursive_mutex cache_mutex;
std::map<std::pair<FamilyId, std::uint64_t>, std::unique_ptr<const PartitionList>> part_cache;
std::map<std::pair<FamilyId, std::uint64_t>, std::unique_ptr<const OverpartitionList>> over_cache;

const PartitionList& build_locked(FamilyId fid, std::uint64_t n);

const PartitionList& at(FamilyId fid, std::uint64_t k) {
    return *part_cache.at({fid, k});
}

PartitionList recursive_step(FamilyId fid, std::uint64_t k) {
    const bool even = (k % 2 == 0);
    switch (fid) {
        case FamilyId::SF:
            if (k == 0) return {Partition{}};
            if (k == 1) return {make({1})};
            if (k == 2) return {make({2})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({with_extra(at(fid, k - 1), make({1})), bumped_odd(at(fid, k - 2))});
        case FamilyId::ST:
            if (k == 0) return {};
            if (k == 1) return {make({1})};
            if (k == 3) return {make({3}), make({2, 1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({with_extra(at(fid, k - 1), make({1})), bumped_odd(at(fid, k - 2)),
                           with_extra(at(fid, k - 3), make({1, 1, 1}))});
        case FamilyId::SPa:
            if (k == 0) return {Partition{}};
            if (k == 1) return {};
            if (k == 3) return {make({3})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({bumped_odd(at(fid, k - 2)),
                           with_extra(at(fid, k - 3), make({1, 1, 1}))});
        case FamilyId::SPa_prime:
            if (k == 0) return {};
            if (k == 1) return {make({1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({bumped_odd(at(fid, k - 2)),
                           with_extra(at(fid, k - 3), make({1, 1, 1}))});
        case FamilyId::SP:
            if (k == 0) return {};
            if (k == 1) return {make({1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({map_members(at(fid, k - 1), increment_largest),
                           with_extra(at(fid, k - 1), make({1})),
                           with_extra(at(fid, k - 2), make({1, 1}))});
        case FamilyId::SNc:
            if (k == 0) return {Partition{}};
            if (k == 1) return {make({1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({with_extra(at(fid, k - 1), make({1})),
                           with_extra(at(fid, k - 3), make({3}))});
        case FamilyId::DSF:
            if (k <= 2) return {};
            if (k == 3) return {make({2, 1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({with_extra(at(fid, k - 1), make({1})), bumped_odd(at(fid, k - 2))});
        case FamilyId::SL:
            if (k == 2) return {make({2})};
            if (k == 3) return {make({3}), make({2, 1}), make({1, 1, 1})};
            if (even) return scaled2(at(fid, k / 2));
            return joined({with_extra(at(fid, k - 1), make({1})),
                           with_extra(at(fid, k - 2), make({1, 1}))});
        case FamilyId::SB: {
            if (k == 0) return {};
            if (k == 1) return {make({1})};
            if (even) return scaled2(at(fid, k / 2));
            std::uint64_t m = (k - 1) / 2;
            return joined({with_extra(scaled2(at(fid, m)), make({1})),
                           map_members(scaled2(at(fid, m + 1)), lower_first)});
        }
        case FamilyId::HB_prime: {
            if (k == 0) return {Partition{}};
            if (k == 1) return {make({1})};
            if (k == 2) return {make({2}), make({1, 1})};
            if (even) {
                std::uint64_t m = k / 2;
                return joined({scaled2(at(fid, m)),
                               with_extra(scaled2(at(fid, m - 1)), make({1, 1}))});
            }
            return with_extra(scaled2(at(fid, (k - 1) / 2)), make({1}));
        }
        default:
            throw std::logic_error("not a recursive family");
    }
}

PartitionList filtered_step(FamilyId fid, std::uint64_t n) {
    switch (fid) {
        case FamilyId::SF_prime: {
            PartitionList out;
            for (const Partition& p : build_locked(FamilyId::SF, n)) {
                bool clean = std::none_of(p.parts().begin(), p.parts().end(),
                                          [](part_t x) { return is_power_of_two(x); });
                if (clean) out.push_back(p);
            }
            return out;
        }
        case FamilyId::SL_3div:
        case FamilyId::SL_3ndiv: {
            PartitionList out;
            bool want_div = (fid == FamilyId::SL_3div);
            for (const Partition& p : build_locked(FamilyId::SL, n)) {
                if ((p.largest() % 3 == 0) == want_div) out.push_back(p);
            }
            return out;
        }
        default:
            throw std::logic_error("not a filtered family");
    }
}

const PartitionList& build_locked(FamilyId fid, std::uint64_t n) {
    auto key = std::make_pair(fid, n);
    if (auto it = part_cache.find(key); it != part_cache.end()) return *it->second;
    const auto& fi = info(fid);
    PartitionList result;
    switch (fi.kind) {
        case Kind::recursive:
            for (std::uint64_t k = fi.min_weight; k <= n; ++k) {
                if (!part_cache.contains({fid, k}))
                    part_cache[{fid, k}] =
                        std::make_unique<const PartitionList>(recursive_step(fid, k));
            }
            return *part_cache.at(key);
        case Kind::filtered:
            result = filtered_step(fid, n);
            break;
        case Kind::constrained:
            result = enumerate_constrained(fid, n);
            break;
        case Kind::over:
            throw std::domain_error("overpartition family: use build_over_family");
    }
    auto [it, ok] = part_cache.emplace(key, std::make_unique<const PartitionList>(std::move(result)));
    return *it->second;
}

OverpartitionList over_step(FamilyId fid, std::uint64_t n) {
    OverpartitionList out;
    if (fid == FamilyId::OBbar_star && n == 1) {
        Partition one = make({1});
        out.emplace_back(one, std::vector<part_t>{});
        out.emplace_back(one, std::vector<part_t>{1});
        return out;
    }
    for (const Partition& base : build_locked(FamilyId::OB, n)) {
        if (base.empty()) continue;
        part_t top = base.largest();
        switch (fid) {
            case FamilyId::OBbar_dag: {
                std::vector<part_t> eligible;
                for (part_t v : base.distinct_parts()) {
                    if (v != top && base.multiplicity(v) >= 3) eligible.push_back(v);
                }
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << eligible.size());
                     ++mask) {
                    std::vector<part_t> over;
                    for (std::size_t i = 0; i < eligible.size(); ++i) {
                        if (mask & (std::uint64_t{1} << i)) over.push_back(eligible[i]);
                    }
                    out.emplace_back(base, std::move(over));
                }
                break;
            }
            case FamilyId::OBbar_prime: {
                std::vector<part_t> rest;
                for (part_t v : base.distinct_parts()) {
                    if (v != top) rest.push_back(v);
                }
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size());
                     ++mask) {
                    std::vector<part_t> over{top};
                    for (std::size_t i = 0; i < rest.size(); ++i) {
                        if (mask & (std::uint64_t{1} << i)) over.push_back(rest[i]);
                    }
                    out.emplace_back(base, std::move(over));
                }
                break;
            }
            case FamilyId::OBbar_star: {
                out.emplace_back(base, std::vector<part_t>{});
                if (base.multiplicity(top) >= 3)
                    out.emplace_back(base, std::vector<part_t>{top});
                break;
            }
            default:
                throw std::logic_error("not an overpartition family");
        }
    }
    canonicalize(out);
    return out;
}

const OverpartitionList& build_over_locked(FamilyId fid, std::uint64_t n) {
    auto key = std::make_pair(fid, n);
    if (auto it = over_cache.find(key); it != over_cache.end()) return *it->second;
    auto [it, ok] =
        over_cache.emplace(key, std::make_unique<const OverpartitionList>(over_step(fid, n)));
    return *it->second;
}

}  // namespace

std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    for (const auto& f : kFamilies) out.push_back(f.id);
    return out;
}

const char* family_name(FamilyId fid) { return info(fid).name; }

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (const auto& f : kFamilies) {
        if (name == f.name) return f.id;
    }
    return std::nullopt;
}

bool is_overpartition_family(FamilyId fid) { return info(fid).kind == Kind::over; }

bool is_constrained_binary_family(FamilyId fid) {
    return info(fid).kind == Kind::constrained;
}

std::uint64_t family_min_weight(FamilyId fid) { return info(fid).min_weight; }

std::optional<SequenceId> paired_sequence(FamilyId fid) {
    switch (fid) {
        case FamilyId::SF: return SequenceId::sf;
        case FamilyId::SF_prime: return SequenceId::spa;
        case FamilyId::ST: return SequenceId::st;
        case FamilyId::SPa: return SequenceId::spa;
        case FamilyId::SPa_prime: return SequenceId::spa_mod;
        case FamilyId::SP: return SequenceId::sp;
        case FamilyId::SNc: return SequenceId::snc;
        case FamilyId::DSF: return SequenceId::dsf;
        case FamilyId::SL: return SequenceId::sl;
        case FamilyId::SL_3div: return SequenceId::dsf;
        case FamilyId::SL_3ndiv: return SequenceId::sf;
        case FamilyId::SB: return SequenceId::sb;
        case FamilyId::HB: return SequenceId::sb;
        case FamilyId::HB_prime: return SequenceId::sb;
        case FamilyId::B: return std::nullopt;
        case FamilyId::OB: return SequenceId::sf;
        case FamilyId::OB_1: return SequenceId::dsf;
        case FamilyId::OB_2: return SequenceId::dsf;
        case FamilyId::OB_R: return SequenceId::spa;
        case FamilyId::OB_Rp: return SequenceId::spa_mod;
        case FamilyId::OB_13: return SequenceId::snc;
        case FamilyId::OBbar_prime: return SequenceId::sp;
        case FamilyId::OBbar_star: return SequenceId::sl;
        case FamilyId::OBbar_dag: return SequenceId::st;
    }
    return std::nullopt;
}

std::uint64_t paired_index(FamilyId fid, std::uint64_t n) {
    if (fid == FamilyId::HB || fid == FamilyId::HB_prime) return n + 1;
    return n;
}

std::optional<SequenceId> paired_total_parts(FamilyId fid) {
    switch (fid) {
        case FamilyId::SF: return SequenceId::psf;
        case FamilyId::ST: return SequenceId::pst;
        case FamilyId::SPa: return SequenceId::pspa;
        case FamilyId::SPa_prime: return SequenceId::pspa_mod;
        case FamilyId::SP: return SequenceId::psp;
        case FamilyId::SNc: return SequenceId::psnc;
        case FamilyId::DSF: return SequenceId::pdsf;
        case FamilyId::SL: return SequenceId::psl;
        case FamilyId::SB: return SequenceId::psb;
        case FamilyId::HB: return SequenceId::phb;
        case FamilyId::HB_prime: return SequenceId::phb;
        default: return std::nullopt;
    }
}

const PartitionList& build_family(FamilyId fid, std::uint64_t n) {
    const auto& fi = info(fid);
    if (fi.kind == Kind::over)
        throw std::domain_error("overpartition family: use build_over_family");
    if (n < fi.min_weight)
        throw std::domain_error(std::string(fi.name) + " is not defined at weight " +
                                std::to_string(n));
    std::lock_guard lock(cache_mutex);
    return build_locked(fid, n);
}

const OverpartitionList& build_over_family(FamilyId fid, std::uint64_t n) {
    const auto& fi = info(fid);
    if (fi.kind != Kind::over)
        throw std::domain_error(std::string(fi.name) + " is not an overpartition family");
    if (n < fi.min_weight)
        throw std::domain_error(std::string(fi.name) + " is not defined at weight " +
                                std::to_string(n));
    std::lock_guard lock(cache_mutex);
    return build_over_locked(fid, n);
}

PartitionList enumerate_constrained_binary(FamilyId fid, std::uint64_t n) {
    if (!is_constrained_binary_family(fid))
        throw std::domain_error("not a constrained binary family");
    return enumerate_constrained(fid, n);
}

bool is_member(FamilyId fid, const Partition& p) {
    switch (fid) {
        case FamilyId::SF:
            return distinct_valuations(p);
        case FamilyId::SF_prime:
            return distinct_valuations(p) &&
                   std::none_of(p.parts().begin(), p.parts().end(),
                                [](part_t x) { return is_power_of_two(x); });
        case FamilyId::ST: return member_ST(p);
        case FamilyId::SPa: return member_SPa(p);
        case FamilyId::SPa_prime: return member_SPa_prime(p);
        case FamilyId::SP: return member_SP(p);
        case FamilyId::SNc: return member_SNc(p);
        case FamilyId::DSF: return member_DSF(p);
        case FamilyId::SL: return member_SL(p);
        case FamilyId::SL_3div: return member_SL(p) && p.largest() % 3 == 0;
        case FamilyId::SL_3ndiv: return member_SL(p) && p.largest() % 3 != 0;
        case FamilyId::SB: return member_SB(p);
        case FamilyId::HB_prime: return member_constrained(FamilyId::HB, p);
        case FamilyId::HB:
        case FamilyId::B:
        case FamilyId::OB:
        case FamilyId::OB_1:
        case FamilyId::OB_2:
        case FamilyId::OB_R:
        case FamilyId::OB_Rp:
        case FamilyId::OB_13:
            return member_constrained(fid, p);
        default:
            throw std::domain_error("overpartition family: use is_over_member");
    }
}

bool is_over_member(FamilyId fid, const Overpartition& p) {
    const Partition& base = p.base();
    if (!is_member(FamilyId::OB, base)) return false;
    switch (fid) {
        case FamilyId::OBbar_dag: {
            if (base.empty()) return false;
            part_t top = base.largest();
            for (part_t v : p.overlined()) {
                if (v == top || base.multiplicity(v) < 3) return false;
            }
            return true;
        }
        case FamilyId::OBbar_prime:
            return !base.empty() && p.is_overlined(base.largest());
        case FamilyId::OBbar_star: {
            if (base.empty()) return false;
            if (base.weight() == 1) return true;  // both (1) and (1 overlined)
            part_t top = base.largest();
            for (part_t v : p.overlined()) {
                if (v != top) return false;
            }
            return p.overlined().empty() || base.multiplicity(top) >= 3;
        }
        default:
            throw std::domain_error("not an overpartition family");
    }
}

mpz_class total_parts(FamilyId fid, std::uint64_t n) {
    mpz_class total = 0;
    if (is_overpartition_family(fid)) {
        for (const Overpartition& p : build_over_family(fid, n))
            total += static_cast<unsigned long>(p.base().length());
    } else {
        for (const Partition& p : build_family(fid, n))
            total += static_cast<unsigned long>(p.length());
    }
    return total;
}

}  // namespace semipart
