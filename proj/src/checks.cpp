#include "semipart/checks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "semipart/bijections.hpp"
#include "semipart/series.hpp"

namespace semipart {

namespace {

ModOverride g_override;

std::uint64_t ev(SequenceId id, std::uint64_t n, std::uint64_t m) {
    if (g_override) {
        if (auto v = g_override(id, n, m)) return *v;
    }
    return seq_value_mod(id, n, m);
}

using S = SequenceId;

bool holds_st_odd(std::uint64_t n) {
    return (ev(S::st, 2 * n + 1, 2) + ev(S::st, 4 * n + 1, 2)) % 2 == 0;
}
bool holds_st_16(std::uint64_t n) {
    auto a = ev(S::st, 16 * n + 7, 2);
    return a == ev(S::st, 16 * n + 8, 2) && a == ev(S::st, 16 * n + 4, 2);
}
bool holds_pst_4(std::uint64_t n) {
    return ev(S::pst, 4 * n + 1, 2) == ev(S::pst, 4 * n + 2, 2);
}
bool holds_spa_mod7(std::uint64_t n) {
    std::uint64_t r = n % 7;
    return (ev(S::spa, n, 2) == 0) == (r == 1 || r == 2 || r == 4);
}
bool holds_spa_3sum(std::uint64_t n) {
    return (ev(S::spa, 2 * n + 1, 2) + ev(S::spa, 4 * n + 1, 2) +
            ev(S::spa, 8 * n + 1, 2)) % 2 == 0;
}
bool holds_spa_4sum(std::uint64_t n) {
    return (ev(S::spa, 4 * n + 1, 2) + ev(S::spa, 4 * n + 2, 2) +
            ev(S::spa, 4 * n + 3, 2) + ev(S::spa, 4 * n + 6, 2)) % 2 == 0;
}
bool holds_spa_8n7(std::uint64_t n) {
    return ev(S::spa, 8 * n + 7, 2) == ev(S::spa, n, 2);
}
bool holds_spap_3sum(std::uint64_t n) {
    return (ev(S::spa_mod, 2 * n + 1, 2) + ev(S::spa_mod, 4 * n + 1, 2) +
            ev(S::spa_mod, 8 * n + 1, 2)) % 2 == 1;
}
bool holds_spap_8n7(std::uint64_t n) {
    return ev(S::spa_mod, 8 * n + 7, 2) == (ev(S::spa_mod, n, 2) + 1) % 2;
}
bool holds_spap_chain(std::uint64_t n) {
    std::uint64_t target = ev(S::spa_mod, 4 * n + 9, 2);
    constexpr std::pair<unsigned, unsigned> pairs[] = {
        {1, 4}, {5, 10}, {6, 7}, {8, 11}, {12, 17}, {13, 14}, {15, 18}};
    for (auto [a, b] : pairs) {
        if ((ev(S::spa_mod, 4 * n + a, 2) + ev(S::spa_mod, 4 * n + b, 2)) % 2 != target)
            return false;
    }
    return true;
}
bool holds_spap_3term(std::uint64_t n) {
    return (ev(S::spa_mod, 2 * n, 2) + ev(S::spa_mod, 2 * n + 1, 2) +
            ev(S::spa_mod, 2 * n + 3, 2)) % 2 == 0;
}
bool holds_pspa_4sum(std::uint64_t n) {
    return (ev(S::pspa, 4 * n + 1, 2) + ev(S::pspa, 4 * n + 2, 2) +
            ev(S::pspa, 4 * n + 3, 2) + ev(S::pspa, 4 * n + 6, 2)) % 2 == 0;
}
bool holds_pspap_4sum(std::uint64_t n) {
    return (ev(S::pspa_mod, 4 * n + 1, 2) + ev(S::pspa_mod, 4 * n + 2, 2) +
            ev(S::pspa_mod, 4 * n + 3, 2) + ev(S::pspa_mod, 4 * n + 6, 2)) % 2 == 0;
}
bool holds_pspa_8(std::uint64_t n) {
    return ev(S::pspa, 8 * n + 2, 2) == ev(S::pspa, 8 * n - 5, 2) &&
           ev(S::pspa_mod, 8 * n + 2, 2) == ev(S::pspa_mod, 8 * n - 5, 2);
}
bool holds_pspa_r_mod7(std::uint64_t n) {
    std::uint64_t r = n % 7;
    std::uint64_t sum = (ev(S::pspa, 2 * n + 1, 2) + ev(S::pspa, 4 * n + 1, 2) +
                         ev(S::pspa, 8 * n + 1, 2)) % 2;
    return (sum == 0) == (r == 0 || r == 4 || r == 5);
}
bool holds_pspap_rsum(std::uint64_t n) {
    std::uint64_t sum = (ev(S::pspa_mod, 2 * n + 1, 2) + ev(S::pspa_mod, 4 * n + 1, 2) +
                         ev(S::pspa_mod, 8 * n + 1, 2)) % 2;
    return sum == ev(S::spa_mod, 2 * n + 1, 2);
}
bool holds_mod3_link(std::uint64_t n) {
    std::uint64_t lhs = (ev(S::pspa_mod, n, 3) + 3 - ev(S::pspa, n, 3)) % 3;
    std::uint64_t rhs = (ev(S::spa_mod, n, 3) + 3 - ev(S::spa, n, 3)) % 3;
    return lhs == rhs;
}
bool holds_sp_odd(std::uint64_t n) { return ev(S::sp, n, 2) == 1; }
bool holds_sp_z(std::uint64_t n) {
    // (sp(n)-1)/2 mod 2 from sp(n) mod 4, using that sp(n) is odd
    std::uint64_t half = (ev(S::sp, n, 4) - 1) / 2;
    return half % 2 == ev(S::z, n - 1, 2);
}
bool holds_psp_parity(std::uint64_t n) {
    return (ev(S::psp, 2 * n + 1, 2) == 1) == (n % 2 == 0);
}
bool holds_psp_z(std::uint64_t n) {
    return ev(S::psp, n, 2) == (ev(S::z, n - 1, 2) + 1) % 2;
}
bool holds_snc_mod7(std::uint64_t n) {
    std::uint64_t r = n % 7;
    return (ev(S::snc, n, 2) == 0) == (r == 3 || r == 5 || r == 6);
}
bool holds_psnc_5sum(std::uint64_t n) {
    return (ev(S::psnc, 2 * n + 1, 2) + ev(S::psnc, 2 * n + 5, 2) +
            ev(S::psnc, 4 * n + 1, 2) + ev(S::psnc, 4 * n + 9, 2) +
            ev(S::psnc, 8 * n + 1, 2)) % 2 == 0;
}
bool holds_dsf_43(std::uint64_t n) {
    return ev(S::dsf, 4 * n - 3, 2) == ev(S::dsf, 4 * n + 3, 2);
}
bool holds_dsf_2sum(std::uint64_t n) {
    return (ev(S::dsf, 2 * n + 1, 2) + ev(S::dsf, 8 * n + 1, 2)) % 2 == 1;
}
bool holds_sl_sum(std::uint64_t n) {
    return seq_value(S::sl, n) == seq_value(S::sf, n) + seq_value(S::dsf, n);
}
bool holds_sl_43(std::uint64_t n) {
    return ev(S::sl, 4 * n - 3, 2) == ev(S::sl, 4 * n + 3, 2);
}
bool holds_sl_4(std::uint64_t n) {
    return (ev(S::sl, 4 * n + 1, 2) + ev(S::sl, 4 * n + 3, 2)) % 2 ==
           (ev(S::sl, 4 * n + 4, 2) + ev(S::sl, 4 * n + 6, 2)) % 2;
}
bool holds_psf_8(std::uint64_t n) {
    return ev(S::psf, 8 * n + 2, 2) == ev(S::psf, 8 * n + 5, 2);
}
bool holds_p_16sums(std::uint64_t n) {
    auto sum4 = [&](SequenceId id) {
        return (ev(id, 2 * n + 1, 2) + ev(id, 4 * n + 1, 2) + ev(id, 8 * n + 1, 2) +
                ev(id, 16 * n + 1, 2)) % 2;
    };
    if (sum4(S::psf) != 0) return false;
    if (n >= 1 && sum4(S::pdsf) != 1) return false;
    if (n >= 2 && sum4(S::psl) != 1) return false;
    return true;
}
bool holds_pdsf_16(std::uint64_t n) {
    if (ev(S::pdsf, 16 * n + 3, 2) != ev(S::pdsf, 16 * n + 12, 2)) return false;
    if (n >= 1 && ev(S::pdsf, 16 * n + 4, 2) != ev(S::pdsf, 16 * n + 13, 2)) return false;
    return true;
}
bool holds_sb_mod3(std::uint64_t n) {
    return (ev(S::sb, n, 2) == 0) == (n % 3 == 0);
}
bool holds_sb_4n1(std::uint64_t n) {
    return ev(S::sb, 4 * n + 1, 2) == ev(S::sb, n + 1, 2);
}
bool holds_psb_4n1(std::uint64_t n) {
    return ev(S::psb, 4 * n + 1, 2) == ev(S::psb, n + 1, 2);
}
bool holds_phb_3sum(std::uint64_t n) {
    return (ev(S::phb, 2 * n - 1, 2) + ev(S::phb, 2 * n + 1, 2) +
            ev(S::phb, 4 * n + 1, 2)) % 2 == 0;
}
bool holds_sf_mod3(std::uint64_t n) {
    return (ev(S::sf, n, 2) == 0) == (n % 3 == 0);
}

struct CheckDef {
    const char* tag;
    const char* statement;
    std::uint64_t min_n;
    unsigned modulus;
    bool (*holds)(std::uint64_t n);
};

const CheckDef kChecks[] = {
    {"st_odd", "st(2n+1) + st(4n+1) even", 0, 2, holds_st_odd},
    {"st_16", "st(16n+7), st(16n+8), st(16n+4) share parity", 0, 2, holds_st_16},
    {"pst_4", "pst(4n+1) and pst(4n+2) share parity", 0, 2, holds_pst_4},
    {"spa_mod7", "spa(n) even iff n = 1, 2, 4 mod 7", 0, 2, holds_spa_mod7},
    {"spa_3sum", "spa(2n+1) + spa(4n+1) + spa(8n+1) even", 0, 2, holds_spa_3sum},
    {"spa_4sum", "spa(4n+1) + spa(4n+2) + spa(4n+3) + spa(4n+6) even", 0, 2,
     holds_spa_4sum},
    {"spa_8n7", "spa(8n+7) and spa(n) share parity", 0, 2, holds_spa_8n7},
    {"spap_3sum", "spa'(2n+1) + spa'(4n+1) + spa'(8n+1) odd", 0, 2, holds_spap_3sum},
    {"spap_8n7", "spa'(8n+7) and spa'(n) + 1 share parity", 0, 2, holds_spap_8n7},
    {"spap_chain", "the seven pair sums spa'(4n+a) + spa'(4n+b) all match spa'(4n+9)",
     0, 2, holds_spap_chain},
    {"spap_3term", "spa'(2n) + spa'(2n+1) + spa'(2n+3) even", 0, 2, holds_spap_3term},
    {"pspa_4sum", "pspa(4n+1) + pspa(4n+2) + pspa(4n+3) + pspa(4n+6) even", 0, 2,
     holds_pspa_4sum},
    {"pspap_4sum", "pspa'(4n+1) + pspa'(4n+2) + pspa'(4n+3) + pspa'(4n+6) even", 0, 2,
     holds_pspap_4sum},
    {"pspa_8", "pspa(8n+2) = pspa(8n-5) and pspa'(8n+2) = pspa'(8n-5) mod 2", 1, 2,
     holds_pspa_8},
    {"pspa_r_mod7",
     "pspa(2n+1) + pspa(4n+1) + pspa(8n+1) even iff n = 0, 4, 5 mod 7", 0, 2,
     holds_pspa_r_mod7},
    {"pspap_rsum",
     "pspa'(2n+1) + pspa'(4n+1) + pspa'(8n+1) and spa'(2n+1) share parity", 0, 2,
     holds_pspap_rsum},
    {"mod3_link", "pspa'(n) - pspa(n) = spa'(n) - spa(n) mod 3", 1, 3, holds_mod3_link},
    {"sp_odd", "sp(n) odd", 1, 2, holds_sp_odd},
    {"sp_z", "(sp(n)-1)/2 = z(n-1) mod 2", 1, 4, holds_sp_z},
    {"psp_parity", "psp(2n+1) odd iff n even (modulus 2 interpreted)", 0, 2,
     holds_psp_parity},
    {"psp_z", "psp(n) = z(n-1) + 1 mod 2", 1, 2, holds_psp_z},
    {"snc_mod7", "snc(n) even iff n = 3, 5, 6 mod 7", 1, 2, holds_snc_mod7},
    {"psnc_5sum",
     "psnc(2n+1) + psnc(2n+5) + psnc(4n+1) + psnc(4n+9) + psnc(8n+1) even", 0, 2,
     holds_psnc_5sum},
    {"dsf_43", "dsf(4n-3) and dsf(4n+3) share parity", 1, 2, holds_dsf_43},
    {"dsf_2sum", "dsf(2n+1) + dsf(8n+1) odd", 1, 2, holds_dsf_2sum},
    {"sl_sum", "sl(n) = sf(n) + dsf(n) exactly", 2, 0, holds_sl_sum},
    {"sl_43", "sl(4n-3) and sl(4n+3) share parity", 2, 2, holds_sl_43},
    {"sl_4", "sl(4n+1) + sl(4n+3) and sl(4n+4) + sl(4n+6) share parity", 1, 2,
     holds_sl_4},
    {"psf_8", "psf(8n+2) and psf(8n+5) share parity", 0, 2, holds_psf_8},
    {"p_16sums",
     "16n+1 four-term sums: psf even (n>=0), pdsf odd (n>=1), psl odd (n>=2)", 0, 2,
     holds_p_16sums},
    {"pdsf_16", "pdsf(16n+3) = pdsf(16n+12), pdsf(16n+4) = pdsf(16n+13) mod 2 (n>=1)",
     0, 2, holds_pdsf_16},
    {"sb_mod3", "sb(n) even iff n = 0 mod 3", 0, 2, holds_sb_mod3},
    {"sb_4n1", "sb(4n+1) and sb(n+1) share parity", 0, 2, holds_sb_4n1},
    {"psb_4n1", "psb(4n+1) and psb(n+1) share parity", 0, 2, holds_psb_4n1},
    {"phb_3sum", "phb(2n-1) + phb(2n+1) + phb(4n+1) even", 1, 2, holds_phb_3sum},
    {"sf_mod3", "sf(n) even iff n = 0 mod 3", 1, 2, holds_sf_mod3},
};

const CheckDef* find_def(std::string_view tag) {
    for (const auto& c : kChecks) {
        if (tag == c.tag) return &c;
    }
    return nullptr;
}

void enumerate_partitions(std::uint64_t remaining, part_t maxp, std::vector<part_t>& acc,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (part_t p = std::min<std::uint64_t>(remaining, maxp); p >= 1; --p) {
        acc.push_back(p);
        enumerate_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

void set_mod_override(ModOverride fn) { g_override = std::move(fn); }

const std::vector<Check>& check_registry() {
    static const std::vector<Check> registry = [] {
        std::vector<Check> out;
        for (const auto& c : kChecks)
            out.push_back({c.tag, c.statement, c.min_n, c.modulus});
        return out;
    }();
    return registry;
}

std::optional<Check> find_check(std::string_view tag) {
    const CheckDef* def = find_def(tag);
    if (!def) return std::nullopt;
    return Check{def->tag, def->statement, def->min_n, def->modulus};
}

CheckReport run_check(std::string_view tag, std::uint64_t n_max) {
    const CheckDef* def = find_def(tag);
    if (!def) throw std::invalid_argument("unknown check: " + std::string(tag));
    CheckReport report;
    report.check = def->tag;
    report.n_max = n_max;
    for (std::uint64_t n = def->min_n; n <= n_max; ++n) {
        if (!def->holds(n))
            report.fail(n, std::string(def->statement) + " fails at n=" + std::to_string(n));
    }
    return report;
}

std::vector<Partition> all_partitions_of(std::uint64_t n) {
    std::vector<Partition> out;
    std::vector<part_t> acc;
    enumerate_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

PartitionList oracle_family(FamilyId fid, std::uint64_t n, std::uint64_t bound) {
    if (n > bound) throw std::invalid_argument("oracle bound exceeded");
    if (is_overpartition_family(fid))
        throw std::invalid_argument("overpartition family: use oracle_over_family");
    PartitionList out;
    for (const Partition& p : all_partitions_of(n)) {
        if (is_member(fid, p)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return canonical_before(a, b); });
    return out;
}

OverpartitionList oracle_over_family(FamilyId fid, std::uint64_t n, std::uint64_t bound) {
    if (n > bound) throw std::invalid_argument("oracle bound exceeded");
    if (!is_overpartition_family(fid))
        throw std::invalid_argument("not an overpartition family");
    OverpartitionList out;
    for (const Partition& p : all_partitions_of(n)) {
        if (!is_member(FamilyId::OB, p)) continue;
        std::vector<part_t> values = p.distinct_parts();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << values.size()); ++mask) {
            std::vector<part_t> over;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (mask & (std::uint64_t{1} << i)) over.push_back(values[i]);
            }
            Overpartition cand(p, std::move(over));
            if (is_over_member(fid, cand)) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end(), [](const Overpartition& a, const Overpartition& b) {
        return canonical_before(a, b);
    });
    return out;
}

namespace {

void check_counts(std::uint64_t hi, std::vector<CheckReport>& out) {
    CheckReport counts;
    counts.check = "count_law";
    counts.n_max = hi;
    CheckReport parts;
    parts.check = "total_parts_law";
    parts.n_max = hi;
    for (FamilyId fid : all_families()) {
        auto seq = paired_sequence(fid);
        if (!seq) continue;
        for (std::uint64_t n = family_min_weight(fid); n <= hi; ++n) {
            std::size_t size = is_overpartition_family(fid)
                                   ? build_over_family(fid, n).size()
                                   : build_family(fid, n).size();
            if (mpz_class(static_cast<unsigned long>(size)) !=
                seq_value(*seq, paired_index(fid, n)))
                counts.fail(n, std::string(family_name(fid)) + " count mismatch at n=" +
                                   std::to_string(n));
            if (auto tp = paired_total_parts(fid)) {
                if (total_parts(fid, n) != seq_value(*tp, paired_index(fid, n)))
                    parts.fail(n, std::string(family_name(fid)) +
                                      " total-parts mismatch at n=" + std::to_string(n));
            }
        }
    }
    out.push_back(std::move(counts));
    out.push_back(std::move(parts));
}

bool subset_of(const PartitionList& a, const PartitionList& b) {
    std::set<Partition, bool (*)(const Partition&, const Partition&)> set_b(canonical_before);
    for (const auto& p : b) set_b.insert(p);
    return std::all_of(a.begin(), a.end(),
                       [&](const Partition& p) { return set_b.contains(p); });
}

void check_containments(std::uint64_t hi, std::vector<CheckReport>& out) {
    CheckReport report;
    report.check = "containments";
    report.n_max = hi;
    for (std::uint64_t n = 1; n <= hi; ++n) {
        if (!subset_of(build_family(FamilyId::SPa, n), build_family(FamilyId::SPa_prime, n)))
            report.fail(n, "SPa not inside SPa'");
        if (!subset_of(build_family(FamilyId::SPa_prime, n), build_family(FamilyId::ST, n)))
            report.fail(n, "SPa' not inside ST");
        if (!subset_of(build_family(FamilyId::SNc, n), build_family(FamilyId::SF, n)))
            report.fail(n, "SNc not inside SF");
        if (!subset_of(build_family(FamilyId::DSF, n), build_family(FamilyId::SF, n)))
            report.fail(n, "DSF not inside SF");
        if (!subset_of(build_family(FamilyId::SB, n), build_family(FamilyId::SF, n)))
            report.fail(n, "SB not inside SF");
        if (!subset_of(build_family(FamilyId::OB_R, n), build_family(FamilyId::OB_Rp, n)))
            report.fail(n, "OB_R not inside OB_Rp");
        if (build_family(FamilyId::HB_prime, n) != build_family(FamilyId::HB, n))
            report.fail(n, "HB' differs from HB");
        if (n >= 2 &&
            build_family(FamilyId::SL_3ndiv, n) != build_family(FamilyId::OB, n))
            report.fail(n, "SL (largest part prime to 3) differs from OB");
        // non-overlined members of OBbar_dag are exactly OB
        PartitionList plain;
        for (const Overpartition& op : build_over_family(FamilyId::OBbar_dag, n)) {
            if (op.overlined().empty()) plain.push_back(op.base());
        }
        if (plain != build_family(FamilyId::OB, n))
            report.fail(n, "overline-free OBbar_dag members differ from OB");
    }
    out.push_back(std::move(report));
}

void check_st_parity_structure(std::uint64_t hi, std::vector<CheckReport>& out) {
    CheckReport report;
    report.check = "st_parity_structure";
    report.n_max = hi;
    for (std::uint64_t n = 1; n <= hi; n += 2) {
        for (const Partition& p : build_family(FamilyId::ST, n)) {
            std::size_t odd = 0;
            for (part_t x : p.parts()) odd += (x % 2 == 1);
            if (odd != 1 && odd != 3) {
                report.fail(n, "ST member without exactly 1 or 3 odd parts");
            } else if (odd == 3 && p.multiplicity(1) < 2) {
                report.fail(n, "ST member with 3 odd parts but fewer than two 1s");
            }
        }
    }
    out.push_back(std::move(report));
}

void check_oracle(std::uint64_t bound, std::vector<CheckReport>& out) {
    CheckReport report;
    report.check = "oracle_equivalence";
    report.n_max = bound;
    for (FamilyId fid : all_families()) {
        for (std::uint64_t n = family_min_weight(fid); n <= bound; ++n) {
            bool same = is_overpartition_family(fid)
                            ? oracle_over_family(fid, n, bound) == build_over_family(fid, n)
                            : oracle_family(fid, n, bound) == build_family(fid, n);
            if (!same)
                report.fail(n, std::string(family_name(fid)) +
                                   " oracle mismatch at n=" + std::to_string(n));
        }
    }
    out.push_back(std::move(report));
}

}  // namespace

std::vector<CheckReport> run_all(std::uint64_t n_max, std::uint64_t oracle_bound) {
    std::vector<CheckReport> out;
    for (const auto& c : kChecks) out.push_back(run_check(c.tag, n_max));
    std::uint64_t family_hi = std::min<std::uint64_t>(n_max, 200);
    check_counts(family_hi, out);
    check_containments(family_hi, out);
    check_st_parity_structure(family_hi, out);
    check_oracle(oracle_bound, out);
    std::uint64_t bij_hi = std::min<std::uint64_t>(n_max, 100);
    for (BijectionId bij : all_bijections())
        out.push_back(verify_bijection_range(bij, 0, bij_hi));
    std::size_t series_order = std::min<std::uint64_t>(n_max, 512);
    for (SequenceId id : {S::sf, S::st, S::spa, S::spa_mod, S::sp, S::snc, S::dsf,
                          S::sl, S::sb})
        out.push_back(compare_series_to_sequence(id, series_order));
    return out;
}

}  // namespace semipart
