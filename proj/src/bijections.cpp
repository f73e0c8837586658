#include "semipart/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace semipart {

namespace {

struct BijectionInfo {
    BijectionId id;
    const char* name;
    FamilyId source;
    std::optional<FamilyId> target;
};

const BijectionInfo kBijections[] = {
    {BijectionId::h_st, "h_st", FamilyId::OBbar_dag, FamilyId::ST},
    {BijectionId::phi_spa, "phi_spa", FamilyId::SF_prime, FamilyId::SPa},
    {BijectionId::psi_spa_prime, "psi_spa_prime", FamilyId::SPa_prime, FamilyId::OB_Rp},
    {BijectionId::xi_sp, "xi_sp", FamilyId::SP, FamilyId::OBbar_prime},
    {BijectionId::xi_split, "xi_split", FamilyId::OB_2, FamilyId::OB_1},
    {BijectionId::f_merge_sl, "f_merge_sl", FamilyId::OB_2, FamilyId::SL_3div},
    {BijectionId::theta_sb, "theta_sb", FamilyId::SB, FamilyId::HB},
    {BijectionId::rep2_sf, "rep2_sf", FamilyId::SF, FamilyId::OB},
    {BijectionId::rep2_snc, "rep2_snc", FamilyId::SNc, FamilyId::OB_13},
    {BijectionId::rb_st, "rb_st", FamilyId::ST, std::nullopt},
    {BijectionId::unimodal_oc, "unimodal_oc", FamilyId::OBbar_prime, std::nullopt},
};

const BijectionInfo& info(BijectionId bij) {
    for (const auto& b : kBijections) {
        if (b.id == bij) return b;
    }
    throw std::logic_error("unknown bijection id");
}

[[noreturn]] void reject(BijectionId bij, const char* what) {
    throw std::invalid_argument(std::string(bijection_name(bij)) + ": " + what);
}

const Partition& as_partition(BijectionId bij, const Element& x) {
    if (const auto* p = std::get_if<Partition>(&x)) return *p;
    reject(bij, "expected a partition");
}

const Overpartition& as_overpartition(BijectionId bij, const Element& x) {
    if (const auto* p = std::get_if<Overpartition>(&x)) return *p;
    reject(bij, "expected an overpartition");
}

const Composition& as_composition(BijectionId bij, const Element& x) {
    if (const auto* p = std::get_if<Composition>(&x)) return *p;
    reject(bij, "expected a composition");
}

void require_member(BijectionId bij, FamilyId fid, const Partition& p, const char* side) {
    if (!is_member(fid, p))
        reject(bij, side == std::string("source") ? "element is not in the source family"
                                                  : "element is not in the target family");
}

void require_over_member(BijectionId bij, FamilyId fid, const Overpartition& p,
                         const char* side) {
    if (!is_over_member(fid, p))
        reject(bij, side == std::string("source") ? "element is not in the source family"
                                                  : "element is not in the target family");
}

// h: merge every non-overlined value class into one part; an overlined
// value 2^k with multiplicity 2t+1 becomes (2t-1)2^k, 2^k, 2^k.
Partition h_forward(const Overpartition& op) {
    std::vector<part_t> out;
    for (part_t v : op.base().distinct_parts()) {
        std::size_t m = op.base().multiplicity(v);
        if (op.is_overlined(v)) {
            out.push_back(static_cast<part_t>(m - 2) * v);
            out.push_back(v);
            out.push_back(v);
        } else {
            out.push_back(static_cast<part_t>(m) * v);
        }
    }
    return Partition(std::move(out));
}

// h^{-1}: rep2, overlining 2^k exactly when three parts have valuation k.
Overpartition h_backward(const Partition& p) {
    std::map<unsigned, std::size_t> val_counts;
    for (part_t x : p.parts()) val_counts[val2(x)] += 1;
    std::vector<part_t> over;
    for (auto [v, count] : val_counts) {
        if (count == 3) over.push_back(part_t{1} << v);
    }
    return Overpartition(rep2(p), std::move(over));
}

// phi: below the top valuation, each part 2^k q (q odd > 1 is guaranteed
// since no part is a power of 2) splits into 2^k(q-2), 2^k, 2^k.
Partition phi_forward(const Partition& p) {
    unsigned top = valuation_profile(p).front();
    std::vector<part_t> out;
    for (part_t x : p.parts()) {
        unsigned k = val2(x);
        if (k == top) {
            out.push_back(x);
        } else {
            part_t piece = part_t{1} << k;
            out.push_back(x - 2 * piece);
            out.push_back(piece);
            out.push_back(piece);
        }
    }
    return Partition(std::move(out));
}

// phi^{-1}: merge each valuation class below the top into a single part.
// (Merging literal equal-part runs is not enough: (6,3,1,1) must return to
// (6,5), not (6,3,2).)
Partition phi_backward(const Partition& p) {
    std::map<unsigned, part_t> class_sum;
    for (part_t x : p.parts()) class_sum[val2(x)] += x;
    unsigned top = class_sum.rbegin()->first;
    std::vector<part_t> out;
    for (part_t x : p.parts()) {
        if (val2(x) == top) out.push_back(x);
    }
    for (auto [v, sum] : class_sum) {
        if (v != top) out.push_back(sum);
    }
    return Partition(std::move(out));
}

// psi^{-1}: merge every copy of the largest value; each smaller value 2^k
// with multiplicity m becomes 2^k(m-2), 2^k, 2^k.
Partition psi_backward(const Partition& p) {
    std::vector<part_t> out;
    part_t top = p.largest();
    out.push_back(static_cast<part_t>(p.multiplicity(top)) * top);
    for (part_t v : p.distinct_parts()) {
        if (v == top) continue;
        std::size_t m = p.multiplicity(v);
        out.push_back(static_cast<part_t>(m - 2) * v);
        out.push_back(v);
        out.push_back(v);
    }
    return Partition(std::move(out));
}

// xi: parts bin(largest) joined with the rest, the parts of bin(largest)
// overlined.
Overpartition xi_sp_forward(const Partition& p) {
    Partition expansion = bin_expand_int(p.largest());
    Partition rest(std::vector<part_t>(p.parts().begin() + 1, p.parts().end()));
    return Overpartition(multiset_union(expansion, rest), expansion.parts());
}

// xi^{-1}: all overlined copies collapse to a single part equal to their sum.
Partition xi_sp_backward(const Overpartition& op) {
    part_t sum = 0;
    std::vector<part_t> rest = op.base().parts();
    for (part_t v : op.overlined()) {
        sum += v;
        rest.erase(std::find(rest.begin(), rest.end(), v));
    }
    rest.push_back(sum);
    return Partition(std::move(rest));
}

Partition xi_split_forward(const Partition& p) {
    std::vector<part_t> out = p.parts();
    part_t half = out.front() / 2;
    out.front() = half;
    out.push_back(half);
    return Partition(std::move(out));
}

Partition xi_split_backward(const Partition& p) {
    part_t top = p.largest();
    std::vector<part_t> out = p.parts();
    out.erase(out.begin());
    out.erase(std::find(out.begin(), out.end(), top));
    out.push_back(2 * top);
    return Partition(std::move(out));
}

Partition f_merge_forward(const Partition& p) {
    std::vector<part_t> out = p.parts();
    part_t second = out[1];
    out.erase(out.begin());  // largest = 2 * second
    out.erase(out.begin());  // one copy of second
    out.push_back(3 * second);
    return Partition(std::move(out));
}

Partition f_merge_backward(const Partition& p) {
    part_t piece = part_t{1} << val2(p.largest());  // largest = 3 * 2^k
    std::vector<part_t> out = p.parts();
    out.erase(out.begin());
    out.push_back(2 * piece);
    out.push_back(piece);
    return Partition(std::move(out));
}

Partition theta_forward(const Partition& p) {
    Partition rest(std::vector<part_t>(p.parts().begin() + 1, p.parts().end()));
    return multiset_union(bin_expand_int(p.largest() - 1), rest);
}

Partition theta_backward(const Partition& p) {
    std::vector<part_t> distinct = p.distinct_parts();
    part_t sum = 0;
    std::vector<part_t> out = p.parts();
    for (part_t v : distinct) {
        sum += v;
        out.erase(std::find(out.begin(), out.end(), v));
    }
    out.push_back(sum + 1);
    return Partition(std::move(out));
}

// Overlined values (all below the largest) go before the peak in
// non-decreasing order, copies of the largest form the peak, everything
// else follows in non-increasing order.
Composition unimodal_forward(const Overpartition& op) {
    const Partition& base = op.base();
    part_t top = base.largest();
    Composition out;
    std::vector<part_t> distinct = base.distinct_parts();  // descending
    for (auto it = distinct.rbegin(); it != distinct.rend(); ++it) {
        if (*it != top && op.is_overlined(*it))
            out.insert(out.end(), base.multiplicity(*it), *it);
    }
    out.insert(out.end(), base.multiplicity(top), top);
    for (part_t v : distinct) {
        if (v != top && !op.is_overlined(v)) out.insert(out.end(), base.multiplicity(v), v);
    }
    return out;
}

Overpartition unimodal_backward(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("unimodal_oc: empty composition");
    part_t top = *std::max_element(c.begin(), c.end());
    std::vector<part_t> over{top};
    for (part_t x : c) {
        if (x == top) break;
        if (over.empty() || std::find(over.begin(), over.end(), x) == over.end())
            over.push_back(x);
    }
    return Overpartition(Partition(std::vector<part_t>(c)), std::move(over));
}

}  // namespace

std::vector<BijectionId> all_bijections() {
    std::vector<BijectionId> out;
    for (const auto& b : kBijections) out.push_back(b.id);
    return out;
}

const char* bijection_name(BijectionId bij) { return info(bij).name; }

std::optional<BijectionId> bijection_from_name(std::string_view name) {
    for (const auto& b : kBijections) {
        if (name == b.name) return b.id;
    }
    return std::nullopt;
}

FamilyId source_family(BijectionId bij) { return info(bij).source; }
std::optional<FamilyId> target_family(BijectionId bij) { return info(bij).target; }

bool is_odd_colony_composition(const Composition& c) {
    if (c.empty()) return true;
    auto peak = std::max_element(c.begin(), c.end());
    if (!std::is_sorted(c.begin(), peak) ||
        !std::is_sorted(peak, c.end(), std::greater<>()))
        return false;
    std::map<part_t, std::size_t> runs, counts;
    std::size_t i = 0;
    while (i < c.size()) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        runs[c[i]] += 1;
        counts[c[i]] += j - i;
        i = j;
    }
    for (auto [v, r] : runs) {
        if (r != 1 || counts[v] % 2 == 0) return false;
    }
    return true;
}

std::string to_text(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

BinaryPair rb_pair(const Partition& p) { return {rep2(p), bin_expand(p)}; }

Element forward(BijectionId bij, const Element& x) {
    switch (bij) {
        case BijectionId::h_st: {
            const auto& op = as_overpartition(bij, x);
            require_over_member(bij, FamilyId::OBbar_dag, op, "source");
            return h_forward(op);
        }
        case BijectionId::phi_spa: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SF_prime, p, "source");
            if (p.empty()) return p;
            return phi_forward(p);
        }
        case BijectionId::psi_spa_prime: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SPa_prime, p, "source");
            return rep2(p);
        }
        case BijectionId::xi_sp: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SP, p, "source");
            return xi_sp_forward(p);
        }
        case BijectionId::xi_split: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::OB_2, p, "source");
            return xi_split_forward(p);
        }
        case BijectionId::f_merge_sl: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::OB_2, p, "source");
            return f_merge_forward(p);
        }
        case BijectionId::theta_sb: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SB, p, "source");
            return theta_forward(p);
        }
        case BijectionId::rep2_sf: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SF, p, "source");
            return rep2(p);
        }
        case BijectionId::rep2_snc: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::SNc, p, "source");
            return rep2(p);
        }
        case BijectionId::rb_st: {
            const auto& p = as_partition(bij, x);
            require_member(bij, FamilyId::ST, p, "source");
            return rb_pair(p);
        }
        case BijectionId::unimodal_oc: {
            const auto& op = as_overpartition(bij, x);
            require_over_member(bij, FamilyId::OBbar_prime, op, "source");
            return unimodal_forward(op);
        }
    }
    throw std::logic_error("unknown bijection id");
}

Element backward(BijectionId bij, const Element& y) {
    switch (bij) {
        case BijectionId::h_st: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::ST, p, "target");
            return h_backward(p);
        }
        case BijectionId::phi_spa: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::SPa, p, "target");
            if (p.empty()) return p;
            return phi_backward(p);
        }
        case BijectionId::psi_spa_prime: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::OB_Rp, p, "target");
            return psi_backward(p);
        }
        case BijectionId::xi_sp: {
            const auto& op = as_overpartition(bij, y);
            require_over_member(bij, FamilyId::OBbar_prime, op, "target");
            return xi_sp_backward(op);
        }
        case BijectionId::xi_split: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::OB_1, p, "target");
            return xi_split_backward(p);
        }
        case BijectionId::f_merge_sl: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::SL_3div, p, "target");
            return f_merge_backward(p);
        }
        case BijectionId::theta_sb: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::HB, p, "target");
            return theta_backward(p);
        }
        case BijectionId::rep2_sf: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::OB, p, "target");
            return merge_equal(p);
        }
        case BijectionId::rep2_snc: {
            const auto& p = as_partition(bij, y);
            require_member(bij, FamilyId::OB_13, p, "target");
            return merge_equal(p);
        }
        case BijectionId::rb_st:
            reject(bij, "rb has no inverse map; it is only injective");
        case BijectionId::unimodal_oc: {
            const auto& c = as_composition(bij, y);
            if (!is_odd_colony_composition(c))
                reject(bij, "composition is not weakly unimodal with odd colonies");
            Overpartition op = unimodal_backward(c);
            require_over_member(bij, FamilyId::OBbar_prime, op, "target");
            return op;
        }
    }
    throw std::logic_error("unknown bijection id");
}

namespace {

// Maps every element of the source at weight n and checks the bijection
// contract against the enumerated target.
void verify_at(BijectionId bij, std::uint64_t n, CheckReport& report) {
    const auto& bi = info(bij);
    std::uint64_t src_min = family_min_weight(bi.source);
    if (bij == BijectionId::theta_sb && n < 1) return;  // HB(n-1) needs n >= 1
    if (n < src_min) return;

    if (bij == BijectionId::rb_st) {
        std::set<std::string> seen;
        for (const Partition& p : build_family(FamilyId::ST, n)) {
            auto [r, b] = rb_pair(p);
            if (!seen.insert(to_text(r) + "|" + to_text(b)).second)
                report.fail(n, "rb pair collision at weight " + std::to_string(n));
        }
        return;
    }

    // collect source elements
    std::vector<Element> sources;
    if (is_overpartition_family(bi.source)) {
        for (const auto& op : build_over_family(bi.source, n)) sources.push_back(op);
    } else {
        for (const auto& p : build_family(bi.source, n)) sources.push_back(p);
    }

    std::set<std::string> images;  // rendered form, for injectivity
    for (const Element& x : sources) {
        Element y = forward(bij, x);
        std::string rendered;
        if (const auto* p = std::get_if<Partition>(&y)) {
            rendered = to_text(*p);
            std::uint64_t expect = x.index() == 0 ? std::get<Partition>(x).weight()
                                                  : std::get<Overpartition>(x).weight();
            if (bij == BijectionId::theta_sb) expect -= 1;
            if (p->weight() != expect) report.fail(n, "weight not preserved");
        } else if (const auto* op = std::get_if<Overpartition>(&y)) {
            rendered = to_text(*op);
        } else if (const auto* c = std::get_if<Composition>(&y)) {
            rendered = to_text(*c);
            if (!is_odd_colony_composition(*c))
                report.fail(n, "image composition is not unimodal with odd colonies");
        }
        if (!images.insert(rendered).second) report.fail(n, "forward map not injective");
        Element back = backward(bij, y);
        if (!(back == x)) report.fail(n, "round trip failed at weight " + std::to_string(n));
    }

    if (bi.target) {
        std::uint64_t tn = (bij == BijectionId::theta_sb) ? n - 1 : n;
        if (tn < family_min_weight(*bi.target)) {
            if (!sources.empty())
                report.fail(n, "source nonempty where the target is undefined");
            return;
        }
        std::size_t target_size =
            is_overpartition_family(*bi.target) ? build_over_family(*bi.target, tn).size()
                                                : build_family(*bi.target, tn).size();
        if (images.size() != target_size)
            report.fail(n, "image does not cover the target (" +
                               std::to_string(images.size()) + " of " +
                               std::to_string(target_size) + ")");
    }
}

}  // namespace

CheckReport verify_bijection(BijectionId bij, std::uint64_t n) {
    CheckReport report;
    report.check = bijection_name(bij);
    report.n_max = n;
    verify_at(bij, n, report);
    return report;
}

CheckReport verify_bijection_range(BijectionId bij, std::uint64_t lo, std::uint64_t hi) {
    CheckReport report;
    report.check = std::string("bijection_") + bijection_name(bij);
    report.n_max = hi;
    for (std::uint64_t n = lo; n <= hi; ++n) verify_at(bij, n, report);
    return report;
}

}  // namespace semipart
