#include "semipart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace semipart {

Partition::Partition(std::vector<part_t> raw) : parts_(std::move(raw)) {
    for (part_t p : parts_) {
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), part_t{0});
}

part_t Partition::largest() const {
    if (parts_.empty()) throw std::logic_error("empty partition has no largest part");
    return parts_.front();
}

std::size_t Partition::multiplicity(part_t value) const {
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<std::size_t>(hi - lo);
}

std::vector<part_t> Partition::distinct_parts() const {
    std::vector<part_t> out;
    for (part_t p : parts_) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    return out;
}

bool canonical_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

Overpartition::Overpartition(Partition base, std::vector<part_t> overlined)
    : base_(std::move(base)), over_(std::move(overlined)) {
    std::sort(over_.begin(), over_.end());
    over_.erase(std::unique(over_.begin(), over_.end()), over_.end());
    for (part_t v : over_) {
        if (!base_.has_part(v))
            throw std::invalid_argument("overlined value is not a part of the partition");
    }
}

bool Overpartition::is_overlined(part_t value) const {
    return std::binary_search(over_.begin(), over_.end(), value);
}

bool canonical_before(const Overpartition& a, const Overpartition& b) {
    if (a.base() != b.base()) return canonical_before(a.base(), b.base());
    return std::lexicographical_compare(a.overlined().begin(), a.overlined().end(),
                                        b.overlined().begin(), b.overlined().end());
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<part_t> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

bool contains(const Partition& a, const Partition& b) {
    return std::includes(a.parts().begin(), a.parts().end(), b.parts().begin(),
                         b.parts().end(), std::greater<>());
}

Partition subtract(const Partition& a, const Partition& b) {
    if (!contains(a, b))
        throw std::invalid_argument("cannot subtract: not a subpartition");
    std::vector<part_t> out;
    out.reserve(a.length() - b.length());
    std::set_difference(a.parts().begin(), a.parts().end(), b.parts().begin(),
                        b.parts().end(), std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

Partition scale(const Partition& p, part_t m) {
    if (m == 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<part_t> out = p.parts();
    for (part_t& x : out) x *= m;
    return Partition(std::move(out));
}

Partition unscale(const Partition& p, part_t m) {
    if (m == 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<part_t> out = p.parts();
    for (part_t& x : out) {
        if (x % m != 0) throw std::invalid_argument("part not divisible in unscale");
        x /= m;
    }
    return Partition(std::move(out));
}

Partition increment_largest(const Partition& p) {
    if (p.empty()) return p;
    std::vector<part_t> out = p.parts();
    out.front() += 1;
    return Partition(std::move(out));
}

Partition add_two_to_largest_odd(const Partition& p) {
    std::vector<part_t> out = p.parts();
    for (part_t& x : out) {
        if (x % 2 == 1) {
            x += 2;
            return Partition(std::move(out));
        }
    }
    throw std::invalid_argument("no odd part to increase");
}

unsigned val2(part_t m) {
    if (m == 0) throw std::invalid_argument("val2 of 0 is undefined");
    unsigned k = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++k;
    }
    return k;
}

bool is_power_of_two(part_t m) { return m != 0 && (m & (m - 1)) == 0; }

ValuationProfile valuation_profile(const Partition& p) {
    ValuationProfile out;
    out.reserve(p.length());
    for (part_t x : p.parts()) out.push_back(val2(x));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition rep2(const Partition& p) {
    std::vector<part_t> out;
    for (part_t x : p.parts()) {
        unsigned k = val2(x);
        part_t piece = part_t{1} << k;
        part_t copies = x >> k;
        out.insert(out.end(), copies, piece);
    }
    return Partition(std::move(out));
}

Partition bin_expand_int(part_t m) {
    std::vector<part_t> out;
    for (part_t bit = 1; m != 0; bit <<= 1, m >>= 1) {
        if (m & 1) out.push_back(bit);
    }
    return Partition(std::move(out));
}

Partition bin_expand(const Partition& p) {
    std::vector<part_t> out;
    for (part_t x : p.parts()) {
        part_t m = x;
        for (part_t bit = 1; m != 0; bit <<= 1, m >>= 1) {
            if (m & 1) out.push_back(bit);
        }
    }
    return Partition(std::move(out));
}

Partition merge_equal(const Partition& p) {
    std::vector<part_t> out;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        out.push_back(parts[i] * (j - i));
        i = j;
    }
    return Partition(std::move(out));
}

bool is_binary(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [](part_t x) { return is_power_of_two(x); });
}

std::string to_text(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += '+';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_text(const Overpartition& p) {
    std::string out;
    part_t prev = 0;
    bool first = true;
    for (part_t x : p.base().parts()) {
        if (!first) out += '+';
        out += std::to_string(x);
        if (p.is_overlined(x) && (first || x != prev)) out += '*';
        prev = x;
        first = false;
    }
    return out;
}

namespace {

struct ParsedText {
    std::vector<part_t> parts;
    std::vector<part_t> starred;
};

ParsedText parse_terms(std::string_view text) {
    ParsedText out;
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = compact.find('+', pos);
        std::string_view term{compact.data() + pos,
                              (plus == std::string::npos ? compact.size() : plus) - pos};
        bool star = !term.empty() && term.back() == '*';
        if (star) term.remove_suffix(1);
        part_t value = 0;
        auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), value);
        if (ec != std::errc{} || ptr != term.data() + term.size() || value == 0)
            throw std::invalid_argument("malformed partition term");
        out.parts.push_back(value);
        if (star) out.starred.push_back(value);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    ParsedText t = parse_terms(text);
    if (!t.starred.empty())
        throw std::invalid_argument("overline marker in a plain partition");
    return Partition(std::move(t.parts));
}

Overpartition parse_overpartition(std::string_view text) {
    ParsedText t = parse_terms(text);
    return Overpartition(Partition(std::move(t.parts)), std::move(t.starred));
}

}  // namespace semipart
