#include "semipart/sequences.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace semipart {

namespace {

struct SequenceInfo {
    SequenceId id;
    const char* name;
    std::uint64_t min_index;
};

constexpr SequenceInfo kSequences[] = {
    {SequenceId::sf, "sf", 0},        {SequenceId::st, "st", 0},
    {SequenceId::spa, "spa", 0},      {SequenceId::spa_mod, "spa_mod", 0},
    {SequenceId::sp, "sp", 0},        {SequenceId::snc, "snc", 0},
    {SequenceId::dsf, "dsf", 0},      {SequenceId::sl, "sl", 1},
    {SequenceId::sb, "sb", 0},        {SequenceId::z, "z", 0},
    {SequenceId::psf, "psf", 0},      {SequenceId::pst, "pst", 0},
    {SequenceId::pspa, "pspa", 0},    {SequenceId::pspa_mod, "pspa_mod", 0},
    {SequenceId::psp, "psp", 0},      {SequenceId::psnc, "psnc", 0},
    {SequenceId::pdsf, "pdsf", 0},    {SequenceId::psl, "psl", 2},
    {SequenceId::psb, "psb", 1},      {SequenceId::phb, "phb", 1},
};

const SequenceInfo& info(SequenceId id) {
    for (const auto& s : kSequences) {
        if (s.id == id) return s;
    }
    throw std::logic_error("unknown sequence id");
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a + b) % m;  // inputs < m <= 2^63, no overflow for the moduli used
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

/// Residue with its modulus, so the shared recurrence bodies read naturally.
struct ModVal {
    std::uint64_t v;
    std::uint64_t m;
    friend ModVal operator+(ModVal a, ModVal b) { return {addmod(a.v, b.v, a.m), a.m}; }
    friend ModVal operator*(std::uint64_t c, ModVal a) { return {mulmod(c % a.m, a.v, a.m), a.m}; }
};

// One recurrence body shared by the exact and the modular evaluator.
// `self(k)` reads the sequence's own earlier values, `other(id, k)` a
// coupled sequence, `lit(c)` lifts a constant. Every reference is to an
// index < n, so a single forward fill works.
template <class V, class Self, class Other, class Lit>
V seq_step(SequenceId id, std::uint64_t n, Self self, Other other, Lit lit) {
    const bool even = (n % 2 == 0);
    switch (id) {
        case SequenceId::sf:
            if (n <= 1) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 2);
        case SequenceId::st:
            if (n <= 1) return lit(n);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 2) + self(n - 3);
        case SequenceId::spa:
            if (n <= 1) return lit(1 - n);
            if (even) return self(n / 2);
            return self(n - 2) + self(n - 3);
        case SequenceId::spa_mod:
            if (n <= 1) return lit(n);
            if (even) return self(n / 2);
            return self(n - 2) + self(n - 3);
        case SequenceId::sp:
            if (n <= 1) return lit(n);
            if (even) return self(n / 2);
            return 2 * self(n - 1) + self(n - 2);
        case SequenceId::snc:
            if (n <= 1) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 3);
        case SequenceId::dsf:
            if (n <= 2) return lit(0);
            if (n == 3) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 2);
        case SequenceId::sl:
            if (n == 1) return lit(2);
            if (n == 2) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 2);
        case SequenceId::sb:
            if (n <= 1) return lit(n);
            if (even) return self(n / 2);
            return self((n - 1) / 2) + self((n + 1) / 2);
        case SequenceId::z: {
            std::uint64_t m = n;
            while (m % 2 == 1) m /= 2;
            return lit(m % 4 == 0 ? 0 : 1);
        }
        case SequenceId::psf:
            if (n == 0) return lit(0);
            if (n == 1) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + other(SequenceId::sf, n - 1) + self(n - 2);
        case SequenceId::pst:
            if (n == 0) return lit(0);
            if (n <= 2) return lit(1);
            if (n == 3) return lit(3);
            if (even) return self(n / 2);
            return self(n - 1) + other(SequenceId::st, n - 1) + self(n - 2) +
                   self(n - 3) + 3 * other(SequenceId::st, n - 3);
        case SequenceId::pspa:
            if (n <= 2) return lit(0);
            if (n == 3) return lit(1);
            if (even) return self(n / 2);
            return self(n - 2) + self(n - 3) + 3 * other(SequenceId::spa, n - 3);
        case SequenceId::pspa_mod:
            if (n == 0) return lit(0);
            if (n <= 3) return lit(1);
            if (even) return self(n / 2);
            return self(n - 2) + self(n - 3) + 3 * other(SequenceId::spa_mod, n - 3);
        case SequenceId::psp:
            if (n == 0) return lit(0);
            if (n <= 2) return lit(1);
            if (even) return self(n / 2);
            return other(SequenceId::sp, n - 1) + 2 * self(n - 1) +
                   2 * other(SequenceId::sp, n - 2) + self(n - 2);
        case SequenceId::psnc:
            if (n == 0) return lit(0);
            if (n == 1) return lit(1);
            if (even) return self(n / 2);
            return self(n - 1) + self(n - 3) + other(SequenceId::snc, n);
        case SequenceId::pdsf:
            if (n <= 2) return lit(0);
            if (n == 3) return lit(2);
            if (even) return self(n / 2);
            return other(SequenceId::dsf, n - 1) + self(n - 1) + self(n - 2);
        case SequenceId::psl:
            if (n == 2) return lit(1);
            if (n == 3) return lit(6);
            if (even) return self(n / 2);
            return other(SequenceId::sl, n - 1) + self(n - 1) + self(n - 2) +
                   2 * other(SequenceId::sl, n - 2);
        case SequenceId::psb:
            if (n <= 2) return lit(1);
            if (n == 3) return lit(3);
            if (even) return self(n / 2);
            return self((n - 1) / 2) + other(SequenceId::sb, (n - 1) / 2) +
                   self((n + 1) / 2);
        case SequenceId::phb:
            if (n == 1) return lit(1);
            if (n == 2) return lit(3);
            if (even)
                return self(n / 2) + self(n / 2 - 1) + 2 * other(SequenceId::sb, n / 2);
            return self((n - 1) / 2) + other(SequenceId::sb, (n + 1) / 2);
    }
    throw std::logic_error("unknown sequence id");
}

// Memo caches. Dependencies between sequences are acyclic, so a recursive
// mutex serializes cross-sequence fills without deadlock.
std::recursive_mutex cache_mutex;
std::map<SequenceId, std::vector<mpz_class>> exact_cache;
std::map<std::pair<SequenceId, std::uint64_t>, std::vector<std::uint64_t>> mod_cache;

mpz_class seq_value_locked(SequenceId id, std::uint64_t n);

mpz_class exact_step(SequenceId id, std::uint64_t n) {
    auto& memo = exact_cache[id];
    return seq_step<mpz_class>(
        id, n, [&](std::uint64_t k) -> mpz_class { return memo[k]; },
        [&](SequenceId o, std::uint64_t k) { return seq_value_locked(o, k); },
        [](std::uint64_t c) { return mpz_class(static_cast<unsigned long>(c)); });
}

mpz_class seq_value_locked(SequenceId id, std::uint64_t n) {
    auto& memo = exact_cache[id];
    const std::uint64_t lo = info(id).min_index;
    while (memo.size() <= n) {
        std::uint64_t k = memo.size();
        mpz_class v = k < lo ? mpz_class(0) : exact_step(id, k);
        memo.push_back(std::move(v));
    }
    return memo[n];
}

std::uint64_t mod_value_locked(SequenceId id, std::uint64_t n, std::uint64_t m);

std::uint64_t mod_step(SequenceId id, std::uint64_t n, std::uint64_t m) {
    auto& memo = mod_cache[{id, m}];
    return seq_step<ModVal>(
               id, n, [&](std::uint64_t k) { return ModVal{memo[k], m}; },
               [&](SequenceId o, std::uint64_t k) {
                   return ModVal{mod_value_locked(o, k, m), m};
               },
               [m](std::uint64_t c) { return ModVal{c % m, m}; })
        .v;
}

std::uint64_t mod_value_locked(SequenceId id, std::uint64_t n, std::uint64_t m) {
    auto& memo = mod_cache[{id, m}];
    const std::uint64_t lo = info(id).min_index;
    while (memo.size() <= n) {
        std::uint64_t k = memo.size();
        std::uint64_t v = k < lo ? 0 : mod_step(id, k, m);
        memo.push_back(v);
    }
    return memo[n];
}

}  // namespace

std::vector<SequenceId> all_sequences() {
    std::vector<SequenceId> out;
    for (const auto& s : kSequences) out.push_back(s.id);
    return out;
}

const char* sequence_name(SequenceId id) { return info(id).name; }

std::optional<SequenceId> sequence_from_name(std::string_view name) {
    for (const auto& s : kSequences) {
        if (name == s.name) return s.id;
    }
    return std::nullopt;
}

std::uint64_t min_index(SequenceId id) { return info(id).min_index; }

std::optional<SelfSimilarSpec> builtin_spec(SequenceId id) {
    switch (id) {
        case SequenceId::sf: return SelfSimilarSpec{1, 1, 1, 1, 0};
        case SequenceId::st: return SelfSimilarSpec{0, 1, 1, 1, 1};
        case SequenceId::spa: return SelfSimilarSpec{1, 0, 0, 1, 1};
        case SequenceId::spa_mod: return SelfSimilarSpec{0, 1, 0, 1, 1};
        case SequenceId::sp: return SelfSimilarSpec{0, 1, 2, 1, 0};
        case SequenceId::snc: return SelfSimilarSpec{1, 1, 1, 0, 1};
        default: return std::nullopt;
    }
}

mpz_class seq_value(SequenceId id, std::uint64_t n) {
    if (n < info(id).min_index)
        throw std::domain_error(std::string(sequence_name(id)) + "(" +
                                std::to_string(n) + ") is not defined");
    std::lock_guard lock(cache_mutex);
    return seq_value_locked(id, n);
}

std::uint64_t seq_value_mod(SequenceId id, std::uint64_t n, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (n < info(id).min_index)
        throw std::domain_error(std::string(sequence_name(id)) + "(" +
                                std::to_string(n) + ") is not defined");
    std::lock_guard lock(cache_mutex);
    return mod_value_locked(id, n, m);
}

std::vector<mpz_class> seq_range(SequenceId id, std::uint64_t lo, std::uint64_t hi) {
    if (lo < info(id).min_index || hi < lo)
        throw std::domain_error("bad range for sequence");
    std::vector<mpz_class> out;
    out.reserve(hi - lo + 1);
    std::lock_guard lock(cache_mutex);
    seq_value_locked(id, hi);
    for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(exact_cache[id][n]);
    return out;
}

mpz_class from_spec(const SelfSimilarSpec& spec, std::uint64_t n) {
    std::vector<mpz_class> memo;
    memo.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
        if (k == 0) {
            memo.emplace_back(spec.a0);
        } else if (k == 1) {
            memo.emplace_back(spec.a1);
        } else if (k % 2 == 0) {
            memo.push_back(memo[k / 2]);
        } else {
            mpz_class v = spec.c1 * memo[k - 1] + spec.c2 * memo[k - 2] +
                          spec.c3 * memo[k - 3];
            memo.push_back(std::move(v));
        }
    }
    return memo[n];
}

void write_bfile(std::ostream& os, SequenceId id, std::uint64_t lo, std::uint64_t hi) {
    auto values = seq_range(id, lo, hi);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        os << n << ' ' << values[n - lo].get_str() << '\n';
    }
}

}  // namespace semipart
