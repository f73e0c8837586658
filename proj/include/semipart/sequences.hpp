#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace semipart {

/// The self-similar sequences, their total-parts companions, and the
/// paper-folding sequence z.
enum class SequenceId {
    sf, st, spa, spa_mod, sp, snc, dsf, sl, sb, z,
    psf, pst, pspa, pspa_mod, psp, psnc, pdsf, psl, psb, phb,
};

std::vector<SequenceId> all_sequences();
const char* sequence_name(SequenceId id);
std::optional<SequenceId> sequence_from_name(std::string_view name);

/// Smallest index at which the sequence is defined. sl starts at 1, psl at
/// 2, psb and phb at 1; everything else at 0.
std::uint64_t min_index(SequenceId id);

/// Generic self-similar recurrence: f(0)=a0, f(1)=a1, f(2n)=f(n),
/// f(2n+1)=c1 f(2n)+c2 f(2n-1)+c3 f(2n-2) for n >= 1.
struct SelfSimilarSpec {
    long a0 = 0;
    long a1 = 0;
    long c1 = 0;
    long c2 = 0;
    long c3 = 0;
};

/// The SelfSimilarSpec matching a built-in sequence, when it fits the
/// generic shape (sf, st, spa, spa_mod, sp, snc).
std::optional<SelfSimilarSpec> builtin_spec(SequenceId id);

/// Exact value, memoized. Throws std::domain_error below min_index.
mpz_class seq_value(SequenceId id, std::uint64_t n);

/// seq_value(id, n) mod m, computed over residues. Throws on m < 2 or a
/// domain violation.
std::uint64_t seq_value_mod(SequenceId id, std::uint64_t n, std::uint64_t m);

/// [seq_value(id, n) for n in lo..hi].
std::vector<mpz_class> seq_range(SequenceId id, std::uint64_t lo, std::uint64_t hi);

/// Evaluates the generic recurrence directly (not memoized across calls).
mpz_class from_spec(const SelfSimilarSpec& spec, std::uint64_t n);

/// OEIS b-file lines: "n value\n" for n in lo..hi.
void write_bfile(std::ostream& os, SequenceId id, std::uint64_t lo, std::uint64_t hi);

}  // namespace semipart
