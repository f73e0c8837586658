#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "semipart/report.hpp"
#include "semipart/sequences.hpp"

namespace semipart {

/// Formal power series over big integers, truncated at a fixed order N:
/// coefficients c0..cN, arithmetic never reads or writes past N.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    static TruncatedSeries constant(std::size_t order, long value) {
        TruncatedSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const mpz_class& coeff(std::size_t i) const { return coeffs_.at(i); }
    mpz_class& coeff(std::size_t i) { return coeffs_.at(i); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Operand orders must match; throws std::invalid_argument otherwise.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Substitute x -> x^k (k >= 1), truncating at the original order.
TruncatedSeries compose_x_pow(const TruncatedSeries& a, std::size_t k);

/// Geometric expansion of 1 / (1 - c x^k): sum of c^j x^{jk} (k >= 1).
TruncatedSeries geom_factor(long c, std::size_t k, std::size_t order);

/// A(x) = (a1 - a0 c1) x / (1 - c2 x^2) for the given spec.
TruncatedSeries series_a(const SelfSimilarSpec& spec, std::size_t order);

/// B(x) = 1 + (c1 x + c3 x^3) / (1 - c2 x^2).
TruncatedSeries series_b(const SelfSimilarSpec& spec, std::size_t order);

/// Solves F(x) = A(x) + B(x) F(x^2) by iterated substitution; coefficient n
/// equals from_spec(spec, n) for every n <= order.
TruncatedSeries solve_functional(const SelfSimilarSpec& spec, std::size_t order);

/// Truncated expansion of the printed closed form for one of
/// sf, st, spa, spa_mod, sp, snc, dsf, sl, sb. Throws std::domain_error for
/// any other id. The sl series carries the x - 1 correction, so its
/// coefficient 0 is 0 and agreement with sl starts at n = 1.
TruncatedSeries closed_form_series(SequenceId id, std::size_t order);

/// Coefficient-by-coefficient comparison of closed_form_series (and
/// solve_functional where a built-in spec exists) against seq_value.
CheckReport compare_series_to_sequence(SequenceId id, std::size_t order);

}  // namespace semipart
