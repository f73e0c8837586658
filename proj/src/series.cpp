#include "semipart/series.hpp"

#include <stdexcept>
#include <string>

namespace semipart {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

/// x^a / (1 - x^step), truncated.
TruncatedSeries shifted_geom(std::size_t a, std::size_t step, std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t j = a; j <= order; j += step) out.coeff(j) = 1;
    return out;
}

/// One factor of the running products: 1 + sum_t x^{t*2^r}/(1 - x^{2^{r+1}})
/// when geometric, or 1 + sum_t x^{t*2^r} when not.
TruncatedSeries tail_factor(const std::vector<std::size_t>& offsets, unsigned r,
                            bool geometric, std::size_t order) {
    TruncatedSeries out = TruncatedSeries::constant(order, 1);
    for (std::size_t t : offsets) {
        std::size_t start = t << r;
        if (start > order) continue;
        if (geometric) {
            for (std::size_t j = start; j <= order; j += (std::size_t{2} << r))
                out.coeff(j) += 1;
        } else {
            out.coeff(start) += 1;
        }
    }
    return out;
}

/// prod over r with 2^r <= order of tail_factor(offsets, r).
TruncatedSeries product_form(const std::vector<std::size_t>& offsets, bool geometric,
                             std::size_t order) {
    TruncatedSeries prod = TruncatedSeries::constant(order, 1);
    for (unsigned r = 0; (std::size_t{1} << r) <= order; ++r)
        prod = mul(prod, tail_factor(offsets, r, geometric, order));
    return prod;
}

/// sum over i with 2^i <= order of
///   head_count * x^{head_offset*2^i}/(1 - x^{2^{i+1}}) * prod_{r<i} factor_r.
TruncatedSeries sum_form(std::size_t head_offset, long head_count,
                         const std::vector<std::size_t>& offsets, std::size_t order) {
    TruncatedSeries total(order);
    TruncatedSeries prod = TruncatedSeries::constant(order, 1);
    for (unsigned i = 0; (std::size_t{1} << i) <= order; ++i) {
        TruncatedSeries head = shifted_geom(head_offset << i, std::size_t{2} << i, order);
        if (head_count != 1) {
            for (std::size_t j = 0; j <= order; ++j) head.coeff(j) *= head_count;
        }
        total = add(total, mul(head, prod));
        prod = mul(prod, tail_factor(offsets, i, true, order));
    }
    return total;
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries out = a;
    for (std::size_t i = 0; i <= a.order(); ++i) out.coeff(i) += b.coeff(i);
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries out = a;
    for (std::size_t i = 0; i <= a.order(); ++i) out.coeff(i) -= b.coeff(i);
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    TruncatedSeries out(order);
    // skip zero coefficients of b: the built-in factors are sparse in steps
    // of 2^r, which keeps full-order products cheap
    for (std::size_t j = 0; j <= order; ++j) {
        const mpz_class& bj = b.coeff(j);
        if (sgn(bj) == 0) continue;
        for (std::size_t i = 0; i + j <= order; ++i) {
            const mpz_class& ai = a.coeff(i);
            if (sgn(ai) == 0) continue;
            mpz_addmul(out.coeff(i + j).get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries compose_x_pow(const TruncatedSeries& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitution power must be positive");
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i * k <= a.order(); ++i) out.coeff(i * k) = a.coeff(i);
    return out;
}

TruncatedSeries geom_factor(long c, std::size_t k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("geometric step must be positive");
    TruncatedSeries out(order);
    mpz_class power = 1;
    for (std::size_t j = 0; j <= order; j += k) {
        out.coeff(j) = power;
        power *= c;
    }
    return out;
}

TruncatedSeries series_a(const SelfSimilarSpec& spec, std::size_t order) {
    TruncatedSeries geom = geom_factor(spec.c2, 2, order);
    TruncatedSeries out(order);
    long lead = spec.a1 - spec.a0 * spec.c1;
    for (std::size_t i = 0; i + 1 <= order; ++i) out.coeff(i + 1) = lead * geom.coeff(i);
    return out;
}

TruncatedSeries series_b(const SelfSimilarSpec& spec, std::size_t order) {
    TruncatedSeries geom = geom_factor(spec.c2, 2, order);
    TruncatedSeries out = TruncatedSeries::constant(order, 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(geom.coeff(i)) == 0) continue;
        if (i + 1 <= order) out.coeff(i + 1) += spec.c1 * geom.coeff(i);
        if (i + 3 <= order) out.coeff(i + 3) += spec.c3 * geom.coeff(i);
    }
    return out;
}

TruncatedSeries solve_functional(const SelfSimilarSpec& spec, std::size_t order) {
    TruncatedSeries a = series_a(spec, order);
    TruncatedSeries b = series_b(spec, order);
    TruncatedSeries result(order);
    TruncatedSeries prod = TruncatedSeries::constant(order, 1);
    // iterate F = A + B F(x^2) until the substituted tail is constant a0
    unsigned k = 0;
    while ((std::size_t{2} << k) <= order) ++k;
    for (unsigned i = 0; i <= k; ++i) {
        result = add(result, mul(compose_x_pow(a, std::size_t{1} << i), prod));
        prod = mul(prod, compose_x_pow(b, std::size_t{1} << i));
    }
    for (std::size_t j = 0; j <= order; ++j)
        result.coeff(j) += spec.a0 * prod.coeff(j);
    return result;
}

TruncatedSeries closed_form_series(SequenceId id, std::size_t order) {
    switch (id) {
        case SequenceId::sf:
            return product_form({1}, true, order);
        case SequenceId::st:
            return sum_form(1, 1, {1, 3}, order);
        case SequenceId::spa:
            return product_form({3}, true, order);
        case SequenceId::spa_mod:
            return sum_form(1, 1, {3}, order);
        case SequenceId::sp:
            return sum_form(1, 1, {1, 1}, order);
        case SequenceId::snc:
            return product_form({1, 3}, false, order);
        case SequenceId::dsf:
            return sum_form(3, 1, {1}, order);
        case SequenceId::sl: {
            // x - 1 + odd-binary product + dsf sum
            TruncatedSeries out = add(product_form({1}, true, order),
                                      sum_form(3, 1, {1}, order));
            out.coeff(0) -= 1;
            if (order >= 1) out.coeff(1) += 1;
            return out;
        }
        case SequenceId::sb: {
            // x * prod (1 + x^{2^i} + x^{2*2^i})
            TruncatedSeries prod = product_form({1, 2}, false, order);
            TruncatedSeries out(order);
            for (std::size_t i = 0; i + 1 <= order; ++i) out.coeff(i + 1) = prod.coeff(i);
            return out;
        }
        default:
            throw std::domain_error(std::string("no closed-form series for ") +
                                    sequence_name(id));
    }
}

CheckReport compare_series_to_sequence(SequenceId id, std::size_t order) {
    CheckReport report;
    report.check = std::string("series_") + sequence_name(id);
    report.n_max = order;
    TruncatedSeries closed = closed_form_series(id, order);
    std::size_t start = (id == SequenceId::sl) ? 1 : 0;
    for (std::size_t n = start; n <= order; ++n) {
        if (closed.coeff(n) != seq_value(id, n))
            report.fail(n, "closed form disagrees with the recurrence at n=" +
                               std::to_string(n));
    }
    if (auto spec = builtin_spec(id)) {
        TruncatedSeries solved = solve_functional(*spec, order);
        for (std::size_t n = 0; n <= order; ++n) {
            if (solved.coeff(n) != seq_value(id, n))
                report.fail(n, "functional equation disagrees with the recurrence at n=" +
                                   std::to_string(n));
        }
    }
    return report;
}

}  // namespace semipart
