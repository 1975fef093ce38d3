#pragma once

// Multiplicative character machinery over a FieldContext: exact values
// in Z[zeta_2l], Jacobi sums by direct summation, the block sums S(i,j),
// the characteristic function f_l, and the character-sum count N_l(q).
//
// lambda and eta^i live in the single ring Z[zeta_2l] via
// lambda -> zeta^l and eta -> zeta^2, so every block sum reduces with
// one cyclotomic polynomial.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nsnp/cyclotomic.hpp"
#include "nsnp/field.hpp"

namespace nsnp {

struct MultCharacter {
    const FieldContext* ctx = nullptr;
    u64 order = 1;     // divides q-1
    u64 exponent = 0;  // chi(gamma^k) = zeta_order^{exponent * k}

    bool trivial() const { return exponent % order == 0; }
};

inline MultCharacter lambda_char(const FieldContext& ctx) {
    if ((ctx.q() - 1) % 2 != 0)
        throw std::invalid_argument("lambda_char: q must be odd");
    return {&ctx, 2, 1};
}

inline MultCharacter eta_char(const FieldContext& ctx, u64 ell, u64 exponent = 1) {
    if ((ctx.q() - 1) % ell != 0)
        throw std::invalid_argument("eta_char: ell does not divide q-1");
    return {&ctx, ell, exponent % ell};
}

/// chi(a) embedded in Z[zeta_m]; requires chi.order | m. Returns 0 for a = 0.
inline CyclotomicInt char_eval(const MultCharacter& chi, const FieldElement& a,
                               unsigned m) {
    if (m % chi.order != 0)
        throw std::invalid_argument("char_eval: character order does not divide m");
    u64 r = chi.ctx->rank(a);
    if (r == 0) return CyclotomicInt::zero(m);
    u64 k = chi.ctx->index_of_rank(r);
    unsigned e = static_cast<unsigned>((chi.exponent * (k % chi.order)) % chi.order);
    return CyclotomicInt::root_power(m, e * (m / chi.order));
}

/// J(chi1, chi2) = sum over alpha of chi1(alpha) chi2(1 - alpha),
/// by direct summation with the index table, exact in Z[zeta_m].
inline CyclotomicInt jacobi_sum(const MultCharacter& chi1,
                                const MultCharacter& chi2, unsigned m) {
    const FieldContext& ctx = *chi1.ctx;
    if (chi2.ctx != &ctx)
        throw std::invalid_argument("jacobi_sum: characters on different contexts");
    if (m % chi1.order != 0 || m % chi2.order != 0)
        throw std::invalid_argument("jacobi_sum: orders do not divide m");
    u64 a1 = chi1.exponent * (m / chi1.order);
    u64 a2 = chi2.exponent * (m / chi2.order);
    std::vector<long long> counts(m, 0);
    u64 one = 1;
    for (u64 r = 1; r < ctx.q(); ++r) {
        if (r == one) continue;  // 1 - alpha = 0
        u64 s = ctx.succ_rank(ctx.neg_rank(r));  // rank of 1 - alpha
        u64 e = (a1 * ctx.index_of_rank(r) + a2 * ctx.index_of_rank(s)) % m;
        ++counts[e];
    }
    return CyclotomicInt::from_power_counts(m, counts);
}

/// Per-field tables for order-2l character work: joint index histograms
/// mod 2l for (alpha, 1-alpha) and (alpha, alpha+1). Build once, then
/// every Jacobi sum and block sum is O((2l)^2) table work.
class CharSumTable {
public:
    CharSumTable(const FieldContext& ctx, u64 ell) : ctx_(&ctx), ell_(ell) {
        if (ell < 3 || ell % 2 == 0)
            throw std::invalid_argument("CharSumTable: ell must be an odd prime");
        if ((ctx.q() - 1) % ell != 0)
            throw std::invalid_argument("CharSumTable: ell does not divide q-1");
        m_ = static_cast<unsigned>(2 * ell);
        jac_.assign(m_ * m_, 0);
        cons_.assign(m_ * m_, 0);
        u64 q = ctx.q();
        for (u64 r = 1; r < q; ++r) {
            u64 e1 = ctx.index_of_rank(r) % m_;
            u64 s = ctx.succ_rank(ctx.neg_rank(r));  // 1 - alpha
            if (s != 0) ++jac_[e1 * m_ + ctx.index_of_rank(s) % m_];
            u64 t = ctx.succ_rank(r);  // alpha + 1
            if (t != 0) ++cons_[e1 * m_ + ctx.index_of_rank(t) % m_];
        }
        lambda_minus_one_ = ((q - 1) / 2) % 2 == 0 ? +1 : -1;
    }

    unsigned m() const { return m_; }
    u64 ell() const { return ell_; }
    int lambda_minus_one() const { return lambda_minus_one_; }
    const FieldContext& ctx() const { return *ctx_; }

    /// J(chi_a, chi_b) where chi_t(gamma^k) = zeta_2l^{t k}
    CyclotomicInt jacobi(u64 a, u64 b) const {
        std::vector<long long> counts(m_, 0);
        for (unsigned e1 = 0; e1 < m_; ++e1)
            for (unsigned e2 = 0; e2 < m_; ++e2)
                counts[(a * e1 + b * e2) % m_] += jac_[e1 * m_ + e2];
        return CyclotomicInt::from_power_counts(m_, counts);
    }

    /// Eq-block S(i,j), computed both as the four-Jacobi-sum combination
    /// and as the direct consecutive sum; the two must agree exactly.
    CyclotomicInt s_block(u64 i, u64 j) const {
        u64 l = ell_;
        CyclotomicInt lam = CyclotomicInt::integer(m_, lambda_minus_one_);
        CyclotomicInt via_jacobi =
            jacobi(2 * i, 2 * j) - lam * jacobi(l + 2 * i, 2 * j) -
            jacobi(2 * i, l + 2 * j) + lam * jacobi(l + 2 * i, l + 2 * j);

        // direct: sum over alpha != 0,-1 of
        //   (1 - lambda(alpha)) eta^i(alpha) (1 - lambda(alpha+1)) eta^j(alpha+1)
        std::vector<long long> counts(m_, 0);
        for (unsigned e1 = 0; e1 < m_; ++e1) {
            for (unsigned e2 = 0; e2 < m_; ++e2) {
                long long n = cons_[e1 * m_ + e2];
                if (n == 0) continue;
                // (1 - z^{l e1}) z^{2 i e1} (1 - z^{l e2}) z^{2 j e2}
                unsigned base = static_cast<unsigned>((2 * i * e1 + 2 * j * e2) % m_);
                counts[base] += n;
                counts[(base + l * e1) % m_] -= n;
                counts[(base + l * e2) % m_] -= n;
                counts[(base + l * e1 + l * e2) % m_] += n;
            }
        }
        CyclotomicInt direct = CyclotomicInt::from_power_counts(m_, counts);
        if (!(direct == via_jacobi))
            throw std::logic_error("s_block: Jacobi-sum route disagrees with "
                                   "direct summation at q=" +
                                   std::to_string(ctx_->q()));
        return direct;
    }

    /// N_l(q) = (1/4l^2) sum of S(i,j); the total must divide exactly.
    long long count() const {
        CyclotomicInt total = CyclotomicInt::zero(m_);
        for (u64 i = 0; i < ell_; ++i)
            for (u64 j = 0; j < ell_; ++j) total += s_block(i, j);
        long long t = total.as_integer();  // throws if not rational
        long long d = static_cast<long long>(4 * ell_ * ell_);
        if (t % d != 0 || t < 0)
            throw std::logic_error("count_charsum: block total " +
                                   std::to_string(t) + " is not a multiple of 4l^2");
        return t / d;
    }

private:
    const FieldContext* ctx_;
    u64 ell_;
    unsigned m_;
    int lambda_minus_one_;
    std::vector<long long> jac_;   // histogram of (ind(a), ind(1-a)) mod 2l
    std::vector<long long> cons_;  // histogram of (ind(a), ind(a+1)) mod 2l
};

inline CyclotomicInt s_block(const FieldContext& ctx, u64 ell, u64 i, u64 j) {
    return CharSumTable(ctx, ell).s_block(i, j);
}

/// Characteristic function of NSl elements, evaluated via the character
/// sum (1/2l)(1 - lambda(a)) sum_i eta^i(a) and cross-checked against
/// the index predicate.
inline int f_ell(const FieldContext& ctx, u64 ell, const FieldElement& a) {
    unsigned m = static_cast<unsigned>(2 * ell);
    u64 r = ctx.rank(a);
    CyclotomicInt sum = CyclotomicInt::zero(m);
    if (r != 0) {
        u64 k = ctx.index_of_rank(r);
        CyclotomicInt one_minus_lambda =
            CyclotomicInt::integer(m, 1) -
            CyclotomicInt::root_power(m, static_cast<unsigned>((ell * k) % m));
        CyclotomicInt eta_sum = CyclotomicInt::zero(m);
        for (u64 i = 0; i < ell; ++i)
            eta_sum += CyclotomicInt::root_power(
                m, static_cast<unsigned>((2 * i * k) % m));
        sum = one_minus_lambda * eta_sum;
    }
    long long v = sum.as_integer();
    if (v % static_cast<long long>(2 * ell) != 0)
        throw std::logic_error("f_ell: character sum not divisible by 2l");
    long long f = v / static_cast<long long>(2 * ell);
    if (f != 0 && f != 1) throw std::logic_error("f_ell: value outside {0,1}");
    if ((f == 1) != ctx.is_nsl(r, ell))
        throw std::logic_error("f_ell: character sum disagrees with index predicate");
    return static_cast<int>(f);
}

inline long long count_charsum(const FieldContext& ctx, u64 ell) {
    return CharSumTable(ctx, ell).count();
}

}  // namespace nsnp
