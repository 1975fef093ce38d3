#pragma once

// Enumeration ground truth: NSl pairs, NSNP pairs, cyclotomic numbers
// (i,j)_{2l}, and the Mersenne special case. Everything here is an
// exhaustive O(q) scan over an immutable FieldContext; output order is
// ascending rank of the first pair member.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsnp/field.hpp"

namespace nsnp {

enum class PairKind { NSL, NSNP };

struct PairReport {
    u64 q = 0;
    PairKind kind = PairKind::NSNP;
    u64 ell = 0;  // set for NSL reports
    std::vector<std::pair<u64, u64>> pairs;  // ranks of (alpha, alpha+1)
    std::size_t count() const { return pairs.size(); }

    std::vector<std::pair<std::string, std::string>>
    rendered(const FieldContext& ctx) const {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(pairs.size());
        for (auto [a, b] : pairs)
            out.emplace_back(ctx.render_rank(a), ctx.render_rank(b));
        return out;
    }
};

inline PairReport enumerate_nsl(const FieldContext& ctx, u64 ell) {
    if ((ctx.q() - 1) % ell != 0)
        throw std::invalid_argument("enumerate_nsl: ell does not divide q-1");
    PairReport rep;
    rep.q = ctx.q();
    rep.kind = PairKind::NSL;
    rep.ell = ell;
    for (u64 r = 1; r < ctx.q(); ++r) {
        u64 s = ctx.succ_rank(r);
        if (s != 0 && ctx.is_nsl(r, ell) && ctx.is_nsl(s, ell))
            rep.pairs.emplace_back(r, s);
    }
    return rep;
}

inline PairReport enumerate_nsnp(const FieldContext& ctx) {
    PairReport rep;
    rep.q = ctx.q();
    rep.kind = PairKind::NSNP;
    for (u64 r = 1; r < ctx.q(); ++r) {
        u64 s = ctx.succ_rank(r);
        if (s != 0 && ctx.is_nsnp(r) && ctx.is_nsnp(s))
            rep.pairs.emplace_back(r, s);
    }
    return rep;
}

/// (i,j)_{2l}: count of alpha with alpha/gamma^i and (alpha+1)/gamma^j
/// both nonzero 2l-th powers, i.e. ind(alpha) = i and ind(alpha+1) = j
/// (mod 2l) with respect to the given primitive gamma. Indices taken
/// mod 2l.
inline long long cyclotomic_number(const FieldContext& ctx, u64 gamma_rank,
                                   u64 i, u64 j, u64 ell) {
    if (!ctx.is_primitive(gamma_rank))
        throw std::invalid_argument("cyclotomic_number: gamma is not primitive");
    u64 m = 2 * ell;
    u64 qm1 = ctx.q() - 1;
    // index w.r.t. gamma = canonical index times inverse of ind(gamma)
    u64 g = ctx.index_of_rank(gamma_rank);
    u64 ginv = 0;
    for (u64 x = 0; x < qm1; ++x)
        if ((static_cast<unsigned long long>(g) * x) % qm1 == 1 % qm1) { ginv = x; break; }
    long long n = 0;
    for (u64 r = 1; r < ctx.q(); ++r) {
        u64 s = ctx.succ_rank(r);
        if (s == 0) continue;
        u64 ia = (ctx.index_of_rank(r) * ginv) % qm1;
        u64 ib = (ctx.index_of_rank(s) * ginv) % qm1;
        if (ia % m == i % m && ib % m == j % m) ++n;
    }
    return n;
}

struct MersenneWitness {
    u64 q = 0;
    u64 m = 0;                      // q = 2^m - 1
    std::pair<u64, u64> pair;       // ranks (q-2, q-1)
    u64 index_of_2 = 0;
    u64 index_of_minus_1 = 0;
};

/// Lemma-style certificate that (q-2, q-1) = (-2, -1) is an NS3 pair in
/// F_q for a Mersenne prime q > 7.
inline MersenneWitness mersenne_pair(const FieldContext& ctx) {
    u64 q = ctx.q();
    u64 m = 0, t = q + 1;
    while (t % 2 == 0) { t /= 2; ++m; }
    if (t != 1 || !is_prime(q) || !is_prime(m))
        throw std::invalid_argument("mersenne_pair: q is not a Mersenne prime");
    if (q == 7)
        throw std::invalid_argument("mersenne_pair: q = 7 is excluded");
    MersenneWitness w;
    w.q = q;
    w.m = m;
    w.index_of_2 = ctx.index_of_rank(2);
    w.index_of_minus_1 = ctx.index_of_rank(q - 1);
    if (ctx.is_square(q - 1))
        throw std::logic_error("mersenne_pair: -1 unexpectedly a square");
    if (!ctx.is_square(2) || !ctx.is_nth_power(2, 3))
        throw std::logic_error("mersenne_pair: 2 is not a square cube");
    if (!ctx.is_nsl(q - 2, 3) || !ctx.is_nsl(q - 1, 3))
        throw std::logic_error("mersenne_pair: (-2,-1) fails the NS3 predicate");
    w.pair = {q - 2, q - 1};
    return w;
}

}  // namespace nsnp
