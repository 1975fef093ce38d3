#pragma once

// The explicit character-sum lower bound, its simpler corollary
// threshold 16 l^4, threshold reconstruction, and the large-l
// certificate chains. Positivity of a - b sqrt(q) is always decided by
// comparing a^2 with b^2 q in exact integers; sqrt(q) is never
// evaluated in floating point for a decision.

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nsnp/numtheory.hpp"

namespace nsnp {

struct BoundReport {
    u64 q = 0;
    u64 ell = 0;
    int lambda_minus_one = 0;
    mpz_class sqrt_coeff;   // 4(l-1)^2
    mpz_class const_term;   // (l-2)(1+lambda(-1)) + 3
    mpz_class denom;        // 4 l^2
    bool positive = false;
    bool corollary_applies = false;
    std::string decimal;    // display only, 6 significant digits

    /// exact test: (q - b sqrt(q) - c) / 4l^2 <= n
    bool at_most(const mpz_class& n) const {
        mpz_class rest = mpz_class(q) - const_term - denom * n;
        if (rest <= 0) return true;
        return sqrt_coeff * sqrt_coeff * q >= rest * rest;
    }

    bool at_most(long long n) const {
        return at_most(mpz_class(static_cast<long>(n)));
    }
};

namespace detail {

/// numerator q - b sqrt(q) - c > 0, decided exactly
inline bool numerator_positive(const mpz_class& q, const mpz_class& b,
                               const mpz_class& c) {
    mpz_class a = q - c;
    if (a <= 0) return false;
    return a * a > b * b * q;
}

}  // namespace detail

inline BoundReport lower_bound(u64 q, u64 ell) {
    if ((q - 1) % ell != 0)
        throw std::invalid_argument("lower_bound: ell does not divide q-1");
    BoundReport r;
    r.q = q;
    r.ell = ell;
    r.lambda_minus_one = ((q - 1) / 2) % 2 == 0 ? +1 : -1;
    r.sqrt_coeff = 4 * mpz_class(ell - 1) * mpz_class(ell - 1);
    r.const_term = mpz_class(ell - 2) * (1 + r.lambda_minus_one) + 3;
    r.denom = 4 * mpz_class(ell) * mpz_class(ell);
    r.positive = detail::numerator_positive(q, r.sqrt_coeff, r.const_term);
    r.corollary_applies = mpz_class(q) > 16 * mpz_class(ell) * mpz_class(ell) *
                                             mpz_class(ell) * mpz_class(ell);
    double val = (static_cast<double>(q) -
                  r.sqrt_coeff.get_d() * std::sqrt(static_cast<double>(q)) -
                  r.const_term.get_d()) /
                 r.denom.get_d();
    std::ostringstream os;
    os.precision(6);
    os << val;
    r.decimal = os.str();
    return r;
}

inline mpz_class corollary_threshold(u64 ell) {
    mpz_class l(ell);
    return 16 * l * l * l * l;
}

/// Least Q* such that the bound numerator is positive for every q >= Q*,
/// under the given lambda(-1). The numerator is increasing in q once
/// q > (b/2)^2, and the root lies above that, so a binary search on the
/// monotone region is exact.
inline mpz_class theorem_threshold(u64 ell, int lambda_minus_one = +1) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("theorem_threshold: ell must be an odd prime");
    mpz_class b = 4 * mpz_class(ell - 1) * mpz_class(ell - 1);
    mpz_class c = mpz_class(ell - 2) * (1 + lambda_minus_one) + 3;
    mpz_class lo = b * b / 4 + 1;           // monotone from here on
    mpz_class hi = (b + c + 2) * (b + c + 2);
    if (!detail::numerator_positive(hi, b, c))
        throw std::logic_error("theorem_threshold: search window too small");
    if (detail::numerator_positive(lo, b, c))
        throw std::logic_error("theorem_threshold: root below monotone region");
    while (lo + 1 < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (detail::numerator_positive(mid, b, c))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

struct CertificateStep {
    std::string description;
    mpq_class lhs, rhs;
    bool holds = false;
};

struct Certificate {
    bool granted = false;
    std::string refusal_reason;
    u64 ell = 0;
    std::vector<CertificateStep> steps;
    mpz_class q_lower_bound;  // every admissible q is at least this

    bool all_steps_hold() const {
        for (const auto& s : steps)
            if (!s.holds) return false;
        return true;
    }
};

/// Machine-checkable inequality chain showing that theta_q <= 1/3 with
/// least odd prime divisor l >= 7 forces q beyond the corollary
/// threshold 16 l^4. The chain depends only on ell.
inline Certificate ell_chain_certificate(u64 ell) {
    Certificate cert;
    cert.ell = ell;
    if (ell < 7 || !is_prime(ell)) {
        cert.refusal_reason = "chain applies only for odd prime ell >= 7";
        return cert;
    }

    auto push = [&](std::string desc, mpq_class lhs, mpq_class rhs) {
        lhs.canonicalize();
        rhs.canonicalize();
        cert.steps.push_back({std::move(desc), lhs, rhs, lhs > rhs});
    };

    if (ell == 7) {
        mpq_class chain5 = mpq_class(1, 2) * mpq_class(6, 7) * mpq_class(10, 11) *
                           mpq_class(12, 13) * mpq_class(16, 17);
        push("1/2 (6/7)(10/11)(12/13)(16/17) > 0.338", chain5, mpq_class(338, 1000));
        push("0.338 > 1/3 (so omega_q <= 5 contradicts theta_q <= 1/3)",
             mpq_class(338, 1000), mpq_class(1, 3));
        mpq_class chain6 = chain5 * mpq_class(18, 19);
        push("1/2 (6/7)(10/11)(12/13)(16/17)(18/19) > 0.3206", chain6,
             mpq_class(3206, 10000));
        mpz_class qmin = 2 * 7 * 11 * 13 * 17 * 19 + 1;
        push("2*7*11*13*17*19 + 1 = 646647 > 16*7^4 = 38416", mpq_class(qmin),
             mpq_class(corollary_threshold(7)));
        cert.q_lower_bound = qmin;
    } else {
        // ell = l_r for some r >= 4
        auto ps = odd_primes(512);
        unsigned r = 0;
        for (unsigned i = 0; i < ps.size(); ++i)
            if (ps[i] == ell) { r = i + 1; break; }
        if (r == 0 || r < 4) {
            cert.refusal_reason = "ell is not l_r for r >= 4";
            return cert;
        }
        auto st = prime_seq_stats(r);
        push("2 P_r > 16 ell^4 (r=" + std::to_string(r) + ")", mpq_class(2 * st.P),
             mpq_class(corollary_threshold(ell)));
        push("1/2 Phi_r > 1/3", mpq_class(1, 2) * st.Phi, mpq_class(1, 3));
        cert.q_lower_bound = 2 * st.P;
    }
    cert.granted = cert.all_steps_hold();
    if (!cert.granted) cert.refusal_reason = "a chain inequality failed";
    return cert;
}

/// Profile-level entry point: checks the hypotheses of the large-ell
/// argument, then emits the chain for the least odd prime divisor.
inline Certificate large_ell_certificate(const PrimePowerProfile& pr) {
    Certificate cert;
    if (pr.theta > mpq_class(1, 3)) {
        cert.refusal_reason = "theta_q > 1/3";
        return cert;
    }
    if (!pr.ell) {
        cert.refusal_reason = "q-1 is a power of 2; no odd prime divisor";
        return cert;
    }
    if (*pr.ell < 7) {
        cert.refusal_reason = "chain applies only for ell >= 7";
        cert.ell = *pr.ell;
        return cert;
    }
    return ell_chain_certificate(*pr.ell);
}

}  // namespace nsnp
