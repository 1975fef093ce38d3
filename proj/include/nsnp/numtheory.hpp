#pragma once

// Exact integer and rational arithmetic for the NSNP/NSl toolkit:
// factorization, Euler totient, theta_q, the A^2+3B^2 decomposition,
// and the odd-prime sequence quantities S_r, P_r, Phi_r.
//
// All comparisons against the 1/3 and 1/2 thresholds are exact
// rationals (mpq_class); no floating point is involved in decisions.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nsnp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // primes strictly increasing
};

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

inline u64 totient(const Factorization& f) {
    u64 t = 1;
    for (auto [p, e] : f.factors) {
        t *= p - 1;
        for (unsigned i = 1; i < e; ++i) t *= p;
    }
    return f.n == 1 ? 1 : t;
}

inline u64 totient(u64 n) { return totient(factorize(n)); }

/// First `count` odd primes: 3 = l_1, 5 = l_2, ...
inline std::vector<u64> odd_primes(std::size_t count) {
    std::vector<u64> ps;
    ps.reserve(count);
    for (u64 n = 3; ps.size() < count; n += 2)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

struct PrimePowerProfile {
    u64 q = 0;
    u64 p = 0;
    unsigned n = 0;               // q = p^n
    Factorization qm1;            // factorization of q-1
    mpq_class theta;              // phi(q-1)/(q-1), lowest terms
    std::optional<u64> ell;       // least odd prime dividing q-1
    int lambda_minus_one = 0;     // +1 iff (q-1)/2 even
    unsigned omega = 0;           // distinct prime divisors of q-1
};

inline PrimePowerProfile profile(u64 q) {
    if (q % 2 == 0) throw std::invalid_argument("profile: q must be odd");
    if (q <= 3) throw std::invalid_argument("profile: q must be at least 5");
    Factorization fq = factorize(q);
    if (fq.factors.size() != 1)
        throw std::invalid_argument("profile: q must be a prime power");
    PrimePowerProfile pr;
    pr.q = q;
    pr.p = fq.factors[0].first;
    pr.n = fq.factors[0].second;
    pr.qm1 = factorize(q - 1);
    pr.theta = mpq_class(totient(pr.qm1), q - 1);
    pr.theta.canonicalize();
    for (auto [p, e] : pr.qm1.factors)
        if (p > 2) { pr.ell = p; break; }
    pr.lambda_minus_one = ((q - 1) / 2) % 2 == 0 ? +1 : -1;
    pr.omega = static_cast<unsigned>(pr.qm1.factors.size());
    return pr;
}

enum class ThetaClass { Half, Third, Other };

struct ThetaClassification {
    ThetaClass cls = ThetaClass::Other;
    std::string witness;   // "Fermat prime", "q=9", or "q-1 = 2^a 3^b"
    unsigned a = 0, b = 0; // exponents for the Third case
};

inline bool is_fermat_prime(u64 q) {
    if (!is_prime(q)) return false;
    u64 m = q - 1;
    while (m % 2 == 0) m /= 2;
    return m == 1;
}

/// Classifies theta_q structurally and cross-checks against the exact
/// rational value; a mismatch is an invariant breach.
inline ThetaClassification classify_theta(const PrimePowerProfile& pr) {
    ThetaClassification c;
    bool structural_half = is_fermat_prime(pr.q) || pr.q == 9;
    unsigned a = 0, b = 0;
    u64 m = pr.q - 1;
    while (m % 2 == 0) { m /= 2; ++a; }
    while (m % 3 == 0) { m /= 3; ++b; }
    bool structural_third = (m == 1 && a >= 1 && b >= 1);

    if (structural_half) {
        c.cls = ThetaClass::Half;
        c.witness = pr.q == 9 ? "q=9" : "Fermat prime";
    } else if (structural_third) {
        c.cls = ThetaClass::Third;
        c.witness = "q-1 = 2^" + std::to_string(a) + " 3^" + std::to_string(b);
        c.a = a;
        c.b = b;
    } else {
        c.cls = ThetaClass::Other;
    }

    bool value_half = pr.theta == mpq_class(1, 2);
    bool value_third = pr.theta == mpq_class(1, 3);
    if (value_half != (c.cls == ThetaClass::Half) ||
        value_third != (c.cls == ThetaClass::Third))
        throw std::logic_error("classify_theta: structural witness disagrees "
                               "with exact rational value at q=" +
                               std::to_string(pr.q));
    return c;
}

enum class BSign { Plus, Minus, Undetermined };

struct ABDecomposition {
    i64 q = 0;
    i64 A = 0;
    i64 B_magnitude = 0;
    BSign B_sign = BSign::Undetermined;

    i64 B() const {
        return B_sign == BSign::Minus ? -B_magnitude : B_magnitude;
    }
};

/// q = A^2 + 3 B^2 with A = 1 (mod 3); sign of B fixed by B = -t (mod 3)
/// unless t = 0 (mod 3), in which case the sign is undetermined.
inline ABDecomposition decompose_AB(i64 q, i64 t) {
    if (q <= 0 || q % 3 != 1)
        throw std::invalid_argument("decompose_AB: q must be 1 mod 3");
    for (i64 bm = 0; 3 * bm * bm <= q; ++bm) {
        i64 rest = q - 3 * bm * bm;
        i64 a = static_cast<i64>(std::sqrt(static_cast<double>(rest)));
        while (a * a < rest) ++a;
        while (a * a > rest) --a;
        if (a * a != rest) continue;
        ABDecomposition d;
        d.q = q;
        d.B_magnitude = bm;
        d.A = (a % 3 == 1) ? a : -a;  // a = 0 mod 3 impossible: q = 1 mod 3
        if (bm == 0 || t % 3 == 0) {
            d.B_sign = BSign::Undetermined;
        } else {
            i64 want = ((-t) % 3 + 3) % 3;
            d.B_sign = (bm % 3 == want) ? BSign::Plus
                     : ((-bm % 3 + 3) % 3 == want ? BSign::Minus
                                                  : BSign::Undetermined);
        }
        return d;
    }
    throw std::invalid_argument("decompose_AB: q = " + std::to_string(q) +
                                " is not representable as A^2 + 3B^2");
}

struct PrimeSeqStats {
    unsigned r = 0;
    mpq_class S;    // sum of 1/l_i, i = r..2r
    mpz_class P;    // product of l_i, i = r..2r
    mpq_class Phi;  // product of (1 - 1/l_i), i = r..2r
};

inline PrimeSeqStats prime_seq_stats(unsigned r) {
    if (r < 1) throw std::invalid_argument("prime_seq_stats: r must be >= 1");
    auto ps = odd_primes(2 * r);
    PrimeSeqStats st;
    st.r = r;
    st.S = 0;
    st.P = 1;
    st.Phi = 1;
    for (unsigned i = r; i <= 2 * r; ++i) {
        u64 l = ps[i - 1];  // l_1 = 3 indexing
        st.S += mpq_class(1, l);
        st.P *= l;
        st.Phi *= mpq_class(l - 1, l);
    }
    st.S.canonicalize();
    st.Phi.canonicalize();
    return st;
}

struct MinQTheta {
    u64 ell = 0;
    mpz_class q_leq;               // least q of the construction with theta <= 1/3
    mpz_class q_strict;            // ... with theta < 1/3
    std::vector<u64> primes_leq;   // odd primes used (besides 2)
    std::vector<u64> primes_strict;
};

/// Reconstructs the "min q with theta_q <= 1/3" construction: q - 1 is
/// 2 times the product of successive primes starting at ell, extended
/// until theta drops to (or below) 1/3. Both the strict and non-strict
/// answers are reported; they differ only for ell = 3.
inline MinQTheta min_q_theta(u64 ell) {
    if (ell < 3 || ell % 2 == 0 || !is_prime(ell))
        throw std::invalid_argument("min_q_theta: ell must be an odd prime");
    MinQTheta out;
    out.ell = ell;
    mpz_class prod = 2;
    mpq_class theta(1, 2);
    std::vector<u64> used;
    const mpq_class third(1, 3);
    for (u64 p = ell;; p += 2) {
        if (!is_prime(p)) continue;
        used.push_back(p);
        prod *= p;
        theta *= mpq_class(p - 1, p);
        theta.canonicalize();
        if (out.q_leq == 0 && theta <= third) {
            out.q_leq = prod + 1;
            out.primes_leq = used;
        }
        if (theta < third) {
            out.q_strict = prod + 1;
            out.primes_strict = used;
            break;
        }
    }
    return out;
}

}  // namespace nsnp
