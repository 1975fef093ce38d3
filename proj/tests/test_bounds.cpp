#include <doctest.h>

#include "nsnp/bounds.hpp"

using namespace nsnp;

namespace {

// linear-scan oracle: least Q such that the numerator is positive for
// every q >= Q (searched up to a cap well past the root)
mpz_class scan_threshold(u64 ell, int lam, u64 cap = 20000) {
    mpz_class b = 4 * mpz_class(ell - 1) * mpz_class(ell - 1);
    mpz_class c = mpz_class(ell - 2) * (1 + lam) + 3;
    mpz_class last_bad = 0;
    for (u64 q = 1; q <= cap; ++q)
        if (!detail::numerator_positive(q, b, c)) last_bad = q;
    return last_bad + 1;
}

}  // namespace

TEST_CASE("exact positivity of the bound numerator") {
    // ell = 3, lambda(-1) = +1: b = 16, c = 5
    CHECK(detail::numerator_positive(269, 16, 5));
    CHECK(detail::numerator_positive(266, 16, 5));
    CHECK_FALSE(detail::numerator_positive(265, 16, 5));
    CHECK_FALSE(detail::numerator_positive(241, 16, 5));
    // perfect-square boundary: a^2 == b^2 q is not positive
    CHECK_FALSE(detail::numerator_positive(mpz_class(4), mpz_class(1),
                                           mpz_class(2)));
}

TEST_CASE("thresholds") {
    CHECK(corollary_threshold(3) == 1296);
    CHECK(corollary_threshold(5) == 10000);
    CHECK(corollary_threshold(7) == 38416);
    CHECK(corollary_threshold(11) == 234256);
    CHECK(corollary_threshold(13) == 456976);
    CHECK(corollary_threshold(17) == 1336336);

    CHECK(theorem_threshold(3, +1) == 266);
    CHECK(theorem_threshold(5, +1) == 4114);
    CHECK(theorem_threshold(3, +1) == scan_threshold(3, +1));
    CHECK(theorem_threshold(3, -1) == scan_threshold(3, -1));
    CHECK(theorem_threshold(5, +1) == scan_threshold(5, +1));
    CHECK(theorem_threshold(5, -1) == scan_threshold(5, -1));
    CHECK(theorem_threshold(3, -1) <= theorem_threshold(3, +1));

    // the reported value is the exact cutover
    for (u64 ell : {3, 5, 7, 11}) {
        mpz_class t = theorem_threshold(ell, +1);
        mpz_class b = 4 * mpz_class(ell - 1) * mpz_class(ell - 1);
        mpz_class c = mpz_class(ell - 2) * 2 + 3;
        CHECK(detail::numerator_positive(t, b, c));
        CHECK_FALSE(detail::numerator_positive(t - 1, b, c));
    }

    CHECK_THROWS_AS(theorem_threshold(4), std::invalid_argument);
}

TEST_CASE("lower_bound reports") {
    auto bd = lower_bound(4117, 3);
    CHECK(bd.lambda_minus_one == +1);
    CHECK(bd.sqrt_coeff == 16);
    CHECK(bd.const_term == 5);
    CHECK(bd.denom == 36);
    CHECK(bd.positive);
    CHECK(bd.corollary_applies);
    CHECK(bd.at_most(86));
    CHECK_FALSE(bd.at_most(85));

    auto bd911 = lower_bound(911, 5);
    CHECK(bd911.lambda_minus_one == -1);
    CHECK_FALSE(bd911.positive);  // below the threshold, bound is negative
    CHECK(bd911.at_most(15));
    CHECK(bd911.at_most(0));

    auto bd7 = lower_bound(7, 3);
    CHECK_FALSE(bd7.positive);

    CHECK_THROWS_AS(lower_bound(29, 3), std::invalid_argument);
}

TEST_CASE("certificate chain for ell = 7") {
    auto cert = ell_chain_certificate(7);
    CHECK(cert.granted);
    CHECK(cert.refusal_reason.empty());
    CHECK(cert.q_lower_bound == 646647);
    CHECK(cert.steps.size() == 4);
    for (const auto& s : cert.steps) CHECK(s.holds);
    CHECK(cert.q_lower_bound > corollary_threshold(7));
}

TEST_CASE("certificate chain for larger ell") {
    for (u64 ell : {11, 13, 17, 19}) {
        auto cert = ell_chain_certificate(ell);
        CHECK(cert.granted);
        CHECK(cert.q_lower_bound > corollary_threshold(ell));
    }
    CHECK(ell_chain_certificate(11).q_lower_bound ==
          mpz_class(2) * 11 * 13 * 17 * 19 * 23);
}

TEST_CASE("certificate refusals") {
    CHECK_FALSE(ell_chain_certificate(5).granted);
    CHECK(ell_chain_certificate(5).refusal_reason ==
          "chain applies only for odd prime ell >= 7");
    CHECK_FALSE(ell_chain_certificate(9).granted);

    CHECK(large_ell_certificate(profile(29)).refusal_reason == "theta_q > 1/3");
    CHECK(large_ell_certificate(profile(9)).refusal_reason == "theta_q > 1/3");
    // theta_8191 is small but the least odd prime divisor is 3
    auto c8191 = large_ell_certificate(profile(8191));
    CHECK_FALSE(c8191.granted);
    CHECK(c8191.refusal_reason == "chain applies only for ell >= 7");
}
