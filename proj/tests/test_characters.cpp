#include <doctest.h>

#include "nsnp/characters.hpp"
#include "nsnp/pairs.hpp"

using namespace nsnp;

TEST_CASE("cyclotomic polynomial coefficients") {
    CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic integer identities") {
    // zeta_3 + zeta_3^2 = -1
    CHECK(CyclotomicInt::root_power(3, 1) + CyclotomicInt::root_power(3, 2) ==
          CyclotomicInt::integer(3, -1));
    // zeta_6 * conj(zeta_6) = 1
    auto z6 = CyclotomicInt::root_power(6, 1);
    CHECK(z6 * z6.conjugate() == CyclotomicInt::integer(6, 1));
    // (1 + zeta_3)(1 + zeta_3^2) = 1
    auto a = CyclotomicInt::integer(3, 1) + CyclotomicInt::root_power(3, 1);
    auto b = CyclotomicInt::integer(3, 1) + CyclotomicInt::root_power(3, 2);
    CHECK(a * b == CyclotomicInt::integer(3, 1));
    // full sum of m-th roots vanishes for m prime
    std::vector<long long> all(5, 1);
    CHECK(CyclotomicInt::from_power_counts(5, all) == CyclotomicInt::zero(5));

    CHECK(CyclotomicInt::integer(6, 7).as_integer() == 7);
    CHECK_FALSE(CyclotomicInt::root_power(5, 1).is_rational_integer());
    CHECK_THROWS_AS(CyclotomicInt::root_power(5, 1).as_integer(),
                    std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicInt::zero(5) + CyclotomicInt::zero(7),
                    std::invalid_argument);
}

TEST_CASE("character evaluation") {
    FieldContext f13(13);
    auto lam = lambda_char(f13);
    CHECK(char_eval(lam, f13.zero(), 2) == CyclotomicInt::zero(2));
    // gamma = 2 has index 1, so lambda(gamma) = -1
    CHECK(char_eval(lam, f13.element(2), 2) == CyclotomicInt::integer(2, -1));
    CHECK(char_eval(lam, f13.one(), 2) == CyclotomicInt::integer(2, 1));
    // 4 = gamma^2 is a square
    CHECK(char_eval(lam, f13.element(4), 2) == CyclotomicInt::integer(2, 1));

    CHECK_THROWS_AS(eta_char(f13, 5), std::invalid_argument);
    CHECK_THROWS_AS(char_eval(lam, f13.one(), 3), std::invalid_argument);
}

TEST_CASE("Jacobi sums over F_13 with ell = 3") {
    FieldContext ctx(13);
    CharSumTable table(ctx, 3);
    REQUIRE(table.m() == 6);
    CHECK(table.lambda_minus_one() == +1);  // (13-1)/2 even

    // trivial factor: J(1, chi) = J(chi, 1) = -1
    CHECK(table.jacobi(0, 4) == CyclotomicInt::integer(6, -1));
    CHECK(table.jacobi(1, 0) == CyclotomicInt::integer(6, -1));
    // conjugate pair eta, eta-bar: J = -eta(-1) = -1
    CHECK(table.jacobi(2, 4) == CyclotomicInt::integer(6, -1));
    // generic pair has modulus sqrt(q)
    auto J = table.jacobi(2, 2);
    CHECK(J * J.conjugate() == CyclotomicInt::integer(6, 13));

    // table route agrees with direct summation
    auto eta = eta_char(ctx, 3);
    CHECK(jacobi_sum(eta, eta, 6) == table.jacobi(2, 2));
    auto lam = lambda_char(ctx);
    CHECK(jacobi_sum(lam, eta, 6) == table.jacobi(3, 2));
}

TEST_CASE("block sums S(i,j)") {
    FieldContext f13(13);
    CharSumTable t13(f13, 3);
    CHECK(t13.s_block(0, 0).as_integer() == 13 - 2 + 1);

    FieldContext f7(7);
    CharSumTable t7(f7, 3);
    CHECK(t7.lambda_minus_one() == -1);
    CHECK(t7.s_block(0, 0).as_integer() == 7 - 2 - 1);

    // sum of all blocks is 4 l^2 N_l(q); F_13 has no NS3 pairs
    CyclotomicInt total = CyclotomicInt::zero(6);
    for (u64 i = 0; i < 3; ++i)
        for (u64 j = 0; j < 3; ++j) total += t13.s_block(i, j);
    CHECK(total == CyclotomicInt::zero(6));
    CHECK(t13.count() == 0);
}

TEST_CASE("character-sum counts") {
    CHECK(count_charsum(FieldContext(7), 3) == 0);
    CHECK(count_charsum(FieldContext(31), 3) == 1);
    CHECK(count_charsum(FieldContext(911), 5) == 15);

    FieldContext f13(13);
    CHECK_THROWS_AS(CharSumTable(f13, 4), std::invalid_argument);
    CHECK_THROWS_AS(CharSumTable(f13, 5), std::invalid_argument);
}

TEST_CASE("characteristic function f_l") {
    FieldContext f31(31);
    CHECK(f_ell(f31, 3, f31.zero()) == 0);
    CHECK(f_ell(f31, 3, f31.element(27)) == 1);  // 27 = gamma^3
    long long total = 0;
    for (u64 r = 0; r < 31; ++r) total += f_ell(f31, 3, f31.element(r));
    CHECK(total == 5);  // indices 3, 9, 15, 21, 27

    // brute count through f_l matches the pair enumerator
    long long pairs = 0;
    for (u64 r = 1; r < 31; ++r) {
        u64 s = f31.succ_rank(r);
        if (s != 0 && f_ell(f31, 3, f31.element(r)) &&
            f_ell(f31, 3, f31.element(s)))
            ++pairs;
    }
    CHECK(pairs == static_cast<long long>(enumerate_nsl(f31, 3).count()));
}
