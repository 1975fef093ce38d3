#pragma once

// Exact arithmetic in Z[zeta_m]: integer coefficient vectors reduced
// modulo the m-th cyclotomic polynomial. Carrier for character values
// and Jacobi sums; no floating point anywhere.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsnp {

/// Coefficients of the m-th cyclotomic polynomial (constant term first).
inline const std::vector<long long>& cyclotomic_poly(unsigned m) {
    static std::map<unsigned, std::vector<long long>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by Phi_d for every proper divisor d | m
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact polynomial division (phi_d is monic)
        std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<long long> rem = num;
        for (std::size_t i = quot.size(); i-- > 0;) {
            long long c = rem[i + phi_d.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        num = quot;
    }
    return cache.emplace(m, std::move(num)).first->second;
}

class CyclotomicInt {
public:
    explicit CyclotomicInt(unsigned m)
        : m_(m), c_(cyclotomic_poly(m).size() - 1, 0) {}

    static CyclotomicInt zero(unsigned m) { return CyclotomicInt(m); }

    static CyclotomicInt integer(unsigned m, long long v) {
        CyclotomicInt x(m);
        x.c_[0] = v;
        return x;
    }

    /// zeta_m^e as a reduced element
    static CyclotomicInt root_power(unsigned m, unsigned e) {
        std::vector<long long> counts(m, 0);
        counts[e % m] = 1;
        return from_power_counts(m, counts);
    }

    /// sum of counts[e] * zeta_m^e, reduced
    static CyclotomicInt from_power_counts(unsigned m,
                                           const std::vector<long long>& counts) {
        std::vector<long long> poly(counts.begin(), counts.end());
        reduce(m, poly);
        CyclotomicInt x(m);
        for (std::size_t i = 0; i < x.c_.size() && i < poly.size(); ++i)
            x.c_[i] = poly[i];
        return x;
    }

    unsigned order() const { return m_; }
    const std::vector<long long>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const {
        check(o);
        CyclotomicInt r(m_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    CyclotomicInt operator-(const CyclotomicInt& o) const {
        check(o);
        CyclotomicInt r(m_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    CyclotomicInt operator-() const {
        CyclotomicInt r(m_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    CyclotomicInt operator*(const CyclotomicInt& o) const {
        check(o);
        std::vector<long long> prod(2 * c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < c_.size(); ++j)
                prod[i + j] += c_[i] * o.c_[j];
        }
        reduce(m_, prod);
        CyclotomicInt r(m_);
        for (std::size_t i = 0; i < r.c_.size() && i < prod.size(); ++i)
            r.c_[i] = prod[i];
        return r;
    }

    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }

    bool operator==(const CyclotomicInt& o) const {
        return m_ == o.m_ && c_ == o.c_;
    }

    /// sigma_{-1}: zeta -> zeta^{-1}
    CyclotomicInt conjugate() const {
        std::vector<long long> counts(m_, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            counts[(m_ - i) % m_] += c_[i];
        return from_power_counts(m_, counts);
    }

    bool is_rational_integer() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    long long as_integer() const {
        if (!is_rational_integer())
            throw std::invalid_argument("as_integer: value is not a rational integer");
        return c_[0];
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + "]@z" + std::to_string(m_);
    }

private:
    void check(const CyclotomicInt& o) const {
        if (m_ != o.m_)
            throw std::invalid_argument("cyclotomic arithmetic: mixed orders " +
                                        std::to_string(m_) + " and " +
                                        std::to_string(o.m_));
    }

    static void reduce(unsigned m, std::vector<long long>& poly) {
        const auto& phi = cyclotomic_poly(m);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = poly.size(); i-- > deg;) {
            long long c = poly[i];
            if (c == 0) continue;
            poly[i] = 0;
            for (std::size_t j = 0; j < deg; ++j)
                poly[i - deg + j] -= c * phi[j];
        }
    }

    unsigned m_;
    std::vector<long long> c_;
};

}  // namespace nsnp
