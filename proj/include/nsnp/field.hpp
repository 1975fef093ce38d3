#pragma once

// Construction of F_q for odd prime powers: prime fields and polynomial
// extensions, element arithmetic, a canonical primitive element gamma,
// and a full index (discrete log) table built in O(q).
//
// Elements are coefficient vectors mod p, constant term first, and are
// enumerated by rank(a) = sum coeffs[i] * p^i. The canonical gamma is
// the least-rank primitive element, which reproduces the least positive
// primitive root for prime q.

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsnp/numtheory.hpp"

namespace nsnp {

struct FieldElement {
    std::vector<std::uint32_t> c;  // residues mod p, constant term first

    bool operator==(const FieldElement&) const = default;
};

struct FieldSpec {
    u64 p = 0;
    unsigned n = 1;
    std::vector<std::uint32_t> modulus;  // monic, degree n, constant first
};

class FieldContext {
public:
    static constexpr std::uint32_t kNoIndex =
        std::numeric_limits<std::uint32_t>::max();

    explicit FieldContext(u64 q) {
        auto pr = profile(q);  // rejects even q, non prime powers, q <= 3
        q_ = q;
        p_ = pr.p;
        n_ = pr.n;
        qm1_primes_.clear();
        for (auto [pp, e] : pr.qm1.factors) qm1_primes_.push_back(pp);
        choose_modulus();
        find_gamma();
        build_tables();
    }

    u64 q() const { return q_; }
    u64 p() const { return p_; }
    unsigned degree() const { return n_; }
    const FieldSpec& spec() const { return spec_; }
    /// d such that the modulus is x^2 - d (quadratic extensions only).
    std::optional<u64> sqrt_d() const { return d_; }

    FieldElement gamma() const { return element(gamma_rank_); }
    u64 gamma_rank() const { return gamma_rank_; }

    u64 rank(const FieldElement& a) const {
        u64 r = 0, pw = 1;
        for (unsigned i = 0; i < n_; ++i) { r += a.c[i] * pw; pw *= p_; }
        return r;
    }

    FieldElement element(u64 rank) const {
        FieldElement a;
        a.c.resize(n_);
        for (unsigned i = 0; i < n_; ++i) { a.c[i] = rank % p_; rank /= p_; }
        return a;
    }

    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // --- arithmetic ---

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        FieldElement r;
        r.c.resize(n_);
        for (unsigned i = 0; i < n_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
        return r;
    }

    FieldElement negate(const FieldElement& a) const {
        FieldElement r;
        r.c.resize(n_);
        for (unsigned i = 0; i < n_; ++i)
            r.c[i] = a.c[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - a.c[i]);
        return r;
    }

    FieldElement subtract(const FieldElement& a, const FieldElement& b) const {
        return add(a, negate(b));
    }

    FieldElement multiply(const FieldElement& a, const FieldElement& b) const {
        std::vector<u64> prod(2 * n_ - 1, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (a.c[i] == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                prod[i + j] += static_cast<u64>(a.c[i]) * b.c[j];
        }
        // reduce mod the monic modulus
        for (unsigned d = 2 * n_ - 2; d >= n_ && d < prod.size(); --d) {
            u64 lead = prod[d] % p_;
            if (lead == 0) continue;
            for (unsigned i = 0; i < n_; ++i) {
                u64 m = (lead * (p_ - spec_.modulus[i] % p_)) % p_;
                prod[d - n_ + i] = (prod[d - n_ + i] + m) % (p_ * p_);
            }
            prod[d] = 0;
        }
        FieldElement r;
        r.c.resize(n_);
        for (unsigned i = 0; i < n_; ++i)
            r.c[i] = static_cast<std::uint32_t>(prod[i] % p_);
        return r;
    }

    FieldElement power(FieldElement a, u64 e) const {
        FieldElement r = one();
        while (e > 0) {
            if (e & 1) r = multiply(r, a);
            a = multiply(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement invert(const FieldElement& a) const {
        u64 r = rank(a);
        if (r == 0) throw std::invalid_argument("invert: zero element");
        return element(pow_table_[(q_ - 1 - index_table_[r]) % (q_ - 1)]);
    }

    // --- index table ---

    u64 index_of(const FieldElement& a) const { return index_of_rank(rank(a)); }

    u64 index_of_rank(u64 r) const {
        if (r == 0) throw std::invalid_argument("index_of: zero element");
        return index_table_[r];
    }

    /// rank of gamma^k
    u64 rank_of_power(u64 k) const { return pow_table_[k % (q_ - 1)]; }

    // --- power classes (all false on zero, matching lambda(0) = 0) ---

    bool is_square(u64 rank) const {
        return rank != 0 && index_table_[rank] % 2 == 0;
    }
    bool is_nth_power(u64 rank, u64 ell) const {
        return rank != 0 && index_table_[rank] % ell == 0;
    }
    bool is_primitive(u64 rank) const {
        return rank != 0 && std::gcd(static_cast<u64>(index_table_[rank]), q_ - 1) == 1;
    }
    bool is_nsl(u64 rank, u64 ell) const {
        if (rank == 0) return false;
        u64 k = index_table_[rank];
        return k % 2 == 1 && k % ell == 0;
    }
    bool is_nsnp(u64 rank) const {
        if (rank == 0) return false;
        u64 k = index_table_[rank];
        return k % 2 == 1 && std::gcd(k, q_ - 1) > 1;
    }

    /// residue of the index mod d (d must divide q-1)
    u64 power_class(u64 rank, u64 d) const {
        if (rank == 0) throw std::invalid_argument("power_class: zero element");
        if ((q_ - 1) % d != 0)
            throw std::invalid_argument("power_class: d does not divide q-1");
        return index_table_[rank] % d;
    }

    /// rank of a+1, computed digitwise (only the constant digit moves)
    u64 succ_rank(u64 rank) const {
        u64 c0 = rank % p_;
        return c0 + 1 == p_ ? rank - c0 : rank + 1;
    }

    /// rank of -a
    u64 neg_rank(u64 rank) const {
        u64 r = 0, pw = 1;
        for (unsigned i = 0; i < n_; ++i) {
            u64 d = rank % p_;
            r += (d == 0 ? 0 : p_ - d) * pw;
            rank /= p_;
            pw *= p_;
        }
        return r;
    }

    // --- rendering ---

    std::string render(const FieldElement& a) const {
        if (n_ == 1) return std::to_string(a.c[0]);
        if (n_ == 2 && d_) {
            std::string s;
            if (a.c[0] != 0 || a.c[1] == 0) s = std::to_string(a.c[0]);
            if (a.c[1] != 0) {
                if (!s.empty()) s += "+";
                if (a.c[1] != 1) s += std::to_string(a.c[1]);
                s += "√" + std::to_string(*d_);
            }
            return s;
        }
        std::string s = "[";
        for (unsigned i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(a.c[i]);
        }
        return s + "]";
    }

    std::string render_rank(u64 r) const { return render(element(r)); }

    /// Inverse of render for prime fields and "a+b√d" quadratics.
    FieldElement parse(const std::string& s) const {
        static const std::string kRoot = "√";
        FieldElement a = zero();
        std::size_t pos = 0;
        auto read_part = [&](const std::string& part) {
            auto rp = part.find(kRoot);
            if (rp == std::string::npos) {
                a.c[0] = static_cast<std::uint32_t>(std::stoull(part) % p_);
            } else {
                if (n_ != 2 || !d_)
                    throw std::invalid_argument("parse: radical in a non-quadratic field: " + s);
                u64 d = std::stoull(part.substr(rp + kRoot.size()));
                if (d != *d_)
                    throw std::invalid_argument("parse: radicand " + std::to_string(d) +
                                                " does not match modulus x^2-" +
                                                std::to_string(*d_));
                std::string coef = part.substr(0, rp);
                a.c[1] = coef.empty()
                             ? 1
                             : static_cast<std::uint32_t>(std::stoull(coef) % p_);
            }
        };
        while (pos != std::string::npos) {
            auto plus = s.find('+', pos);
            read_part(plus == std::string::npos ? s.substr(pos)
                                                : s.substr(pos, plus - pos));
            pos = plus == std::string::npos ? plus : plus + 1;
        }
        return a;
    }

private:
    void choose_modulus() {
        spec_.p = p_;
        spec_.n = n_;
        if (n_ == 1) {
            spec_.modulus = {0, 1};  // placeholder x
            return;
        }
        if (n_ == 2) {
            // x^2 - d with d the least positive quadratic non-residue mod p
            for (u64 d = 2; d < p_; ++d) {
                bool residue = false;
                for (u64 x = 1; x <= p_ / 2 && !residue; ++x)
                    if ((x * x) % p_ == d) residue = true;
                if (!residue) {
                    d_ = d;
                    spec_.modulus = {static_cast<std::uint32_t>(p_ - d), 0, 1};
                    return;
                }
            }
            throw std::logic_error("no quadratic non-residue found");
        }
        // lexicographically least monic irreducible, constant term first
        std::vector<std::uint32_t> cand(n_ + 1, 0);
        cand[n_] = 1;
        while (true) {
            if (poly_irreducible(cand)) {
                spec_.modulus = cand;
                return;
            }
            // odometer: last free coordinate fastest keeps lex order on (c0..c_{n-1})
            int i = static_cast<int>(n_) - 1;
            while (i >= 0 && cand[i] + 1 == p_) cand[i--] = 0;
            if (i < 0) throw std::logic_error("no irreducible polynomial found");
            ++cand[i];
        }
    }

    // polynomial helpers over F_p for irreducibility testing
    using Poly = std::vector<u64>;

    Poly poly_mulmod(const Poly& a, const Poly& b,
                     const std::vector<std::uint32_t>& mod) const {
        std::size_t n = mod.size() - 1;
        Poly prod(2 * n - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        for (std::size_t d = prod.size() - 1; d >= n; --d) {
            u64 lead = prod[d];
            if (lead) {
                for (std::size_t i = 0; i < n; ++i)
                    prod[d - n + i] =
                        (prod[d - n + i] + lead * (p_ - mod[i] % p_)) % p_;
                prod[d] = 0;
            }
            if (d == n) break;
        }
        prod.resize(n);
        return prod;
    }

    Poly poly_xpow(u64 e, const std::vector<std::uint32_t>& mod) const {
        std::size_t n = mod.size() - 1;
        Poly result(n, 0), base(n, 0);
        result[0] = 1;
        if (n == 1) {
            // x reduces to a constant; not used (n >= 3 here)
            base[0] = (p_ - mod[0] % p_) % p_;
        } else {
            base[1] = 1;
        }
        while (e > 0) {
            if (e & 1) result = poly_mulmod(result, base, mod);
            base = poly_mulmod(base, base, mod);
            e >>= 1;
        }
        return result;
    }

    static bool poly_is_x(const Poly& f) {
        if (f.size() < 2 || f[0] != 0 || f[1] != 1) return false;
        for (std::size_t i = 2; i < f.size(); ++i)
            if (f[i] != 0) return false;
        return true;
    }

    Poly poly_gcd(Poly a, Poly b) const {
        auto deg = [](const Poly& f) {
            for (std::size_t i = f.size(); i-- > 0;)
                if (f[i]) return static_cast<long>(i);
            return -1L;
        };
        while (deg(b) >= 0) {
            long da = deg(a), db = deg(b);
            if (da < db) { std::swap(a, b); continue; }
            // a -= lead(a)/lead(b) * x^(da-db) * b
            u64 inv = 1, lb = b[db];
            for (u64 x = 1; x < p_; ++x)
                if ((lb * x) % p_ == 1) { inv = x; break; }
            u64 factor = (a[da] * inv) % p_;
            for (long i = 0; i <= db; ++i)
                a[da - db + i] =
                    (a[da - db + i] + factor * (p_ - b[i] % p_)) % p_;
        }
        return a;
    }

    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        unsigned n = static_cast<unsigned>(f.size()) - 1;
        // x^(p^n) == x mod f, via n successive Frobenius powers
        Poly xp = {0, 1};
        for (unsigned i = 0; i < n; ++i) {
            // apply Frobenius: raise to p-th power each round
            Poly acc(n, 0);
            acc[0] = 1;
            Poly base = xp;
            u64 e = p_;
            while (e > 0) {
                if (e & 1) acc = poly_mulmod(acc, base, f);
                base = poly_mulmod(base, base, f);
                e >>= 1;
            }
            xp = acc;
            xp.resize(n, 0);
        }
        if (!poly_is_x(xp)) return false;
        // gcd(x^(p^(n/r)) - x, f) must be constant for prime r | n
        for (auto [r, e] : factorize(n).factors) {
            u64 pk = 1;
            for (unsigned i = 0; i < n / r; ++i) pk *= p_;
            Poly g = poly_xpow(pk, f);
            g.resize(n, 0);
            if (g.size() < 2) g.resize(2, 0);
            g[1] = (g[1] + p_ - 1) % p_;  // subtract x
            Poly ff(f.begin(), f.end());
            Poly gc = poly_gcd(ff, g);
            long dg = -1;
            for (std::size_t i = gc.size(); i-- > 0;)
                if (gc[i]) { dg = static_cast<long>(i); break; }
            if (dg > 0) return false;
        }
        return true;
    }

    void find_gamma() {
        for (u64 r = 2; r < q_; ++r) {
            FieldElement a = element(r);
            bool primitive = true;
            for (u64 pp : qm1_primes_) {
                if (rank(power(a, (q_ - 1) / pp)) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) { gamma_rank_ = r; return; }
        }
        throw std::logic_error("no primitive element found");
    }

    void build_tables() {
        pow_table_.assign(q_ - 1, 0);
        index_table_.assign(q_, kNoIndex);
        FieldElement g = element(gamma_rank_);
        FieldElement cur = one();
        for (u64 k = 0; k < q_ - 1; ++k) {
            u64 r = rank(cur);
            pow_table_[k] = static_cast<std::uint32_t>(r);
            if (index_table_[r] != kNoIndex)
                throw std::logic_error("gamma is not primitive");
            index_table_[r] = static_cast<std::uint32_t>(k);
            cur = multiply(cur, g);
        }
    }

    u64 q_ = 0, p_ = 0;
    unsigned n_ = 1;
    std::optional<u64> d_;
    FieldSpec spec_;
    u64 gamma_rank_ = 0;
    std::vector<u64> qm1_primes_;
    std::vector<std::uint32_t> pow_table_;
    std::vector<std::uint32_t> index_table_;
};

}  // namespace nsnp
