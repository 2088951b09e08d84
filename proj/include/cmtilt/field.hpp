// Exact base fields: arbitrary-precision rationals and prime fields GF(p).
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cmtilt {

using Rng = std::mt19937_64;

/// Field of rational numbers with GMP-backed exact arithmetic.
/// Elements are always kept in lowest terms with positive denominator
/// (mpq canonicalization).
struct RationalField {
    using Elt = boost::multiprecision::mpq_rational;

    static constexpr bool is_prime = false;

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    Elt from_int(long n) const { return Elt(n); }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return Elt(1) / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    unsigned long characteristic() const { return 0; }

    // Small random element, suitable for seeded generic-position searches.
    Elt random(Rng& rng) const {
        std::uniform_int_distribution<long> d(-4, 4);
        return Elt(d(rng));
    }

    std::string to_string(const Elt& a) const { return a.str(); }

    Elt parse(const std::string& s) const { return Elt(s); }

    bool operator==(const RationalField&) const { return true; }
};

/// Prime field GF(p), p an odd or even prime below 2^31.
/// Elements are canonical representatives in [0, p).
struct PrimeField {
    using Elt = std::uint64_t;

    static constexpr bool is_prime = true;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("prime out of range");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("modulus not prime");
    }

    Elt zero() const { return 0; }
    Elt one() const { return p == 1 ? 0 : 1; }
    Elt from_int(long n) const {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elt>(r);
    }

    Elt add(Elt a, Elt b) const { Elt s = a + b; return s >= p ? s - p : s; }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p - b; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt inv(Elt a) const {
        if (a == 0) throw std::domain_error("division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                     nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elt>(t);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }

    unsigned long characteristic() const { return p; }

    Elt random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        return d(rng);
    }

    Elt pow(Elt a, std::uint64_t e) const {
        Elt r = one(), base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(Elt a) const { return std::to_string(a); }

    Elt parse(const std::string& s) const {
        long v = std::stol(s);
        return from_int(v);
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

}  // namespace cmtilt
