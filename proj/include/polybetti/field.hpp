#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace polybetti {

// Exact rationals.  Stateless field object over mpq_class elements.
struct RationalField {
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long v) { return Elem(v); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) { return 1 / a; }
    static std::string name() { return "QQ"; }
};

// Prime field GF(p), p an odd prime below 2^31.  Elements stored reduced.
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime = 32003) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

} // namespace polybetti
