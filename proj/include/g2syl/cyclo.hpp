#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "g2syl/ffield.hpp"
#include "g2syl/rational.hpp"

namespace g2syl {

/// Element of the cyclotomic field Q(zeta_p), zeta_p = exp(2*pi*i/p),
/// stored exactly by its coordinates over the power basis
/// {1, zeta, ..., zeta^{p-2}}.  Powers zeta^{p-1} are rewritten via
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}), which makes the
/// representation canonical: two values are equal iff their coordinate
/// vectors are equal.
class Cyclo {
public:
    Cyclo() : p_(0) {}
    explicit Cyclo(int p) : p_(p), c_(p - 1) {}
    Cyclo(int p, const Rat& rational) : p_(p), c_(p - 1) { c_[0] = rational; }

    static Cyclo zeta_pow(int p, long long e);

    int p() const { return p_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value, assuming is_rational().
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

    /// Adds r * zeta^e (e taken mod p) in place.
    void add_zeta_multiple(long long e, const Rat& r);

    Cyclo conj() const;  // complex conjugation zeta -> zeta^{-1}

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator*(const Rat& r) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::complex<double> to_complex() const;

    /// Human-readable form such as "2", "z^1+z^4" or "-1/3*z^2".
    std::string str() const;

private:
    int p_;
    std::vector<Rat> c_;
    void check_compatible(const Cyclo& o) const;
};

/// theta(x) = zeta_p^{Tr(x)}, the fixed nontrivial additive character of F_q
/// used throughout.
Cyclo theta(const Fq& F, Fq::elem x);

/// Character values restricted to Z[zeta_p]: a vector of p integer counters,
/// entry e counting occurrences of zeta^e.  This is the fast representation
/// used in hot loops (exponential sums, inner products); it is reduced to a
/// canonical Cyclo only at the end.
struct ZSum {
    int p = 0;
    std::vector<long long> cnt;

    ZSum() = default;
    explicit ZSum(int prime) : p(prime), cnt(prime, 0) {}

    void add_zeta(int e, long long m = 1) { cnt[e] += m; }
    Cyclo to_cyclo() const;
    bool is_zero_value() const { return to_cyclo().is_zero(); }
};

}  // namespace g2syl
