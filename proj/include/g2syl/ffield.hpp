#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2syl {

/// The finite field F_q, q = p^k with p an odd prime and 1 <= k <= 4.
///
/// Elements are represented by their index in 0..q-1: the element with
/// polynomial coordinates (c_0, ..., c_{k-1}) over F_p has index
/// sum_i c_i * p^i.  Index 0 is the zero element and index 1 is the
/// multiplicative identity.  Arithmetic is table-driven, so all operations
/// after construction are O(1) lookups.
///
/// For k > 1 the field is constructed as F_p[x]/(m(x)) where m is the
/// irreducible monic polynomial of degree k whose non-leading coefficient
/// vector (c_0, ..., c_{k-1}) is smallest in the ordering induced by the
/// index encoding above (equivalently: lexicographically least trying c_0
/// fastest).  This makes the construction deterministic; for example F_9
/// uses x^2 + 1.
class Fq {
public:
    using elem = std::uint16_t;

    Fq(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    /// Element of the prime subfield from an integer (reduced mod p).
    elem from_int(long long n) const;

    elem add(elem a, elem b) const { return add_[a * q_ + b]; }
    elem sub(elem a, elem b) const { return add_[a * q_ + neg_[b]]; }
    elem neg(elem a) const { return neg_[a]; }
    elem mul(elem a, elem b) const { return mul_[a * q_ + b]; }
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, long long e) const;

    /// Absolute trace down to F_p, returned as an integer in 0..p-1.
    /// Tr(a) = a + a^p + ... + a^{p^{k-1}}; for k = 1 this is the identity.
    int trace(elem a) const { return trace_[a]; }

    /// Polynomial coordinates (c_0, ..., c_{k-1}) of an element.
    std::vector<int> coords(elem a) const;

    /// The modulus m(x) as its k+1 coefficients (c_0, ..., c_{k-1}, 1).
    const std::vector<int>& modulus() const { return modulus_; }

    std::string elem_str(elem a) const;

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<elem> add_;
    std::vector<elem> mul_;
    std::vector<elem> neg_;
    std::vector<elem> inv_;
    std::vector<std::uint8_t> trace_;

    void build_tables();
};

}  // namespace g2syl
