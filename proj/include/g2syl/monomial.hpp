#pragma once

#include <array>
#include <cstdint>

#include "g2syl/cyclo.hpp"
#include "g2syl/ffield.hpp"
#include "g2syl/matgroup.hpp"

namespace g2syl {

/// A pattern: an element of the 6-dimensional coefficient space V spanned by
///   e12, e13, e14+e15, e16, e17, e23
/// (the positions (1,4) and (1,5) are tied to a single slot).  Stored as the
/// six coefficients in the order [A12, A13, A15, A16, A17, A23], where A15
/// denotes the coefficient of the tied basis vector e14+e15.
struct Pattern {
    std::array<Fq::elem, 6> v{};

    Fq::elem a12() const { return v[0]; }
    Fq::elem a13() const { return v[1]; }
    Fq::elem a15() const { return v[2]; }
    Fq::elem a16() const { return v[3]; }
    Fq::elem a17() const { return v[4]; }
    Fq::elem a23() const { return v[5]; }

    friend bool operator==(const Pattern& x, const Pattern& y) { return x.v == y.v; }
    friend bool operator!=(const Pattern& x, const Pattern& y) { return !(x.v == y.v); }
    friend bool operator<(const Pattern& x, const Pattern& y) { return x.v < y.v; }
};

/// Pattern index 0..q^6-1 (base-q digits in storage order), for hashing and
/// array-based bookkeeping.
long long pattern_index(const Fq& F, const Pattern& A);
Pattern pattern_at(const Fq& F, long long index);

/// Orthogonal projection pi of an 8x8 matrix onto the pattern space:
/// entries at the free positions are copied and the tied slot receives
/// (m14 + m15)/2.
Pattern project(const Fq& F, const Mat8& m);

/// The matrix with the entries of A at its positions (rows 1 and 2 only).
Mat8 pattern_matrix(const Fq& F, const Pattern& A);

/// 1-cocycle f: U -> V, the projection of the group element's matrix.  On U
/// the tied positions (1,4), (1,5) carry equal entries, so no division
/// actually occurs.
Pattern cocycle(const Fq& F, const Mat8& u);

/// Trace form kappa(A, B) = tr(A^T B) on pattern space; the tied slot
/// contributes twice.
Fq::elem kappa(const Fq& F, const Pattern& A, const Pattern& B);

/// Right dual action A.g = pi(A g^{-T}), given the precomputed g^{-T}.
Pattern act_dot_pre(const Fq& F, const Pattern& A, const Mat8& g_inv_T);

/// Right dual action computing g^{-T} on the fly (g unipotent).
Pattern act_dot(const Fq& F, const Pattern& A, const Mat8& g);

/// Plain right action A o g = pi(A g).
Pattern act_circ(const Fq& F, const Pattern& A, const Mat8& g);

/// Left dual action u.A = pi(u^{-T} A) for u in U with coordinates t:
/// only t1 acts, sending A23 to A23 - t1 A13.
Pattern act_left(const Fq& F, const UGroup::Coords& u, const Pattern& A);

/// Exponent e in 0..p-1 with chi_A(u) = zeta_p^e, namely Tr(kappa(A, f(u)))
/// where fu is the precomputed pattern of u.
int chi_exponent(const Fq& F, const Pattern& A, const Pattern& fu);

/// chi_A(u) = theta(kappa(A, f(u))) as an exact cyclotomic value.
Cyclo chi_value(const Fq& F, const Pattern& A, const Mat8& u);

}  // namespace g2syl
