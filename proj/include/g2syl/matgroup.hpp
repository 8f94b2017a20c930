#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "g2syl/ffield.hpp"
#include "g2syl/mat8.hpp"

namespace g2syl {

/// The twelve positive-root elements of so_8 (type D4) in the 8-dimensional
/// natural representation, index 1..12.  Each is E_{ab} - E_{cd} up to sign
/// for suitable positions; these are the building blocks of the G2 root
/// elements below (G2 arises as the triality-fixed subalgebra).
Mat8Q d4_root_matrix(int r);

/// The six positive-root elements e_1, ..., e_6 of the G2 Lie algebra in
/// its 8-dimensional representation (short/long root order:
/// a, b, a+b, 2a+b, 3a+b, 3a+2b).  Exact integer matrices over Q.
Mat8Q g2_root_matrix(int r);

/// One-parameter root subgroup element y_r(t) = exp(t e_r)
///   = I + t e_r + (t^2/2) e_r^2     (e_r^3 = 0 for every root r).
/// Defined over any F_q with q odd.
Mat8 root_gen(const Fq& F, int r, Fq::elem t);

/// Same element over Q with a rational parameter (used for the
/// characteristic-zero structure checks).
Mat8Q root_gen_q(int r, const Rat& t);

/// The Sylow p-subgroup U of G2(q) as 8x8 unitriangular matrices.
///
/// Every element has a unique normal form
///   y(t1,...,t6) = y_2(t2) y_1(t1) y_3(t3) y_4(t4) y_5(t5) y_6(t6),
/// so elements are handled as coordinate 6-tuples; |U| = q^6.  Elements are
/// also indexed 0..q^6-1 lexicographically on (t1,...,t6) with t1 most
/// significant, index 0 being the identity.
class UGroup {
public:
    using Coords = std::array<Fq::elem, 6>;

    explicit UGroup(const Fq& F);

    const Fq& field() const { return *F_; }
    long long order() const { return q6_; }

    /// Matrix of y(t1..t6) from the evaluated polynomial entries.
    Mat8 matrix(const Coords& t) const;
    /// Matrix of y(t1..t6) as the literal ordered product of root generators.
    Mat8 matrix_product(const Coords& t) const;

    /// Coordinates read off a matrix known to lie in U:
    ///   t1 = m12, t2 = m23, t3 = -m13, t4 = m14 - t1 t3,
    ///   t5 = m16 - t1 t4, t6 = m17 + t1 t3^2 - t3 t4.
    Coords coords_of(const Mat8& m) const;

    /// True iff m is the matrix of some y(t1..t6).
    bool contains(const Mat8& m) const;

    long long index_of(const Coords& t) const;
    Coords coords_at(long long index) const;

    Coords mul(const Coords& a, const Coords& b) const;
    Coords inv(const Coords& a) const;
    /// Conjugate g x g^{-1}.
    Coords conj(const Coords& g, const Coords& x) const;
    /// Commutator a^{-1} b^{-1} a b.
    Coords commutator(const Coords& a, const Coords& b) const;

    /// Lazily built per-index caches (only sensible for small q).
    const std::vector<Mat8>& all_matrices() const;
    /// Inverse transposes u^{-T}, the matrices acting in the right dual
    /// action on patterns.
    const std::vector<Mat8>& all_inv_transposes() const;

private:
    const Fq* F_;
    long long q6_;
    mutable std::vector<Mat8> mats_;
    mutable std::vector<Mat8> invT_;
};

/// Closed form for the commutator
///   [y_i(s), y_j(t)] = y_i(s)^{-1} y_j(t)^{-1} y_i(s) y_j(t),  1 <= i < j <= 6:
///   [y1, y2] = y3(-ts) y4(ts^2) y5(-ts^3) y6(2t^2 s^3)
///   [y1, y3] = y4(2st) y5(-3s^2 t) y6(-3st^2)
///   [y1, y4] = y5(3st)
///   [y3, y4] = y6(3st)
///   [y2, y5] = y6(st)
/// and the identity for every other pair.  Valid for every odd p (for p = 3
/// the coefficients 3 vanish).
UGroup::Coords commutator_closed_form(const Fq& F, int i, Fq::elem s, int j,
                                      Fq::elem t);

/// The ambient algebra group: all unitriangular matrices with
///   m45 = 0,  m25 = m24,  m35 = m34,  m46 = m56,  m47 = m57.
/// It contains U, is closed under multiplication, and has order q^23.
namespace g8 {

/// The 23 free coordinate positions (i, j), i < j, of the algebra group.
const std::vector<std::pair<int, int>>& free_positions();

bool contains(const Mat8& m);

/// Elementary matrix I + t E_{ij}.
Mat8 elementary(const Fq& F, int i, int j, Fq::elem t);

/// Generator attached to a free position: the elementary matrix, doubled
/// onto its tied twin for the positions (2,4), (3,4), (5,6), (5,7).
Mat8 generator(const Fq& F, int i, int j, Fq::elem t);

/// Random element (product of generators with random parameters).
Mat8 random_element(const Fq& F, std::mt19937& rng);

}  // namespace g8

}  // namespace g2syl
