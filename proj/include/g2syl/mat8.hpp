#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "g2syl/ffield.hpp"
#include "g2syl/rational.hpp"

namespace g2syl {

/// Dense 8x8 matrix over F_q.  Entries are field element indices; access is
/// 1-indexed to match the usual matrix-entry notation m_{ij}.
struct Mat8 {
    std::array<Fq::elem, 64> a{};

    Fq::elem& at(int i, int j) { return a[size_t(i - 1) * 8 + (j - 1)]; }
    Fq::elem at(int i, int j) const { return a[size_t(i - 1) * 8 + (j - 1)]; }

    static Mat8 identity();

    friend bool operator==(const Mat8& x, const Mat8& y) { return x.a == y.a; }
    friend bool operator!=(const Mat8& x, const Mat8& y) { return !(x.a == y.a); }
};

Mat8 mul(const Fq& F, const Mat8& x, const Mat8& y);
Mat8 transpose(const Mat8& x);

/// Inverse of a unipotent (upper or lower unitriangular) matrix via the
/// nilpotent Neumann series (M - I)^8 = 0.
Mat8 inverse_unipotent(const Fq& F, const Mat8& m);

bool is_upper_unitriangular(const Mat8& m);

std::string mat_str(const Fq& F, const Mat8& m);

/// Dense 8x8 matrix over Q, used for the characteristic-zero Lie-theoretic
/// computations (root element matrices, structure constants).
struct Mat8Q {
    std::array<Rat, 64> a{};

    Rat& at(int i, int j) { return a[size_t(i - 1) * 8 + (j - 1)]; }
    const Rat& at(int i, int j) const { return a[size_t(i - 1) * 8 + (j - 1)]; }

    static Mat8Q identity();
    static Mat8Q zero() { return Mat8Q{}; }

    friend bool operator==(const Mat8Q& x, const Mat8Q& y) { return x.a == y.a; }
    friend bool operator!=(const Mat8Q& x, const Mat8Q& y) { return !(x.a == y.a); }

    friend Mat8Q operator+(const Mat8Q& x, const Mat8Q& y);
    friend Mat8Q operator-(const Mat8Q& x, const Mat8Q& y);
    friend Mat8Q operator*(const Mat8Q& x, const Mat8Q& y);
    Mat8Q operator*(const Rat& r) const;
};

/// Lie bracket [x, y] = xy - yx.
Mat8Q bracket(const Mat8Q& x, const Mat8Q& y);

}  // namespace g2syl
