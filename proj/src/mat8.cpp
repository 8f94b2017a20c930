#include "g2syl/mat8.hpp"

#include <sstream>

namespace g2syl {

Mat8 Mat8::identity() {
    Mat8 m;
    for (int i = 1; i <= 8; ++i) m.at(i, i) = 1;
    return m;
}

Mat8 mul(const Fq& F, const Mat8& x, const Mat8& y) {
    Mat8 r;
    for (int i = 0; i < 8; ++i) {
        for (int kk = 0; kk < 8; ++kk) {
            Fq::elem xv = x.a[size_t(i) * 8 + kk];
            if (xv == 0) continue;
            for (int j = 0; j < 8; ++j) {
                Fq::elem yv = y.a[size_t(kk) * 8 + j];
                if (yv == 0) continue;
                auto& dst = r.a[size_t(i) * 8 + j];
                dst = F.add(dst, F.mul(xv, yv));
            }
        }
    }
    return r;
}

Mat8 transpose(const Mat8& x) {
    Mat8 r;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat8 inverse_unipotent(const Fq& F, const Mat8& m) {
    // N = M - I is nilpotent, so M^{-1} = I - N + N^2 - ... - N^7.
    Mat8 n = m;
    for (int i = 1; i <= 8; ++i) n.at(i, i) = F.sub(n.at(i, i), 1);
    Mat8 acc = Mat8::identity();
    Mat8 pw = Mat8::identity();
    int sign = -1;
    for (int k = 1; k < 8; ++k) {
        pw = mul(F, pw, n);
        bool zero = true;
        for (auto v : pw.a)
            if (v != 0) { zero = false; break; }
        if (zero) break;
        for (size_t idx = 0; idx < 64; ++idx)
            acc.a[idx] = sign < 0 ? F.sub(acc.a[idx], pw.a[idx])
                                  : F.add(acc.a[idx], pw.a[idx]);
        sign = -sign;
    }
    return acc;
}

bool is_upper_unitriangular(const Mat8& m) {
    for (int i = 1; i <= 8; ++i) {
        if (m.at(i, i) != 1) return false;
        for (int j = 1; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    }
    return true;
}

std::string mat_str(const Fq& F, const Mat8& m) {
    std::ostringstream os;
    for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 8; ++j) os << F.elem_str(m.at(i, j)) << (j < 8 ? " " : "");
        os << "\n";
    }
    return os.str();
}

Mat8Q Mat8Q::identity() {
    Mat8Q m;
    for (int i = 1; i <= 8; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat8Q operator+(const Mat8Q& x, const Mat8Q& y) {
    Mat8Q r;
    for (size_t i = 0; i < 64; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

Mat8Q operator-(const Mat8Q& x, const Mat8Q& y) {
    Mat8Q r;
    for (size_t i = 0; i < 64; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

Mat8Q operator*(const Mat8Q& x, const Mat8Q& y) {
    Mat8Q r;
    for (int i = 0; i < 8; ++i)
        for (int kk = 0; kk < 8; ++kk) {
            const Rat& xv = x.a[size_t(i) * 8 + kk];
            if (xv.is_zero()) continue;
            for (int j = 0; j < 8; ++j) {
                const Rat& yv = y.a[size_t(kk) * 8 + j];
                if (yv.is_zero()) continue;
                r.a[size_t(i) * 8 + j] += xv * yv;
            }
        }
    return r;
}

Mat8Q Mat8Q::operator*(const Rat& r) const {
    Mat8Q out;
    for (size_t i = 0; i < 64; ++i) out.a[i] = a[i] * r;
    return out;
}

Mat8Q bracket(const Mat8Q& x, const Mat8Q& y) { return x * y - y * x; }

}  // namespace g2syl
