#include "g2syl/monomial.hpp"

namespace g2syl {

long long pattern_index(const Fq& F, const Pattern& A) {
    long long idx = 0;
    for (int i = 0; i < 6; ++i) idx = idx * F.q() + A.v[i];
    return idx;
}

Pattern pattern_at(const Fq& F, long long index) {
    Pattern A;
    for (int i = 5; i >= 0; --i) {
        A.v[i] = Fq::elem(index % F.q());
        index /= F.q();
    }
    return A;
}

Pattern project(const Fq& F, const Mat8& m) {
    Pattern A;
    A.v[0] = m.at(1, 2);
    A.v[1] = m.at(1, 3);
    A.v[2] = F.mul(F.add(m.at(1, 4), m.at(1, 5)), F.inv(F.from_int(2)));
    A.v[3] = m.at(1, 6);
    A.v[4] = m.at(1, 7);
    A.v[5] = m.at(2, 3);
    return A;
}

Mat8 pattern_matrix(const Fq& F, const Pattern& A) {
    (void)F;
    Mat8 m;
    m.at(1, 2) = A.a12();
    m.at(1, 3) = A.a13();
    m.at(1, 4) = A.a15();
    m.at(1, 5) = A.a15();
    m.at(1, 6) = A.a16();
    m.at(1, 7) = A.a17();
    m.at(2, 3) = A.a23();
    return m;
}

Pattern cocycle(const Fq& F, const Mat8& u) { return project(F, u); }

Fq::elem kappa(const Fq& F, const Pattern& A, const Pattern& B) {
    Fq::elem s = 0;
    s = F.add(s, F.mul(A.v[0], B.v[0]));
    s = F.add(s, F.mul(A.v[1], B.v[1]));
    Fq::elem tied = F.mul(A.v[2], B.v[2]);
    s = F.add(s, F.add(tied, tied));  // tied slot counts twice
    s = F.add(s, F.mul(A.v[3], B.v[3]));
    s = F.add(s, F.mul(A.v[4], B.v[4]));
    s = F.add(s, F.mul(A.v[5], B.v[5]));
    return s;
}

namespace {

// Rows 1 and 2 of pattern_matrix(A) * G, followed by the projection.  Only
// these two rows of the product can be nonzero.
Pattern project_pattern_times(const Fq& F, const Pattern& A, const Mat8& G) {
    Fq::elem row1[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    Fq::elem row2[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    // Row 1 of A: entries at columns 2..7.
    const Fq::elem r1[8] = {0, A.v[0], A.v[1], A.v[2], A.v[2], A.v[3], A.v[4], 0};
    for (int k = 1; k < 7; ++k) {
        Fq::elem av = r1[k];
        if (av == 0) continue;
        for (int j = 0; j < 8; ++j) {
            Fq::elem gv = G.a[size_t(k) * 8 + j];
            if (gv != 0) row1[j] = F.add(row1[j], F.mul(av, gv));
        }
    }
    // Row 2 of A: single entry A23 at column 3 (0-indexed 2).
    if (A.v[5] != 0)
        for (int j = 0; j < 8; ++j)
            row2[j] = F.mul(A.v[5], G.a[size_t(2) * 8 + j]);

    Pattern R;
    R.v[0] = row1[1];
    R.v[1] = row1[2];
    R.v[2] = F.mul(F.add(row1[3], row1[4]), F.inv(F.from_int(2)));
    R.v[3] = row1[5];
    R.v[4] = row1[6];
    R.v[5] = row2[2];
    return R;
}

}  // namespace

Pattern act_dot_pre(const Fq& F, const Pattern& A, const Mat8& g_inv_T) {
    return project_pattern_times(F, A, g_inv_T);
}

Pattern act_dot(const Fq& F, const Pattern& A, const Mat8& g) {
    return project_pattern_times(F, A, transpose(inverse_unipotent(F, g)));
}

Pattern act_circ(const Fq& F, const Pattern& A, const Mat8& g) {
    return project_pattern_times(F, A, g);
}

Pattern act_left(const Fq& F, const UGroup::Coords& u, const Pattern& A) {
    Pattern R = A;
    R.v[5] = F.sub(R.v[5], F.mul(u[0], A.v[1]));
    return R;
}

int chi_exponent(const Fq& F, const Pattern& A, const Pattern& fu) {
    return F.trace(kappa(F, A, fu));
}

Cyclo chi_value(const Fq& F, const Pattern& A, const Mat8& u) {
    return theta(F, kappa(F, A, cocycle(F, u)));
}

}  // namespace g2syl
