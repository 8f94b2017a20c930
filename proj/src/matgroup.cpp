#include "g2syl/matgroup.hpp"

#include <stdexcept>

namespace g2syl {

Mat8Q d4_root_matrix(int r) {
    // Each row: {sign, i, j} terms of the matrix sign*(E_{i j}) summed.
    static const int defs[12][6] = {
        {+1, 1, 2, -1, 7, 8},  // r1
        {+1, 2, 3, -1, 6, 7},  // r2
        {+1, 3, 4, -1, 5, 6},  // r3
        {+1, 3, 5, -1, 4, 6},  // r4
        {-1, 1, 3, +1, 6, 8},  // r5
        {+1, 2, 4, -1, 5, 7},  // r6
        {+1, 2, 5, -1, 4, 7},  // r7
        {+1, 1, 4, -1, 5, 8},  // r8
        {+1, 1, 5, -1, 4, 8},  // r9
        {+1, 2, 6, -1, 3, 7},  // r10
        {+1, 1, 6, -1, 3, 8},  // r11
        {+1, 1, 7, -1, 2, 8},  // r12
    };
    if (r < 1 || r > 12) throw std::out_of_range("d4_root_matrix");
    const int* d = defs[r - 1];
    Mat8Q m;
    m.at(d[1], d[2]) = Rat(d[0]);
    m.at(d[4], d[5]) = Rat(d[3]);
    return m;
}

Mat8Q g2_root_matrix(int r) {
    switch (r) {
        case 1: return d4_root_matrix(1) + d4_root_matrix(3) + d4_root_matrix(4);
        case 2: return d4_root_matrix(2);
        case 3: return d4_root_matrix(5) + d4_root_matrix(6) + d4_root_matrix(7);
        case 4: return d4_root_matrix(8) + d4_root_matrix(10) + d4_root_matrix(9);
        case 5: return d4_root_matrix(11);
        case 6: return d4_root_matrix(12);
        default: throw std::out_of_range("g2_root_matrix");
    }
}

Mat8Q root_gen_q(int r, const Rat& t) {
    Mat8Q e = g2_root_matrix(r);
    return Mat8Q::identity() + e * t + (e * e) * (t * t * Rat(1, 2));
}

Mat8 root_gen(const Fq& F, int r, Fq::elem t) {
    Mat8Q e = g2_root_matrix(r);
    Mat8Q e2 = e * e;
    Fq::elem t2half = F.mul(F.mul(t, t), F.inv(F.from_int(2)));
    Mat8 m = Mat8::identity();
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            Fq::elem v = m.at(i, j);
            if (!e.at(i, j).is_zero())
                v = F.add(v, F.mul(t, F.from_int(e.at(i, j).num)));
            if (!e2.at(i, j).is_zero())
                v = F.add(v, F.mul(t2half, F.from_int(e2.at(i, j).num)));
            m.at(i, j) = v;
        }
    return m;
}

UGroup::UGroup(const Fq& F) : F_(&F) {
    q6_ = 1;
    for (int i = 0; i < 6; ++i) q6_ *= F.q();
}

Mat8 UGroup::matrix(const Coords& t) const {
    const Fq& F = *F_;
    auto m_ = [&](long long c) { return F.from_int(c); };
    Fq::elem t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3], t5 = t[4], t6 = t[5];
    const Fq& M = F;
    auto mulf = [&](Fq::elem a, Fq::elem b) { return M.mul(a, b); };
    auto addf = [&](Fq::elem a, Fq::elem b) { return M.add(a, b); };
    auto subf = [&](Fq::elem a, Fq::elem b) { return M.sub(a, b); };
    auto negf = [&](Fq::elem a) { return M.neg(a); };

    Fq::elem t1t2 = mulf(t1, t2), t1t3 = mulf(t1, t3), t1t4 = mulf(t1, t4);
    Fq::elem t3t4 = mulf(t3, t4), t2t4 = mulf(t2, t4), t2t5 = mulf(t2, t5);
    Fq::elem t1sq = mulf(t1, t1), t3sq = mulf(t3, t3), t4sq = mulf(t4, t4);

    Mat8 m = Mat8::identity();
    // Row 1.
    m.at(1, 2) = t1;
    m.at(1, 3) = negf(t3);
    m.at(1, 4) = addf(t1t3, t4);
    m.at(1, 5) = m.at(1, 4);
    m.at(1, 6) = addf(t1t4, t5);
    m.at(1, 7) = addf(subf(t3t4, mulf(t1, t3sq)), t6);
    m.at(1, 8) = subf(subf(mulf(t3, t5), mulf(m_(2), mulf(t1t3, t4))),
                      addf(mulf(t1, t6), t4sq));
    // Row 2.
    m.at(2, 3) = t2;
    m.at(2, 4) = addf(t1t2, t3);
    m.at(2, 5) = m.at(2, 4);
    m.at(2, 6) = subf(t4, mulf(t1sq, t2));
    m.at(2, 7) = negf(addf(addf(mulf(m_(2), mulf(t1t2, t3)), t2t4), t3sq));
    m.at(2, 8) = negf(addf(addf(mulf(mulf(t1sq, t2), t3), mulf(m_(2), mulf(t1t2, t4))),
                           addf(addf(t2t5, mulf(m_(2), t3t4)), t6)));
    // Row 3.
    m.at(3, 4) = t1;
    m.at(3, 5) = t1;
    m.at(3, 6) = negf(t1sq);
    m.at(3, 7) = negf(addf(mulf(m_(2), t1t3), t4));
    m.at(3, 8) = negf(addf(addf(mulf(t1sq, t3), mulf(m_(2), t1t4)), t5));
    // Rows 4 and 5.
    m.at(4, 6) = negf(t1);
    m.at(4, 7) = negf(t3);
    m.at(4, 8) = negf(addf(t1t3, t4));
    m.at(5, 6) = m.at(4, 6);
    m.at(5, 7) = m.at(4, 7);
    m.at(5, 8) = m.at(4, 8);
    // Rows 6 and 7.
    m.at(6, 7) = negf(t2);
    m.at(6, 8) = addf(t1t2, t3);
    m.at(7, 8) = negf(t1);
    return m;
}

Mat8 UGroup::matrix_product(const Coords& t) const {
    const Fq& F = *F_;
    Mat8 m = root_gen(F, 2, t[1]);
    m = g2syl::mul(F, m, root_gen(F, 1, t[0]));
    for (int r = 3; r <= 6; ++r) m = g2syl::mul(F, m, root_gen(F, r, t[r - 1]));
    return m;
}

UGroup::Coords UGroup::coords_of(const Mat8& m) const {
    const Fq& F = *F_;
    Coords t;
    t[0] = m.at(1, 2);
    t[1] = m.at(2, 3);
    t[2] = F.neg(m.at(1, 3));
    t[3] = F.sub(m.at(1, 4), F.mul(t[0], t[2]));
    t[4] = F.sub(m.at(1, 6), F.mul(t[0], t[3]));
    t[5] = F.sub(F.add(m.at(1, 7), F.mul(t[0], F.mul(t[2], t[2]))),
                 F.mul(t[2], t[3]));
    return t;
}

bool UGroup::contains(const Mat8& m) const {
    if (!is_upper_unitriangular(m)) return false;
    return matrix(coords_of(m)) == m;
}

long long UGroup::index_of(const Coords& t) const {
    long long idx = 0;
    for (int i = 0; i < 6; ++i) idx = idx * F_->q() + t[i];
    return idx;
}

UGroup::Coords UGroup::coords_at(long long index) const {
    Coords t;
    for (int i = 5; i >= 0; --i) {
        t[i] = Fq::elem(index % F_->q());
        index /= F_->q();
    }
    return t;
}

UGroup::Coords UGroup::mul(const Coords& a, const Coords& b) const {
    return coords_of(g2syl::mul(*F_, matrix(a), matrix(b)));
}

UGroup::Coords UGroup::inv(const Coords& a) const {
    return coords_of(inverse_unipotent(*F_, matrix(a)));
}

UGroup::Coords UGroup::conj(const Coords& g, const Coords& x) const {
    const Fq& F = *F_;
    Mat8 gm = matrix(g);
    Mat8 r = g2syl::mul(F, g2syl::mul(F, gm, matrix(x)), inverse_unipotent(F, gm));
    return coords_of(r);
}

UGroup::Coords UGroup::commutator(const Coords& a, const Coords& b) const {
    const Fq& F = *F_;
    Mat8 am = matrix(a), bm = matrix(b);
    Mat8 r = g2syl::mul(F, g2syl::mul(F, inverse_unipotent(F, am), inverse_unipotent(F, bm)),
                        g2syl::mul(F, am, bm));
    return coords_of(r);
}

const std::vector<Mat8>& UGroup::all_matrices() const {
    if (mats_.empty()) {
        mats_.resize(size_t(q6_));
        for (long long i = 0; i < q6_; ++i) mats_[size_t(i)] = matrix(coords_at(i));
    }
    return mats_;
}

const std::vector<Mat8>& UGroup::all_inv_transposes() const {
    if (invT_.empty()) {
        const auto& ms = all_matrices();
        invT_.resize(size_t(q6_));
        for (long long i = 0; i < q6_; ++i)
            invT_[size_t(i)] = transpose(inverse_unipotent(*F_, ms[size_t(i)]));
    }
    return invT_;
}

UGroup::Coords commutator_closed_form(const Fq& F, int i, Fq::elem s, int j,
                                      Fq::elem t) {
    if (i < 1 || j > 6 || i >= j) throw std::invalid_argument("need 1 <= i < j <= 6");
    Fq::elem two = F.from_int(2), three = F.from_int(3);
    Fq::elem a3 = 0, a4 = 0, a5 = 0, a6 = 0;
    Fq::elem s2 = F.mul(s, s), s3 = F.mul(s2, s);
    if (i == 1 && j == 2) {
        a3 = F.neg(F.mul(t, s));
        a4 = F.mul(t, s2);
        a5 = F.neg(F.mul(t, s3));
        a6 = F.mul(two, F.mul(F.mul(t, t), s3));
    } else if (i == 1 && j == 3) {
        a4 = F.mul(two, F.mul(s, t));
        a5 = F.neg(F.mul(three, F.mul(s2, t)));
        a6 = F.neg(F.mul(three, F.mul(s, F.mul(t, t))));
    } else if (i == 1 && j == 4) {
        a5 = F.mul(three, F.mul(s, t));
    } else if (i == 3 && j == 4) {
        a6 = F.mul(three, F.mul(s, t));
    } else if (i == 2 && j == 5) {
        a6 = F.mul(s, t);
    }
    Mat8 m = root_gen(F, 3, a3);
    m = mul(F, m, root_gen(F, 4, a4));
    m = mul(F, m, root_gen(F, 5, a5));
    m = mul(F, m, root_gen(F, 6, a6));
    return UGroup(F).coords_of(m);
}

namespace g8 {

const std::vector<std::pair<int, int>>& free_positions() {
    static const std::vector<std::pair<int, int>> pos = [] {
        std::vector<std::pair<int, int>> v;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) {
                bool excluded = (i == 2 && j == 5) || (i == 3 && j == 5) ||
                                (i == 4 && j == 5) || (i == 4 && j == 6) ||
                                (i == 4 && j == 7);
                if (!excluded) v.emplace_back(i, j);
            }
        return v;
    }();
    return pos;
}

bool contains(const Mat8& m) {
    if (!is_upper_unitriangular(m)) return false;
    return m.at(4, 5) == 0 && m.at(2, 5) == m.at(2, 4) && m.at(3, 5) == m.at(3, 4) &&
           m.at(4, 6) == m.at(5, 6) && m.at(4, 7) == m.at(5, 7);
}

Mat8 elementary(const Fq& F, int i, int j, Fq::elem t) {
    (void)F;
    Mat8 m = Mat8::identity();
    m.at(i, j) = t;
    return m;
}

Mat8 generator(const Fq& F, int i, int j, Fq::elem t) {
    Mat8 m = elementary(F, i, j, t);
    if ((i == 2 || i == 3) && j == 4) m.at(i, 5) = t;
    if (i == 5 && (j == 6 || j == 7)) m.at(4, j) = t;
    return m;
}

Mat8 random_element(const Fq& F, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, F.q() - 1);
    Mat8 m = Mat8::identity();
    for (auto [i, j] : free_positions())
        m = g2syl::mul(F, m, generator(F, i, j, Fq::elem(dist(rng))));
    return m;
}

}  // namespace g8

}  // namespace g2syl
