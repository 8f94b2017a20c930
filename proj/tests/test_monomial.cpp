#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "g2syl/monomial.hpp"

using namespace g2syl;

// Pattern addition and the composite actions used in the cocycle law.
static Pattern pat_add(const Fq& F, const Pattern& A, const Pattern& B) {
    Pattern r;
    for (int i = 0; i < 6; ++i) r.v[i] = F.add(A.v[i], B.v[i]);
    return r;
}

TEST_CASE("pattern index round trip") {
    Fq F(5, 1);
    for (long long i = 0; i < 200; ++i) {
        Pattern A = pattern_at(F, i);
        CHECK(pattern_index(F, A) == i);
    }
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= F.q();
    CHECK(pattern_index(F, pattern_at(F, total - 1)) == total - 1);
}

TEST_CASE("kappa is the trace form with the tied slot doubled") {
    Fq F(5, 1);
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        Pattern A, B;
        for (int i = 0; i < 6; ++i) {
            A.v[i] = Fq::elem(pick(rng));
            B.v[i] = Fq::elem(pick(rng));
        }
        // tr(M_A^T M_B) computed on the literal matrices.
        Mat8 MA = pattern_matrix(F, A), MB = pattern_matrix(F, B);
        Fq::elem s = 0;
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; j <= 8; ++j)
                s = F.add(s, F.mul(MA.at(i, j), MB.at(i, j)));
        CHECK(kappa(F, A, B) == s);
        // Symmetry and bilinearity spot checks.
        CHECK(kappa(F, A, B) == kappa(F, B, A));
    }
}

TEST_CASE("cocycle law f(xg) = f(x) o g + f(g) on the ambient group") {
    Fq F(5, 1);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        Mat8 x = g8::random_element(F, rng);
        Mat8 g = g8::random_element(F, rng);
        Pattern lhs = cocycle(F, mul(F, x, g));
        Pattern rhs = pat_add(F, act_circ(F, cocycle(F, x), g), cocycle(F, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("duality kappa(A.g, B) = kappa(A, B o g^{-1})") {
    Fq F(5, 1);
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
        Pattern A, B;
        for (int i = 0; i < 6; ++i) {
            A.v[i] = Fq::elem(pick(rng));
            B.v[i] = Fq::elem(pick(rng));
        }
        Mat8 g = g8::random_element(F, rng);
        Mat8 ginv = inverse_unipotent(F, g);
        CHECK(kappa(F, act_dot(F, A, g), B) == kappa(F, A, act_circ(F, B, ginv)));
    }
}

TEST_CASE("the dual action is a right action") {
    Fq F(3, 1);
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    for (int trial = 0; trial < 400; ++trial) {
        Pattern A;
        for (int i = 0; i < 6; ++i) A.v[i] = Fq::elem(pick(rng));
        Mat8 g = g8::random_element(F, rng);
        Mat8 h = g8::random_element(F, rng);
        CHECK(act_dot(F, act_dot(F, A, g), h) == act_dot(F, A, mul(F, g, h)));
        CHECK(act_dot(F, A, Mat8::identity()) == A);
    }
}

TEST_CASE("left dual action shifts A23 by -t1 A13") {
    Fq F(5, 1);
    UGroup U(F);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    std::uniform_int_distribution<long long> picku(0, U.order() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        Pattern A;
        for (int i = 0; i < 6; ++i) A.v[i] = Fq::elem(pick(rng));
        UGroup::Coords u = U.coords_at(picku(rng));
        // Independent evaluation: pi(u^{-T} M_A).
        Mat8 uinvT = transpose(inverse_unipotent(F, U.matrix(u)));
        Pattern direct = project(F, mul(F, uinvT, pattern_matrix(F, A)));
        Pattern closed = act_left(F, u, A);
        CHECK(closed == direct);
        Pattern expect = A;
        expect.v[5] = F.sub(A.a23(), F.mul(u[0], A.a13()));
        CHECK(closed == expect);
    }
}

TEST_CASE("the cocycle is a bijection U -> pattern space at q = 3") {
    Fq F(3, 1);
    UGroup U(F);
    std::set<long long> seen;
    for (long long i = 0; i < U.order(); ++i)
        seen.insert(pattern_index(F, cocycle(F, U.matrix(U.coords_at(i)))));
    CHECK((long long)(seen.size()) == U.order());
}

TEST_CASE("chi values match the exponent form") {
    Fq F(3, 2);
    UGroup U(F);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> pick(0, F.q() - 1);
    std::uniform_int_distribution<long long> picku(0, U.order() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        Pattern A;
        for (int i = 0; i < 6; ++i) A.v[i] = Fq::elem(pick(rng));
        Mat8 u = U.matrix(U.coords_at(picku(rng)));
        Pattern fu = cocycle(F, u);
        CHECK(chi_value(F, A, u) == Cyclo::zeta_pow(F.p(), chi_exponent(F, A, fu)));
        CHECK(chi_exponent(F, A, fu) == F.trace(kappa(F, A, fu)));
    }
}
