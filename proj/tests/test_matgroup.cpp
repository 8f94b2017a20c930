#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "g2syl/matgroup.hpp"
#include "g2syl/suites.hpp"

using namespace g2syl;

static Mat8Q pow3_is_zero_helper(const Mat8Q& e) { return e * e * e; }

TEST_CASE("structure constants of the root elements over Q") {
    auto e = [](int r) { return g2_root_matrix(r); };
    // The five nonzero brackets.
    CHECK(bracket(e(1), e(2)) == e(3) * Rat(-1));
    CHECK(bracket(e(1), e(3)) == e(4) * Rat(2));
    CHECK(bracket(e(1), e(4)) == e(5) * Rat(3));
    CHECK(bracket(e(2), e(5)) == e(6));
    CHECK(bracket(e(3), e(4)) == e(6) * Rat(3));
    // All other pairs commute.
    std::vector<std::pair<int, int>> nonzero = {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 4}};
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            bool special = false;
            for (auto [a, b] : nonzero) special |= (a == i && b == j);
            if (!special) CHECK(bracket(e(i), e(j)) == Mat8Q::zero());
        }
    // Squares and cubes.
    for (int r = 1; r <= 6; ++r) CHECK(pow3_is_zero_helper(e(r)) == Mat8Q::zero());
    CHECK(e(2) * e(2) == Mat8Q::zero());
    CHECK(e(5) * e(5) == Mat8Q::zero());
    CHECK(e(6) * e(6) == Mat8Q::zero());
    CHECK(!(e(1) * e(1) == Mat8Q::zero()));
    CHECK(!(e(3) * e(3) == Mat8Q::zero()));
    CHECK(!(e(4) * e(4) == Mat8Q::zero()));
}

TEST_CASE("one-parameter subgroup law over Q") {
    for (int r = 1; r <= 6; ++r) {
        for (const Rat& s : {Rat(2), Rat(-1, 3)})
            for (const Rat& t : {Rat(5, 7), Rat(-4)})
                CHECK(root_gen_q(r, s) * root_gen_q(r, t) == root_gen_q(r, s + t));
        CHECK(root_gen_q(r, Rat(0)) == Mat8Q::identity());
    }
}

TEST_CASE("normal-form matrix equals the ordered generator product (q = 3 exhaustive)") {
    Fq F(3, 1);
    UGroup U(F);
    for (long long i = 0; i < U.order(); ++i) {
        auto t = U.coords_at(i);
        Mat8 m = U.matrix(t);
        CHECK(m == U.matrix_product(t));
        CHECK(U.contains(m));
        CHECK(U.coords_of(m) == t);
        CHECK(U.index_of(t) == i);
    }
}

TEST_CASE("group operations are consistent (q = 3)") {
    Fq F(3, 1);
    UGroup U(F);
    std::mt19937 rng(101);
    std::uniform_int_distribution<long long> pick(0, U.order() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = U.coords_at(pick(rng)), b = U.coords_at(pick(rng));
        CHECK(U.matrix(U.mul(a, b)) == mul(F, U.matrix(a), U.matrix(b)));
        CHECK(U.mul(a, U.inv(a)) == UGroup::Coords{});
        CHECK(U.matrix(U.conj(a, b)) ==
              mul(F, mul(F, U.matrix(a), U.matrix(b)),
                  inverse_unipotent(F, U.matrix(a))));
    }
}

TEST_CASE("commutator closed forms (exhaustive at q = 3 and q = 9)") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        Fq F(p, k);
        UGroup U(F);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int s = 0; s < F.q(); ++s)
                    for (int t = 0; t < F.q(); ++t) {
                        UGroup::Coords a{}, b{};
                        a[i - 1] = Fq::elem(s);
                        b[j - 1] = Fq::elem(t);
                        CHECK(U.commutator(a, b) ==
                              commutator_closed_form(F, i, Fq::elem(s), j, Fq::elem(t)));
                    }
    }
}

TEST_CASE("ambient algebra group contains U and is closed") {
    Fq F(3, 1);
    UGroup U(F);
    CHECK(g8::free_positions().size() == 23);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Mat8 g = g8::random_element(F, rng);
        Mat8 h = g8::random_element(F, rng);
        CHECK(g8::contains(g));
        CHECK(g8::contains(mul(F, g, h)));
        CHECK(g8::contains(inverse_unipotent(F, g)));
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<long long> pick(0, U.order() - 1);
        CHECK(g8::contains(U.matrix(U.coords_at(pick(rng)))));
    }
}

TEST_CASE("group suite passes at q = 3 and q = 9") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}}) {
        Fq F(p, k);
        for (const Check& c : suite_group(F, /*exhaustive=*/true)) {
            INFO(c.name << ": " << c.witness);
            CHECK(c.pass);
        }
    }
}
