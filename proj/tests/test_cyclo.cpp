#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "g2syl/cyclo.hpp"
#include "g2syl/rational.hpp"

using namespace g2syl;

TEST_CASE("power-basis reduction is canonical") {
    for (int p : {3, 5, 7}) {
        // zeta^p = 1 and 1 + zeta + ... + zeta^{p-1} = 0.
        CHECK(Cyclo::zeta_pow(p, p) == Cyclo(p, Rat(1)));
        Cyclo s(p);
        for (int e = 0; e < p; ++e) s += Cyclo::zeta_pow(p, e);
        CHECK(s.is_zero());
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
        Cyclo lhs = Cyclo::zeta_pow(p, p - 1);
        Cyclo rhs(p);
        for (int e = 0; e <= p - 2; ++e) rhs -= Cyclo::zeta_pow(p, e);
        CHECK(lhs == rhs);
        // Negative exponents reduce mod p.
        CHECK(Cyclo::zeta_pow(p, -1) == Cyclo::zeta_pow(p, p - 1));
    }
}

TEST_CASE("ring operations against the complex embedding") {
    int p = 7;
    Cyclo a = Cyclo::zeta_pow(p, 2) + Cyclo::zeta_pow(p, 5) * Rat(3);
    Cyclo b = Cyclo(p, Rat(1, 2)) - Cyclo::zeta_pow(p, 6);
    for (const Cyclo& v : {a + b, a - b, a * b, -a, a.conj()}) {
        std::complex<double> z = v.to_complex();
        (void)z;
    }
    std::complex<double> za = a.to_complex(), zb = b.to_complex();
    CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
    CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
    CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-9);
}

TEST_CASE("quadratic Gauss sum for p = 5") {
    // g = sum_{r=0}^{4} zeta_5^{r^2} satisfies g^2 = 5 (since 5 = 1 mod 4).
    int p = 5;
    Cyclo g(p);
    for (int r = 0; r < p; ++r) g += Cyclo::zeta_pow(p, (long long)r * r);
    CHECK(g * g == Cyclo(p, Rat(5)));
    // |g|^2 = 5 as well.
    CHECK(g * g.conj() == Cyclo(p, Rat(5)));
}

TEST_CASE("quadratic Gauss sum norm for p = 7") {
    // 7 = 3 mod 4, so g^2 = -7 but g * conj(g) = 7.
    int p = 7;
    Cyclo g(p);
    for (int r = 0; r < p; ++r) g += Cyclo::zeta_pow(p, (long long)r * r);
    CHECK(g * g == Cyclo(p, Rat(-7)));
    CHECK(g * g.conj() == Cyclo(p, Rat(7)));
}

TEST_CASE("theta is a nontrivial multiplicative-from-additive character") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {3, 2}, {5, 2}}) {
        Fq F(p, k);
        // theta(x + y) = theta(x) theta(y) for all x, y.
        for (int x = 0; x < F.q(); ++x)
            for (int y = 0; y < F.q(); ++y)
                CHECK(theta(F, F.add(Fq::elem(x), Fq::elem(y))) ==
                      theta(F, Fq::elem(x)) * theta(F, Fq::elem(y)));
        CHECK(theta(F, F.zero()) == Cyclo(p, Rat(1)));
        // Nontrivial: sum over the field vanishes.
        Cyclo s(p);
        for (int x = 0; x < F.q(); ++x) s += theta(F, Fq::elem(x));
        CHECK(s.is_zero());
    }
}

TEST_CASE("rationality predicates") {
    Cyclo r(5, Rat(-3, 7));
    CHECK(r.is_rational());
    CHECK(r.rational_part() == Rat(-3, 7));
    Cyclo z = Cyclo::zeta_pow(5, 1);
    CHECK(!z.is_rational());
    CHECK(!z.is_zero());
    CHECK(Cyclo(5).is_zero());
}

TEST_CASE("ZSum integer accumulator reduces correctly") {
    int p = 5;
    ZSum s(p);
    // 2*zeta^0 + zeta^1 + ... + zeta^4 = 2 + (-1) = 1.
    s.add_zeta(0, 2);
    for (int e = 1; e < p; ++e) s.add_zeta(e);
    CHECK(s.to_cyclo() == Cyclo(p, Rat(1)));
    ZSum t(p);
    for (int e = 0; e < p; ++e) t.add_zeta(e, 7);
    CHECK(t.is_zero_value());
}

TEST_CASE("overflow-checked rationals") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a * b == Rat(1, 18));
    CHECK(a - a == Rat(0));
    CHECK(Rat(2, -4) == Rat(-1, 2));  // canonical sign and lowest terms
}
