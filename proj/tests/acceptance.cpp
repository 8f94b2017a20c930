// Acceptance suite: ten independently stated end-to-end criteria, each
// reported as a single PASS/FAIL line.  Run with a criterion number 1..10
// as the only argument, or with no arguments to run all ten.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "g2syl/suites.hpp"

using namespace g2syl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void absorb(const std::vector<Check>& checks) {
        for (const Check& c : checks)
            if (!c.pass) fail(c.name + (c.witness.empty() ? "" : " [" + c.witness + "]"));
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Pattern make_pattern(const Fq& F, int a12, int a13, int a15, int a16, int a17,
                     int a23) {
    return Pattern{{F.from_int(a12), F.from_int(a13), F.from_int(a15),
                    F.from_int(a16), F.from_int(a17), F.from_int(a23)}};
}

// 1. Closed-form matrix equals the ordered product of root generators for
//    every coordinate tuple at q = 5.
Outcome criterion1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Fq F(5, 1);
    UGroup U(F);
    for (long long i = 0; i < U.order(); ++i) {
        auto t = U.coords_at(i);
        if (U.matrix(t) != U.matrix_product(t)) {
            o.fail("mismatch at element index " + std::to_string(i));
            break;
        }
    }
    double dt = seconds_since(t0);
    o.expect(dt < 10.0, "runtime " + std::to_string(dt) + " s exceeds 10 s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("15625 tuples in ") +
                std::to_string(dt) + " s";
    return o;
}

// 2. Commutator closed forms, exhaustively over both parameters, in both
//    characteristics: q = 5 (p > 3) and q = 3, 9 (p = 3).
Outcome criterion2() {
    Outcome o;
    for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {3, 1}, {3, 2}}) {
        Fq F(p, k);
        UGroup U(F);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int s = 0; s < F.q(); ++s)
                    for (int t = 0; t < F.q(); ++t) {
                        UGroup::Coords a{}, b{};
                        a[size_t(i - 1)] = Fq::elem(s);
                        b[size_t(j - 1)] = Fq::elem(t);
                        if (U.commutator(a, b) !=
                            commutator_closed_form(F, i, Fq::elem(s), j, Fq::elem(t)))
                            o.fail("q=" + std::to_string(F.q()) + " [y" +
                                   std::to_string(i) + "," + "y" + std::to_string(j) +
                                   "] at (" + std::to_string(s) + "," +
                                   std::to_string(t) + ")");
                    }
    }
    if (o.pass) o.detail = "q = 5, 3, 9 exhaustive";
    return o;
}

// 3. Orbit structure at q = 5: family orbit sizes {q^3, q^2, q^2, q, 1},
//    parametrized stabilizers exact for every seed, orbit-stabilizer.
Outcome criterion3() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Fq F(5, 1);
    o.absorb(suite_orbits(F, /*exhaustive=*/true));
    double dt = seconds_since(t0);
    o.expect(dt < 60.0, "runtime " + std::to_string(dt) + " s exceeds 60 s");
    if (o.pass) o.detail = "all seeds, " + std::to_string(dt) + " s";
    return o;
}

// 4. Orbit-character inner products at q = 5: the multiplicity patterns of
//    the reducible and multiplicity-free families.
Outcome criterion4() {
    Outcome o;
    Fq F(5, 1);
    UGroup U(F);
    int q = F.q(), p = F.p();
    auto psi = [&](const Pattern& A) { return psi_on_group(F, U, orbit_of(F, A)); };
    auto is_int = [&](const Cyclo& v, long long n) { return v == Cyclo(p, Rat(n)); };

    // Hook-separated staircase core in family F4 (tied coefficient and A23
    // both nonzero): <psi, psi> = 2q - 1.
    Pattern A = make_pattern(F, 0, 0, 2, 0, 0, 1);
    auto pA = psi(A);
    o.expect(is_int(inner_product(F, pA, pA), 2 * q - 1), "<psi_A, psi_A> != 2q-1");
    // A second F4 core with the same tied coefficient but different A23:
    // norms 2q - 1, cross inner product q - 1.
    Pattern B = make_pattern(F, 0, 0, 2, 0, 0, 3);
    auto pB = psi(B);
    o.expect(is_int(inner_product(F, pB, pB), 2 * q - 1), "<psi_B, psi_B> != 2q-1");
    o.expect(is_int(inner_product(F, pA, pB), q - 1), "<psi_A, psi_B> != q-1");
    // Multiplicity-free cores: family F3 with A23 = 0, and family F12.
    Pattern C = make_pattern(F, 0, 3, 0, 0, 0, 0);
    auto pC = psi(C);
    o.expect(is_int(inner_product(F, pC, pC), 1), "<psi_C, psi_C> != 1 (F3 core)");
    Pattern D = make_pattern(F, 2, 0, 0, 0, 0, 4);
    auto pD = psi(D);
    o.expect(is_int(inner_product(F, pD, pD), 1), "<psi_D, psi_D> != 1 (F12)");
    // Distinct first verges (different first-row main-condition positions)
    // are orthogonal.
    o.expect(family_of(A) != family_of(C), "test setup: families should differ");
    o.expect(inner_product(F, pA, pC).is_zero(), "<psi_A, psi_C> != 0");
    o.expect(inner_product(F, pA, pD).is_zero(), "<psi_A, psi_D> != 0");
    if (o.pass) o.detail = "2q-1 / q-1 / 1 / 0 patterns confirmed";
    return o;
}

// 5. Superclass partition at q = 3, 5, 7: sizes sum to q^6, the count is
//    q^2 + 4q - 4, and each superclass is a union of conjugacy classes.
Outcome criterion5() {
    Outcome o;
    for (int q : {3, 5, 7}) {
        Fq F(q, 1);
        UGroup U(F);
        ConjClasses cc = conjugacy_classes(F, U);
        o.absorb(verify_partition(F, U, &cc.class_of));
        long long expect_count = (long long)q * q + 4 * q - 4;
        if ((long long)(all_superclasses(F).size()) != expect_count)
            o.fail("superclass count at q = " + std::to_string(q));
    }
    if (o.pass) o.detail = "q = 3, 5, 7 (17, 41, 73 superclasses)";
    return o;
}

// 6. Supercharacter-theory axioms and the closed-form table at q = 3, 5, 7.
Outcome criterion6() {
    Outcome o;
    double dt7 = 0;
    for (int q : {3, 5, 7}) {
        auto t0 = std::chrono::steady_clock::now();
        Fq F(q, 1);
        UGroup U(F);
        o.absorb(verify_supertheory(F, U, /*exhaustive=*/true));
        if (q == 7) dt7 = seconds_since(t0);
    }
    o.expect(dt7 < 120.0, "q = 7 runtime " + std::to_string(dt7) + " s exceeds 120 s");
    if (o.pass) o.detail = "axioms (a)-(d) + closed forms; q = 7 in " +
                           std::to_string(dt7) + " s";
    return o;
}

// 7. Conjugacy classes at q = 5: 169 classes, correct size multiset,
//    generator-conjugation closed forms on 10^4 random pairs, and
//    superclasses as exact unions of classes.
Outcome criterion7() {
    Outcome o;
    Fq F(5, 1);
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    if (cc.rep.size() != 169) o.fail("class count != 169");
    o.absorb(verify_classes(F, U, cc, /*random_pairs=*/10000));
    if (o.pass) o.detail = "169 classes; 10^4 conjugation samples";
    return o;
}

// 8. Irreducible character table: full verification at q = 5, sampled at
//    q = 7; orthonormality, degrees, class constancy, column orthogonality,
//    and the supercharacter decompositions.
Outcome criterion8() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    {
        Fq F(5, 1);
        UGroup U(F);
        ConjClasses cc = conjugacy_classes(F, U);
        auto info = classify_classes(F, U, cc);
        o.absorb(verify_character_table(F, U, cc, info, /*exhaustive=*/true));
    }
    double dt5 = seconds_since(t0);
    o.expect(dt5 < 300.0, "q = 5 runtime " + std::to_string(dt5) + " s exceeds 5 min");
    {
        Fq F(7, 1);
        UGroup U(F);
        ConjClasses cc = conjugacy_classes(F, U);
        auto info = classify_classes(F, U, cc);
        o.absorb(verify_character_table(F, U, cc, info, /*exhaustive=*/false));
    }
    if (o.pass) o.detail = "q = 5 full (" + std::to_string(dt5) + " s), q = 7 sampled";
    return o;
}

// 9. Character tables of the subgroups H (order q^4) and T (order q^5) at
//    q = 5: counts, orthonormality, induced-character agreement.
Outcome criterion9() {
    Outcome o;
    Fq F(5, 1);
    o.absorb(verify_subgroup_tables(F));
    if (o.pass) o.detail = "H (145 classes) and T (629 classes) at q = 5";
    return o;
}

// 10. Structure constants of the root elements in exact rational 8x8
//     arithmetic (brackets, squares, cubes, one-parameter law).
Outcome criterion10() {
    Outcome o;
    Fq F(5, 1);
    for (const Check& c : suite_group(F, /*exhaustive=*/false))
        if (c.name.find("structure-constants") != std::string::npos ||
            c.name.find("one-parameter") != std::string::npos) {
            if (!c.pass) o.fail(c.name + " [" + c.witness + "]");
        }
    if (o.pass) o.detail = "all brackets, squares and cubes exact over Q";
    return o;
}

const char* kTitles[10] = {
    "closed-form matrices equal ordered generator products (q = 5)",
    "commutator closed forms exhaustive (q = 5, 3, 9)",
    "orbit sizes, stabilizers, orbit-stabilizer identity (q = 5)",
    "orbit-character inner products (q = 5)",
    "superclass partition and union-of-classes (q = 3, 5, 7)",
    "supercharacter theory axioms and closed-form table (q = 3, 5, 7)",
    "conjugacy classes, sizes, conjugation closed forms (q = 5)",
    "irreducible character table (q = 5 full, q = 7 sampled)",
    "subgroup character tables H and T (q = 5)",
    "rational structure constants",
};

Outcome run_criterion(int n) {
    switch (n) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        case 10: return criterion10();
    }
    Outcome o;
    o.fail("no such criterion");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int lo = 1, hi = 10;
    if (argc > 1) {
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
            return 2;
        }
        lo = hi = n;
    }
    bool all_pass = true;
    for (int n = lo; n <= hi; ++n) {
        Outcome o = run_criterion(n);
        std::printf("%s criterion %d: %s%s%s\n", o.pass ? "PASS" : "FAIL", n,
                    kTitles[n - 1], o.detail.empty() ? "" : " -- ",
                    o.detail.c_str());
        std::fflush(stdout);
        all_pass &= o.pass;
    }
    return all_pass ? 0 : 1;
}
