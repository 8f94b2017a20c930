#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "g2syl/supertheory.hpp"

using namespace g2syl;

TEST_CASE("superclass classification cascade") {
    Fq F(5, 1);
    using C = UGroup::Coords;
    CHECK(superclass_of(F, C{0, 0, 0, 0, 0, 0}).kind == SuperclassId::C0);
    CHECK(superclass_of(F, C{2, 0, 1, 0, 3, 4}).kind == SuperclassId::C1);
    CHECK(superclass_of(F, C{0, 3, 1, 2, 0, 1}).kind == SuperclassId::C2);
    CHECK(superclass_of(F, C{1, 2, 0, 4, 0, 0}).kind == SuperclassId::C12);
    CHECK(superclass_of(F, C{0, 0, 2, 1, 0, 3}).kind == SuperclassId::C3);
    CHECK(superclass_of(F, C{0, 0, 0, 4, 1, 2}).kind == SuperclassId::C4);
    CHECK(superclass_of(F, C{0, 0, 0, 0, 3, 1}).kind == SuperclassId::C5);
    CHECK(superclass_of(F, C{0, 0, 0, 0, 0, 2}).kind == SuperclassId::C6);
    // Parameters carried along.
    auto k = superclass_of(F, C{2, 3, 1, 0, 0, 0});
    CHECK(k.kind == SuperclassId::C12);
    CHECK(k.a == 2);
    CHECK(k.b == 3);
}

TEST_CASE("superclass counts and sizes") {
    for (auto [p, kk] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}}) {
        Fq F(p, kk);
        int q = F.q();
        auto all = all_superclasses(F);
        CHECK((long long)(all.size()) == (long long)q * q + 4 * q - 4);
        long long total = 0;
        for (const auto& k : all) {
            total += superclass_size(F, k);
            CHECK(superclass_of(F, superclass_rep(F, k)) == k);
        }
        long long q6 = 1;
        for (int i = 0; i < 6; ++i) q6 *= q;
        CHECK(total == q6);
    }
}

TEST_CASE("sub-biorbit tag inside C2") {
    Fq F(5, 1);
    // t4* = t4 + t3^2/t2: nonzero -> sub 0, zero -> sub 1 with parameter
    // t5' = t5 - t3^3/t2^2.
    using C = UGroup::Coords;
    C u{0, 2, 1, 0, 0, 0};  // t4* = 0 + 1/2 = 3 (mod 5): sub 0
    auto tag = c2_subtag(F, u);
    CHECK(tag.sub == 0);
    CHECK(tag.param == 3);
    C v{0, 2, 1, 2, 4, 0};  // t4* = 2 + 3 = 0: sub 1, param = 4 - 1/4 = 4 - 4 = 0
    auto tag2 = c2_subtag(F, v);
    CHECK(tag2.sub == 1);
    CHECK(tag2.param == F.sub(4, F.div(F.mul(1, 1), F.mul(2, 2))));
}

TEST_CASE("supermodule dimensions") {
    Fq F(3, 1);
    int q = F.q();
    auto mods = all_supermodules(F);
    // q^2 linear + (q-1) each of M13/M15/M16/M17.
    CHECK((long long)(mods.size()) == (long long)q * q + 4 * (q - 1));
    std::map<SupermoduleId::Kind, long long> dims;
    long long sum = 0;
    for (const auto& m : mods) {
        long long d = supermodule_dim(F, m);
        CHECK((long long)(supermodule_basis(F, m).size()) == d);
        dims[m.kind] = d;
        sum += d;
    }
    CHECK(dims[SupermoduleId::Lin] == 1);
    CHECK(dims[SupermoduleId::M13] == q);
    CHECK(dims[SupermoduleId::M15] == (long long)q * q * q);
    CHECK(dims[SupermoduleId::M16] == (long long)q * q * q * q);
    CHECK(dims[SupermoduleId::M17] == (long long)q * q * q * q);
    // Total dimension of the supermodule sum: 2q^5 - q^4 - q^3 + 2q^2 - q.
    long long q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
    CHECK(sum == 2 * q5 - q4 - q3 + 2 * q2 - q);
    CHECK(sum == 393);  // frozen value at q = 3
}

TEST_CASE("closed-form table values (spot checks at q = 5)") {
    Fq F(5, 1);
    SupermoduleId m13{SupermoduleId::M13, 2, 0};
    // q on C0, q * theta(-A13* t3*) on C3, 0 on C1.
    MonoVal v = table4_value(F, m13, SuperclassId{SuperclassId::C0, 0, 0});
    CHECK(v == MonoVal{false, 1, 0});
    v = table4_value(F, m13, SuperclassId{SuperclassId::C3, 3, 0});
    CHECK(v == MonoVal{false, 1, int(F.neg(F.mul(2, 3)))});  // Tr = id for k=1
    v = table4_value(F, m13, SuperclassId{SuperclassId::C1, 1, 0});
    CHECK(v.zero);
    // M16 on C5: q^4 theta(A16* t5*).
    SupermoduleId m16{SupermoduleId::M16, 3, 0};
    v = table4_value(F, m16, SuperclassId{SuperclassId::C5, 4, 0});
    CHECK(v == MonoVal{false, 4, int(F.mul(3, 4))});
    // Lin on C12: theta(A12 t1* + A23 t2*).
    SupermoduleId lin{SupermoduleId::Lin, 2, 3};
    v = table4_value(F, lin, SuperclassId{SuperclassId::C12, 1, 4});
    CHECK(v == MonoVal{false, 0, int(F.add(F.mul(2, 1), F.mul(3, 4)))});
}

TEST_CASE("fast evaluator equals brute force (q = 3 exhaustive)") {
    Fq F(3, 1);
    UGroup U(F);
    const auto& mats = U.all_matrices();
    const auto& invT = U.all_inv_transposes();
    for (const auto& m : all_supermodules(F)) {
        for (long long u = 0; u < U.order(); ++u) {
            Pattern fu = cocycle(F, mats[u]);
            MonoVal fast = supercharacter_value(F, m, invT[u], fu);
            Cyclo brute = supercharacter_value_bruteforce(F, m, invT[u], fu);
            CHECK(mono_to_cyclo(F, fast) == brute);
        }
    }
}

TEST_CASE("partition and supercharacter-theory suites pass at q = 3") {
    Fq F(3, 1);
    UGroup U(F);
    for (const Check& c : verify_partition(F, U, nullptr)) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
    for (const Check& c : verify_supertheory(F, U, /*exhaustive=*/true)) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("emitted table formats are consistent") {
    Fq F(3, 1);
    UGroup U(F);
    std::string md = emit_supercharacter_table(F, U, TableFormat::Markdown);
    std::string csv = emit_supercharacter_table(F, U, TableFormat::Csv);
    std::string js = emit_supercharacter_table(F, U, TableFormat::Json);
    CHECK(!md.empty());
    CHECK(!csv.empty());
    CHECK(!js.empty());
    // 17 superclasses at q = 3 appear as columns in the JSON output.
    CHECK(js.find("\"superclasses\"") != std::string::npos);
}
