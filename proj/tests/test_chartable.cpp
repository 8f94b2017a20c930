#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "g2syl/chartable.hpp"
#include "g2syl/suites.hpp"

using namespace g2syl;

TEST_CASE("conjugacy classes at q = 5: count and size multiset") {
    Fq F(5, 1);
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    int q = F.q();
    CHECK((long long)(cc.rep.size()) == (long long)q * q * q + 2 * q * q - q - 1);  // 169
    std::map<long long, long long> hist;
    long long total = 0;
    for (long long s : cc.size) {
        hist[s]++;
        total += s;
    }
    CHECK(total == U.order());
    CHECK(hist[1] == q);                              // identity + center
    CHECK(hist[q] == q - 1);
    CHECK(hist[(long long)q * q] == (long long)(q - 1) * (1 + q + q * q));
    CHECK(hist[(long long)q * q * q] == (long long)(q - 1) * q);
    CHECK(hist[(long long)q * q * q * q] == (long long)(q - 1) * (q - 1));
}

TEST_CASE("canonical members and shapes at q = 5") {
    Fq F(5, 1);
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    auto info = classify_classes(F, U, cc);  // throws if not unique
    int q = F.q();
    std::map<ClassShape, long long> count;
    for (const auto& ci : info) count[ci.shape]++;
    CHECK(count[ClassShape::I8] == 1);
    CHECK(count[ClassShape::Y6] == q - 1);
    CHECK(count[ClassShape::Y5] == q - 1);
    CHECK(count[ClassShape::Y4] == q - 1);
    CHECK(count[ClassShape::Y3Y5] == (long long)(q - 1) * q);
    CHECK(count[ClassShape::Y2] == (long long)(q - 1) * q * q);
    CHECK(count[ClassShape::Y1Y6] == (long long)(q - 1) * q);
    CHECK(count[ClassShape::Y1Y2] == (long long)(q - 1) * (q - 1));
}

TEST_CASE("generator-conjugation closed forms (spot checks, q = 7)") {
    Fq F(7, 1);
    UGroup U(F);
    // u y_r(t) u^{-1} for a few explicit cases, against matrix conjugation.
    std::vector<UGroup::Coords> us = {
        {1, 2, 3, 4, 5, 6}, {2, 0, 1, 0, 3, 0}, {0, 5, 0, 2, 0, 1}, {3, 3, 3, 3, 3, 3}};
    for (const auto& u : us)
        for (int r = 1; r <= 6; ++r)
            for (int t = 0; t < F.q(); ++t) {
                UGroup::Coords x{};
                x[r - 1] = Fq::elem(t);
                CHECK(conj_gen_closed_form(F, u, r, Fq::elem(t)) == U.conj(u, x));
            }
}

TEST_CASE("irreducible character labels, degrees, and sum of squares") {
    Fq F(5, 1);
    auto xs = all_irr(F);
    int q = F.q();
    CHECK((long long)(xs.size()) == (long long)q * q * q + 2 * q * q - q - 1);
    std::map<long long, long long> per_degree;
    long long sumsq = 0;
    for (const auto& x : xs) {
        long long d = irr_degree(F, x);
        per_degree[d]++;
        sumsq += d * d;
    }
    CHECK(per_degree[1] == (long long)q * q);
    CHECK(per_degree[q] == (long long)q * q * q - 1);
    CHECK(per_degree[(long long)q * q] == (long long)q * q - q);
    long long q6 = 1;
    for (int i = 0; i < 6; ++i) q6 *= q;
    CHECK(sumsq == q6);
}

TEST_CASE("closed-form character values equal induced values (sampled, q = 5)") {
    Fq F(5, 1);
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    auto info = classify_classes(F, U, cc);
    auto xs = all_irr(F);
    // A handful of characters of each kind, evaluated at the canonical
    // member of every tenth class.
    std::vector<IrrId> sample;
    for (const auto& x : xs)
        if (sample.empty() || sample.back().kind != x.kind) sample.push_back(x);
    for (const auto& x : sample)
        for (size_t c = 0; c < info.size(); c += 10) {
            Cyclo closed = intcyc_to_cyclo(F.p(), irr_value(F, x, info[c]));
            Cyclo induced = irr_value_induced(F, U, x, info[c].canon);
            CHECK(closed == induced);
        }
}

TEST_CASE("p = 3 is rejected by the character-table layer") {
    Fq F(3, 1);
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    CHECK_THROWS_AS((void)verify_classes(F, U, cc, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)classify_classes(F, U, cc), std::invalid_argument);
    CHECK_THROWS_AS((void)irr_value(F, IrrId{}, ClassInfo{}), std::invalid_argument);
    CHECK_THROWS_AS((void)emit_character_table(F, U, TableFormat::Markdown),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)suite_chartab(F, true), std::invalid_argument);
}

TEST_CASE("class and character-table suite passes at q = 5") {
    Fq F(5, 1);
    for (const Check& c : suite_chartab(F, /*exhaustive=*/true)) {
        INFO(c.name << ": " << c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("emitted character table formats at q = 5") {
    Fq F(5, 1);
    UGroup U(F);
    std::string md = emit_character_table(F, U, TableFormat::Markdown);
    std::string js = emit_character_table(F, U, TableFormat::Json);
    CHECK(md.find("chi") != std::string::npos);
    CHECK(js.find("\"classes\"") != std::string::npos);
    CHECK(js.find("\"characters\"") != std::string::npos);
}
