#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2syl/cyclo.hpp"
#include "g2syl/monomial.hpp"
#include "g2syl/orbits.hpp"

namespace g2syl {

/// Superclass labels.  The partition of U (for p > 2):
///   C0                    identity               size 1
///   C6(t6*)               y(0,0,0,0,0,t6*)       size 1
///   C5(t5*)               y(0,0,0,0,t5*,s6)      size q
///   C4(t4*)               y(0,0,0,t4*,s5,s6)     size q^2
///   C3(t3*)               y(0,0,t3*,s4,s5,s6)    size q^3
///   C2(t2*)               y(0,t2*,s3,s4,s5,s6)   size q^4
///   C1(t1*)               y(t1*,0,s3,s4,s5,s6)   size q^4
///   C12(t1*,t2*)          y(t1*,t2*,s3,...,s6)   size q^4
/// giving q^2 + 4q - 4 superclasses in total.
struct SuperclassId {
    enum Kind { C0, C1, C2, C12, C3, C4, C5, C6 };
    Kind kind = C0;
    Fq::elem a = 0, b = 0;

    friend bool operator==(const SuperclassId& x, const SuperclassId& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    }
    std::string str() const;
};

/// Classification of an element by its coordinates (Table-3 closed forms,
/// with the two t2-biorbit families merged into C2).
SuperclassId superclass_of(const Fq& F, const UGroup::Coords& t);

/// Sub-biorbit tag inside C2(t2*): sub = 0 is the family with biorbit
/// parameter t4* = t4 + t3^2/t2 nonzero, sub = 1 the family with t4
/// forced and parameter t5' = t5 - t3^3/t2^2.
struct C2Subtag {
    int sub = 0;
    Fq::elem param = 0;
};
C2Subtag c2_subtag(const Fq& F, const UGroup::Coords& t);

long long superclass_size(const Fq& F, const SuperclassId& k);
UGroup::Coords superclass_rep(const Fq& F, const SuperclassId& k);
/// All superclasses in a fixed canonical order (C0, C1, C2, C12, C3..C6,
/// parameters ascending).
std::vector<SuperclassId> all_superclasses(const Fq& F);

/// Supermodule labels.  Bases inside pattern space:
///   Lin(A12, A23): the single pattern A12 e12 + A23 e23
///   M13(A13*): A12 free                              (dim q)
///   M15(A15*): A12, A13, A23 free                    (dim q^3)
///   M16(A16*): A12, A13, A15, A23 free               (dim q^4)
///   M17(A17*): A12, A13, A15, A16 free, A23 = 0      (dim q^4)
struct SupermoduleId {
    enum Kind { Lin, M13, M15, M16, M17 };
    Kind kind = Lin;
    Fq::elem a = 0, b = 0;  // Lin: (A12, A23); others: starred parameter in a

    friend bool operator==(const SupermoduleId& x, const SupermoduleId& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    }
    std::string str() const;
};

std::vector<SupermoduleId> all_supermodules(const Fq& F);
/// Base pattern and free coordinate slots of the supermodule basis.
void supermodule_shape(const Fq& F, const SupermoduleId& m, Pattern& base,
                       std::vector<int>& free_slots);
std::vector<Pattern> supermodule_basis(const Fq& F, const SupermoduleId& m);
long long supermodule_dim(const Fq& F, const SupermoduleId& m);

/// A value of the special shape 0 or q^qpow * zeta_p^zexp; every
/// supercharacter value and every entry of the supercharacter table is of
/// this form.
struct MonoVal {
    bool zero = true;
    int qpow = 0;
    int zexp = 0;

    friend bool operator==(const MonoVal& x, const MonoVal& y) {
        return x.zero == y.zero && (x.zero || (x.qpow == y.qpow && x.zexp == y.zexp));
    }
};
Cyclo mono_to_cyclo(const Fq& F, const MonoVal& v);

/// Closed-form supercharacter table entry (p > 2):
///   rows Lin: theta(A12 t1* + A23 t2*) on C1/C2/C12/C0 columns, 1 elsewhere
///   M13(A13*): q on C0/C4/C5/C6, q theta(-A13* t3*) on C3, else 0
///   M15(A15*): q^3 on C0/C5/C6, q^3 theta(2 A15* t4*) on C4, else 0
///   M16(A16*): q^4 on C0/C6, q^4 theta(A16* t5*) on C5, else 0
///   M17(A17*): q^4 on C0, q^4 theta(A17* t6*) on C6, else 0.
MonoVal table4_value(const Fq& F, const SupermoduleId& m, const SuperclassId& k);

/// Exact value Psi_M(u) = sum over basis patterns C fixed by u of chi_C(u).
/// Uses the linearity of C -> C.u: the fixed basis patterns form an affine
/// subspace of the supermodule basis and the character sum over it either
/// vanishes or collapses to a single q-power-scaled root of unity.
MonoVal supercharacter_value(const Fq& F, const SupermoduleId& m,
                             const Mat8& u_inv_T, const Pattern& fu);

/// Brute-force value by per-pattern fix tests (cross-check oracle).
Cyclo supercharacter_value_bruteforce(const Fq& F, const SupermoduleId& m,
                                      const Mat8& u_inv_T, const Pattern& fu);

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

/// Superclass partition checks: classification totals, Table-3 sizes,
/// sub-biorbit tag consistency, |K| = q^2+4q-4, and (if class_of is given,
/// one id per element index) union-of-conjugacy-classes.
std::vector<Check> verify_partition(const Fq& F, const UGroup& U,
                                    const std::vector<int32_t>* class_of);

/// Supercharacter-theory axioms (a)-(d) plus Table-4 agreement.
/// exhaustive = per-element constancy over all of U (plus, at q <= 5, a
/// brute-force fix-test cross-check of the fast evaluator); otherwise
/// values are verified on representatives and a deterministic sample.
std::vector<Check> verify_supertheory(const Fq& F, const UGroup& U, bool exhaustive);

enum class TableFormat { Markdown, Csv, Json };

/// Emit the supercharacter table; every entry is cross-checked against the
/// closed form (a mismatch throws).
std::string emit_supercharacter_table(const Fq& F, const UGroup& U, TableFormat fmt);

}  // namespace g2syl
