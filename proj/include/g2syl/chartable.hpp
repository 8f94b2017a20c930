#pragma once

#include <string>
#include <vector>

#include "g2syl/supertheory.hpp"

namespace g2syl {

/// Conjugacy classes of U, computed by breadth-first search under
/// conjugation by the root generators (valid for every odd p).
struct ConjClasses {
    std::vector<int32_t> class_of;  // per element index
    std::vector<long long> rep;     // element index of the BFS seed per class
    std::vector<long long> size;
};
ConjClasses conjugacy_classes(const Fq& F, const UGroup& U);

/// Shape of a conjugacy class (p > 3), read off the canonical member:
///   I8               identity                                  size 1
///   Y6   y(0,0,0,0,0,c6), c6 != 0                              size 1
///   Y5   y(0,0,0,0,c5,0), c5 != 0                              size q
///   Y4   y(0,0,0,c4,0,0), c4 != 0                              size q^2
///   Y3Y5 y(0,0,c3,0,c5,0), c3 != 0                             size q^2
///   Y2   y(0,c2,0,c4,c5,0), c2 != 0                            size q^2
///   Y1Y6 y(c1,0,0,0,0,c6), c1 != 0                             size q^3
///   Y1Y2 y(c1,c2,0,0,0,0), c1,c2 != 0                          size q^4
/// The canonical member is the unique one whose free coordinate slots are
/// zero (t3..t6 / t3,t4,t5 / t3,t6 / t4,t6 / t5,t6 / t6 by shape).
enum class ClassShape { I8, Y6, Y5, Y4, Y3Y5, Y2, Y1Y6, Y1Y2 };
const char* class_shape_name(ClassShape s);

struct ClassInfo {
    ClassShape shape = ClassShape::I8;
    UGroup::Coords canon{};  // the canonical member
    std::string str() const;
};

/// Canonical member of every class; throws std::logic_error if some class
/// does not contain exactly one template member (p > 3 structure).
std::vector<ClassInfo> classify_classes(const Fq& F, const UGroup& U,
                                        const ConjClasses& cc);

/// Closed form for the conjugate u y_r(t) u^{-1}, u = y(r1..r6), p > 3,
/// expressed as a product of root generators and returned in coordinates.
UGroup::Coords conj_gen_closed_form(const Fq& F, const UGroup::Coords& u, int r,
                                    Fq::elem t);

/// Irreducible character labels (p > 3):
///   Lin(A12, A23)        degree 1     q^2 characters
///   X3(A13*)             degree q     q-1
///   X4(A15*, A23)        degree q     (q-1) q
///   X5(A16*, A23, A13)   degree q     (q-1) q^2
///   X6(A17*, A12)        degree q^2   (q-1) q
struct IrrId {
    enum Kind { Lin, X3, X4, X5, X6 };
    Kind kind = Lin;
    Fq::elem a = 0, b = 0, c = 0;
    std::string str() const;
};
std::vector<IrrId> all_irr(const Fq& F);
long long irr_degree(const Fq& F, const IrrId& x);

/// Integer cyclotomic value: counts of zeta_p^0 .. zeta_p^{p-1}
/// (unreduced); every character-table entry is of this form.
using IntCyc = std::vector<long long>;
Cyclo intcyc_to_cyclo(int p, const IntCyc& v);

/// Closed-form character value on the class with the given canonical
/// coordinates (p > 3).
IntCyc irr_value(const Fq& F, const IrrId& x, const ClassInfo& cls);

/// Independent evaluation at an arbitrary element: linear characters from
/// the abelianization, the others as induced characters of explicit linear
/// characters of subgroups of quotients of U (quotients are realized by
/// coordinate truncation).
Cyclo irr_value_induced(const Fq& F, const UGroup& U, const IrrId& x,
                        const UGroup::Coords& u);

/// Conjugacy structure checks (p > 3): class count and size multiset,
/// canonical-member uniqueness and shape counts, the generator-conjugation
/// closed forms on random pairs, and superclasses as unions of classes.
std::vector<Check> verify_classes(const Fq& F, const UGroup& U,
                                  const ConjClasses& cc, int random_pairs);

/// Irreducible character table checks (p > 3): counts and degrees, row
/// orthonormality and column orthogonality, closed forms against the
/// induced-character evaluation on several members of each class,
/// homomorphism premises, quadratic Gauss sum norms, and the decomposition
/// of every supercharacter into irreducible characters.  exhaustive = all
/// pairs / all classes (q = 5); otherwise a deterministic sample.
std::vector<Check> verify_character_table(const Fq& F, const UGroup& U,
                                          const ConjClasses& cc,
                                          const std::vector<ClassInfo>& info,
                                          bool exhaustive);

/// Character tables of two subgroups (p > 3), each verified by counts,
/// degrees, orthonormality, and induced-vs-closed-form evaluation:
///   H = Y1 Y4 Y5 Y6  (order q^4):  q^3 linear characters
///       theta(A12 t1 + 2 A15 t4 + A17 t6) and (q-1) q characters of
///       degree q induced from Y4 Y5 Y6;
///   T = Y2 Y3 Y4 Y5 Y6  (order q^5):  q^4 linear characters
///       theta(A23 t2 - A13 t3 + 2 A15 t4 + A16 t5) and q-1 characters of
///       degree q^2 induced from Y4 Y5 Y6.
std::vector<Check> verify_subgroup_tables(const Fq& F);

/// Emit the full irreducible character table (p > 3); entries are
/// cross-checked against the induced-character evaluation at the canonical
/// class members (a mismatch throws).
std::string emit_character_table(const Fq& F, const UGroup& U, TableFormat fmt);

}  // namespace g2syl
