#pragma once

#include <utility>
#include <vector>

#include "g2syl/cyclo.hpp"
#include "g2syl/monomial.hpp"

namespace g2syl {

/// The five families of right dual orbits on pattern space, named by the
/// first-row position of the rightmost nonzero coefficient (the first-row
/// main condition): F6 <-> (1,7), F5 <-> (1,6), F4 <-> (1,4)+(1,5),
/// F3 <-> (1,3), F12 <-> at most (1,2).
enum class Family { F12, F3, F4, F5, F6 };

const char* family_name(Family f);

/// Family of the orbit through A, read off the leading coefficient:
/// A17 != 0 -> F6; else A16 != 0 -> F5; else A15 != 0 -> F4;
/// else A13 != 0 -> F3; else F12.
Family family_of(const Pattern& A);

/// Orbit sizes per family: q^3, q^2, q^2, q, 1 for F6, F5, F4, F3, F12.
long long family_orbit_size(Family f, int q);

/// Orbit of A under the right dual action, by breadth-first search over the
/// generator moves A . y_r(t).  Returned sorted.
std::vector<Pattern> orbit_of(const Fq& F, const Pattern& A);

/// The same orbit from its parametric description: image of
///   (s1, s2, s3, s4) |-> A . y(s1, s2, s3, s4, *, *)
/// expanded into polynomial coordinate formulas.  Used as an independent
/// oracle for the BFS.  Returned sorted and deduplicated.
std::vector<Pattern> orbit_closed_form(const Fq& F, const Pattern& A);

/// The distinguished representative of O(A) supported on the core
/// positions (leading coefficients of both rows plus the tied twin):
///   F6 : (A12 + (A13 A16 + A15^2)/A17) e12 + A23 e23 + A17 e17
///   F5 : (A13 + A15^2/A16) e13 + A23 e23 + A16 e16
///   F4 : A15 (e14+e15) + A23 e23
///   F3 : A13 e13 + A23 e23
///   F12: A itself.
Pattern canonical_core(const Fq& F, const Pattern& A);

/// The stabilizer of A in U under the right dual action, as an explicit
/// parametrized family of coordinate tuples:
///   F6 : y(t1, 0, -A16 t1/A17, (2 A15 t1 + A16 t1^2)/A17, t5, t6)
///   F5 : y(0, t2, t3, (-A13 t2 - 2 A15 t3)/A16, t5, t6)
///   F4 : y(0, t2, -A13 t2/(2 A15), t4, t5, t6)
///   F3 : y(t1, 0, t3, t4, t5, t6)
///   F12: all of U.
std::vector<UGroup::Coords> stabilizer_coords(const Fq& F, const Pattern& A);

/// Main conditions of A: the rightmost nonzero coefficient position of each
/// row, as matrix positions (i, j); the tied slot reports as (1, 5).
std::vector<std::pair<int, int>> main_conditions(const Pattern& A);

/// No two main conditions on a common hook H_l = {(i,j): j = l or i = 9-l}.
/// Fails exactly for main sets {(1,7),(2,3)} and {(1,3),(2,3)}.
bool hook_separated(const Pattern& A);

/// Main conditions in pairwise distinct rows and columns.  Fails exactly
/// for the main set {(1,3),(2,3)}.
bool staircase(const Pattern& A);

/// First-row verge coefficient (the main-condition entry of row 1, or 0).
Fq::elem verge1(const Pattern& A);

/// Values of the orbit character psi_A(u) = sum over C in O(A) fixed by u
/// of chi_C(u), evaluated on every group element (indexed as in UGroup).
std::vector<ZSum> psi_on_group(const Fq& F, const UGroup& U,
                               const std::vector<Pattern>& orbit);

/// (1/|U|) sum_u f(u) conj(g(u)) for two functions given by their ZSum
/// values on every element.
Cyclo inner_product(const Fq& F, const std::vector<ZSum>& f,
                    const std::vector<ZSum>& g);

}  // namespace g2syl
