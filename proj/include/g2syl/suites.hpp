#pragma once

#include <vector>

#include "g2syl/chartable.hpp"
#include "g2syl/orbits.hpp"
#include "g2syl/supertheory.hpp"

namespace g2syl {

/// Verification suites shared by the CLI `verify` subcommand and the
/// acceptance tests.  `exhaustive` selects full enumeration where feasible
/// (q <= 5, and for the cheaper checks q <= 9); otherwise deterministic
/// sampling is used.

/// Group construction: rational structure constants of the root elements,
/// closed-form matrices against ordered products of root generators, the
/// commutator closed forms, and containment in the ambient algebra group.
std::vector<Check> suite_group(const Fq& F, bool exhaustive);

/// Dual orbits on pattern space: breadth-first orbits against the
/// parametric closed form, orbit sizes, canonical cores, parametrized
/// stabilizers, and the orbit-stabilizer identity.
std::vector<Check> suite_orbits(const Fq& F, bool exhaustive);

/// Superclass partition and supercharacter theory.
std::vector<Check> suite_super(const Fq& F, bool exhaustive);

/// Conjugacy classes, irreducible character table, and the two subgroup
/// tables (requires p > 3; throws std::invalid_argument otherwise).
std::vector<Check> suite_chartab(const Fq& F, bool exhaustive);

}  // namespace g2syl
