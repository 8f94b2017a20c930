#include "g2syl/suites.hpp"

#include <random>
#include <set>
#include <unordered_map>

namespace g2syl {

namespace {

std::string coords_str(const UGroup::Coords& t) {
    std::string s = "y(";
    for (int i = 0; i < 6; ++i) s += std::to_string(t[i]) + (i < 5 ? "," : ")");
    return s;
}

std::string pattern_str(const Pattern& A) {
    std::string s = "[";
    for (int i = 0; i < 6; ++i) s += std::to_string(A.v[size_t(i)]) + (i < 5 ? "," : "]");
    return s;
}

Mat8Q unit_q(int i, int j) {
    Mat8Q m;
    m.at(i, j) = Rat(1);
    return m;
}

}  // namespace

std::vector<Check> suite_group(const Fq& F, bool exhaustive) {
    std::vector<Check> out;
    UGroup U(F);
    long long q = F.q();

    {
        // Structure constants of the six root elements over Q.
        Mat8Q e[7];
        for (int r = 1; r <= 6; ++r) e[r] = g2_root_matrix(r);
        bool ok = true;
        std::string witness;
        auto expect_bracket = [&](int i, int j) {
            if (i == 1 && j == 2) return e[3] * Rat(-1);
            if (i == 1 && j == 3) return e[4] * Rat(2);
            if (i == 1 && j == 4) return e[5] * Rat(3);
            if (i == 2 && j == 5) return e[6];
            if (i == 3 && j == 4) return e[6] * Rat(3);
            return Mat8Q::zero();
        };
        for (int i = 1; i <= 6 && ok; ++i)
            for (int j = i + 1; j <= 6 && ok; ++j)
                if (bracket(e[i], e[j]) != expect_bracket(i, j)) {
                    ok = false;
                    witness = "[e" + std::to_string(i) + ", e" + std::to_string(j) + "]";
                }
        auto expect_square = [&](int r) {
            if (r == 1) return unit_q(3, 6) * Rat(-2);
            if (r == 3) return unit_q(2, 7) * Rat(-2);
            if (r == 4) return unit_q(1, 8) * Rat(-2);
            return Mat8Q::zero();
        };
        for (int r = 1; r <= 6 && ok; ++r) {
            if (e[r] * e[r] != expect_square(r)) {
                ok = false;
                witness = "e" + std::to_string(r) + "^2";
            }
            if (e[r] * e[r] * e[r] != Mat8Q::zero()) {
                ok = false;
                witness = "e" + std::to_string(r) + "^3";
            }
        }
        // One-parameter subgroup law over Q.
        const Rat samples[3] = {Rat(2), Rat(-1, 3), Rat(5, 7)};
        for (int r = 1; r <= 6 && ok; ++r)
            for (const Rat& s : samples)
                for (const Rat& t : samples)
                    if (root_gen_q(r, s) * root_gen_q(r, t) != root_gen_q(r, s + t)) {
                        ok = false;
                        witness = "y" + std::to_string(r) + " one-parameter law";
                    }
        out.push_back({"structure-constants-rational", ok, witness});
    }

    std::mt19937 rng(515);
    std::uniform_int_distribution<long long> el(0, U.order() - 1);
    {
        // Closed-form matrix vs the ordered product of root generators, and
        // the coordinate round trip.
        bool ok = true;
        std::string witness;
        auto check = [&](const UGroup::Coords& c) {
            Mat8 m = U.matrix(c);
            if (m != U.matrix_product(c) || !U.contains(m) || U.coords_of(m) != c) {
                ok = false;
                witness = coords_str(c);
            }
        };
        if (exhaustive) {
            for (long long i = 0; i < U.order() && ok; ++i) check(U.coords_at(i));
        } else {
            for (int i = 0; i < 2000 && ok; ++i) check(U.coords_at(el(rng)));
        }
        out.push_back({std::string("closed-form-matrix-vs-ordered-product") +
                           (exhaustive ? "" : "-sampled"),
                       ok, witness});
    }

    {
        // Commutator closed forms, all generator pairs and parameter values.
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= 6 && ok; ++i)
            for (int j = i + 1; j <= 6 && ok; ++j)
                for (int s = 0; s < F.q() && ok; ++s)
                    for (int t = 0; t < F.q(); ++t) {
                        UGroup::Coords a{}, b{};
                        a[size_t(i - 1)] = Fq::elem(s);
                        b[size_t(j - 1)] = Fq::elem(t);
                        if (U.commutator(a, b) !=
                            commutator_closed_form(F, i, Fq::elem(s), j, Fq::elem(t))) {
                            ok = false;
                            witness = "[y" + std::to_string(i) + "(" + std::to_string(s) +
                                      "), y" + std::to_string(j) + "(" +
                                      std::to_string(t) + ")]";
                        }
                    }
        out.push_back({"commutator-closed-forms", ok, witness});
    }

    {
        // U sits inside the ambient algebra group, which is closed under
        // multiplication.
        bool ok = true;
        std::string witness;
        for (int i = 0; i < 500 && ok; ++i) {
            UGroup::Coords c = U.coords_at(el(rng));
            if (!g8::contains(U.matrix(c))) {
                ok = false;
                witness = coords_str(c);
            }
        }
        for (int i = 0; i < 200 && ok; ++i) {
            Mat8 a = g8::random_element(F, rng), b = g8::random_element(F, rng);
            if (!g8::contains(mul(F, a, b)) || !g8::contains(inverse_unipotent(F, a))) {
                ok = false;
                witness = "ambient closure";
            }
        }
        out.push_back({"ambient-group-contains-U-and-closed", ok, witness});
    }
    return out;
}

std::vector<Check> suite_orbits(const Fq& F, bool exhaustive) {
    std::vector<Check> out;
    UGroup U(F);
    long long q = F.q();
    long long n = U.order();  // also the number of patterns
    std::mt19937 rng(616);
    std::uniform_int_distribution<long long> pd(0, n - 1);

    {
        // Partition of all of pattern space by canonical cores: every core
        // class has exactly the family orbit size, cores are fixed points,
        // and the family is core-invariant.
        bool ok = true;
        std::string witness;
        std::unordered_map<long long, long long> bucket;
        for (long long i = 0; i < n && ok; ++i) {
            Pattern A = pattern_at(F, i);
            Pattern core = canonical_core(F, A);
            if (family_of(core) != family_of(A) || canonical_core(F, core) != core) {
                ok = false;
                witness = pattern_str(A);
            }
            ++bucket[pattern_index(F, core)];
        }
        long long total = 0;
        for (const auto& [ci, cnt] : bucket) {
            total += cnt;
            Pattern core = pattern_at(F, ci);
            if (cnt != family_orbit_size(family_of(core), F.q())) {
                ok = false;
                witness = pattern_str(core) + " core class size " + std::to_string(cnt);
            }
        }
        if (total != n) ok = false;
        out.push_back({"core-partition-of-pattern-space", ok, witness});
    }

    {
        // BFS orbits against the parametric closed form on family
        // representatives and random seeds.
        bool ok = true;
        std::string witness;
        std::vector<Pattern> seeds;
        Fq::elem one = 1, two = F.from_int(2);
        seeds.push_back(Pattern{{one, 0, 0, 0, 0, 0}});            // F12
        seeds.push_back(Pattern{{two, one, 0, 0, 0, one}});        // F3
        seeds.push_back(Pattern{{0, one, one, 0, 0, one}});        // F4
        seeds.push_back(Pattern{{one, one, one, one, 0, one}});    // F5
        seeds.push_back(Pattern{{one, one, one, one, one, one}});  // F6
        int extra = exhaustive ? 300 : 60;
        for (int i = 0; i < extra; ++i) seeds.push_back(pattern_at(F, pd(rng)));
        for (const Pattern& A : seeds) {
            std::vector<Pattern> bfs = orbit_of(F, A);
            std::vector<Pattern> par = orbit_closed_form(F, A);
            Pattern core = canonical_core(F, A);
            bool in_orbit = std::binary_search(bfs.begin(), bfs.end(), core);
            bool cores_match = true;
            for (const Pattern& B : bfs)
                if (canonical_core(F, B) != core) cores_match = false;
            if (bfs != par ||
                (long long)bfs.size() != family_orbit_size(family_of(A), F.q()) ||
                !in_orbit || !cores_match) {
                ok = false;
                witness = pattern_str(A);
                break;
            }
        }
        out.push_back({"orbit-bfs-vs-closed-form", ok, witness});
    }

    {
        // Parametrized stabilizers: every listed element fixes the seed, the
        // count matches, and orbit-stabilizer holds.  Exhaustive over all
        // seeds for q <= 5.
        bool ok = true;
        std::string witness;
        bool full = exhaustive && q <= 5;
        std::vector<long long> seed_idx;
        if (full) {
            seed_idx.resize(size_t(n));
            for (long long i = 0; i < n; ++i) seed_idx[size_t(i)] = i;
        } else {
            for (int i = 0; i < 120; ++i) seed_idx.push_back(pd(rng));
        }
        for (long long si : seed_idx) {
            Pattern A = pattern_at(F, si);
            long long osz = family_orbit_size(family_of(A), F.q());
            std::vector<UGroup::Coords> stab = stabilizer_coords(F, A);
            if ((long long)stab.size() * osz != n) {
                ok = false;
                witness = pattern_str(A) + " orbit-stabilizer";
                break;
            }
            for (const UGroup::Coords& c : stab) {
                Mat8 g = transpose(inverse_unipotent(F, U.matrix(c)));
                if (act_dot_pre(F, A, g) != A) {
                    ok = false;
                    witness = pattern_str(A) + " not fixed by " + coords_str(c);
                    break;
                }
            }
            if (!full) {
                std::set<UGroup::Coords> uniq(stab.begin(), stab.end());
                if (uniq.size() != stab.size()) {
                    ok = false;
                    witness = pattern_str(A) + " duplicate stabilizer entries";
                }
            }
            if (!ok) break;
        }
        out.push_back({std::string("stabilizers") + (full ? "-all-seeds" : "-sampled"),
                       ok, witness});
    }

    {
        // Hook separation and staircase predicates against the literal
        // hook definition H_l = {(i,j) : j = l or i = 9-l}.
        bool ok = true;
        std::string witness;
        for (long long i = 0; i < n && ok; ++i) {
            Pattern A = pattern_at(F, i);
            auto mains = main_conditions(A);
            bool hook_ok = true, stair_ok = true;
            for (size_t a = 0; a < mains.size(); ++a)
                for (size_t b = a + 1; b < mains.size(); ++b) {
                    for (int l = 1; l <= 8; ++l) {
                        bool on_a = mains[a].second == l || mains[a].first == 9 - l;
                        bool on_b = mains[b].second == l || mains[b].first == 9 - l;
                        if (on_a && on_b) hook_ok = false;
                    }
                    if (mains[a].first == mains[b].first ||
                        mains[a].second == mains[b].second)
                        stair_ok = false;
                }
            if (hook_separated(A) != hook_ok || staircase(A) != stair_ok) {
                ok = false;
                witness = pattern_str(A);
            }
        }
        out.push_back({"hook-and-staircase-predicates", ok, witness});
    }
    return out;
}

std::vector<Check> suite_super(const Fq& F, bool exhaustive) {
    UGroup U(F);
    std::vector<Check> out = verify_partition(F, U, nullptr);
    std::vector<Check> st = verify_supertheory(F, U, exhaustive);
    out.insert(out.end(), st.begin(), st.end());
    return out;
}

std::vector<Check> suite_chartab(const Fq& F, bool exhaustive) {
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    std::vector<Check> out = verify_classes(F, U, cc, exhaustive ? 10000 : 4000);

    std::vector<ClassInfo> info;
    try {
        info = classify_classes(F, U, cc);
    } catch (const std::logic_error& e) {
        out.push_back({"character-table-prerequisites", false, e.what()});
        return out;
    }
    std::vector<Check> ct =
        verify_character_table(F, U, cc, info, exhaustive && F.q() <= 5);
    out.insert(out.end(), ct.begin(), ct.end());
    if (F.q() <= 5) {
        std::vector<Check> sg = verify_subgroup_tables(F);
        out.insert(out.end(), sg.begin(), sg.end());
    }
    return out;
}

}  // namespace g2syl
