#include "g2syl/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2syl {

const char* family_name(Family f) {
    switch (f) {
        case Family::F12: return "F12";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
        case Family::F5: return "F5";
        case Family::F6: return "F6";
    }
    return "?";
}

Family family_of(const Pattern& A) {
    if (A.a17() != 0) return Family::F6;
    if (A.a16() != 0) return Family::F5;
    if (A.a15() != 0) return Family::F4;
    if (A.a13() != 0) return Family::F3;
    return Family::F12;
}

long long family_orbit_size(Family f, int q) {
    switch (f) {
        case Family::F6: return (long long)q * q * q;
        case Family::F5: return (long long)q * q;
        case Family::F4: return (long long)q * q;
        case Family::F3: return q;
        case Family::F12: return 1;
    }
    return 0;
}

std::vector<Pattern> orbit_of(const Fq& F, const Pattern& A) {
    // Precompute g^{-T} of every generator value y_r(t).
    std::vector<Mat8> moves;
    for (int r = 1; r <= 6; ++r)
        for (int t = 1; t < F.q(); ++t)
            moves.push_back(transpose(inverse_unipotent(F, root_gen(F, r, Fq::elem(t)))));

    std::set<Pattern> seen{A};
    std::vector<Pattern> frontier{A};
    while (!frontier.empty()) {
        std::vector<Pattern> next;
        for (const Pattern& C : frontier)
            for (const Mat8& g : moves) {
                Pattern D = act_dot_pre(F, C, g);
                if (seen.insert(D).second) next.push_back(D);
            }
        frontier = std::move(next);
    }
    return std::vector<Pattern>(seen.begin(), seen.end());
}

std::vector<Pattern> orbit_closed_form(const Fq& F, const Pattern& A) {
    auto add = [&](Fq::elem a, Fq::elem b) { return F.add(a, b); };
    auto sub = [&](Fq::elem a, Fq::elem b) { return F.sub(a, b); };
    auto mul = [&](Fq::elem a, Fq::elem b) { return F.mul(a, b); };
    Fq::elem two = F.from_int(2);

    std::set<Pattern> out;
    for (int s1 = 0; s1 < F.q(); ++s1)
        for (int s2 = 0; s2 < F.q(); ++s2)
            for (int s3 = 0; s3 < F.q(); ++s3)
                for (int s4 = 0; s4 < F.q(); ++s4) {
                    Fq::elem t1 = Fq::elem(s1), t2 = Fq::elem(s2);
                    Fq::elem t3 = Fq::elem(s3), t4 = Fq::elem(s4);
                    Pattern B;
                    // A16' = A16 + A17 t2
                    B.v[3] = add(A.a16(), mul(A.a17(), t2));
                    // A15' = A15 + A16 t1 + A17 t2 t1 + A17 t3
                    B.v[2] = add(add(A.a15(), mul(A.a16(), t1)),
                                 add(mul(A.a17(), mul(t2, t1)), mul(A.a17(), t3)));
                    // A13' = A13 - 2 A15 t1 - A16 t1^2 - A17 t2 t1^2 + A17 t4
                    Fq::elem t1sq = mul(t1, t1);
                    B.v[1] = add(sub(sub(sub(A.a13(), mul(two, mul(A.a15(), t1))),
                                         mul(A.a16(), t1sq)),
                                     mul(A.a17(), mul(t2, t1sq))),
                                 mul(A.a17(), t4));
                    // A12' = A12 - A13 t2 - 2 A15 t3 - 2 A16 t1 t3
                    //        - 2 A17 t2 t1 t3 - A17 t3^2 - A16 t4 - A17 t2 t4
                    Fq::elem v = A.a12();
                    v = sub(v, mul(A.a13(), t2));
                    v = sub(v, mul(two, mul(A.a15(), t3)));
                    v = sub(v, mul(two, mul(A.a16(), mul(t1, t3))));
                    v = sub(v, mul(two, mul(A.a17(), mul(t2, mul(t1, t3)))));
                    v = sub(v, mul(A.a17(), mul(t3, t3)));
                    v = sub(v, mul(A.a16(), t4));
                    v = sub(v, mul(A.a17(), mul(t2, t4)));
                    B.v[0] = v;
                    B.v[4] = A.a17();
                    B.v[5] = A.a23();
                    out.insert(B);
                }
    return std::vector<Pattern>(out.begin(), out.end());
}

Pattern canonical_core(const Fq& F, const Pattern& A) {
    Pattern C;
    switch (family_of(A)) {
        case Family::F6: {
            Fq::elem corr = F.div(
                F.add(F.mul(A.a13(), A.a16()), F.mul(A.a15(), A.a15())), A.a17());
            C.v[0] = F.add(A.a12(), corr);
            C.v[4] = A.a17();
            C.v[5] = A.a23();
            break;
        }
        case Family::F5:
            C.v[1] = F.add(A.a13(), F.div(F.mul(A.a15(), A.a15()), A.a16()));
            C.v[3] = A.a16();
            C.v[5] = A.a23();
            break;
        case Family::F4:
            C.v[2] = A.a15();
            C.v[5] = A.a23();
            break;
        case Family::F3:
            C.v[1] = A.a13();
            C.v[5] = A.a23();
            break;
        case Family::F12:
            C = A;
            break;
    }
    return C;
}

std::vector<UGroup::Coords> stabilizer_coords(const Fq& F, const Pattern& A) {
    std::vector<UGroup::Coords> out;
    Fq::elem two = F.from_int(2);
    switch (family_of(A)) {
        case Family::F6: {
            Fq::elem inv17 = F.inv(A.a17());
            for (int t1 = 0; t1 < F.q(); ++t1) {
                Fq::elem e1 = Fq::elem(t1);
                Fq::elem c3 = F.neg(F.mul(F.mul(A.a16(), e1), inv17));
                Fq::elem c4 = F.mul(
                    F.add(F.mul(two, F.mul(A.a15(), e1)), F.mul(A.a16(), F.mul(e1, e1))),
                    inv17);
                for (int t5 = 0; t5 < F.q(); ++t5)
                    for (int t6 = 0; t6 < F.q(); ++t6)
                        out.push_back({e1, 0, c3, c4, Fq::elem(t5), Fq::elem(t6)});
            }
            break;
        }
        case Family::F5: {
            Fq::elem inv16 = F.inv(A.a16());
            for (int t2 = 0; t2 < F.q(); ++t2)
                for (int t3 = 0; t3 < F.q(); ++t3) {
                    Fq::elem e2 = Fq::elem(t2), e3 = Fq::elem(t3);
                    Fq::elem c4 = F.neg(F.mul(
                        F.add(F.mul(A.a13(), e2), F.mul(two, F.mul(A.a15(), e3))),
                        inv16));
                    for (int t5 = 0; t5 < F.q(); ++t5)
                        for (int t6 = 0; t6 < F.q(); ++t6)
                            out.push_back({0, e2, e3, c4, Fq::elem(t5), Fq::elem(t6)});
                }
            break;
        }
        case Family::F4: {
            Fq::elem coef = F.neg(F.div(A.a13(), F.mul(two, A.a15())));
            for (int t2 = 0; t2 < F.q(); ++t2) {
                Fq::elem e2 = Fq::elem(t2);
                Fq::elem c3 = F.mul(coef, e2);
                for (int t4 = 0; t4 < F.q(); ++t4)
                    for (int t5 = 0; t5 < F.q(); ++t5)
                        for (int t6 = 0; t6 < F.q(); ++t6)
                            out.push_back({0, e2, c3, Fq::elem(t4), Fq::elem(t5),
                                           Fq::elem(t6)});
            }
            break;
        }
        case Family::F3:
            for (int t1 = 0; t1 < F.q(); ++t1)
                for (int t3 = 0; t3 < F.q(); ++t3)
                    for (int t4 = 0; t4 < F.q(); ++t4)
                        for (int t5 = 0; t5 < F.q(); ++t5)
                            for (int t6 = 0; t6 < F.q(); ++t6)
                                out.push_back({Fq::elem(t1), 0, Fq::elem(t3),
                                               Fq::elem(t4), Fq::elem(t5),
                                               Fq::elem(t6)});
            break;
        case Family::F12: {
            long long n = 1;
            for (int i = 0; i < 6; ++i) n *= F.q();
            UGroup U(F);
            for (long long i = 0; i < n; ++i) out.push_back(U.coords_at(i));
            break;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> main_conditions(const Pattern& A) {
    std::vector<std::pair<int, int>> m;
    if (A.a17() != 0) m.emplace_back(1, 7);
    else if (A.a16() != 0) m.emplace_back(1, 6);
    else if (A.a15() != 0) m.emplace_back(1, 5);
    else if (A.a13() != 0) m.emplace_back(1, 3);
    else if (A.a12() != 0) m.emplace_back(1, 2);
    if (A.a23() != 0) m.emplace_back(2, 3);
    return m;
}

bool hook_separated(const Pattern& A) {
    auto m = main_conditions(A);
    if (m.size() < 2) return true;
    // Hooks H_l: (i,j) lies on H_j and H_{9-i}.  Both mains have i in {1,2},
    // so a collision happens iff the columns agree or j1 = 9 - i2 etc.
    auto& a = m[0];
    auto& b = m[1];
    return !(a.second == b.second || a.second == 9 - b.first || b.second == 9 - a.first);
}

bool staircase(const Pattern& A) {
    auto m = main_conditions(A);
    if (m.size() < 2) return true;
    return m[0].first != m[1].first && m[0].second != m[1].second;
}

Fq::elem verge1(const Pattern& A) {
    if (A.a17() != 0) return A.a17();
    if (A.a16() != 0) return A.a16();
    if (A.a15() != 0) return A.a15();
    if (A.a13() != 0) return A.a13();
    return A.a12();
}

std::vector<ZSum> psi_on_group(const Fq& F, const UGroup& U,
                               const std::vector<Pattern>& orbit) {
    const auto& invT = U.all_inv_transposes();
    const auto& mats = U.all_matrices();
    std::vector<ZSum> vals(size_t(U.order()), ZSum(F.p()));
    for (long long ui = 0; ui < U.order(); ++ui) {
        Pattern fu = cocycle(F, mats[size_t(ui)]);
        const Mat8& g = invT[size_t(ui)];
        for (const Pattern& C : orbit) {
            if (act_dot_pre(F, C, g) == C)
                vals[size_t(ui)].add_zeta(chi_exponent(F, C, fu));
        }
    }
    return vals;
}

Cyclo inner_product(const Fq& F, const std::vector<ZSum>& f,
                    const std::vector<ZSum>& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("inner_product: size mismatch");
    int p = F.p();
    std::vector<long long> bins(p, 0);
    for (size_t u = 0; u < f.size(); ++u)
        for (int e1 = 0; e1 < p; ++e1) {
            long long c1 = f[u].cnt[e1];
            if (c1 == 0) continue;
            for (int e2 = 0; e2 < p; ++e2) {
                long long c2 = g[u].cnt[e2];
                if (c2 != 0) bins[(e1 - e2 + p) % p] += c1 * c2;
            }
        }
    Cyclo sum(p);
    for (int e = 0; e < p; ++e)
        if (bins[e] != 0) sum.add_zeta_multiple(e, Rat(bins[e]));
    return sum * Rat(1, (long long)f.size());
}

}  // namespace g2syl
