#include "g2syl/chartable.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace g2syl {

namespace {

std::string coords_str(const UGroup::Coords& t) {
    std::string s = "y(";
    for (int i = 0; i < 6; ++i) s += std::to_string(t[i]) + (i < 5 ? "," : ")");
    return s;
}

void require_p_gt_3(const Fq& F, const char* what) {
    if (F.p() <= 3)
        throw std::invalid_argument(std::string(what) + " requires p > 3");
}

}  // namespace

ConjClasses conjugacy_classes(const Fq& F, const UGroup& U) {
    const auto& mats = U.all_matrices();
    long long n = U.order();

    std::vector<std::pair<Mat8, Mat8>> gens;  // (g, g^{-1}) per generator value
    for (int r = 1; r <= 6; ++r)
        for (int t = 1; t < F.q(); ++t) {
            Mat8 g = root_gen(F, r, Fq::elem(t));
            gens.emplace_back(g, inverse_unipotent(F, g));
        }

    ConjClasses cc;
    cc.class_of.assign(size_t(n), -1);
    std::vector<long long> stack;
    for (long long i = 0; i < n; ++i) {
        if (cc.class_of[size_t(i)] >= 0) continue;
        int32_t cid = int32_t(cc.rep.size());
        cc.rep.push_back(i);
        cc.class_of[size_t(i)] = cid;
        stack.assign(1, i);
        long long sz = 0;
        while (!stack.empty()) {
            long long v = stack.back();
            stack.pop_back();
            ++sz;
            for (const auto& [g, gi] : gens) {
                Mat8 m = mul(F, mul(F, g, mats[size_t(v)]), gi);
                long long j = U.index_of(U.coords_of(m));
                if (cc.class_of[size_t(j)] < 0) {
                    cc.class_of[size_t(j)] = cid;
                    stack.push_back(j);
                }
            }
        }
        cc.size.push_back(sz);
    }
    return cc;
}

const char* class_shape_name(ClassShape s) {
    switch (s) {
        case ClassShape::I8: return "I8";
        case ClassShape::Y6: return "Y6";
        case ClassShape::Y5: return "Y5";
        case ClassShape::Y4: return "Y4";
        case ClassShape::Y3Y5: return "Y3Y5";
        case ClassShape::Y2: return "Y2";
        case ClassShape::Y1Y6: return "Y1Y6";
        case ClassShape::Y1Y2: return "Y1Y2";
    }
    return "?";
}

std::string ClassInfo::str() const { return coords_str(canon); }

namespace {

// The canonical-member template: the free slots of the class shape are zero.
bool canonical_template(const UGroup::Coords& t) {
    if (t[0] != 0 && t[1] != 0) return t[2] == 0 && t[3] == 0 && t[4] == 0 && t[5] == 0;
    if (t[0] != 0) return t[2] == 0 && t[3] == 0 && t[4] == 0;
    if (t[1] != 0) return t[2] == 0 && t[5] == 0;
    if (t[2] != 0) return t[3] == 0 && t[5] == 0;
    if (t[3] != 0) return t[4] == 0 && t[5] == 0;
    if (t[4] != 0) return t[5] == 0;
    return true;  // identity and pure y6 elements
}

ClassShape shape_of(const UGroup::Coords& t) {
    if (t[0] != 0) return t[1] != 0 ? ClassShape::Y1Y2 : ClassShape::Y1Y6;
    if (t[1] != 0) return ClassShape::Y2;
    if (t[2] != 0) return ClassShape::Y3Y5;
    if (t[3] != 0) return ClassShape::Y4;
    if (t[4] != 0) return ClassShape::Y5;
    if (t[5] != 0) return ClassShape::Y6;
    return ClassShape::I8;
}

long long shape_class_size(ClassShape s, long long q) {
    switch (s) {
        case ClassShape::I8:
        case ClassShape::Y6: return 1;
        case ClassShape::Y5: return q;
        case ClassShape::Y4:
        case ClassShape::Y3Y5:
        case ClassShape::Y2: return q * q;
        case ClassShape::Y1Y6: return q * q * q;
        case ClassShape::Y1Y2: return q * q * q * q;
    }
    return 0;
}

}  // namespace

std::vector<ClassInfo> classify_classes(const Fq& F, const UGroup& U,
                                        const ConjClasses& cc) {
    require_p_gt_3(F, "class shape classification");
    std::vector<ClassInfo> info(cc.rep.size());
    std::vector<int> found(cc.rep.size(), 0);
    for (long long i = 0; i < U.order(); ++i) {
        UGroup::Coords t = U.coords_at(i);
        if (!canonical_template(t)) continue;
        size_t cid = size_t(cc.class_of[size_t(i)]);
        if (++found[cid] > 1)
            throw std::logic_error("conjugacy class has two canonical members: " +
                                   coords_str(info[cid].canon) + " and " + coords_str(t));
        info[cid].canon = t;
        info[cid].shape = shape_of(t);
    }
    for (size_t cid = 0; cid < info.size(); ++cid)
        if (found[cid] != 1)
            throw std::logic_error("conjugacy class of " +
                                   coords_str(U.coords_at(cc.rep[cid])) +
                                   " has no canonical member");
    return info;
}

UGroup::Coords conj_gen_closed_form(const Fq& F, const UGroup::Coords& u, int r,
                                    Fq::elem t) {
    require_p_gt_3(F, "the generator conjugation closed form");
    Fq::elem r1 = u[0], r2 = u[1], r3 = u[2], r4 = u[3], r5 = u[4];
    Fq::elem two = F.from_int(2), three = F.from_int(3), six = F.from_int(6);
    Fq::elem t2 = F.mul(t, t), t3c = F.mul(t2, t);
    Fq::elem a3 = 0, a4 = 0, a5 = 0, a6 = 0;
    switch (r) {
        case 1:
            a3 = F.mul(r2, t);
            a4 = F.neg(F.add(F.mul(r2, t2), F.mul(two, F.mul(t, r3))));
            // r2 t^3 + 3 r3 t^2 - 6 r1 r3 t - 3 t r4
            a5 = F.sub(F.sub(F.add(F.mul(r2, t3c), F.mul(three, F.mul(r3, t2))),
                             F.mul(six, F.mul(r1, F.mul(r3, t)))),
                       F.mul(three, F.mul(t, r4)));
            // 2 r2^2 t^3 - 6 r1 r2 r3 t + 3 r2 r3 t^2 - 3 r2 r4 t - 3 t r3^2
            a6 = F.add(F.mul(two, F.mul(F.mul(r2, r2), t3c)),
                       F.mul(three, F.mul(r2, F.mul(r3, t2))));
            a6 = F.sub(a6, F.mul(six, F.mul(r1, F.mul(r2, F.mul(r3, t)))));
            a6 = F.sub(a6, F.mul(three, F.mul(r2, F.mul(r4, t))));
            a6 = F.sub(a6, F.mul(three, F.mul(t, F.mul(r3, r3))));
            break;
        case 2: {
            Fq::elem r1sq = F.mul(r1, r1), r1cu = F.mul(r1sq, r1);
            a3 = F.neg(F.mul(r1, t));
            a4 = F.neg(F.mul(t, r1sq));
            a5 = F.neg(F.mul(t, r1cu));
            a6 = F.neg(F.add(F.mul(t, r5),
                             F.add(F.mul(t2, r1cu), F.mul(t, F.mul(r1cu, r2)))));
            break;
        }
        case 3: {
            Fq::elem r1sq = F.mul(r1, r1);
            a4 = F.mul(two, F.mul(r1, t));
            a5 = F.mul(three, F.mul(r1sq, t));
            a6 = F.sub(F.sub(F.mul(three, F.mul(r1sq, F.mul(r2, t))),
                             F.mul(three, F.mul(r1, t2))),
                       F.mul(three, F.mul(t, r4)));
            break;
        }
        case 4:
            a5 = F.mul(three, F.mul(r1, t));
            a6 = F.mul(three, F.add(F.mul(r1, F.mul(r2, t)), F.mul(r3, t)));
            break;
        case 5:
            a6 = F.mul(r2, t);
            break;
        case 6:
            break;
        default:
            throw std::invalid_argument("generator index out of range");
    }
    Mat8 m = root_gen(F, r, t);
    m = mul(F, m, root_gen(F, 3, a3));
    m = mul(F, m, root_gen(F, 4, a4));
    m = mul(F, m, root_gen(F, 5, a5));
    m = mul(F, m, root_gen(F, 6, a6));
    return UGroup(F).coords_of(m);
}

std::string IrrId::str() const {
    switch (kind) {
        case Lin:
            return "chi_lin(A12=" + std::to_string(a) + ",A23=" + std::to_string(b) + ")";
        case X3: return "chi_3(A13*=" + std::to_string(a) + ")";
        case X4:
            return "chi_4(A15*=" + std::to_string(a) + ",A23=" + std::to_string(b) + ")";
        case X5:
            return "chi_5(A16*=" + std::to_string(a) + ",A23=" + std::to_string(b) +
                   ",A13=" + std::to_string(c) + ")";
        case X6:
            return "chi_6(A17*=" + std::to_string(a) + ",A12=" + std::to_string(b) + ")";
    }
    return "?";
}

std::vector<IrrId> all_irr(const Fq& F) {
    std::vector<IrrId> v;
    for (int a = 0; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            v.push_back({IrrId::Lin, Fq::elem(a), Fq::elem(b), 0});
    for (int a = 1; a < F.q(); ++a) v.push_back({IrrId::X3, Fq::elem(a), 0, 0});
    for (int a = 1; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            v.push_back({IrrId::X4, Fq::elem(a), Fq::elem(b), 0});
    for (int a = 1; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            for (int c = 0; c < F.q(); ++c)
                v.push_back({IrrId::X5, Fq::elem(a), Fq::elem(b), Fq::elem(c)});
    for (int a = 1; a < F.q(); ++a)
        for (int b = 0; b < F.q(); ++b)
            v.push_back({IrrId::X6, Fq::elem(a), Fq::elem(b), 0});
    return v;
}

long long irr_degree(const Fq& F, const IrrId& x) {
    switch (x.kind) {
        case IrrId::Lin: return 1;
        case IrrId::X3:
        case IrrId::X4:
        case IrrId::X5: return F.q();
        case IrrId::X6: return (long long)F.q() * F.q();
    }
    return 0;
}

Cyclo intcyc_to_cyclo(int p, const IntCyc& v) {
    Cyclo c(p);
    for (int e = 0; e < p; ++e)
        if (v[size_t(e)] != 0) c.add_zeta_multiple(e, Rat(v[size_t(e)]));
    return c;
}

IntCyc irr_value(const Fq& F, const IrrId& x, const ClassInfo& cls) {
    require_p_gt_3(F, "the irreducible character closed forms");
    IntCyc v(size_t(F.p()), 0);
    const UGroup::Coords& c = cls.canon;
    Fq::elem c1 = c[0], c2 = c[1], c3 = c[2], c4 = c[3], c5 = c[4], c6 = c[5];
    Fq::elem two = F.from_int(2), three = F.from_int(3);
    long long q = F.q();
    switch (x.kind) {
        case IrrId::Lin:
            v[size_t(F.trace(F.add(F.mul(x.a, c1), F.mul(x.b, c2))))] += 1;
            break;
        case IrrId::X3:
            if (c1 == 0 && c2 == 0)
                v[size_t(F.trace(F.neg(F.mul(x.a, c3))))] += q;
            break;
        case IrrId::X4:
            if (c1 != 0) break;
            if (c2 != 0) {
                // sum_r theta(-2 A15* c2 r^2 + 2 A15* c4 + A23 c2)
                Fq::elem fixed = F.add(F.mul(two, F.mul(x.a, c4)), F.mul(x.b, c2));
                for (int ri = 0; ri < F.q(); ++ri) {
                    Fq::elem r = Fq::elem(ri);
                    Fq::elem e = F.sub(
                        fixed, F.mul(two, F.mul(x.a, F.mul(c2, F.mul(r, r)))));
                    v[size_t(F.trace(e))] += 1;
                }
            } else if (c3 != 0) {
                // zero on the Y3Y5 classes
            } else {
                v[size_t(F.trace(F.mul(two, F.mul(x.a, c4))))] += q;
            }
            break;
        case IrrId::X5:
            if (c1 != 0) break;
            if (c2 != 0) {
                // sum_r theta(A13 c2 r - A16* c2 r^3 + 3 A16* c4 r
                //             + A16* c5 + A23 c2)
                Fq::elem fixed = F.add(F.mul(x.a, c5), F.mul(x.b, c2));
                for (int ri = 0; ri < F.q(); ++ri) {
                    Fq::elem r = Fq::elem(ri);
                    Fq::elem e = fixed;
                    e = F.add(e, F.mul(x.c, F.mul(c2, r)));
                    e = F.sub(e, F.mul(x.a, F.mul(c2, F.mul(r, F.mul(r, r)))));
                    e = F.add(e, F.mul(three, F.mul(x.a, F.mul(c4, r))));
                    v[size_t(F.trace(e))] += 1;
                }
            } else if (c3 != 0) {
                // sum_r theta(3 A16* c3 r^2 + A16* c5 - A13 c3)
                Fq::elem fixed = F.sub(F.mul(x.a, c5), F.mul(x.c, c3));
                for (int ri = 0; ri < F.q(); ++ri) {
                    Fq::elem r = Fq::elem(ri);
                    Fq::elem e = F.add(
                        fixed, F.mul(three, F.mul(x.a, F.mul(c3, F.mul(r, r)))));
                    v[size_t(F.trace(e))] += 1;
                }
            } else if (c4 != 0) {
                // zero on the Y4 classes
            } else {
                v[size_t(F.trace(F.mul(x.a, c5)))] += q;
            }
            break;
        case IrrId::X6:
            if (cls.shape == ClassShape::I8) {
                v[0] += q * q;
            } else if (cls.shape == ClassShape::Y6) {
                v[size_t(F.trace(F.mul(x.a, c6)))] += q * q;
            } else if (cls.shape == ClassShape::Y1Y6) {
                // theta(A17* c6 + A12 c1) sum_r theta(-3 A17* c1 r^2)
                Fq::elem fixed = F.add(F.mul(x.a, c6), F.mul(x.b, c1));
                for (int ri = 0; ri < F.q(); ++ri) {
                    Fq::elem r = Fq::elem(ri);
                    Fq::elem e = F.sub(
                        fixed, F.mul(three, F.mul(x.a, F.mul(c1, F.mul(r, r)))));
                    v[size_t(F.trace(e))] += 1;
                }
            }
            break;
    }
    return v;
}

namespace {

// Coset representatives for the induced-character constructions, per kind:
//   X3: quotient on coords (t1,t2,t3), subgroup {t2 = 0}, reps y2(s)
//   X4: quotient on (t1..t4), subgroup {t1 = 0}, reps y1(s)
//   X5: quotient on (t1..t5), subgroup {t1 = 0}, reps y1(s)
//   X6: all of U, subgroup {t2 = t3 = 0}, reps y(0,a,b,0,0,0).
// The quotients are realized by simply ignoring the truncated coordinates.
std::vector<UGroup::Coords> kind_rep_coords(const Fq& F, IrrId::Kind k) {
    std::vector<UGroup::Coords> reps;
    switch (k) {
        case IrrId::X3:
            for (int s = 0; s < F.q(); ++s) reps.push_back({0, Fq::elem(s), 0, 0, 0, 0});
            break;
        case IrrId::X4:
        case IrrId::X5:
            for (int s = 0; s < F.q(); ++s) reps.push_back({Fq::elem(s), 0, 0, 0, 0, 0});
            break;
        case IrrId::X6:
            for (int a = 0; a < F.q(); ++a)
                for (int b = 0; b < F.q(); ++b)
                    reps.push_back({0, Fq::elem(a), Fq::elem(b), 0, 0, 0});
            break;
        default:
            break;
    }
    return reps;
}

std::vector<UGroup::Coords> conjugates_under(const Fq& F, const UGroup& U,
                                             const std::vector<UGroup::Coords>& reps,
                                             const UGroup::Coords& u) {
    (void)F;
    std::vector<UGroup::Coords> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(U.conj(r, u));
    return out;
}

bool induced_subgroup_member(IrrId::Kind k, const UGroup::Coords& c) {
    switch (k) {
        case IrrId::X3: return c[1] == 0;
        case IrrId::X4:
        case IrrId::X5: return c[0] == 0;
        case IrrId::X6: return c[1] == 0 && c[2] == 0;
        default: return true;
    }
}

int induced_lambda_exp(const Fq& F, const IrrId& x, const UGroup::Coords& c) {
    switch (x.kind) {
        case IrrId::X3:
            return F.trace(F.neg(F.mul(x.a, c[2])));
        case IrrId::X4:
            return F.trace(F.add(F.mul(x.b, c[1]),
                                 F.mul(F.from_int(2), F.mul(x.a, c[3]))));
        case IrrId::X5:
            return F.trace(F.add(F.sub(F.mul(x.b, c[1]), F.mul(x.c, c[2])),
                                 F.mul(x.a, c[4])));
        case IrrId::X6:
            return F.trace(F.add(F.mul(x.b, c[0]), F.mul(x.a, c[5])));
        default:
            return 0;
    }
}

ZSum induced_from_conjugates(const Fq& F, const IrrId& x,
                             const std::vector<UGroup::Coords>& conjs) {
    ZSum s(F.p());
    for (const auto& c : conjs)
        if (induced_subgroup_member(x.kind, c)) s.add_zeta(induced_lambda_exp(F, x, c));
    return s;
}

}  // namespace

Cyclo irr_value_induced(const Fq& F, const UGroup& U, const IrrId& x,
                        const UGroup::Coords& u) {
    require_p_gt_3(F, "the induced-character evaluation");
    if (x.kind == IrrId::Lin)
        return Cyclo::zeta_pow(F.p(),
                               F.trace(F.add(F.mul(x.a, u[0]), F.mul(x.b, u[1]))));
    auto reps = kind_rep_coords(F, x.kind);
    return induced_from_conjugates(F, x, conjugates_under(F, U, reps, u)).to_cyclo();
}

std::vector<Check> verify_classes(const Fq& F, const UGroup& U,
                                  const ConjClasses& cc, int random_pairs) {
    require_p_gt_3(F, "the conjugacy class structure checks");
    std::vector<Check> out;
    long long q = F.q();
    long long expect_count = q * q * q + 2 * q * q - q - 1;
    out.push_back({"class-count", (long long)cc.rep.size() == expect_count,
                   std::to_string(cc.rep.size()) + " vs q^3+2q^2-q-1 = " +
                       std::to_string(expect_count)});

    {
        std::map<long long, long long> got, want;
        for (long long s : cc.size) ++got[s];
        want[1] = q;                                // identity + pure y6
        want[q] += q - 1;                           // y5
        want[q * q] = (q - 1) * (1 + q + q * q);    // y4, y3y5, y2 families
        want[q * q * q] = (q - 1) * q;              // y1y6
        want[q * q * q * q] = (q - 1) * (q - 1);    // y1y2
        out.push_back({"class-size-multiset", got == want, ""});
    }

    std::vector<ClassInfo> info;
    bool classified = true;
    std::string classify_witness;
    try {
        info = classify_classes(F, U, cc);
    } catch (const std::logic_error& e) {
        classified = false;
        classify_witness = e.what();
    }
    out.push_back({"class-canonical-member-unique", classified, classify_witness});

    if (classified) {
        std::map<ClassShape, long long> got, want;
        bool sizes_ok = true;
        std::string witness;
        for (size_t i = 0; i < info.size(); ++i) {
            ++got[info[i].shape];
            if (cc.size[i] != shape_class_size(info[i].shape, q)) {
                sizes_ok = false;
                witness = info[i].str();
            }
        }
        want[ClassShape::I8] = 1;
        want[ClassShape::Y6] = q - 1;
        want[ClassShape::Y5] = q - 1;
        want[ClassShape::Y4] = q - 1;
        want[ClassShape::Y3Y5] = (q - 1) * q;
        want[ClassShape::Y2] = (q - 1) * q * q;
        want[ClassShape::Y1Y6] = (q - 1) * q;
        want[ClassShape::Y1Y2] = (q - 1) * (q - 1);
        out.push_back({"class-shape-counts", got == want, ""});
        out.push_back({"class-shape-sizes", sizes_ok, witness});
    }

    {
        // Generator conjugation closed forms on random (u, y_r(t)) pairs.
        std::mt19937 rng(811);
        std::uniform_int_distribution<long long> el(0, U.order() - 1);
        std::uniform_int_distribution<int> rd(1, 6), td(1, F.q() - 1);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < random_pairs && ok; ++i) {
            UGroup::Coords u = U.coords_at(el(rng));
            int r = rd(rng);
            Fq::elem t = Fq::elem(td(rng));
            UGroup::Coords gen{};
            gen[size_t(r - 1)] = t;
            if (U.conj(u, gen) != conj_gen_closed_form(F, u, r, t)) {
                ok = false;
                witness = coords_str(u) + " conj y" + std::to_string(r) + "(" +
                          std::to_string(t) + ")";
            }
        }
        out.push_back({"conjugation-closed-form-random", ok, witness});
    }

    if (classified) {
        // Every superclass is the stated union of conjugacy classes.
        bool ok = true;
        std::string witness;
        std::map<std::string, long long> size_sum, class_cnt;
        for (size_t i = 0; i < info.size(); ++i) {
            SuperclassId k_canon = superclass_of(F, info[i].canon);
            SuperclassId k_rep = superclass_of(F, U.coords_at(cc.rep[i]));
            if (!(k_canon == k_rep)) {
                ok = false;
                witness = info[i].str();
            }
            size_sum[k_canon.str()] += cc.size[i];
            class_cnt[k_canon.str()] += 1;
        }
        for (const auto& k : all_superclasses(F)) {
            if (size_sum[k.str()] != superclass_size(F, k)) {
                ok = false;
                witness = k.str() + " size";
            }
            long long want_classes = 0;
            switch (k.kind) {
                case SuperclassId::C0:
                case SuperclassId::C6:
                case SuperclassId::C5:
                case SuperclassId::C4:
                case SuperclassId::C12: want_classes = 1; break;
                case SuperclassId::C3: want_classes = q; break;      // t5 parameter
                case SuperclassId::C1: want_classes = q; break;      // t6 parameter
                case SuperclassId::C2: want_classes = q * q; break;  // t4, t5
            }
            if (class_cnt[k.str()] != want_classes) {
                ok = false;
                witness = k.str() + " class count";
            }
        }
        out.push_back({"superclasses-as-class-unions", ok, witness});
    }
    return out;
}

std::vector<Check> verify_character_table(const Fq& F, const UGroup& U,
                                          const ConjClasses& cc,
                                          const std::vector<ClassInfo>& info,
                                          bool exhaustive) {
    require_p_gt_3(F, "the irreducible character table");
    std::vector<Check> out;
    int p = F.p();
    long long q = F.q();
    long long orderU = U.order();
    std::vector<IrrId> chars = all_irr(F);
    size_t nc = cc.rep.size(), nx = chars.size();

    out.push_back({"irr-count",
                   (long long)nx == q * q * q + 2 * q * q - q - 1 && nx == nc,
                   std::to_string(nx) + " characters, " + std::to_string(nc) +
                       " classes"});

    // Closed-form value table.
    std::vector<std::vector<IntCyc>> tab(nx);
    for (size_t xi = 0; xi < nx; ++xi) {
        tab[xi].resize(nc);
        for (size_t ci = 0; ci < nc; ++ci) tab[xi][ci] = irr_value(F, chars[xi], info[ci]);
    }

    {
        size_t idc = size_t(cc.class_of[0]);  // class of the identity
        bool ok = true;
        std::string witness;
        long long sumdeg2 = 0;
        for (size_t xi = 0; xi < nx; ++xi) {
            long long d = irr_degree(F, chars[xi]);
            sumdeg2 += d * d;
            if (intcyc_to_cyclo(p, tab[xi][idc]) != Cyclo(p, Rat(d))) {
                ok = false;
                witness = chars[xi].str();
            }
        }
        out.push_back({"irr-degrees-at-identity", ok, witness});
        out.push_back({"irr-sum-of-squared-degrees", sumdeg2 == orderU,
                       std::to_string(sumdeg2) + " vs |U| = " + std::to_string(orderU)});
    }

    // Row orthonormality: sum_c |c| chi_a(c) conj(chi_b(c)) = delta_ab |U|.
    auto row_inner_ok = [&](size_t a, size_t b) {
        std::vector<long long> bins(size_t(p), 0);
        for (size_t ci = 0; ci < nc; ++ci) {
            const IntCyc &va = tab[a][ci], &vb = tab[b][ci];
            for (int j = 0; j < p; ++j) {
                if (va[size_t(j)] == 0) continue;
                for (int k = 0; k < p; ++k)
                    if (vb[size_t(k)] != 0)
                        bins[size_t((j - k + p) % p)] +=
                            cc.size[ci] * va[size_t(j)] * vb[size_t(k)];
            }
        }
        Cyclo s(p);
        for (int e = 0; e < p; ++e)
            if (bins[size_t(e)]) s.add_zeta_multiple(e, Rat(bins[size_t(e)]));
        return s == Cyclo(p, Rat(a == b ? orderU : 0));
    };
    // Column orthogonality: sum_chi chi(c1) conj(chi(c2)) = delta |U|/|c1|.
    auto col_inner_ok = [&](size_t c1, size_t c2) {
        std::vector<long long> bins(size_t(p), 0);
        for (size_t xi = 0; xi < nx; ++xi) {
            const IntCyc &va = tab[xi][c1], &vb = tab[xi][c2];
            for (int j = 0; j < p; ++j) {
                if (va[size_t(j)] == 0) continue;
                for (int k = 0; k < p; ++k)
                    if (vb[size_t(k)] != 0)
                        bins[size_t((j - k + p) % p)] += va[size_t(j)] * vb[size_t(k)];
            }
        }
        Cyclo s(p);
        for (int e = 0; e < p; ++e)
            if (bins[size_t(e)]) s.add_zeta_multiple(e, Rat(bins[size_t(e)]));
        return s == Cyclo(p, Rat(c1 == c2 ? orderU / cc.size[c1] : 0));
    };

    std::mt19937 rng(4243);
    {
        bool ok = true;
        std::string witness;
        if (exhaustive) {
            for (size_t a = 0; a < nx && ok; ++a)
                for (size_t b = a; b < nx && ok; ++b)
                    if (!row_inner_ok(a, b)) {
                        ok = false;
                        witness = chars[a].str() + " vs " + chars[b].str();
                    }
        } else {
            std::uniform_int_distribution<size_t> xd(0, nx - 1);
            for (size_t a = 0; a < nx && ok; ++a)
                if (!row_inner_ok(a, a)) { ok = false; witness = chars[a].str(); }
            for (int i = 0; i < 8000 && ok; ++i) {
                size_t a = xd(rng), b = xd(rng);
                if (a != b && !row_inner_ok(a, b)) {
                    ok = false;
                    witness = chars[a].str() + " vs " + chars[b].str();
                }
            }
        }
        out.push_back({std::string("row-orthonormality") +
                           (exhaustive ? "" : "-sampled"),
                       ok, witness});
    }
    {
        bool ok = true;
        std::string witness;
        if (exhaustive) {
            for (size_t a = 0; a < nc && ok; ++a)
                for (size_t b = a; b < nc && ok; ++b)
                    if (!col_inner_ok(a, b)) {
                        ok = false;
                        witness = info[a].str() + " vs " + info[b].str();
                    }
        } else {
            std::uniform_int_distribution<size_t> cd(0, nc - 1);
            for (size_t a = 0; a < nc && ok; ++a)
                if (!col_inner_ok(a, a)) { ok = false; witness = info[a].str(); }
            for (int i = 0; i < 8000 && ok; ++i) {
                size_t a = cd(rng), b = cd(rng);
                if (a != b && !col_inner_ok(a, b)) {
                    ok = false;
                    witness = info[a].str() + " vs " + info[b].str();
                }
            }
        }
        out.push_back({std::string("column-orthogonality") +
                           (exhaustive ? "" : "-sampled"),
                       ok, witness});
    }

    // Closed forms against the independent induced-character evaluation, at
    // the canonical member plus two further members of every class.  This is
    // also the class-constancy check for the closed forms.
    {
        std::vector<std::vector<long long>> members(nc);
        for (size_t ci = 0; ci < nc; ++ci)
            members[ci].push_back(U.index_of(info[ci].canon));
        for (long long i = 0; i < orderU; ++i) {
            size_t ci = size_t(cc.class_of[size_t(i)]);
            if (members[ci].size() < 3 && i != members[ci][0]) members[ci].push_back(i);
        }
        std::array<std::vector<UGroup::Coords>, 4> kind_reps = {
            kind_rep_coords(F, IrrId::X3), kind_rep_coords(F, IrrId::X4),
            kind_rep_coords(F, IrrId::X5), kind_rep_coords(F, IrrId::X6)};
        bool ok = true;
        std::string witness;
        for (size_t ci = 0; ci < nc && ok; ++ci) {
            std::array<std::vector<std::vector<UGroup::Coords>>, 4> conjs;
            for (int k = 0; k < 4; ++k)
                for (long long mi : members[ci])
                    conjs[size_t(k)].push_back(
                        conjugates_under(F, U, kind_reps[size_t(k)], U.coords_at(mi)));
            for (size_t xi = 0; xi < nx && ok; ++xi) {
                const IrrId& x = chars[xi];
                Cyclo closed = intcyc_to_cyclo(p, tab[xi][ci]);
                for (size_t mj = 0; mj < members[ci].size() && ok; ++mj) {
                    UGroup::Coords u = U.coords_at(members[ci][mj]);
                    Cyclo ind =
                        x.kind == IrrId::Lin
                            ? irr_value_induced(F, U, x, u)
                            : induced_from_conjugates(
                                  F, x, conjs[size_t(x.kind - IrrId::X3)][mj])
                                  .to_cyclo();
                    if (ind != closed) {
                        ok = false;
                        witness = x.str() + " at " + coords_str(u);
                    }
                }
            }
        }
        out.push_back({"closed-form-vs-induction", ok, witness});
    }

    // Homomorphism premises: the abelianization coordinates (t1, t2) are
    // additive (so the Lin characters are homomorphisms), and the inducing
    // subgroups are closed with additive lambda exponents.
    {
        std::uniform_int_distribution<long long> el(0, orderU - 1);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < 400 && ok; ++i) {
            UGroup::Coords a = U.coords_at(el(rng)), b = U.coords_at(el(rng));
            UGroup::Coords ab = U.mul(a, b);
            if (ab[0] != F.add(a[0], b[0]) || ab[1] != F.add(a[1], b[1])) {
                ok = false;
                witness = coords_str(a) + " * " + coords_str(b);
            }
        }
        out.push_back({"linear-characters-multiplicative", ok, witness});

        std::uniform_int_distribution<int> fd(0, F.q() - 1);
        auto random_member = [&](IrrId::Kind k) {
            UGroup::Coords t{};
            switch (k) {
                case IrrId::X3: t = {Fq::elem(fd(rng)), 0, Fq::elem(fd(rng)), 0, 0, 0}; break;
                case IrrId::X4:
                    t = {0, Fq::elem(fd(rng)), Fq::elem(fd(rng)), Fq::elem(fd(rng)), 0, 0};
                    break;
                case IrrId::X5:
                    t = {0, Fq::elem(fd(rng)), Fq::elem(fd(rng)), Fq::elem(fd(rng)),
                         Fq::elem(fd(rng)), 0};
                    break;
                case IrrId::X6:
                    t = {Fq::elem(fd(rng)), 0, 0, Fq::elem(fd(rng)), Fq::elem(fd(rng)),
                         Fq::elem(fd(rng))};
                    break;
                default: break;
            }
            return t;
        };
        ok = true;
        witness.clear();
        std::uniform_int_distribution<size_t> xd(0, nx - 1);
        for (int i = 0; i < 1200 && ok; ++i) {
            IrrId x = chars[xd(rng)];
            if (x.kind == IrrId::Lin) continue;
            UGroup::Coords a = random_member(x.kind), b = random_member(x.kind);
            UGroup::Coords ab = U.mul(a, b);
            if (!induced_subgroup_member(x.kind, ab) ||
                induced_lambda_exp(F, x, ab) !=
                    (induced_lambda_exp(F, x, a) + induced_lambda_exp(F, x, b)) % p) {
                ok = false;
                witness = x.str() + " at " + coords_str(a) + " * " + coords_str(b);
            }
        }
        out.push_back({"induction-subgroup-lambda-homomorphism", ok, witness});
    }

    // Quadratic Gauss sums have squared absolute value q.
    {
        bool ok = true;
        std::string witness;
        for (int a = 1; a < F.q() && ok; ++a) {
            ZSum g(p);
            for (int r = 0; r < F.q(); ++r)
                g.add_zeta(F.trace(F.mul(Fq::elem(a), F.mul(Fq::elem(r), Fq::elem(r)))));
            Cyclo gc = g.to_cyclo();
            if (gc * gc.conj() != Cyclo(p, Rat(q))) {
                ok = false;
                witness = "a = " + std::to_string(a);
            }
        }
        out.push_back({"gauss-sum-norm", ok, witness});
    }

    // Every supercharacter is the stated q-power multiple of a sum of
    // irreducible characters, checked on all superclasses.
    {
        bool ok = true;
        std::string witness;
        for (const auto& k : all_superclasses(F)) {
            const ClassInfo& cls =
                info[size_t(cc.class_of[size_t(U.index_of(superclass_rep(F, k)))])];
            for (const auto& m : all_supermodules(F)) {
                Cyclo lhs = mono_to_cyclo(F, table4_value(F, m, k));
                IntCyc sum(size_t(p), 0);
                auto acc = [&](const IrrId& x) {
                    IntCyc v = irr_value(F, x, cls);
                    for (int e = 0; e < p; ++e) sum[size_t(e)] += v[size_t(e)];
                };
                long long factor = 1;
                switch (m.kind) {
                    case SupermoduleId::Lin: acc({IrrId::Lin, m.a, m.b, 0}); break;
                    case SupermoduleId::M13: acc({IrrId::X3, m.a, 0, 0}); break;
                    case SupermoduleId::M15:
                        factor = q;
                        for (int b = 0; b < F.q(); ++b) acc({IrrId::X4, m.a, Fq::elem(b), 0});
                        break;
                    case SupermoduleId::M16:
                        factor = q;
                        for (int b = 0; b < F.q(); ++b)
                            for (int c = 0; c < F.q(); ++c)
                                acc({IrrId::X5, m.a, Fq::elem(b), Fq::elem(c)});
                        break;
                    case SupermoduleId::M17:
                        factor = q;
                        for (int b = 0; b < F.q(); ++b) acc({IrrId::X6, m.a, Fq::elem(b), 0});
                        break;
                }
                if (intcyc_to_cyclo(p, sum) * Rat(factor) != lhs) {
                    ok = false;
                    witness = m.str() + " at " + k.str();
                }
            }
        }
        out.push_back({"supercharacter-irreducible-decomposition", ok, witness});
    }
    return out;
}

namespace {

// Shared machinery for the two subgroup tables: a subgroup of U given by a
// subset of free coordinate slots (the other coordinates are zero).
struct SlotGroup {
    const Fq& F;
    const UGroup& U;
    std::vector<int> slots;
    long long n;

    SlotGroup(const Fq& F_, const UGroup& U_, std::vector<int> s)
        : F(F_), U(U_), slots(std::move(s)) {
        n = 1;
        for (size_t i = 0; i < slots.size(); ++i) n *= F.q();
    }
    UGroup::Coords at(long long i) const {
        UGroup::Coords t{};
        for (int s : slots) {
            t[size_t(s)] = Fq::elem(i % F.q());
            i /= F.q();
        }
        return t;
    }
    long long index(const UGroup::Coords& t) const {
        long long i = 0;
        for (auto it = slots.rbegin(); it != slots.rend(); ++it)
            i = i * F.q() + t[size_t(*it)];
        return i;
    }
    bool contains(const UGroup::Coords& t) const {
        UGroup::Coords mask{};
        for (int s : slots) mask[size_t(s)] = t[size_t(s)];
        return mask == t;
    }

    // Conjugacy classes by BFS under conjugation by the slot generators.
    void classes(std::vector<int32_t>& class_of, std::vector<long long>& rep,
                 std::vector<long long>& size) const {
        class_of.assign(size_t(n), -1);
        rep.clear();
        size.clear();
        std::vector<UGroup::Coords> gens;
        for (int s : slots)
            for (int v = 1; v < F.q(); ++v) {
                UGroup::Coords g{};
                g[size_t(s)] = Fq::elem(v);
                gens.push_back(g);
            }
        std::vector<long long> stack;
        for (long long i = 0; i < n; ++i) {
            if (class_of[size_t(i)] >= 0) continue;
            int32_t cid = int32_t(rep.size());
            rep.push_back(i);
            class_of[size_t(i)] = cid;
            stack.assign(1, i);
            long long sz = 0;
            while (!stack.empty()) {
                long long v = stack.back();
                stack.pop_back();
                ++sz;
                for (const auto& g : gens) {
                    UGroup::Coords c = U.conj(g, at(v));
                    if (!contains(c))
                        throw std::logic_error("subgroup not closed under conjugation");
                    long long j = index(c);
                    if (class_of[size_t(j)] < 0) {
                        class_of[size_t(j)] = cid;
                        stack.push_back(j);
                    }
                }
            }
            size.push_back(sz);
        }
    }
};

Cyclo mono_inner(int p, long long q, const std::vector<MonoVal>& a,
                 const std::vector<MonoVal>& b, const std::vector<long long>& w) {
    std::vector<long long> bins(size_t(p), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].zero || b[i].zero) continue;
        long long s = w.empty() ? 1 : w[i];
        for (int j = 0; j < a[i].qpow + b[i].qpow; ++j) s *= q;
        bins[size_t((a[i].zexp - b[i].zexp + p) % p)] += s;
    }
    Cyclo out(p);
    for (int e = 0; e < p; ++e)
        if (bins[size_t(e)]) out.add_zeta_multiple(e, Rat(bins[size_t(e)]));
    return out;
}

// Generic verification of a subgroup character table whose values are all
// of MonoVal shape.  `prefix` tags the check names.
void verify_slot_group_table(
    const Fq& F, const UGroup& U, const SlotGroup& G, const std::string& prefix,
    long long expect_classes,
    // invariant coordinate slots (constant on classes); the remaining slot
    // `moving` sweeps F_q on every non-central class
    const std::vector<int>& invariant_slots, int moving_slot,
    // central elements (singleton classes): these slots are zero
    const std::vector<int>& central_zero_slots,
    // the characters: closed-form value per element
    const std::vector<std::pair<std::string, std::function<MonoVal(const UGroup::Coords&)>>>& chars,
    // independent induced evaluation (empty function = linear character,
    // checked instead via exponent additivity under multiplication)
    const std::vector<std::function<Cyclo(const UGroup::Coords&)>>& induced,
    std::vector<Check>& out) {
    int p = F.p();
    long long q = F.q();

    std::vector<int32_t> class_of;
    std::vector<long long> rep, size;
    bool closed = true;
    std::string close_witness;
    try {
        G.classes(class_of, rep, size);
    } catch (const std::logic_error& e) {
        closed = false;
        close_witness = e.what();
    }
    out.push_back({prefix + "-closed-under-conjugation", closed, close_witness});
    if (!closed) return;

    out.push_back({prefix + "-class-count", (long long)rep.size() == expect_classes,
                   std::to_string(rep.size()) + " vs " + std::to_string(expect_classes)});

    {
        // Class structure: central elements are singletons; every other class
        // keeps the invariant slots fixed and sweeps the moving slot over F_q.
        bool ok = true;
        std::string witness;
        std::vector<std::set<int>> moving_vals(rep.size());
        for (long long i = 0; i < G.n && ok; ++i) {
            UGroup::Coords t = G.at(i);
            size_t cid = size_t(class_of[size_t(i)]);
            UGroup::Coords r = G.at(rep[cid]);
            bool central = true;
            for (int s : central_zero_slots)
                if (t[size_t(s)] != 0) central = false;
            if (central != (size[cid] == 1)) {
                ok = false;
                witness = coords_str(t) + " centrality";
            }
            for (int s : invariant_slots)
                if (t[size_t(s)] != r[size_t(s)]) {
                    ok = false;
                    witness = coords_str(t) + " invariant slot";
                }
            moving_vals[cid].insert(t[size_t(moving_slot)]);
        }
        for (size_t cid = 0; cid < rep.size() && ok; ++cid)
            if (size[cid] != 1 &&
                (size[cid] != q || (long long)moving_vals[cid].size() != q)) {
                ok = false;
                witness = coords_str(G.at(rep[cid])) + " class size " +
                          std::to_string(size[cid]);
            }
        out.push_back({prefix + "-class-structure", ok, witness});
    }

    // Value table on class representatives, plus constancy over members.
    size_t nx = chars.size(), ncl = rep.size();
    std::vector<std::vector<MonoVal>> tab(nx, std::vector<MonoVal>(ncl));
    {
        bool ok = true;
        std::string witness;
        for (size_t xi = 0; xi < nx; ++xi)
            for (size_t ci = 0; ci < ncl; ++ci)
                tab[xi][ci] = chars[xi].second(G.at(rep[ci]));
        for (long long i = 0; i < G.n && ok; ++i) {
            UGroup::Coords t = G.at(i);
            size_t cid = size_t(class_of[size_t(i)]);
            for (size_t xi = 0; xi < nx; ++xi)
                if (!(chars[xi].second(t) == tab[xi][cid])) {
                    ok = false;
                    witness = chars[xi].first + " at " + coords_str(t);
                    break;
                }
        }
        out.push_back({prefix + "-class-constancy", ok, witness});
    }

    {
        bool ok = nx == ncl;
        std::string witness = std::to_string(nx) + " characters, " +
                              std::to_string(ncl) + " classes";
        long long sumdeg2 = 0;
        size_t idc = size_t(class_of[size_t(G.index(UGroup::Coords{}))]);
        for (size_t xi = 0; xi < nx; ++xi) {
            MonoVal d = tab[xi][idc];
            long long deg = 1;
            for (int j = 0; j < d.qpow; ++j) deg *= q;
            if (d.zero || d.zexp != 0) { ok = false; witness = chars[xi].first; }
            sumdeg2 += deg * deg;
        }
        if (sumdeg2 != G.n) {
            ok = false;
            witness = "sum of squared degrees " + std::to_string(sumdeg2);
        }
        out.push_back({prefix + "-counts-and-degrees", ok, witness});
    }

    {
        // Row orthonormality and column orthogonality (all pairs).
        bool ok = true;
        std::string witness;
        std::vector<long long> w(size.begin(), size.end());
        for (size_t a = 0; a < nx && ok; ++a)
            for (size_t b = a; b < nx && ok; ++b)
                if (mono_inner(p, q, tab[a], tab[b], w) !=
                    Cyclo(p, Rat(a == b ? G.n : 0))) {
                    ok = false;
                    witness = chars[a].first + " vs " + chars[b].first;
                }
        out.push_back({prefix + "-row-orthonormality", ok, witness});
        ok = true;
        witness.clear();
        for (size_t a = 0; a < ncl && ok; ++a) {
            std::vector<MonoVal> ca(nx), cb(nx);
            for (size_t xi = 0; xi < nx; ++xi) ca[xi] = tab[xi][a];
            for (size_t b = a; b < ncl && ok; ++b) {
                for (size_t xi = 0; xi < nx; ++xi) cb[xi] = tab[xi][b];
                if (mono_inner(p, q, ca, cb, {}) !=
                    Cyclo(p, Rat(a == b ? G.n / size[a] : 0))) {
                    ok = false;
                    witness = "classes " + coords_str(G.at(rep[a])) + " vs " +
                              coords_str(G.at(rep[b]));
                }
            }
        }
        out.push_back({prefix + "-column-orthogonality", ok, witness});
    }

    {
        // Induced characters against the literal induction sum, at every
        // element of the subgroup.
        bool ok = true;
        std::string witness;
        for (long long i = 0; i < G.n && ok; ++i) {
            UGroup::Coords t = G.at(i);
            for (size_t xi = 0; xi < nx && ok; ++xi) {
                if (!induced[xi]) continue;
                MonoVal closed = chars[xi].second(t);
                if (induced[xi](t) != mono_to_cyclo(F, closed)) {
                    ok = false;
                    witness = chars[xi].first + " at " + coords_str(t);
                }
            }
        }
        out.push_back({prefix + "-induction-matches-closed-form", ok, witness});
    }
}

}  // namespace

std::vector<Check> verify_subgroup_tables(const Fq& F) {
    require_p_gt_3(F, "the subgroup character tables");
    std::vector<Check> out;
    UGroup U(F);
    int p = F.p();
    long long q = F.q();
    std::mt19937 rng(9090);
    std::uniform_int_distribution<int> fd(0, F.q() - 1);

    // ---- H = Y1 Y4 Y5 Y6, order q^4 --------------------------------------
    {
        SlotGroup H(F, U, {0, 3, 4, 5});
        {
            // Closure and additivity of (t1, t4, t6) under multiplication
            // (these make the linear characters homomorphisms).
            bool ok = true;
            std::string witness;
            long long trials = (q <= 5) ? H.n * H.n : 20000;
            for (long long i = 0; i < trials && ok; ++i) {
                UGroup::Coords a, b;
                if (q <= 5) {
                    a = H.at(i / H.n);
                    b = H.at(i % H.n);
                } else {
                    a = H.at(std::uniform_int_distribution<long long>(0, H.n - 1)(rng));
                    b = H.at(std::uniform_int_distribution<long long>(0, H.n - 1)(rng));
                }
                UGroup::Coords ab = U.mul(a, b);
                if (!H.contains(ab) || ab[0] != F.add(a[0], b[0]) ||
                    ab[3] != F.add(a[3], b[3]) || ab[5] != F.add(a[5], b[5])) {
                    ok = false;
                    witness = coords_str(a) + " * " + coords_str(b);
                }
            }
            out.push_back({"H-closure-and-linear-exponents", ok, witness});
        }

        std::vector<std::pair<std::string, std::function<MonoVal(const UGroup::Coords&)>>>
            chars;
        std::vector<std::function<Cyclo(const UGroup::Coords&)>> induced;
        Fq::elem two = F.from_int(2);
        for (int a17 = 0; a17 < F.q(); ++a17)
            for (int a15 = 0; a15 < F.q(); ++a15)
                for (int a12 = 0; a12 < F.q(); ++a12) {
                    Fq::elem A17 = Fq::elem(a17), A15 = Fq::elem(a15), A12 = Fq::elem(a12);
                    chars.emplace_back(
                        "H-lin(A12=" + std::to_string(a12) + ",A15=" +
                            std::to_string(a15) + ",A17=" + std::to_string(a17) + ")",
                        [&F, A12, A15, A17, two](const UGroup::Coords& t) {
                            MonoVal v;
                            v.zero = false;
                            v.zexp = F.trace(F.add(
                                F.add(F.mul(A12, t[0]), F.mul(two, F.mul(A15, t[3]))),
                                F.mul(A17, t[5])));
                            return v;
                        });
                    induced.emplace_back();  // linear: checked via exponent additivity
                }
        for (int a17 = 0; a17 < F.q(); ++a17)
            for (int a16 = 1; a16 < F.q(); ++a16) {
                Fq::elem A17 = Fq::elem(a17), A16 = Fq::elem(a16);
                chars.emplace_back(
                    "H-ind(A16*=" + std::to_string(a16) + ",A17=" +
                        std::to_string(a17) + ")",
                    [&F, A16, A17](const UGroup::Coords& t) {
                        MonoVal v;
                        if (t[0] != 0 || t[3] != 0) return v;
                        v.zero = false;
                        v.qpow = 1;
                        v.zexp = F.trace(F.add(F.mul(A16, t[4]), F.mul(A17, t[5])));
                        return v;
                    });
                // Induction of theta(A16* t5 + A17 t6) from Y4 Y5 Y6 along
                // the coset representatives y1(s).
                induced.emplace_back([&F, &U, A16, A17, p](const UGroup::Coords& t) {
                    ZSum s(p);
                    for (int a = 0; a < F.q(); ++a) {
                        UGroup::Coords r{};
                        r[0] = Fq::elem(a);
                        UGroup::Coords c = U.conj(r, t);
                        if (c[0] == 0)
                            s.add_zeta(F.trace(
                                F.add(F.mul(A16, c[4]), F.mul(A17, c[5]))));
                    }
                    return s.to_cyclo();
                });
            }
        verify_slot_group_table(F, U, H, "H", q * q * q + q * q - q,
                                /*invariant*/ {0, 3, 5}, /*moving*/ 4,
                                /*central zero*/ {0, 3}, chars, induced, out);
    }

    // ---- T = Y2 Y3 Y4 Y5 Y6, order q^5 -----------------------------------
    {
        SlotGroup T(F, U, {1, 2, 3, 4, 5});
        {
            bool ok = true;
            std::string witness;
            long long trials = (q <= 3) ? T.n * T.n : 20000;
            std::uniform_int_distribution<long long> ed(0, T.n - 1);
            for (long long i = 0; i < trials && ok; ++i) {
                UGroup::Coords a, b;
                if (q <= 3) {
                    a = T.at(i / T.n);
                    b = T.at(i % T.n);
                } else {
                    a = T.at(ed(rng));
                    b = T.at(ed(rng));
                }
                UGroup::Coords ab = U.mul(a, b);
                bool addok = true;
                for (int s = 1; s <= 4; ++s)
                    if (ab[size_t(s)] != F.add(a[size_t(s)], b[size_t(s)])) addok = false;
                if (!T.contains(ab) || !addok) {
                    ok = false;
                    witness = coords_str(a) + " * " + coords_str(b);
                }
            }
            out.push_back({"T-closure-and-linear-exponents", ok, witness});
        }

        std::vector<std::pair<std::string, std::function<MonoVal(const UGroup::Coords&)>>>
            chars;
        std::vector<std::function<Cyclo(const UGroup::Coords&)>> induced;
        Fq::elem two = F.from_int(2);
        for (int a16 = 0; a16 < F.q(); ++a16)
            for (int a15 = 0; a15 < F.q(); ++a15)
                for (int a13 = 0; a13 < F.q(); ++a13)
                    for (int a23 = 0; a23 < F.q(); ++a23) {
                        Fq::elem A16 = Fq::elem(a16), A15 = Fq::elem(a15);
                        Fq::elem A13 = Fq::elem(a13), A23 = Fq::elem(a23);
                        chars.emplace_back(
                            "T-lin(A23=" + std::to_string(a23) + ",A13=" +
                                std::to_string(a13) + ",A15=" + std::to_string(a15) +
                                ",A16=" + std::to_string(a16) + ")",
                            [&F, A16, A15, A13, A23, two](const UGroup::Coords& t) {
                                MonoVal v;
                                v.zero = false;
                                Fq::elem e = F.sub(F.mul(A23, t[1]), F.mul(A13, t[2]));
                                e = F.add(e, F.mul(two, F.mul(A15, t[3])));
                                e = F.add(e, F.mul(A16, t[4]));
                                v.zexp = F.trace(e);
                                return v;
                            });
                        induced.emplace_back();
                    }
        for (int a17 = 1; a17 < F.q(); ++a17) {
            Fq::elem A17 = Fq::elem(a17);
            chars.emplace_back("T-ind(A17*=" + std::to_string(a17) + ")",
                               [A17, &F](const UGroup::Coords& t) {
                                   MonoVal v;
                                   if (t[1] != 0 || t[2] != 0 || t[3] != 0 || t[4] != 0)
                                       return v;
                                   v.zero = false;
                                   v.qpow = 2;
                                   v.zexp = F.trace(F.mul(A17, t[5]));
                                   return v;
                               });
            // Induction of theta(A17* t6) from Y4 Y5 Y6 along the coset
            // representatives y(0,a,b,0,0,0).
            induced.emplace_back([&F, &U, A17, p](const UGroup::Coords& t) {
                ZSum s(p);
                for (int a = 0; a < F.q(); ++a)
                    for (int b = 0; b < F.q(); ++b) {
                        UGroup::Coords r{0, Fq::elem(a), Fq::elem(b), 0, 0, 0};
                        UGroup::Coords c = U.conj(r, t);
                        if (c[1] == 0 && c[2] == 0)
                            s.add_zeta(F.trace(F.mul(A17, c[5])));
                    }
                return s.to_cyclo();
            });
        }
        verify_slot_group_table(F, U, T, "T", q * q * q * q + q - 1,
                                /*invariant*/ {1, 2, 3, 4}, /*moving*/ 5,
                                /*central zero*/ {1, 2, 3, 4}, chars, induced, out);
    }
    return out;
}

std::string emit_character_table(const Fq& F, const UGroup& U, TableFormat fmt) {
    require_p_gt_3(F, "the irreducible character table");
    int p = F.p();
    ConjClasses cc = conjugacy_classes(F, U);
    std::vector<ClassInfo> info = classify_classes(F, U, cc);
    std::vector<IrrId> chars = all_irr(F);
    size_t nc = cc.rep.size();

    // Cross-check every row against the induced-character evaluation at the
    // canonical class members.
    {
        std::array<std::vector<UGroup::Coords>, 4> kind_reps = {
            kind_rep_coords(F, IrrId::X3), kind_rep_coords(F, IrrId::X4),
            kind_rep_coords(F, IrrId::X5), kind_rep_coords(F, IrrId::X6)};
        for (size_t ci = 0; ci < nc; ++ci) {
            std::array<std::vector<UGroup::Coords>, 4> conjs;
            for (int k = 0; k < 4; ++k)
                conjs[size_t(k)] =
                    conjugates_under(F, U, kind_reps[size_t(k)], info[ci].canon);
            for (const IrrId& x : chars) {
                Cyclo closed = intcyc_to_cyclo(p, irr_value(F, x, info[ci]));
                Cyclo ind = x.kind == IrrId::Lin
                                ? irr_value_induced(F, U, x, info[ci].canon)
                                : induced_from_conjugates(
                                      F, x, conjs[size_t(x.kind - IrrId::X3)])
                                      .to_cyclo();
                if (ind != closed)
                    throw std::logic_error("character table cross-check failed at " +
                                           x.str() + ", " + info[ci].str());
            }
        }
    }

    auto entry = [&](const IrrId& x, size_t ci) {
        return intcyc_to_cyclo(p, irr_value(F, x, info[ci]));
    };

    std::ostringstream os;
    if (fmt == TableFormat::Markdown) {
        os << "| character |";
        for (size_t ci = 0; ci < nc; ++ci) os << " " << info[ci].str() << " |";
        os << "\n|-----------|";
        for (size_t ci = 0; ci < nc; ++ci) os << "---|";
        os << "\n| class size |";
        for (size_t ci = 0; ci < nc; ++ci) os << " " << cc.size[ci] << " |";
        os << "\n";
        for (const IrrId& x : chars) {
            os << "| " << x.str() << " |";
            for (size_t ci = 0; ci < nc; ++ci) os << " " << entry(x, ci).str() << " |";
            os << "\n";
        }
    } else if (fmt == TableFormat::Csv) {
        os << "character";
        for (size_t ci = 0; ci < nc; ++ci) os << "," << info[ci].str();
        os << "\nclass size";
        for (size_t ci = 0; ci < nc; ++ci) os << "," << cc.size[ci];
        os << "\n";
        for (const IrrId& x : chars) {
            os << x.str();
            for (size_t ci = 0; ci < nc; ++ci) os << "," << entry(x, ci).str();
            os << "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["q"] = F.q();
        j["p"] = F.p();
        j["classes"] = nlohmann::ordered_json::array();
        for (size_t ci = 0; ci < nc; ++ci) {
            nlohmann::ordered_json jc;
            jc["representative"] = info[ci].str();
            jc["shape"] = class_shape_name(info[ci].shape);
            jc["size"] = cc.size[ci];
            j["classes"].push_back(jc);
        }
        j["characters"] = nlohmann::ordered_json::array();
        for (const IrrId& x : chars) {
            nlohmann::ordered_json jx;
            jx["character"] = x.str();
            jx["degree"] = irr_degree(F, x);
            nlohmann::ordered_json vals;
            for (size_t ci = 0; ci < nc; ++ci) vals[info[ci].str()] = entry(x, ci).str();
            jx["values"] = vals;
            j["characters"].push_back(jx);
        }
        os << j.dump(2) << "\n";
    }
    return os.str();
}

}  // namespace g2syl
