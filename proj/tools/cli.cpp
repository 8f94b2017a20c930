// Command-line interface: exact construction, superclass/supercharacter
// theory, and irreducible character table of the Sylow p-subgroup of G2(q),
// with verification suites.  All output is deterministic (fixed RNG seeds,
// no timestamps): repeated runs are byte-identical.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2syl/suites.hpp"

using namespace g2syl;
using nlohmann::ordered_json;

namespace {

struct Opts {
    int p = 0;
    int k = 0;
    int q = 0;
    std::string format = "md";
    std::string out;
    int budget = 9;
};

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Resolve (p, k) from --p/--k/--q; returns an error message or "".
std::string resolve_field(Opts& o) {
    if (o.q > 0) {
        int p = 2;
        while (p <= o.q && o.q % p != 0) ++p;
        int k = 0, m = o.q;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) return "q must be a prime power";
        if (o.p > 0 && o.p != p) return "--p conflicts with --q";
        if (o.k > 0 && o.k != k) return "--k conflicts with --q";
        o.p = p;
        o.k = k;
    }
    if (o.p == 0) return "one of --p or --q is required";
    if (o.k == 0) o.k = 1;
    if (o.p == 2 || !is_prime(o.p)) return "p must be an odd prime";
    if (o.k < 1 || o.k > 4) return "k must be in 1..4";
    long long q = 1;
    for (int i = 0; i < o.k; ++i) q *= o.p;
    if (q > 25) return "q must be at most 25";
    o.q = int(q);
    return "";
}

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_option("--p", o.p, "Odd prime p");
    cmd->add_option("--k", o.k, "Extension degree k (1..4), default 1");
    cmd->add_option("--q", o.q, "Prime power q = p^k (alternative to --p/--k)");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
    cmd->add_option("--budget", o.budget,
                    "Largest q allowed for subcommands that enumerate all q^6 "
                    "group elements (capped at 9)");
}

void write_out(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        f << text;
    }
}

int enumerative_guard(const Opts& o) {
    int cap = std::min(o.budget, 9);
    if (o.q > cap) {
        std::fprintf(stderr,
                     "error: q = %d exceeds the enumeration budget (%d); this "
                     "subcommand enumerates all q^6 group elements\n",
                     o.q, cap);
        return 2;
    }
    return 0;
}

std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    bool neg = v < 0;
    if (neg) v = -v;
    while (v > 0) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return neg ? "-" + s : s;
}

std::string coords_str(const UGroup::Coords& t) {
    std::string s = "y(";
    for (int i = 0; i < 6; ++i) s += std::to_string(t[i]) + (i < 5 ? "," : ")");
    return s;
}

TableFormat table_format(const Opts& o) {
    if (o.format == "csv") return TableFormat::Csv;
    if (o.format == "json") return TableFormat::Json;
    return TableFormat::Markdown;
}

// ---- subcommand bodies ---------------------------------------------------

int run_group_order(const Opts& o, const Fq& F) {
    long long q = F.q();
    long long u_order = 1;
    __int128 ambient = 1;
    for (int i = 0; i < 6; ++i) u_order *= q;
    for (int i = 0; i < 23; ++i) ambient *= q;
    long long superclasses = q * q + 4 * q - 4;
    long long classes = q * q * q + 2 * q * q - q - 1;  // p > 3 only
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json j;
        j["q"] = F.q();
        j["p"] = F.p();
        j["k"] = F.k();
        j["sylow_order"] = u_order;
        j["ambient_order"] = int128_str(ambient);
        j["superclass_count"] = superclasses;
        if (F.p() > 3) j["conjugacy_class_count"] = classes;
        os << j.dump(2) << "\n";
    } else {
        const char* sep = (o.format == "csv") ? "," : ": ";
        os << "q" << sep << F.q() << "\n";
        os << "sylow_order" << sep << u_order << "\n";
        os << "ambient_order" << sep << int128_str(ambient) << "\n";
        os << "superclass_count" << sep << superclasses << "\n";
        if (F.p() > 3) os << "conjugacy_class_count" << sep << classes << "\n";
    }
    write_out(o, os.str());
    return 0;
}

std::pair<std::string, bool> report(const std::string& suite, const Fq& F,
                                    const std::vector<Check>& checks) {
    ordered_json j;
    j["suite"] = suite;
    j["q"] = F.q();
    j["p"] = F.p();
    j["k"] = F.k();
    bool all = true;
    j["checks"] = ordered_json::array();
    for (const Check& c : checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["witness"] = c.witness;
        j["checks"].push_back(jc);
        all = all && c.pass;
    }
    j["pass"] = all;
    return {j.dump(2) + "\n", all};
}

int run_commutators_check(const Opts& o, const Fq& F) {
    UGroup U(F);
    std::vector<Check> checks;
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
                                  "), y" + std::to_string(j) + "(" + std::to_string(t) +
                                  ")]";
                    }
                }
    checks.push_back({"commutator-closed-forms-exhaustive", ok, witness});
    auto [text, pass] = report("commutators", F, checks);
    write_out(o, text);
    return pass ? 0 : 1;
}

int run_classes(const Opts& o, const Fq& F) {
    if (int rc = enumerative_guard(o)) return rc;
    UGroup U(F);
    ConjClasses cc = conjugacy_classes(F, U);
    bool shapes = F.p() > 3;
    std::vector<ClassInfo> info;
    if (shapes) info = classify_classes(F, U, cc);
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json j;
        j["q"] = F.q();
        j["p"] = F.p();
        j["count"] = cc.rep.size();
        j["classes"] = ordered_json::array();
        for (size_t i = 0; i < cc.rep.size(); ++i) {
            ordered_json jc;
            jc["representative"] =
                shapes ? info[i].str() : coords_str(U.coords_at(cc.rep[i]));
            if (shapes) jc["shape"] = class_shape_name(info[i].shape);
            jc["size"] = cc.size[i];
            j["classes"].push_back(jc);
        }
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << (shapes ? "representative,shape,size" : "representative,size") << "\n";
        for (size_t i = 0; i < cc.rep.size(); ++i) {
            if (shapes)
                os << info[i].str() << "," << class_shape_name(info[i].shape) << ","
                   << cc.size[i] << "\n";
            else
                os << coords_str(U.coords_at(cc.rep[i])) << "," << cc.size[i] << "\n";
        }
    } else {
        os << (shapes ? "| representative | shape | size |\n|---|---|---|\n"
                      : "| representative | size |\n|---|---|\n");
        for (size_t i = 0; i < cc.rep.size(); ++i) {
            if (shapes)
                os << "| " << info[i].str() << " | " << class_shape_name(info[i].shape)
                   << " | " << cc.size[i] << " |\n";
            else
                os << "| " << coords_str(U.coords_at(cc.rep[i])) << " | " << cc.size[i]
                   << " |\n";
        }
    }
    write_out(o, os.str());
    return 0;
}

int run_superclasses(const Opts& o, const Fq& F) {
    if (int rc = enumerative_guard(o)) return rc;
    UGroup U(F);
    for (const Check& c : verify_partition(F, U, nullptr))
        if (!c.pass) {
            std::fprintf(stderr, "error: superclass partition check failed: %s\n",
                         c.name.c_str());
            return 1;
        }
    std::ostringstream os;
    auto classes = all_superclasses(F);
    if (o.format == "json") {
        ordered_json j;
        j["q"] = F.q();
        j["p"] = F.p();
        j["count"] = classes.size();
        j["superclasses"] = ordered_json::array();
        for (const auto& k : classes) {
            ordered_json jk;
            jk["id"] = k.str();
            jk["size"] = superclass_size(F, k);
            jk["representative"] = coords_str(superclass_rep(F, k));
            j["superclasses"].push_back(jk);
        }
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "id,size,representative\n";
        for (const auto& k : classes)
            os << k.str() << "," << superclass_size(F, k) << ","
               << coords_str(superclass_rep(F, k)) << "\n";
    } else {
        os << "| id | size | representative |\n|---|---|---|\n";
        for (const auto& k : classes)
            os << "| " << k.str() << " | " << superclass_size(F, k) << " | "
               << coords_str(superclass_rep(F, k)) << " |\n";
    }
    write_out(o, os.str());
    return 0;
}

int run_supercharacter_table(const Opts& o, const Fq& F) {
    UGroup U(F);
    write_out(o, emit_supercharacter_table(F, U, table_format(o)));
    return 0;
}

int run_character_table(const Opts& o, const Fq& F) {
    if (F.p() <= 3) {
        std::fprintf(stderr,
                     "error: the irreducible character table requires p > 3 "
                     "(p = %d given)\n",
                     F.p());
        return 2;
    }
    if (int rc = enumerative_guard(o)) return rc;
    UGroup U(F);
    write_out(o, emit_character_table(F, U, table_format(o)));
    return 0;
}

int run_verify(const Opts& o, const Fq& F, const std::string& suite) {
    if (int rc = enumerative_guard(o)) return rc;
    bool exhaustive = F.q() <= 7;
    std::vector<Check> checks;
    auto add = [&](const std::string& name, std::vector<Check> cs) {
        for (Check& c : cs) {
            c.name = name + ":" + c.name;
            checks.push_back(std::move(c));
        }
    };
    if (suite == "group" || suite == "all") add("group", suite_group(F, exhaustive));
    if (suite == "orbits" || suite == "all") add("orbits", suite_orbits(F, exhaustive));
    if (suite == "super" || suite == "all") add("super", suite_super(F, exhaustive));
    if (suite == "chartab" || suite == "all") {
        if (F.p() <= 3) {
            if (suite == "chartab") {
                std::fprintf(stderr,
                             "error: the chartab suite requires p > 3 (p = %d given)\n",
                             F.p());
                return 2;
            }
            checks.push_back(
                {"chartab:skipped", true, "irreducible character table requires p > 3"});
        } else {
            add("chartab", suite_chartab(F, exhaustive));
        }
    }
    auto [text, pass] = report(suite, F, checks);
    write_out(o, text);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Sylow p-subgroup of G2(q): construction, superclass and "
        "supercharacter theory, and irreducible character table"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* c_order = app.add_subcommand("group-order", "Orders and counts");
    CLI::App* c_comm =
        app.add_subcommand("commutators-check", "Verify the commutator closed forms");
    CLI::App* c_classes = app.add_subcommand("classes", "Emit the conjugacy classes");
    CLI::App* c_sclasses = app.add_subcommand("superclasses", "Emit the superclasses");
    CLI::App* c_stable = app.add_subcommand("supercharacter-table",
                                            "Emit the supercharacter table");
    CLI::App* c_ctable = app.add_subcommand(
        "character-table", "Emit the irreducible character table (p > 3)");
    CLI::App* c_verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    c_verify->add_option("--suite", suite, "Which suite to run")
        ->check(CLI::IsMember({"group", "orbits", "super", "chartab", "all"}));
    for (CLI::App* c :
         {c_order, c_comm, c_classes, c_sclasses, c_stable, c_ctable, c_verify})
        add_common(c, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Uniform usage-error exit code regardless of CLI11's default.
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string err = resolve_field(o);
    if (!err.empty()) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        return 2;
    }

    try {
        Fq F(o.p, o.k);
        if (c_order->parsed()) return run_group_order(o, F);
        if (c_comm->parsed()) return run_commutators_check(o, F);
        if (c_classes->parsed()) return run_classes(o, F);
        if (c_sclasses->parsed()) return run_superclasses(o, F);
        if (c_stable->parsed()) return run_supercharacter_table(o, F);
        if (c_ctable->parsed()) return run_character_table(o, F);
        if (c_verify->parsed()) return run_verify(o, F, suite);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
