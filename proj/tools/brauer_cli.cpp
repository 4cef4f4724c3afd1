// Command-line harness: diagram-algebra arithmetic, homology of the
// paper's complexes, Tor tables, and theorem-verification suites.
//
// Exit codes: 0 success, 2 parse error, 3 semantic input error,
// 4 budget exceeded, 5 verification failure.

#include "brauer/io.hpp"
#include "brauer/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace brauer;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerify = 5;

json read_json_file(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return json::parse(in);
}

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void print_homology_table(const std::vector<HomologyGroup>& hs, int lo,
                          const std::string& format) {
    if (format == "tsv") {
        std::cout << "degree\tfree_rank\ttorsion\tgroup\n";
        for (int i = 0; i < (int)hs.size(); ++i) {
            std::cout << (lo + i) << "\t" << hs[i].free_rank << "\t";
            for (size_t t = 0; t < hs[i].torsion.size(); ++t)
                std::cout << (t ? "," : "") << hs[i].torsion[t].str();
            std::cout << "\t" << group_to_string(hs[i]) << "\n";
        }
        return;
    }
    json rows = json::array();
    for (int i = 0; i < (int)hs.size(); ++i)
        rows.push_back(homology_row_to_json(lo + i, hs[i]));
    std::cout << rows.dump(2) << "\n";
}

void print_suite(const SuiteReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << suite_report_to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "suite: " << rep.suite << "\n";
    for (auto& line : rep.lines)
        std::cout << "  [" << (line.pass ? "PASS" : "FAIL") << "] " << line.name
                  << " (expected " << line.expected << ", computed " << line.computed << ")\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << ": " << rep.suite << "\n";
}

// Homology of a complex over any supported ring; Z/m goes through the
// integral lift of the same construction.
std::vector<HomologyGroup> homology_dispatch(const std::function<ChainComplex(const Ring&)>& build,
                                             const Ring& ring, int lo, int hi) {
    if (ring.kind() == RingKind::integers_mod) {
        Ring lift(RingKind::integers, ring.delta());
        ChainComplex zc = build(lift);
        return homology_range_mod(zc, ring.modulus(), lo, hi);
    }
    ChainComplex c = build(ring);
    return homology_range(c, lo, hi);
}

int run(int argc, char** argv) {
    CLI::App app{"exact homological algebra for Brauer diagram algebras"};
    app.require_subcommand(1);

    std::string ring_spec = "Z", delta = "0", format = "json";

    // ---- mul ----
    auto* mul = app.add_subcommand("mul", "multiply two algebra elements (JSON in, JSON out)");
    std::string lhs_path, rhs_path;
    mul->add_option("lhs", lhs_path, "left factor JSON file, or - for stdin array")->required();
    mul->add_option("rhs", rhs_path, "right factor JSON file (omitted when lhs is -)");
    mul->add_option("--format", format, "json|tsv");

    // ---- homology ----
    auto* hom = app.add_subcommand("homology", "homology tables for the paper's complexes");
    std::string target;
    int n = 0, k = 0, letters = 0, seps = 0, x = 0, cutoff = 4, bound = kDefaultDiagramBound;
    int filter_j = -1, maxdeg_hom = std::numeric_limits<int>::max();
    std::string X_csv;
    std::optional<int> y;
    hom->add_option("--target", target, "cn | cnk | w | inductive")->required();
    hom->add_option("--n", n, "strand count");
    hom->add_option("--k", k, "left-left connection count (cnk)");
    hom->add_option("--filter-j", filter_j, "report the filtration quotient F_j/F_{j-1} (cnk)");
    hom->add_option("--letters", letters, "|X| for separator words");
    hom->add_option("--seps", seps, "separator count for words");
    hom->add_option("--X", X_csv, "comma-separated subset of [n] (inductive)");
    hom->add_option("--x", x, "distinguished element of X (inductive)");
    hom->add_option("--y", [&y](const std::vector<std::string>& vals) {
        y = std::stoi(vals[0]);
        return true;
    }, "element outside X; selects the D-variant (inductive)");
    hom->add_option("--cutoff", cutoff, "truncation degree for inductive complexes");
    hom->add_option("--maxdeg", maxdeg_hom, "only report degrees <= maxdeg");
    hom->add_option("--bound", bound, "enumeration bound");
    hom->add_option("--ring", ring_spec, "Z | Q | Fp:<p> | Zmod:<m>");
    hom->add_option("--delta", delta, "ring parameter delta");
    hom->add_option("--format", format, "json|tsv");

    // ---- tor ----
    auto* tor = app.add_subcommand("tor", "Tor tables from the normalized bar complex");
    std::string algebra = "brauer", coeff = "trivial";
    int maxdeg = 2;
    tor->add_option("--algebra", algebra, "brauer | sym")->required();
    tor->add_option("--n", n, "strand count")->required();
    tor->add_option("--maxdeg", maxdeg, "compute Tor_i for i < maxdeg");
    tor->add_option("--coeff", coeff, "trivial | induced:<m> | quotient:<csv> | algebra:<N>");
    tor->add_option("--ring", ring_spec, "Z | Q | Fp:<p> | Zmod:<m>");
    tor->add_option("--delta", delta, "ring parameter delta");
    tor->add_option("--format", format, "json|tsv");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theorem-verification suites");
    std::string suite;
    int m = 0, deg_i = 1;
    std::string goldens_dir;
    verify->add_option("suite", suite,
                       "relations | thmA | thmB | thm41 | thm31 | phi | shapiro | surjection63")
        ->required();
    verify->add_option("--n", n, "strand count");
    verify->add_option("--m", m, "subalgebra size");
    verify->add_option("--i", deg_i, "homological degree");
    verify->add_option("--maxdeg", maxdeg, "degree truncation");
    verify->add_option("--ring", ring_spec, "Z | Q | Fp:<p> | Zmod:<m>");
    verify->add_option("--delta", delta, "ring parameter delta");
    verify->add_option("--goldens", goldens_dir, "compare the report against <dir>/<suite>.json");
    verify->add_option("--format", format, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        Ring ring = Ring::parse(ring_spec, delta);

        if (mul->parsed()) {
            Element a(0, ring), b(0, ring);
            try {
                if (lhs_path == "-") {
                    json arr = read_json_file("-");
                    a = element_from_json(arr.at(0));
                    b = element_from_json(arr.at(1));
                } else {
                    a = element_from_json(read_json_file(lhs_path));
                    b = element_from_json(read_json_file(rhs_path));
                }
            } catch (const json::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            } catch (const std::ios_base::failure& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            Element prod = a * b;
            std::cout << element_to_json(prod).dump(2) << "\n";
            return 0;
        }

        if (hom->parsed()) {
            std::vector<HomologyGroup> hs;
            int lo = -1, vanish_through = 0;
            if (target == "cn") {
                int hi = std::min(n - 1, maxdeg_hom);
                hs = homology_dispatch(
                    [&](const Ring& r) { return build_cn(n, r, bound).cx; }, ring, -1, hi);
                vanish_through = n >= 3 ? (n - 3) / 2 : -1;
            } else if (target == "cnk") {
                auto build = [&](const Ring& r) {
                    auto parts = split_cn(build_cn(n, r, bound));
                    if (k < 0 || k >= (int)parts.size())
                        throw diagram_error("k out of range");
                    if (filter_j >= 0) return filter_quotient(parts[k], filter_j).cx;
                    return parts[k].cx;
                };
                int hi = std::min(n - 1, maxdeg_hom);
                hs = homology_dispatch(build, ring, -1, hi);
                vanish_through = n - k - 2 + (filter_j >= 0 ? filter_j : 0);
            } else if (target == "w") {
                std::vector<int> X;
                for (int a = 1; a <= letters; ++a) X.push_back(a);
                int hi = std::min(letters - 1, maxdeg_hom);
                hs = homology_dispatch(
                    [&](const Ring& r) { return build_w(X, seps, r).cx; }, ring, -1, hi);
                vanish_through = letters - 2;
            } else if (target == "inductive") {
                Subset X = subset_of(parse_csv_ints(X_csv));
                int hi = std::min(cutoff - 1, maxdeg_hom);
                hs = homology_dispatch(
                    [&](const Ring& r) {
                        return build_inductive(n, X, x, y, cutoff, r).cx;
                    },
                    ring, -1, hi);
                vanish_through = cutoff - 1;
            } else {
                std::cerr << "unknown homology target: " << target << "\n";
                return kExitParse;
            }
            print_homology_table(hs, lo, format);
            for (int i = 0; i < (int)hs.size(); ++i)
                if (lo + i <= vanish_through && !hs[i].is_zero()) {
                    std::cerr << "nonzero homology inside the vanishing range at degree "
                              << (lo + i) << "\n";
                    return kExitVerify;
                }
            return 0;
        }

        if (tor->parsed()) {
            BarSpec spec;
            spec.alg = algebra == "sym" ? AlgebraKind::symmetric : AlgebraKind::brauer;
            spec.n = n;
            spec.ring = ring;
            if (coeff == "trivial") {
                spec.coeff = CoeffModule::trivial();
            } else if (coeff.rfind("induced:", 0) == 0) {
                spec.coeff = CoeffModule::induced(std::stoi(coeff.substr(8)));
            } else if (coeff.rfind("quotient:", 0) == 0) {
                spec.coeff = CoeffModule::quotient(subset_of(parse_csv_ints(coeff.substr(9))));
            } else if (coeff.rfind("algebra:", 0) == 0) {
                spec.coeff = CoeffModule::algebra(std::stoi(coeff.substr(8)));
            } else {
                std::cerr << "unknown coefficient module: " << coeff << "\n";
                return kExitParse;
            }
            TorResult t = bar_tor(spec, maxdeg);
            if (format == "tsv") {
                std::cout << "degree\tfree_rank\ttorsion\tgroup\n";
                for (int i = 0; i < (int)t.groups.size(); ++i) {
                    std::cout << i << "\t" << t.groups[i].free_rank << "\t";
                    for (size_t s = 0; s < t.groups[i].torsion.size(); ++s)
                        std::cout << (s ? "," : "") << t.groups[i].torsion[s].str();
                    std::cout << "\t" << group_to_string(t.groups[i]) << "\n";
                }
            } else {
                std::cout << tor_result_to_json(t).dump(2) << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            if (format == "json" && verify->count("--format") == 0) format = "text";
            SuiteReport rep;
            if (suite == "relations") {
                rep = verify_relations(n, ring);
            } else if (suite == "thmA") {
                rep = verify_thmA(n, maxdeg, ring);
            } else if (suite == "thmB") {
                rep = verify_thmB(n, deg_i, ring);
            } else if (suite == "thm41") {
                rep = verify_thm41(n, m, maxdeg, ring);
            } else if (suite == "thm31") {
                rep = verify_thm31(n, maxdeg, ring);
            } else if (suite == "phi") {
                rep = verify_phi(n, ring);
            } else if (suite == "shapiro") {
                rep = verify_shapiro(n, m, maxdeg, ring);
            } else if (suite == "surjection63") {
                rep = verify_surjection63(n, deg_i, ring);
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitParse;
            }
            if (!goldens_dir.empty()) {
                std::string path = goldens_dir + "/" + suite + ".json";
                try {
                    json golden = read_json_file(path);
                    bool match = golden == suite_report_to_json(rep);
                    rep.add("matches golden " + path, match);
                } catch (const std::exception& e) {
                    rep.add("golden " + path + " readable", std::string("readable"),
                            std::string(e.what()), false);
                }
            }
            print_suite(rep, format);
            return rep.pass ? 0 : kExitVerify;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const diagram_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const ring_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
