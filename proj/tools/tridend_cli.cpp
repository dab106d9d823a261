// Command-line front end: enumeration, algebra operations, Magnus
// computations, and the verification suite.
//
// Exit codes: 0 success / verification pass, 1 verification counterexample,
// 2 usage error, 3 missing or unresolved convention ledger.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tridend/json_io.hpp>
#include <tridend/verify.hpp>

using namespace tridend;

namespace {

ConventionLedger load_ledger(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConventionError();
    }
    json j;
    try {
        in >> j;
        ConventionLedger ledger = ledger_from_json(j);
        if (!ledger.frozen) {
            throw ConventionError();
        }
        return ledger;
    } catch (const ConventionError &) {
        throw;
    } catch (const std::exception &e) {
        throw std::invalid_argument("malformed ledger file '" + path + "': " + e.what());
    }
}

template <typename Basis>
void print_series(const TriSeries<Basis> &x, bool as_json)
{
    if (as_json) {
        std::cout << series_to_json(x).dump(2) << '\n';
        return;
    }
    std::cout << "scalar " << to_string(x.scalar()) << '\n';
    for (const auto &[e, c] : x.terms()) {
        std::cout << e.encode() << "  " << to_string(c) << '\n';
    }
}

void print_matrix(const RatMatrix &m, bool as_json)
{
    if (as_json) {
        std::cout << matrix_to_json(m).dump() << '\n';
        return;
    }
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            std::cout << (j ? " " : "") << to_string(m(i, j));
        }
        std::cout << '\n';
    }
}

std::string block_text(const std::vector<int> &block)
{
    std::string s = "(";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(block[i]);
    }
    return s + ")";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact-arithmetic engine for tridendriform algebras and the "
                 "discrete Magnus expansion"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // trees ---------------------------------------------------------------
    auto *trees = app.add_subcommand("trees", "planar reduced trees");
    trees->require_subcommand(1);

    int degree = 0, cap = 10;
    auto *trees_enum = trees->add_subcommand("enum", "list all trees of a degree");
    trees_enum->add_option("--degree", degree, "tree degree (leaves minus one)")->required();
    trees_enum->add_option("--cap", cap, "enumeration degree cap")->capture_default_str();

    std::string tree_text;
    bool mirrored = false;
    auto *trees_stats = trees->add_subcommand("stats", "descent statistics of one tree");
    trees_stats->add_option("--tree", tree_text, "encoded tree, e.g. (|,(|,|))")->required();
    trees_stats->add_flag("--mirrored", mirrored, "read descents in the mirrored orientation");

    // surj ----------------------------------------------------------------
    auto *surj = app.add_subcommand("surj", "surjections (packed words)");
    surj->require_subcommand(1);

    int word_length = 0;
    auto *surj_enum = surj->add_subcommand("enum", "list all surjections of a length");
    surj_enum->add_option("--n", word_length, "word length")->required();

    std::string word_text;
    auto *surj_tree = surj->add_subcommand("tree", "leveled-tree report for a word");
    surj_tree->add_option("--word", word_text, "comma-separated word, e.g. 3,4,1,3")->required();

    // algebra ---------------------------------------------------------------
    auto *algebra = app.add_subcommand("algebra", "strand products of basis elements");
    algebra->require_subcommand(1);

    std::string basis = "trees", op = "star", lhs, rhs;
    int truncation = 10;
    auto *mult = algebra->add_subcommand("mult", "multiply two basis elements");
    mult->add_option("--basis", basis, "trees | surjections")->capture_default_str()
        ->check(CLI::IsMember({"trees", "surjections"}));
    mult->add_option("--op", op, "prec | succ | dot | star")->capture_default_str()
        ->check(CLI::IsMember({"prec", "succ", "dot", "star"}));
    mult->add_option("--lhs", lhs, "encoded left factor")->required();
    mult->add_option("--rhs", rhs, "encoded right factor")->required();
    mult->add_option("--truncation", truncation, "degree bound on the result")->capture_default_str();

    // magnus ----------------------------------------------------------------
    auto *magnus = app.add_subcommand("magnus", "Magnus expansions and conventions");
    magnus->require_subcommand(1);

    std::string ledger_path = "conventions.json";
    std::uint64_t seed = 0;
    auto *resolve = magnus->add_subcommand("resolve", "freeze the convention ledger");
    resolve->add_option("--ledger", ledger_path, "output ledger path")->capture_default_str();
    resolve->add_option("--seed", seed, "seed for the random battery checks")->capture_default_str();

    std::string variant = "strict";
    auto *closed = magnus->add_subcommand("closed", "closed descent-weighted formula");
    closed->add_option("--variant", variant, "strict | weak")->capture_default_str()
        ->check(CLI::IsMember({"strict", "weak"}));
    closed->add_option("--basis", basis, "trees | surjections")->capture_default_str()
        ->check(CLI::IsMember({"trees", "surjections"}));
    closed->add_option("--truncation", truncation, "degree bound")->capture_default_str();
    closed->add_option("--ledger", ledger_path, "frozen ledger path")->capture_default_str();

    std::string flavor = "standard";
    auto *prelie_cmd = magnus->add_subcommand("prelie", "pre-Lie Magnus recursion");
    prelie_cmd->add_option("--flavor", flavor, "standard | underlined")->capture_default_str()
        ->check(CLI::IsMember({"standard", "underlined"}));
    prelie_cmd->add_option("--truncation", truncation, "degree bound")->capture_default_str();

    std::string input_path;
    int order = 1, upto = 0;
    auto *discrete = magnus->add_subcommand("discrete", "discrete Magnus element of a sequence");
    discrete->add_option("--input", input_path, "matrix-sequence JSON file")->required();
    discrete->add_option("--order", order, "degree of the coefficient to report")->required();
    discrete->add_option("--upto", upto, "evaluation point N")->required();
    discrete->add_option("--variant", variant, "strict | weak")->capture_default_str()
        ->check(CLI::IsMember({"strict", "weak"}));
    discrete->add_option("--ledger", ledger_path, "frozen ledger path")->capture_default_str();

    // verify ----------------------------------------------------------------
    auto *verify = app.add_subcommand("verify", "verification suites");
    VerifyOptions vopt;
    auto *suite = verify->add_subcommand("suite", "run every module invariant");
    suite->add_option("--max-degree", vopt.max_degree, "tree degree bound")->capture_default_str();
    suite->add_option("--max-n", vopt.max_n, "surjection length bound")->capture_default_str();
    suite->add_option("--samples", vopt.samples, "random samples per law")->capture_default_str();
    suite->add_option("--dim", vopt.dim, "matrix dimension")->capture_default_str();
    suite->add_option("--horizon", vopt.horizon, "sequence prefix length")->capture_default_str();
    suite->add_option("--seed", vopt.seed, "PRNG seed (splitmix64)")->capture_default_str();

    for (auto *leaf : {trees_enum, trees_stats, surj_enum, surj_tree, mult, resolve, closed,
                       prelie_cmd, discrete, suite}) {
        leaf->add_flag("--json", as_json, "emit JSON instead of text");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (trees_enum->parsed()) {
            const auto all = enumerate_trees(degree, cap);
            if (as_json) {
                json list = json::array();
                for (const auto &t : all) {
                    list.push_back(t.encode());
                }
                std::cout << json{{"degree", degree}, {"trees", std::move(list)}}.dump(2) << '\n';
            } else {
                for (const auto &t : all) {
                    std::cout << t.encode() << '\n';
                }
            }
        } else if (trees_stats->parsed()) {
            const Tree t = parse_tree(tree_text);
            const auto orient = mirrored ? DescentOrientation::Mirrored : DescentOrientation::AsPrinted;
            const auto stats = descent_stats(t, orient);
            if (as_json) {
                std::cout << json{{"tree", t.encode()},
                                  {"degree", t.degree()},
                                  {"weak", stats.weak},
                                  {"strict", stats.strict}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "tree " << t.encode() << "\ndegree " << t.degree() << "\nweak "
                          << stats.weak << "\nstrict " << stats.strict << '\n';
            }
        } else if (surj_enum->parsed()) {
            const auto all = enumerate_surjections(word_length);
            if (as_json) {
                json list = json::array();
                for (const auto &f : all) {
                    list.push_back(f.encode());
                }
                std::cout << json{{"n", word_length}, {"surjections", std::move(list)}}.dump(2)
                          << '\n';
            } else {
                for (const auto &f : all) {
                    std::cout << f.encode() << '\n';
                }
            }
        } else if (surj_tree->parsed()) {
            const Surjection f = parse_surjection(word_text);
            const auto blocks = split_blocks(f);
            const auto lt = to_leveled_tree(f);
            const auto back = from_leveled_tree(lt);
            const auto d = descents(f);
            json jblocks = json::array(), jstd = json::array();
            std::string tblocks, tstd;
            for (const auto &b : blocks) {
                jblocks.push_back(block_text(b));
                const std::string s = b.empty() ? "()" : block_text(standardize(b).word());
                jstd.push_back(s);
                if (!tblocks.empty()) {
                    tblocks += ", ";
                    tstd += ", ";
                }
                tblocks += block_text(b);
                tstd += s;
            }
            json jlevels = json::array();
            for (int l : lt.levels) {
                jlevels.push_back(l);
            }
            if (as_json) {
                std::cout << json{{"word", f.encode()},
                                  {"blocks", std::move(jblocks)},
                                  {"standardized_blocks", std::move(jstd)},
                                  {"shape", lt.shape.encode()},
                                  {"levels", std::move(jlevels)},
                                  {"weak_descents", d.weak},
                                  {"strict_descents", d.strict},
                                  {"round_trip", back.encode()}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "word " << f.encode() << "\nblocks " << tblocks
                          << "\nstandardized " << tstd << "\nshape " << lt.shape.encode()
                          << "\nlevels";
                for (int l : lt.levels) {
                    std::cout << ' ' << l;
                }
                std::cout << "\nweak " << d.weak << "\nstrict " << d.strict << "\nround-trip "
                          << back.encode() << '\n';
            }
        } else if (mult->parsed()) {
            if (basis == "trees") {
                const auto a = TreeSeries::single(parse_tree(lhs), truncation);
                const auto b = TreeSeries::single(parse_tree(rhs), truncation);
                const auto r = (op == "prec")   ? prec(a, b)
                               : (op == "succ") ? succ(a, b)
                               : (op == "dot")  ? dot(a, b)
                                                : star(a, b);
                print_series(r, as_json);
            } else {
                const auto a = SurjSeries::single(parse_surjection(lhs), truncation);
                const auto b = SurjSeries::single(parse_surjection(rhs), truncation);
                const auto r = (op == "prec")   ? prec(a, b)
                               : (op == "succ") ? succ(a, b)
                               : (op == "dot")  ? dot(a, b)
                                                : star(a, b);
                print_series(r, as_json);
            }
        } else if (resolve->parsed()) {
            const ConventionLedger ledger = resolve_conventions(seed);
            const json j = ledger_to_json(ledger);
            std::ofstream out(ledger_path);
            if (!out) {
                throw std::invalid_argument("cannot write ledger file '" + ledger_path + "'");
            }
            out << j.dump(2) << '\n';
            if (as_json) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "frozen ledger written to " << ledger_path << '\n'
                          << j.dump(2) << '\n';
            }
        } else if (closed->parsed()) {
            const ConventionLedger ledger = load_ledger(ledger_path);
            const auto v = (variant == "strict") ? DescentVariant::Strict : DescentVariant::Weak;
            if (basis == "trees") {
                print_series(closed_formula_trees(v, truncation, ledger), as_json);
            } else {
                print_series(closed_formula_surjections(v, truncation, ledger), as_json);
            }
        } else if (prelie_cmd->parsed()) {
            const auto fl = (flavor == "standard") ? PreLieFlavor::LeftR : PreLieFlavor::LeftL;
            print_series(prelie_magnus(fl, truncation), as_json);
        } else if (discrete->parsed()) {
            const ConventionLedger ledger = load_ledger(ledger_path);
            std::ifstream in(input_path);
            if (!in) {
                throw std::invalid_argument("cannot read input file '" + input_path + "'");
            }
            json j;
            in >> j;
            const MatSeq a = matseq_from_json(j);
            if (upto < 0 || upto >= a.horizon()) {
                throw std::invalid_argument("evaluation point " + std::to_string(upto)
                                            + " outside horizon " + std::to_string(a.horizon()));
            }
            if (order < 1) {
                throw std::invalid_argument("order must be at least 1");
            }
            const auto v = (variant == "strict") ? DescentVariant::Strict : DescentVariant::Weak;
            const GradedSeq omega = discrete_mps(a, order, v, ledger);
            print_matrix(omega.degree(order).at(upto), as_json);
        } else if (suite->parsed()) {
            Verifier verifier(vopt);
            verifier.run_all();
            json checks = json::array();
            for (const auto &r : verifier.results()) {
                if (as_json) {
                    checks.push_back(json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
                } else {
                    std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
                    if (!r.ok && !r.detail.empty()) {
                        std::cout << "  [" << r.detail << "; seed " << vopt.seed << "]";
                    }
                    std::cout << '\n';
                }
            }
            if (as_json) {
                std::cout << json{{"seed", vopt.seed},
                                  {"checks", std::move(checks)},
                                  {"ok", verifier.all_ok()}}
                                 .dump(2)
                          << '\n';
            }
            if (!verifier.all_ok()) {
                return 1;
            }
        }
    } catch (const ConventionError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
