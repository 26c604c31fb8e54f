#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mcheck/corpus.hpp"
#include "mcheck/cube.hpp"
#include "mcheck/format.hpp"
#include "mcheck/lex.hpp"
#include "mcheck/report.hpp"
#include "mcheck/triviality.hpp"

namespace {

using namespace mcheck;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "time_ms="
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                  << "\n";
    }
};

void emit(const Json& json) { std::cout << json.dump(2) << "\n"; }

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
    out << text;
}

int run_trivial(const std::string& file, bool json) {
    const ExtendedMatrix m = parse_matrix_file(file);
    if (!m.simple())
        throw std::invalid_argument("'" + file + "' is not simple (need m'=1 and k=l)");
    Timer timer;
    const TrivialityResult r = is_trivial(m);
    if (json) {
        Json out;
        out["command"] = "trivial";
        out["input"] = file;
        out.update(triviality_json(r));
        emit(out);
    } else if (r.trivial) {
        std::cout << "trivial: rows (" << r.bad_row_a + 1 << "," << r.bad_row_b + 1
                  << ") admit no witness columns related in the joined row kernels\n";
    } else {
        std::cout << "non-trivial: every row pair admits witness columns related in the "
                     "joined row kernels\n";
    }
    return r.trivial ? kExitFails : kExitHolds;
}

int report_cube(const ExtendedMatrix& m, int n_prime, const std::string& context,
                long long node_cap, bool json, const std::string& note) {
    Timer timer;
    if (m.simple()) {
        const CubeSimpleResult r = implies_cube_simple(m, n_prime);
        if (json) {
            Json out;
            out["command"] = "cube";
            out["n"] = n_prime;
            out["context"] = context;
            out["context_note"] =
                "the verdict is the same in the finitely complete, regular and varietal contexts";
            if (!note.empty()) out["note"] = note;
            out.update(cube_simple_json(m, n_prime, r));
            emit(out);
        } else {
            if (!note.empty()) std::cout << note << "\n";
            if (r.holds) {
                std::cout << "holds: rows (";
                for (std::size_t a = 0; a < r.witness.rows.size(); ++a)
                    std::cout << (a ? "," : "") << r.witness.rows[a] + 1;
                std::cout << ") share no witnessing column (" << r.comparisons
                          << " comparisons; same verdict in every context)\n";
            } else {
                std::cout << "fails: every row tuple is covered by some column ("
                          << r.comparisons
                          << " comparisons; same verdict in every context)\n";
                const BooleanOperation p = build_counterexample_algebra(m, n_prime);
                std::cout << "counterexample operation " << p.symbol << "/" << p.arity << " = [";
                for (std::size_t e = 0; e < p.table.size(); ++e)
                    std::cout << (e ? "," : "") << int(p.table[e]);
                std::cout << "]\n";
            }
        }
        return r.holds ? kExitHolds : kExitFails;
    }

    const CubeGeneralResult r = implies_cube_general(m, n_prime, node_cap);
    if (json) {
        Json out;
        out["command"] = "cube";
        out["n"] = n_prime;
        out["context"] = context;
        out["context_note"] = "the verdict is the same in the regular and varietal contexts";
        if (!note.empty()) out["note"] = note;
        out.update(cube_general_json(r));
        emit(out);
    } else {
        if (!note.empty()) std::cout << note << "\n";
        switch (r.outcome) {
            case SearchOutcome::Holds:
                std::cout << "holds: no two-element algebra of the matrix variety is "
                             "compatible with the cube relation ("
                          << r.nodes << " nodes; same verdict in every context)\n";
                break;
            case SearchOutcome::Fails:
                std::cout << "fails: witness algebra found (" << r.nodes << " nodes):\n";
                for (const BooleanOperation& op : r.witness->ops) {
                    std::cout << "  " << op.symbol << "/" << op.arity << " = [";
                    for (std::size_t e = 0; e < op.table.size(); ++e)
                        std::cout << (e ? "," : "") << int(op.table[e]);
                    std::cout << "]\n";
                }
                break;
            case SearchOutcome::Undecided:
                std::cout << "undecided: node cap of " << node_cap << " exhausted\n";
                break;
        }
    }
    switch (r.outcome) {
        case SearchOutcome::Holds: return kExitHolds;
        case SearchOutcome::Fails: return kExitFails;
        default: return kExitUndecided;
    }
}

int run_implies(const std::string& file1, const std::string& file2, const std::string& context,
                bool json, bool full_saturation) {
    const ExtendedMatrix m1 = parse_matrix_file(file1);
    const ExtendedMatrix m2 = parse_matrix_file(file2);

    if (context != "lex") {
        const std::optional<int> cube_rows = cube_instance_rows(m2);
        if (!cube_rows)
            throw std::invalid_argument(
                "no general decision procedure is known for '--context " + context +
                "' with an arbitrary right matrix; it is available when '" + file2 +
                "' is a cube or Mal'tsev instance");
        const std::string note = "right matrix is an n'=" + std::to_string(*cube_rows) +
                                 " cube instance; deciding the cube implication";
        return report_cube(m1, *cube_rows, context, 10'000'000, json, note);
    }

    if (!m1.simple())
        throw std::invalid_argument("'" + file1 + "' is not simple (need m'=1 and k=l); "
                                    "the finitely complete implication is only defined "
                                    "for simple matrices");
    if (!m2.simple())
        throw std::invalid_argument("'" + file2 + "' is not simple (need m'=1 and k=l); "
                                    "the finitely complete implication is only defined "
                                    "for simple matrices");

    Timer timer;
    LexOptions options;
    options.full_saturation = full_saturation;
    const LexResult r = implies_lex(m1, m2, options);
    if (json) {
        Json out;
        out["command"] = "implies";
        out["context"] = context;
        out["inputs"] = Json::array({file1, file2});
        out.update(lex_json(r));
        emit(out);
    } else {
        std::cout << (r.holds ? "holds" : "fails") << " (case: " << lex_case_name(r.situation);
        if (r.saturation)
            std::cout << ", derived columns: " << r.saturation->log.size()
                      << ", final set size: " << r.saturation->columns.size();
        std::cout << ")\n";
        if (r.saturation && !r.holds)
            std::cout << "the saturated column set does not contain the target column\n";
    }
    return r.holds ? kExitHolds : kExitFails;
}

int run_corpus_cmd(std::uint64_t seed, int count, const CorpusBounds& bounds, bool force) {
    if (!force && (bounds.n_max > 4 || bounds.m_max > 4 || bounds.k_max > 3))
        throw std::invalid_argument(
            "bounds beyond n<=4, m<=4, k<=3 need --force (the search cost is exponential)");
    if (bounds.n_max < 1 || bounds.m_max < 0 || bounds.k_max < 1)
        throw std::invalid_argument("bounds must satisfy nmax>=1, mmax>=0, kmax>=1");
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    Timer timer;
    const CorpusReport report = run_corpus(seed, count, bounds);
    std::cout << report.text;
    return report.disagreements == 0 && report.witness_failures == 0 ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mcheck - decision procedures for matrix conditions"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 the decided property holds (or the matrix is non-trivial),\n"
        "            1 it fails (or the matrix is trivial), 2 usage or input error,\n"
        "            3 undecided because the search hit its node cap.");

    std::string file1, file2, out_path, context = "lex", family_name;
    bool json = false, full_saturation = false, force = false;
    int n_prime = 2, fam_r = 2, fam_n = 2, fam_k = 2;
    long long node_cap = 10'000'000;
    std::uint64_t seed = 0;
    int count = 0;
    CorpusBounds bounds;

    CLI::App* trivial = app.add_subcommand(
        "trivial", "Decide whether a simple matrix condition forces preorders");
    trivial->add_option("file", file1, "matrix file")->required();
    trivial->add_flag("--json", json, "emit the verdict and witness as JSON");

    CLI::App* implies = app.add_subcommand(
        "implies", "Decide whether the first matrix condition implies the second");
    implies->add_option("file1", file1, "left matrix file")->required();
    implies->add_option("file2", file2, "right matrix file")->required();
    implies->add_option("--context", context,
                        "category context: lex (finitely complete; default), reg or alg "
                        "(only decidable when file2 is a cube/Mal'tsev instance)")
        ->check(CLI::IsMember({"lex", "reg", "alg"}));
    implies->add_flag("--json", json, "emit the verdict and witness as JSON");
    implies->add_flag("--full-saturation", full_saturation,
                      "keep closing the column set after the target is derived");

    CLI::App* cube = app.add_subcommand(
        "cube", "Decide whether a matrix condition implies the n'-cube condition");
    cube->add_option("file", file1, "matrix file")->required();
    cube->add_option("-n,--n", n_prime, "cube dimension n' (>= 2)")->required();
    cube->add_option("--context", context,
                     "label only: lex, reg and alg verdicts coincide for cube targets")
        ->check(CLI::IsMember({"lex", "reg", "alg"}));
    cube->add_option("--node-cap", node_cap, "search node cap for general matrices");
    cube->add_flag("--json", json, "emit the verdict and witness as JSON");

    CLI::App* family = app.add_subcommand("family", "Write a built-in family matrix");
    family->add_option("name", family_name, "one of: mal perm ari maj cube edge")
        ->required()
        ->check(CLI::IsMember({"mal", "perm", "ari", "maj", "cube", "edge"}));
    family->add_option("--r", fam_r, "permutability degree for perm (>= 2)");
    family->add_option("--n", fam_n, "rows for cube/edge (>= 2)");
    family->add_option("--k", fam_k, "variables for cube (>= 2, default 2)");
    family->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* inter = app.add_subcommand(
        "intersect", "Combine two simple matrices into their conjunction matrix");
    inter->add_option("file1", file1, "first matrix file")->required();
    inter->add_option("file2", file2, "second matrix file")->required();
    inter->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* pres = app.add_subcommand(
        "presentation", "Print the equational presentation of a matrix condition");
    pres->add_option("file", file1, "matrix file")->required();

    CLI::App* corpus = app.add_subcommand(
        "corpus", "Cross-validate the decision procedures on a seeded random stream");
    corpus->add_option("--seed", seed, "stream seed")->required();
    corpus->add_option("--count", count, "matrices (and pairs) to generate")->required();
    corpus->add_option("--nmax", bounds.n_max, "max rows (default 3)");
    corpus->add_option("--mmax", bounds.m_max, "max left columns (default 4)");
    corpus->add_option("--kmax", bounds.k_max, "max variables (default 2)");
    corpus->add_flag("--force", force, "allow bounds beyond the safety limits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (trivial->parsed()) return run_trivial(file1, json);
        if (implies->parsed())
            return run_implies(file1, file2, context, json, full_saturation);
        if (cube->parsed()) {
            if (n_prime < 2) throw std::invalid_argument("-n must be >= 2");
            return report_cube(parse_matrix_file(file1), n_prime, context, node_cap, json, "");
        }
        if (family->parsed()) {
            write_output(serialize(make_family(family_name, fam_r, fam_n, fam_k)), out_path);
            return kExitHolds;
        }
        if (inter->parsed()) {
            const ExtendedMatrix m1 = parse_matrix_file(file1);
            const ExtendedMatrix m2 = parse_matrix_file(file2);
            write_output(serialize(intersect(m1, m2)), out_path);
            return kExitHolds;
        }
        if (pres->parsed()) {
            std::cout << presentation(parse_matrix_file(file1)).to_string();
            return kExitHolds;
        }
        if (corpus->parsed()) return run_corpus_cmd(seed, count, bounds, force);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
