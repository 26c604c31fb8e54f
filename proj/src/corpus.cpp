#include "mcheck/corpus.hpp"

#include "mcheck/cube.hpp"
#include "mcheck/format.hpp"
#include "mcheck/lex.hpp"

namespace mcheck {

namespace {

// rng() % bound is biased but portable and deterministic, which is what a
// reproducible corpus needs.
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Suite {
    std::string text;
    int checks = 0;
    int disagreements = 0;
    int witness_failures = 0;

    void disagree(const ExtendedMatrix& m, const std::string& what) {
        ++disagreements;
        text += "DISAGREEMENT " + what + "\n" + serialize(m);
    }
    void bad_witness(const ExtendedMatrix& m, const std::string& what) {
        ++witness_failures;
        text += "BAD WITNESS " + what + "\n" + serialize(m);
    }

    void check_single(const ExtendedMatrix& m, int n_prime) {
        ++checks;
        const std::string tag = "n'=" + std::to_string(n_prime);
        const LexResult lex = implies_lex(m, make_cube(n_prime, 2));
        const CubeSimpleResult cover = implies_cube_simple(m, n_prime);
        const CubeGeneralResult oracle = implies_cube_general(m, n_prime);

        if (lex.holds != cover.holds)
            disagree(m, "saturation vs row-cover, " + tag);
        if (oracle.outcome == SearchOutcome::Undecided)
            disagree(m, "algebra search hit the node cap, " + tag);
        else if ((oracle.outcome == SearchOutcome::Holds) != cover.holds)
            disagree(m, "row-cover vs algebra search, " + tag);

        const long long bound = [&] {
            long long b = n_prime * static_cast<long long>(m.left_cols());
            for (int a = 0; a < n_prime; ++a) b *= m.rows();
            return b;
        }();
        if (cover.comparisons > bound)
            disagree(m, "comparison count exceeds n'*m*n^n', " + tag);

        if (lex.holds && lex.situation == LexCase::Saturation &&
            !replay_saturation(m, make_cube(n_prime, 2), *lex.saturation))
            bad_witness(m, "saturation log does not replay, " + tag);
        if (cover.holds && !check_row_witness(m, cover.witness))
            bad_witness(m, "row witness does not check, " + tag);
        if (!cover.holds) {
            if (!check_cover_table(m, n_prime, cover.cover))
                bad_witness(m, "cover table does not check, " + tag);
            const BooleanOperation p = build_counterexample_algebra(m, n_prime);
            if (!algebra_satisfies(TwoElementAlgebra{{p}}, presentation(m)) ||
                !preserves(p, CubeRelation{n_prime}))
                bad_witness(m, "counterexample operation does not check, " + tag);
        }
        if (oracle.outcome == SearchOutcome::Fails) {
            if (!algebra_satisfies(*oracle.witness, presentation(m)))
                bad_witness(m, "witness algebra violates the presentation, " + tag);
            for (const BooleanOperation& op : oracle.witness->ops)
                if (!preserves(op, CubeRelation{n_prime}))
                    bad_witness(m, "witness operation not compatible, " + tag);
        }
    }

    void check_pair(const ExtendedMatrix& m1, const ExtendedMatrix& m2, int n_prime) {
        ++checks;
        const ExtendedMatrix meet = intersect(m1, m2);
        const bool one = implies_cube_simple(m1, n_prime).holds ||
                         implies_cube_simple(m2, n_prime).holds;
        const bool both = implies_cube_simple(meet, n_prime).holds;
        if (one != both) {
            disagree(m1, "intersection law, n'=" + std::to_string(n_prime) + ", first member");
            text += "second member\n" + serialize(m2);
        }
    }
};

}  // namespace

ExtendedMatrix random_simple_matrix(std::mt19937_64& rng, const CorpusBounds& bounds) {
    const int n = draw(rng, 1, bounds.n_max);
    const int m = draw(rng, 0, bounds.m_max);
    const int k = draw(rng, 1, bounds.k_max);
    MatrixData data;
    data.left.assign(n, {});
    data.right.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) data.left[i].push_back(Variable{draw(rng, 1, k)});
        data.right[i].push_back(Variable{draw(rng, 1, k)});
    }
    data.left_var_bound = k;
    data.total_var_bound = k;
    return validate(data);
}

CorpusReport run_corpus(std::uint64_t seed, int count, const CorpusBounds& bounds) {
    std::mt19937_64 rng(seed);
    Suite suite;
    suite.text = "corpus seed=" + std::to_string(seed) + " count=" + std::to_string(count) +
                 " nmax=" + std::to_string(bounds.n_max) + " mmax=" + std::to_string(bounds.m_max) +
                 " kmax=" + std::to_string(bounds.k_max) + "\n";

    for (int t = 0; t < count; ++t) {
        const ExtendedMatrix m = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) suite.check_single(m, n_prime);
    }
    for (int t = 0; t < count; ++t) {
        const ExtendedMatrix m1 = random_simple_matrix(rng, bounds);
        const ExtendedMatrix m2 = random_simple_matrix(rng, bounds);
        for (int n_prime : {2, 3}) suite.check_pair(m1, m2, n_prime);
    }

    CorpusReport report;
    report.matrices = count;
    report.pairs = count;
    report.checks = suite.checks;
    report.disagreements = suite.disagreements;
    report.witness_failures = suite.witness_failures;
    suite.text += "matrices=" + std::to_string(count) + " pairs=" + std::to_string(count) +
                  " checks=" + std::to_string(suite.checks) +
                  " disagreements=" + std::to_string(suite.disagreements) +
                  " witness_failures=" + std::to_string(suite.witness_failures) + "\n";
    report.text = std::move(suite.text);
    return report;
}

}  // namespace mcheck
