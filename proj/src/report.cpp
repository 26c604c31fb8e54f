#include "mcheck/report.hpp"

namespace mcheck {

namespace {

Json one_based(const std::vector<int>& xs) {
    Json out = Json::array();
    for (int x : xs) out.push_back(x + 1);
    return out;
}

Json as_is(const std::vector<int>& xs) {
    Json out = Json::array();
    for (int x : xs) out.push_back(x);
    return out;
}

}  // namespace

const char* lex_case_name(LexCase c) {
    switch (c) {
        case LexCase::LeftEmpty: return "left-empty";
        case LexCase::LeftTrivial: return "left-trivial";
        case LexCase::RightTrivial: return "right-trivial";
        case LexCase::Saturation: return "saturation";
    }
    return "?";
}

Json triviality_json(const TrivialityResult& r) {
    Json out;
    out["outcome"] = r.trivial ? "trivial" : "non-trivial";
    if (r.trivial) {
        out["witness"] = Json{{"rows", Json::array({r.bad_row_a + 1, r.bad_row_b + 1})}};
    } else {
        Json pairs = Json::array();
        for (const RowPairWitness& w : r.witnesses)
            pairs.push_back(Json{{"rows", Json::array({w.row_a + 1, w.row_b + 1})},
                                 {"columns", Json::array({w.col_a + 1, w.col_b + 1})}});
        out["witness"] = Json{{"pairs", std::move(pairs)}};
    }
    return out;
}

Json lex_json(const LexResult& r) {
    Json out;
    out["outcome"] = r.holds ? "holds" : "fails";
    out["case"] = lex_case_name(r.situation);
    Json derived = Json::array();
    Json log = Json::array();
    if (r.saturation) {
        for (const SaturationStep& step : r.saturation->log) {
            derived.push_back(as_is(step.column));
            Json interps = Json::array();
            for (const auto& table : step.interpretations) interps.push_back(as_is(table));
            log.push_back(Json{{"column", as_is(step.column)},
                               {"rows", one_based(step.rows)},
                               {"interpretations", std::move(interps)}});
        }
    }
    out["derived_columns"] = std::move(derived);
    out["log"] = std::move(log);
    if (r.saturation) {
        out["target_column"] = as_is(r.saturation->target);
        Json final_set = Json::array();
        for (const auto& col : r.saturation->columns) final_set.push_back(as_is(col));
        out["final_columns"] = std::move(final_set);
    }
    return out;
}

Json algebra_json(const TwoElementAlgebra& a) {
    Json ops = Json::array();
    for (const BooleanOperation& op : a.ops) {
        Json table = Json::array();
        for (std::uint8_t v : op.table) table.push_back(static_cast<int>(v));
        ops.push_back(Json{{"symbol", op.symbol}, {"arity", op.arity}, {"table", std::move(table)}});
    }
    return Json{{"ops", std::move(ops)}};
}

Json cube_simple_json(const ExtendedMatrix& m, int n_prime, const CubeSimpleResult& r) {
    Json out;
    out["outcome"] = r.holds ? "holds" : "fails";
    out["procedure"] = "row-cover";
    out["comparisons"] = r.comparisons;
    if (r.holds) {
        out["witness"] = Json{{"rows", one_based(r.witness.rows)}};
    } else {
        Json cover = Json::array();
        for (const CoverEntry& e : r.cover)
            cover.push_back(Json{{"rows", one_based(e.rows)}, {"column", e.column + 1}});
        Json witness;
        witness["cover"] = std::move(cover);
        witness["algebra"] = algebra_json(
            TwoElementAlgebra{{build_counterexample_algebra(m, n_prime)}});
        out["witness"] = std::move(witness);
    }
    return out;
}

Json cube_general_json(const CubeGeneralResult& r) {
    Json out;
    switch (r.outcome) {
        case SearchOutcome::Holds: out["outcome"] = "holds"; break;
        case SearchOutcome::Fails: out["outcome"] = "fails"; break;
        case SearchOutcome::Undecided: out["outcome"] = "undecided"; break;
    }
    out["procedure"] = "algebra-search";
    out["nodes"] = r.nodes;
    if (r.witness) out["witness"] = algebra_json(*r.witness);
    return out;
}

}  // namespace mcheck
