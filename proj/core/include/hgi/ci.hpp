#pragma once

#include "hgi/hypergraph.hpp"

#include <string>
#include <vector>

namespace hgi {

// A conditional-independence statement about an observed variable X and a
// list of observed variables Y_1, ..., Y_m: X is independent of the variables
// indexed by `independent`, conditioned on the variables indexed by
// `conditioning` and, optionally, a hidden variable with `hidden_states`
// states (0 means no hidden variable). Indices refer into CIModel::y_vars.
struct CIStatement {
    std::vector<int> independent;
    std::vector<int> conditioning;
    int hidden_states = 0;
};

struct CIVariable {
    std::string name;
    int states = 0;
};

struct CIModel {
    int x_states = 0;
    std::vector<CIVariable> y_vars;
    std::vector<CIStatement> statements;
};

// Joint states of (Y_1, ..., Y_m) are numbered 1..prod(states) with the
// first-listed variable varying fastest.
int ci_ground_set_size(const CIModel& model);

// Translates one statement into hypergraph edges: r-subsets of every slice of
// the joint state space obtained by fixing the conditioning variables, where
// r = 2 for fully observed statements and hidden_states + 1 otherwise.
// Requires independent and conditioning to partition the observed variables.
Hypergraph ci_statement_to_hypergraph(const CIModel& model, const CIStatement& statement);

// Union of the edge sets of all statements in the model.
Hypergraph ci_model_to_hypergraph(const CIModel& model);

// Parses a model from JSON: {"x_states": int, "y_vars": [{"name": str,
// "states": int}, ...], "statements": [{"independent": [str], "conditioning":
// [str], "hidden_states": int?}, ...]}.
CIModel ci_model_from_json(const std::string& text);

// The two-statement model whose translation equals build_delta(k, l):
// X indep Y1 given Y2, and X indep Y2 given {Y1, H} with binary H.
CIModel intersection_axiom_model(int d, int k, int l);

} // namespace hgi
