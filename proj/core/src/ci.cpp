#include "hgi/ci.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hgi {

namespace {

void validate_model(const CIModel& model) {
    if (model.x_states < 1) throw std::invalid_argument("CI model: x_states must be positive");
    if (model.y_vars.empty()) throw std::invalid_argument("CI model: at least one observed Y variable required");
    for (const auto& v : model.y_vars) {
        if (v.states < 1) throw std::invalid_argument("CI model: variable state counts must be positive");
    }
}

void validate_statement(const CIModel& model, const CIStatement& st) {
    const int m = static_cast<int>(model.y_vars.size());
    std::vector<bool> used(m, false);
    auto mark = [&](const std::vector<int>& idxs) {
        for (int i : idxs) {
            if (i < 0 || i >= m) throw std::invalid_argument("CI statement: variable index out of range");
            if (used[i]) throw std::invalid_argument("CI statement: variable listed twice");
            used[i] = true;
        }
    };
    mark(st.independent);
    mark(st.conditioning);
    if (st.independent.empty()) throw std::invalid_argument("CI statement: independent set must be nonempty");
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw std::invalid_argument(
            "CI statement: independent and conditioning sets must cover all observed Y variables");
    }
    if (st.hidden_states < 0) throw std::invalid_argument("CI statement: hidden_states must be nonnegative");
    if (st.hidden_states == 1) throw std::invalid_argument("CI statement: a one-state hidden variable is constant");
}

} // namespace

int ci_ground_set_size(const CIModel& model) {
    validate_model(model);
    long long n = 1;
    for (const auto& v : model.y_vars) {
        n *= v.states;
        if (n > 1'000'000) throw std::invalid_argument("CI model: joint state space too large");
    }
    return static_cast<int>(n);
}

Hypergraph ci_statement_to_hypergraph(const CIModel& model, const CIStatement& st) {
    validate_model(model);
    validate_statement(model, st);

    const int m = static_cast<int>(model.y_vars.size());
    const int n = ci_ground_set_size(model);
    std::vector<long long> stride(m, 1);
    for (int t = 1; t < m; ++t) stride[t] = stride[t - 1] * model.y_vars[t - 1].states;

    const int minor_size = st.hidden_states == 0 ? 2 : st.hidden_states + 1;

    Hypergraph h = Hypergraph::on_full_ground_set(n);

    // Enumerate joint states of the conditioning variables; each choice picks
    // out one slice of the flattened state space.
    std::vector<int> cond = st.conditioning;
    std::vector<int> cond_state(cond.size(), 1);
    while (true) {
        std::vector<int> slice;
        // Enumerate joint states of the independent variables within the slice.
        std::vector<int> free_state(st.independent.size(), 1);
        while (true) {
            long long idx = 1;
            for (size_t t = 0; t < cond.size(); ++t) idx += (cond_state[t] - 1) * stride[cond[t]];
            for (size_t t = 0; t < st.independent.size(); ++t)
                idx += (free_state[t] - 1) * stride[st.independent[t]];
            slice.push_back(static_cast<int>(idx));

            size_t pos = 0;
            while (pos < free_state.size()) {
                if (++free_state[pos] <= model.y_vars[st.independent[pos]].states) break;
                free_state[pos] = 1;
                ++pos;
            }
            if (pos == free_state.size()) break;
        }

        std::sort(slice.begin(), slice.end());
        for (auto& e : subsets_of_size(slice, minor_size)) h.add_edge(e);

        size_t pos = 0;
        while (pos < cond.size()) {
            if (++cond_state[pos] <= model.y_vars[cond[pos]].states) break;
            cond_state[pos] = 1;
            ++pos;
        }
        if (pos == cond.size()) break;
    }
    return h;
}

Hypergraph ci_model_to_hypergraph(const CIModel& model) {
    validate_model(model);
    Hypergraph h = Hypergraph::on_full_ground_set(ci_ground_set_size(model));
    for (const auto& st : model.statements) {
        Hypergraph part = ci_statement_to_hypergraph(model, st);
        for (const auto& e : part.edges) h.add_edge(e);
    }
    return h;
}

CIModel ci_model_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CIModel model;
    model.x_states = j.at("x_states").get<int>();

    std::map<std::string, int> index_of;
    for (const auto& v : j.at("y_vars")) {
        CIVariable var;
        var.name = v.at("name").get<std::string>();
        var.states = v.at("states").get<int>();
        if (index_of.count(var.name)) throw std::invalid_argument("CI model: duplicate variable name " + var.name);
        index_of[var.name] = static_cast<int>(model.y_vars.size());
        model.y_vars.push_back(var);
    }

    auto resolve = [&](const nlohmann::json& names) {
        std::vector<int> out;
        for (const auto& name : names) {
            auto it = index_of.find(name.get<std::string>());
            if (it == index_of.end())
                throw std::invalid_argument("CI model: unknown variable " + name.get<std::string>());
            out.push_back(it->second);
        }
        return out;
    };

    for (const auto& s : j.at("statements")) {
        CIStatement st;
        st.independent = resolve(s.at("independent"));
        if (s.contains("conditioning")) st.conditioning = resolve(s.at("conditioning"));
        if (s.contains("hidden_states")) st.hidden_states = s.at("hidden_states").get<int>();
        model.statements.push_back(st);
    }

    validate_model(model);
    for (const auto& st : model.statements) validate_statement(model, st);
    return model;
}

CIModel intersection_axiom_model(int d, int k, int l) {
    CIModel model;
    model.x_states = d;
    model.y_vars = {{"Y1", k}, {"Y2", l}};
    model.statements.push_back({{0}, {1}, 0});
    model.statements.push_back({{1}, {0}, 2});
    return model;
}

} // namespace hgi
