#include "qext/json_io.hpp"

#include <stdexcept>

namespace qext {

FiniteGroup group_from_json(const json& j) {
    std::string name = j.value("name", "G");
    if (j.contains("table")) {
        auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
            throw std::invalid_argument(name + ": order field disagrees with table");
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return FiniteGroup(name, std::move(table), std::move(labels));
    }
    if (j.contains("generators")) {
        int degree = j.at("degree").get<int>();
        auto gens = j.at("generators").get<std::vector<Perm>>();
        int bound = j.value("max_order", FiniteGroup::kDefaultMaxOrder);
        return group_from_generators(name, degree, gens, bound);
    }
    throw std::invalid_argument("group spec needs a table or generators");
}

json group_to_json(const FiniteGroup& g) {
    json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["table"] = g.table();
    j["labels"] = g.labels();
    return j;
}

MatchedPair pair_from_json(const json& j, const FiniteGroup& ambient) {
    auto h1 = j.at("h1").get<std::vector<Elem>>();
    auto h2 = j.at("h2").get<std::vector<Elem>>();
    return exact_factorization(ambient, h1, h2, j.value("name", ambient.name()));
}

json pair_to_json(const MatchedPair& p) {
    std::vector<Elem> h2(p.n2());
    for (int s = 0; s < p.n2(); ++s) h2[s] = p.G.inv(p.j[s]);
    json j;
    j["name"] = p.G.name();
    j["ambient_order"] = p.G.order();
    j["h1"] = p.i;
    j["h2"] = h2;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    return j;
}

CocyclePair cocycle_from_json(const json& j, const MatchedPair& pair) {
    std::int64_t d = j.at("denominator").get<std::int64_t>();
    auto u = j.at("U").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    auto v = j.at("V").get<std::vector<std::vector<std::vector<std::int64_t>>>>();
    const int n1 = pair.n1(), n2 = pair.n2();
    CocyclePair c(n1, n2);
    if (static_cast<int>(u.size()) != n1 || static_cast<int>(v.size()) != n1)
        throw std::invalid_argument("cocycle tables do not match the pair");
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            for (int s = 0; s < n2; ++s) c.u(g, h, s) = Phase(u[g][h][s], d);
    for (int g = 0; g < n1; ++g)
        for (int s = 0; s < n2; ++s)
            for (int t = 0; t < n2; ++t) c.v(g, s, t) = Phase(v[g][s][t], d);
    return c;
}

json cocycle_to_json(const CocyclePair& c) {
    std::int64_t d = c.denominator();
    json j;
    j["denominator"] = d;
    auto dump3 = [&](const std::vector<Phase>& tab, int a, int b, int cdim) {
        std::vector<std::vector<std::vector<std::int64_t>>> out(
            a, std::vector<std::vector<std::int64_t>>(b, std::vector<std::int64_t>(cdim)));
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < b; ++k)
                for (int l = 0; l < cdim; ++l) {
                    const Phase& p = tab[(static_cast<size_t>(i) * b + k) * cdim + l];
                    out[i][k][l] = p.num * (d / p.den);
                }
        return out;
    };
    j["U"] = dump3(c.U, c.n1, c.n1, c.n2);
    j["V"] = dump3(c.V, c.n1, c.n2, c.n2);
    return j;
}

json gamma_to_json(const AbelianInvariants& g) {
    json j;
    j["torus_rank"] = g.torus_rank;
    j["invariant_factors"] = g.invariant_factors;
    return j;
}

json operator_to_json(const PhasePermOperator& w) {
    json j;
    j["dim"] = w.dim;
    j["perm"] = w.perm;
    std::vector<std::int64_t> num(w.dim), den(w.dim);
    for (int i = 0; i < w.dim; ++i) {
        num[i] = w.phase[i].num;
        den[i] = w.phase[i].den;
    }
    j["phase_num"] = num;
    j["phase_den"] = den;
    return j;
}

json checks_to_json(const std::vector<AxiomCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.witness.empty()) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace qext
