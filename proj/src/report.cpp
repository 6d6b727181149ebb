#include "zgu/report.hpp"

namespace zgu {

json table_json(const CharTable& table, const ClassTable& classes) {
    json jclasses = json::array();
    for (const auto& c : classes.classes)
        jclasses.push_back({{"label", c.label}, {"size", c.size}, {"order", c.element_order}});
    json jrows = json::array();
    for (const auto& row : table.rows) {
        json vals = json::object();
        for (const auto& [label, v] : row.values) vals[label] = v;
        jrows.push_back({{"label", row.label}, {"degree", row.degree}, {"values", vals}});
    }
    return json{{"q", table.q}, {"epsilon", table.eps}, {"classes", jclasses}, {"rows", jrows}};
}

CharTable parse_table_json(const json& j) {
    CharTable t;
    t.q = j.at("q").get<long>();
    t.eps = j.at("epsilon").get<int>();
    for (const auto& jr : j.at("rows")) {
        CharRow row;
        row.label = jr.at("label").get<std::string>();
        row.degree = jr.at("degree").get<long>();
        for (const auto& [label, v] : jr.at("values").items())
            row.values.emplace(label, v.get<Cyclo>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

json classes_json(const ClassTable& classes) {
    json arr = json::array();
    for (const auto& c : classes.classes)
        arr.push_back({{"label", c.label}, {"size", c.size}, {"order", c.element_order}});
    return json{{"q", classes.q}, {"epsilon", classes.eps}, {"classes", arr}};
}

json real_classes_json(const ClassTable& classes) {
    auto real = real_classes(classes);
    json arr = json::array();
    for (const auto& c : classes.classes)
        arr.push_back({{"label", c.label},
                       {"order", c.element_order},
                       {"real", real.count(c.label) != 0}});
    return json{{"q", classes.q}, {"classes", arr}};
}

void to_json(json& j, const ObstructionReport& r) {
    j = json{{"test", r.test},         {"q", r.q},
             {"epsilon", r.eps},       {"raw_sum", r.raw_sum},
             {"modulus", r.modulus},   {"scalar_product", r.scalar_product},
             {"verdict", r.verdict},   {"witness", r.witness}};
}

void from_json(const json& j, ObstructionReport& r) {
    j.at("test").get_to(r.test);
    j.at("q").get_to(r.q);
    j.at("epsilon").get_to(r.eps);
    j.at("raw_sum").get_to(r.raw_sum);
    j.at("modulus").get_to(r.modulus);
    j.at("scalar_product").get_to(r.scalar_product);
    j.at("verdict").get_to(r.verdict);
    j.at("witness").get_to(r.witness);
}

void to_json(json& j, const Theorem21Report& r) {
    j = json{{"q", r.q},
             {"epsilon", r.eps},
             {"verdict", r.verdict},
             {"note", r.note},
             {"obstructions", r.obstructions}};
}

void from_json(const json& j, Theorem21Report& r) {
    j.at("q").get_to(r.q);
    j.at("epsilon").get_to(r.eps);
    j.at("verdict").get_to(r.verdict);
    j.at("note").get_to(r.note);
    j.at("obstructions").get_to(r.obstructions);
}

void to_json(json& j, const PAVector& pa) {
    j = json{{"unit_order", pa.unit_order}, {"eps", pa.eps}};
}

void from_json(const json& j, PAVector& pa) {
    j.at("unit_order").get_to(pa.unit_order);
    j.at("eps").get_to(pa.eps);
}

void to_json(json& j, const UnitChain& c) {
    json pa = json::object();
    for (const auto& [e, v] : c.pa) pa[std::to_string(e)] = v;
    j = json{{"n", c.n}, {"pa", pa}};
}

void from_json(const json& j, UnitChain& c) {
    j.at("n").get_to(c.n);
    c.pa.clear();
    for (const auto& [e, v] : j.at("pa").items()) c.pa.emplace(std::stol(e), v.get<PAVector>());
}

json help_json(const HelpResult& res) {
    const ClassTable classes = conjugacy_classes(res.q);
    const CharTable table = build_char_table(res.q);
    json sols = json::array();
    for (const auto& sol : res.solutions) {
        json mu = json::object();
        for (const auto& row : table.rows) {
            json per_l = json::array();
            for (long l = 0; l < res.n; ++l)
                per_l.push_back(
                    lp_multiplicity(sol.chain, row.values, row.degree, l, classes, table));
            mu[row.label] = per_l;
        }
        if (res.n % prime_power(res.q).first != 0)
            for (const auto& row : brauer_characters(res.q)) {
                json per_l = json::array();
                for (long l = 0; l < res.n; ++l)
                    per_l.push_back(
                        lp_multiplicity(sol.chain, row.values, row.degree, l, classes, table));
                mu[row.label] = per_l;
            }
        sols.push_back({{"chain", sol.chain}, {"trivial", sol.trivial}, {"mu", mu}});
    }
    return json{{"q", res.q},
                {"order", res.n},
                {"complete", res.complete},
                {"solutions", sols}};
}

HelpResult parse_help_json(const json& j) {
    HelpResult res;
    res.q = j.at("q").get<long>();
    res.n = j.at("order").get<long>();
    res.complete = j.at("complete").get<bool>();
    for (const auto& js : j.at("solutions")) {
        HelpSolution sol;
        js.at("chain").get_to(sol.chain);
        js.at("trivial").get_to(sol.trivial);
        res.solutions.push_back(std::move(sol));
    }
    return res;
}

void to_json(json& j, const ScreenStep& s) {
    j = json{{"test", s.test}, {"outcome", s.outcome}, {"witness", s.witness}};
}

void from_json(const json& j, ScreenStep& s) {
    j.at("test").get_to(s.test);
    j.at("outcome").get_to(s.outcome);
    j.at("witness").get_to(s.witness);
}

void to_json(json& j, const ScreenReport& r) {
    j = json{{"candidate", r.candidate},
             {"q", r.q},
             {"verdict", r.verdict},
             {"reason", r.reason},
             {"steps", r.steps}};
}

void from_json(const json& j, ScreenReport& r) {
    j.at("candidate").get_to(r.candidate);
    j.at("q").get_to(r.q);
    j.at("verdict").get_to(r.verdict);
    j.at("reason").get_to(r.reason);
    j.at("steps").get_to(r.steps);
}

void to_json(json& j, const SuzukiVerdict& v) {
    j = json{{"excluded", v.excluded}, {"order_equal", v.order_equal}, {"witness", v.witness}};
}

void from_json(const json& j, SuzukiVerdict& v) {
    j.at("excluded").get_to(v.excluded);
    j.at("order_equal").get_to(v.order_equal);
    j.at("witness").get_to(v.witness);
}

void to_json(json& j, const MinimalSimpleReport& r) {
    j = json{{"g", r.g_tag}, {"summary", r.summary}, {"lines", r.lines}};
}

void from_json(const json& j, MinimalSimpleReport& r) {
    j.at("g").get_to(r.g_tag);
    j.at("summary").get_to(r.summary);
    j.at("lines").get_to(r.lines);
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

} // namespace zgu
