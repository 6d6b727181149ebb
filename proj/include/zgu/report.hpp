#pragma once

#include <nlohmann/json.hpp>

#include "zgu/chartable.hpp"
#include "zgu/cyclo.hpp"
#include "zgu/psl2.hpp"
#include "zgu/rational.hpp"
#include "zgu/screen.hpp"
#include "zgu/twosub.hpp"
#include "zgu/units.hpp"

// JSON emission/parsing for every report type. Big integers are carried
// as decimal strings, Rational as {num, den}, Cyclo as {N, coeffs}.
// nlohmann::json keeps object keys sorted, so output is deterministic.

namespace nlohmann {

template <> struct adl_serializer<zgu::Int> {
    static void to_json(json& j, const zgu::Int& x) { j = x.str(); }
    static void from_json(const json& j, zgu::Int& x) { x = zgu::Int(j.get<std::string>()); }
};

template <> struct adl_serializer<zgu::Rational> {
    static void to_json(json& j, const zgu::Rational& x) {
        j = json{{"num", zgu::rat_num(x)}, {"den", zgu::rat_den(x)}};
    }
    static void from_json(const json& j, zgu::Rational& x) {
        x = zgu::Rational(j.at("num").get<zgu::Int>(), j.at("den").get<zgu::Int>());
    }
};

template <> struct adl_serializer<zgu::Cyclo> {
    static void to_json(json& j, const zgu::Cyclo& x) {
        j = json{{"N", x.conductor()}, {"coeffs", x.coeffs()}};
    }
    static void from_json(const json& j, zgu::Cyclo& x) {
        x = zgu::Cyclo::from_coeffs(j.at("N").get<long>(),
                                    j.at("coeffs").get<std::vector<zgu::Rational>>());
    }
};

} // namespace nlohmann

namespace zgu {

using nlohmann::json;

// character table
json table_json(const CharTable& table, const ClassTable& classes);
CharTable parse_table_json(const json& j);

// classes / real-classes listings
json classes_json(const ClassTable& classes);
json real_classes_json(const ClassTable& classes);

// 2-subgroup obstructions
void to_json(json& j, const ObstructionReport& r);
void from_json(const json& j, ObstructionReport& r);
void to_json(json& j, const Theorem21Report& r);
void from_json(const json& j, Theorem21Report& r);

// torsion-unit enumeration; mu tables are recomputed for the emission
void to_json(json& j, const PAVector& pa);
void from_json(const json& j, PAVector& pa);
void to_json(json& j, const UnitChain& c);
void from_json(const json& j, UnitChain& c);
json help_json(const HelpResult& res);
HelpResult parse_help_json(const json& j);

// composition-factor screen
void to_json(json& j, const ScreenStep& s);
void from_json(const json& j, ScreenStep& s);
void to_json(json& j, const ScreenReport& r);
void from_json(const json& j, ScreenReport& r);
void to_json(json& j, const SuzukiVerdict& v);
void from_json(const json& j, SuzukiVerdict& v);
void to_json(json& j, const MinimalSimpleReport& r);
void from_json(const json& j, MinimalSimpleReport& r);

/// Serialize with sorted keys and a fixed indent: byte-identical for
/// identical inputs.
std::string dump_report(const json& j);

} // namespace zgu
