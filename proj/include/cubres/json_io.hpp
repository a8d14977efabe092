#pragma once

#include <json.hpp>

#include "cubres/cubic_value.hpp"
#include "cubres/eisenstein.hpp"
#include "cubres/representations.hpp"
#include "cubres/solvability.hpp"
#include "cubres/symbols.hpp"

namespace cubres {

inline void to_json(nlohmann::json& j, const EisensteinInt& x) {
    j = nlohmann::json{{"a", x.a}, {"b", x.b}};
}

inline void from_json(const nlohmann::json& j, EisensteinInt& x) {
    x = EisensteinInt(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
}

inline void to_json(nlohmann::json& j, const CubicValue& v) {
    if (v.is_zero()) {
        j = nlohmann::json{{"omega_power", nullptr}};
    } else {
        j = nlohmann::json{{"omega_power", v.power()}};
    }
}

inline void from_json(const nlohmann::json& j, CubicValue& v) {
    const auto& field = j.at("omega_power");
    v = field.is_null() ? CubicValue::zero() : CubicValue::omega_power(field.get<int>());
}

inline void to_json(nlohmann::json& j, const NormFormRep& r) {
    j = nlohmann::json{{"a", r.a}, {"b", r.b}};
}

inline void from_json(const nlohmann::json& j, NormFormRep& r) {
    r = {j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()};
}

inline void to_json(nlohmann::json& j, const FourPRep& r) {
    j = nlohmann::json{{"A", r.A}, {"B", r.B}};
}

inline void from_json(const nlohmann::json& j, FourPRep& r) {
    r = {j.at("A").get<std::int64_t>(), j.at("B").get<std::int64_t>()};
}

inline void to_json(nlohmann::json& j, const P27Rep& r) {
    j = nlohmann::json{{"C", r.C}, {"D", r.D}};
}

inline void from_json(const nlohmann::json& j, P27Rep& r) {
    r = {j.at("C").get<std::int64_t>(), j.at("D").get<std::int64_t>()};
}

inline void to_json(nlohmann::json& j, const QuadCase& q) {
    j = nlohmann::json{{"residue_class_mod8", q.residue_class}, {"plus2", q.plus2}, {"minus2", q.minus2}};
}

inline void from_json(const nlohmann::json& j, QuadCase& q) {
    q = {j.at("residue_class_mod8").get<int>(), j.at("plus2").get<int>(), j.at("minus2").get<int>()};
}

inline void to_json(nlohmann::json& j, const Cubic2Verdict& v) {
    j = nlohmann::json{{"p", v.p},
                       {"by_representation", v.by_representation},
                       {"by_symbol", v.by_symbol},
                       {"by_oracle", v.by_oracle},
                       {"root", nullptr}};
    if (v.root) j["root"] = *v.root;
}

inline void from_json(const nlohmann::json& j, Cubic2Verdict& v) {
    v.p = j.at("p").get<std::int64_t>();
    v.by_representation = j.at("by_representation").get<bool>();
    v.by_symbol = j.at("by_symbol").get<bool>();
    v.by_oracle = j.at("by_oracle").get<bool>();
    const auto& root = j.at("root");
    v.root = root.is_null() ? std::optional<std::int64_t>() : std::optional<std::int64_t>(root.get<std::int64_t>());
}

}  // namespace cubres
