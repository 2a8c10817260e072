#pragma once

#include <json.hpp>

#include "rrsgp/cm.hpp"

namespace rrsgp {

inline nlohmann::json semigroup_json(const NumericalSemigroup& s) {
    return {{"gens", s.generators()}, {"conductor", s.conductor()}, {"multiplicity", s.multiplicity()}};
}

inline nlohmann::json ideal_json(const RelativeIdeal& e) {
    return {{"ambient", e.ambient().generators()},
            {"gens", e.generators()},
            {"sporadic", e.sporadic()},
            {"tail", e.tail_start()}};
}

inline nlohmann::json rr_report_json(const RRReport& rep) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& p : rep.powers)
        powers.push_back({{"m", p.m}, {"closed", p.closed}, {"closure_gens", p.closure.generators()}});
    nlohmann::json out{{"ambient", rep.ideal.ambient().generators()},
                       {"gens", rep.ideal.generators()},
                       {"e", rep.e},
                       {"c", rep.ideal.ambient().conductor()},
                       {"r", rep.r},
                       {"h", rep.h},
                       {"prop1", rep.prop1},
                       {"suff", rep.suff},
                       {"powers", powers}};
    if (rep.l) out["l"] = *rep.l;
    else out["l"] = nullptr;
    return out;
}

inline nlohmann::json pullback_json(const PullbackData& pb) {
    return {{"T", pb.t.generators()},
            {"F_gens", pb.f.generators()},
            {"modulus", pb.micro.modulus},
            {"apery_F", pb.micro.apery.entries},
            {"apery_BF", pb.micro.apery_blowup.entries},
            {"a", pb.micro.a},
            {"b", pb.micro.b},
            {"h_is_one", pb.verdict}};
}

} // namespace rrsgp
