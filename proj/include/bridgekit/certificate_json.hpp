#pragma once

// Certificate wire format:
//   {"k":2,"seeds":[1,2],"trace":[{"crossing":3,"source":1,"target":3,"over":2,"color":1}]}

#include <json.hpp>

#include "bridgekit/coloring.hpp"

namespace bridgekit {

inline void to_json(nlohmann::json& j, const MoveRecord& m) {
    j = nlohmann::json{{"crossing", m.crossing}, {"source", m.source}, {"target", m.target},
                       {"over", m.over}, {"color", m.color}};
}

inline void from_json(const nlohmann::json& j, MoveRecord& m) {
    j.at("crossing").get_to(m.crossing);
    j.at("source").get_to(m.source);
    j.at("target").get_to(m.target);
    j.at("over").get_to(m.over);
    j.at("color").get_to(m.color);
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
    j = nlohmann::json{{"k", c.k}, {"seeds", c.seeds}, {"trace", c.trace}};
}

inline void from_json(const nlohmann::json& j, Certificate& c) {
    j.at("k").get_to(c.k);
    j.at("seeds").get_to(c.seeds);
    j.at("trace").get_to(c.trace);
}

}  // namespace bridgekit
