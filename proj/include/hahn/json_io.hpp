#pragma once

#include <json.hpp>

#include "hahn/polynomial.hpp"

namespace hahn {

/// PolyQ wire format: {"nvars": d, "terms": [{"exp": [...], "num": "...",
/// "den": "..."}]}, terms graded-lex sorted, numbers as decimal strings.
inline nlohmann::ordered_json poly_to_json(const PolyQ& p) {
    nlohmann::ordered_json j;
    j["nvars"] = p.nvars();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = e;
        term["num"] = c.get_num().get_str();
        term["den"] = c.get_den().get_str();
        j["terms"].push_back(term);
    }
    return j;
}

inline PolyQ poly_from_json(const nlohmann::json& j) {
    PolyQ p(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms")) {
        Exponents e = term.at("exp").get<Exponents>();
        Rational c = rat_from_string(term.at("num").get<std::string>() + "/" +
                                     term.at("den").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

}  // namespace hahn
