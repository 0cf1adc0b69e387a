#ifndef LAGRANGE_KIT_SERIALIZATION_HPP
#define LAGRANGE_KIT_SERIALIZATION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <lagrange_kit/errors.hpp>
#include <lagrange_kit/identities/report.hpp>
#include <lagrange_kit/laurent_series.hpp>
#include <lagrange_kit/multipoly.hpp>
#include <lagrange_kit/oracle/table.hpp>
#include <lagrange_kit/power_series.hpp>
#include <lagrange_kit/rational.hpp>

namespace lagrange_kit
{

inline constexpr int json_schema_version = 1;

// Rationals travel as strings, "p/q" or "p" for integers.
inline nlohmann::json to_json(const Rational &r)
{
    return r.to_string();
}

inline Rational rational_from_json(const nlohmann::json &j)
{
    if (!j.is_string()) {
        throw ParseError("expected a rational string", 0);
    }
    return Rational::parse(j.get<std::string>());
}

inline nlohmann::json to_json(const LaurentSeries<Rational> &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return {{"min_exponent", s.min_exponent()}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline nlohmann::json to_json(const PowerSeries<Rational> &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return {{"min_exponent", 0}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline LaurentSeries<Rational> laurent_from_json(const nlohmann::json &j)
{
    try {
        std::vector<Rational> c;
        for (const auto &v : j.at("coefficients")) {
            c.push_back(rational_from_json(v));
        }
        return LaurentSeries<Rational>(j.at("min_exponent").get<int>(), std::move(c), j.at("order").get<int>());
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what(), 0);
    }
}

// {"variables": [...], "terms": [{"exponents": [...], "coefficient": "p/q"}, ...]}
inline nlohmann::json to_json(const MultiPoly &p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[mono, c] : p.terms()) {
        terms.push_back({{"exponents", mono}, {"coefficient", to_json(c)}});
    }
    return {{"variables", p.variables()}, {"terms", terms}};
}

inline MultiPoly multipoly_from_json(const nlohmann::json &j)
{
    try {
        const auto names = j.at("variables").get<MultiPoly::Variables>();
        MultiPoly::Terms terms;
        for (const auto &t : j.at("terms")) {
            auto mono = t.at("exponents").get<MultiPoly::Monomial>();
            if (mono.size() != names.size()) {
                throw ParseError("exponent vector does not match the variables", 0);
            }
            terms[mono] += rational_from_json(t.at("coefficient"));
        }
        return MultiPoly::from_terms(names, terms);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what(), 0);
    }
}

inline nlohmann::json to_json(const IdentityReport &r)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto &[k, v] : r.params) {
        params[k] = v;
    }
    nlohmann::json results = nlohmann::json::object();
    for (const auto &[k, v] : r.results) {
        results[k] = v;
    }
    nlohmann::json out{{"schema", json_schema_version},
                       {"identity", r.name},
                       {"params", params},
                       {"order", r.order},
                       {"status", r.passed() ? "pass" : "fail"},
                       {"first_failure", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json()},
                       {"checks", r.checks},
                       {"empirical", r.empirical},
                       {"results", results}};
    return out;
}

inline nlohmann::json to_json(const OracleTable &t)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto &[k, v] : t.params) {
        params[k] = v;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : t.rows) {
        rows.push_back({{"key", row.key},
                        {"oracle", row.oracle.get_str()},
                        {"formula", to_json(row.formula)},
                        {"match", row.match()}});
    }
    return {{"schema", json_schema_version},
            {"oracle", t.kind},
            {"params", params},
            {"status", t.all_match() ? "pass" : "fail"},
            {"rows", rows}};
}

// CSV fields are quoted only when they need to be.
inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

} // namespace lagrange_kit

#endif
