/**
 * @file serialize.hpp
 * @brief JSON encoding of every CLI payload, with decoders for round trips.
 *
 * Rationals are strings "p/q" (or "p"); monomials use the text grammar
 * ("z3^2*z5", "1" for the empty product).
 */
#pragma once

#include <lzeta/numerics.hpp>
#include <lzeta/partitions.hpp>
#include <lzeta/solver.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lzeta {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Result of `expand`: the raw expansion and, when requested, its reduction.
struct ExpansionResult {
    int a = 0;
    int b = 0;
    ZetaCombination expansion;
    std::optional<PiReducedCombination> reduced;

    friend bool operator==(const ExpansionResult&, const ExpansionResult&) = default;
};

/// Result of `partitions`.
struct PartitionListing {
    int n = 0;
    PartitionFilter filter;
    std::vector<PartitionElement> partitions;

    friend bool operator==(const PartitionListing& x, const PartitionListing& y) {
        return x.n == y.n && x.filter.min_part == y.filter.min_part && x.filter.exact_parts == y.filter.exact_parts &&
               x.filter.parity == y.filter.parity && x.partitions == y.partitions;
    }
};

struct Envelope {
    int schema_version = kSchemaVersion;
    std::string command;
    Json inputs = Json::object();
    Json result;
    double elapsed_ms = 0;
};

inline void to_json(Json& j, const Rational& q) { j = q.str(); }
inline void from_json(const Json& j, Rational& q) { q = Rational::parse(j.get<std::string>()); }

inline void to_json(Json& j, const ZetaMonomial& m) { j = m.str(); }
inline void from_json(const Json& j, ZetaMonomial& m) {
    const auto s = j.get<std::string>();
    m = (s == "1") ? ZetaMonomial{} : ZetaMonomial::parse(s);
}

inline void to_json(Json& j, const PiPowerScalar& s) { j = Json{{"coeff", s.coeff()}, {"pi", s.pi_exponent()}}; }
inline void from_json(const Json& j, PiPowerScalar& s) {
    s = PiPowerScalar(j.at("coeff").get<Rational>(), j.at("pi").get<int>());
}

inline void to_json(Json& j, const ZetaCombination& c) {
    j = Json::array();
    for (const auto& [m, q] : c.display_terms()) j.push_back(Json{{"monomial", m}, {"coeff", q}});
}
inline void from_json(const Json& j, ZetaCombination& c) {
    c = ZetaCombination{};
    for (const auto& t : j) c.add(t.at("monomial").get<ZetaMonomial>(), t.at("coeff").get<Rational>());
}

inline void to_json(Json& j, const PiReducedCombination& c) {
    Json terms = Json::array();
    for (const auto& [m, s] : c.display_terms())
        terms.push_back(Json{{"monomial", m}, {"coeff", s.coeff()}, {"pi", s.pi_exponent()}});
    j = Json{{"weight", c.weight()}, {"terms", terms}};
}
inline void from_json(const Json& j, PiReducedCombination& c) {
    c = PiReducedCombination(j.at("weight").get<int>());
    for (const auto& t : j.at("terms"))
        c.add(t.at("monomial").get<ZetaMonomial>(), PiPowerScalar(t.at("coeff").get<Rational>(), t.at("pi").get<int>()));
}

inline std::string to_string(Parity p) {
    switch (p) {
        case Parity::odd: return "odd";
        case Parity::even: return "even";
        default: return "any";
    }
}

inline Parity parse_parity(const std::string& s) {
    if (s == "any") return Parity::any;
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw std::invalid_argument("unknown parity '" + s + "'");
}

inline void to_json(Json& j, const PartitionElement& x) { j = x.descending_parts(); }
inline void from_json(const Json& j, PartitionElement& x) {
    x = PartitionElement::from_parts(j.get<std::vector<int>>());
}

inline void to_json(Json& j, const PartitionListing& l) {
    j = Json{{"n", l.n},
             {"min_part", l.filter.min_part},
             {"parts", l.filter.exact_parts ? Json(*l.filter.exact_parts) : Json(nullptr)},
             {"parity", to_string(l.filter.parity)},
             {"count", l.partitions.size()},
             {"partitions", l.partitions}};
}
inline void from_json(const Json& j, PartitionListing& l) {
    l.n = j.at("n").get<int>();
    l.filter.min_part = j.at("min_part").get<int>();
    l.filter.exact_parts = j.at("parts").is_null() ? std::nullopt : std::optional<int>(j.at("parts").get<int>());
    l.filter.parity = parse_parity(j.at("parity").get<std::string>());
    l.partitions = j.at("partitions").get<std::vector<PartitionElement>>();
}

inline void to_json(Json& j, const ExpansionResult& r) {
    j = Json{{"a", r.a}, {"b", r.b}, {"expansion", r.expansion}};
    j["reduced"] = r.reduced ? Json(*r.reduced) : Json(nullptr);
}
inline void from_json(const Json& j, ExpansionResult& r) {
    r.a = j.at("a").get<int>();
    r.b = j.at("b").get<int>();
    r.expansion = j.at("expansion").get<ZetaCombination>();
    r.reduced.reset();
    if (!j.at("reduced").is_null()) r.reduced = j.at("reduced").get<PiReducedCombination>();
}

inline void to_json(Json& j, const Certificate& c) {
    Json lz = Json::array();
    for (const auto& [ab, s] : c.lz_terms)
        lz.push_back(Json{{"a", ab.first}, {"b", ab.second}, {"coeff", s.coeff()}, {"pi", s.pi_exponent()}});
    Json known = Json::array();
    for (const auto& [m, s] : c.known_remainder.display_terms())
        known.push_back(Json{{"monomial", m}, {"coeff", s.coeff()}, {"pi", s.pi_exponent()}});
    j = Json{{"target", c.target}, {"weight", c.weight}, {"lz", lz}, {"known", known}};
}
inline void from_json(const Json& j, Certificate& c) {
    c.target = j.at("target").get<ZetaMonomial>();
    c.weight = j.at("weight").get<int>();
    c.lz_terms.clear();
    for (const auto& t : j.at("lz"))
        c.lz_terms.emplace(std::pair{t.at("a").get<int>(), t.at("b").get<int>()},
                           PiPowerScalar(t.at("coeff").get<Rational>(), t.at("pi").get<int>()));
    c.known_remainder = PiReducedCombination(c.weight);
    for (const auto& t : j.at("known"))
        c.known_remainder.add(t.at("monomial").get<ZetaMonomial>(),
                              PiPowerScalar(t.at("coeff").get<Rational>(), t.at("pi").get<int>()));
}

inline ExpressStatus parse_express_status(const std::string& s) {
    for (auto st : {ExpressStatus::expressible, ExpressStatus::not_expressible, ExpressStatus::unresolved_dependency})
        if (to_string(st) == s) return st;
    throw std::invalid_argument("unknown status '" + s + "'");
}

inline void to_json(Json& j, const ExpressResult& r) {
    j = Json{{"target", r.target}, {"weight", r.weight}, {"mode", to_string(r.mode)}, {"status", to_string(r.status)}};
    j["certificate"] = r.certificate ? Json(*r.certificate) : Json(nullptr);
    j["dependencies"] = r.dependencies;
}
inline void from_json(const Json& j, ExpressResult& r) {
    r.target = j.at("target").get<ZetaMonomial>();
    r.weight = j.at("weight").get<int>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.status = parse_express_status(j.at("status").get<std::string>());
    r.certificate.reset();
    if (!j.at("certificate").is_null()) r.certificate = j.at("certificate").get<Certificate>();
    r.dependencies = j.at("dependencies").get<std::vector<ZetaMonomial>>();
}

inline void to_json(Json& j, const CountingQuantities& q) {
    j = Json{{"m", q.m}, {"equations", q.equations}, {"unknowns", q.unknowns}, {"deficient", q.deficient}};
}
inline void from_json(const Json& j, CountingQuantities& q) {
    q.m = j.at("m").get<int>();
    q.equations = j.at("equations").get<long>();
    q.unknowns = j.at("unknowns").get<long>();
    q.deficient = j.at("deficient").get<bool>();
}

inline void to_json(Json& j, const SurveyRecord& r) {
    j = Json{{"weight", r.weight},
             {"equations", r.equations},
             {"unknowns", r.unknowns},
             {"rank", r.rank},
             {"expressible", r.expressible},
             {"inexpressible", r.inexpressible},
             {"counting", r.counting}};
}
inline void from_json(const Json& j, SurveyRecord& r) {
    r.weight = j.at("weight").get<int>();
    r.equations = j.at("equations").get<std::size_t>();
    r.unknowns = j.at("unknowns").get<std::size_t>();
    r.rank = j.at("rank").get<std::size_t>();
    r.expressible = j.at("expressible").get<std::vector<ZetaMonomial>>();
    r.inexpressible = j.at("inexpressible").get<std::vector<ZetaMonomial>>();
    r.counting = j.at("counting").get<CountingQuantities>();
}

inline void to_json(Json& j, const SurveyReport& r) {
    j = Json{{"mode", to_string(r.mode)}, {"from", r.n_min}, {"to", r.n_max}, {"records", r.records}, {"notes", r.notes}};
}
inline void from_json(const Json& j, SurveyReport& r) {
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.n_min = j.at("from").get<int>();
    r.n_max = j.at("to").get<int>();
    r.records = j.at("records").get<std::vector<SurveyRecord>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

inline std::string to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::series: return "series";
        case VerifyMethod::quadrature: return "quadrature";
        default: return "both";
    }
}

inline VerifyMethod parse_verify_method(const std::string& s) {
    if (s == "series") return VerifyMethod::series;
    if (s == "quadrature") return VerifyMethod::quadrature;
    if (s == "both") return VerifyMethod::both;
    throw std::invalid_argument("unknown method '" + s + "'");
}

inline void to_json(Json& j, const VerificationReport& r) {
    j = Json{{"a", r.a},
             {"b", r.b},
             {"digits", r.digits},
             {"method", to_string(r.method)},
             {"expansion", r.expansion},
             {"symbolic", r.symbolic_value}};
    j["series"] = r.series_value ? Json(*r.series_value) : Json(nullptr);
    j["quadrature"] = r.quadrature_value ? Json(*r.quadrature_value) : Json(nullptr);
    j["agreement_digits"] = r.max_deviation_digits;
    j["threshold_digits"] = r.threshold_digits;
    j["passed"] = r.passed;
    j["message"] = r.message;
}
inline void from_json(const Json& j, VerificationReport& r) {
    r.a = j.at("a").get<int>();
    r.b = j.at("b").get<int>();
    r.digits = j.at("digits").get<int>();
    r.method = parse_verify_method(j.at("method").get<std::string>());
    r.expansion = j.at("expansion").get<std::string>();
    r.symbolic_value = j.at("symbolic").get<std::string>();
    r.series_value.reset();
    r.quadrature_value.reset();
    if (!j.at("series").is_null()) r.series_value = j.at("series").get<std::string>();
    if (!j.at("quadrature").is_null()) r.quadrature_value = j.at("quadrature").get<std::string>();
    r.max_deviation_digits = j.at("agreement_digits").get<double>();
    r.threshold_digits = j.at("threshold_digits").get<int>();
    r.passed = j.at("passed").get<bool>();
    r.message = j.at("message").get<std::string>();
}

inline void to_json(Json& j, const Envelope& e) {
    j = Json{{"schema_version", e.schema_version},
             {"command", e.command},
             {"inputs", e.inputs},
             {"result", e.result},
             {"elapsed_ms", e.elapsed_ms}};
}
inline void from_json(const Json& j, Envelope& e) {
    e.schema_version = j.at("schema_version").get<int>();
    e.command = j.at("command").get<std::string>();
    e.inputs = j.at("inputs");
    e.result = j.at("result");
    e.elapsed_ms = j.at("elapsed_ms").get<double>();
}

}  // namespace lzeta
