#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "gyro/certificate.hpp"
#include "gyro/continuous.hpp"
#include "gyro/errors.hpp"
#include "gyro/rational.hpp"

namespace gyro {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) {
    return json{{"num", to_int64(rat_num(r))}, {"den", to_int64(rat_den(r))}};
}

/// Rationals travel as {"num": int, "den": int} in lowest terms with positive
/// denominator; floats are rejected so parsed data is always exact.
inline Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw input_error(where + ": expected {\"num\",\"den\"} object");
    if (!j["num"].is_number_integer() || !j["den"].is_number_integer())
        throw input_error(where + ": rational components must be integers (floats are not exact)");
    std::int64_t num = j["num"].get<std::int64_t>();
    std::int64_t den = j["den"].get<std::int64_t>();
    if (den <= 0) throw input_error(where + ": denominator must be positive");
    if (std::gcd(num < 0 ? -num : num, den) != 1) throw input_error(where + ": rational not in lowest terms");
    return Rational(num, den);
}

inline json certificate_to_json(const BaseCertificate& cert) {
    json j;
    j["graph_label"] = cert.graph_label;
    j["group"] = json{{"moduli", cert.group.moduli}};
    json A = json::array();
    auto sorted = cert.A;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& a : sorted) A.push_back(a);
    j["A"] = std::move(A);
    json f = json::array();
    for (const auto& x : cert.f) f.push_back(x);
    j["f"] = std::move(f);
    j["density"] = rational_to_json(cert.density());
    return j;
}

struct ParsedCertificate {
    BaseCertificate cert;
    std::vector<std::string> warnings;
};

inline GroupElement element_from_json(const json& j, const AbelianGroup& Z, const std::string& where) {
    if (!j.is_array() || j.size() != Z.rank()) throw input_error(where + ": element rank does not match group");
    GroupElement e;
    for (const auto& r : j) {
        if (!r.is_number_integer()) throw input_error(where + ": residues must be integers");
        e.push_back(r.get<std::int64_t>());
    }
    if (!Z.reduced(e)) throw input_error(where + ": residue out of range");
    return e;
}

inline ParsedCertificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw input_error("certificate: expected a JSON object");
    for (const char* key : {"group", "A", "f", "density"})
        if (!j.contains(key)) throw input_error(std::string("certificate: missing field \"") + key + "\"");
    if (!j["group"].is_object() || !j["group"].contains("moduli") || !j["group"]["moduli"].is_array())
        throw input_error("certificate: group needs a moduli array");

    ParsedCertificate out;
    std::vector<std::int64_t> moduli;
    for (const auto& m : j["group"]["moduli"]) {
        if (!m.is_number_integer()) throw input_error("certificate: moduli must be integers");
        moduli.push_back(m.get<std::int64_t>());
    }
    out.cert.group = AbelianGroup(moduli);
    out.cert.graph_label = j.value("graph_label", std::string{});

    for (const auto& a : j["A"]) out.cert.A.push_back(element_from_json(a, out.cert.group, "certificate A"));
    if (out.cert.A.empty()) throw input_error("certificate: base set A is empty");
    if (!std::is_sorted(out.cert.A.begin(), out.cert.A.end())) {
        out.warnings.push_back("base set A was not sorted; normalized on parse");
        out.cert.normalize();
    }
    auto dup = std::adjacent_find(out.cert.A.begin(), out.cert.A.end());
    if (dup != out.cert.A.end()) throw input_error("certificate: base set A has duplicate elements");

    for (const auto& x : j["f"]) out.cert.f.push_back(element_from_json(x, out.cert.group, "certificate f"));

    Rational declared = rational_from_json(j["density"], "certificate density");
    if (declared != out.cert.density())
        throw input_error("certificate: declared density " + rat_str(declared) + " does not match |A|/|Z| = " +
                          rat_str(out.cert.density()));
    return out;
}

inline json gyrocoloring_to_json(const ContinuousGyrocoloring& c) {
    json j;
    j["z"] = rational_to_json(c.z);
    json base = json::array();
    for (const auto& [a, b] : c.base) base.push_back(json::array({rational_to_json(a), rational_to_json(b)}));
    j["base"] = std::move(base);
    json shifts = json::array();
    for (const auto& s : c.shifts) shifts.push_back(rational_to_json(s));
    j["shifts"] = std::move(shifts);
    return j;
}

inline ContinuousGyrocoloring gyrocoloring_from_json(const json& j) {
    if (!j.is_object()) throw input_error("gyrocoloring: expected a JSON object");
    for (const char* key : {"z", "base", "shifts"})
        if (!j.contains(key)) throw input_error(std::string("gyrocoloring: missing field \"") + key + "\"");
    Rational z = rational_from_json(j["z"], "gyrocoloring z");
    std::vector<std::pair<Rational, Rational>> base;
    for (const auto& iv : j["base"]) {
        if (!iv.is_array() || iv.size() != 2) throw input_error("gyrocoloring: interval must be a [lo,hi] pair");
        base.emplace_back(rational_from_json(iv[0], "interval endpoint"), rational_from_json(iv[1], "interval endpoint"));
    }
    std::vector<Rational> shifts;
    for (const auto& s : j["shifts"]) shifts.push_back(rational_from_json(s, "gyrocoloring shift"));
    return make_gyrocoloring(z, std::move(base), std::move(shifts));
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON");
    return j;
}

} // namespace gyro
