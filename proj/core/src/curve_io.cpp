#include "halfzeta/curve_io.hpp"

#include <fstream>
#include <sstream>

#include "halfzeta/errors.hpp"

namespace halfzeta {

namespace {

using json = nlohmann::json;

std::int64_t get_int(const json& j, const char* key)
{
    if (!j.contains(key))
        throw input_error(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw input_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

SquareOrder read_order(const json& j)
{
    const bool has_f = j.contains("f"), has_q = j.contains("q");
    if (!has_f && !has_q)
        throw input_error("curve needs \"f\" or \"q\"");
    if (has_q) {
        const std::int64_t q = get_int(j, "q");
        if (q < 2)
            throw input_error("q must be p^{2f}");
        const SquareOrder o = SquareOrder::from_q(BigInt(std::to_string(q)));
        if (j.contains("p") && get_int(j, "p") != o.p())
            throw input_error("q must be p^{2f}");
        if (has_f && get_int(j, "f") != o.f())
            throw input_error("q must be p^{2f}");
        return o;
    }
    const std::int64_t p = get_int(j, "p"), f = get_int(j, "f");
    if (p < 2 || p > 0xffffffffLL || !is_prime(static_cast<std::uint64_t>(p)))
        throw input_error("p = " + std::to_string(p) + " is not prime");
    if (f < 1 || f > 64)
        throw input_error("f must be a positive integer");
    return SquareOrder(static_cast<std::uint32_t>(p), static_cast<int>(f));
}

FiniteField::Index read_element(const json& v, const FiniteField& F)
{
    if (v.is_number_integer())
        return F.from_int(v.get<std::int64_t>());
    if (!v.is_array())
        throw input_error("coefficient must be an integer or a coordinate list");
    if (v.size() > static_cast<std::size_t>(F.degree()))
        throw input_error("coordinate list longer than the field degree " + std::to_string(F.degree()));
    std::vector<std::uint32_t> c;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw input_error("coordinates must be integers");
        c.push_back(static_cast<std::uint32_t>(F.from_int(x.get<std::int64_t>())));
    }
    return F.from_coordinates(c);
}

std::vector<FiniteField::Index> read_poly(const json& j, const char* key, const FiniteField& F)
{
    std::vector<FiniteField::Index> out;
    if (!j.contains(key))
        return out;
    const auto& arr = j.at(key);
    if (!arr.is_array())
        throw input_error(std::string("field \"") + key + "\" must be a list");
    for (const auto& v : arr)
        out.push_back(read_element(v, F));
    return out;
}

Monomial parse_monomial(const std::string& key)
{
    Monomial m;
    char c1 = 0, c2 = 0;
    std::istringstream in(key);
    if (!(in >> m.x >> c1 >> m.y >> c2 >> m.z) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw input_error("plane monomial key \"" + key + "\" must look like \"a,b,c\"");
    return m;
}

std::vector<std::uint32_t> element_to_json(FiniteField::Index v, const FiniteField& F)
{
    auto c = F.coordinates(v);
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

}  // namespace

CurveModel curve_from_json(const json& j)
{
    try {
        if (!j.is_object())
            throw input_error("curve description must be a JSON object");
        CurveModel c;
        c.order = read_order(j);
        if (!j.contains("kind") || !j.at("kind").is_string())
            throw input_error("missing field \"kind\"");
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "hyperelliptic")
            c.kind = CurveKind::hyperelliptic;
        else if (kind == "plane")
            c.kind = CurveKind::plane;
        else
            throw input_error("kind must be \"hyperelliptic\" or \"plane\"");
        const std::int64_t g = get_int(j, "genus");
        if (g < 0 || g > 64)
            throw input_error("genus out of range");
        c.genus = static_cast<int>(g);
        const auto F = c.base_field();
        if (c.kind == CurveKind::hyperelliptic) {
            c.f_coeffs = read_poly(j, "f_coeffs", *F);
            c.h_coeffs = read_poly(j, "h_coeffs", *F);
        } else {
            if (!j.contains("F_coeffs") || !j.at("F_coeffs").is_object())
                throw input_error("plane curve needs an \"F_coeffs\" object");
            for (const auto& [key, v] : j.at("F_coeffs").items())
                c.plane_terms[parse_monomial(key)] = read_element(v, *F);
        }
        return validate_curve(std::move(c));
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed curve JSON: ") + e.what());
    }
}

CurveModel load_curve(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open curve file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("cannot parse " + path + ": " + e.what());
    }
    return curve_from_json(j);
}

nlohmann::ordered_json curve_to_json(const CurveModel& c)
{
    nlohmann::ordered_json j;
    const auto F = c.base_field();
    j["p"] = c.p();
    j["f"] = c.f();
    j["kind"] = to_string(c.kind);
    j["genus"] = c.genus;
    if (c.kind == CurveKind::hyperelliptic) {
        j["f_coeffs"] = nlohmann::ordered_json::array();
        for (auto v : c.f_coeffs)
            j["f_coeffs"].push_back(element_to_json(v, *F));
        j["h_coeffs"] = nlohmann::ordered_json::array();
        for (auto v : c.h_coeffs)
            j["h_coeffs"].push_back(element_to_json(v, *F));
    } else {
        nlohmann::ordered_json terms = nlohmann::ordered_json::object();
        for (const auto& [m, v] : c.plane_terms)
            terms[std::to_string(m.x) + "," + std::to_string(m.y) + "," + std::to_string(m.z)] = element_to_json(v, *F);
        j["F_coeffs"] = terms;
    }
    return j;
}

}  // namespace halfzeta
