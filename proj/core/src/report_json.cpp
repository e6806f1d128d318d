#include "halfzeta/report_json.hpp"

#include <limits>

#include "halfzeta/errors.hpp"

namespace halfzeta {

ojson rat_json(const BigRat& r) { return to_string(r); }

ojson int_json(const BigInt& n)
{
    if (n.fits_slong_p())
        return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

ojson poly_json(const IntPoly& a)
{
    ojson arr = ojson::array();
    for (const auto& c : a.coefficients())
        arr.push_back(int_json(c));
    return arr;
}

ojson poly_json(const RatPoly& a)
{
    ojson arr = ojson::array();
    for (const auto& c : a.coefficients())
        arr.push_back(rat_json(c));
    return arr;
}

ojson zeta_json(const ZetaFunction& z)
{
    ojson j;
    j["p"] = z.order.p();
    j["f"] = z.order.f();
    j["q"] = int_json(z.q());
    j["dim"] = z.dim;
    j["genus"] = z.genus;
    ojson P = ojson::array();
    for (const auto& Pi : z.P)
        P.push_back(poly_json(Pi));
    j["P"] = P;
    if (z.is_curve())
        j["P_1"] = poly_json(z.P[1]);
    return j;
}

ojson counts_json(const PointCountTable& t)
{
    ojson j = ojson::object();
    for (const auto& [n, N] : t.N)
        j[std::to_string(n)] = N;
    return j;
}

ojson certificate_json(const ZetaCertificate& c)
{
    ojson j;
    j["functional_equation"] = c.functional_equation;
    j["count_match"] = c.count_match;
    j["predicted_extra_count"] = int_json(c.predicted);
    j["measured_extra_count"] = int_json(c.measured);
    j["rh_modulus"] = c.rh_modulus;
    j["rh_max_relative_deviation"] = c.rh_max_deviation;
    if (!c.witness.empty())
        j["witness"] = c.witness;
    return j;
}

ojson special_json(const SpecialValueReport& r)
{
    ojson j;
    j["rho"] = r.rho;
    j["c"] = rat_json(r.c);
    j["c2"] = rat_json(r.c_squared);
    j["chi_O"] = r.chi_O;
    j["E_order"] = int_json(r.E_order);
    j["genus"] = r.genus;
    j["ordinary"] = r.ordinary;
    if (r.sha_prediction) {
        j["m"] = int_json(*r.sha_prediction);
        j["m2"] = int_json(*r.sha_prediction * *r.sha_prediction);
    }
    return j;
}

ojson slopes_json(const SlopeProfile& s)
{
    ojson j = ojson::array();
    for (std::size_t i = 0; i < s.polygons.size(); ++i) {
        ojson w;
        w["weight"] = i;
        ojson sl = ojson::array();
        for (const auto& x : s.polygons[i].slopes)
            sl.push_back({{"slope", rat_json(x.value)}, {"multiplicity", x.multiplicity}});
        w["slopes"] = sl;
        w["g"] = rat_json(s.g[i]);
        j.push_back(w);
    }
    return j;
}

ojson padic_json(const PadicReport& r)
{
    ojson j;
    j["ord_c2"] = r.ord_c2;
    j["z_direct"] = r.z_direct;
    j["z_slopes"] = rat_json(r.z_slopes);
    j["g_alternating"] = rat_json(r.g_alternating);
    j["ptilde_ord"] = r.ptilde_ord;
    j["g_integral"] = r.g_integral;
    j["b_assumption_flag"] = r.b_assumption_flag;
    j["equal"] = r.equal();
    return j;
}

ojson bsd_json(const BsdCheck& b)
{
    ojson j;
    j["rational_identity"] = b.rational_identity;
    j["order"] = b.order;
    j["expected_order"] = b.expected_order;
    j["limit"] = rat_json(b.limit);
    j["c2"] = rat_json(b.c_squared);
    j["holds"] = b.holds();
    return j;
}

ojson ranks_json(const WeilEtaleRanks& r)
{
    ojson j;
    j["ranks"] = r.ranks;
    j["alternating_sum"] = r.alternating_sum;
    j["secondary"] = r.secondary;
    j["hom_rank_path"] = r.hom_rank_path;
    j["consistent"] = r.consistent();
    return j;
}

ojson lemma_json(const LemmaOrdResult& r)
{
    ojson j;
    j["hom_rank"] = r.hom_rank;
    j["two_rho"] = r.two_rho;
    j["holds"] = r.holds();
    return j;
}

ojson motive_json(const WeilMotive& M)
{
    ojson j;
    j["q"] = int_json(M.q());
    j["rank"] = M.rank();
    ojson pieces = ojson::array();
    for (const auto& piece : M.pieces())
        pieces.push_back({{"weight", piece.weight}, {"sign", piece.sign}, {"poly", poly_json(piece.poly)}});
    j["pieces"] = pieces;
    return j;
}

ojson lfunction_json(const LFunction& L)
{
    return {{"numerator", poly_json(L.numerator())}, {"denominator", poly_json(L.denominator())}};
}

namespace {

using json = nlohmann::json;

BigRat read_coeff(const json& v)
{
    if (v.is_number_integer())
        return BigRat(BigInt(std::to_string(v.get<std::int64_t>())));
    if (v.is_string())
        return parse_rat(v.get<std::string>());
    if (v.is_array() && v.size() == 2) {
        const BigRat n = read_coeff(v[0]), d = read_coeff(v[1]);
        if (d == 0)
            throw input_error("zero denominator in motive coefficient");
        return n / d;
    }
    throw input_error("motive coefficient must be an integer, \"n/d\" or [n, d]");
}

RatPoly read_poly(const json& arr)
{
    if (!arr.is_array())
        throw input_error("motive part must be a coefficient list");
    std::vector<BigRat> c;
    for (const auto& v : arr)
        c.push_back(read_coeff(v));
    RatPoly p(std::move(c));
    if (p.coeff(0) != 1)
        throw input_error("motive part must have constant term 1");
    return p;
}

int read_weight(const std::string& key)
{
    std::size_t used = 0;
    int w = 0;
    try {
        w = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != key.size())
        throw input_error("motive weight key \"" + key + "\" is not an integer");
    return w;
}

}  // namespace

WeilMotive motive_from_json(const json& j)
{
    try {
        if (!j.is_object() || !j.contains("q") || !j.at("q").is_number_integer())
            throw input_error("motive needs an integer \"q\"");
        const SquareOrder o = SquareOrder::from_q(BigInt(std::to_string(j.at("q").get<std::int64_t>())));
        std::vector<MotivePiece> pieces;
        if (j.contains("pieces")) {
            for (const auto& p : j.at("pieces")) {
                const int sign = p.at("sign").get<int>();
                if (sign != 1 && sign != -1)
                    throw input_error("motive sign must be 1 or -1");
                pieces.push_back({p.at("weight").get<int>(), sign, read_poly(p.at("poly"))});
            }
        } else {
            if (!j.contains("parts") || !j.at("parts").is_object())
                throw input_error("motive needs \"parts\" or \"pieces\"");
            for (const auto& [key, arr] : j.at("parts").items()) {
                const int w = read_weight(key);
                int sign = (w % 2 == 0) ? -1 : 1;
                if (j.contains("signs") && j.at("signs").contains(key)) {
                    sign = j.at("signs").at(key).get<int>();
                    if (sign != 1 && sign != -1)
                        throw input_error("motive sign must be 1 or -1");
                }
                pieces.push_back({w, sign, read_poly(arr)});
            }
        }
        return WeilMotive(o, std::move(pieces));
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed motive JSON: ") + e.what());
    } catch (const domain_error& e) {
        throw input_error(e.what());
    }
}

}  // namespace halfzeta
