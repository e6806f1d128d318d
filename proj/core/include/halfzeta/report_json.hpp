#pragma once

#include <nlohmann/json.hpp>

#include "halfzeta/motive.hpp"
#include "halfzeta/padic.hpp"
#include "halfzeta/special_values.hpp"
#include "halfzeta/tate_rank.hpp"
#include "halfzeta/zeta.hpp"

namespace halfzeta {

using ojson = nlohmann::ordered_json;

/// Rationals are always "num/den" strings, "n/1" included.
ojson rat_json(const BigRat& r);
/// JSON integer when it fits in 64 bits, decimal string otherwise.
ojson int_json(const BigInt& n);
ojson poly_json(const IntPoly& a);
ojson poly_json(const RatPoly& a);

ojson zeta_json(const ZetaFunction& z);
ojson counts_json(const PointCountTable& t);
ojson certificate_json(const ZetaCertificate& c);
ojson special_json(const SpecialValueReport& r);
ojson slopes_json(const SlopeProfile& s);
ojson padic_json(const PadicReport& r);
ojson bsd_json(const BsdCheck& b);
ojson ranks_json(const WeilEtaleRanks& r);
ojson lemma_json(const LemmaOrdResult& r);
ojson motive_json(const WeilMotive& M);
ojson lfunction_json(const LFunction& L);

/// Motive literal:
///   {"q": 9, "parts": {"1": ["1", "-1", "9"]}, "signs": {"1": 1}}
/// Each part is keyed by weight; coefficients are integers, "n/d" strings or
/// [num, den] pairs. The sign of weight w defaults to (-1)^{w+1}. The
/// {"q", "pieces": [{"weight", "sign", "poly"}]} form written by motive_json
/// is accepted as well. Throws input_error on malformed input or non-square q.
WeilMotive motive_from_json(const nlohmann::json& j);

}  // namespace halfzeta
