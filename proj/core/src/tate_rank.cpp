#include "halfzeta/tate_rank.hpp"

#include "halfzeta/errors.hpp"
#include "halfzeta/special_values.hpp"

namespace halfzeta {

FrobCharPoly FrobCharPoly::from_monic(IntPoly monic, const BigInt& q)
{
    if (monic.is_zero() || monic.leading() != 1)
        throw domain_error("Frobenius polynomial must be monic");
    if (monic.degree() % 2 != 0)
        throw domain_error("Frobenius polynomial must have even degree");
    return FrobCharPoly(std::move(monic), q);
}

FrobCharPoly FrobCharPoly::from_zeta_numerator(const IntPoly& P, const BigInt& q)
{
    if (P.coeff(0) != 1)
        throw domain_error("zeta numerator must have constant term 1");
    return from_monic(reverse(P, P.degree()), q);
}

int hom_rank(const FrobCharPoly& fA, const FrobCharPoly& fB)
{
    if (fA.q() != fB.q())
        throw domain_error("hom_rank over different fields");
    if (fA.degree() == 0 || fB.degree() == 0)
        return 0;
    int r = 0;
    for (const auto& cf : squarefree_common_multiplicities(fA.poly(), fB.poly()))
        r += cf.factor.degree() * cf.mult_f * cf.mult_g;
    return r;
}

FrobCharPoly frob_of_E(const SquareOrder& o)
{
    const IntPoly l{BigInt(-o.sqrt_q()), BigInt(1)};
    return FrobCharPoly::from_monic(l * l, o.q());
}

LemmaOrdResult verify_lemma_ord(const ZetaFunction& z)
{
    if (!z.is_curve())
        throw domain_error("lemma check needs a curve");
    const auto fPic = FrobCharPoly::from_zeta_numerator(z.P[1], z.q());
    return {hom_rank(frob_of_E(z.order), fPic), 2 * rho_of(z)};
}

std::string to_string(SupersingularType t)
{
    switch (t) {
    case SupersingularType::ordinary: return "ordinary";
    case SupersingularType::type_a: return "type_a";
    case SupersingularType::type_b: return "type_b";
    case SupersingularType::type_c: return "type_c";
    case SupersingularType::mixed: return "mixed";
    }
    return "mixed";
}

SupersingularType classify_elliptic(const BigInt& trace, std::uint32_t p, int f)
{
    const BigInt pf = SquareOrder(p, f).sqrt_q();
    if (abs(trace) > 2 * pf)
        throw domain_error("trace " + trace.get_str() + " violates the Weil bound 2p^f = " + BigInt(2 * pf).get_str());
    if (trace == 2 * pf)
        return SupersingularType::type_c;
    if (trace == -2 * pf)
        return SupersingularType::type_b;
    if (trace == 0)
        return SupersingularType::type_a;
    if (trace % p != 0)
        return SupersingularType::ordinary;
    return SupersingularType::mixed;
}

CurveModel find_type_c_curve(std::uint32_t p, int f, int workers)
{
    const SquareOrder o(p, f);
    const auto F = make_field(p, 2 * f);
    const std::uint64_t Q = F->order();
    const int arity = weierstrass_arity(p);
    std::uint64_t space = 1;
    for (int i = 0; i < arity; ++i) {
        if (space > enumeration_bound() / Q)
            throw bound_exceeded("type-(c) search space exceeds the enumeration bound");
        space *= Q;
    }
    const std::uint64_t target = o.e_order().get_ui();
    std::vector<FiniteField::Index> a(static_cast<std::size_t>(arity), 0);
    for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t rest = code;
        for (int i = arity - 1; i >= 0; --i) {
            a[static_cast<std::size_t>(i)] = static_cast<FiniteField::Index>(rest % Q);
            rest /= Q;
        }
        CurveModel c;
        try {
            c = validate_curve(weierstrass_model(o, a));
        } catch (const input_error&) {
            continue;
        }
        if (count_points(c, 1, workers) == target)
            return c;
    }
    throw domain_error("no type-(c) curve found for p = " + std::to_string(p) + ", f = " + std::to_string(f));
}

bool WeilEtaleRanks::consistent() const
{
    if (ranks.size() < 2)
        return false;
    return alternating_sum == 0 && secondary == -ranks[0] && ranks[0] == ranks[1] && ranks[0] == hom_rank_path;
}

WeilEtaleRanks weil_etale_bookkeeping(std::vector<int> ranks, int hom_rank_path)
{
    WeilEtaleRanks r;
    r.ranks = std::move(ranks);
    for (std::size_t i = 0; i < r.ranks.size(); ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        r.alternating_sum += sign * r.ranks[i];
        r.secondary += sign * static_cast<int>(i) * r.ranks[i];
    }
    r.hom_rank_path = hom_rank_path;
    return r;
}

WeilEtaleRanks weil_etale_ranks(const ZetaFunction& z)
{
    const int two_rho = 2 * rho_of(z);
    std::vector<int> ranks(static_cast<std::size_t>(2 + 2 * z.dim), 0);
    ranks[0] = ranks[1] = two_rho;
    int hom_path = two_rho;
    if (z.is_curve())
        hom_path = verify_lemma_ord(z).hom_rank;
    auto r = weil_etale_bookkeeping(std::move(ranks), hom_path);
    if (r.hom_rank_path != two_rho)
        throw identity_violation("rank paths disagree: 2 rho = " + std::to_string(two_rho) + ", hom_rank = " +
                                 std::to_string(r.hom_rank_path));
    return r;
}

}  // namespace halfzeta
