#include "halfzeta/zeta.hpp"

#include "halfzeta/errors.hpp"
#include "halfzeta/numeric_roots.hpp"
#include "halfzeta/power_sums.hpp"

namespace halfzeta {

ZetaFunction ZetaFunction::curve(const SquareOrder& o, IntPoly P1)
{
    if (P1.coeff(0) != 1)
        throw domain_error("zeta numerator must have constant term 1");
    if (P1.degree() % 2 != 0)
        throw domain_error("zeta numerator of a curve has even degree");
    ZetaFunction z;
    z.order = o;
    z.dim = 1;
    z.genus = P1.degree() / 2;
    z.P = {IntPoly{1, -1}, std::move(P1), IntPoly{BigInt(1), BigInt(-o.q())}};
    return z;
}

ZetaFunction ZetaFunction::point(const SquareOrder& o)
{
    ZetaFunction z;
    z.order = o;
    z.dim = 0;
    z.genus = 0;
    z.P = {IntPoly{1, -1}};
    return z;
}

ZetaFunction ZetaFunction::projective_line(const SquareOrder& o) { return curve(o, IntPoly{1}); }

ZetaFunction ZetaFunction::type_c_elliptic(const SquareOrder& o)
{
    const IntPoly l = IntPoly::one_minus(o.sqrt_q());
    return curve(o, l * l);
}

BigRat zeta_eval(const ZetaFunction& z, const BigRat& t)
{
    BigRat num = 1, den = 1;
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const BigRat v = eval(z.P[i], t);
        (i % 2 == 1 ? num : den) *= v;
    }
    if (den == 0)
        throw domain_error("pole of the zeta function at t = " + to_string(t));
    return num / den;
}

std::vector<BigInt> predicted_counts(const ZetaFunction& z, int n)
{
    std::vector<BigInt> N(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (std::size_t i = 0; i < z.P.size(); ++i) {
        const auto s = inverse_root_power_sums(z.P[i], n);
        for (std::size_t k = 0; k < N.size(); ++k)
            N[k] += (i % 2 == 0) ? s[k] : BigInt(-s[k]);
    }
    return N;
}

bool functional_equation_holds(const IntPoly& P1, const BigInt& q, int genus)
{
    if (P1.degree() != 2 * genus)
        return false;
    // i > g is the same identity read backwards.
    for (int i = 0; i <= genus; ++i)
        if (P1.coeff(2 * genus - i) != ipow(q, static_cast<unsigned long>(genus - i)) * P1.coeff(i))
            return false;
    return true;
}

ZetaFunction zeta_from_counts(const SquareOrder& o, int genus, const PointCountTable& table)
{
    const BigInt q = o.q();
    std::vector<BigInt> s;
    for (int n = 1; n <= genus; ++n) {
        const auto it = table.N.find(n);
        if (it == table.N.end())
            throw domain_error("zeta_from_counts needs N_1..N_g; N_" + std::to_string(n) + " is missing");
        s.push_back(ipow(q, static_cast<unsigned long>(n)) + 1 - BigInt(static_cast<unsigned long>(it->second)));
    }
    const IntPoly P1 = newton_coeffs_from_power_sums(s, 2 * genus, q, 1);
    ZetaFunction z = ZetaFunction::curve(o, P1);
    if (!table.N.empty()) {
        const auto predicted = predicted_counts(z, table.N.rbegin()->first);
        for (const auto& [n, N] : table.N)
            if (predicted[static_cast<std::size_t>(n - 1)] != BigInt(static_cast<unsigned long>(N)))
                throw certification_error("certification failed: predicted N_" + std::to_string(n) + " = " +
                                          predicted[static_cast<std::size_t>(n - 1)].get_str() + ", measured " +
                                          std::to_string(N) + " (singular or genus-mismatched model)");
    }
    return z;
}

ZetaFunction zeta_from_counts(const CurveModel& c, const PointCountTable& table)
{
    return zeta_from_counts(c.order, c.genus, table);
}

ZetaFunction zeta_of_curve(const CurveModel& c, int workers)
{
    return zeta_from_counts(c, count_table(c, c.genus + 1, workers));
}

ZetaCertificate certify_zeta(const ZetaFunction& z, const BigInt& extra_count)
{
    if (!z.is_curve())
        throw domain_error("certify_zeta applies to curves");
    ZetaCertificate cert;
    const IntPoly& P1 = z.P[1];
    cert.functional_equation = functional_equation_holds(P1, z.q(), z.genus);
    if (!cert.functional_equation)
        cert.witness = "functional equation fails for P_1 = " + to_string(P1);

    const int n = z.genus + 1;
    cert.predicted = predicted_counts(z, n).back();
    cert.measured = extra_count;
    cert.count_match = cert.predicted == cert.measured;
    if (!cert.count_match && cert.witness.empty())
        cert.witness = "predicted N_" + std::to_string(n) + " = " + cert.predicted.get_str() + ", measured " +
                       cert.measured.get_str();

    if (P1.degree() <= 0) {
        cert.rh_modulus = true;
    } else {
        const auto m = check_inverse_root_modulus(to_rat(P1), z.order.sqrt_q().get_d(), rh_tolerance);
        cert.rh_modulus = m.passed;
        cert.rh_max_deviation = m.max_relative_deviation;
        if (!m.passed && cert.witness.empty())
            cert.witness = "inverse root modulus deviates from sqrt(q) by " + std::to_string(m.max_relative_deviation);
    }
    return cert;
}

}  // namespace halfzeta
