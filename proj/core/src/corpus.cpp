#include "halfzeta/corpus.hpp"

#include <set>

#include "halfzeta/errors.hpp"
#include "halfzeta/tate_rank.hpp"

namespace halfzeta {

BigInt CorpusCurve::N1() const
{
    if (auto it = counts.N.find(1); it != counts.N.end())
        return BigInt(static_cast<unsigned long>(it->second));
    return predicted_counts(zeta, 1).front();
}

CorpusCurve certify_curve(std::string label, const CurveModel& c, int workers)
{
    PointCountTable t = count_table(c, c.genus + 1, workers);
    ZetaFunction z = zeta_from_counts(c, t);
    const auto cert = certify_zeta(z, BigInt(static_cast<unsigned long>(t.N.at(c.genus + 1))));
    if (!cert.passed(true))
        throw certification_error("certification failed for " + label + ": " + cert.witness);
    return {std::move(label), c, std::move(z), std::move(t)};
}

std::vector<CurveModel> elliptic_models(const SquareOrder& o)
{
    const auto F = make_field(o.p(), 2 * o.f());
    const std::uint64_t Q = F->order();
    const int arity = weierstrass_arity(o.p());
    std::uint64_t space = 1;
    for (int i = 0; i < arity; ++i) {
        if (space > enumeration_bound() / Q)
            throw bound_exceeded("elliptic model space exceeds the enumeration bound");
        space *= Q;
    }
    std::vector<CurveModel> out;
    std::vector<FiniteField::Index> a(static_cast<std::size_t>(arity));
    for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t rest = code;
        for (int i = arity - 1; i >= 0; --i) {
            a[static_cast<std::size_t>(i)] = static_cast<FiniteField::Index>(rest % Q);
            rest /= Q;
        }
        try {
            out.push_back(validate_curve(weierstrass_model(o, a)));
        } catch (const input_error&) {
        }
    }
    return out;
}

namespace {

using Index = FiniteField::Index;

Index uniform(CorpusRng& rng, std::uint64_t n) { return static_cast<Index>(rng() % n); }

std::vector<Index> random_poly(CorpusRng& rng, std::uint64_t Q, int degree, bool exact_degree)
{
    std::vector<Index> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c)
        x = uniform(rng, Q);
    if (exact_degree)
        c.back() = 1 + uniform(rng, Q - 1);
    return c;
}

}  // namespace

std::vector<CurveModel> random_hyperelliptic(const SquareOrder& o, int genus, int count, CorpusRng& rng)
{
    const std::uint64_t Q = make_field(o.p(), 2 * o.f())->order();
    std::vector<CurveModel> out;
    for (int k = 0; k < count; ++k) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 100000)
                throw domain_error("random curve generation did not converge");
            CurveModel c;
            c.order = o;
            c.kind = CurveKind::hyperelliptic;
            c.genus = genus;
            if (o.p() != 2) {
                const int d = 2 * genus + 1 + static_cast<int>(rng() % 2);
                c.f_coeffs = random_poly(rng, Q, d, true);
            } else if (rng() % 2 == 0) {
                c.h_coeffs = random_poly(rng, Q, genus + 1, true);
                c.f_coeffs = random_poly(rng, Q, 2 * genus + 2, false);
            } else {
                c.h_coeffs = random_poly(rng, Q, genus, false);
                c.f_coeffs = random_poly(rng, Q, 2 * genus + 1, true);
            }
            try {
                out.push_back(validate_curve(std::move(c)));
                break;
            } catch (const input_error&) {
            }
        }
    }
    return out;
}

std::vector<std::pair<std::string, CurveModel>> plane_examples(const SquareOrder& o)
{
    const auto F = make_field(o.p(), 2 * o.f());
    const Index one = 1, minus_one = F->neg(1);
    auto plane = [&](int genus, std::map<Monomial, Index> terms) {
        CurveModel c;
        c.order = o;
        c.kind = CurveKind::plane;
        c.genus = genus;
        c.plane_terms = std::move(terms);
        return validate_curve(std::move(c));
    };
    std::vector<std::pair<std::string, CurveModel>> out;
    out.emplace_back("conic", plane(0, {{{1, 0, 1}, one}, {{0, 2, 0}, minus_one}}));
    if (o.p() != 3)
        out.emplace_back("fermat3", plane(1, {{{3, 0, 0}, one}, {{0, 3, 0}, one}, {{0, 0, 3}, one}}));
    if (o.p() != 2)
        out.emplace_back("fermat4", plane(3, {{{4, 0, 0}, one}, {{0, 4, 0}, one}, {{0, 0, 4}, one}}));
    if (o.p() != 7)
        out.emplace_back("klein4", plane(3, {{{3, 1, 0}, one}, {{0, 3, 1}, one}, {{1, 0, 3}, one}}));
    return out;
}

namespace {

std::string suffix(const SquareOrder& o) { return "/q=" + o.q().get_str(); }

std::string coeff_label(const CurveModel& c)
{
    std::string s;
    auto add = [&](const std::vector<Index>& v) {
        s += "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        s += "]";
    };
    add(c.f_coeffs);
    if (!c.h_coeffs.empty())
        add(c.h_coeffs);
    return s;
}

CorpusRng seeded(std::uint64_t seed, const SquareOrder& o)
{
    return CorpusRng(seed ^ (0x9e3779b97f4a7c15ULL * (o.q().get_ui() + 1)));
}

}  // namespace

std::vector<CorpusCurve> build_corpus(const CorpusOptions& opts)
{
    std::vector<CorpusCurve> out;
    for (const auto& o : opts.orders) {
        const std::string sfx = suffix(o);
        out.push_back({"P1" + sfx, std::nullopt, ZetaFunction::projective_line(o), {}});
        out.push_back({"E" + sfx, std::nullopt, ZetaFunction::type_c_elliptic(o), {}});
        const CurveModel typec = find_type_c_curve(o.p(), o.f(), opts.workers);
        out.push_back(certify_curve("typec" + coeff_label(typec) + sfx, typec, opts.workers));
        if (opts.elliptic_exhaustive)
            for (const auto& c : elliptic_models(o))
                out.push_back(certify_curve("ell" + coeff_label(c) + sfx, c, opts.workers));
        CorpusRng rng = seeded(opts.seed, o);
        const int n_random = (o.q() == 9) ? opts.random_per_order_q9 : opts.random_per_order;
        for (int i = 0; i < n_random; ++i) {
            const int genus = 2 + i % 2;
            const auto c = random_hyperelliptic(o, genus, 1, rng).front();
            out.push_back(certify_curve("hyp" + std::to_string(genus) + coeff_label(c) + sfx, c, opts.workers));
        }
        if (opts.plane)
            for (const auto& [name, c] : plane_examples(o))
                out.push_back(certify_curve(name + sfx, c, opts.workers));
    }
    return out;
}

std::vector<WeilMotive> random_motives(const SquareOrder& o, int count, std::uint64_t seed)
{
    CorpusRng rng = seeded(seed, o);
    // Pool of certified numerators: realised elliptic traces, E, random genus 2.
    std::vector<ZetaFunction> pool;
    std::set<std::vector<BigInt>> seen;
    auto add = [&](const ZetaFunction& z) {
        if (seen.insert(z.P[1].coefficients()).second)
            pool.push_back(z);
    };
    add(ZetaFunction::type_c_elliptic(o));
    const std::uint64_t Q = make_field(o.p(), 2 * o.f())->order();
    std::uint64_t space = 1;
    for (int i = 0; i < weierstrass_arity(o.p()); ++i)
        space *= Q;
    if (space <= 4096)
        for (const auto& c : elliptic_models(o))
            add(zeta_of_curve(c));
    for (const auto& c : random_hyperelliptic(o, 2, 3, rng))
        add(certify_curve("pool", c).zeta);

    std::vector<ZetaFunction> genus2;
    for (const auto& z : pool)
        if (z.genus >= 2)
            genus2.push_back(z);

    auto pick = [&](const std::vector<ZetaFunction>& v) -> const ZetaFunction& { return v[rng() % v.size()]; };
    auto small_twist = [&] { return static_cast<int>(rng() % 5) - 2; };

    std::vector<WeilMotive> out;
    for (int k = 0; k < count; ++k) {
        const auto& A = pick(pool);
        switch (rng() % 7) {
        case 0:
            out.push_back(WeilMotive::from_zeta(A));
            break;
        case 1:
            out.push_back(WeilMotive::h1(o, A.P[1]));
            break;
        case 2:
            out.push_back(tensor(WeilMotive::h1(o, A.P[1]), WeilMotive::h1(o, pick(pool).P[1])));
            break;
        case 3: {
            const auto& B = genus2.empty() ? A : pick(genus2);
            out.push_back(exterior_power(WeilMotive::h1(o, B.P[1]), 2));
            break;
        }
        case 4:
            out.push_back(twist(WeilMotive::h1(o, A.P[1]), small_twist()));
            break;
        case 5:
            out.push_back(direct_sum(WeilMotive::from_zeta(A), WeilMotive::h1(o, pick(pool).P[1])));
            break;
        default:
            out.push_back(tensor(WeilMotive::from_zeta(A), twist(WeilMotive::h1(o, pick(pool).P[1]), small_twist())));
            break;
        }
    }
    return out;
}

}  // namespace halfzeta
