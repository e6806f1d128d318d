#include "halfzeta/curve.hpp"

#include <thread>

#include "halfzeta/errors.hpp"

namespace halfzeta {

std::string to_string(CurveKind k)
{
    return k == CurveKind::hyperelliptic ? "hyperelliptic" : "plane";
}

int CurveModel::plane_degree() const
{
    return plane_terms.empty() ? 0 : plane_terms.begin()->first.degree();
}

namespace {

using Index = FiniteField::Index;

void trim(std::vector<Index>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

int deg(const std::vector<Index>& v) { return static_cast<int>(v.size()) - 1; }

void validate_hyperelliptic(const CurveModel& c)
{
    const int g = c.genus;
    const int df = deg(c.f_coeffs), dh = deg(c.h_coeffs);
    if (g < 0)
        throw input_error("genus must be >= 0");
    if (c.f_coeffs.empty())
        throw input_error("f must be nonzero");
    if (c.p() != 2) {
        if (!c.h_coeffs.empty())
            throw input_error("odd characteristic requires h = 0");
        if (df != 2 * g + 1 && df != 2 * g + 2)
            throw input_error("deg f = " + std::to_string(df) + " does not match genus " + std::to_string(g) +
                              " (need " + std::to_string(2 * g + 1) + " or " + std::to_string(2 * g + 2) + ")");
        const FqPoly f = c.f_poly();
        if (gcd(f, f.derivative()).degree() > 0)
            throw input_error("f is not squarefree");
        return;
    }
    if (c.h_coeffs.empty())
        throw input_error("characteristic 2 requires h != 0");
    if (dh > g + 1 || df > 2 * g + 2 || (dh != g + 1 && df != 2 * g + 1))
        throw input_error("deg f = " + std::to_string(df) + ", deg h = " + std::to_string(dh) +
                          " do not match genus " + std::to_string(g));
    // Affine singular points lie over roots of h with f'^2 = h'^2 f.
    const FqPoly f = c.f_poly(), h = c.h_poly();
    const FqPoly fd = f.derivative(), hd = h.derivative();
    if (gcd(h, fd * fd - hd * hd * f).degree() > 0)
        throw input_error("curve is singular");
}

void validate_plane(const CurveModel& c)
{
    if (c.plane_terms.empty())
        throw input_error("plane curve needs at least one term");
    const int d = c.plane_terms.begin()->first.degree();
    for (const auto& [m, coeff] : c.plane_terms) {
        if (m.x < 0 || m.y < 0 || m.z < 0)
            throw input_error("negative exponent in plane monomial");
        if (m.degree() != d)
            throw input_error("plane polynomial is not homogeneous");
        if (coeff >= c.base_field()->order())
            throw input_error("coefficient out of range");
    }
    if (d < 1)
        throw input_error("plane polynomial must have positive degree");
    const int expected = (d - 1) * (d - 2) / 2;
    if (c.genus != expected)
        throw input_error("plane curve of degree " + std::to_string(d) + " has genus " + std::to_string(expected) +
                          ", declared " + std::to_string(c.genus));
}

}  // namespace

CurveModel validate_curve(CurveModel c)
{
    const auto F = c.base_field();
    for (auto v : c.f_coeffs)
        if (v >= F->order())
            throw input_error("coefficient out of range");
    for (auto v : c.h_coeffs)
        if (v >= F->order())
            throw input_error("coefficient out of range");
    trim(c.f_coeffs);
    trim(c.h_coeffs);
    for (auto it = c.plane_terms.begin(); it != c.plane_terms.end();)
        it = (it->second == 0) ? c.plane_terms.erase(it) : std::next(it);
    if (c.kind == CurveKind::hyperelliptic)
        validate_hyperelliptic(c);
    else
        validate_plane(c);
    return c;
}

int weierstrass_arity(std::uint32_t p) { return p == 2 ? 5 : (p == 3 ? 3 : 2); }

CurveModel weierstrass_model(const SquareOrder& o, const std::vector<FiniteField::Index>& a)
{
    if (static_cast<int>(a.size()) != weierstrass_arity(o.p()))
        throw domain_error("wrong number of Weierstrass coefficients");
    CurveModel c;
    c.order = o;
    c.kind = CurveKind::hyperelliptic;
    c.genus = 1;
    if (o.p() == 2) {
        c.h_coeffs = {a[1], a[0]};
        c.f_coeffs = {a[4], a[3], a[2], 1};
    } else if (o.p() == 3) {
        c.f_coeffs = {a[2], a[1], a[0], 1};
    } else {
        c.f_coeffs = {a[1], a[0], 0, 1};
    }
    return c;
}

bool within_weil_bound(std::uint64_t N, const BigInt& qn, int genus)
{
    BigInt dev = BigInt(static_cast<unsigned long>(N)) - qn - 1;
    return dev * dev <= 4 * BigInt(genus) * genus * qn;
}

namespace {

FieldRef extension_field(const CurveModel& c, int n)
{
    if (n < 1)
        throw domain_error("extension degree must be >= 1");
    const auto bound = enumeration_bound();
    BigInt Q = ipow(c.order.q(), static_cast<unsigned long>(n));
    if (Q > BigInt(std::to_string(bound)))
        throw bound_exceeded("q^n = " + Q.get_str() + " exceeds the enumeration bound " + std::to_string(bound));
    return make_field(c.p(), 2 * c.f() * n);
}

// Distinct roots of Y^2 + a Y - b in K.
std::uint64_t quadratic_roots(const FiniteField& K, Index a, Index b)
{
    if (K.characteristic() != 2) {
        const Index disc = K.add(K.mul(a, a), K.mul(K.from_int(4), b));
        return static_cast<std::uint64_t>(1 + K.quadratic_character(disc));
    }
    if (a == 0)
        return 1;
    const Index t = K.mul(b, K.inv(K.mul(a, a)));
    return K.absolute_trace(t) == 0 ? 2 : 0;
}

std::uint64_t hyperelliptic_infinity(const CurveModel& c, const FiniteField& K, const FqPoly& f, const FqPoly& h)
{
    const Index a = h.coeff(c.genus + 1);
    const Index b = f.coeff(2 * c.genus + 2);
    return quadratic_roots(K, a, b);
}

template <class Body>
std::uint64_t parallel_sum(std::uint64_t total, int workers, Body body)
{
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(total, 64))));
    if (workers == 1)
        return body(0, total);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(total, chunk * static_cast<std::uint64_t>(w));
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = body(lo, hi); });
    }
    for (auto& t : pool)
        t.join();
    std::uint64_t sum = 0;
    for (auto v : partial)
        sum += v;
    return sum;
}

std::uint64_t count_hyperelliptic(const CurveModel& c, const FieldRef& K, int workers)
{
    const FqPoly f = embed(c.f_poly(), K);
    const FqPoly h = embed(c.h_poly(), K);
    const bool odd = K->characteristic() != 2;
    const std::uint64_t affine = parallel_sum(K->order(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::int64_t acc = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
            const auto xi = static_cast<Index>(x);
            const Index fx = f.eval(xi);
            if (odd) {
                acc += 1 + K->quadratic_character(fx);
                continue;
            }
            const Index hx = h.eval(xi);
            if (hx == 0)
                acc += 1;
            else if (K->absolute_trace(K->mul(fx, K->inv(K->mul(hx, hx)))) == 0)
                acc += 2;
        }
        return static_cast<std::uint64_t>(acc);
    });
    return affine + hyperelliptic_infinity(c, *K, f, h);
}

struct PlaneTerms {
    std::vector<std::pair<Monomial, Index>> terms;  // embedded coefficients
    int degree;
};

PlaneTerms embed_plane(const CurveModel& c, const FieldRef& K)
{
    PlaneTerms out{{}, c.plane_degree()};
    const auto F = c.base_field();
    for (const auto& [m, coeff] : c.plane_terms)
        out.terms.emplace_back(m, K->embed_from(*F, coeff));
    return out;
}

Index eval_plane(const FiniteField& K, const PlaneTerms& P, Index X, Index Y, Index Z)
{
    Index acc = 0;
    for (const auto& [m, coeff] : P.terms)
        acc = K.add(acc, K.mul(coeff, K.mul(K.pow(X, static_cast<std::uint64_t>(m.x)),
                                            K.mul(K.pow(Y, static_cast<std::uint64_t>(m.y)),
                                                  K.pow(Z, static_cast<std::uint64_t>(m.z))))));
    return acc;
}

std::uint64_t count_plane(const CurveModel& c, const FieldRef& K, int workers)
{
    const PlaneTerms P = embed_plane(c, K);
    const int d = P.degree;
    const std::uint64_t Q = K->order();
    // Z = 1: for fixed x, F(x, y, 1) is a polynomial in y.
    // Conjugate x under Frob_q give conjugate fibres: count one per orbit.
    const std::uint64_t q = c.base_field()->order();
    const std::uint64_t affine = parallel_sum(Q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t acc = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
            std::uint64_t orbit = 1;
            bool smallest = true;
            for (Index y = K->pow(static_cast<Index>(x), q); y != x; y = K->pow(y, q), ++orbit)
                if (y < x) {
                    smallest = false;
                    break;
                }
            if (!smallest)
                continue;
            std::vector<Index> gy(static_cast<std::size_t>(d) + 1, 0);
            for (const auto& [m, coeff] : P.terms) {
                auto& slot = gy[static_cast<std::size_t>(m.y)];
                slot = K->add(slot, K->mul(coeff, K->pow(static_cast<Index>(x), static_cast<std::uint64_t>(m.x))));
            }
            const FqPoly g(K, std::move(gy));
            acc += orbit * (g.is_zero() ? Q : static_cast<std::uint64_t>(count_distinct_roots(g)));
        }
        return acc;
    });
    // Z = 0, Y = 1: F(x, 1, 0) as a polynomial in x; then (1:0:0).
    std::vector<Index> gx(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& [m, coeff] : P.terms)
        if (m.z == 0)
            gx[static_cast<std::size_t>(m.x)] = K->add(gx[static_cast<std::size_t>(m.x)], coeff);
    const FqPoly line(K, std::move(gx));
    const std::uint64_t at_infinity = line.is_zero() ? Q : static_cast<std::uint64_t>(count_distinct_roots(line));
    const std::uint64_t corner = eval_plane(*K, P, 1, 0, 0) == 0 ? 1 : 0;
    return affine + at_infinity + corner;
}

}  // namespace

std::uint64_t count_points(const CurveModel& c, int n, int workers)
{
    const FieldRef K = extension_field(c, n);
    return c.kind == CurveKind::hyperelliptic ? count_hyperelliptic(c, K, workers) : count_plane(c, K, workers);
}

std::uint64_t count_points_enumerate(const CurveModel& c, int n)
{
    const FieldRef K = extension_field(c, n);
    const std::uint64_t Q = K->order();
    const auto bound = enumeration_bound();
    if (Q > bound / Q)
        throw bound_exceeded("full enumeration needs (q^n)^2 = " + std::to_string(Q) + "^2 points, above the bound " +
                             std::to_string(bound));
    std::uint64_t N = 0;
    if (c.kind == CurveKind::hyperelliptic) {
        const FqPoly f = embed(c.f_poly(), K);
        const FqPoly h = embed(c.h_poly(), K);
        for (std::uint64_t x = 0; x < Q; ++x) {
            const auto xi = static_cast<Index>(x);
            const Index fx = f.eval(xi), hx = h.eval(xi);
            for (std::uint64_t y = 0; y < Q; ++y) {
                const auto yi = static_cast<Index>(y);
                if (K->add(K->mul(yi, yi), K->mul(hx, yi)) == fx)
                    ++N;
            }
        }
        const Index a = h.coeff(c.genus + 1), b = f.coeff(2 * c.genus + 2);
        for (std::uint64_t y = 0; y < Q; ++y) {
            const auto yi = static_cast<Index>(y);
            if (K->add(K->mul(yi, yi), K->mul(a, yi)) == b)
                ++N;
        }
        return N;
    }
    const PlaneTerms P = embed_plane(c, K);
    for (std::uint64_t x = 0; x < Q; ++x)
        for (std::uint64_t y = 0; y < Q; ++y)
            if (eval_plane(*K, P, static_cast<Index>(x), static_cast<Index>(y), 1) == 0)
                ++N;
    for (std::uint64_t x = 0; x < Q; ++x)
        if (eval_plane(*K, P, static_cast<Index>(x), 1, 0) == 0)
            ++N;
    if (eval_plane(*K, P, 1, 0, 0) == 0)
        ++N;
    return N;
}

PointCountTable count_table(const CurveModel& c, int upto, int workers)
{
    if (upto < 1)
        throw domain_error("count_table needs upto >= 1");
    PointCountTable t;
    for (int n = 1; n <= upto; ++n) {
        const std::uint64_t N = count_points(c, n, workers);
        if (!within_weil_bound(N, ipow(c.order.q(), static_cast<unsigned long>(n)), c.genus))
            throw certification_error("certification failed: N_" + std::to_string(n) + " = " + std::to_string(N) +
                                      " breaks the Weil bound (singular or genus-mismatched model)");
        t.N[n] = N;
    }
    return t;
}

}  // namespace halfzeta
