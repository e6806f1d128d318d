#include "halfzeta/fq_poly.hpp"

#include <array>

#include "halfzeta/errors.hpp"

namespace halfzeta {

FqPoly::FqPoly(FieldRef field, std::vector<Index> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    if (!field_)
        throw domain_error("polynomial without a coefficient field");
    trim();
}

void FqPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FqPoly::Index FqPoly::eval(Index x) const
{
    Index acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

FqPoly FqPoly::derivative() const
{
    std::vector<Index> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(field_->mul(field_->from_int(static_cast<std::int64_t>(i)), c_[i]));
    return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::monic() const
{
    if (c_.empty())
        return *this;
    const Index inv = field_->inv(c_.back());
    std::vector<Index> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] = field_->mul(c_[i], inv);
    return FqPoly(field_, std::move(v));
}

namespace {

void require_same(const FqPoly& a, const FqPoly& b)
{
    if (a.field() != b.field())
        throw domain_error("polynomials over different fields");
}

}  // namespace

FqPoly operator+(const FqPoly& a, const FqPoly& b)
{
    require_same(a, b);
    const auto& F = *a.field_;
    std::vector<FqPoly::Index> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return FqPoly(a.field_, std::move(v));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b)
{
    require_same(a, b);
    const auto& F = *a.field_;
    std::vector<FqPoly::Index> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return FqPoly(a.field_, std::move(v));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero())
        return FqPoly(a.field_);
    const auto& F = *a.field_;
    std::vector<FqPoly::Index> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return FqPoly(a.field_, std::move(v));
}

FqDivMod divmod(const FqPoly& a, const FqPoly& b)
{
    require_same(a, b);
    if (b.is_zero())
        throw domain_error("division by the zero polynomial");
    const auto& F = *a.field();
    std::vector<FqPoly::Index> rem = a.coefficients();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0)
        return {FqPoly(a.field()), a};
    std::vector<FqPoly::Index> quo(static_cast<std::size_t>(dq) + 1, 0);
    const auto lead_inv = F.inv(b.leading());
    for (int i = dq; i >= 0; --i) {
        const auto c = F.mul(rem[static_cast<std::size_t>(i + db)], lead_inv);
        quo[static_cast<std::size_t>(i)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            auto& r = rem[static_cast<std::size_t>(i + j)];
            r = F.sub(r, F.mul(c, b.coeff(j)));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {FqPoly(a.field(), std::move(quo)), FqPoly(a.field(), std::move(rem))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b)
{
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqPoly powmod(const FqPoly& base, std::uint64_t e, const FqPoly& m)
{
    FqPoly result = divmod(FqPoly(base.field(), {1}), m).remainder;
    FqPoly b = divmod(base, m).remainder;
    while (e > 0) {
        if (e & 1)
            result = divmod(result * b, m).remainder;
        b = divmod(b * b, m).remainder;
        e >>= 1;
    }
    return result;
}

namespace {

constexpr int small_degree = 8;

// y^Q mod a monic m of degree <= small_degree, on stack buffers.
FqPoly small_frobenius_residue(const FqPoly& m)
{
    using Index = FqPoly::Index;
    const FiniteField& K = *m.field();
    const int d = m.degree();
    const auto& mc = m.coefficients();
    std::array<Index, small_degree> result{}, base{}, next{};
    std::array<Index, 2 * small_degree> prod{};

    auto mulmod = [&](const std::array<Index, small_degree>& a, const std::array<Index, small_degree>& b,
                      std::array<Index, small_degree>& out) {
        prod.fill(0);
        for (int i = 0; i < d; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0)
                continue;
            for (int j = 0; j < d; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    K.add(prod[static_cast<std::size_t>(i + j)],
                          K.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
        }
        for (int k = 2 * d - 2; k >= d; --k) {
            const Index lead = prod[static_cast<std::size_t>(k)];
            if (lead == 0)
                continue;
            const Index nl = K.neg(lead);
            for (int i = 0; i < d; ++i)
                prod[static_cast<std::size_t>(k - d + i)] =
                    K.add(prod[static_cast<std::size_t>(k - d + i)], K.mul(nl, mc[static_cast<std::size_t>(i)]));
            prod[static_cast<std::size_t>(k)] = 0;
        }
        for (int i = 0; i < d; ++i)
            out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    };

    // base = y mod m
    if (d == 1) {
        base[0] = K.neg(mc[0]);
    } else {
        base[1] = 1;
    }
    result[0] = 1;
    for (std::uint64_t e = K.order(); e > 0; e >>= 1) {
        if (e & 1) {
            mulmod(result, base, next);
            result = next;
        }
        mulmod(base, base, next);
        base = next;
    }
    return FqPoly(m.field(), std::vector<Index>(result.begin(), result.begin() + d));
}

}  // namespace

int count_distinct_roots(const FqPoly& g)
{
    if (g.is_zero())
        throw domain_error("root count of the zero polynomial");
    if (g.degree() == 0)
        return 0;
    const auto Q = g.field()->order();
    if (Q <= 256) {
        int n = 0;
        for (std::uint64_t y = 0; y < Q; ++y)
            if (g.eval(static_cast<FqPoly::Index>(y)) == 0)
                ++n;
        return n;
    }
    const FqPoly y(g.field(), {0, 1});
    const FqPoly yq = g.degree() <= small_degree ? small_frobenius_residue(g.monic()) : powmod(y, Q, g);
    return gcd(g, yq - y).degree();
}

FqPoly embed(const FqPoly& a, const FieldRef& target)
{
    std::vector<FqPoly::Index> v;
    v.reserve(a.coefficients().size());
    for (auto c : a.coefficients())
        v.push_back(target->embed_from(*a.field(), c));
    return FqPoly(target, std::move(v));
}

}  // namespace halfzeta
