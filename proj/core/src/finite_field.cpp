#include "halfzeta/finite_field.hpp"

#include <cstdlib>
#include <string>

#include "halfzeta/errors.hpp"
#include "halfzeta/rational.hpp"

namespace halfzeta {

std::uint64_t enumeration_bound()
{
    const char* env = std::getenv("HALFZETA_ENUM_BOUND");
    if (env == nullptr || *env == '\0')
        return default_enumeration_bound;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw input_error(std::string("HALFZETA_ENUM_BOUND must be a positive integer, got '") + env + "'");
    return v;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// Remainder of a modulo monic m over F_p.
Coeffs rem_monic(Coeffs a, const Coeffs& m, std::uint32_t p)
{
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i < dm; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const Coeffs& a)
{
    for (auto c : a)
        if (c != 0)
            return false;
    return true;
}

Coeffs monic_from_code(std::uint64_t code, std::uint32_t p, int d)
{
    Coeffs c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    c.back() = 1;
    return c;
}

// Monic irreducibles of each degree over F_p, generated on demand.
class IrreducibleTable {
public:
    explicit IrreducibleTable(std::uint32_t p) : p_(p) {}

    bool is_irreducible(const Coeffs& f)
    {
        const int d = static_cast<int>(f.size()) - 1;
        for (int j = 1; j <= d / 2; ++j)
            for (const auto& g : of_degree(j))
                if (is_zero_poly(rem_monic(f, g, p_)))
                    return false;
        return true;
    }

    const std::vector<Coeffs>& of_degree(int d)
    {
        auto it = by_degree_.find(d);
        if (it != by_degree_.end())
            return it->second;
        std::vector<Coeffs> list;
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p_;
        for (std::uint64_t code = 0; code < count; ++code) {
            Coeffs f = monic_from_code(code, p_, d);
            if (is_irreducible(f))
                list.push_back(std::move(f));
        }
        return by_degree_.emplace(d, std::move(list)).first->second;
    }

private:
    std::uint32_t p_;
    std::map<int, std::vector<Coeffs>> by_degree_;
};

Coeffs canonical_modulus(std::uint32_t p, int k)
{
    IrreducibleTable table(p);
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i)
        count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs f = monic_from_code(code, p, k);
        if (table.is_irreducible(f))
            return f;
    }
    throw domain_error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p, int k)
{
    if (!is_prime(p))
        throw input_error(std::to_string(p) + " is not prime");
    if (k < 1)
        throw input_error("extension degree must be >= 1");
    std::uint64_t order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order >= (std::uint64_t{1} << 32))
            throw input_error("field order p^k must be below 2^32");
    }

    static std::mutex cache_mutex;
    static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({p, k});
    if (it != cache.end())
        return it->second;
    auto field = std::make_shared<FiniteField>(p, k, canonical_modulus(p, k));
    cache.emplace(std::pair{p, k}, field);
    return field;
}

FiniteField::FiniteField(std::uint32_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), order_(1), modulus_(std::move(modulus))
{
    for (int i = 0; i < k_; ++i) {
        place_.push_back(order_);
        order_ *= p_;
    }
    // Smallest primitive element.
    const auto factors = prime_factors(order_ - 1);
    for (std::uint64_t g = 1; g < order_; ++g) {
        bool primitive = true;
        for (auto l : factors)
            if (pow_reference(static_cast<Index>(g), (order_ - 1) / l) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            generator_ = static_cast<Index>(g);
            break;
        }
    }
    if (order_ <= table_limit)
        build_tables();
}

void FiniteField::build_tables()
{
    const std::uint64_t n = order_ - 1;
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    Index cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        exp_[i + n] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_reference(cur, generator_);
    }
    zech_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Index v = digit_add(1, exp_[i]);
        zech_[i] = (v == 0) ? -1 : static_cast<std::int64_t>(log_[v]);
    }
    log_minus_one_ = (p_ == 2) ? 0 : static_cast<std::uint32_t>(n / 2);
}

std::vector<std::uint32_t> FiniteField::coordinates(Index a) const
{
    std::vector<std::uint32_t> c(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
        c[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
    }
    return c;
}

FiniteField::Index FiniteField::from_coordinates(std::span<const std::uint32_t> c) const
{
    if (c.size() > static_cast<std::size_t>(k_))
        throw input_error("coordinate vector longer than the extension degree");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        idx += (c[i] % p_) * place_[i];
    return static_cast<Index>(idx);
}

FiniteField::Index FiniteField::from_int(std::int64_t n) const
{
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<Index>(((n % m) + m) % m);
}

FiniteField::Index FiniteField::digit_add(Index a, Index b) const
{
    if (p_ == 2)
        return a ^ b;
    std::uint64_t out = 0;
    for (int i = 0; i < k_; ++i) {
        const std::uint32_t s = (a % p_ + b % p_) % p_;
        out += s * place_[static_cast<std::size_t>(i)];
        a /= p_;
        b /= p_;
    }
    return static_cast<Index>(out);
}

FiniteField::Index FiniteField::add(Index a, Index b) const
{
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    if (!has_tables())
        return digit_add(a, b);
    const std::uint64_t n = order_ - 1;
    const std::uint64_t la = log_[a], lb = log_[b];
    const std::int64_t z = zech_[(lb + n - la) % n];
    if (z < 0)
        return 0;
    return exp_[la + static_cast<std::uint64_t>(z)];
}

FiniteField::Index FiniteField::neg(Index a) const
{
    if (a == 0 || p_ == 2)
        return a;
    if (has_tables())
        return exp_[log_[a] + log_minus_one_];
    std::uint64_t out = 0;
    for (int i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * place_[static_cast<std::size_t>(i)];
        a /= p_;
    }
    return static_cast<Index>(out);
}

FiniteField::Index FiniteField::mul_reference(Index a, Index b) const
{
    const auto ca = coordinates(a), cb = coordinates(b);
    Coeffs prod(2 * static_cast<std::size_t>(k_) - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0)
            continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
    }
    const auto r = rem_monic(std::move(prod), modulus_, p_);
    return from_coordinates(r);
}

FiniteField::Index FiniteField::mul(Index a, Index b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (!has_tables())
        return mul_reference(a, b);
    return exp_[std::uint64_t{log_[a]} + log_[b]];
}

FiniteField::Index FiniteField::inv(Index a) const
{
    if (a == 0)
        throw domain_error("inverse of zero");
    if (!has_tables())
        return pow_reference(a, order_ - 2);
    const std::uint64_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

FiniteField::Index FiniteField::pow_reference(Index a, std::uint64_t e) const
{
    Index result = 1, base = a;
    while (e > 0) {
        if (e & 1)
            result = mul_reference(result, base);
        base = mul_reference(base, base);
        e >>= 1;
    }
    return result;
}

FiniteField::Index FiniteField::pow(Index a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    if (!has_tables())
        return pow_reference(a, e);
    const std::uint64_t n = order_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % n)) % n];
}

int FiniteField::quadratic_character(Index a) const
{
    if (p_ == 2)
        throw domain_error("quadratic character needs odd characteristic");
    if (a == 0)
        return 0;
    if (has_tables())
        return (log_[a] % 2 == 0) ? 1 : -1;
    return pow_reference(a, (order_ - 1) / 2) == 1 ? 1 : -1;
}

std::uint32_t FiniteField::absolute_trace(Index a) const
{
    Index acc = 0, cur = a;
    for (int i = 0; i < k_; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    return acc;  // lies in the prime field, so its index is its residue
}

FiniteField::Index FiniteField::subfield_root(const FiniteField& source) const
{
    std::lock_guard lock(embed_mutex_);
    const auto key = std::pair{source.p_, source.k_};
    if (auto it = subfield_roots_.find(key); it != subfield_roots_.end())
        return it->second;
    if (order_ > enumeration_bound())
        throw bound_exceeded("embedding root search exceeds the enumeration bound");
    for (std::uint64_t x = 0; x < order_; ++x) {
        Index acc = 0;
        for (std::size_t i = source.modulus_.size(); i-- > 0;)
            acc = add(mul(acc, static_cast<Index>(x)), from_int(source.modulus_[i]));
        if (acc == 0) {
            subfield_roots_.emplace(key, static_cast<Index>(x));
            return static_cast<Index>(x);
        }
    }
    throw domain_error("no root of the subfield modulus found");  // unreachable when j | k
}

FiniteField::Index FiniteField::embed_from(const FiniteField& source, Index x) const
{
    if (source.p_ != p_ || k_ % source.k_ != 0)
        throw domain_error("cannot embed F_" + std::to_string(source.p_) + "^" + std::to_string(source.k_) +
                           " into F_" + std::to_string(p_) + "^" + std::to_string(k_));
    if (source.k_ == 1 || (source.k_ == k_ && source.modulus_ == modulus_))
        return x;
    const Index r = subfield_root(source);
    Index acc = 0;
    const auto c = source.coordinates(x);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = add(mul(acc, r), from_int(c[i]));
    return acc;
}

FieldElement::FieldElement(FieldRef field, FiniteField::Index value) : field_(std::move(field)), value_(value)
{
    if (!field_)
        throw domain_error("field element without a field");
    if (value_ >= field_->order())
        throw domain_error("field element index out of range");
}

namespace {

const FieldRef& same_field(const FieldElement& a, const FieldElement& b)
{
    if (a.field() != b.field() &&
        (a.field()->characteristic() != b.field()->characteristic() || a.field()->degree() != b.field()->degree() ||
         a.field()->modulus() != b.field()->modulus()))
        throw domain_error("operands belong to different fields");
    return a.field();
}

}  // namespace

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(value_)}; }

std::uint64_t FieldElement::multiplicative_order() const
{
    if (value_ == 0)
        throw domain_error("zero has no multiplicative order");
    std::uint64_t ord = field_->order() - 1;
    for (auto l : prime_factors(ord))
        while (ord % l == 0 && field_->pow(value_, ord / l) == 1)
            ord /= l;
    return ord;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    const auto& f = same_field(a, b);
    return {f, f->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    const auto& f = same_field(a, b);
    return {f, f->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const auto& f = same_field(a, b);
    return {f, f->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    const auto& f = same_field(a, b);
    return {f, f->mul(a.value_, f->inv(b.value_))};
}
bool operator==(const FieldElement& a, const FieldElement& b)
{
    same_field(a, b);
    return a.value_ == b.value_;
}

FieldElement zero(const FieldRef& field) { return {field, 0}; }
FieldElement one(const FieldRef& field) { return {field, 1}; }

FieldElement embed(const FieldElement& x, const FieldRef& target)
{
    return {target, target->embed_from(*x.field(), x.index())};
}

FieldEnumeration enumerate(const FieldRef& field)
{
    if (field->order() > enumeration_bound())
        throw bound_exceeded("F_" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree()) +
                             " has " + std::to_string(field->order()) + " elements, above the enumeration bound " +
                             std::to_string(enumeration_bound()));
    return FieldEnumeration(field);
}

}  // namespace halfzeta
