#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace halfzeta {

/// Default cap on the number of field elements any enumeration may visit;
/// HALFZETA_ENUM_BOUND overrides it.
inline constexpr std::uint64_t default_enumeration_bound = 10'000'000;
std::uint64_t enumeration_bound();

/// F_{p^k} = F_p[x]/(m(x)) with m the lexicographically smallest monic
/// irreducible of degree k (coefficients compared from x^{k-1} down to x^0).
///
/// Elements are addressed by Index = sum_i c_i p^i where c_i is the
/// coordinate of x^i. Index 0 is zero and index 1 is one. Up to
/// table_limit elements, multiplication and addition go through
/// discrete-log and Zech tables; larger fields fall back to schoolbook
/// arithmetic on coordinates.
class FiniteField {
public:
    using Index = std::uint32_t;
    static constexpr std::uint64_t table_limit = 1u << 22;

    /// Cached and deterministic: repeated calls return the same object.
    /// Throws input_error for composite p, k < 1, or p^k >= 2^32.
    static std::shared_ptr<const FiniteField> make(std::uint32_t p, int k);

    std::uint32_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t order() const { return order_; }
    /// Monic modulus, coefficients low to high (size k + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !log_.empty(); }

    std::vector<std::uint32_t> coordinates(Index a) const;
    /// Coordinates beyond k are rejected; each entry is reduced mod p.
    Index from_coordinates(std::span<const std::uint32_t> c) const;
    /// Image of an integer in the prime field.
    Index from_int(std::int64_t n) const;

    Index add(Index a, Index b) const;
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    Index neg(Index a) const;
    Index mul(Index a, Index b) const;
    /// Throws domain_error on zero.
    Index inv(Index a) const;
    Index pow(Index a, std::uint64_t e) const;
    Index frobenius(Index a) const { return pow(a, p_); }

    /// Schoolbook multiplication on coordinates, independent of the tables.
    Index mul_reference(Index a, Index b) const;

    /// 0 for zero, +1 for nonzero squares, -1 otherwise. Odd p only.
    int quadratic_character(Index a) const;
    /// Absolute trace to F_p, returned as a residue mod p.
    std::uint32_t absolute_trace(Index a) const;
    /// A fixed primitive element (smallest index of multiplicative order q-1).
    Index generator() const { return generator_; }

    /// Canonical image of x in F_{p^j} -> this field, j | k: the smallest-index
    /// root of the source modulus. Throws domain_error on incompatible fields.
    Index embed_from(const FiniteField& source, Index x) const;

    FiniteField(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

private:
    Index digit_add(Index a, Index b) const;
    Index pow_reference(Index a, std::uint64_t e) const;
    void build_tables();
    Index subfield_root(const FiniteField& source) const;

    std::uint32_t p_;
    int k_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> place_;  // p^i
    Index generator_ = 1;

    std::vector<Index> exp_;           // g^i, i in [0, 2(q-1))
    std::vector<std::uint32_t> log_;   // log_g a, a != 0
    std::vector<std::int64_t> zech_;   // log(1 + g^i), -1 when 1 + g^i = 0
    std::uint32_t log_minus_one_ = 0;

    mutable std::mutex embed_mutex_;
    mutable std::map<std::pair<std::uint32_t, int>, Index> subfield_roots_;
};

using FieldRef = std::shared_ptr<const FiniteField>;

inline FieldRef make_field(std::uint32_t p, int k) { return FiniteField::make(p, k); }

/// Value-semantics element bound to its field. Mixing fields throws domain_error.
class FieldElement {
public:
    FieldElement(FieldRef field, FiniteField::Index value);

    const FieldRef& field() const { return field_; }
    FiniteField::Index index() const { return value_; }
    std::vector<std::uint32_t> coordinates() const { return field_->coordinates(value_); }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius() const;
    /// Multiplicative order; throws domain_error for zero.
    std::uint64_t multiplicative_order() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldRef field_;
    FiniteField::Index value_;
};

FieldElement zero(const FieldRef& field);
FieldElement one(const FieldRef& field);

/// Ring embedding F_{p^j} -> F_{p^k}; requires j | k and equal characteristic.
FieldElement embed(const FieldElement& x, const FieldRef& target);

/// Lazy range over every element exactly once, in index order.
class FieldEnumeration {
public:
    class iterator {
    public:
        using value_type = FieldElement;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const FieldRef* field, std::uint64_t pos) : field_(field), pos_(pos) {}
        FieldElement operator*() const { return FieldElement(*field_, static_cast<FiniteField::Index>(pos_)); }
        iterator& operator++() { ++pos_; return *this; }
        iterator operator++(int) { auto old = *this; ++pos_; return old; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const FieldRef* field_ = nullptr;
        std::uint64_t pos_ = 0;
    };

    explicit FieldEnumeration(FieldRef field) : field_(std::move(field)) {}
    iterator begin() const { return {&field_, 0}; }
    iterator end() const { return {&field_, field_->order()}; }
    std::uint64_t size() const { return field_->order(); }

private:
    FieldRef field_;
};

/// Throws bound_exceeded when the field is larger than enumeration_bound().
FieldEnumeration enumerate(const FieldRef& field);

}  // namespace halfzeta
