#include "halfzeta/rational.hpp"

#include <cctype>
#include <limits>

#include "halfzeta/errors.hpp"

namespace halfzeta {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRat& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

BigRat parse_rat(std::string_view text)
{
    const auto slash = text.find('/');
    BigInt num, den = 1;
    if (!parse_integer(text.substr(0, slash), num))
        throw input_error("malformed rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos && !parse_integer(text.substr(slash + 1), den))
        throw input_error("malformed rational '" + std::string(text) + "'");
    if (den == 0)
        throw input_error("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

BigInt ipow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRat rpow(const BigRat& base, long exp)
{
    if (exp >= 0)
        return make_rat(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                        ipow(base.get_den(), static_cast<unsigned long>(exp)));
    if (base == 0)
        throw domain_error("negative power of zero");
    const auto e = static_cast<unsigned long>(-exp);
    return make_rat(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

long ord_p(const BigInt& n, unsigned long p)
{
    if (n == 0)
        throw domain_error("valuation of zero");
    BigInt m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long ord_p(const BigRat& r, unsigned long p)
{
    return ord_p(r.get_num(), p) - ord_p(r.get_den(), p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t to_int64(const BigInt& n)
{
    if (!n.fits_slong_p())
        throw domain_error("integer " + n.get_str() + " does not fit in 64 bits");
    return n.get_si();
}

bool is_integer(const BigRat& r) { return r.get_den() == 1; }

SquareOrder::SquareOrder(std::uint32_t p, int f) : p_(p), f_(f)
{
    if (!is_prime(p))
        throw input_error("p = " + std::to_string(p) + " is not prime");
    if (f < 1)
        throw input_error("f must be >= 1");
}

SquareOrder SquareOrder::from_q(const BigInt& q)
{
    if (q < 4)
        throw input_error("q must be p^{2f}");
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    if (root * root != q || !root.fits_ulong_p())
        throw input_error("q must be p^{2f}");
    // root = p^f
    unsigned long r = root.get_ui();
    unsigned long p = 2;
    while (r % p != 0)
        ++p;
    int f = 0;
    while (r % p == 0) {
        r /= p;
        ++f;
    }
    if (r != 1 || p > std::numeric_limits<std::uint32_t>::max())
        throw input_error("q must be p^{2f}");
    return SquareOrder(static_cast<std::uint32_t>(p), f);
}

}  // namespace halfzeta
