#pragma once

#include "vest/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace vest {

using BigInt = mpz_class;

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) noexcept
{
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        auto x = static_cast<std::uint64_t>(a);
        auto y = static_cast<std::uint64_t>(b);
        while (y != 0) {
            auto t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline BigInt to_bigint(i128 value)
{
    bool const negative = value < 0;
    u128 mag = negative ? u128(0) - static_cast<u128>(value) : static_cast<u128>(value);
    BigInt result(static_cast<unsigned long>(mag >> 64));
    result <<= 64;
    result += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
    if (negative) {
        result = -result;
    }
    return result;
}

// Small numerators exclude INT64_MIN so that negation never overflows.
constexpr std::int64_t small_min = std::numeric_limits<std::int64_t>::min() + 1;
constexpr std::int64_t small_max = std::numeric_limits<std::int64_t>::max();

inline bool fits_small(i128 v) noexcept { return v >= small_min && v <= small_max; }

inline bool fits_small(BigInt const& v) noexcept
{
    return mpz_fits_slong_p(v.get_mpz_t()) && mpz_cmp_si(v.get_mpz_t(), small_min) >= 0;
}

} // namespace detail

/// Exact rational number in canonical reduced form (denominator positive, gcd 1, zero is 0/1).
///
/// Values whose numerator and denominator fit in 64 bits are held inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. The representation is a
/// function of the value, so equality never has to compare across the two forms.
class Rational {
public:
    Rational() noexcept = default;

    Rational(std::int64_t value) { assign_reduced(value, 1); }
    Rational(int value) noexcept : num_(value) {}

    explicit Rational(BigInt const& value) { assign_big(mpq_class(value)); }

    Rational(Rational const& other)
        : num_(other.num_)
        , den_(other.den_)
        , big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
    {
    }

    Rational(Rational&&) noexcept = default;

    Rational& operator=(Rational const& other)
    {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            if (other.big_) {
                if (big_) {
                    *big_ = *other.big_;
                } else {
                    big_ = std::make_unique<mpq_class>(*other.big_);
                }
            } else {
                big_.reset();
            }
        }
        return *this;
    }

    Rational& operator=(Rational&&) noexcept = default;

    /// num/den reduced to canonical form. Throws ArithmeticError when den is zero.
    static Rational make(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw ArithmeticError("rational with zero denominator");
        }
        Rational r;
        r.assign(num, den);
        return r;
    }

    static Rational make(BigInt const& num, BigInt const& den)
    {
        if (sgn(den) == 0) {
            throw ArithmeticError("rational with zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        Rational r;
        r.assign_big(std::move(q));
        return r;
    }

    /// Reads `-?[0-9]+(/[0-9]+)?`. A zero denominator is rejected.
    static std::optional<Rational> from_string(std::string_view text)
    {
        std::size_t pos = 0;
        if (pos < text.size() && text[pos] == '-') {
            ++pos;
        }
        auto const digits = [&](std::size_t from) {
            std::size_t i = from;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                ++i;
            }
            return i;
        };
        std::size_t const num_end = digits(pos);
        if (num_end == pos) {
            return std::nullopt;
        }
        std::string_view den_text = "1";
        if (num_end != text.size()) {
            if (text[num_end] != '/') {
                return std::nullopt;
            }
            std::size_t const den_end = digits(num_end + 1);
            if (den_end == num_end + 1 || den_end != text.size()) {
                return std::nullopt;
            }
            den_text = text.substr(num_end + 1);
        }
        BigInt num(std::string(text.substr(0, num_end)), 10);
        BigInt den(std::string(den_text), 10);
        if (sgn(den) == 0) {
            return std::nullopt;
        }
        return make(num, den);
    }

    BigInt numerator() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }
    BigInt denominator() const { return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_)); }

    /// True when the value is held inline; small_num()/small_den() are then exact.
    bool is_small() const noexcept { return !big_; }
    std::int64_t small_num() const noexcept { return num_; }
    std::int64_t small_den() const noexcept { return den_; }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const noexcept { return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : den_ == 1; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

    int sign() const noexcept
    {
        if (big_) {
            return sgn(*big_);
        }
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const
    {
        if (big_) {
            return *big_;
        }
        return mpq_class(BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_)));
    }

    std::string to_string() const
    {
        if (big_) {
            return big_->get_str();
        }
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const
    {
        Rational r;
        if (big_) {
            r.assign_big(-*big_);
        } else {
            r.num_ = -num_;
            r.den_ = den_;
        }
        return r;
    }

    Rational& operator+=(Rational const& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t sum;
                if (!__builtin_add_overflow(num_, o.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min()) {
                    num_ = sum;
                    return *this;
                }
            }
            assign(detail::i128(num_) * o.den_ + detail::i128(o.num_) * den_, detail::i128(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() + o.to_mpq());
        return *this;
    }

    Rational& operator-=(Rational const& o) { return *this += -o; }

    Rational& operator*=(Rational const& o)
    {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t prod;
                if (!__builtin_mul_overflow(num_, o.num_, &prod) && prod != std::numeric_limits<std::int64_t>::min()) {
                    num_ = prod;
                    return *this;
                }
            }
            assign(detail::i128(num_) * o.num_, detail::i128(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() * o.to_mpq());
        return *this;
    }

    Rational& operator/=(Rational const& o)
    {
        if (o.is_zero()) {
            throw ArithmeticError("division by zero");
        }
        if (!big_ && !o.big_) {
            assign(detail::i128(num_) * o.den_, detail::i128(den_) * o.num_);
            return *this;
        }
        assign_big(to_mpq() / o.to_mpq());
        return *this;
    }

    /// this += a * b, with a fast path for inline integers.
    void add_product(Rational const& a, Rational const& b)
    {
        if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
            std::int64_t prod;
            std::int64_t sum;
            if (!__builtin_mul_overflow(a.num_, b.num_, &prod) && !__builtin_add_overflow(num_, prod, &sum)
                && sum != std::numeric_limits<std::int64_t>::min()) {
                num_ = sum;
                return;
            }
        }
        Rational p = a;
        p *= b;
        *this += p;
    }

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b)
    {
        if (a.big_ || b.big_) {
            return a.big_ && b.big_ && *a.big_ == *b.big_;
        }
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b)
    {
        int c;
        if (!a.big_ && !b.big_) {
            detail::i128 const lhs = detail::i128(a.num_) * b.den_;
            detail::i128 const rhs = detail::i128(b.num_) * a.den_;
            c = (lhs > rhs) - (lhs < rhs);
        } else {
            c = cmp(a.to_mpq(), b.to_mpq());
        }
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.to_string(); }

private:
    void assign(detail::i128 num, detail::i128 den)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::u128 const mag = num < 0 ? detail::u128(0) - static_cast<detail::u128>(num) : static_cast<detail::u128>(num);
        detail::u128 const g = detail::gcd_u128(mag, static_cast<detail::u128>(den));
        if (g > 1) {
            num /= static_cast<detail::i128>(g);
            den /= static_cast<detail::i128>(g);
        }
        assign_reduced(num, den);
    }

    void assign_reduced(detail::i128 num, detail::i128 den)
    {
        if (num == 0) {
            den = 1;
        }
        if (detail::fits_small(num) && detail::fits_small(den)) {
            big_.reset();
            num_ = static_cast<std::int64_t>(num);
            den_ = static_cast<std::int64_t>(den);
            return;
        }
        mpq_class q(detail::to_bigint(num), detail::to_bigint(den));
        store_big(std::move(q));
    }

    // q must already be canonical.
    void assign_big(mpq_class q)
    {
        if (detail::fits_small(q.get_num()) && detail::fits_small(q.get_den())) {
            big_.reset();
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            return;
        }
        store_big(std::move(q));
    }

    void store_big(mpq_class&& q)
    {
        num_ = 0;
        den_ = 1;
        if (big_) {
            *big_ = std::move(q);
        } else {
            big_ = std::make_unique<mpq_class>(std::move(q));
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline BigInt factorial(unsigned long n)
{
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

} // namespace vest
