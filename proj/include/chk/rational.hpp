#pragma once

// Exact rational numbers with an inline 64-bit fast path.
//
// Values that fit in a reduced int64 numerator/denominator pair never touch
// the heap; anything larger is promoted to boost's cpp_rational and demoted
// again as soon as it fits.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chk {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Rational {
public:
    using BigInt = boost::multiprecision::cpp_int;
    using BigRational = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        assign_wide(n, d);
    }

    explicit Rational(const BigRational& r) { assign_big(r); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<BigRational>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<BigRational>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const {
        return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
    }
    [[nodiscard]] int sign() const {
        if (big_) return big_->sign();
        return (num_ > 0) - (num_ < 0);
    }

    [[nodiscard]] BigRational to_big() const { return big_ ? *big_ : BigRational(num_, den_); }
    [[nodiscard]] BigInt numerator() const {
        return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
    }
    [[nodiscard]] BigInt denominator() const {
        return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
    }

    /// Small-representation accessors; only meaningful when !is_big().
    [[nodiscard]] bool is_big() const { return static_cast<bool>(big_); }
    [[nodiscard]] std::int64_t small_num() const { return num_; }
    [[nodiscard]] std::int64_t small_den() const { return den_; }

    /// Integer value; throws if not an integer or out of int64 range.
    [[nodiscard]] std::int64_t to_int64() const {
        if (!is_integer()) throw std::domain_error("rational is not an integer");
        if (big_) return boost::multiprecision::numerator(*big_).convert_to<std::int64_t>();
        return num_;
    }

    [[nodiscard]] double to_double() const {
        if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
        return big_->convert_to<double>();
    }

    template <class Real>
    [[nodiscard]] Real to_real() const {
        if (!big_) return Real(num_) / Real(den_);
        return Real(BigInt(boost::multiprecision::numerator(*big_))) /
               Real(BigInt(boost::multiprecision::denominator(*big_)));
    }

    Rational operator-() const {
        Rational r(*this);
        r.negate();
        return r;
    }

    void negate() {
        if (big_) {
            *big_ = -*big_;
        } else if (num_ == INT64_MIN) {
            assign_big(-to_big());
        } else {
            num_ = -num_;
        }
    }

    Rational& operator+=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(num_, o.num_, &s)) {
                    num_ = s;
                    return *this;
                }
            }
            __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
            __int128 d = static_cast<__int128>(den_) * o.den_;
            assign_wide(n, d);
            return *this;
        }
        assign_big(to_big() + o.to_big());
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t s;
                if (!__builtin_sub_overflow(num_, o.num_, &s)) {
                    num_ = s;
                    return *this;
                }
            }
            __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
            __int128 d = static_cast<__int128>(den_) * o.den_;
            assign_wide(n, d);
            return *this;
        }
        assign_big(to_big() - o.to_big());
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t p;
                if (!__builtin_mul_overflow(num_, o.num_, &p)) {
                    num_ = p;
                    return *this;
                }
            }
            __int128 n = static_cast<__int128>(num_) * o.num_;
            __int128 d = static_cast<__int128>(den_) * o.den_;
            assign_wide(n, d);
            return *this;
        }
        assign_big(to_big() * o.to_big());
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        if (!big_ && !o.big_) {
            __int128 n = static_cast<__int128>(num_) * o.den_;
            __int128 d = static_cast<__int128>(den_) * o.num_;
            assign_wide(n, d);
            return *this;
        }
        assign_big(to_big() / o.to_big());
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        // Canonical forms: a big value never fits the small representation.
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.num_) * b.den_;
            __int128 r = static_cast<__int128>(b.num_) * a.den_;
            return l <=> r;
        }
        auto x = a.to_big();
        auto y = b.to_big();
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const {
        if (!big_) {
            if (den_ == 1) return std::to_string(num_);
            return std::to_string(num_) + "/" + std::to_string(den_);
        }
        auto n = boost::multiprecision::numerator(*big_);
        auto d = boost::multiprecision::denominator(*big_);
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    /// Accepts "p", "-p", "p/q" with optional surrounding spaces.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = text.find('/');
        auto parse_int = [&](std::string_view s) {
            s = trim(s);
            if (s.empty()) throw std::invalid_argument("malformed rational literal");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw std::invalid_argument("malformed rational literal");
            for (std::size_t i = start; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational literal");
            }
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return BigInt(digits);
        };
        BigInt n = parse_int(text.substr(0, slash));
        BigInt d = slash == std::string_view::npos ? BigInt(1) : parse_int(text.substr(slash + 1));
        if (d == 0) throw DivisionByZero("rational literal with zero denominator");
        return Rational(BigRational(n, d));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        if (d != 1) {
            __int128 g = gcd128(n, d);
            n /= g;
            d /= g;
        }
        if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        auto to_big_int = [](__int128 v) {
            bool neg = v < 0;
            unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
            BigInt r = BigInt(static_cast<std::uint64_t>(u >> 64));
            r <<= 64;
            r += static_cast<std::uint64_t>(u);
            return neg ? BigInt(-r) : r;
        };
        assign_big(BigRational(to_big_int(n), to_big_int(d)));
    }

    void assign_big(const BigRational& r) {
        const auto& n = boost::multiprecision::numerator(r);
        const auto& d = boost::multiprecision::denominator(r);
        if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
            num_ = n.convert_to<std::int64_t>();
            den_ = d.convert_to<std::int64_t>();
            big_.reset();
        } else {
            big_ = std::make_unique<BigRational>(r);
            num_ = 0;
            den_ = 1;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<BigRational> big_;
};

}  // namespace chk
