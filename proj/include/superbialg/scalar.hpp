#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace superbialg {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}                    // NOLINT(google-explicit-constructor)
    Scalar(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (decimal integers of any length).
    static Scalar parse(const std::string& text);
    /// Builds p/q from decimal strings; throws on a zero denominator.
    static Scalar from_strings(const std::string& num, const std::string& den);

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    /// "p/q", denominator omitted when it is 1.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class q_{0};
};

/// (-1)^k as a scalar.
inline Scalar sign_of(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace superbialg
