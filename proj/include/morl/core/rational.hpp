#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace morl {

// Exact rational on 64-bit integers. Model probabilities and rewards are
// short decimals, so reduced numerators/denominators stay far below the
// overflow range; intermediate products are widened to 128 bits anyway.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    Rational(long long num, long long den);

    // Accepts "0.85", "-12", "1", "7/20".
    static Rational from_decimal(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Exact decimal string whenever the denominator is of the form 2^a 5^b
    // (always true for decimal-built models); falls back to "num/den".
    std::string str() const;

private:
    long long num_ = 0;
    long long den_ = 1;

    void normalize();
};

using RationalVector = std::vector<Rational>;

RationalVector& operator+=(RationalVector& a, const RationalVector& b);
RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator*(const Rational& s, RationalVector v);
bool all_zero(const RationalVector& v);
std::string str(const RationalVector& v);

}  // namespace morl
