#include "morl/core/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace morl {

namespace {

long long checked_narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    num_ = checked_narrow(n, "addition");
    den_ = checked_narrow(d, "addition");
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    num_ = checked_narrow(n, "multiplication");
    den_ = checked_narrow(d, "multiplication");
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        long long n = std::stoll(std::string(text.substr(0, slash)));
        long long d = std::stoll(std::string(text.substr(slash + 1)));
        return Rational(n, d);
    }
    bool negative = false;
    size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    long long num = 0;
    long long den = 1;
    bool seen_digit = false;
    bool after_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (after_point) throw std::invalid_argument("malformed decimal: " + std::string(text));
            after_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("malformed decimal: " + std::string(text));
        seen_digit = true;
        num = checked_narrow(static_cast<__int128>(num) * 10 + (c - '0'), "decimal parse");
        if (after_point) den = checked_narrow(static_cast<__int128>(den) * 10, "decimal parse");
    }
    if (!seen_digit) throw std::invalid_argument("malformed decimal: " + std::string(text));
    return Rational(negative ? -num : num, den);
}

std::string Rational::str() const {
    long long d = den_;
    long long pow2 = 0;
    long long pow5 = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++pow2;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++pow5;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    long long digits = pow2 > pow5 ? pow2 : pow5;
    __int128 scaled = num_;
    for (long long i = pow2; i < digits; ++i) scaled *= 2;
    for (long long i = pow5; i < digits; ++i) scaled *= 5;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body;
    if (digits == 0) {
        body = std::to_string(static_cast<long long>(scaled));
    } else {
        std::string raw = std::to_string(static_cast<long long>(scaled));
        if (static_cast<long long>(raw.size()) <= digits) raw.insert(0, digits - raw.size() + 1, '0');
        body = raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    return negative ? "-" + body : body;
}

RationalVector& operator+=(RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rational vector length mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }

RationalVector operator*(const Rational& s, RationalVector v) {
    for (auto& c : v) c *= s;
    return v;
}

bool all_zero(const RationalVector& v) {
    for (const auto& c : v)
        if (c != Rational(0)) return false;
    return true;
}

std::string str(const RationalVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace morl
