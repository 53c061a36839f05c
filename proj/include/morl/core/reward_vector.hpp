#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "morl/core/rational.hpp"

namespace morl {

// Per-objective return vector. Length is fixed by the owning model's
// objective count; componentwise arithmetic checks it.
class RewardVector {
public:
    RewardVector() = default;
    explicit RewardVector(size_t objectives) : c_(objectives, 0.0) {}
    RewardVector(std::initializer_list<double> values) : c_(values) {}
    explicit RewardVector(const RationalVector& exact) {
        c_.reserve(exact.size());
        for (const auto& r : exact) c_.push_back(r.to_double());
    }

    size_t size() const { return c_.size(); }
    double operator[](size_t i) const { return c_[i]; }
    double& operator[](size_t i) { return c_[i]; }

    RewardVector& operator+=(const RewardVector& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    RewardVector& operator-=(const RewardVector& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    RewardVector& operator*=(double s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend RewardVector operator+(RewardVector a, const RewardVector& b) { return a += b; }
    friend RewardVector operator-(RewardVector a, const RewardVector& b) { return a -= b; }
    friend RewardVector operator*(double s, RewardVector v) { return v *= s; }

    bool operator==(const RewardVector& o) const = default;

    const std::vector<double>& components() const { return c_; }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(c_[i]);
        }
        return out + ")";
    }

private:
    std::vector<double> c_;

    void check(const RewardVector& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("reward vector length mismatch");
    }
};

}  // namespace morl
