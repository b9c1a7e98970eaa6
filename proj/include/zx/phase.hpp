#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zx {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Spider phase: either an exact rational multiple of pi, kept reduced and
// canonicalized into [0, 2)*pi, or an arbitrary real angle in radians.
class Phase {
public:
    Phase() : exact_(true), num_(0), den_(1), radians_(0.0) {}

    static Phase exact(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw std::invalid_argument("Phase: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num %= 2 * den;
        if (num < 0)
            num += 2 * den;
        Phase p;
        p.exact_   = true;
        p.num_     = num;
        p.den_     = den;
        p.radians_ = static_cast<double>(num) / static_cast<double>(den) * kPi;
        return p;
    }

    static Phase real(double radians) {
        Phase p;
        p.exact_   = false;
        p.num_     = 0;
        p.den_     = 1;
        double r   = std::fmod(radians, 2.0 * kPi);
        if (r < 0)
            r += 2.0 * kPi;
        p.radians_ = r;
        return p;
    }

    static Phase zero() { return Phase(); }
    static Phase pi() { return exact(1, 1); }

    bool         is_exact() const { return exact_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double       radians() const { return radians_; }

    bool is_zero() const { return exact_ ? num_ == 0 : radians_ == 0.0; }
    bool is_pauli() const { return exact_ && den_ == 1; }
    bool is_pi() const { return exact_ && den_ == 1 && num_ == 1; }
    // pi/2 or 3pi/2
    bool is_proper_clifford() const {
        return exact_ && den_ == 2 && (num_ == 1 || num_ == 3);
    }
    bool is_clifford() const { return exact_ && (den_ == 1 || den_ == 2); }

    Phase operator+(const Phase& o) const {
        if (exact_ && o.exact_) {
            std::int64_t d = std::lcm(den_, o.den_);
            return exact(num_ * (d / den_) + o.num_ * (d / o.den_), d);
        }
        return real(radians_ + o.radians_);
    }
    Phase operator-() const {
        if (exact_)
            return exact(-num_, den_);
        return real(-radians_);
    }
    Phase operator-(const Phase& o) const { return *this + (-o); }

    bool operator==(const Phase& o) const {
        if (exact_ && o.exact_)
            return num_ == o.num_ && den_ == o.den_;
        return radians_ == o.radians_;
    }
    bool operator!=(const Phase& o) const { return !(*this == o); }

    std::string str() const {
        if (!exact_)
            return std::to_string(radians_) + "rad";
        if (num_ == 0)
            return "0";
        std::string s = (num_ == 1) ? "pi" : std::to_string(num_) + "pi";
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

private:
    bool         exact_;
    std::int64_t num_, den_;
    double       radians_;
};

} // namespace zx
