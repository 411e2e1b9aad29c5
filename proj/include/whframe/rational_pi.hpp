#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace whframe {

// Thrown on malformed user input (set literals, expressions, CLI values).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two internal computation routes disagree beyond tolerance.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact rational multiple of pi: value = (num/den)*pi.
/// Stored in lowest terms, den >= 1, sign carried by num. All arithmetic
/// and comparisons are exact, so interval algebra built on top of this
/// type needs no tolerances.
class RationalPi {
  public:
    constexpr RationalPi() : num_(0), den_(1) {}

    RationalPi(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw InputError("RationalPi: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    static RationalPi integer(std::int64_t n) { return RationalPi(n, 1); }
    static RationalPi zero() { return RationalPi(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    /// Numeric value num/den * pi.
    double value() const;

    RationalPi operator-() const { return RationalPi(-num_, den_); }

    RationalPi operator+(const RationalPi& o) const {
        return RationalPi(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalPi operator-(const RationalPi& o) const {
        return RationalPi(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    /// Scale by an integer (used for measure sums and 2*pi*n shifts).
    RationalPi times(std::int64_t k) const { return RationalPi(num_ * k, den_); }

    friend bool operator==(const RationalPi& a, const RationalPi& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalPi& a, const RationalPi& b) { return !(a == b); }
    friend bool operator<(const RationalPi& a, const RationalPi& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const RationalPi& a, const RationalPi& b) { return b < a; }
    friend bool operator<=(const RationalPi& a, const RationalPi& b) { return !(b < a); }
    friend bool operator>=(const RationalPi& a, const RationalPi& b) { return !(a < b); }

    /// Reduction mod 2*pi: returns (residue in [0, 2pi), n) with
    /// *this == residue + 2*pi*n exactly.
    std::pair<RationalPi, std::int64_t> tau_2pi() const {
        // this/(2pi) = num/(2*den); floor division with sign handling.
        std::int64_t n = floor_div(num_, 2 * den_);
        RationalPi residue = *this - RationalPi(2 * n, 1);
        return {residue, n};
    }

    /// Display form: "0", "pi", "-pi", "3pi", "5/2pi", "-7/4pi".
    std::string str() const;

  private:
    void reduce() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace whframe
