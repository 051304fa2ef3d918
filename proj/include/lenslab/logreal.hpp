#ifndef LENSLAB_LOGREAL_HPP
#define LENSLAB_LOGREAL_HPP

#include <cmath>
#include <limits>

#include "lenslab/errors.hpp"

namespace lenslab {

// Nonnegative real carried as its natural logarithm.  Multiplication,
// division, powers and comparisons are exact in the log domain; sums and
// differences go through log1p/expm1 so that x +- y keeps full relative
// precision even when the magnitudes are astronomically far apart.
// Zero is log_value == -inf.
class LogReal {
public:
    LogReal() : log_(-std::numeric_limits<double>::infinity()) {}

    static LogReal from_log(double log_value) { return LogReal(log_value); }

    static LogReal from_double(double v) {
        if (v < 0.0) throw ParameterError("LogReal: negative value");
        return LogReal(std::log(v));
    }

    double log() const { return log_; }

    // Saturates to +inf beyond double range.
    double to_double() const { return std::exp(log_); }

    bool is_zero() const { return std::isinf(log_) && log_ < 0.0; }

    friend LogReal operator*(LogReal a, LogReal b) { return LogReal(a.log_ + b.log_); }
    friend LogReal operator/(LogReal a, LogReal b) { return LogReal(a.log_ - b.log_); }

    LogReal pow(double e) const { return LogReal(log_ * e); }

    friend LogReal operator+(LogReal a, LogReal b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const double hi = std::max(a.log_, b.log_), lo = std::min(a.log_, b.log_);
        return LogReal(hi + std::log1p(std::exp(lo - hi)));
    }

    // a - b for a >= b; throws on a < b.
    friend LogReal operator-(LogReal a, LogReal b) {
        if (b.is_zero()) return a;
        if (b.log_ > a.log_) throw ParameterError("LogReal: negative difference");
        if (b.log_ == a.log_) return LogReal();
        return LogReal(a.log_ + std::log(-std::expm1(b.log_ - a.log_)));
    }

    friend bool operator<(LogReal a, LogReal b) { return a.log_ < b.log_; }
    friend bool operator>(LogReal a, LogReal b) { return a.log_ > b.log_; }
    friend bool operator<=(LogReal a, LogReal b) { return a.log_ <= b.log_; }
    friend bool operator>=(LogReal a, LogReal b) { return a.log_ >= b.log_; }

private:
    explicit LogReal(double log_value) : log_(log_value) {}

    double log_;
};

// log(e^a + e^b), stable.
inline double log_add(double a, double b) {
    if (std::isinf(a) && a < 0.0) return b;
    if (std::isinf(b) && b < 0.0) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// log(e^a - e^b) for a > b; -inf when a == b.
inline double log_sub(double a, double b) {
    if (std::isinf(b) && b < 0.0) return a;
    if (b >= a) {
        if (b == a) return -std::numeric_limits<double>::infinity();
        throw ParameterError("log_sub: negative difference");
    }
    return a + std::log(-std::expm1(b - a));
}

} // namespace lenslab

#endif
