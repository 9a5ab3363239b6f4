#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace liegraph {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when scalars from incompatible quadratic-field contexts are mixed.
struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact element of Q(sqrt(d)): value = a + b*sqrt(d) with a, b rational and d
/// a fixed square-free integer per algebra context.  d == 0 encodes a plain
/// rational (b is forced to zero), so rational scalars combine freely with any
/// context.  d may be negative (d == -1 gives Q(i)); file input is restricted
/// to d >= 0.
class Scalar {
  public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long v) : a_(v), b_(0), d_(0) {}          // NOLINT: implicit by design
    Scalar(const Rat& a) : a_(a), b_(0), d_(0) {}    // NOLINT
    Scalar(Rat a, Rat b, int d);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    int d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && (l.b_ == 0 || l.d_ == r.d_);
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    Scalar inverse() const;

    /// Numeric value; requires d >= 0.
    double to_double() const;

    std::string str() const;

  private:
    // merges contexts, throws field_mismatch on conflict
    static int join(const Scalar& l, const Scalar& r);

    Rat a_, b_;
    int d_;
};

Rat parse_rational(const std::string& s);
std::string rational_str(const Rat& q);

/// Exact square root of a nonnegative rational, if it exists.
std::optional<Rat> rational_sqrt(const Rat& q);

/// Exact square root of s inside Q(sqrt(d)); d is the target context.
std::optional<Scalar> field_sqrt(const Scalar& s, int d);

Rat factorial_rat(int n);

}  // namespace liegraph
