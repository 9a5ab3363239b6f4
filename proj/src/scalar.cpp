#include "liegraph/scalar.hpp"

#include <cmath>
#include <sstream>

namespace liegraph {

Scalar::Scalar(Rat a, Rat b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ == 0 || d_ == 1) {
        // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
        if (d_ == 1) a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    if (b_ == 0) d_ = 0;
}

int Scalar::join(const Scalar& l, const Scalar& r) {
    if (l.d_ == 0) return r.d_;
    if (r.d_ == 0 || l.d_ == r.d_) return l.d_;
    throw field_mismatch("mixing scalars from Q(sqrt(" + std::to_string(l.d_) +
                         ")) and Q(sqrt(" + std::to_string(r.d_) + "))");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    int d = join(*this, o);
    Rat a = a_ * o.a_ + b_ * o.b_ * d;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = (b_ == 0) ? 0 : d;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (b_ == 0) return Scalar(Rat(1) / a_);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2); the norm is nonzero
    // because d is square-free (not a perfect square)
    Rat norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw std::domain_error("degenerate quadratic context (d is a square?)");
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

double Scalar::to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) {
        if (d_ < 0) throw std::domain_error("numeric value of complex-context scalar");
        v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
    }
    return v;
}

std::string Scalar::str() const {
    if (b_ == 0) return rational_str(a_);
    std::ostringstream os;
    if (a_ != 0) os << rational_str(a_) << (b_ > 0 ? "+" : "");
    if (b_ == 1) {
    } else if (b_ == -1) {
        os << "-";
    } else {
        os << rational_str(b_) << "*";
    }
    os << "sqrt(" << d_ << ")";
    return os.str();
}

Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0);
}

std::string rational_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    Int n = numerator(q), d = denominator(q);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

std::optional<Scalar> field_sqrt(const Scalar& s, int d) {
    // solve (x + y sqrt(d))^2 = A + B sqrt(d)
    const Rat& A = s.a();
    const Rat& B = s.b();
    if (B == 0) {
        if (auto r = rational_sqrt(A)) return Scalar(*r);
        if (d > 1) {
            // maybe A = d*y^2
            if (auto y = rational_sqrt(A / d)) return Scalar(Rat(0), *y, d);
        }
        return std::nullopt;
    }
    if (s.d() != d) return std::nullopt;
    // x^2 + d y^2 = A, 2xy = B  =>  x^2 = (A +- sqrt(A^2 - d B^2)) / 2
    auto disc = rational_sqrt(A * A - Rat(d) * B * B);
    if (!disc) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat x2 = (A + Rat(sign) * *disc) / 2;
        if (auto x = rational_sqrt(x2)) {
            if (*x == 0) continue;
            Rat y = B / (2 * *x);
            return Scalar(*x, y, d);
        }
    }
    return std::nullopt;
}

Rat factorial_rat(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

}  // namespace liegraph
