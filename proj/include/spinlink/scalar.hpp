#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace spinlink {

/// Arbitrary-precision rational, the exact-mode scalar backbone.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Canonical "p/q" rendering ("p" when q == 1).
inline std::string rational_str(const Rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& x) { return static_cast<double>(x); }

/// Complex number over a scalar ring R (Rational for exact mode, double for
/// float mode). Mixing modes is a type error, which is the strongest form of
/// the mixed-mode rejection the element contracts ask for.
template <typename R>
struct Cx {
    R re{};
    R im{};

    Cx() = default;
    Cx(R r) : re(std::move(r)) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    static Cx zero() { return {}; }
    static Cx one() { return Cx(R(1)); }
    static Cx i() { return Cx(R(0), R(1)); }

    bool is_zero() const { return re == R(0) && im == R(0); }

    Cx conj() const { return Cx(re, -im); }

    Cx operator-() const { return Cx(-re, -im); }

    Cx& operator+=(const Cx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cx& operator-=(const Cx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cx& operator*=(const Cx& o) {
        const R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend Cx operator+(Cx a, const Cx& b) { return a += b; }
    friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
    friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        const R n = b.re * b.re + b.im * b.im;
        return Cx((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

using ExactC = Cx<Rational>;
using FloatC = Cx<double>;

inline FloatC to_float(const ExactC& x) {
    return FloatC(rational_to_double(x.re), rational_to_double(x.im));
}

/// max(|re|,|im|): exact deviation metric, zero iff the value is zero.
inline Rational abs_dev(const ExactC& x) {
    const Rational a = rational_abs(x.re), b = rational_abs(x.im);
    return a > b ? a : b;
}
inline double abs_dev(const FloatC& x) { return std::max(std::fabs(x.re), std::fabs(x.im)); }

inline double cx_abs(const FloatC& x) { return std::hypot(x.re, x.im); }

inline FloatC cx_exp(const FloatC& x) {
    const double m = std::exp(x.re);
    return FloatC(m * std::cos(x.im), m * std::sin(x.im));
}

template <typename R>
struct ScalarMode;
template <>
struct ScalarMode<Rational> {
    static constexpr const char* name = "exact";
};
template <>
struct ScalarMode<double> {
    static constexpr const char* name = "float";
};

/// Serialization used by the CLI `dump` subcommand: "p/q+r/s i".
inline std::string scalar_str(const ExactC& x) {
    const std::string re = rational_str(x.re);
    const Rational ia = rational_abs(x.im);
    return re + (x.im < 0 ? "-" : "+") + rational_str(ia) + " i";
}

/// Deterministic splitmix64 stream; avoids libstdc++ distribution variance so
/// reports are byte-identical for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long long next_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::uint64_t state_;
};

}  // namespace spinlink
