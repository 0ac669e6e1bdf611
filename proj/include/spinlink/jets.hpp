#pragma once

#include "spinlink/scalar.hpp"

#include <array>

namespace spinlink {

/// Forward-mode first-order jet: a value plus its four spacetime partials.
/// Spacetime derivatives computed through these are exact (no discretization
/// error), which is what keeps the gauge-variation tolerances tight.
struct Jet {
    FloatC v{};
    std::array<FloatC, 4> d{};

    Jet() = default;
    Jet(FloatC value) : v(value) {}
    Jet(double value) : v(FloatC(value)) {}

    /// Coordinate jet: value x_mu, unit derivative in slot mu.
    static Jet coordinate(double x, int mu) {
        Jet j(x);
        j.d[mu] = FloatC(1.0);
        return j;
    }

    Jet conj() const {
        Jet j;
        j.v = v.conj();
        for (int m = 0; m < 4; ++m) j.d[m] = d[m].conj();
        return j;
    }

    Jet operator-() const {
        Jet j;
        j.v = -v;
        for (int m = 0; m < 4; ++m) j.d[m] = -d[m];
        return j;
    }

    Jet& operator+=(const Jet& o) {
        v += o.v;
        for (int m = 0; m < 4; ++m) d[m] += o.d[m];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v -= o.v;
        for (int m = 0; m < 4; ++m) d[m] -= o.d[m];
        return *this;
    }
    Jet& operator*=(const Jet& o) {
        for (int m = 0; m < 4; ++m) d[m] = d[m] * o.v + v * o.d[m];
        v *= o.v;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
};

/// exp of a jet-valued complex function.
inline Jet jet_exp(const Jet& x) {
    Jet j;
    j.v = cx_exp(x.v);
    for (int m = 0; m < 4; ++m) j.d[m] = j.v * x.d[m];
    return j;
}

/// First-order variation dual: value plus d/dt at t = 0 of a one-parameter
/// family. Wraps any ring with +,-,*,conj (double scalars or jets).
template <typename T>
struct Var {
    T v{};
    T dv{};

    Var() = default;
    Var(T value) : v(std::move(value)) {}
    Var(T value, T delta) : v(std::move(value)), dv(std::move(delta)) {}

    Var conj() const { return Var(v.conj(), dv.conj()); }
    Var operator-() const { return Var(-v, -dv); }

    Var& operator+=(const Var& o) {
        v += o.v;
        dv += o.dv;
        return *this;
    }
    Var& operator-=(const Var& o) {
        v -= o.v;
        dv -= o.dv;
        return *this;
    }
    Var& operator*=(const Var& o) {
        dv = dv * o.v + v * o.dv;
        v *= o.v;
        return *this;
    }

    friend Var operator+(Var a, const Var& b) { return a += b; }
    friend Var operator-(Var a, const Var& b) { return a -= b; }
    friend Var operator*(Var a, const Var& b) { return a *= b; }
};

/// FloatC-compatible conj for use in generic code.
inline FloatC ring_conj(const FloatC& x) { return x.conj(); }
inline Jet ring_conj(const Jet& x) { return x.conj(); }
template <typename T>
Var<T> ring_conj(const Var<T>& x) {
    return x.conj();
}

}  // namespace spinlink
