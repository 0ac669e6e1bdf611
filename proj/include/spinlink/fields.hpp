#pragma once

#include "spinlink/jets.hpp"
#include "spinlink/scalar.hpp"

#include <array>

namespace spinlink {

/// Couplings, charges and masses entering the fermion Lagrangian.
struct CouplingConfig {
    double g = 0.6;
    double gprime = 0.35;
    double tL = 0.5;
    double tR = -0.5;
    double yL = 1.0;
    double yR = 1.0;
    FloatC mass{1.0, 0.5};  // m = m1 + i m2
    double hbar = 1.0;
};

/// Built-in parametrized smooth field family with seeded random coefficients.
///
/// psi_X(x)      = (p_c + q_{c mu} x^mu) exp(i k.x), componentwise
/// e^mu{}_a(x)   = delta^mu_a + alpha + beta.x   (diagonally dominant on [-1,1]^4)
/// omega_mu^{ab} = antisymmetric const + linear
/// W^i_mu, B_mu  = const + linear
///
/// Evaluation goes through first-order jets, so spacetime derivatives are
/// exact. Coefficients are public: tests zero out or overwrite sectors to
/// build the degenerate configurations they need.
struct FieldConfiguration {
    std::array<std::array<FloatC, 4>, 2> p{};                  // [side][comp]
    std::array<std::array<std::array<FloatC, 4>, 4>, 2> q{};   // [side][comp][mu]
    std::array<std::array<double, 4>, 2> k{};                  // [side][mu]
    std::array<std::array<double, 4>, 4> alpha{};              // [mu][a]
    std::array<std::array<std::array<double, 4>, 4>, 4> beta{};  // [mu][a][nu]
    std::array<std::array<std::array<double, 4>, 4>, 4> w0{};  // [mu][a][b], antisym in ab
    std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4> w1{};  // [mu][a][b][nu]
    std::array<std::array<double, 4>, 3> W0{};                 // [i][mu]
    std::array<std::array<std::array<double, 4>, 4>, 3> W1{};  // [i][mu][nu]
    std::array<double, 4> B0{};
    std::array<std::array<double, 4>, 4> B1{};                 // [mu][nu]

    static FieldConfiguration random(std::uint64_t seed) {
        FieldConfiguration fc;
        Rng rng(seed);
        auto u = [&](double s) { return s * rng.next_double(-1, 1); };
        for (int side = 0; side < 2; ++side) {
            for (int c = 0; c < 4; ++c) {
                fc.p[side][c] = FloatC(u(1), u(1));
                for (int mu = 0; mu < 4; ++mu) fc.q[side][c][mu] = FloatC(u(0.5), u(0.5));
            }
            for (int mu = 0; mu < 4; ++mu) fc.k[side][mu] = u(1);
        }
        for (int mu = 0; mu < 4; ++mu)
            for (int a = 0; a < 4; ++a) {
                fc.alpha[mu][a] = u(0.03);
                for (int nu = 0; nu < 4; ++nu) fc.beta[mu][a][nu] = u(0.03);
            }
        for (int mu = 0; mu < 4; ++mu)
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    const double c0 = u(0.5);
                    fc.w0[mu][a][b] = c0;
                    fc.w0[mu][b][a] = -c0;
                    for (int nu = 0; nu < 4; ++nu) {
                        const double c1 = u(0.5);
                        fc.w1[mu][a][b][nu] = c1;
                        fc.w1[mu][b][a][nu] = -c1;
                    }
                }
        for (int i = 0; i < 3; ++i)
            for (int mu = 0; mu < 4; ++mu) {
                fc.W0[i][mu] = u(0.5);
                for (int nu = 0; nu < 4; ++nu) fc.W1[i][mu][nu] = u(0.5);
            }
        for (int mu = 0; mu < 4; ++mu) {
            fc.B0[mu] = u(0.5);
            for (int nu = 0; nu < 4; ++nu) fc.B1[mu][nu] = u(0.5);
        }
        return fc;
    }

    void zero_gauge_fields() {
        W0 = {};
        W1 = {};
        B0 = {};
        B1 = {};
    }
    void zero_spin_connection() {
        w0 = {};
        w1 = {};
    }
    void identity_vierbein() {
        alpha = {};
        beta = {};
    }
    void zero_psi(int side) {
        p[side] = {};
        q[side] = {};
        k[side] = {};
    }

    // ---- jet evaluation ----------------------------------------------------

    static std::array<Jet, 4> jet_point(const std::array<double, 4>& x) {
        return {Jet::coordinate(x[0], 0), Jet::coordinate(x[1], 1), Jet::coordinate(x[2], 2),
                Jet::coordinate(x[3], 3)};
    }

    std::array<Jet, 4> psi(int side, const std::array<Jet, 4>& xj) const {
        Jet phase;  // i k.x
        for (int mu = 0; mu < 4; ++mu) {
            Jet t = xj[mu];
            t *= Jet(FloatC(0.0, k[side][mu]));
            phase += t;
        }
        const Jet wave = jet_exp(phase);
        std::array<Jet, 4> out;
        for (int c = 0; c < 4; ++c) {
            Jet poly(p[side][c]);
            for (int mu = 0; mu < 4; ++mu) poly += Jet(q[side][c][mu]) * xj[mu];
            out[c] = poly * wave;
        }
        return out;
    }

    /// e^mu{}_a as a jet matrix; invertible on [-1,1]^4 by diagonal dominance.
    std::array<std::array<Jet, 4>, 4> vierbein(const std::array<Jet, 4>& xj) const {
        std::array<std::array<Jet, 4>, 4> e;
        for (int mu = 0; mu < 4; ++mu)
            for (int a = 0; a < 4; ++a) {
                Jet v(FloatC((mu == a ? 1.0 : 0.0) + alpha[mu][a]));
                for (int nu = 0; nu < 4; ++nu) v += Jet(FloatC(beta[mu][a][nu])) * xj[nu];
                e[mu][a] = v;
            }
        return e;
    }

    Jet spin_connection(int mu, int a, int b, const std::array<Jet, 4>& xj) const {
        Jet v(FloatC(w0[mu][a][b]));
        for (int nu = 0; nu < 4; ++nu) v += Jet(FloatC(w1[mu][a][b][nu])) * xj[nu];
        return v;
    }

    Jet W(int i, int mu, const std::array<Jet, 4>& xj) const {
        Jet v(FloatC(W0[i][mu]));
        for (int nu = 0; nu < 4; ++nu) v += Jet(FloatC(W1[i][mu][nu])) * xj[nu];
        return v;
    }

    Jet B(int mu, const std::array<Jet, 4>& xj) const {
        Jet v(FloatC(B0[mu]));
        for (int nu = 0; nu < 4; ++nu) v += Jet(FloatC(B1[mu][nu])) * xj[nu];
        return v;
    }
};

/// Affine scalar parameter field eps(x) = c0 + c1.x for gauge variations.
struct AffineField {
    double c0 = 0;
    std::array<double, 4> c1{};

    static AffineField constant(double v) { return {v, {}}; }

    static AffineField random(Rng& rng, double scale = 0.5) {
        AffineField f;
        f.c0 = rng.next_double(-scale, scale);
        for (auto& c : f.c1) c = rng.next_double(-scale, scale);
        return f;
    }

    Jet eval(const std::array<Jet, 4>& xj) const {
        Jet v(FloatC(c0));
        for (int nu = 0; nu < 4; ++nu) v += Jet(FloatC(c1[nu])) * xj[nu];
        return v;
    }
};

}  // namespace spinlink
