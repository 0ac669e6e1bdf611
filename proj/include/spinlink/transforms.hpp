#pragma once

#include "spinlink/checks.hpp"
#include "spinlink/generators.hpp"
#include "spinlink/matexp.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinlink {

/// Antisymmetric boost/rotation parameters theta_ab = -theta_ba, with a
/// magnitude cap keeping the exponentials well-conditioned.
struct BoostRotationParams {
    std::array<std::array<double, 4>, 4> theta{};
    double cap = 2.0;

    void set(int a, int b, double v) {
        if (std::fabs(v) > cap) throw std::invalid_argument("theta magnitude exceeds cap");
        theta[a][b] = v;
        theta[b][a] = -v;
    }

    static BoostRotationParams random(Rng& rng, double scale = 1.0) {
        BoostRotationParams p;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) p.set(a, b, rng.next_double(-scale, scale));
        return p;
    }

    /// theta^{ab} = eta^{ac} eta^{bd} theta_cd.
    double up(int a, int b) const {
        const double sa = a == 0 ? -1.0 : 1.0;
        const double sb = b == 0 ? -1.0 : 1.0;
        return sa * sb * theta[a][b];
    }
};

/// The three exponentials and their inverses. Inverses are exp(-M), keeping
/// the module solver-free.
struct LambdaTriple {
    FloatMatrix lamL, lamR, lamV;
    FloatMatrix lamLinv, lamRinv, lamVinv;
};

/// Lambda_X = exp(-(i/2) theta^{ab} Sigma_{X|ab}) for X in {L, R, V}.
inline LambdaTriple build_lambdas(const BoostRotationParams& p, const GeneratorSet& gs) {
    const int n = gs.n;
    auto exponent = [&](const std::vector<std::vector<ExactMatrix>>& sig) {
        FloatMatrix x = FloatMatrix::zero(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double t = p.up(a, b);
                if (t == 0.0) continue;
                FloatMatrix s = to_float(sig[a][b]);
                s *= FloatC(0.0, -0.5 * t);
                x += s;
            }
        return x;
    };
    LambdaTriple t;
    for (auto [lam, inv, sig] : {std::tuple{&t.lamL, &t.lamLinv, &gs.sigmaL},
                                 std::tuple{&t.lamR, &t.lamRinv, &gs.sigmaR},
                                 std::tuple{&t.lamV, &t.lamVinv, &gs.sigmaV}}) {
        FloatMatrix x = exponent(*sig);
        *lam = mat_exp(x);
        x *= FloatC(-1.0);
        *inv = mat_exp(x);
    }
    return t;
}

namespace detail {

inline FloatMatrix float_eta(int n) { return to_float(eta_matrix<ExactC>(n)); }

}  // namespace detail

/// The finite transformation laws tying the three exponentials together:
///   (Lambda_V)^a{}_b Gamma^{X|b} = Lambda_X^dag Gamma^{X|a} Lambda_X
///   (Lambda_V^{-1})^b{}_a Gamma_{X|b} = Lambda_X^dag Gamma_{X|a} Lambda_X
inline std::vector<CheckResult> verify_transformation_laws(const LambdaTriple& t,
                                                           const GeneratorSet& gs, double tol) {
    const int n = gs.n;
    double raised = 0, lower = 0;
    for (char side : {'L', 'R'}) {
        const FloatMatrix& lam = side == 'L' ? t.lamL : t.lamR;
        const auto& gam = side == 'L' ? gs.gammaL : gs.gammaR;
        for (int a = 0; a < n; ++a) {
            FloatMatrix lhsU = FloatMatrix::zero(n, n);
            FloatMatrix lhsD = FloatMatrix::zero(n, n);
            for (int b = 0; b < n; ++b) {
                lhsU += t.lamV(a, b) * to_float(gs.gamma_up(side, b));
                lhsD += t.lamVinv(b, a) * to_float(gam[b]);
            }
            const FloatMatrix rhsU = lam.dagger() * to_float(gs.gamma_up(side, a)) * lam;
            const FloatMatrix rhsD = lam.dagger() * to_float(gam[a]) * lam;
            raised = std::max(raised, max_abs_dev(lhsU - rhsU));
            lower = std::max(lower, max_abs_dev(lhsD - rhsD));
        }
    }
    return {
        float_check("transform.vector_law_raised",
                    "(Lambda_V)^a_b Gamma^{X|b} = Lambda^dag Gamma^{X|a} Lambda", raised, tol),
        float_check("transform.vector_law_lowered",
                    "(Lambda_V^-1)^b_a Gamma_{X|b} = Lambda^dag Gamma_{X|a} Lambda", lower, tol),
    };
}

/// Conjugation/transposition structure of the exponentials and the Lorentz
/// property of Lambda_V.
inline std::vector<CheckResult> verify_lambda_identities(const LambdaTriple& t, double tol) {
    const int n = t.lamV.rows();
    const FloatMatrix eta = detail::float_eta(n);
    double conj = std::max(max_abs_dev(t.lamL.conj() - t.lamR), max_abs_dev(t.lamR.conj() - t.lamL));
    double transp = 0;
    for (auto [lam, inv] : {std::pair{&t.lamL, &t.lamLinv}, std::pair{&t.lamR, &t.lamRinv},
                            std::pair{&t.lamV, &t.lamVinv}})
        transp = std::max(transp, max_abs_dev(lam->transpose() - eta * (*inv) * eta));
    const double dag = std::max(max_abs_dev(t.lamL.dagger() - eta * t.lamRinv * eta),
                                max_abs_dev(t.lamR.dagger() - eta * t.lamLinv * eta));
    double vreal = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) vreal = std::max(vreal, std::fabs(t.lamV(r, c).im));
    const double lorentz = max_abs_dev(t.lamV.transpose() * eta * t.lamV - eta);
    return {
        float_check("transform.lambda_complex_conjugation", "Lambda_L* = Lambda_R", conj, tol),
        float_check("transform.lambda_transposition", "Lambda_X^T = eta Lambda_X^-1 eta", transp,
                    tol),
        float_check("transform.lambda_dagger", "Lambda_L^dag = eta Lambda_R^-1 eta (and L<->R)", dag,
                    tol),
        float_check("transform.lambda_v_real", "Lambda_V is real", vreal, tol),
        float_check("transform.lorentz_property", "Lambda_V^T eta Lambda_V = eta", lorentz, tol),
    };
}

/// psi_L^dag eta psi_R under psi_X' = Lambda_X psi_X, the kinetic-form
/// invariance for a linear test field psi(x) = (1 + x^a K_a) chi with
/// partial'_a = (Lambda_V^-1)^b_a partial_b, and the no-eta negative control.
inline std::vector<CheckResult> verify_bilinear_invariants(const GeneratorSet& gs,
                                                           std::uint64_t seed, int seed_count,
                                                           double tol) {
    const int n = gs.n;
    Rng rng(seed);
    double inv = 0, kin = 0;

    auto rand_vec = [&] {
        std::vector<FloatC> v(n);
        for (auto& x : v) x = FloatC(rng.next_double(-1, 1), rng.next_double(-1, 1));
        return v;
    };
    const FloatMatrix eta = detail::float_eta(n);
    const FloatMatrix idm = FloatMatrix::identity(n);

    for (int trial = 0; trial < seed_count; ++trial) {
        const auto p = BoostRotationParams::random(rng, 0.9);
        const auto lam = build_lambdas(p, gs);
        const auto psiL = rand_vec(), psiR = rand_vec();
        const auto psiLp = lam.lamL * psiL, psiRp = lam.lamR * psiR;

        FloatC before{}, after{};
        {
            const auto ebr = eta * psiR, ebrp = eta * psiRp;
            for (int k = 0; k < n; ++k) {
                before += psiL[k].conj() * ebr[k];
                after += psiLp[k].conj() * ebrp[k];
            }
        }
        inv = std::max(inv, cx_abs(after - before));

        for (char side : {'L', 'R'}) {
            const FloatMatrix& lamX = side == 'L' ? lam.lamL : lam.lamR;
            const auto chi = rand_vec();
            std::vector<FloatMatrix> K;
            for (int a = 0; a < n; ++a) {
                FloatMatrix m(n, n);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        m(r, c) = FloatC(rng.next_double(-1, 1), rng.next_double(-1, 1));
                K.push_back(std::move(m));
            }
            std::vector<double> x(n);
            for (auto& v : x) v = rng.next_double(-1, 1);

            FloatMatrix lin = idm;
            for (int a = 0; a < n; ++a) lin += FloatC(x[a]) * K[a];
            const auto psi_at = lin * chi;
            FloatC s0{};
            for (int a = 0; a < n; ++a) {
                const auto gd = to_float(gs.gamma_up(side, a)) * (K[a] * chi);
                for (int k = 0; k < n; ++k) s0 += psi_at[k].conj() * gd[k];
            }

            // transformed field psi'(y) = Lambda psi(LambdaV^-1 y), evaluated at y = LambdaV x
            std::vector<FloatC> y(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) y[a] += lam.lamV(a, b) * FloatC(x[b]);
            std::vector<FloatC> xback(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) xback[a] += lam.lamVinv(a, b) * y[b];
            FloatMatrix linp = idm;
            for (int a = 0; a < n; ++a) linp += xback[a] * K[a];
            const auto psi_p = lamX * (linp * chi);
            FloatC s1{};
            for (int a = 0; a < n; ++a) {
                std::vector<FloatC> dpsi(n);
                for (int b = 0; b < n; ++b) {
                    const auto kb = lamX * (K[b] * chi);
                    for (int k = 0; k < n; ++k) dpsi[k] += lam.lamVinv(b, a) * kb[k];
                }
                const auto gd = to_float(gs.gamma_up(side, a)) * dpsi;
                for (int k = 0; k < n; ++k) s1 += psi_p[k].conj() * gd[k];
            }
            kin = std::max(kin, cx_abs(s1 - s0));
        }
    }

    // negative control: psi_L^dag psi_R without eta, 0.5-rapidity boost
    double negative_control = 0;
    {
        BoostRotationParams p;
        p.set(0, 1, 0.5);
        const auto lam = build_lambdas(p, gs);
        Rng r2(seed ^ 0xabcdefULL);
        std::vector<FloatC> psiL(n), psiR(n);
        for (auto& v : psiL) v = FloatC(r2.next_double(-1, 1), r2.next_double(-1, 1));
        for (auto& v : psiR) v = FloatC(r2.next_double(-1, 1), r2.next_double(-1, 1));
        const auto psiLp = lam.lamL * psiL, psiRp = lam.lamR * psiR;
        FloatC before{}, after{};
        for (int k = 0; k < n; ++k) {
            before += psiL[k].conj() * psiR[k];
            after += psiLp[k].conj() * psiRp[k];
        }
        negative_control = cx_abs(after - before);
    }

    return {
        float_check("transform.bilinear_invariant", "psi_L^dag eta psi_R invariant", inv, tol),
        float_check("transform.kinetic_invariant", "psi^dag Gamma^{X|a} partial_a psi invariant",
                    kin, tol),
        float_check("transform.no_eta_not_invariant",
                    "psi_L^dag psi_R (no eta) varies under a boost", negative_control, 1e-3,
                    Expectation::Fail),
    };
}

/// Group property on commuting parameter planes: Lambda(t) Lambda(t') = Lambda(t+t').
inline std::vector<CheckResult> verify_group_property(const GeneratorSet& gs, std::uint64_t seed,
                                                      double tol) {
    Rng rng(seed);
    double dev = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const int a = static_cast<int>(rng.next_int(0, 2));
        const int b = static_cast<int>(rng.next_int(a + 1, 3));
        BoostRotationParams p1, p2, p12;
        const double t1 = rng.next_double(-0.9, 0.9), t2 = rng.next_double(-0.9, 0.9);
        p1.set(a, b, t1);
        p2.set(a, b, t2);
        p12.set(a, b, t1 + t2);
        const auto l1 = build_lambdas(p1, gs), l2 = build_lambdas(p2, gs),
                   l12 = build_lambdas(p12, gs);
        dev = std::max(dev, max_abs_dev(l1.lamL * l2.lamL - l12.lamL));
        dev = std::max(dev, max_abs_dev(l1.lamR * l2.lamR - l12.lamR));
        dev = std::max(dev, max_abs_dev(l1.lamV * l2.lamV - l12.lamV));
    }
    return {float_check("transform.group_property",
                        "Lambda(t) Lambda(t') = Lambda(t+t') on one plane", dev, tol)};
}

/// The transforms suite at its default tolerances (1e-10 for single
/// identities, 1e-9 for compound expressions), sweeping seeded random theta.
inline std::vector<CheckResult> run_transform_suite(const GeneratorSet& gs, std::uint64_t seed,
                                                    int seed_count = 20) {
    std::vector<CheckResult> out;
    Rng rng(seed);
    double law_raised = 0, law_lowered = 0;
    std::array<double, 5> lam_dev{};
    for (int trial = 0; trial < seed_count; ++trial) {
        const auto p = BoostRotationParams::random(rng, 0.95);
        const auto lam = build_lambdas(p, gs);
        const auto laws = verify_transformation_laws(lam, gs, 1e-9);
        law_raised = std::max(law_raised, std::stod(laws[0].deviation));
        law_lowered = std::max(law_lowered, std::stod(laws[1].deviation));
        const auto ids = verify_lambda_identities(lam, 1e-10);
        for (int k = 0; k < 5; ++k) lam_dev[k] = std::max(lam_dev[k], std::stod(ids[k].deviation));
    }
    const char* ids[5] = {"transform.lambda_complex_conjugation", "transform.lambda_transposition",
                          "transform.lambda_dagger", "transform.lambda_v_real",
                          "transform.lorentz_property"};
    const char* refs[5] = {"Lambda_L* = Lambda_R", "Lambda_X^T = eta Lambda_X^-1 eta",
                           "Lambda_L^dag = eta Lambda_R^-1 eta (and L<->R)", "Lambda_V is real",
                           "Lambda_V^T eta Lambda_V = eta"};
    for (int k = 0; k < 5; ++k) out.push_back(float_check(ids[k], refs[k], lam_dev[k], 1e-10));
    out.push_back(float_check("transform.vector_law_raised",
                              "(Lambda_V)^a_b Gamma^{X|b} = Lambda^dag Gamma^{X|a} Lambda",
                              law_raised, 1e-9));
    out.push_back(float_check("transform.vector_law_lowered",
                              "(Lambda_V^-1)^b_a Gamma_{X|b} = Lambda^dag Gamma_{X|a} Lambda",
                              law_lowered, 1e-9));
    for (auto& c : verify_bilinear_invariants(gs, seed + 1, seed_count, 1e-9)) out.push_back(c);
    for (auto& c : verify_group_property(gs, seed + 2, 1e-10)) out.push_back(c);
    return out;
}

}  // namespace spinlink
