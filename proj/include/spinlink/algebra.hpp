#pragma once

#include "spinlink/matrix.hpp"
#include "spinlink/scalar.hpp"
#include "spinlink/structure.hpp"

#include <stdexcept>
#include <vector>

namespace spinlink {

/// Element of C (x) H or C (x) O over the internal basis {1, e_1, ..., e_{n-1}}.
/// In this basis both conjugations act coefficientwise; the paper-style basis
/// e_a = (i, e_1, ...) is produced by Algebra::basis().
template <typename R>
struct Element {
    std::vector<Cx<R>> c;

    int dim() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.c == b.c; }
};

using ExactElement = Element<Rational>;

/// Composition-algebra arithmetic over a validated structure table. All
/// operations are pure; Algebra is immutable and safe to share across threads.
class Algebra {
public:
    explicit Algebra(StructureTable table) : table_(std::move(table)), n_(table_.dim()) {}

    static Algebra quaternion() { return Algebra(StructureTable::quaternion()); }
    static Algebra octonion() { return Algebra(StructureTable::octonion()); }

    int dim() const { return n_; }
    const StructureTable& table() const { return table_; }

    template <typename R>
    Element<R> zero() const {
        return Element<R>{std::vector<Cx<R>>(static_cast<size_t>(n_))};
    }
    template <typename R>
    Element<R> unit() const {
        auto e = zero<R>();
        e.c[0] = Cx<R>::one();
        return e;
    }
    /// Internal basis element: index 0 is the unit 1, index k >= 1 is e_k.
    template <typename R>
    Element<R> unit_basis(int k) const {
        check_index(k);
        auto e = zero<R>();
        e.c[static_cast<size_t>(k)] = Cx<R>::one();
        return e;
    }
    /// e_a = (i, e_1, ..., e_{n-1}): the basis whose Gram matrix is eta.
    template <typename R>
    Element<R> basis(int a) const {
        check_index(a);
        auto e = zero<R>();
        e.c[static_cast<size_t>(a)] = a == 0 ? Cx<R>::i() : Cx<R>::one();
        return e;
    }

    template <typename R>
    Element<R> add(const Element<R>& x, const Element<R>& y) const {
        check(x);
        check(y);
        Element<R> r = x;
        for (int k = 0; k < n_; ++k) r.c[k] += y.c[k];
        return r;
    }
    template <typename R>
    Element<R> sub(const Element<R>& x, const Element<R>& y) const {
        check(x);
        check(y);
        Element<R> r = x;
        for (int k = 0; k < n_; ++k) r.c[k] -= y.c[k];
        return r;
    }
    template <typename R>
    Element<R> scale(const Cx<R>& s, const Element<R>& x) const {
        check(x);
        Element<R> r = x;
        for (auto& v : r.c) v *= s;
        return r;
    }

    /// Bilinear product over the structure table; 1 is a two-sided identity.
    template <typename R>
    Element<R> mul(const Element<R>& x, const Element<R>& y) const {
        check(x);
        check(y);
        auto r = zero<R>();
        for (int i = 0; i < n_; ++i) {
            if (x.c[i].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y.c[j].is_zero()) continue;
                const Cx<R> v = x.c[i] * y.c[j];
                if (i == 0)
                    r.c[j] += v;
                else if (j == 0)
                    r.c[i] += v;
                else if (i == j)
                    r.c[0] -= v;
                else {
                    const auto e = table_.mul(i, j);
                    if (e.sign > 0)
                        r.c[e.k] += v;
                    else
                        r.c[e.k] -= v;
                }
            }
        }
        return r;
    }

    /// Complex conjugation: coefficientwise in the internal basis, which
    /// reproduces (c^a e_a)* = -(c^0)* e_0 + (c^i)* e_i on the eta-basis.
    template <typename R>
    Element<R> conj_complex(const Element<R>& x) const {
        check(x);
        Element<R> r = x;
        for (auto& v : r.c) v = v.conj();
        return r;
    }

    /// Quaternionic/octonionic conjugation: keeps the 1-coefficient, negates e_I.
    template <typename R>
    Element<R> conj_quat(const Element<R>& x) const {
        check(x);
        Element<R> r = x;
        for (int k = 1; k < n_; ++k) r.c[k] = -r.c[k];
        return r;
    }

    /// 2<x,y> = x ybar + y xbar; complex bilinear, not sesquilinear. In the
    /// internal basis the symmetrized product collapses to a plain dot
    /// product (the unit and every e_k have inner square +1; the -1 of the
    /// eta-basis comes from e_0 = i). inner_defining() keeps the literal
    /// formula as an independent oracle.
    template <typename R>
    Cx<R> inner(const Element<R>& x, const Element<R>& y) const {
        check(x);
        check(y);
        Cx<R> s{};
        for (int k = 0; k < n_; ++k) s += x.c[k] * y.c[k];
        return s;
    }

    /// The two literal orderings of the defining formula: variant 0 is
    /// (x ybar + y xbar)/2, variant 1 is (xbar y + ybar x)/2.
    template <typename R>
    Cx<R> inner_defining(const Element<R>& x, const Element<R>& y, int variant = 0) const {
        const auto p = variant == 0 ? add(mul(x, conj_quat(y)), mul(y, conj_quat(x)))
                                    : add(mul(conj_quat(x), y), mul(conj_quat(y), x));
        Cx<R> s = p.c[0];
        s *= Cx<R>(R(1) / R(2));
        return s;
    }

    /// (xy)z - x(yz); identically zero on quaternions, alternating on octonions.
    template <typename R>
    Element<R> associator(const Element<R>& x, const Element<R>& y, const Element<R>& z) const {
        return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
    }

    /// Random element with integer coefficients in [lo, hi] (exact mode).
    ExactElement random_element(Rng& rng, long long lo = -3, long long hi = 3) const {
        auto e = zero<Rational>();
        for (auto& v : e.c) v = ExactC(Rational(rng.next_int(lo, hi)), Rational(rng.next_int(lo, hi)));
        return e;
    }

private:
    void check_index(int a) const {
        if (a < 0 || a >= n_) throw std::invalid_argument("algebra: basis index out of range");
    }
    template <typename R>
    void check(const Element<R>& x) const {
        if (x.dim() != n_) throw std::invalid_argument("algebra: element dimension mismatch");
    }

    StructureTable table_;
    int n_;
};

}  // namespace spinlink
