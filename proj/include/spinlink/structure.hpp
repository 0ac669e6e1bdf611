#pragma once

#include <array>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinlink {

/// e_I e_J = sign * e_K for one oriented line of the multiplication table.
struct SignedTriple {
    int i, j, k;
    int sign;
};

/// Multiplication data for the imaginary units of a 4- or 8-dimensional
/// composition algebra: e_I e_J = -delta_IJ + c_IJ^K e_K with signed-triple
/// coefficients. Construction validates the combinatorial shape (antisymmetry,
/// every pair covered exactly once, cyclic closure); the semantic gate is the
/// axiom suite in axioms.hpp.
class StructureTable {
public:
    StructureTable(int dim, const std::vector<SignedTriple>& triples) : dim_(dim) {
        if (dim != 4 && dim != 8) throw std::invalid_argument("structure table: dim must be 4 or 8");
        const int units = dim - 1;
        prod_.assign(static_cast<size_t>(units + 1) * (units + 1), Entry{0, 0});
        for (const auto& t : triples) {
            check_index(t.i);
            check_index(t.j);
            check_index(t.k);
            if (t.i == t.j || t.j == t.k || t.i == t.k)
                throw std::invalid_argument("structure table: triple indices must be distinct");
            if (t.sign != 1 && t.sign != -1)
                throw std::invalid_argument("structure table: sign must be +1 or -1");
            // cyclic closure: e_i e_j = s e_k implies e_j e_k = s e_i, e_k e_i = s e_j
            set(t.i, t.j, t.k, t.sign);
            set(t.j, t.k, t.i, t.sign);
            set(t.k, t.i, t.j, t.sign);
        }
        for (int i = 1; i <= units; ++i)
            for (int j = 1; j <= units; ++j) {
                if (i == j) continue;
                if (at(i, j).k == 0)
                    throw std::invalid_argument("structure table: pair (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") has no product");
            }
        triples_ = canonical_triples();
    }

    int dim() const { return dim_; }

    /// Product of imaginary units e_I e_J for I != J, as (K, sign).
    struct Entry {
        int k;
        int sign;
    };
    Entry mul(int i, int j) const { return at(i, j); }

    /// One positively-oriented representative per line, sorted.
    const std::vector<SignedTriple>& signed_triples() const { return triples_; }

    /// e_i e_j = -delta_ij + eps_ij^l e_l with eps_123 = +1.
    static StructureTable quaternion() { return StructureTable(4, {{1, 2, 3, 1}}); }

    /// Cayley-Dickson doubling of the quaternion table: octonion pairs (a,b)
    /// multiply as (a,b)(c,d) = (ac - d~b, da + bc~) with ~ the quaternion
    /// conjugation; e_4 = (0,1), e_{4+i} = (0, e_i).
    static StructureTable octonion() { return StructureTable(8, octonion_triples()); }

    static std::vector<SignedTriple> octonion_triples() {
        using Q = std::array<int, 4>;
        auto qmul = [](const Q& x, const Q& y) {
            Q r{};
            r[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
            r[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
            r[2] = x[0] * y[2] + x[2] * y[0] + x[3] * y[1] - x[1] * y[3];
            r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
            return r;
        };
        auto qconj = [](const Q& x) { return Q{x[0], -x[1], -x[2], -x[3]}; };
        auto basis = [](int idx) {
            std::array<Q, 2> v{};
            if (idx < 4)
                v[0][idx] = 1;
            else
                v[1][idx - 4] = 1;
            return v;
        };
        std::vector<SignedTriple> out;
        for (int i = 1; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                const auto u = basis(i), v = basis(j);
                const Q left = sub(qmul(u[0], v[0]), qmul(qconj(v[1]), u[1]));
                const Q right = add(qmul(v[1], u[0]), qmul(u[1], qconj(v[0])));
                int k = -1, sign = 0;
                for (int c = 0; c < 4; ++c) {
                    if (left[c] != 0) {
                        k = c;
                        sign = left[c];
                    }
                    if (right[c] != 0) {
                        k = c + 4;
                        sign = right[c];
                    }
                }
                // keep one representative per line; cyclic closure restores the rest
                bool seen = false;
                for (const auto& t : out)
                    seen |= (t.i == i || t.j == i || t.k == i) && (t.i == j || t.j == j || t.k == j) &&
                            (t.i == k || t.j == k || t.k == k);
                if (!seen) out.push_back(sign > 0 ? SignedTriple{i, j, k, 1} : SignedTriple{i, k, j, 1});
            }
        return out;
    }

    /// Text format: lines "I J K sign" (1-based unit indices); '#' comments.
    static StructureTable parse(std::istream& in, int dim) {
        std::vector<SignedTriple> triples;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            SignedTriple t{};
            if (ls >> t.i >> t.j >> t.k >> t.sign) {
                std::string rest;
                if (ls >> rest) throw std::invalid_argument("structure table: trailing tokens: " + rest);
                triples.push_back(t);
            } else {
                std::istringstream blank(line);
                std::string tok;
                if (blank >> tok) throw std::invalid_argument("structure table: malformed line: " + line);
            }
        }
        return StructureTable(dim, triples);
    }

private:
    static std::array<int, 4> add(const std::array<int, 4>& a, const std::array<int, 4>& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    static std::array<int, 4> sub(const std::array<int, 4>& a, const std::array<int, 4>& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }

    void check_index(int i) const {
        if (i < 1 || i >= dim_) throw std::invalid_argument("structure table: unit index out of range");
    }

    Entry& at(int i, int j) { return prod_[static_cast<size_t>(i) * dim_ + j]; }
    const Entry& at(int i, int j) const { return prod_[static_cast<size_t>(i) * dim_ + j]; }

    void set(int i, int j, int k, int sign) {
        auto put = [&](int a, int b, int c, int s) {
            Entry& e = at(a, b);
            if (e.k != 0 && (e.k != c || e.sign != s))
                throw std::invalid_argument("structure table: conflicting products for a unit pair");
            e = Entry{c, s};
        };
        put(i, j, k, sign);
        put(j, i, k, -sign);  // antisymmetry
    }

    std::vector<SignedTriple> canonical_triples() const {
        std::vector<SignedTriple> out;
        for (int i = 1; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j) {
                const Entry e = at(i, j);
                if (e.k > j) out.push_back({i, j, e.k, e.sign});
            }
        return out;
    }

    int dim_;
    std::vector<Entry> prod_;
    std::vector<SignedTriple> triples_;
};

}  // namespace spinlink
