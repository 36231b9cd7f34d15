#pragma once

// Pointwise complex (p,q)-forms over an n-dimensional Hermitian vector
// space. Coefficients are stored against the basis dz^J wedge dzbar^K with
// J, K strictly increasing multi-indices, J-major in the lexicographic
// combination order of combinatorics.hpp.

#include <complex>
#include <deque>
#include <vector>

#include "anomaly/combinatorics.hpp"
#include "anomaly/errors.hpp"

namespace anomaly {

using Complex = std::complex<double>;

struct PointForm {
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<Complex> coeffs;  // size C(n,p)*C(n,q), index iJ*C(n,q)+iK

    PointForm() = default;
    PointForm(int n_, int p_, int q_)
        : n(n_), p(p_), q(q_),
          coeffs(static_cast<std::size_t>(binomial(n_, p_) * binomial(n_, q_)), Complex(0)) {}

    static PointForm one(int n) {
        PointForm f(n, 0, 0);
        f.coeffs[0] = 1.0;
        return f;
    }

    int ncomp() const { return static_cast<int>(coeffs.size()); }

    Complex& at(int iJ, int iK) {
        return coeffs[static_cast<std::size_t>(iJ) * binomial(n, q) + iK];
    }
    Complex at(int iJ, int iK) const {
        return coeffs[static_cast<std::size_t>(iJ) * binomial(n, q) + iK];
    }

    PointForm& operator+=(const PointForm& o) {
        for (int c = 0; c < ncomp(); ++c) coeffs[c] += o.coeffs[c];
        return *this;
    }
    PointForm& operator-=(const PointForm& o) {
        for (int c = 0; c < ncomp(); ++c) coeffs[c] -= o.coeffs[c];
        return *this;
    }
    PointForm& operator*=(Complex s) {
        for (auto& c : coeffs) c *= s;
        return *this;
    }
    friend PointForm operator+(PointForm a, const PointForm& b) { return a += b; }
    friend PointForm operator-(PointForm a, const PointForm& b) { return a -= b; }
    friend PointForm operator*(Complex s, PointForm a) { return a *= s; }

    double sup_norm() const {
        double m = 0;
        for (const auto& c : coeffs) m = std::max(m, std::abs(c));
        return m;
    }
};

// One nonzero structure term of a wedge product in component coordinates.
struct WedgeTerm {
    int ca;    // component of the left factor
    int cb;    // component of the right factor
    int cr;    // component of the product
    int sign;  // +1 or -1
};

struct WedgeTable {
    int n, p1, q1, p2, q2;
    std::vector<WedgeTerm> terms;
};

inline WedgeTable build_wedge_table(int n, int p1, int q1, int p2, int q2) {
    WedgeTable t{n, p1, q1, p2, q2, {}};
    const auto& J1s = combo_table(n, p1);
    const auto& K1s = combo_table(n, q1);
    const auto& J2s = combo_table(n, p2);
    const auto& K2s = combo_table(n, q2);
    const auto& Js = combo_table(n, p1 + p2);
    const auto& Ks = combo_table(n, q1 + q2);
    const int move_sign = ((q1 * p2) & 1) ? -1 : +1;  // dzbar^{K1} past dz^{J2}
    for (int a = 0; a < J1s.size(); ++a)
        for (int b = 0; b < J2s.size(); ++b) {
            Mask J1 = J1s.combos[a], J2 = J2s.combos[b];
            if (J1 & J2) continue;
            int sJ = merge_sign(J1, J2);
            int rJ = Js.rank(J1 | J2);
            for (int c = 0; c < K1s.size(); ++c)
                for (int d = 0; d < K2s.size(); ++d) {
                    Mask K1 = K1s.combos[c], K2 = K2s.combos[d];
                    if (K1 & K2) continue;
                    int sK = merge_sign(K1, K2);
                    int rK = Ks.rank(K1 | K2);
                    t.terms.push_back({a * K1s.size() + c, b * K2s.size() + d,
                                       rJ * Ks.size() + rK, move_sign * sJ * sK});
                }
        }
    return t;
}

inline const WedgeTable& wedge_table(int n, int p1, int q1, int p2, int q2) {
    static std::deque<WedgeTable> cache;  // deque: references stay valid
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (const auto& t : cache)
        if (t.n == n && t.p1 == p1 && t.q1 == q1 && t.p2 == p2 && t.q2 == q2) return t;
    cache.push_back(build_wedge_table(n, p1, q1, p2, q2));
    return cache.back();
}

inline PointForm wedge(const PointForm& a, const PointForm& b) {
    if (a.p + b.p > a.n || a.q + b.q > a.n)
        throw DegreeError("wedge: bidegree overflow");
    PointForm r(a.n, a.p + b.p, a.q + b.q);
    const WedgeTable& t = wedge_table(a.n, a.p, a.q, b.p, b.q);
    for (const auto& w : t.terms)
        r.coeffs[w.cr] += double(w.sign) * a.coeffs[w.ca] * b.coeffs[w.cb];
    return r;
}

// Complex conjugate: swaps bidegree (p,q) -> (q,p) with the sign of the
// basis reordering dzbar^J wedge dz^K -> dz^K wedge dzbar^J.
inline PointForm conj(const PointForm& a) {
    PointForm r(a.n, a.q, a.p);
    const auto& Js = combo_table(a.n, a.p);
    const auto& Ks = combo_table(a.n, a.q);
    const int sign = ((a.p * a.q) & 1) ? -1 : +1;
    for (int iJ = 0; iJ < Js.size(); ++iJ)
        for (int iK = 0; iK < Ks.size(); ++iK)
            r.at(iK, iJ) = double(sign) * std::conj(a.at(iJ, iK));
    return r;
}

// Sup-distance between the form and its conjugate; zero (to roundoff) iff
// the form is real. Only meaningful for p == q.
inline double reality_defect(const PointForm& a) {
    if (a.p != a.q) return a.sup_norm();
    PointForm d = a - conj(a);
    return d.sup_norm();
}

}  // namespace anomaly
