#pragma once

#include <map>

#include "richardson/laurent.hpp"
#include "richardson/perm.hpp"
#include "richardson/shapes.hpp"

namespace rich {

/// Minimal length representative of a coset in W_P \ W, the labels of
/// parabolic Verma modules. x is an element of S_n with x^-1 in W^P for
/// W_P = S_d x S_{n-d}.
struct PWElement {
    Permutation x;
    int d = 0;

    PWElement() = default;
    PWElement(Permutation x_, int d_);
    int n() const { return x.size(); }
    bool operator<(const PWElement& o) const { return x < o.x; }
    bool operator==(const PWElement& o) const { return x == o.x && d == o.d; }
};

/// All PW-minimal representatives for W_P = S_d x S_{n-d}.
std::vector<PWElement> all_pw_elements(int n, int d);

/// The order reversing dictionary psi(x) = (w_0 x^-1 w_P)({1..d}) between
/// Verma labels and Grassmannian fixed points.
Subset psi(const PWElement& x);

/// Inverse of psi: the PW element w_P u_I^-1 w_0 for u_I = min_rep(I).
PWElement psi_inv(const Subset& I, int n);

/// Bigraded Poincare polynomial of Ext(Delta_x, Delta_y) in (v, t):
/// 1 if x = y, 0 unless x >= y, else recursion on a right descent s of x:
///   y > ys            : P(xs, ys)
///   ys not PW-minimal : v^-1 t P(xs, y)
///   ys <= xs          : v^-1 t P(xs, y) - v t^-1 P(xs, y) + P(xs, ys)
///   otherwise         : (v^-1 t + v) P(xs, y) + P(xs, ys)
/// The third case subtracts the part killed by the connecting maps; it is
/// forced by Shelton's dimension recursion and is invisible in the other
/// cases where the differential vanishes. Memoized; the result does not
/// depend on the chosen descent.
BiLaurent mixpol_lie(const PWElement& x, const PWElement& y);

/// Shelton's recursion for e(x,y)^r = dim Ext^r, as printed (four cases).
std::map<int, long long> shelton_dims(const PWElement& x, const PWElement& y);

struct CrosscheckReport {
    bool equal = false;
    BiLaurent lie_side;   // (u t)^{l(x)-l(y)} mixpol_lie[v -> u^-1], in (u, t)
    BiLaurent geom_side;  // mixPol(H(model(psi(x), psi(y))))[q -> u^2]
};

/// Verifies the translation between Verma extensions and Richardson
/// cohomology in the common variables (u, t) with q = u^2.
CrosscheckReport crosscheck(const PWElement& x, const PWElement& y);

struct GJReport {
    BiLaurent point_count;              // eval_t(geometric mixPol, -1), in q
    std::map<int, long long> ext_dims;  // Ext profile, mixpol_lie at v = 1
    bool asymmetric = false;            // |[q^a] point_count| != ext_dims[L-a] somewhere
};

/// The two specializations of the bigraded polynomial side by side; their
/// mismatch is the failure of the naive identification of point-count and
/// Ext-dimension data.
GJReport gj_report(const PWElement& x, const PWElement& y);

/// Verifies, recursively through the whole memo tree, that every right
/// descent choice yields the same polynomial.
bool mixpol_descent_independent(const PWElement& x, const PWElement& y);

}  // namespace rich
