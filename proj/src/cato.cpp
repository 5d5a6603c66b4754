#include "richardson/cato.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "richardson/nilcox.hpp"

namespace rich {

PWElement::PWElement(Permutation x_, int d_) : x(std::move(x_)), d(d_) {
    if (!is_min_coset_rep(x, CosetSide::PW, d))
        throw std::invalid_argument("PWElement: not a minimal coset representative");
}

std::vector<PWElement> all_pw_elements(int n, int d) {
    std::vector<PWElement> out;
    for (const auto& I : all_subsets(n, d))
        out.push_back(psi_inv(I, n));
    std::sort(out.begin(), out.end());
    return out;
}

Subset psi(const PWElement& x) {
    int n = x.n();
    Permutation t = Permutation::longest(n) * x.x.inverse() * Permutation::longest_parabolic(x.d, n);
    Subset I;
    for (int k = 1; k <= x.d; ++k) I.push_back(t(k));
    std::sort(I.begin(), I.end());
    return I;
}

PWElement psi_inv(const Subset& I, int n) {
    int d = static_cast<int>(I.size());
    Permutation u = min_rep_for_subset(I, n);
    Permutation x = Permutation::longest_parabolic(d, n) * u.inverse() * Permutation::longest(n);
    PWElement e(x, d);
    if (psi(e) != I) throw std::logic_error("psi_inv: round trip failed");
    return e;
}

namespace {

struct Key {
    std::vector<int> x, y;
    int d;
    bool operator<(const Key& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return d < o.d;
    }
};

struct Case {
    int which;  // 1..4 as in the header comment
    PWElement xs, ys;
};

Case classify(const PWElement& x, const PWElement& y, int s) {
    int n = x.n();
    Permutation simple = Permutation::simple(s, n);
    Permutation xs = x.x * simple, ys = y.x * simple;
    if (length(xs) >= length(x.x)) throw std::logic_error("classify: s is not a descent of x");
    PWElement xse(xs, x.d);  // descents of minimal reps stay minimal
    if (length(ys) < length(y.x)) return {1, xse, PWElement(ys, x.d)};
    if (!is_min_coset_rep(ys, CosetSide::PW, x.d)) return {2, xse, PWElement()};
    PWElement yse(ys, x.d);
    if (bruhat_leq(ys, xs)) return {3, xse, yse};
    return {4, xse, yse};
}

BiLaurent mixpol_case(const Case& c, const BiLaurent& pxs_y, const BiLaurent& pxs_ys) {
    const BiLaurent vinv_t = BiLaurent::monomial(1, -1, 1);
    const BiLaurent v = BiLaurent::monomial(1, 1, 0);
    const BiLaurent v_tinv = BiLaurent::monomial(1, 1, -1);
    switch (c.which) {
        case 1: return pxs_ys;
        case 2: return vinv_t * pxs_y;
        case 3: return vinv_t * pxs_y - v_tinv * pxs_y + pxs_ys;
        default: return (vinv_t + v) * pxs_y + pxs_ys;
    }
}

BiLaurent mixpol_rec(const PWElement& x, const PWElement& y, std::map<Key, BiLaurent>& memo) {
    if (x.x == y.x) return BiLaurent::one();
    if (!bruhat_leq(y.x, x.x)) return BiLaurent::zero();
    Key key{x.x.images(), y.x.images(), x.d};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto ds = right_descents(x.x);
    if (ds.empty()) throw std::logic_error("mixpol_lie: x > y but x has no descent");
    Case c = classify(x, y, ds.front());
    BiLaurent pxs_y = (c.which == 1) ? BiLaurent::zero() : mixpol_rec(c.xs, y, memo);
    BiLaurent pxs_ys = (c.which == 2) ? BiLaurent::zero() : mixpol_rec(c.xs, c.ys, memo);
    BiLaurent r = mixpol_case(c, pxs_y, pxs_ys);
    memo.emplace(key, r);
    return r;
}

std::map<Key, BiLaurent>& memo_table() {
    static std::map<Key, BiLaurent> table;
    return table;
}
std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

BiLaurent mixpol_lie(const PWElement& x, const PWElement& y) {
    if (x.n() != y.n() || x.d != y.d) throw std::invalid_argument("mixpol_lie: rank mismatch");
    std::lock_guard<std::mutex> lock(memo_mutex());
    return mixpol_rec(x, y, memo_table());
}

std::map<int, long long> shelton_dims(const PWElement& x, const PWElement& y) {
    if (x.x == y.x) return {{0, 1}};
    if (!bruhat_leq(y.x, x.x)) return {};
    auto ds = right_descents(x.x);
    Case c = classify(x, y, ds.front());
    auto exy = [](const std::map<int, long long>& m, int r) {
        auto it = m.find(r);
        return it == m.end() ? 0LL : it->second;
    };
    std::map<int, long long> out;
    if (c.which == 1) return shelton_dims(c.xs, c.ys);
    auto pxs_y = shelton_dims(c.xs, y);
    if (c.which == 2) {
        for (const auto& [r, e] : pxs_y) out[r + 1] = e;
        return out;
    }
    auto pxs_ys = shelton_dims(c.xs, c.ys);
    int lo = 0, hi = 0;
    for (const auto& [r, e] : pxs_y) { lo = std::min(lo, r - 1); hi = std::max(hi, r + 1); }
    for (const auto& [r, e] : pxs_ys) { lo = std::min(lo, r); hi = std::max(hi, r); }
    for (int r = lo; r <= hi; ++r) {
        long long e = (c.which == 3)
                          ? exy(pxs_y, r - 1) - exy(pxs_y, r + 1) + exy(pxs_ys, r)
                          : exy(pxs_y, r - 1) + exy(pxs_y, r) + exy(pxs_ys, r);
        if (e < 0) throw std::logic_error("shelton_dims: negative intermediate dimension");
        if (e != 0) out[r] = e;
    }
    return out;
}

CrosscheckReport crosscheck(const PWElement& x, const PWElement& y) {
    CrosscheckReport rep;
    int L = length(x.x) - length(y.x);
    BiLaurent lie = mixpol_lie(x, y);
    // v -> u^-1, then multiply by (u t)^L
    rep.lie_side = lie.substitute(1, 1, -1, 0) * BiLaurent::monomial(1, L, L);
    if (bruhat_leq(y.x, x.x)) {
        Shape sh(x.n(), psi(x), psi(y));
        BiLaurent geom = model(sh).cohomology().mixpol();
        rep.geom_side = geom.substitute(1, 1, 2, 0);  // q -> u^2
    } else {
        rep.geom_side = BiLaurent::zero();
    }
    rep.equal = rep.lie_side == rep.geom_side;
    return rep;
}

GJReport gj_report(const PWElement& x, const PWElement& y) {
    GJReport rep;
    if (bruhat_leq(y.x, x.x)) {
        Shape sh(x.n(), psi(x), psi(y));
        rep.point_count = model(sh).cohomology().mixpol().eval_t(-1);
    }
    BiLaurent lie = mixpol_lie(x, y);
    BiLaurent profile = lie.substitute(1, 1, 0, 0);  // v -> 1, leaves t
    for (const auto& [e, c] : profile.terms()) rep.ext_dims[e.second] = c;
    int L = length(x.x) - length(y.x);
    rep.asymmetric = false;
    for (const auto& [e, c] : rep.point_count.terms()) {
        long long ext = 0;
        auto it = rep.ext_dims.find(L - e.first);
        if (it != rep.ext_dims.end()) ext = it->second;
        if (std::abs(c) != ext) rep.asymmetric = true;
    }
    for (const auto& [r, e] : rep.ext_dims)
        if (rep.point_count.coeff(L - r, 0) == 0 && e != 0) rep.asymmetric = true;
    return rep;
}

namespace {

bool descent_independent_rec(const PWElement& x, const PWElement& y,
                             std::map<Key, BiLaurent>& memo, std::map<Key, char>& done) {
    if (x.x == y.x || !bruhat_leq(y.x, x.x)) return true;
    Key key{x.x.images(), y.x.images(), x.d};
    if (done.count(key)) return true;
    done[key] = 1;
    BiLaurent canonical = mixpol_rec(x, y, memo);
    for (int s : right_descents(x.x)) {
        Case c = classify(x, y, s);
        BiLaurent pxs_y = (c.which == 1) ? BiLaurent::zero() : mixpol_rec(c.xs, y, memo);
        BiLaurent pxs_ys = (c.which == 2) ? BiLaurent::zero() : mixpol_rec(c.xs, c.ys, memo);
        if (mixpol_case(c, pxs_y, pxs_ys) != canonical) return false;
        if (!descent_independent_rec(c.xs, y, memo, done)) return false;
        if (c.which != 2 && !descent_independent_rec(c.xs, c.ys, memo, done)) return false;
    }
    return true;
}

}  // namespace

bool mixpol_descent_independent(const PWElement& x, const PWElement& y) {
    std::lock_guard<std::mutex> lock(memo_mutex());
    std::map<Key, char> done;
    return descent_independent_rec(x, y, memo_table(), done);
}

}  // namespace rich
