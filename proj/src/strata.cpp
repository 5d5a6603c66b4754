#include "richardson/strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace rich {

namespace {

int index_of(const Subset& S, int x) {
    auto it = std::lower_bound(S.begin(), S.end(), x);
    if (it != S.end() && *it == x) return static_cast<int>(it - S.begin()) + 1;
    return 0;
}

}  // namespace

std::vector<StratumDescriptor> gauss_strata(const Shape& sh) {
    std::vector<StratumDescriptor> out;
    if (!sh.comparable()) return out;
    int dim = sh.dimension();
    for (const auto& w : wle_set(sh)) {
        int alpha = 0;
        for (int k = 1; k <= sh.d; ++k)
            if (sh.I[static_cast<size_t>(w(k)) - 1] != sh.J[static_cast<size_t>(k) - 1]) ++alpha;
        out.push_back({w, alpha, dim - alpha - length(w), DecompositionKind::Gauss});
    }
    return out;
}

std::vector<StratumDescriptor> deodhar_strata(const Shape& sh) {
    std::vector<StratumDescriptor> out;
    if (!sh.comparable()) return out;
    int dim = sh.dimension();
    int common = 0;
    for (int x : sh.I)
        if (index_of(sh.J, x)) ++common;
    int alpha = sh.d - common;
    for (const auto& w : weq_set(sh)) {
        Permutation winv = w.inverse();
        int pairs = 0;
        for (int k = 1; k <= sh.d; ++k) {
            int ik = sh.I[static_cast<size_t>(k) - 1];
            int top = sh.J[static_cast<size_t>(winv(k)) - 1];
            for (int kp = 1; kp <= sh.d; ++kp) {
                int jkp = sh.J[static_cast<size_t>(kp) - 1];
                if (ik < jkp && jkp < top) ++pairs;
            }
        }
        out.push_back({w, alpha, dim - alpha - pairs + length(w), DecompositionKind::Deodhar});
    }
    return out;
}

BiLaurent point_count_poly(const std::vector<StratumDescriptor>& strata) {
    // Gm contributes q t^2 + t, A^1 contributes q t^2.
    BiLaurent gm = BiLaurent::monomial(1, 1, 2) + BiLaurent::monomial(1, 0, 1);
    BiLaurent a1 = BiLaurent::monomial(1, 1, 2);
    BiLaurent total;
    for (const auto& s : strata) total += gm.pow(s.alpha) * a1.pow(s.beta);
    return total;
}

int basechange_rank(const Shape& sh) {
    int r = 0;
    for (int l = 1; l <= sh.n; ++l) {
        if (index_of(sh.I, l) || index_of(sh.J, l)) continue;
        for (int k = 1; k <= sh.d; ++k)
            if (sh.I[static_cast<size_t>(k) - 1] < l && l < sh.J[static_cast<size_t>(k) - 1]) ++r;
    }
    return r;
}

namespace {

std::vector<int> common_columns(const Shape& sh) {
    std::vector<int> out;
    for (int x : sh.I)
        if (index_of(sh.J, x)) out.push_back(x);
    return out;
}

// Remove the matched pair at common column c = i_k = j_{k'}: row k leaves I,
// row k' leaves J, ambient column c disappears.
std::pair<Shape, int> remove_common(const Shape& sh, int c) {
    int k = index_of(sh.I, c), kp = index_of(sh.J, c);
    if (k == 0 || kp == 0) throw std::invalid_argument("remove_common: not a common column");
    Subset I2, J2;
    for (int x : sh.I)
        if (x != c) I2.push_back(x > c ? x - 1 : x);
    for (int x : sh.J)
        if (x != c) J2.push_back(x > c ? x - 1 : x);
    return {Shape(sh.n - 1, std::move(I2), std::move(J2)), k - kp};
}

}  // namespace

DisjointifyResult disjointify(const Shape& sh) {
    Shape cur = sh;
    int rank = 0;
    for (auto cols = common_columns(cur); !cols.empty(); cols = common_columns(cur)) {
        auto [next, r] = remove_common(cur, cols.front());
        rank += r;
        cur = next;
    }
    return {cur, rank};
}

DisjointifyResult disjointify_with_order(const Shape& sh, const std::vector<int>& removal_order) {
    Shape cur = sh;
    int rank = 0;
    for (int pos : removal_order) {
        auto cols = common_columns(cur);
        if (pos < 0 || pos >= static_cast<int>(cols.size()))
            throw std::invalid_argument("disjointify_with_order: bad position");
        auto [next, r] = remove_common(cur, cols[static_cast<size_t>(pos)]);
        rank += r;
        cur = next;
    }
    if (!common_columns(cur).empty())
        throw std::invalid_argument("disjointify_with_order: incomplete order");
    return {cur, rank};
}

Permutation restrict_weq_element(const Shape& sh, const Permutation& w) {
    // Matched pairs i_k = j_{k'} have w(k') = k; delete position k' and value
    // k, then renumber both order-preservingly.
    std::vector<char> drop_pos(static_cast<size_t>(sh.d) + 1, 0);
    std::vector<char> drop_val(static_cast<size_t>(sh.d) + 1, 0);
    for (int c : common_columns(sh)) {
        int k = index_of(sh.I, c), kp = index_of(sh.J, c);
        if (w(kp) != k)
            throw std::invalid_argument("restrict_weq_element: w violates the equality condition");
        drop_pos[static_cast<size_t>(kp)] = 1;
        drop_val[static_cast<size_t>(k)] = 1;
    }
    std::vector<int> val_rank(static_cast<size_t>(sh.d) + 1, 0);
    int r = 0;
    for (int v = 1; v <= sh.d; ++v)
        if (!drop_val[static_cast<size_t>(v)]) val_rank[static_cast<size_t>(v)] = ++r;
    std::vector<int> img;
    for (int k = 1; k <= sh.d; ++k)
        if (!drop_pos[static_cast<size_t>(k)]) img.push_back(val_rank[static_cast<size_t>(w(k))]);
    return Permutation(std::move(img));
}

int model_shift(const Shape& sh) {
    if (!sh.comparable()) throw std::invalid_argument("model_shift: need I <= J");
    auto dj = disjointify(sh);
    int dprime = dj.shape.d;
    int dimB = dprime * (dprime + 1) / 2;
    bool have = false;
    int shift = 0;
    for (const auto& s : deodhar_strata(sh)) {
        int lw = length(restrict_weq_element(sh, s.w));
        int val = s.alpha + s.beta - lw - dimB;
        if (!have) {
            shift = val;
            have = true;
        } else if (val != shift) {
            throw std::logic_error("model_shift: value not constant across strata");
        }
    }
    if (!have) {
        // I = J has the single point stratum handled above; unreachable for
        // comparable shapes.
        throw std::logic_error("model_shift: no strata");
    }
    return shift;
}

}  // namespace rich
