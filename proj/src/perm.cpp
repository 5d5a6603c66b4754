#include "richardson/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rich {

Reflection::Reflection(int k_, int l_) : k(k_), l(l_) {
    if (!(1 <= k && k < l)) throw std::invalid_argument("Reflection: need 1 <= k < l");
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: not a bijection of {1..n}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) { return transposition(i, i + 1, n); }

Permutation Permutation::transposition(int k, int l, int n) {
    if (!(1 <= k && k < l && l <= n)) throw std::invalid_argument("transposition out of range");
    Permutation w = identity(n);
    std::swap(w.img_[static_cast<size_t>(k) - 1], w.img_[static_cast<size_t>(l) - 1]);
    return w;
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) v[static_cast<size_t>(k) - 1] = n + 1 - k;
    return Permutation(std::move(v));
}

Permutation Permutation::longest_parabolic(int d, int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int k = 1; k <= d; ++k) v[static_cast<size_t>(k) - 1] = d + 1 - k;
    for (int k = d + 1; k <= n; ++k) v[static_cast<size_t>(k) - 1] = n + d + 1 - k;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (int k = 1; k <= size(); ++k) v[static_cast<size_t>((*this)(k)) - 1] = k;
    return Permutation(std::move(v));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> w(u.img_.size());
    for (int k = 1; k <= u.size(); ++k) w[static_cast<size_t>(k) - 1] = u(v(k));
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) s += ",";
        s += std::to_string((*this)(k));
    }
    return s + "]";
}

int length(const Permutation& w) {
    int n = w.size(), inv = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (w(a) > w(b)) ++inv;
    return inv;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    int n = u.size();
    if (n != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    std::vector<int> us, ws;
    us.reserve(static_cast<size_t>(n));
    ws.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        us.insert(std::upper_bound(us.begin(), us.end(), u(k)), u(k));
        ws.insert(std::upper_bound(ws.begin(), ws.end(), w(k)), w(k));
        for (int i = 0; i < k; ++i)
            if (us[static_cast<size_t>(i)] > ws[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::set<Reflection> covering_reflections(const Permutation& w, CoverDirection dir) {
    std::set<Reflection> out;
    int n = w.size();
    int lw = length(w);
    int want = lw + (dir == CoverDirection::Up ? 1 : -1);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Permutation wt = w * Permutation::transposition(k, l, n);
            if (length(wt) == want) out.insert(Reflection(k, l));
        }
    return out;
}

Permutation min_rep_for_subset(const std::vector<int>& I, int n) {
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    int prev = 0;
    for (int x : I) {
        if (x <= prev || x > n) throw std::invalid_argument("min_rep_for_subset: malformed subset");
        used[static_cast<size_t>(x)] = 1;
        v.push_back(x);
        prev = x;
    }
    for (int x = 1; x <= n; ++x)
        if (!used[static_cast<size_t>(x)]) v.push_back(x);
    return Permutation(std::move(v));
}

bool is_min_coset_rep(const Permutation& w, CosetSide side, int d) {
    if (side == CosetSide::PW) return is_min_coset_rep(w.inverse(), CosetSide::WP, d);
    int n = w.size();
    for (int k = 1; k < d; ++k)
        if (w(k) > w(k + 1)) return false;
    for (int k = d + 1; k < n; ++k)
        if (w(k) > w(k + 1)) return false;
    return true;
}

std::vector<int> right_descents(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Peel simple reflections off the right; reversing gives a reduced word.
    std::vector<int> rev;
    Permutation x = w;
    while (true) {
        auto ds = right_descents(x);
        if (ds.empty()) break;
        int i = ds.front();
        rev.push_back(i);
        x = x * Permutation::simple(i, x.size());
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> apply_to_subset(const Permutation& w, const std::vector<int>& S) {
    std::vector<int> out;
    out.reserve(S.size());
    for (int x : S) out.push_back(w(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rich
