#include "richardson/shapes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rich {

int ell(const Subset& I) {
    int s = 0, k = 1;
    for (int x : I) s += x - k++;
    return s;
}

bool subset_leq(const Subset& I, const Subset& J) {
    if (I.size() != J.size()) throw std::invalid_argument("subset_leq: size mismatch");
    for (size_t k = 0; k < I.size(); ++k)
        if (I[k] > J[k]) return false;
    return true;
}

std::vector<Subset> all_subsets(int n, int d) {
    std::vector<Subset> out;
    Subset cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        int need = d - static_cast<int>(cur.size());
        for (int x = next; x + need - 1 <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace {

void validate_subset(const Subset& I, int n, const char* what) {
    int prev = 0;
    for (int x : I) {
        if (x <= prev || x > n) throw std::invalid_argument(std::string(what) + ": malformed subset");
        prev = x;
    }
}

// Index (1-based) of value x in sorted subset, or 0.
int index_of(const Subset& S, int x) {
    auto it = std::lower_bound(S.begin(), S.end(), x);
    if (it != S.end() && *it == x) return static_cast<int>(it - S.begin()) + 1;
    return 0;
}

bool contains(const Subset& S, int x) { return index_of(S, x) != 0; }

// Apply the transposition (l, l+1) to a subset containing exactly one of l, l+1.
Subset swap_in(const Subset& S, int l) {
    Subset out = S;
    for (int& x : out) {
        if (x == l) x = l + 1;
        else if (x == l + 1) x = l;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Shape::Shape(int n_, Subset I_, Subset J_) : n(n_), I(std::move(I_)), J(std::move(J_)) {
    if (I.size() != J.size()) throw std::invalid_argument("Shape: |I| != |J|");
    d = static_cast<int>(I.size());
    validate_subset(I, n, "Shape I");
    validate_subset(J, n, "Shape J");
}

std::vector<Permutation> wle_set(const Shape& sh) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(sh.d)) {
        bool ok = true;
        for (int k = 1; k <= sh.d && ok; ++k)
            ok = sh.I[static_cast<size_t>(w(k)) - 1] <= sh.J[static_cast<size_t>(k) - 1];
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<Permutation> weq_set(const Shape& sh) {
    std::vector<Permutation> out;
    for (const auto& w : wle_set(sh)) {
        bool ok = true;
        for (int k = 1; k <= sh.d && ok; ++k) {
            int kp = index_of(sh.J, sh.I[static_cast<size_t>(k) - 1]);
            if (kp != 0) ok = (w(kp) == k);
        }
        if (ok) out.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The shared W/D lockstep recursion. At each level we pick s = (l, l+1) with
// l+1 in J, l not in J (smallest l), strip it from J and dispatch on how s
// moves I. The permutation side realizes the W-recursion, the subexpression
// side Deodhar's recursion for distinguished subexpressions; running both at
// once IS the comparison bijection.
// ---------------------------------------------------------------------------

namespace {

struct LockEntry {
    std::vector<bool> choices;  // suffix of the word, leftmost first
    Permutation sigma;
    int n1 = 0, n2 = 0, m = 0;
};

int smallest_descent_column(const Subset& J) {
    // smallest l with l+1 in J, l not in J; 0 if none (J = {1..d})
    for (int k = 0; k < static_cast<int>(J.size()); ++k) {
        int v = J[static_cast<size_t>(k)];
        if (v - 1 >= 1 && !contains(J, v - 1)) return v - 1;
    }
    return 0;
}

std::vector<LockEntry> lockstep(const Subset& I, const Subset& J, int d) {
    if (!subset_leq(I, J)) return {};
    int l = smallest_descent_column(J);
    if (l == 0) {
        // J = {1..d}; I <= J forces I = J
        if (I != J) throw std::logic_error("lockstep: no admissible column swap but I != J");
        return {LockEntry{{}, Permutation::identity(d), 0, 0, 0}};
    }
    Subset sJ = swap_in(J, l);
    bool has_l = contains(I, l), has_l1 = contains(I, l + 1);
    std::vector<LockEntry> out;
    if (has_l1 && !has_l) {
        // s(I) < I: same permutations, prefix a chosen letter, data unchanged
        for (auto e : lockstep(swap_in(I, l), sJ, d)) {
            e.choices.insert(e.choices.begin(), true);
            out.push_back(std::move(e));
        }
    } else if (has_l == has_l1) {
        // s(I) = I: prefix an omitted letter with t_i gamma not in W^P (n2).
        // When both l, l+1 lie in I the matching forced by l in I cap s(J)
        // moves to l+1 in I cap J: twist by the value transposition (a, a+1).
        int a = has_l ? index_of(I, l) : 0;
        for (auto e : lockstep(I, sJ, d)) {
            e.choices.insert(e.choices.begin(), false);
            e.n2 += 1;
            if (a != 0) e.sigma = Permutation::transposition(a, a + 1, d) * e.sigma;
            out.push_back(std::move(e));
        }
    } else {
        // s(I) > I: omitted letter with t_i gamma in W^P (n1), or chosen
        // letter dropping the evaluation (m).
        for (auto e : lockstep(I, sJ, d)) {
            e.choices.insert(e.choices.begin(), false);
            e.n1 += 1;
            out.push_back(std::move(e));
        }
        for (auto e : lockstep(swap_in(I, l), sJ, d)) {
            e.choices.insert(e.choices.begin(), true);
            e.m += 1;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<int> word_of_subset(const Subset& J0) {
    std::vector<int> word;
    Subset J = J0;
    for (int l = smallest_descent_column(J); l != 0; l = smallest_descent_column(J)) {
        word.push_back(l);
        J = swap_in(J, l);
    }
    return word;
}

}  // namespace

std::vector<Permutation> weq_recursive(const Shape& sh) {
    std::vector<Permutation> out;
    std::set<Permutation> seen;
    for (auto& e : lockstep(sh.I, sh.J, sh.d)) {
        if (!seen.insert(e.sigma).second)
            throw std::logic_error("weq_recursive: recursion produced a duplicate");
        out.push_back(e.sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string DistSubexpression::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += choices[i] ? "s" + std::to_string(word[i]) : "e";
    }
    return s + "]";
}

namespace {

std::vector<DistSubexpression> dist_direct(const Permutation& x, const std::vector<int>& word,
                                           int d) {
    int n = x.size();
    size_t L = word.size();
    if (L > 25) throw std::invalid_argument("dist_set: word too long for direct enumeration");
    std::vector<DistSubexpression> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << L); ++mask) {
        Permutation g = Permutation::identity(n);
        DistSubexpression cand;
        cand.word = word;
        cand.choices.assign(L, false);
        bool ok = true;
        // position i = 1..L processes word from the right end
        for (size_t i = 1; i <= L && ok; ++i) {
            size_t idx = L - i;
            bool chosen = (mask >> idx) & 1;
            cand.choices[idx] = chosen;
            Permutation tg = Permutation::simple(word[idx], n) * g;
            bool down = length(tg) < length(g);
            if (down && !chosen) { ok = false; break; }  // jump condition
            if (chosen) {
                if (!is_min_coset_rep(tg, CosetSide::WP, d)) { ok = false; break; }
                if (down) cand.m += 1;
                g = tg;
            } else {
                if (is_min_coset_rep(tg, CosetSide::WP, d)) cand.n1 += 1;
                else cand.n2 += 1;
            }
        }
        if (ok && g == x) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DistSubexpression> dist_recursive(const Permutation& x, const std::vector<int>& word,
                                              int d) {
    int n = x.size();
    if (word.empty()) {
        if (x.is_identity()) return {DistSubexpression{{}, {}, 0, 0, 0}};
        return {};
    }
    Permutation s = Permutation::simple(word.front(), n);
    Permutation sx = s * x;
    std::vector<int> rest(word.begin() + 1, word.end());
    std::vector<DistSubexpression> out;
    auto prefix = [&word](std::vector<DistSubexpression> v, bool chosen) {
        for (auto& g : v) {
            g.word = word;
            g.choices.insert(g.choices.begin(), chosen);
        }
        return v;
    };
    if (length(sx) < length(x)) {
        out = prefix(dist_recursive(sx, rest, d), true);
    } else if (!is_min_coset_rep(sx, CosetSide::WP, d)) {
        out = prefix(dist_recursive(x, rest, d), false);
        for (auto& g : out) g.n2 += 1;
    } else {
        out = prefix(dist_recursive(x, rest, d), false);
        for (auto& g : out) g.n1 += 1;
        auto second = prefix(dist_recursive(sx, rest, d), true);
        for (auto& g : second) {
            g.m += 1;
            out.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<DistSubexpression> dist_set(const Permutation& x, const std::vector<int>& word,
                                        int d, int n) {
    if (x.size() != n) throw std::invalid_argument("dist_set: rank mismatch");
    Permutation y = Permutation::identity(n);
    for (int i : word) y = y * Permutation::simple(i, n);
    if (length(y) != static_cast<int>(word.size()))
        throw std::invalid_argument("dist_set: word is not reduced");
    if (!is_min_coset_rep(x, CosetSide::WP, d) || !is_min_coset_rep(y, CosetSide::WP, d))
        throw std::invalid_argument("dist_set: x and the word's product must be WP-minimal");
    auto direct = dist_direct(x, word, d);
    auto rec = dist_recursive(x, word, d);
    auto same_data = [](const std::vector<DistSubexpression>& a,
                        const std::vector<DistSubexpression>& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i]) || a[i].n1 != b[i].n1 || a[i].n2 != b[i].n2 || a[i].m != b[i].m)
                return false;
        return true;
    };
    if (!same_data(direct, rec))
        throw std::logic_error("dist_set: direct filter and recursion disagree");
    return direct;
}

std::pair<int, int> deodhar_cell_size(const DistSubexpression& gamma) {
    return {gamma.n1, gamma.m + gamma.n2};
}

ComparisonResult comparison_bijection(const Shape& sh) {
    ComparisonResult res;
    res.word = word_of_subset(sh.J);
    auto entries = lockstep(sh.I, sh.J, sh.d);
    for (auto& e : entries) {
        DistSubexpression g;
        g.word = res.word;
        g.choices = e.choices;
        g.n1 = e.n1;
        g.n2 = e.n2;
        g.m = e.m;
        res.entries.push_back(ComparisonEntry{std::move(g), e.sigma});
    }
    // cross-validate against the two independently defined sides
    std::vector<Permutation> sigmas;
    std::vector<DistSubexpression> gammas;
    for (const auto& e : res.entries) {
        sigmas.push_back(e.sigma);
        gammas.push_back(e.gamma);
    }
    std::sort(sigmas.begin(), sigmas.end());
    std::sort(gammas.begin(), gammas.end());
    auto weq = weq_set(sh);
    std::sort(weq.begin(), weq.end());
    if (sigmas != weq) throw std::logic_error("comparison_bijection: permutation side mismatch");
    if (sh.comparable()) {
        auto dist = dist_set(min_rep_for_subset(sh.I, sh.n), res.word, sh.d, sh.n);
        if (dist.size() != gammas.size())
            throw std::logic_error("comparison_bijection: subexpression side mismatch");
        for (size_t i = 0; i < dist.size(); ++i)
            if (!(dist[i] == gammas[i]) || dist[i].n1 != gammas[i].n1 ||
                dist[i].n2 != gammas[i].n2 || dist[i].m != gammas[i].m)
                throw std::logic_error("comparison_bijection: subexpression data mismatch");
    }
    return res;
}

}  // namespace rich
