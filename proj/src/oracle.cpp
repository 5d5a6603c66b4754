#include "richardson/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rich {

PrimeField::PrimeField(int prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("PrimeField: not a prime");
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("PrimeField: not a prime");
}

int PrimeField::inv(int a) const {
    a %= p;
    if (a == 0) throw std::invalid_argument("PrimeField::inv(0)");
    int r = 1, e = p - 2, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FpMatrix fp_inverse(const FpMatrix& a, const PrimeField& f) {
    size_t n = a.size();
    FpMatrix m = a, inv(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return {};  // singular
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        int s = f.inv(m[c][c]);
        for (size_t j = 0; j < n; ++j) {
            m[c][j] = f.mul(m[c][j], s);
            inv[c][j] = f.mul(inv[c][j], s);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            int factor = m[i][c];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
                inv[i][j] = f.sub(inv[i][j], f.mul(factor, inv[c][j]));
            }
        }
    }
    return inv;
}

namespace {

struct Enumeration {
    Shape sh;                                  // ambient clamped
    std::vector<std::pair<int, int>> free_at;  // (row k, col l), 1-based
};

Enumeration prepare(const Shape& sh0) {
    if (sh0.d == 0) return {sh0, {}};
    int n = std::max(sh0.I.back(), sh0.J.back());
    Shape sh(n, sh0.I, sh0.J);
    Enumeration e{sh, {}};
    for (int k = 1; k <= sh.d; ++k)
        for (int l = sh.I[static_cast<size_t>(k) - 1] + 1; l <= n; ++l) {
            if (std::binary_search(sh.I.begin(), sh.I.end(), l)) continue;
            e.free_at.push_back({k, l});
        }
    if (e.free_at.size() > 20)
        throw std::invalid_argument("oracle: search space exceeds 20 free F_p entries");
    return e;
}

// visit(A) for every member of the naive normal form, with A = X_{[d] x J}.
template <class Visit>
void enumerate(const Shape& sh0, int p, Visit&& visit) {
    if (!sh0.comparable()) return;
    PrimeField f(p);
    if (sh0.d == 0) {
        visit(FpMatrix{});
        return;
    }
    auto [sh, free_at] = prepare(sh0);
    int d = sh.d, n = sh.n;
    FpMatrix x(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(n), 0));
    for (int k = 1; k <= d; ++k) x[static_cast<size_t>(k) - 1][static_cast<size_t>(sh.I[static_cast<size_t>(k) - 1]) - 1] = 1;
    std::vector<int> vals(free_at.size(), 0);
    while (true) {
        for (size_t i = 0; i < free_at.size(); ++i)
            x[static_cast<size_t>(free_at[i].first) - 1][static_cast<size_t>(free_at[i].second) - 1] = vals[i];
        // A = X restricted to the J columns
        FpMatrix a(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), 0));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    x[static_cast<size_t>(r)][static_cast<size_t>(sh.J[static_cast<size_t>(c)] - 1)];
        FpMatrix ainv = fp_inverse(a, f);
        if (!ainv.empty()) {
            // Y = A^-1 X must lie in M_J^+: zero strictly right of leading entries
            bool ok = true;
            for (int k = 1; k <= d && ok; ++k) {
                for (int l = sh.J[static_cast<size_t>(k) - 1] + 1; l <= n && ok; ++l) {
                    if (std::binary_search(sh.J.begin(), sh.J.end(), l)) continue;
                    int y = 0;
                    for (int t = 0; t < d; ++t)
                        y = f.add(y, f.mul(ainv[static_cast<size_t>(k) - 1][static_cast<size_t>(t)],
                                           x[static_cast<size_t>(t)][static_cast<size_t>(l) - 1]));
                    ok = (y == 0);
                }
            }
            if (ok) visit(a);
        }
        // odometer
        size_t i = 0;
        for (; i < vals.size(); ++i) {
            if (++vals[i] < p) break;
            vals[i] = 0;
        }
        if (i == vals.size()) break;
    }
}

}  // namespace

long long count_points(const Shape& sh, int p) {
    long long count = 0;
    enumerate(sh, p, [&count](const FpMatrix&) { ++count; });
    return count;
}

Permutation bruhat_cell_of(const FpMatrix& a, const PrimeField& f) {
    int d = static_cast<int>(a.size());
    // rank of the lower-left corner rows i..d, columns 1..j
    auto corner_rank = [&](int i, int j) {
        FpMatrix m;
        for (int r = i; r <= d; ++r)
            m.push_back(std::vector<int>(a[static_cast<size_t>(r) - 1].begin(),
                                         a[static_cast<size_t>(r) - 1].begin() + j));
        int rank = 0;
        size_t rowcount = m.size();
        for (int c = 0; c < j && rank < static_cast<int>(rowcount); ++c) {
            int piv = -1;
            for (int r = rank; r < static_cast<int>(rowcount); ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
            int s = f.inv(m[static_cast<size_t>(rank)][static_cast<size_t>(c)]);
            for (int cc = c; cc < j; ++cc)
                m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] =
                    f.mul(m[static_cast<size_t>(rank)][static_cast<size_t>(cc)], s);
            for (int r = rank + 1; r < static_cast<int>(rowcount); ++r) {
                int factor = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (factor == 0) continue;
                for (int cc = c; cc < j; ++cc)
                    m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                        f.sub(m[static_cast<size_t>(r)][static_cast<size_t>(cc)],
                              f.mul(factor, m[static_cast<size_t>(rank)][static_cast<size_t>(cc)]));
            }
            ++rank;
        }
        return rank;
    };
    auto rho = [&](int i, int j) {
        if (i > d || j < 1) return 0;
        return corner_rank(i, j);
    };
    std::vector<int> img;
    for (int i = 1; i <= d; ++i) {
        int wi = 0;
        for (int j = 1; j <= d; ++j)
            if (rho(i, j) - rho(i + 1, j) >= 1) { wi = j; break; }
        if (wi == 0) throw std::invalid_argument("bruhat_cell_of: singular matrix");
        img.push_back(wi);
    }
    // img is the row -> column map of the underlying permutation matrix; the
    // cell label w puts the 1 of column l into row w(l), so invert.
    return Permutation(std::move(img)).inverse();
}

std::map<Permutation, long long> count_by_stratum(const Shape& sh, int p) {
    PrimeField f(p);
    std::map<Permutation, long long> tally;
    enumerate(sh, p, [&](const FpMatrix& a) { ++tally[bruhat_cell_of(a, f)]; });
    auto weq = weq_set(sh);
    for (const auto& [w, c] : tally)
        if (std::find(weq.begin(), weq.end(), w) == weq.end())
            throw std::logic_error("count_by_stratum: point in a cell outside the Weyl set");
    return tally;
}

}  // namespace rich
