#include "richardson/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace rich {

namespace {

void normalize(IntVec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

}  // namespace

int bareiss_echelon(IntMat& m, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    BigInt prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(r)]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                BigInt num = m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                                 m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                             m[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                                 m[static_cast<size_t>(r)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;  // exact
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
        }
        prev = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

int rank_of(IntMat m) { return bareiss_echelon(m); }

std::vector<IntVec> integer_kernel(IntMat m, int ncols) {
    std::vector<int> piv;
    int r = bareiss_echelon(m, &piv);
    std::vector<char> is_piv(static_cast<size_t>(ncols), 0);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = 1;
    std::vector<IntVec> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[static_cast<size_t>(f)]) continue;
        std::vector<BigRat> v(static_cast<size_t>(ncols), BigRat(0));
        v[static_cast<size_t>(f)] = 1;
        for (int i = r - 1; i >= 0; --i) {
            int pc = piv[static_cast<size_t>(i)];
            BigRat s = 0;
            for (int j = pc + 1; j < ncols; ++j)
                if (v[static_cast<size_t>(j)] != 0)
                    s += BigRat(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                         v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] =
                -s / BigRat(m[static_cast<size_t>(i)][static_cast<size_t>(pc)]);
        }
        BigInt lcm = 1;
        for (const auto& x : v)
            lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        IntVec iv(static_cast<size_t>(ncols));
        for (int j = 0; j < ncols; ++j) {
            BigRat scaled = v[static_cast<size_t>(j)] * BigRat(lcm);
            iv[static_cast<size_t>(j)] = boost::multiprecision::numerator(scaled);
        }
        normalize(iv);
        out.push_back(std::move(iv));
    }
    return out;
}

int right_pivot(const IntVec& v) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
        if (v[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

std::vector<IntVec> right_echelon(std::vector<IntVec> rows) {
    std::vector<IntVec> out;
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (int c = static_cast<int>(ncols) - 1; c >= 0; --c) {
        int p = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (right_pivot(rows[i]) == c) { p = static_cast<int>(i); break; }
        if (p < 0) continue;
        IntVec pivot = rows[static_cast<size_t>(p)];
        rows.erase(rows.begin() + p);
        for (auto& v : rows) {
            if (v[static_cast<size_t>(c)] == 0) continue;
            BigInt a = pivot[static_cast<size_t>(c)], b = v[static_cast<size_t>(c)];
            BigInt g = boost::multiprecision::gcd(a, b);
            BigInt ca = b / g, cb = a / g;
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = v[j] * cb - pivot[j] * ca;
            normalize(v);
        }
        normalize(pivot);
        out.push_back(std::move(pivot));
    }
    for (const auto& v : rows)
        if (right_pivot(v) >= 0) throw std::logic_error("right_echelon: leftover row");
    return out;
}

}  // namespace rich
