#include "richardson/nilcox.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "richardson/strata.hpp"

namespace rich {

namespace {

bool term_less(const NilCoxTerm& a, const NilCoxTerm& b) {
    if (a.w.images() != b.w.images()) return a.w.images() < b.w.images();
    return a.yset < b.yset;
}

// y_k wedge y_S from the left; returns false when k already occurs.
bool left_wedge(int k, uint32_t& yset, int& sign) {
    uint32_t bit = uint32_t{1} << (k - 1);
    if (yset & bit) return false;
    uint32_t below = yset & (bit - 1);
    if (std::popcount(below) % 2 == 1) sign = -sign;
    yset |= bit;
    return true;
}

// Apply w to the generator indices of an ascending monomial; Koszul sign is
// the inversion parity of the mapped sequence.
void apply_perm_to_monomial(const Permutation& w, uint32_t& yset, int& sign) {
    std::vector<int> mapped;
    for (int i = 1; i <= w.size(); ++i)
        if (yset & (uint32_t{1} << (i - 1))) mapped.push_back(w(i));
    int inv = 0;
    for (size_t a = 0; a < mapped.size(); ++a)
        for (size_t b = a + 1; b < mapped.size(); ++b)
            if (mapped[a] > mapped[b]) ++inv;
    if (inv % 2 == 1) sign = -sign;
    uint32_t out = 0;
    for (int v : mapped) out |= uint32_t{1} << (v - 1);
    yset = out;
}

}  // namespace

NilCoxElement NilCoxElement::term(const Permutation& w, uint32_t yset, long long coeff) {
    NilCoxElement e;
    if (coeff != 0) e.terms_.push_back({w, yset, coeff});
    return e;
}

NilCoxElement& NilCoxElement::operator+=(const NilCoxElement& o) {
    std::vector<NilCoxTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && term_less(terms_[i], o.terms_[j]))) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || term_less(o.terms_[j], terms_[i])) {
            merged.push_back(o.terms_[j++]);
        } else {
            NilCoxTerm t = terms_[i++];
            t.coeff += o.terms_[j++].coeff;
            if (t.coeff != 0) merged.push_back(t);
        }
    }
    terms_ = std::move(merged);
    return *this;
}

NilCoxElement NilCoxElement::operator*(long long c) const {
    NilCoxElement e;
    if (c == 0) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.coeff *= c;
    return e;
}

bool NilCoxElement::operator==(const NilCoxElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].w != o.terms_[i].w || terms_[i].yset != o.terms_[i].yset ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string NilCoxElement::to_string(const std::string& basis_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        long long c = t.coeff;
        if (i == 0) {
            if (c < 0) { s += "-"; c = -c; }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (c != 1) s += std::to_string(c) + " ";
        s += basis_name + "_" + t.w.to_string();
        if (t.yset) {
            s += " y_{";
            bool first = true;
            for (int k = 1; k <= t.w.size(); ++k)
                if (t.yset & (uint32_t{1} << (k - 1))) {
                    if (!first) s += ",";
                    s += std::to_string(k);
                    first = false;
                }
            s += "}";
        }
    }
    return s;
}

NilCoxElement nc_mul(const NilCoxElement& a, const NilCoxElement& b) {
    if (!a.is_zero() && !b.is_zero() && a.rank() != b.rank())
        throw std::invalid_argument("nc_mul: rank mismatch");
    NilCoxElement out;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Permutation prod = ta.w * tb.w;
            if (length(prod) != length(ta.w) + length(tb.w)) continue;
            int sign = 1;
            uint32_t moved = ta.yset;
            apply_perm_to_monomial(tb.w.inverse(), moved, sign);
            if (moved & tb.yset) continue;  // wedge degenerates
            // sign of y_moved wedge y_tb: crossings of pairs (t, s') with t > s'
            int cross = 0;
            for (int t = 1; t <= ta.w.size(); ++t)
                if (moved & (uint32_t{1} << (t - 1)))
                    cross += std::popcount(tb.yset & ((uint32_t{1} << (t - 1)) - 1));
            if (cross % 2 == 1) sign = -sign;
            out += NilCoxElement::term(prod, moved | tb.yset, ta.coeff * tb.coeff * sign);
        }
    }
    return out;
}

NilCoxElement nc_differential(const NilCoxElement& a) {
    NilCoxElement out;
    for (const auto& t : a.terms()) {
        for (const auto& refl : covering_reflections(t.w, CoverDirection::Down)) {
            Permutation wt = t.w * Permutation::transposition(refl.k, refl.l, t.w.size());
            // alpha_t^vee wedge y_S = (y_k - y_l) wedge y_S
            int sign = 1;
            uint32_t ys = t.yset;
            if (left_wedge(refl.k, ys, sign))
                out += NilCoxElement::term(wt, ys, t.coeff * sign);
            sign = -1;
            ys = t.yset;
            if (left_wedge(refl.l, ys, sign))
                out += NilCoxElement::term(wt, ys, t.coeff * sign);
        }
    }
    return out;
}

NilCoxElement to_dual_basis(const NilCoxElement& a) {
    NilCoxElement out;
    for (const auto& t : a.terms()) {
        Permutation w0 = Permutation::longest(t.w.size());
        out += NilCoxElement::term(w0 * t.w, t.yset, t.coeff);
    }
    return out;
}

std::pair<int, int> bidegree(const NilCoxTerm& t, NcBasis basis, int shift) {
    int d = t.w.size();
    int k = std::popcount(t.yset);
    int lw = length(t.w);
    int base = basis == NcBasis::Partial ? lw + d * (d + 1) / 2 : d * d - lw;
    return {2 * base - k + 2 * shift, base - k + shift};
}

bool is_interval_closed(const std::vector<Permutation>& set, int d) {
    auto in = [&set](const Permutation& w) {
        return std::find(set.begin(), set.end(), w) != set.end();
    };
    auto middle = all_permutations(d);
    for (const auto& w1 : set)
        for (const auto& w3 : set) {
            if (!bruhat_leq(w1, w3)) continue;
            for (const auto& w2 : middle)
                if (bruhat_leq(w1, w2) && bruhat_leq(w2, w3) && !in(w2)) return false;
        }
    return true;
}

GradedComplex::GradedComplex(std::vector<Permutation> interval_closed_set, int d, int shift)
    : d_(d), shift_(shift), labels_(std::move(interval_closed_set)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    for (const auto& w : labels_)
        if (w.size() != d_) throw std::invalid_argument("GradedComplex: label rank mismatch");
    if (!is_interval_closed(labels_, d_))
        throw std::invalid_argument("GradedComplex: label set is not interval closed");
    for (const auto& x : labels_)
        for (uint32_t ys = 0; ys < (uint32_t{1} << d_); ++ys) {
            int idx = static_cast<int>(basis_.size());
            basis_.push_back({x, ys});
            std::vector<int> key = x.images();
            key.push_back(static_cast<int>(ys));
            index_[key] = idx;
            NilCoxTerm t{x, ys, 1};
            blocks_[bidegree(t, NcBasis::Partial, shift_)].push_back(idx);
        }
}

std::map<int, long long> GradedComplex::differential_of(int basis_index) const {
    const auto& be = basis_[static_cast<size_t>(basis_index)];
    // del basis: d(del_x Y) = sum over l(xt) = l(x) + 1 of del_{xt} alpha_t Y,
    // realized through the d~ labels and relabeled back.
    Permutation w0 = Permutation::longest(d_);
    NilCoxElement as_delta = NilCoxElement::term(w0 * be.x, be.yset, 1);
    NilCoxElement image = to_dual_basis(nc_differential(as_delta));
    std::map<int, long long> out;
    for (const auto& t : image.terms()) {
        std::vector<int> key = t.w.images();
        key.push_back(static_cast<int>(t.yset));
        auto it = index_.find(key);
        if (it == index_.end()) continue;  // target label outside the subquotient
        out[it->second] += t.coeff;
    }
    return out;
}

IntMat GradedComplex::block_matrix(int p, int q) const {
    auto src = blocks_.find({p, q});
    auto dst = blocks_.find({p + 1, q});
    size_t rows = dst == blocks_.end() ? 0 : dst->second.size();
    size_t cols = src == blocks_.end() ? 0 : src->second.size();
    IntMat m(rows, IntVec(cols, 0));
    if (rows == 0 || cols == 0) return m;
    std::map<int, int> dst_pos;
    for (size_t i = 0; i < rows; ++i) dst_pos[dst->second[i]] = static_cast<int>(i);
    for (size_t j = 0; j < cols; ++j) {
        for (const auto& [idx, c] : differential_of(src->second[j])) {
            auto it = dst_pos.find(idx);
            if (it == dst_pos.end())
                throw std::logic_error("GradedComplex: differential leaves the next block");
            m[static_cast<size_t>(it->second)][j] = c;
        }
    }
    return m;
}

GradedComplex::Cohomology GradedComplex::cohomology() const {
    Cohomology coh;
    for (const auto& [pq, elems] : blocks_) {
        auto [p, q] = pq;
        int ncols = static_cast<int>(elems.size());
        auto kernel = integer_kernel(block_matrix(p, q), ncols);
        // image of the incoming map, expressed in this block's coordinates
        std::vector<IntVec> image;
        auto prev = blocks_.find({p - 1, q});
        if (prev != blocks_.end()) {
            IntMat m = block_matrix(p - 1, q);
            for (size_t j = 0; j < prev->second.size(); ++j) {
                IntVec col(static_cast<size_t>(ncols));
                bool nz = false;
                for (size_t i = 0; i < m.size(); ++i) {
                    col[i] = m[i][j];
                    nz = nz || col[i] != 0;
                }
                if (nz) image.push_back(std::move(col));
            }
        }
        auto kernel_ech = right_echelon(kernel);
        auto image_ech = right_echelon(image);
        std::vector<char> hit(static_cast<size_t>(ncols), 0);
        for (const auto& v : image_ech) hit[static_cast<size_t>(right_pivot(v))] = 1;
        std::vector<NilCoxElement> reps;
        for (const auto& v : kernel_ech) {
            if (hit[static_cast<size_t>(right_pivot(v))]) continue;
            NilCoxElement rep;
            for (int j = 0; j < ncols; ++j) {
                if (v[static_cast<size_t>(j)] == 0) continue;
                const auto& be = basis_[static_cast<size_t>(elems[static_cast<size_t>(j)])];
                rep += NilCoxElement::term(
                    be.x, be.yset, static_cast<long long>(v[static_cast<size_t>(j)]));
            }
            reps.push_back(std::move(rep));
        }
        int dim = static_cast<int>(kernel_ech.size()) - static_cast<int>(image_ech.size());
        if (dim < 0) throw std::logic_error("GradedComplex: negative cohomology dimension");
        if (static_cast<int>(reps.size()) != dim)
            throw std::logic_error("GradedComplex: representative count mismatch");
        if (dim > 0) {
            coh.dims[pq] = dim;
            std::reverse(reps.begin(), reps.end());  // ascending pivot order
            coh.representatives[pq] = std::move(reps);
        }
    }
    return coh;
}

BiLaurent GradedComplex::Cohomology::mixpol() const {
    BiLaurent out;
    for (const auto& [pq, dim] : dims) out += BiLaurent::monomial(dim, pq.second, pq.first);
    return out;
}

BiLaurent GradedComplex::e1_mixpol() const {
    BiLaurent out;
    for (const auto& [pq, elems] : blocks_)
        out += BiLaurent::monomial(static_cast<long long>(elems.size()), pq.second, pq.first);
    return out;
}

GradedComplex model(const Shape& sh) {
    if (!sh.comparable()) throw std::invalid_argument("model: need I <= J");
    auto dj = disjointify(sh);
    int shift = model_shift(sh);
    return GradedComplex(weq_set(dj.shape), dj.shape.d, shift);
}

NilCoxElement model_multiply(const Subset& H, const Subset& I, const Subset& J, int n,
                             const NilCoxElement& a, const NilCoxElement& b) {
    for (int h : H)
        for (int j : J)
            if (h == j)
                throw std::invalid_argument(
                    "model_multiply: H and J intersect (twisted case unsupported)");
    Shape hi(n, H, I), ij(n, I, J), hj(n, H, J);
    int d = hi.d;
    Permutation w0 = Permutation::longest(d);
    auto check_support = [&w0](const NilCoxElement& e, const std::vector<Permutation>& weq,
                               const char* what) {
        for (const auto& t : e.terms()) {
            Permutation label = w0 * t.w;
            if (std::find(weq.begin(), weq.end(), label) == weq.end())
                throw std::invalid_argument(std::string("model_multiply: ") + what +
                                            " not supported on the Weyl set");
        }
    };
    check_support(a, weq_set(hi), "left factor");
    check_support(b, weq_set(ij), "right factor");
    auto target = weq_set(hj);
    NilCoxElement out;
    NilCoxElement prod = nc_mul(a, b);
    for (const auto& t : prod.terms()) {
        Permutation label = w0 * t.w;
        if (std::find(target.begin(), target.end(), label) != target.end())
            out += NilCoxElement::term(t.w, t.yset, t.coeff);
    }
    return out;
}

}  // namespace rich
