// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "richardson/cato.hpp"
#include "richardson/fukaya.hpp"
#include "richardson/nilcox.hpp"
#include "richardson/oracle.hpp"
#include "richardson/shapes.hpp"
#include "richardson/strata.hpp"

using namespace rich;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

std::vector<Shape> comparable_shapes(int n, int d) {
    std::vector<Shape> out;
    for (const auto& I : all_subsets(n, d))
        for (const auto& J : all_subsets(n, d)) {
            Shape sh(n, I, J);
            if (sh.comparable()) out.push_back(sh);
        }
    return out;
}

std::multiset<std::pair<int, int>> stratum_multiset(const std::vector<StratumDescriptor>& v) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& s : v) out.insert({s.alpha, s.beta});
    return out;
}

BiLaurent mono(long long c, int a, int b) { return BiLaurent::monomial(c, a, b); }

// ---------------------------------------------------------------------------

bool criterion1(std::string& msg) {
    // the appendix table of R(I,J) in Gr(2,4), as (alpha,beta) multisets
    using MS = std::multiset<std::pair<int, int>>;
    const MS pt{{0, 0}}, gm{{1, 0}}, gma{{1, 1}}, gma2{{1, 2}}, gm2{{2, 0}},
        gl2{{2, 1}, {2, 2}};
    std::map<std::pair<Subset, Subset>, MS> expected;
    auto subsets = all_subsets(4, 2);
    for (const auto& I : subsets) expected[{I, I}] = pt;
    expected[{{1, 2}, {1, 3}}] = gm;
    expected[{{1, 2}, {1, 4}}] = gma;
    expected[{{1, 2}, {2, 3}}] = gma;
    expected[{{1, 2}, {2, 4}}] = gma2;
    expected[{{1, 2}, {3, 4}}] = gl2;
    expected[{{1, 3}, {1, 4}}] = gm;
    expected[{{1, 3}, {2, 3}}] = gm;
    expected[{{1, 3}, {2, 4}}] = gm2;
    expected[{{1, 3}, {3, 4}}] = gma2;
    expected[{{1, 4}, {2, 4}}] = gm;
    expected[{{1, 4}, {3, 4}}] = gma;
    expected[{{2, 3}, {2, 4}}] = gm;
    expected[{{2, 3}, {3, 4}}] = gma;
    expected[{{2, 4}, {3, 4}}] = gm;
    // every ordered pair: listed cells must match, all others must be empty
    for (const auto& I : subsets)
        for (const auto& J : subsets) {
            auto strata = deodhar_strata(Shape(4, I, J));
            auto it = expected.find({I, J});
            MS want = (it == expected.end()) ? MS{} : it->second;
            if (stratum_multiset(strata) != want) {
                msg = "mismatch at I={" + std::to_string(I[0]) + "," + std::to_string(I[1]) +
                      "} J={" + std::to_string(J[0]) + "," + std::to_string(J[1]) + "}";
                return false;
            }
        }
    return true;
}

bool criterion2(std::string& msg) {
    Shape sh(7, {1, 2, 4}, {2, 5, 7});
    std::map<std::vector<int>, std::pair<int, int>> gauss_expect{
        {{1, 2, 3}, {3, 4}}, {{2, 1, 3}, {2, 4}}, {{1, 3, 2}, {3, 3}}, {{2, 3, 1}, {2, 3}}};
    auto gs = gauss_strata(sh);
    if (gs.size() != 4) { msg = "gauss stratum count"; return false; }
    for (const auto& s : gs)
        if (gauss_expect.at(s.w.images()) != std::make_pair(s.alpha, s.beta)) {
            msg = "gauss (alpha,beta) at w=" + s.w.to_string();
            return false;
        }
    std::map<std::vector<int>, std::pair<int, int>> deod_expect{{{2, 1, 3}, {2, 4}},
                                                                {{2, 3, 1}, {2, 5}}};
    auto ds = deodhar_strata(sh);
    if (ds.size() != 2) { msg = "deodhar stratum count"; return false; }
    for (const auto& s : ds)
        if (deod_expect.at(s.w.images()) != std::make_pair(s.alpha, s.beta)) {
            msg = "deodhar (alpha,beta) at w=" + s.w.to_string();
            return false;
        }
    auto dd = deodhar_decorate(build_matched(sh, Permutation({2, 1, 3})));
    if (dd.gm_nodes != std::set<GridPoint>{{1, 5}, {3, 7}}) {
        msg = "Gm node positions";
        return false;
    }
    if (dd.a1_nodes != std::set<GridPoint>{{1, 3}, {1, 4}, {2, 5}, {3, 6}}) {
        msg = "A1 node positions";
        return false;
    }
    return true;
}

bool criterion3(std::string& msg) {
    std::vector<std::pair<int, int>> grs{{4, 2}, {5, 2}, {5, 3}};
    for (auto [n, d] : grs)
        for (const auto& sh : comparable_shapes(n, d)) {
            BiLaurent deod = point_count_poly(deodhar_strata(sh));
            BiLaurent gauss = point_count_poly(gauss_strata(sh));
            BiLaurent mix = model(sh).cohomology().mixpol();
            for (long long p : {2, 3, 5}) {
                long long oracle = count_points(sh, static_cast<int>(p));
                long long dv = deod.eval(p, -1), gv = gauss.eval(p, -1), mv = mix.eval(p, -1);
                if (!(oracle == dv && oracle == gv && oracle == mv)) {
                    msg = "count mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d) +
                          " p=" + std::to_string(p);
                    return false;
                }
                auto tally = count_by_stratum(sh, static_cast<int>(p));
                auto strata = deodhar_strata(sh);
                if (tally.size() != strata.size()) { msg = "stratum key mismatch"; return false; }
                for (const auto& s : strata) {
                    long long expect = 1;
                    for (int i = 0; i < s.alpha; ++i) expect *= p - 1;
                    for (int i = 0; i < s.beta; ++i) expect *= p;
                    auto it = tally.find(s.w);
                    if (it == tally.end() || it->second != expect) {
                        msg = "per-stratum count mismatch at w=" + s.w.to_string();
                        return false;
                    }
                }
            }
        }
    return true;
}

bool criterion4(std::string& msg) {
    for (int d = 1; d <= 3; ++d) {
        BiLaurent expect = mono(1, d * d, 2 * d * d);
        for (int i = 1; i <= d; ++i) expect *= BiLaurent::one() + mono(1, -i, -(2 * i - 1));
        GradedComplex full(all_permutations(d), d, 0);
        if (full.cohomology().mixpol() != expect) {
            msg = "GL_" + std::to_string(d) + " Poincare polynomial";
            return false;
        }
    }
    GradedComplex gl2(all_permutations(2), 2, 0);
    auto coh = gl2.cohomology();
    auto rep = [&coh](int p, int q) { return coh.representatives.at({p, q}).at(0); };
    bool reps_ok =
        rep(4, 1) == NilCoxElement::term(Permutation({1, 2}), 0b11, 1) &&
        rep(5, 2) == NilCoxElement::term(Permutation({1, 2}), 0b01, 1) +
                         NilCoxElement::term(Permutation({1, 2}), 0b10, -1) &&
        rep(7, 3) == NilCoxElement::term(Permutation({2, 1}), 0b01, 1) &&
        rep(8, 4) == NilCoxElement::term(Permutation({2, 1}), 0, 1);
    if (!reps_ok) {
        msg = "GL_2 representatives differ from the four printed classes";
        return false;
    }
    return true;
}

bool criterion5(std::string& msg) {
    for (int d = 1; d <= 4; ++d)
        for (const auto& w : all_permutations(d))
            for (uint32_t ys = 0; ys < (uint32_t{1} << d); ++ys)
                if (!nc_differential(nc_differential(NilCoxElement::term(w, ys, 1))).is_zero()) {
                    msg = "d^2 != 0 at d=" + std::to_string(d);
                    return false;
                }
    auto leibniz = [](const Permutation& u, const Permutation& v) {
        NilCoxElement du = nc_differential(NilCoxElement::term(u, 0, 1));
        NilCoxElement dv = nc_differential(NilCoxElement::term(v, 0, 1));
        NilCoxElement lhs =
            nc_differential(nc_mul(NilCoxElement::term(u, 0, 1), NilCoxElement::term(v, 0, 1)));
        NilCoxElement rhs = nc_mul(NilCoxElement::term(u, 0, 1), dv) +
                            nc_mul(du, NilCoxElement::term(v, 0, 1));
        return lhs == rhs;
    };
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3)) {
            if (length(u * v) != length(u) + length(v)) continue;
            if (!leibniz(u, v)) { msg = "Leibniz fails in S_3"; return false; }
        }
    std::mt19937 rng(5);
    auto s4 = all_permutations(4);
    std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
    for (int done = 0; done < 500;) {
        const auto& u = s4[pick(rng)];
        const auto& v = s4[pick(rng)];
        if (length(u * v) != length(u) + length(v)) continue;
        ++done;
        if (!leibniz(u, v)) { msg = "Leibniz fails in S_4"; return false; }
    }
    for (const auto& w : all_permutations(4)) {
        auto word = reduced_word(w);
        NilCoxElement sum;
        for (size_t i = 0; i < word.size(); ++i) {
            NilCoxElement left = NilCoxElement::term(Permutation::identity(4), 0, 1);
            for (size_t a = 0; a < i; ++a)
                left = nc_mul(left, NilCoxElement::term(Permutation::simple(word[a], 4), 0, 1));
            NilCoxElement right = NilCoxElement::term(Permutation::identity(4), 0, 1);
            for (size_t a = i + 1; a < word.size(); ++a)
                right = nc_mul(right, NilCoxElement::term(Permutation::simple(word[a], 4), 0, 1));
            int k = word[i];
            NilCoxElement alpha =
                NilCoxElement::term(Permutation::identity(4), uint32_t{1} << (k - 1), 1) +
                NilCoxElement::term(Permutation::identity(4), uint32_t{1} << k, -1);
            sum += nc_mul(nc_mul(left, alpha), right);
        }
        if (!(sum == nc_differential(NilCoxElement::term(w, 0, 1)))) {
            msg = "reduced word formula differs at w=" + w.to_string();
            return false;
        }
    }
    return true;
}

bool criterion6(std::string& msg) {
    for (int n : {4, 5}) {
        for (const auto& sh : comparable_shapes(n, 2)) {
            auto cmp = comparison_bijection(sh);  // validates both sides internally
            auto strata = deodhar_strata(sh);
            if (cmp.entries.size() != weq_set(sh).size()) { msg = "cardinality"; return false; }
            for (const auto& e : cmp.entries) {
                bool found = false;
                for (const auto& s : strata)
                    if (s.w == e.sigma &&
                        deodhar_cell_size(e.gamma) == std::make_pair(s.alpha, s.beta))
                        found = true;
                if (!found) {
                    msg = "cell data mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    auto ds = dist_set(Permutation::identity(4), {2, 1, 3, 2}, 2, 4);
    if (ds.size() != 2) { msg = "printed example cardinality"; return false; }
    bool data_ok = ds[0].n1 == 2 && ds[0].n2 == 2 && ds[0].m == 0 && ds[1].n1 == 2 &&
                   ds[1].n2 == 0 && ds[1].m == 1;
    if (!data_ok) { msg = "printed (n1,n2,m) data"; return false; }
    return true;
}

bool criterion7(std::string& msg) {
    auto e4 = PWElement(Permutation::identity(4), 2);
    if (mixpol_lie(PWElement(Permutation({1, 3, 2, 4}), 2), e4) !=
        mono(1, -1, 1) + mono(1, 1, 0)) {
        msg = "mixpol_lie(s2, e)";
        return false;
    }
    if (mixpol_lie(PWElement(Permutation({3, 1, 4, 2}), 2), e4) !=
        mono(1, -3, 3) + mono(1, -1, 2)) {
        msg = "mixpol_lie(s2 s1 s3, e)";
        return false;
    }
    for (int n : {4, 5}) {
        auto pws = all_pw_elements(n, 2);
        for (const auto& x : pws)
            for (const auto& y : pws) {
                if (!crosscheck(x, y).equal) {
                    msg = "crosscheck at x=" + x.x.to_string() + " y=" + y.x.to_string();
                    return false;
                }
                auto sd = shelton_dims(x, y);
                BiLaurent profile = mixpol_lie(x, y).substitute(1, 1, 0, 0);
                std::map<int, long long> pm;
                for (const auto& [e, c] : profile.terms()) pm[e.second] = c;
                if (sd != pm) {
                    msg = "shelton profile at x=" + x.x.to_string() + " y=" + y.x.to_string();
                    return false;
                }
            }
    }
    return true;
}

bool criterion8(std::string& msg) {
    Subset H{1, 2}, I{2, 3}, J{3, 4};
    NilCoxElement de = NilCoxElement::term(Permutation({1, 2}), 0, 1);
    NilCoxElement de_y1 = NilCoxElement::term(Permutation({1, 2}), 0b01, 1);
    bool ok = model_multiply(H, I, J, 4, de, de) == de &&
              model_multiply(H, I, J, 4, de, de_y1) == de_y1 &&
              model_multiply(H, I, J, 4, de_y1, de) == de_y1 &&
              model_multiply(H, I, J, 4, de_y1, de_y1).is_zero();
    if (!ok) { msg = "composition rule on y_1 powers"; return false; }
    return true;
}

bool criterion9(std::string& msg) {
    for (int d = 1; d <= 3; ++d)
        for (int n = d; n <= 6; ++n)
            for (const auto& sh : comparable_shapes(n, d)) {
                auto direct = weq_set(sh);
                std::sort(direct.begin(), direct.end());
                if (weq_recursive(sh) != direct) {
                    msg = "weq recursion at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
    for (int d = 2; d <= 3; ++d)
        for (int n = d + 1; n <= 6; ++n) {
            auto pws = all_pw_elements(n, d);
            for (const auto& x : pws)
                for (const auto& y : pws)
                    if (!mixpol_descent_independent(x, y)) {
                        msg = "descent dependence at x=" + x.x.to_string();
                        return false;
                    }
        }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Gr(2,4) appendix table reproduced by deodhar_strata", criterion1},
        {2, "worked example I={1,2,4} J={2,5,7}: strata and node positions", criterion2},
        {3, "oracle = Deodhar = Gauss = model point counts on Gr(2,4), Gr(2,5), Gr(3,5), "
            "p in {2,3,5}",
         criterion3},
        {4, "GL_d model cohomology for d = 1,2,3 and the four GL_2 classes", criterion4},
        {5, "dg-algebra laws: d^2 = 0, Leibniz, reduced-word formula", criterion5},
        {6, "Deodhar comparison bijection on Gr(2,4), Gr(2,5) with printed data", criterion6},
        {7, "category-O crosscheck, printed bidegrees, Shelton profiles", criterion7},
        {8, "model multiplication reproduces the appendix composition", criterion8},
        {9, "recursion equivalences up to Gr(3,6)", criterion9},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("%s criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description.c_str(), static_cast<long long>(ms), ok ? "" : " -- ",
                    ok ? "" : msg.c_str());
        if (!ok) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
