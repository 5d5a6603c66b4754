#include "richardson/verify.hpp"

#include <algorithm>

#include "richardson/cato.hpp"
#include "richardson/fukaya.hpp"
#include "richardson/nilcox.hpp"
#include "richardson/oracle.hpp"
#include "richardson/shapes.hpp"
#include "richardson/strata.hpp"

namespace rich {

namespace {

struct Collector {
    std::vector<CheckResult> results;
    CheckResult* current = nullptr;

    void begin(const std::string& name) {
        results.push_back({name, true, 0, ""});
        current = &results.back();
    }
    void record(bool ok, const std::string& what) {
        current->cases += 1;
        if (!ok && current->passed) {
            current->passed = false;
            current->detail = what;
        }
    }
};

std::string shape_name(const Shape& sh) {
    auto list = [](const Subset& s) {
        std::string r;
        for (size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
        return r;
    };
    return "I={" + list(sh.I) + "} J={" + list(sh.J) + "} n=" + std::to_string(sh.n);
}

}  // namespace

std::vector<CheckResult> run_verification(int n, int d, int prime) {
    Collector col;
    std::vector<Shape> shapes;
    for (const auto& I : all_subsets(n, d))
        for (const auto& J : all_subsets(n, d)) {
            Shape sh(n, I, J);
            if (sh.comparable()) shapes.push_back(sh);
        }

    col.begin("weq_recursive matches direct filter");
    for (const auto& sh : shapes) {
        auto a = weq_set(sh);
        auto b = weq_recursive(sh);
        std::sort(a.begin(), a.end());
        col.record(a == b, shape_name(sh));
    }

    col.begin("gauss and deodhar point counts agree at t = -1");
    for (const auto& sh : shapes)
        col.record(point_count_poly(gauss_strata(sh)).eval_t(-1) ==
                       point_count_poly(deodhar_strata(sh)).eval_t(-1),
                   shape_name(sh));

    col.begin("diagram node counts match closed formulas");
    for (const auto& sh : shapes) {
        for (const auto& s : gauss_strata(sh)) {
            auto dd = gauss_decorate(build_matched(sh, s.w));
            col.record(node_counts(dd) == std::make_pair(s.alpha, s.beta),
                       shape_name(sh) + " w=" + s.w.to_string() + " (gauss)");
        }
        for (const auto& s : deodhar_strata(sh)) {
            auto dd = deodhar_decorate(build_matched(sh, s.w));
            col.record(node_counts(dd) == std::make_pair(s.alpha, s.beta),
                       shape_name(sh) + " w=" + s.w.to_string() + " (deodhar)");
        }
    }

    col.begin("comparison bijection cardinalities and cell data");
    for (const auto& sh : shapes) {
        bool ok = true;
        std::string what = shape_name(sh);
        try {
            auto cmp = comparison_bijection(sh);
            auto strata = deodhar_strata(sh);
            for (const auto& entry : cmp.entries) {
                auto it = std::find_if(strata.begin(), strata.end(), [&](const auto& s) {
                    return s.w == entry.sigma;
                });
                if (it == strata.end() ||
                    deodhar_cell_size(entry.gamma) != std::make_pair(it->alpha, it->beta))
                    ok = false;
            }
        } catch (const std::exception& e) {
            ok = false;
            what += std::string(": ") + e.what();
        }
        col.record(ok, what);
    }

    col.begin("model complex: d^2 = 0 and blockwise consistency");
    for (const auto& sh : shapes) {
        bool ok = true;
        auto gc = model(sh);
        for (const auto& [pq, elems] : gc.blocks()) {
            auto m1 = gc.block_matrix(pq.first, pq.second);
            auto m2 = gc.block_matrix(pq.first + 1, pq.second);
            if (m1.empty() || m2.empty()) continue;
            for (size_t j = 0; j < m1[0].size(); ++j)
                for (size_t i = 0; i < m2.size(); ++i) {
                    BigInt acc = 0;
                    for (size_t k = 0; k < m1.size(); ++k) acc += m2[i][k] * m1[k][j];
                    if (acc != 0) ok = false;
                }
        }
        col.record(ok, shape_name(sh));
    }

    col.begin("model mixPol matches strata polynomial at t = -1");
    for (const auto& sh : shapes) {
        auto coh = model(sh).cohomology();
        auto strata_poly = point_count_poly(deodhar_strata(sh));
        col.record(coh.mixpol().eval_t(-1) == strata_poly.eval_t(-1), shape_name(sh));
    }

    col.begin("model E1 page equals strata polynomial");
    for (const auto& sh : shapes)
        col.record(model(sh).e1_mixpol() == point_count_poly(deodhar_strata(sh)),
                   shape_name(sh));

    col.begin("category-O crosscheck identity");
    for (const auto& sh : shapes) {
        auto x = psi_inv(sh.I, n), y = psi_inv(sh.J, n);
        col.record(crosscheck(x, y).equal, shape_name(sh));
    }

    col.begin("shelton dims equal mixpol at v = 1");
    for (const auto& sh : shapes) {
        auto x = psi_inv(sh.I, n), y = psi_inv(sh.J, n);
        auto sd = shelton_dims(x, y);
        BiLaurent profile = mixpol_lie(x, y).substitute(1, 1, 0, 0);
        bool ok = true;
        for (const auto& [r, e] : sd)
            if (profile.coeff(0, r) != e) ok = false;
        long long total = 0;
        for (const auto& [r, e] : sd) total += e;
        long long ptotal = 0;
        for (const auto& [ex, c] : profile.terms()) ptotal += c;
        if (total != ptotal) ok = false;
        col.record(ok, shape_name(sh));
    }

    if (prime > 0) {
        col.begin("oracle point count matches polynomials at (p, -1)");
        for (const auto& sh : shapes) {
            long long pts = count_points(sh, prime);
            auto poly = point_count_poly(deodhar_strata(sh));
            col.record(pts == poly.eval(prime, -1), shape_name(sh));
        }

        col.begin("oracle per-stratum counts match (p-1)^a p^b");
        for (const auto& sh : shapes) {
            bool ok = true;
            auto tally = count_by_stratum(sh, prime);
            auto strata = deodhar_strata(sh);
            if (tally.size() != strata.size()) ok = false;
            for (const auto& s : strata) {
                long long expect = 1;
                for (int i = 0; i < s.alpha; ++i) expect *= prime - 1;
                for (int i = 0; i < s.beta; ++i) expect *= prime;
                auto it = tally.find(s.w);
                if (it == tally.end() || it->second != expect) ok = false;
            }
            col.record(ok, shape_name(sh));
        }
    }

    return col.results;
}

}  // namespace rich
