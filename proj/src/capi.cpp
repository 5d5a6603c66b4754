#include "richardson.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "richardson/cato.hpp"
#include "richardson/fukaya.hpp"
#include "richardson/nilcox.hpp"
#include "richardson/oracle.hpp"
#include "richardson/shapes.hpp"
#include "richardson/strata.hpp"
#include "richardson/verify.hpp"

using nlohmann::json;

struct rc_shape {
    rich::Shape shape;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rc_status fail(rc_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <class Fn>
rc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(RC_BAD_INPUT, e.what());
    } catch (const std::logic_error& e) {
        return fail(RC_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(RC_INTERNAL, e.what());
    }
}

json shape_json(const rich::Shape& sh) {
    return json{{"n", sh.n}, {"d", sh.d}, {"I", sh.I}, {"J", sh.J}};
}

json mixpol_json(const rich::BiLaurent& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e.first, e.second, c}));
    return arr;
}

json strata_json_impl(const rich::Shape& sh, rc_kind kind) {
    auto strata = kind == RC_KIND_GAUSS ? rich::gauss_strata(sh) : rich::deodhar_strata(sh);
    json out;
    out["shape"] = shape_json(sh);
    out["kind"] = kind == RC_KIND_GAUSS ? "gauss" : "deodhar";
    json arr = json::array();
    for (const auto& s : strata) {
        json e;
        e["w"] = s.w.images();
        e["alpha"] = s.alpha;
        e["beta"] = s.beta;
        e["mixpol"] = mixpol_json(rich::point_count_poly({s}));
        arr.push_back(e);
    }
    out["strata"] = arr;
    out["mixpol"] = mixpol_json(rich::point_count_poly(strata));
    return out;
}

rich::Permutation parse_w(const rich::Shape& sh, const int* w) {
    std::vector<int> img(w, w + sh.d);
    return rich::Permutation(img);
}

}  // namespace

extern "C" {

const char* rc_version(void) { return "1.0.0"; }

const char* rc_last_error(void) { return g_last_error.c_str(); }

void rc_string_free(char* s) { std::free(s); }

rc_status rc_shape_create(int n, int d, const int* I, const int* J, rc_shape** out) {
    return guarded([&]() {
        if (!I || !J || !out || d < 0 || n < 0)
            return fail(RC_BAD_INPUT, "rc_shape_create: null arguments");
        rich::Subset si(I, I + d), sj(J, J + d);
        *out = new rc_shape{rich::Shape(n, si, sj)};
        return RC_OK;
    });
}

void rc_shape_free(rc_shape* sh) { delete sh; }

rc_status rc_strata_json(const rc_shape* sh, rc_kind kind, char** out_json) {
    return guarded([&]() {
        if (!sh || !out_json) return fail(RC_BAD_INPUT, "null arguments");
        *out_json = dup_string(strata_json_impl(sh->shape, kind).dump(2));
        return RC_OK;
    });
}

rc_status rc_poincare_json(const rc_shape* sh, int with_lie, char** out_json) {
    return guarded([&]() {
        if (!sh || !out_json) return fail(RC_BAD_INPUT, "null arguments");
        const rich::Shape& shape = sh->shape;
        if (!shape.comparable())
            return fail(RC_BAD_INPUT, "rc_poincare_json: need I <= J");
        json out;
        out["shape"] = shape_json(shape);
        auto coh = rich::model(shape).cohomology();
        rich::BiLaurent mix = coh.mixpol();
        out["mixpol"] = mixpol_json(mix);
        out["mixpol_text"] = mix.to_string("q", "t");
        out["point_count"] = mixpol_json(mix.eval_t(-1));
        json reps = json::array();
        for (const auto& [pq, vecs] : coh.representatives)
            for (const auto& v : vecs)
                reps.push_back(json{{"p", pq.first},
                                    {"q", pq.second},
                                    {"class", v.to_string("del")}});
        out["representatives"] = reps;
        if (with_lie) {
            auto x = rich::psi_inv(shape.I, shape.n);
            auto y = rich::psi_inv(shape.J, shape.n);
            auto lie = rich::mixpol_lie(x, y);
            auto report = rich::crosscheck(x, y);
            auto gj = rich::gj_report(x, y);
            json ext = json::object();
            for (const auto& [r, e] : gj.ext_dims) ext[std::to_string(r)] = e;
            out["lie"] = {{"x", x.x.images()},
                          {"y", y.x.images()},
                          {"mixpol", mixpol_json(lie)},
                          {"mixpol_text", lie.to_string("v", "t")},
                          {"lie_side_u", mixpol_json(report.lie_side)},
                          {"geom_side_u", mixpol_json(report.geom_side)},
                          {"equal", report.equal},
                          {"ext_dims", ext},
                          {"point_count_vs_ext_asymmetric", gj.asymmetric}};
        }
        *out_json = dup_string(out.dump(2));
        return RC_OK;
    });
}

namespace {

rc_status diagram_impl(const rc_shape* sh, rc_kind kind, const int* w, char** out, bool svg) {
    return guarded([&]() {
        if (!sh || !w || !out) return fail(RC_BAD_INPUT, "null arguments");
        rich::Permutation perm = parse_w(sh->shape, w);
        rich::MatchedDiagram md;
        try {
            md = rich::build_matched(sh->shape, perm);
        } catch (const std::invalid_argument& e) {
            return fail(RC_INADMISSIBLE,
                        std::string("monotonicity condition violated: ") + e.what());
        }
        rich::DecoratedDiagram dd;
        if (kind == RC_KIND_GAUSS) {
            dd = rich::gauss_decorate(md);
        } else {
            if (!md.strong)
                return fail(RC_INADMISSIBLE, "equality condition violated: matching not strong");
            dd = rich::deodhar_decorate(md);
        }
        *out = dup_string(svg ? rich::render_svg(dd) : rich::render_text(dd));
        return RC_OK;
    });
}

}  // namespace

rc_status rc_diagram_text(const rc_shape* sh, rc_kind kind, const int* w, char** out_text) {
    return diagram_impl(sh, kind, w, out_text, false);
}

rc_status rc_diagram_svg(const rc_shape* sh, rc_kind kind, const int* w, char** out_svg) {
    return diagram_impl(sh, kind, w, out_svg, true);
}

rc_status rc_point_count(const rc_shape* sh, int prime, long long* out_count) {
    return guarded([&]() {
        if (!sh || !out_count) return fail(RC_BAD_INPUT, "null arguments");
        *out_count = rich::count_points(sh->shape, prime);
        return RC_OK;
    });
}

rc_status rc_verify_json(int n, int d, int prime, char** out_json) {
    return guarded([&]() {
        if (!out_json || n < 0 || d < 0 || d > n)
            return fail(RC_BAD_INPUT, "rc_verify_json: bad bounds");
        auto results = rich::run_verification(n, d, prime);
        json checks = json::object();
        int passed = 0, failed = 0;
        for (const auto& r : results) {
            checks[r.name] = r.passed;
            (r.passed ? passed : failed) += 1;
        }
        json out;
        out["n"] = n;
        out["d"] = d;
        if (prime > 0) out["prime"] = prime;
        out["checks"] = checks;
        json details = json::array();
        for (const auto& r : results)
            if (!r.passed) details.push_back(json{{"check", r.name}, {"case", r.detail}});
        out["failures"] = details;
        out["passed"] = passed;
        out["failed"] = failed;
        *out_json = dup_string(out.dump(2));
        if (failed > 0) return fail(RC_VERIFY_FAILED, "verification failed");
        return RC_OK;
    });
}

}  // extern "C"
