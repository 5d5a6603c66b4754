// Command line front end for the Richardson decomposition library. Talks to
// the shared library exclusively through the C API in richardson.h.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "richardson.h"

namespace {

std::vector<int> parse_comma_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

struct ShapeArgs {
    int n = 0, d = 0;
    std::string I, J;
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args) {
    cmd->add_option("--n", args.n, "ambient size")->required();
    cmd->add_option("--d", args.d, "rank")->required();
    cmd->add_option("--I", args.I, "comma separated d-subset")->required();
    cmd->add_option("--J", args.J, "comma separated d-subset")->required();
}

using ShapePtr = std::unique_ptr<rc_shape, decltype(&rc_shape_free)>;

int make_shape(const ShapeArgs& args, ShapePtr& out) {
    std::vector<int> I, J;
    try {
        I = parse_comma_list(args.I);
        J = parse_comma_list(args.J);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return RC_BAD_INPUT;
    }
    if (static_cast<int>(I.size()) != args.d || static_cast<int>(J.size()) != args.d) {
        std::cerr << "error: I and J must list exactly d = " << args.d << " columns\n";
        return RC_BAD_INPUT;
    }
    rc_shape* sh = nullptr;
    rc_status st = rc_shape_create(args.n, args.d, I.data(), J.data(), &sh);
    if (st != RC_OK) {
        std::cerr << "error: " << rc_last_error() << "\n";
        return st;
    }
    out = ShapePtr(sh, &rc_shape_free);
    return RC_OK;
}

// --svg and other outputs resolve relative paths against RICHARDSON_OUT_DIR
// when it is set; explicit absolute paths win.
std::string resolve_output_path(const std::string& path) {
    namespace fs = std::filesystem;
    const char* dir = std::getenv("RICHARDSON_OUT_DIR");
    if (!dir || *dir == '\0' || fs::path(path).is_absolute()) return path;
    return (fs::path(dir) / path).string();
}

int emit_or_fail(rc_status st, char* text) {
    if (st != RC_OK) {
        std::cerr << "error: " << rc_last_error() << "\n";
        return st;
    }
    std::cout << text;
    rc_string_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompositions and cohomology of open Richardson varieties"};
    app.require_subcommand(1);

    ShapeArgs strata_args, poincare_args, diagram_args;
    std::string strata_kind = "deodhar", strata_format = "json";
    std::string diagram_kind = "deodhar", diagram_format = "text", svg_path, diagram_w;
    bool with_lie = false;
    int verify_n = 7, verify_d = 3, verify_prime = 0;
    bool verify_sweep = false;

    auto* strata = app.add_subcommand("strata", "strata of a decomposition");
    add_shape_options(strata, strata_args);
    strata->add_option("--kind", strata_kind, "gauss|deodhar")
        ->check(CLI::IsMember({"gauss", "deodhar"}));
    strata->add_option("--format", strata_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* poincare = app.add_subcommand("poincare", "mixed Hodge polynomial of the model");
    add_shape_options(poincare, poincare_args);
    poincare->add_flag("--lie", with_lie, "include the category-O polynomial and crosscheck");

    auto* diagram = app.add_subcommand("diagram", "decorated Fukaya diagram");
    add_shape_options(diagram, diagram_args);
    diagram->add_option("--w", diagram_w, "one-line notation, comma separated")->required();
    diagram->add_option("--kind", diagram_kind, "gauss|deodhar")
        ->check(CLI::IsMember({"gauss", "deodhar"}));
    diagram->add_option("--svg", svg_path, "write an SVG file to this path");
    diagram->add_option("--format", diagram_format, "text|none")
        ->check(CLI::IsMember({"text", "none"}));

    auto* verify = app.add_subcommand("verify", "run the consistency suites");
    verify->add_option("--n", verify_n, "ambient size (default 7)");
    verify->add_option("--d", verify_d, "rank (default 3)");
    verify->add_option("--prime", verify_prime, "also run the F_p oracle checks");
    verify->add_flag("--sweep", verify_sweep, "sweep all (n', d') up to the bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return RC_BAD_INPUT;
    }

    if (strata->parsed()) {
        ShapePtr sh(nullptr, &rc_shape_free);
        if (int st = make_shape(strata_args, sh)) return st;
        rc_kind kind = strata_kind == "gauss" ? RC_KIND_GAUSS : RC_KIND_DEODHAR;
        char* text = nullptr;
        rc_status st = rc_strata_json(sh.get(), kind, &text);
        if (st != RC_OK) {
            std::cerr << "error: " << rc_last_error() << "\n";
            return st;
        }
        if (strata_format == "json") {
            std::cout << text << "\n";
        } else {
            auto js = nlohmann::json::parse(text);
            std::cout << "strata (" << js["kind"].get<std::string>() << ")\n";
            for (const auto& s : js["strata"]) {
                std::cout << "  w=[";
                bool first = true;
                for (const auto& v : s["w"]) {
                    if (!first) std::cout << ",";
                    std::cout << v.get<int>();
                    first = false;
                }
                std::cout << "]  (Gm)^" << s["alpha"].get<int>() << " x A^"
                          << s["beta"].get<int>() << "\n";
            }
        }
        rc_string_free(text);
        return 0;
    }

    if (poincare->parsed()) {
        ShapePtr sh(nullptr, &rc_shape_free);
        if (int st = make_shape(poincare_args, sh)) return st;
        char* text = nullptr;
        rc_status st = rc_poincare_json(sh.get(), with_lie ? 1 : 0, &text);
        int code = emit_or_fail(st, text);
        if (code == 0) std::cout << "\n";
        return code;
    }

    if (diagram->parsed()) {
        ShapePtr sh(nullptr, &rc_shape_free);
        if (int st = make_shape(diagram_args, sh)) return st;
        std::vector<int> w;
        try {
            w = parse_comma_list(diagram_w);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return RC_BAD_INPUT;
        }
        if (static_cast<int>(w.size()) != diagram_args.d) {
            std::cerr << "error: --w must list d = " << diagram_args.d << " values\n";
            return RC_BAD_INPUT;
        }
        rc_kind kind = diagram_kind == "gauss" ? RC_KIND_GAUSS : RC_KIND_DEODHAR;
        if (diagram_format == "text") {
            char* text = nullptr;
            rc_status st = rc_diagram_text(sh.get(), kind, w.data(), &text);
            if (int code = emit_or_fail(st, text)) return code;
        }
        if (!svg_path.empty()) {
            char* svg = nullptr;
            rc_status st = rc_diagram_svg(sh.get(), kind, w.data(), &svg);
            if (st != RC_OK) {
                std::cerr << "error: " << rc_last_error() << "\n";
                return st;
            }
            std::string path = resolve_output_path(svg_path);
            std::ofstream out(path);
            if (!out) {
                std::cerr << "error: cannot write " << path << "\n";
                rc_string_free(svg);
                return RC_INTERNAL;
            }
            out << svg;
            rc_string_free(svg);
        }
        return 0;
    }

    // verify
    int worst = 0;
    std::vector<std::pair<int, int>> runs;
    if (verify_sweep) {
        for (int d = 1; d <= verify_d; ++d)
            for (int n = d; n <= verify_n; ++n) runs.push_back({n, d});
    } else {
        runs.push_back({verify_n, verify_d});
    }
    for (auto [n, d] : runs) {
        char* text = nullptr;
        rc_status st = rc_verify_json(n, d, verify_prime, &text);
        if (st != RC_OK && st != RC_VERIFY_FAILED) {
            std::cerr << "error: " << rc_last_error() << "\n";
            return st;
        }
        std::cout << text << "\n";
        rc_string_free(text);
        if (st == RC_VERIFY_FAILED) worst = 1;
    }
    return worst;
}
