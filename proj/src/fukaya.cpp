#include "richardson/fukaya.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rich {

namespace {

int index_of(const Subset& S, int x) {
    auto it = std::lower_bound(S.begin(), S.end(), x);
    if (it != S.end() && *it == x) return static_cast<int>(it - S.begin()) + 1;
    return 0;
}

}  // namespace

MatchedDiagram build_matched(const Shape& sh, const Permutation& w) {
    if (w.size() != sh.d) throw std::invalid_argument("build_matched: rank mismatch");
    MatchedDiagram md;
    md.shape = sh;
    md.w = w;
    for (int k = 1; k <= sh.d; ++k) {
        int row = w(k);
        int bend = sh.I[static_cast<size_t>(row) - 1];
        int col = sh.J[static_cast<size_t>(k) - 1];
        if (bend > col)
            throw std::invalid_argument("build_matched: strands " + std::to_string(bend) + " and " +
                                        std::to_string(col) + " do not intersect (monotonicity)");
        md.marks.insert({row, col});
    }
    // strong iff every common column is matched at its bend
    md.strong = true;
    for (int k = 1; k <= sh.d; ++k) {
        int kp = index_of(sh.J, sh.I[static_cast<size_t>(k) - 1]);
        if (kp != 0 && w(kp) != k) md.strong = false;
    }
    return md;
}

namespace {

// mark of row k sits at column j_{w^-1(k)}
int mark_column(const MatchedDiagram& md, int row) {
    return md.shape.J[static_cast<size_t>(md.w.inverse()(row)) - 1];
}

void add_gm_nodes(const MatchedDiagram& md, DecoratedDiagram& dd) {
    for (int k = 1; k <= md.shape.d; ++k) {
        int bend = md.shape.I[static_cast<size_t>(k) - 1];
        int col = mark_column(md, k);
        if (bend != col) dd.gm_nodes.insert({k, col});
    }
}

}  // namespace

DecoratedDiagram gauss_decorate(const MatchedDiagram& md) {
    DecoratedDiagram dd;
    dd.base = md;
    dd.kind = DecompositionKind::Gauss;
    add_gm_nodes(md, dd);
    for (int k = 1; k <= md.shape.d; ++k) {
        int bend = md.shape.I[static_cast<size_t>(k) - 1];
        int stop = mark_column(md, k);
        for (int c = bend + 1; c < stop; ++c) {
            // removed when a mark sits anywhere in the column below
            bool shadowed = false;
            for (int r = k + 1; r <= md.shape.d && !shadowed; ++r)
                shadowed = md.marks.count({r, c}) > 0;
            if (!shadowed) dd.a1_nodes.insert({k, c});
        }
    }
    return dd;
}

DecoratedDiagram deodhar_decorate(const MatchedDiagram& md) {
    if (!md.strong)
        throw std::invalid_argument("deodhar_decorate: matching is not strong");
    DecoratedDiagram dd;
    dd.base = md;
    dd.kind = DecompositionKind::Deodhar;
    add_gm_nodes(md, dd);
    for (int k = 1; k <= md.shape.d; ++k) {
        int bend = md.shape.I[static_cast<size_t>(k) - 1];
        int stop = mark_column(md, k);
        for (int c = bend + 1; c < stop; ++c)
            if (!index_of(md.shape.J, c)) dd.a1_nodes.insert({k, c});
    }
    // crossings whose vertical mark is strictly above and horizontal mark
    // strictly to the left
    for (int k = 1; k <= md.shape.d; ++k) {
        int bend = md.shape.I[static_cast<size_t>(k) - 1];
        int hmark = mark_column(md, k);
        for (int kp = 1; kp <= md.shape.d; ++kp) {
            int c = md.shape.J[static_cast<size_t>(kp) - 1];
            if (c < bend) continue;  // not on the horizontal segment
            int vmark_row = md.w(kp);
            if (vmark_row < k && hmark < c) dd.a1_nodes.insert({k, c});
        }
    }
    return dd;
}

std::pair<int, int> node_counts(const DecoratedDiagram& dd) {
    return {static_cast<int>(dd.gm_nodes.size()), static_cast<int>(dd.a1_nodes.size())};
}

std::string render_text(const DecoratedDiagram& dd, const CircledSubset& circled) {
    const Shape& sh = dd.base.shape;
    std::vector<std::string> grid(static_cast<size_t>(sh.d), std::string(static_cast<size_t>(sh.n), ' '));
    auto at = [&grid](int r, int c) -> char& {
        return grid[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1];
    };
    // vertical strands for J
    for (int c : sh.J)
        for (int r = 1; r <= sh.d; ++r) at(r, c) = '|';
    // strands for I: vertical up to the bend row, then horizontal
    for (int k = 1; k <= sh.d; ++k) {
        int c = sh.I[static_cast<size_t>(k) - 1];
        for (int r = sh.d; r >= k; --r)
            if (at(r, c) == ' ') at(r, c) = '|';
        for (int cc = c + 1; cc <= sh.n; ++cc)
            if (at(k, cc) == '|') at(k, cc) = '+';
            else at(k, cc) = '-';
        at(k, c) = '1';
    }
    for (const auto& [r, c] : dd.base.marks) at(r, c) = '*';
    for (const auto& [r, c] : dd.gm_nodes) {
        if (circled) at(r, c) = circled->count({r, c}) ? 'o' : 'X';
        else at(r, c) = 'O';
    }
    for (const auto& [r, c] : dd.a1_nodes) at(r, c) = 'x';
    std::string out;
    for (const auto& row : grid) out += row + "\n";
    for (int c = 1; c <= sh.n; ++c) out += static_cast<char>('0' + c % 10);
    out += "\n";
    return out;
}

ParsedGrid parse_text_nodes(const std::string& grid) {
    ParsedGrid pg;
    int r = 1, c = 1;
    for (char ch : grid) {
        if (ch == '\n') { ++r; c = 1; continue; }
        GridPoint p{r, c};
        switch (ch) {
            case 'O': case 'o': case 'X': pg.gm_nodes.insert(p); pg.marks.insert(p); break;
            case 'x': pg.a1_nodes.insert(p); break;
            case '*': pg.marks.insert(p); break;
            default: break;
        }
        ++c;
    }
    return pg;
}

namespace {

constexpr int kCell = 24;  // svg pixels per grid cell

int sx(int col) { return col * kCell; }
int sy(int row) { return row * kCell; }

}  // namespace

std::string render_svg(const DecoratedDiagram& dd, const CircledSubset& circled) {
    const Shape& sh = dd.base.shape;
    std::ostringstream svg;
    int w = (sh.n + 1) * kCell, h = (sh.d + 1) * kCell;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (int k = 1; k <= sh.d; ++k) {
        int c = sh.J[static_cast<size_t>(k) - 1];
        svg << "  <polyline class=\"strand-j\" fill=\"none\" stroke=\"black\" points=\""
            << sx(c) << "," << sy(0) + kCell / 2 << " " << sx(c) << "," << sy(sh.d) + kCell / 2
            << "\"/>\n";
    }
    for (int k = 1; k <= sh.d; ++k) {
        int c = sh.I[static_cast<size_t>(k) - 1];
        svg << "  <polyline class=\"strand-i\" fill=\"none\" stroke=\"crimson\" points=\""
            << sx(c) << "," << sy(sh.d) + kCell / 2 << " " << sx(c) << "," << sy(k) << " "
            << sx(sh.n) + kCell / 2 << "," << sy(k) << "\"/>\n";
    }
    for (const auto& [r, c] : dd.base.marks) {
        if (dd.gm_nodes.count({r, c})) continue;
        svg << "  <rect class=\"mark\" x=\"" << sx(c) - 3 << "\" y=\"" << sy(r) - 3
            << "\" width=\"6\" height=\"6\" fill=\"black\"/>\n";
    }
    auto cross = [&svg](const char* cls, int r, int c) {
        svg << "  <line class=\"" << cls << "\" stroke=\"black\" x1=\"" << sx(c) - 5 << "\" y1=\""
            << sy(r) - 5 << "\" x2=\"" << sx(c) + 5 << "\" y2=\"" << sy(r) + 5 << "\"/>\n"
            << "  <line class=\"" << cls << "\" stroke=\"black\" x1=\"" << sx(c) - 5 << "\" y1=\""
            << sy(r) + 5 << "\" x2=\"" << sx(c) + 5 << "\" y2=\"" << sy(r) - 5 << "\"/>\n";
    };
    for (const auto& [r, c] : dd.gm_nodes) {
        if (!circled || circled->count({r, c}) > 0)
            svg << "  <circle class=\"gm\" cx=\"" << sx(c) << "\" cy=\"" << sy(r)
                << "\" r=\"7\" fill=\"none\" stroke=\"black\"/>\n";
        else
            cross("gm-cross", r, c);
    }
    for (const auto& [r, c] : dd.a1_nodes) cross("a1", r, c);
    svg << "</svg>\n";
    return svg.str();
}

void render_svg_file(const DecoratedDiagram& dd, const std::string& path,
                     const CircledSubset& circled) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("render_svg_file: cannot open " + path);
    out << render_svg(dd, circled);
    if (!out) throw std::runtime_error("render_svg_file: write failed for " + path);
}

std::vector<std::set<GridPoint>> circled_subsets(const DecoratedDiagram& dd) {
    std::vector<GridPoint> gm(dd.gm_nodes.begin(), dd.gm_nodes.end());
    size_t a = gm.size();
    std::vector<std::set<GridPoint>> out;
    std::vector<std::vector<GridPoint>> lists;
    for (uint64_t mask = 0; mask < (uint64_t{1} << a); ++mask) {
        std::vector<GridPoint> pick;
        for (size_t i = 0; i < a; ++i)
            if ((mask >> i) & 1) pick.push_back(gm[i]);
        lists.push_back(std::move(pick));
    }
    std::sort(lists.begin(), lists.end());
    for (auto& l : lists) out.emplace_back(l.begin(), l.end());
    return out;
}

}  // namespace rich
