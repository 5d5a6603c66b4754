#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "richardson/shapes.hpp"
#include "richardson/strata.hpp"

namespace rich {

using GridPoint = std::pair<int, int>;  // (row, col), row 1 = top

/// Fukaya diagram of shape (I,J) with one circle per strand: the strand
/// bending at (k, i_{w(k)}) is matched with the vertical strand j_k at
/// (w(k), j_k); overlapping strands meet at the bend.
struct MatchedDiagram {
    Shape shape;
    Permutation w;
    std::set<GridPoint> marks;
    bool strong = false;
};

struct DecoratedDiagram {
    MatchedDiagram base;
    std::set<GridPoint> gm_nodes;
    std::set<GridPoint> a1_nodes;
    DecompositionKind kind = DecompositionKind::Gauss;
};

/// Requires w in wle_set(sh); throws std::invalid_argument otherwise.
MatchedDiagram build_matched(const Shape& sh, const Permutation& w);

/// Decorations per the column rules: Gm node on marks of strands starting at
/// different points; row crosses strictly between bend and mark; remove each
/// cross with a mark anywhere below it in its column.
DecoratedDiagram gauss_decorate(const MatchedDiagram& md);

/// Requires a strong matching. Row crosses omit positions on vertical
/// strands; a crossing gets a cross when the vertical strand's mark is
/// strictly above and the horizontal strand's mark strictly to the left.
DecoratedDiagram deodhar_decorate(const MatchedDiagram& md);

/// (|gm_nodes|, |a1_nodes|).
std::pair<int, int> node_counts(const DecoratedDiagram& dd);

/// Choice of circle (in `circled`) or cross (otherwise) for each Gm node,
/// naming a basis vector of the stratum's compactly supported cohomology.
/// Passing std::nullopt renders the plain decorated diagram.
using CircledSubset = std::optional<std::set<GridPoint>>;

/// Text grid: '1' leading entries, 'O' Gm node, 'x' A1 node, '*' bare mark,
/// '|' and '-' strands, 'o'/'X' circled/crossed Gm nodes of a cohomological
/// diagram. One line per row plus a column ruler.
std::string render_text(const DecoratedDiagram& dd, const CircledSubset& circled = std::nullopt);

/// Standalone SVG: one <circle> per Gm node, one two-line cross per A1 node,
/// polylines for strands, small squares for bare marks.
std::string render_svg(const DecoratedDiagram& dd, const CircledSubset& circled = std::nullopt);
void render_svg_file(const DecoratedDiagram& dd, const std::string& path,
                     const CircledSubset& circled = std::nullopt);

/// Node sets recovered from a rendered text grid, for round-trip checks:
/// (marks, gm_nodes, a1_nodes).
struct ParsedGrid {
    std::set<GridPoint> marks, gm_nodes, a1_nodes;
};
ParsedGrid parse_text_nodes(const std::string& grid);

/// All cohomological diagrams of dd in lexicographic order of the circled
/// subset (as a sorted list of grid points).
std::vector<std::set<GridPoint>> circled_subsets(const DecoratedDiagram& dd);

}  // namespace rich
