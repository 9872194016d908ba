#pragma once

#include "goeritz/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace goeritz {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Exact punctured-torus geometry.  Each side is the square torus R^2/Z^2 with
// an open L1-diamond of radius eps removed around the lattice point; c is the
// diamond boundary, blown up to an abstract collar annulus with coordinate
// (Theta, u), u = +1 glued to the plus side, u = -1 to the minus side via
// theta_minus = 1/2 - Theta (all angles in turns).  mu is the horizontal
// circle y = 1/2 of a side (bounds a disk in V), lambda the vertical circle
// x = 1/2 (bounds a disk in W).
//
// A laid-out curve is a cyclic chain of pieces, each oriented along the
// trace:
//   SideArc  -- a straight segment between diamond boundaries in one side,
//   Strand   -- a linear path through the collar from u=+1 to u=-1 (or back),
//   SideLoop -- a closed geodesic in one side (curves disjoint from c),
//   CoreLoop -- the collar core circle (the base curve itself).
struct Vec2 {
    Rat x, y;
};

// Part of a side piece inside one fundamental square, with its traversal
// parameter range.
struct SubSeg {
    Vec2 a, b;
    Rat t0, t1;
};

enum class PieceKind { SideArc, Strand, SideLoop, CoreLoop };

struct Piece {
    PieceKind kind = PieceKind::CoreLoop;
    Side side = Side::Plus;  // for SideArc / SideLoop

    // SideArc / SideLoop: the supporting line {p*x - q*y = v} traversed in
    // direction sgn*(q,p); a SideArc runs between diamond boundaries, a
    // SideLoop closes after one (q,p) period.  (p,q) is the arc class.
    std::int64_t p = 0, q = 0;
    int sgn = 1;  // +1: traversed out-end -> in-end
    Rat v;
    Vec2 start, end;  // exact endpoints of the traversed segment (cover coords)
    std::vector<SubSeg> segs;

    // Strand: Theta-lifts of the collar-top and collar-bottom ends; traversed
    // top first (u: +1 -> -1) or bottom first.
    Rat theta_top, theta_bot;
    bool top_first = true;
    std::int64_t slot = -1;

    // provenance bookkeeping for laid-out diagrams
    int fam = -1;
    std::int64_t copy = -1;
};

// Assemble pieces directly (used by the banding construction).
Piece make_side_arc(Side side, std::int64_t p, std::int64_t q, const Rat& v, int sgn,
                    const Rat& eps);
Piece make_strand(const Rat& theta_top, const Rat& theta_bot, bool top_first);
// Diamond parameters of a side arc's two ends, in traversal order.
std::pair<Rat, Rat> side_arc_feet(const Piece& arc, const Rat& eps);

struct ExactCurve {
    std::vector<Piece> pieces;  // cyclic, in trace order
    Rat eps;
};

// A crossing between a curve piece and a reference piece, with exact
// positions along both for ordering.
struct Crossing {
    int curve_piece = 0;
    Rat curve_param;  // position along the traversed piece, increasing
    int ref_piece = 0;
    Rat ref_param;
    int sign = 0;
};

// Geometry parameters shared by every curve participating in one computation.
struct GeometryContext {
    Rat eps;   // diamond radius
    Rat unit;  // base offset spacing between parallel arc copies
    std::int64_t next_offset = 1;

    explicit GeometryContext(std::int64_t max_slope_size);
    Rat fresh_offset();
};

// Lay out a diagram as an exact curve.  `bias` shifts every transverse
// coordinate to the left of the trace (parallel push-off copies).
ExactCurve layout(const CurveDiagram& d, GeometryContext& ctx, const Rat& bias = Rat(0));

// All crossings between the two curves, sorted along `curve`.
std::vector<Crossing> crossings(const ExactCurve& curve, const ExactCurve& ref);

std::int64_t signed_crossings(const ExactCurve& curve, const ExactCurve& ref);

// Diamond boundary parameter (turns in [0,1)) of a point with |x|+|y| = eps.
Rat diamond_param(const Vec2& w, const Rat& eps);

// Largest |p|+|q| appearing in a diagram (for sizing a GeometryContext).
std::int64_t slope_size_bound(const CurveDiagram& d);

}  // namespace goeritz
