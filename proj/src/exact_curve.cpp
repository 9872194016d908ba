#include "goeritz/exact_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace goeritz {

namespace {

Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return Rat(q);
}

std::int64_t ifloor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return static_cast<std::int64_t>(q);
}

std::int64_t pmod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

GeometryContext::GeometryContext(std::int64_t max_slope_size) {
    Int D(max_slope_size < 2 ? 2 : max_slope_size);
    eps = Rat(1, 4 * D * D + 16);
    unit = eps * eps / Rat(Int(1) << 24);
}

Rat GeometryContext::fresh_offset() { return unit * Rat(next_offset++); }

std::int64_t slope_size_bound(const CurveDiagram& d) {
    std::int64_t b = 2;
    auto upd = [&b](const Slope& s) {
        std::int64_t v = (s.p < 0 ? -s.p : s.p) + (s.q < 0 ? -s.q : s.q);
        if (v > b) b = v;
    };
    for (const auto& f : d.plus.families) upd(f.slope);
    for (const auto& f : d.minus.families) upd(f.slope);
    if (d.kind == DiagramKind::ClosedSide) upd(d.closed_class);
    return b;
}

Rat diamond_param(const Vec2& w, const Rat& eps) {
    if (w.x >= 0 && w.y < 0) return (w.x / eps) / 4;
    if (w.x > 0 && w.y >= 0) return Rat(1, 4) + (w.y / eps) / 4;
    if (w.x <= 0 && w.y > 0) return Rat(1, 2) - (w.x / eps) / 4;
    return Rat(3, 4) - (w.y / eps) / 4;
}

namespace {

// Exit point of the line {p x - q y = v} from the origin diamond, in
// direction dirsgn*(q,p) (the forward crossing of the boundary).
Vec2 diamond_exit(std::int64_t p, std::int64_t q, const Rat& v, int dirsgn, const Rat& eps) {
    Rat n2 = Rat(p * p + q * q);
    Vec2 z0{v * Rat(p) / n2, -v * Rat(q) / n2};
    Vec2 dir{Rat(dirsgn)*Rat(q), Rat(dirsgn)*Rat(p)};
    bool found = false;
    Rat best_t;
    Vec2 best;
    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            Rat den = Rat(sx) * dir.x + Rat(sy) * dir.y;
            if (den == 0) continue;
            Rat t = (eps - Rat(sx) * z0.x - Rat(sy) * z0.y) / den;
            Vec2 z{z0.x + t * dir.x, z0.y + t * dir.y};
            if (Rat(sx) * z.x < 0 || Rat(sy) * z.y < 0) continue;
            if (rat_abs(z.x) + rat_abs(z.y) != eps) continue;
            if (!found || t > best_t) {
                found = true;
                best_t = t;
                best = z;
            }
        }
    if (!found) throw std::logic_error("diamond_exit: no exit point");
    return best;
}

void add_side_segments(Piece& pc) {
    Vec2 d = sub(pc.end, pc.start);
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    for (int axis = 0; axis < 2; ++axis) {
        const Rat& x0 = axis ? pc.start.y : pc.start.x;
        const Rat& dx = axis ? d.y : d.x;
        if (dx == 0) continue;
        Rat lo = x0, hi = x0 + dx;
        if (lo > hi) std::swap(lo, hi);
        for (Int k = numerator(rat_floor(lo)) / denominator(rat_floor(lo)) + 1; Rat(k) < hi; ++k) {
            Rat t = (Rat(k) - x0) / dx;
            if (t > 0 && t < 1) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat t0 = cuts[i], t1 = cuts[i + 1];
        Rat tm = (t0 + t1) / 2;
        Vec2 mid{pc.start.x + tm * d.x, pc.start.y + tm * d.y};
        Rat fx = rat_floor(mid.x), fy = rat_floor(mid.y);
        SubSeg s;
        s.a = {pc.start.x + t0 * d.x - fx, pc.start.y + t0 * d.y - fy};
        s.b = {pc.start.x + t1 * d.x - fx, pc.start.y + t1 * d.y - fy};
        s.t0 = t0;
        s.t1 = t1;
        pc.segs.push_back(std::move(s));
    }
}

}  // namespace

Piece make_side_arc(Side side, std::int64_t p, std::int64_t q, const Rat& v, int sgn,
                    const Rat& eps) {
    Piece pc;
    pc.kind = PieceKind::SideArc;
    pc.side = side;
    pc.p = p;
    pc.q = q;
    pc.sgn = sgn;
    pc.v = v;
    Vec2 wstart = diamond_exit(p, q, v, sgn, eps);
    Vec2 wend = diamond_exit(p, q, v, -sgn, eps);
    pc.start = wstart;
    pc.end = {wend.x + Rat(sgn) * Rat(q), wend.y + Rat(sgn) * Rat(p)};
    add_side_segments(pc);
    return pc;
}

Piece make_strand(const Rat& theta_top, const Rat& theta_bot, bool top_first) {
    Piece pc;
    pc.kind = PieceKind::Strand;
    pc.theta_top = theta_top;
    pc.theta_bot = theta_bot;
    pc.top_first = top_first;
    return pc;
}

std::pair<Rat, Rat> side_arc_feet(const Piece& arc, const Rat& eps) {
    Vec2 wstart = diamond_exit(arc.p, arc.q, arc.v, arc.sgn, eps);
    Vec2 wend = diamond_exit(arc.p, arc.q, arc.v, -arc.sgn, eps);
    return {diamond_param(wstart, eps), diamond_param(wend, eps)};
}

ExactCurve layout(const CurveDiagram& dd, GeometryContext& ctx, const Rat& bias) {
    CurveDiagram d = canonical_form(dd);
    ExactCurve X;
    X.eps = ctx.eps;

    if (d.kind == DiagramKind::Base) {
        Piece pc;
        pc.kind = PieceKind::CoreLoop;
        X.pieces.push_back(std::move(pc));
        return X;
    }

    if (d.kind == DiagramKind::ClosedSide) {
        Piece pc;
        pc.kind = PieceKind::SideLoop;
        pc.side = d.closed_side;
        pc.p = d.closed_class.p;
        pc.q = d.closed_class.q;
        pc.sgn = 1;
        pc.v = Rat(-1, 2) - bias;
        Rat n2 = Rat(pc.p * pc.p + pc.q * pc.q);
        Vec2 z0{pc.v * Rat(pc.p) / n2, -pc.v * Rat(pc.q) / n2};
        pc.start = z0;
        pc.end = {z0.x + Rat(pc.q), z0.y + Rat(pc.p)};
        add_side_segments(pc);
        X.pieces.push_back(std::move(pc));
        return X;
    }

    const std::int64_t m = d.arcs_per_side();
    const std::int64_t n = 2 * m;
    const std::int64_t t = d.twist();
    SidePattern pp(d.plus), mp(d.minus);

    // 1. Combinatorial trace: at slot s the plus token is s, the minus token
    // is t - s (mod n).  Records the traversal direction of every arc.
    struct Step {
        std::int64_t s_from, s_mid, s_to;  // plus arc s_from->s_mid, minus arc s_mid->s_to
    };
    std::vector<Step> steps;
    {
        std::vector<char> seen(n, 0);
        std::int64_t s = 0;
        do {
            Step st;
            st.s_from = s;
            if (seen[s]) throw InvalidDiagram("layout: trace revisits a slot");
            seen[s] = 1;
            st.s_mid = pp.partner(s);
            std::int64_t j2 = mp.partner(pmod(t - st.s_mid, n));
            st.s_to = pmod(t - j2, n);
            steps.push_back(st);
            s = st.s_to;
        } while (s != 0);
        if (steps.size() != static_cast<size_t>(m))
            throw InvalidDiagram("layout: diagram is not a single closed curve");
    }

    // traversal sign per arc: +1 when entered at its out-end
    auto arc_sgn = [&](SidePattern& pat, std::int64_t enter_token) {
        return pat.token(enter_token).out ? +1 : -1;
    };

    // 2. Per-arc geometry with the push-off bias applied to the left of the
    // traversal direction (left shift lowers v for +dir traversal).
    struct ArcGeom {
        std::int64_t p = 0, q = 0;
        int sgn = 1;
        Rat v;
        Rat tau_out, tau_in;
    };
    auto build_arcs = [&](const SideDiagram& sd, SidePattern& pat,
                          const std::vector<std::int64_t>& enter_tokens) {
        std::vector<std::vector<ArcGeom>> arcs(sd.families.size());
        for (size_t f = 0; f < sd.families.size(); ++f)
            arcs[f].resize(sd.families[f].weight);
        // fresh offsets in pattern order so copy order matches perturbation order
        for (size_t f = 0; f < sd.families.size(); ++f) {
            const auto& fam = sd.families[f];
            for (std::int64_t r = 0; r < fam.weight; ++r) {
                ArcGeom& a = arcs[f][r];
                a.p = fam.slope.p;
                a.q = fam.slope.q;
                a.v = -ctx.fresh_offset();
            }
        }
        for (std::int64_t e : enter_tokens) {
            PatternToken tk = pat.token(e);
            arcs[tk.family][tk.copy].sgn = arc_sgn(pat, e);
        }
        for (auto& fam : arcs)
            for (auto& a : fam) {
                a.v -= Rat(a.sgn) * bias;
                Vec2 wout = diamond_exit(a.p, a.q, a.v, +1, ctx.eps);
                Vec2 win = diamond_exit(a.p, a.q, a.v, -1, ctx.eps);
                a.tau_out = diamond_param(wout, ctx.eps);
                a.tau_in = diamond_param(win, ctx.eps);
            }
        return arcs;
    };

    std::vector<std::int64_t> plus_enters, minus_enters;
    for (const auto& st : steps) {
        plus_enters.push_back(st.s_from);
        minus_enters.push_back(pmod(t - st.s_mid, n));
    }
    auto plus_arcs = build_arcs(d.plus, pp, plus_enters);
    auto minus_arcs = build_arcs(d.minus, mp, minus_enters);

    // 3. Token parameter tables (biased); assert the canonical pattern order.
    auto token_taus = [&](const SideDiagram& sd, SidePattern& pat,
                          std::vector<std::vector<ArcGeom>>& arcs) {
        std::vector<Rat> tau(n);
        for (std::int64_t i = 0; i < n; ++i) {
            PatternToken tk = pat.token(i);
            const ArcGeom& a = arcs[tk.family][tk.copy];
            Rat v = tk.out ? a.tau_out : a.tau_in;
            v -= rat_floor(v);
            tau[i] = v;
        }
        (void)sd;
        for (std::int64_t i = 0; i + 1 < n; ++i)
            if (!(tau[i] < tau[i + 1])) throw std::logic_error("layout: pattern order violated");
        return tau;
    };
    std::vector<Rat> tau_plus = token_taus(d.plus, pp, plus_arcs);
    std::vector<Rat> tau_minus = token_taus(d.minus, mp, minus_arcs);

    auto tau_minus_lift = [&](std::int64_t j) {
        std::int64_t jm = pmod(j, n);
        return tau_minus[jm] + Rat((j - jm) / n);
    };

    // 4. Emit pieces.
    auto emit_arc = [&](Side side, std::int64_t enter_token, SidePattern& pat,
                        std::vector<std::vector<ArcGeom>>& arcs) {
        PatternToken tk = pat.token(enter_token);
        const ArcGeom& a = arcs[tk.family][tk.copy];
        Piece pc = make_side_arc(side, a.p, a.q, a.v, a.sgn, ctx.eps);
        pc.fam = tk.family;
        pc.copy = tk.copy;
        X.pieces.push_back(std::move(pc));
    };
    auto emit_strand = [&](std::int64_t slot, bool down) {
        Piece pc;
        pc.kind = PieceKind::Strand;
        pc.top_first = down;
        pc.slot = slot;
        pc.theta_top = tau_plus[slot];
        pc.theta_bot = Rat(1, 2) - tau_minus_lift(t - slot);
        X.pieces.push_back(std::move(pc));
    };

    for (const auto& st : steps) {
        emit_arc(Side::Plus, st.s_from, pp, plus_arcs);
        emit_strand(st.s_mid, true);
        emit_arc(Side::Minus, pmod(t - st.s_mid, n), mp, minus_arcs);
        emit_strand(st.s_to, false);
    }
    return X;
}

// --- crossings ----------------------------------------------------------------

namespace {

bool near_lattice(const Vec2& z, const Rat& eps) {
    Rat d00 = rat_abs(z.x) + rat_abs(z.y);
    Rat d10 = rat_abs(z.x - 1) + rat_abs(z.y);
    Rat d01 = rat_abs(z.x) + rat_abs(z.y - 1);
    Rat d11 = rat_abs(z.x - 1) + rat_abs(z.y - 1);
    Rat d = std::min(std::min(d00, d10), std::min(d01, d11));
    if (d == eps) throw std::logic_error("crossing exactly on a diamond boundary");
    return d < eps;
}

void side_side_crossings(const ExactCurve& C, int ci, const ExactCurve& R, int ri,
                         std::vector<Crossing>& out) {
    const Piece& a = C.pieces[ci];
    const Piece& b = R.pieces[ri];
    if (a.side != b.side) return;
    for (const auto& sa : a.segs)
        for (const auto& sb : b.segs) {
            Vec2 d1 = sub(sa.b, sa.a), d2 = sub(sb.b, sb.a);
            Rat den = cross2(d1, d2);
            if (den == 0) continue;
            Vec2 w = sub(sb.a, sa.a);
            Rat t1 = cross2(w, d2) / den;
            Rat t2 = cross2(w, d1) / den;
            bool i1 = t1 > 0 && t1 < 1, i2 = t2 > 0 && t2 < 1;
            if (!i1 || !i2) {
                if ((i1 && (t2 == 0 || t2 == 1)) || (i2 && (t1 == 0 || t1 == 1)))
                    throw std::logic_error("crossing at a segment junction");
                continue;
            }
            Vec2 z{sa.a.x + t1 * d1.x, sa.a.y + t1 * d1.y};
            if (near_lattice(z, C.eps)) continue;
            Crossing c;
            c.curve_piece = ci;
            c.curve_param = sa.t0 + t1 * (sa.t1 - sa.t0);
            c.ref_piece = ri;
            c.ref_param = sb.t0 + t2 * (sb.t1 - sb.t0);
            c.sign = den > 0 ? +1 : -1;
            out.push_back(std::move(c));
        }
}

void strand_strand_crossings(const ExactCurve& C, int ci, const ExactCurve& R, int ri,
                             std::vector<Crossing>& out) {
    const Piece& a = C.pieces[ci];
    const Piece& b = R.pieces[ri];
    Rat da = a.theta_bot - a.theta_top;
    Rat db = b.theta_bot - b.theta_top;
    Rat lo = a.theta_top - b.theta_top, hi = a.theta_bot - b.theta_bot;
    if (lo == hi) return;
    bool rev = lo > hi;
    if (rev) std::swap(lo, hi);
    for (std::int64_t k = ifloor(lo) + 1; Rat(k) < hi; ++k) {
        if (Rat(k) == lo) continue;  // ifloor(lo)+1 > lo always; defensive
        Rat s = (b.theta_top + Rat(k) - a.theta_top) / (da - db);
        if (!(s > 0 && s < 1)) throw std::logic_error("strand crossing parameter out of range");
        Crossing c;
        c.curve_piece = ci;
        c.curve_param = a.top_first ? s : Rat(1) - s;
        c.ref_piece = ri;
        c.ref_param = b.top_first ? s : Rat(1) - s;
        int oa = a.top_first ? +1 : -1, ob = b.top_first ? +1 : -1;
        Rat cr = Rat(oa) * Rat(ob) * (db - da) * Rat(2);
        if (cr == 0) throw std::logic_error("tangent strand crossing");
        c.sign = cr > 0 ? +1 : -1;
        out.push_back(std::move(c));
    }
}

void strand_core_crossings(const ExactCurve& C, int ci, const ExactCurve& R, int ri,
                           std::vector<Crossing>& out, bool curve_is_strand) {
    const Piece& st = curve_is_strand ? C.pieces[ci] : R.pieces[ri];
    Rat theta_mid = (st.theta_top + st.theta_bot) / 2;
    theta_mid -= rat_floor(theta_mid);
    Crossing c;
    int s = st.top_first ? +1 : -1;
    if (curve_is_strand) {
        c.curve_piece = ci;
        c.curve_param = Rat(1, 2);
        c.ref_piece = ri;
        c.ref_param = theta_mid;
        c.sign = s;
    } else {
        c.curve_piece = ci;
        c.curve_param = theta_mid;
        c.ref_piece = ri;
        c.ref_param = Rat(1, 2);
        c.sign = -s;
    }
    out.push_back(std::move(c));
}

}  // namespace

std::vector<Crossing> crossings(const ExactCurve& curve, const ExactCurve& ref) {
    std::vector<Crossing> out;
    for (int ci = 0; ci < static_cast<int>(curve.pieces.size()); ++ci) {
        const Piece& a = curve.pieces[ci];
        for (int ri = 0; ri < static_cast<int>(ref.pieces.size()); ++ri) {
            const Piece& b = ref.pieces[ri];
            bool a_side = a.kind == PieceKind::SideArc || a.kind == PieceKind::SideLoop;
            bool b_side = b.kind == PieceKind::SideArc || b.kind == PieceKind::SideLoop;
            if (a_side && b_side)
                side_side_crossings(curve, ci, ref, ri, out);
            else if (a.kind == PieceKind::Strand && b.kind == PieceKind::Strand)
                strand_strand_crossings(curve, ci, ref, ri, out);
            else if (a.kind == PieceKind::Strand && b.kind == PieceKind::CoreLoop)
                strand_core_crossings(curve, ci, ref, ri, out, true);
            else if (a.kind == PieceKind::CoreLoop && b.kind == PieceKind::Strand)
                strand_core_crossings(curve, ci, ref, ri, out, false);
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        if (x.curve_piece != y.curve_piece) return x.curve_piece < y.curve_piece;
        return x.curve_param < y.curve_param;
    });
    return out;
}

std::int64_t signed_crossings(const ExactCurve& curve, const ExactCurve& ref) {
    std::int64_t s = 0;
    for (const auto& c : crossings(curve, ref)) s += c.sign;
    return s;
}

}  // namespace goeritz
