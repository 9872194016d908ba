#include "goeritz/transport.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace goeritz {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

struct BuiltTable {
    const TableSpec* spec;
    ExactCurve c_loop, mu_p, la_p, mu_m, la_m, wind;
    // wind parameter space split at its c-crossings: sorted positions with the
    // side entered after each crossing
    struct WindCut {
        int piece;
        Rat param;
        Side enters;
    };
    std::vector<WindCut> wind_cuts;
    bool core_table = false;  // c_loop is the collar core (identity-type table)
};

std::int64_t spec_slope_bound(const TableSpec& s, const CurveDiagram& d) {
    std::int64_t b = slope_size_bound(d);
    for (const CurveDiagram* c : {&s.c_curve, &s.mu_p, &s.la_p, &s.mu_m, &s.la_m, &s.wind})
        b = std::max(b, slope_size_bound(*c));
    return b;
}

BuiltTable build_table(const TableSpec& spec, GeometryContext& ctx) {
    BuiltTable T;
    T.spec = &spec;
    T.c_loop = layout(spec.c_curve, ctx);
    T.mu_p = layout(spec.mu_p, ctx);
    T.la_p = layout(spec.la_p, ctx);
    T.mu_m = layout(spec.mu_m, ctx);
    T.la_m = layout(spec.la_m, ctx);
    T.wind = layout(spec.wind, ctx);
    T.core_table = spec.c_curve.is_base();

    auto wc = crossings(T.wind, T.c_loop);
    for (const auto& c : wc) {
        BuiltTable::WindCut cut;
        cut.piece = c.curve_piece;
        cut.param = c.curve_param;
        cut.enters = (c.sign == spec.enter_plus_sign) ? Side::Plus : Side::Minus;
        T.wind_cuts.push_back(std::move(cut));
    }
    return T;
}

Side wind_side_at(const BuiltTable& T, int piece, const Rat& param) {
    // side of the wind curve's point = side entered at the last preceding cut
    if (T.wind_cuts.empty()) return Side::Plus;
    const auto less = [](const BuiltTable::WindCut& c, const std::pair<int, const Rat*>& pos) {
        if (c.piece != pos.first) return c.piece < pos.first;
        return c.param < *pos.second;
    };
    std::pair<int, const Rat*> pos{piece, &param};
    auto it = std::lower_bound(T.wind_cuts.begin(), T.wind_cuts.end(), pos, less);
    if (it == T.wind_cuts.begin()) it = T.wind_cuts.end();
    return std::prev(it)->enters;
}

// --- extraction -------------------------------------------------------------

struct ModResult {
    CurveDiagram diagram;  // twist holds t mod 2m, representative in [0, 2m)
    bool lift_known = false;
    std::int64_t slots = 0;
    // probes for the lift estimator
    std::int64_t probe_plus = 0, probe_minus = 0;
};

struct ChainData {
    Side side = Side::Plus;
    std::int64_t ph = 0, qh = 0;      // signed counts against the side's mu/lambda
    std::int64_t wind_p = 0, wind_m = 0;  // signed wind-crossings by wind-side
    std::int64_t left_slot = 0, right_slot = 0;
    bool alive = true;
};

struct SlotData {
    // order key along the c-loop
    int ref_piece = 0;
    Rat ref_param;
    std::int64_t left_chain = 0, right_chain = 0;
    bool alive = true;
    std::int64_t theta_rank = 0;
    // identity-table lift reading
    std::int64_t strand_piece = -1;
};

ModResult extract_mod(const ExactCurve& X, const BuiltTable& T) {
    auto cs = crossings(X, T.c_loop);
    ModResult R;

    auto total_class = [&](Side s) {
        const ExactCurve& mu = s == Side::Plus ? T.mu_p : T.mu_m;
        const ExactCurve& la = s == Side::Plus ? T.la_p : T.la_m;
        std::int64_t smu = s == Side::Plus ? T.spec->s_mu_p : T.spec->s_mu_m;
        std::int64_t sla = s == Side::Plus ? T.spec->s_la_p : T.spec->s_la_m;
        return std::pair<std::int64_t, std::int64_t>{smu * signed_crossings(X, mu),
                                                     sla * signed_crossings(X, la)};
    };

    if (cs.empty()) {
        auto [pp, qp] = total_class(Side::Plus);
        auto [pm, qm] = total_class(Side::Minus);
        R.lift_known = true;
        if (pp == 0 && qp == 0 && pm == 0 && qm == 0) {
            R.diagram = CurveDiagram::base();
            return R;
        }
        if ((pp || qp) && (pm || qm)) throw TransportError("closed image meets both sides");
        Side s = (pp || qp) ? Side::Plus : Side::Minus;
        std::int64_t p = (s == Side::Plus) ? pp : pm, q = (s == Side::Plus) ? qp : qm;
        if (std::gcd(std::abs(p), std::abs(q)) != 1)
            throw TransportError("closed image class is not primitive");
        R.diagram = CurveDiagram::closed(s, normalize_slope(p, q));
        return R;
    }

    const std::int64_t N = static_cast<std::int64_t>(cs.size());
    if (N % 2) throw TransportError("odd number of c-crossings");

    // chains[k] runs from cs[k] to cs[(k+1) % N] along X
    std::vector<ChainData> chains(N);
    std::vector<SlotData> slots(N);
    for (std::int64_t k = 0; k < N; ++k) {
        slots[k].ref_piece = cs[k].ref_piece;
        slots[k].ref_param = cs[k].ref_param;
        slots[k].left_chain = pmod(k - 1, N);
        slots[k].right_chain = k;
        if (T.core_table) slots[k].strand_piece = cs[k].curve_piece;
        chains[k].side =
            (cs[k].sign == T.spec->enter_plus_sign) ? Side::Plus : Side::Minus;
        chains[k].left_slot = k;
        chains[k].right_slot = pmod(k + 1, N);
        if (cs[k].sign == cs[pmod(k + 1, N)].sign)
            throw TransportError("c-crossing signs do not alternate");
    }

    // bucket reference crossings into chains
    auto chain_of = [&](int piece, const Rat& param) -> std::int64_t {
        // index of last crossing at or before (piece,param) along X
        std::int64_t lo = 0, hi = N;  // first crossing strictly greater
        while (lo < hi) {
            std::int64_t mid = (lo + hi) / 2;
            const auto& c = cs[mid];
            bool gt = (c.curve_piece > piece) || (c.curve_piece == piece && c.curve_param > param);
            if (gt)
                hi = mid;
            else
                lo = mid + 1;
        }
        return pmod(lo - 1, N);
    };

    auto accumulate = [&](const ExactCurve& ref, int conv, bool is_mu, Side ref_side) {
        for (const auto& c : crossings(X, ref)) {
            std::int64_t k = chain_of(c.curve_piece, c.curve_param);
            if (chains[k].side != ref_side) continue;
            if (is_mu)
                chains[k].ph += conv * c.sign;
            else
                chains[k].qh += conv * c.sign;
        }
    };
    accumulate(T.mu_p, T.spec->s_mu_p, true, Side::Plus);
    accumulate(T.la_p, T.spec->s_la_p, false, Side::Plus);
    accumulate(T.mu_m, T.spec->s_mu_m, true, Side::Minus);
    accumulate(T.la_m, T.spec->s_la_m, false, Side::Minus);
    for (const auto& c : crossings(X, T.wind)) {
        std::int64_t k = chain_of(c.curve_piece, c.curve_param);
        Side ws = wind_side_at(T, c.ref_piece, c.ref_param);
        if (ws == Side::Plus)
            chains[k].wind_p += c.sign;
        else
            chains[k].wind_m += c.sign;
    }

    // ranks along the c-loop
    {
        std::vector<std::int64_t> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
            if (slots[a].ref_piece != slots[b].ref_piece)
                return slots[a].ref_piece < slots[b].ref_piece;
            return slots[a].ref_param < slots[b].ref_param;
        });
        if (T.spec->c_reversed) std::reverse(order.begin(), order.end());
        for (std::int64_t r = 0; r < N; ++r) slots[order[r]].theta_rank = r;
    }

    // --- collapse of inessential chains -------------------------------------
    std::set<std::pair<std::int64_t, std::int64_t>> alive_by_rank;  // (rank, slot)
    for (std::int64_t k = 0; k < N; ++k) alive_by_rank.insert({slots[k].theta_rank, k});
    std::int64_t alive_slots = N;

    auto rank_adjacent = [&](std::int64_t u, std::int64_t v) {
        // no alive slot strictly between u and v in cyclic rank order
        auto iu = alive_by_rank.find({slots[u].theta_rank, u});
        auto nx = std::next(iu);
        if (nx == alive_by_rank.end()) nx = alive_by_rank.begin();
        if (nx->second == v) return true;
        auto iv = alive_by_rank.find({slots[v].theta_rank, v});
        nx = std::next(iv);
        if (nx == alive_by_rank.end()) nx = alive_by_rank.begin();
        return nx->second == u;
    };

    bool progressed = true;
    while (alive_slots > 0 && progressed) {
        progressed = false;
        bool any_trivial = false;
        for (std::int64_t k = 0; k < N && alive_slots > 0; ++k) {
            ChainData& A = chains[k];
            if (!A.alive || A.ph != 0 || A.qh != 0) continue;
            any_trivial = true;
            std::int64_t u = A.left_slot, v = A.right_slot;
            if (alive_slots > 2 && !rank_adjacent(u, v)) continue;
            // absorb A and its two opposite-side neighbors into one chain
            std::int64_t bi = slots[u].left_chain == k ? slots[u].right_chain : slots[u].left_chain;
            std::int64_t ci = slots[v].left_chain == k ? slots[v].right_chain : slots[v].left_chain;
            alive_by_rank.erase({slots[u].theta_rank, u});
            alive_by_rank.erase({slots[v].theta_rank, v});
            slots[u].alive = slots[v].alive = false;
            alive_slots -= 2;
            A.alive = false;
            if (bi == ci) {
                // only two slots were left; the curve leaves c entirely
                chains[bi].alive = false;
                if (alive_slots != 0) throw TransportError("collapse left stray slots");
                break;
            }
            ChainData& B = chains[bi];
            ChainData& C = chains[ci];
            if (B.side != C.side || B.side == A.side)
                throw TransportError("collapse side bookkeeping failed");
            // merged chain: B + A + C in trace order, stored in B
            B.ph += A.ph + C.ph;
            B.qh += A.qh + C.qh;
            B.wind_p += A.wind_p + C.wind_p;
            B.wind_m += A.wind_m + C.wind_m;
            std::int64_t far_b = B.left_slot == u ? B.right_slot : B.left_slot;
            std::int64_t far_c = C.left_slot == v ? C.right_slot : C.left_slot;
            B.left_slot = far_b;
            B.right_slot = far_c;
            C.alive = false;
            auto& fc = slots[far_c];
            (fc.left_chain == ci ? fc.left_chain : fc.right_chain) = bi;
            progressed = true;
        }
        if (!any_trivial) break;
        if (any_trivial && !progressed && alive_slots > 0)
            throw TransportError("inessential chain without an empty gap");
    }

    if (alive_slots == 0) {
        auto [pp, qp] = total_class(Side::Plus);
        auto [pm, qm] = total_class(Side::Minus);
        R.lift_known = true;
        if (pp == 0 && qp == 0 && pm == 0 && qm == 0) {
            R.diagram = CurveDiagram::base();
            return R;
        }
        if ((pp || qp) && (pm || qm)) throw TransportError("closed image meets both sides");
        Side s = (pp || qp) ? Side::Plus : Side::Minus;
        std::int64_t p = (s == Side::Plus) ? pp : pm, q = (s == Side::Plus) ? qp : qm;
        if (std::gcd(std::abs(p), std::abs(q)) != 1)
            throw TransportError("closed image class is not primitive");
        R.diagram = CurveDiagram::closed(s, normalize_slope(p, q));
        return R;
    }

    // --- reconstruction -------------------------------------------------------
    // alive slots in theta order
    std::vector<std::int64_t> theta_order;
    for (const auto& [rank, k] : alive_by_rank) theta_order.push_back(k);
    const std::int64_t M = static_cast<std::int64_t>(theta_order.size());
    R.slots = M;

    // families per side and per-chain class/out data
    struct ArcInfo {
        std::int64_t chain;
        Slope cls;
        bool left_is_out;
    };
    std::vector<ArcInfo> arcs;
    std::map<std::pair<int, std::pair<std::int64_t, std::int64_t>>, std::int64_t> fam_weight;
    for (std::int64_t k = 0; k < N; ++k) {
        if (!chains[k].alive) continue;
        ChainData& ch = chains[k];
        Slope cls = normalize_slope(ch.ph, ch.qh);
        if (cls.inessential()) throw TransportError("essential chain with trivial class");
        if (std::gcd(std::abs(ch.ph), std::abs(ch.qh)) > 1 && cls.q != 0)
            throw TransportError("non-primitive chain class");
        bool left_out = (ch.ph == cls.p && ch.qh == cls.q);
        if (!left_out && !(ch.ph == -cls.p && ch.qh == -cls.q))
            throw TransportError("chain class sign mismatch");
        arcs.push_back({k, cls, left_out});
        fam_weight[{ch.side == Side::Plus ? 0 : 1, {cls.p, cls.q}}] += 1;
        R.probe_plus += ch.side == Side::Plus ? ch.wind_p : 0;
        R.probe_minus += ch.side == Side::Minus ? ch.wind_m : 0;
    }
    std::vector<ArcFamily> fp, fm;
    for (const auto& [key, w] : fam_weight) {
        ArcFamily f{Slope{key.second.first, key.second.second}, w};
        (key.first == 0 ? fp : fm).push_back(f);
    }
    CurveDiagram out = CurveDiagram::slotted(fp, fm, 0);
    if (out.slot_count() != M) throw TransportError("family weights do not match slot count");

    // labels per slot: (family index, is_out) for each side
    struct Label {
        int fam = -1;
        bool out = false;
    };
    std::vector<Label> plus_label(N), minus_label(N);
    auto fam_index = [](const std::vector<ArcFamily>& fams, const Slope& s) {
        for (size_t i = 0; i < fams.size(); ++i)
            if (fams[i].slope == s) return static_cast<int>(i);
        return -1;
    };
    for (const auto& a : arcs) {
        const ChainData& ch = chains[a.chain];
        auto& lab = ch.side == Side::Plus ? plus_label : minus_label;
        int fi = fam_index(ch.side == Side::Plus ? out.plus.families : out.minus.families, a.cls);
        lab[ch.left_slot] = {fi, a.left_is_out};
        lab[ch.right_slot] = {fi, !a.left_is_out};
    }

    // align against the canonical patterns
    SidePattern pp_pat(out.plus), mp_pat(out.minus);
    auto align = [&](const std::vector<Label>& lab, SidePattern& pat, bool reversed,
                     std::vector<std::int64_t>& token_of_slot) {
        token_of_slot.assign(N, -1);
        std::vector<std::int64_t> found;
        for (std::int64_t r = 0; r < M; ++r) {
            bool ok = true;
            for (std::int64_t kk = 0; kk < M && ok; ++kk) {
                std::int64_t slot = theta_order[reversed ? pmod(r - kk, M) : pmod(r + kk, M)];
                PatternToken tk = pat.token(kk);
                const Label& l = lab[slot];
                if (l.fam != tk.family || l.out != tk.out) ok = false;
            }
            if (ok) found.push_back(r);
        }
        if (found.size() != 1) throw TransportError("pattern alignment not unique");
        std::int64_t r = found[0];
        for (std::int64_t kk = 0; kk < M; ++kk) {
            std::int64_t slot = theta_order[reversed ? pmod(r - kk, M) : pmod(r + kk, M)];
            token_of_slot[slot] = kk;
        }
    };
    std::vector<std::int64_t> ptok, mtok;
    align(plus_label, pp_pat, false, ptok);
    align(minus_label, mp_pat, true, mtok);

    std::int64_t tmod = -1;
    for (std::int64_t k : theta_order) {
        std::int64_t v = pmod(ptok[k] + mtok[k], M);
        if (tmod < 0)
            tmod = v;
        else if (tmod != v)
            throw TransportError("inconsistent twist residue across slots");
    }
    // pairing check: chain ends must be pattern partners
    for (const auto& a : arcs) {
        const ChainData& ch = chains[a.chain];
        const auto& tok = ch.side == Side::Plus ? ptok : mtok;
        SidePattern& pat = ch.side == Side::Plus ? pp_pat : mp_pat;
        if (pat.partner(tok[ch.left_slot]) != tok[ch.right_slot])
            throw TransportError("arc pairing does not match the canonical pattern");
    }

    R.diagram = CurveDiagram::slotted(out.plus.families, out.minus.families, tmod);

    // Identity-table lift: read the twist off a strand of X directly.  The
    // layout realized strand(slot) with theta_bot = 1/2 - tau_lift(t - slot),
    // where tau_lift = tau_base + (whole turns) and tau_base is in [0,1).
    if (T.core_table) {
        std::int64_t k0 = theta_order[0];
        const Piece& st = X.pieces[slots[k0].strand_piece];
        if (st.kind != PieceKind::Strand) throw TransportError("core crossing is not a strand");
        Rat tau_lift = Rat(1, 2) - st.theta_bot;
        Int num = numerator(tau_lift), den = denominator(tau_lift);
        Int flr = num / den;
        if (num < 0 && flr * den != num) --flr;
        std::int64_t whole = static_cast<std::int64_t>(flr);
        std::int64_t t_full = ptok[k0] + mtok[k0] + M * whole;
        if (pmod(t_full, M) != tmod) throw TransportError("strand lift inconsistent with residue");
        R.diagram = CurveDiagram::slotted(out.plus.families, out.minus.families, t_full);
        R.lift_known = true;
    }
    return R;
}

}  // namespace

// --- identity table and calibration ------------------------------------------

namespace {

TableSpec make_identity_spec(int smp, int slp, int smm, int slm, int eps_sign, bool rev) {
    TableSpec s;
    s.c_curve = CurveDiagram::base();
    s.mu_p = CurveDiagram::closed(Side::Plus, {0, 1});
    s.la_p = CurveDiagram::closed(Side::Plus, {1, 0});
    s.mu_m = CurveDiagram::closed(Side::Minus, {0, 1});
    s.la_m = CurveDiagram::closed(Side::Minus, {1, 0});
    s.wind = CurveDiagram::slotted({{Slope{0, 1}, 1}}, {{Slope{0, 1}, 1}}, 0);
    s.s_mu_p = smp;
    s.s_la_p = slp;
    s.s_mu_m = smm;
    s.s_la_m = slm;
    s.enter_plus_sign = eps_sign;
    s.c_reversed = rev;
    return s;
}

std::vector<CurveDiagram> calibration_battery() {
    std::vector<CurveDiagram> b;
    b.push_back(CurveDiagram::base());
    b.push_back(CurveDiagram::closed(Side::Plus, {0, 1}));
    b.push_back(CurveDiagram::closed(Side::Plus, {1, 0}));
    b.push_back(CurveDiagram::closed(Side::Minus, {0, 1}));
    b.push_back(CurveDiagram::closed(Side::Minus, {2, 1}));
    auto add_if_valid = [&b](std::vector<ArcFamily> fp, std::vector<ArcFamily> fm,
                             std::int64_t t) {
        CurveDiagram d = CurveDiagram::slotted(std::move(fp), std::move(fm), t);
        if (validate(d).ok) b.push_back(std::move(d));
    };
    for (std::int64_t t = -5; t <= 5; ++t) {
        add_if_valid({{Slope{0, 1}, 1}}, {{Slope{0, 1}, 1}}, t);
        add_if_valid({{Slope{1, 0}, 1}}, {{Slope{1, 0}, 1}}, t);
        add_if_valid({{Slope{0, 1}, 2}}, {{Slope{1, 0}, 2}}, t);
        add_if_valid({{Slope{0, 1}, 1}, {Slope{1, 1}, 1}}, {{Slope{1, 0}, 2}}, t);
        add_if_valid({{Slope{0, 1}, 1}, {Slope{1, 0}, 1}}, {{Slope{-1, 1}, 2}}, t);
        add_if_valid({{Slope{1, 2}, 2}, {Slope{1, 1}, 1}}, {{Slope{1, 0}, 3}}, t);
    }
    return b;
}

bool identity_spec_works(const TableSpec& spec) {
    for (const CurveDiagram& d : calibration_battery()) {
        try {
            GeometryContext ctx(spec_slope_bound(spec, d));
            BuiltTable T = build_table(spec, ctx);
            ExactCurve X = layout(d, ctx);
            ModResult r = extract_mod(X, T);
            if (!r.lift_known) return false;
            if (!(canonical_form(r.diagram) == canonical_form(d))) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

}  // namespace

const TableSpec& identity_table() {
    static const TableSpec spec = [] {
        for (bool rev : {false, true})
            for (int eps_sign : {1, -1})
                for (int smp : {1, -1})
                    for (int slp : {1, -1})
                        for (int smm : {1, -1})
                            for (int slm : {1, -1}) {
                                TableSpec s =
                                    make_identity_spec(smp, slp, smm, slm, eps_sign, rev);
                                if (identity_spec_works(s)) return s;
                            }
        throw TransportError("identity table calibration failed");
    }();
    return spec;
}

CurveDiagram transport_identity(const CurveDiagram& d) {
    const TableSpec& id = identity_table();
    return transport(d, id, id);
}

// --- full transport ------------------------------------------------------------

namespace {

struct ModSignature {
    DiagramKind kind;
    std::vector<ArcFamily> fp, fm;
    Side cside = Side::Plus;
    Slope ccls;
    std::int64_t tmod = 0;
    bool operator==(const ModSignature&) const = default;
};

ModSignature signature_of(const CurveDiagram& d) {
    ModSignature s;
    CurveDiagram c = canonical_form(d);
    s.kind = c.kind;
    if (c.kind == DiagramKind::Slotted) {
        s.fp = c.plus.families;
        s.fm = c.minus.families;
        s.tmod = pmod(c.twist(), c.slot_count());
    } else if (c.kind == DiagramKind::ClosedSide) {
        s.cside = c.closed_side;
        s.ccls = c.closed_class;
    }
    return s;
}

ModSignature inverse_mod_signature(const CurveDiagram& candidate, const TableSpec& inv) {
    GeometryContext ctx(spec_slope_bound(inv, candidate));
    BuiltTable T = build_table(inv, ctx);
    ExactCurve X = layout(candidate, ctx);
    ModResult r = extract_mod(X, T);
    return signature_of(r.diagram);
}

std::pair<std::int64_t, std::int64_t> model_probes(const CurveDiagram& candidate) {
    const TableSpec& id = identity_table();
    GeometryContext ctx(spec_slope_bound(id, candidate));
    BuiltTable T = build_table(id, ctx);
    ExactCurve X = layout(candidate, ctx);
    ModResult r = extract_mod(X, T);
    return {r.probe_plus, r.probe_minus};
}

}  // namespace

CurveDiagram transport(const CurveDiagram& d, const TableSpec& fwd, const TableSpec& inv) {
    CurveDiagram dc = canonical_form(d);
    GeometryContext ctx(spec_slope_bound(fwd, dc));
    BuiltTable T = build_table(fwd, ctx);
    ExactCurve X = layout(dc, ctx);
    ModResult r = extract_mod(X, T);
    if (r.lift_known) return canonical_form(r.diagram);

    const std::int64_t M = r.slots;
    ModSignature want = signature_of(dc);

    // Estimate the lift by matching the wind probe against model layouts,
    // then certify candidates by checking that the inverse map returns d.
    auto candidate_at = [&](std::int64_t k) {
        CurveDiagram c = r.diagram;
        c.minus.offset = r.diagram.twist() + M * k;
        c.plus.offset = 0;
        return c;
    };

    std::int64_t center = 0;
    {
        std::int64_t best_err = -1;
        for (std::int64_t k = -8; k <= 8; ++k) {
            auto [mp, mm] = model_probes(candidate_at(k));
            std::int64_t err = std::abs(mp - r.probe_plus) + std::abs(mm - r.probe_minus);
            if (best_err < 0 || err < best_err) {
                best_err = err;
                center = k;
            }
        }
    }

    std::int64_t bound =
        64 + std::abs(dc.twist()) + dc.slot_count() + slope_size_bound(dc) * 4;
    for (std::int64_t radius = 0; radius <= bound; ++radius) {
        for (std::int64_t k : {center + radius, center - radius}) {
            CurveDiagram cand = candidate_at(k);
            if (inverse_mod_signature(cand, inv) == want) return canonical_form(cand);
            if (radius == 0) break;
        }
    }
    throw TransportError("twist lift verification failed");
}

}  // namespace goeritz
