#include "goeritz/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace goeritz {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

void sort_families(std::vector<ArcFamily>& fams) {
    std::sort(fams.begin(), fams.end(),
              [](const ArcFamily& a, const ArcFamily& b) { return a.slope < b.slope; });
}

}  // namespace

std::int64_t SideDiagram::total_weight() const {
    std::int64_t w = 0;
    for (const auto& f : families) w += f.weight;
    return w;
}

std::int64_t SideDiagram::infinity_weight() const {
    std::int64_t w = 0;
    for (const auto& f : families)
        if (f.slope.infinite()) w += f.weight;
    return w;
}

CurveDiagram CurveDiagram::base() { return CurveDiagram{}; }

CurveDiagram CurveDiagram::slotted(std::vector<ArcFamily> plus_fams, std::vector<ArcFamily> minus_fams,
                                   std::int64_t twist) {
    CurveDiagram d;
    d.kind = DiagramKind::Slotted;
    sort_families(plus_fams);
    sort_families(minus_fams);
    d.plus.families = std::move(plus_fams);
    d.minus.families = std::move(minus_fams);
    d.plus.offset = 0;
    d.minus.offset = twist;
    return d;
}

CurveDiagram CurveDiagram::closed(Side s, Slope cls) {
    CurveDiagram d;
    d.kind = DiagramKind::ClosedSide;
    d.closed_side = s;
    d.closed_class = cls;
    return d;
}

std::int64_t CurveDiagram::arcs_per_side() const {
    return kind == DiagramKind::Slotted ? plus.total_weight() : 0;
}

bool CurveDiagram::operator==(const CurveDiagram& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case DiagramKind::Base:
            return true;
        case DiagramKind::ClosedSide:
            return closed_side == o.closed_side && closed_class == o.closed_class;
        case DiagramKind::Slotted:
            return plus.families == o.plus.families && minus.families == o.minus.families &&
                   twist() == o.twist();
    }
    return false;
}

// --- SidePattern -------------------------------------------------------------

SidePattern::SidePattern(const SideDiagram& side) : side_(&side) {
    cum_.push_back(0);
    for (const auto& f : side.families) cum_.push_back(cum_.back() + f.weight);
    m_ = cum_.back();
}

PatternToken SidePattern::token(std::int64_t index) const {
    index = pmod(index, 2 * m_);
    bool out = index < m_;
    std::int64_t pos = out ? index : index - m_;
    int family = 0;
    while (cum_[family + 1] <= pos) ++family;
    std::int64_t k = pos - cum_[family];
    std::int64_t w = side_->families[family].weight;
    return {family, out, out ? k : w - 1 - k};
}

std::int64_t SidePattern::index_of(const PatternToken& t) const {
    std::int64_t w = side_->families[t.family].weight;
    std::int64_t k = t.out ? t.copy : w - 1 - t.copy;
    return (t.out ? 0 : m_) + cum_[t.family] + k;
}

std::int64_t SidePattern::partner(std::int64_t index) const {
    PatternToken t = token(index);
    t.out = !t.out;
    return index_of(t);
}

// --- tracing ----------------------------------------------------------------

namespace {

struct Tracer {
    const CurveDiagram& d;
    SidePattern pp, mp;
    std::int64_t n;  // slot count

    explicit Tracer(const CurveDiagram& dd) : d(dd), pp(dd.plus), mp(dd.minus), n(dd.slot_count()) {}

    std::int64_t plus_step(std::int64_t s) const {
        std::int64_t i = pmod(s - d.plus.offset, n);
        return pmod(d.plus.offset + pp.partner(i), n);
    }
    std::int64_t minus_step(std::int64_t s) const {
        std::int64_t j = pmod(d.minus.offset - s, n);
        return pmod(d.minus.offset - mp.partner(j), n);
    }
    // Token indices at a slot.
    std::int64_t plus_token(std::int64_t s) const { return pmod(s - d.plus.offset, n); }
    std::int64_t minus_token(std::int64_t s) const { return pmod(d.minus.offset - s, n); }
};

}  // namespace

int component_count(const CurveDiagram& d) {
    if (d.kind != DiagramKind::Slotted) return 1;
    if (d.plus.total_weight() != d.minus.total_weight())
        throw InvalidDiagram("endpoint counts differ between sides");
    Tracer tr(d);
    std::int64_t n = tr.n;
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (std::int64_t s0 = 0; s0 < n; ++s0) {
        if (seen[s0]) continue;
        ++comps;
        std::int64_t s = s0;
        do {
            seen[s] = 1;
            std::int64_t s1 = tr.plus_step(s);
            seen[s1] = 1;
            s = tr.minus_step(s1);
        } while (s != s0);
    }
    return comps;
}

// --- validation ---------------------------------------------------------------

ValidationReport validate(const CurveDiagram& d) {
    ValidationReport r;
    auto fail = [&r](const std::string& v) {
        r.ok = false;
        r.violations.push_back(v);
    };

    if (d.kind == DiagramKind::Base) return r;
    if (d.kind == DiagramKind::ClosedSide) {
        if (d.closed_class.inessential()) fail("closed curve class is inessential");
        if (normalize_slope(d.closed_class.p, d.closed_class.q) != d.closed_class)
            fail("closed curve class not normalized");
        return r;
    }

    for (Side s : {Side::Plus, Side::Minus}) {
        const SideDiagram& sd = s == Side::Plus ? d.plus : d.minus;
        const char* name = s == Side::Plus ? "plus" : "minus";
        if (sd.families.size() > 3) fail(std::string(name) + ": more than three arc families");
        for (const auto& f : sd.families) {
            if (f.weight < 1) fail(std::string(name) + ": non-positive family weight");
            if (f.slope.inessential()) fail(std::string(name) + ": inessential slope in minimal diagram");
            if (normalize_slope(f.slope.p, f.slope.q) != f.slope)
                fail(std::string(name) + ": unnormalized slope");
        }
        for (size_t a = 0; a < sd.families.size(); ++a)
            for (size_t b = a + 1; b < sd.families.size(); ++b) {
                if (sd.families[a].slope == sd.families[b].slope) {
                    fail(std::string(name) + ": duplicate family slopes");
                    continue;
                }
                if (sd.families[a].slope.inessential() || sd.families[b].slope.inessential()) continue;
                if (farey_distance(sd.families[a].slope, sd.families[b].slope) != 1)
                    fail(std::string(name) + ": family slopes not at Farey distance 1");
            }
    }
    if (d.plus.total_weight() != d.minus.total_weight())
        fail("sides contribute different endpoint counts");
    else if (d.plus.total_weight() == 0)
        fail("slotted diagram with no arcs");
    else if (r.ok && component_count(d) != 1)
        fail("gluing traces more than one closed component");
    return r;
}

// --- intersection with c, spectra -------------------------------------------

std::int64_t base_intersection(const CurveDiagram& d) {
    if (d.kind != DiagramKind::Slotted) return 0;
    for (Side s : {Side::Plus, Side::Minus})
        for (const auto& f : (s == Side::Plus ? d.plus : d.minus).families)
            if (f.slope.inessential()) throw NotMinimal();
    return d.slot_count();
}

std::vector<ArcFamily> slope_spectrum(const CurveDiagram& d, Side side) {
    if (d.kind != DiagramKind::Slotted) return {};
    return (side == Side::Plus ? d.plus : d.minus).families;
}

// --- handlebody words ---------------------------------------------------------

namespace {

void free_reduce(std::vector<int>& w) {
    std::vector<int> out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w = std::move(out);
}

void cyclic_reduce(std::vector<int>& w) {
    free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
}

std::vector<int> least_rotation(std::vector<int> w) {
    if (w.empty()) return w;
    std::vector<int> best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

}  // namespace

std::vector<int> handlebody_word(const CurveDiagram& d, Body body) {
    std::vector<int> w;
    if (d.kind == DiagramKind::Base) return w;
    if (d.kind == DiagramKind::ClosedSide) {
        // (p,q) curve in one side crosses that side's mu p times, lambda q times.
        std::int64_t count = body == Body::V ? d.closed_class.p : d.closed_class.q;
        int letter = d.closed_side == Side::Plus ? 1 : 2;
        for (std::int64_t i = 0; i < (count < 0 ? -count : count); ++i)
            w.push_back(count < 0 ? -letter : letter);
        cyclic_reduce(w);
        return least_rotation(w);
    }
    if (component_count(d) != 1) throw Disconnected();

    Tracer tr(d);
    std::int64_t s = 0;
    do {
        // plus arc from slot s
        {
            std::int64_t i = tr.plus_token(s);
            PatternToken t = tr.pp.token(i);
            const Slope& sl = d.plus.families[t.family].slope;
            std::int64_t e = body == Body::V ? sl.p : sl.q;
            if (!t.out) e = -e;
            for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) w.push_back(e < 0 ? -1 : 1);
            s = tr.plus_step(s);
        }
        // minus arc from the slot we arrived at
        {
            std::int64_t j = tr.minus_token(s);
            PatternToken t = tr.mp.token(j);
            const Slope& sl = d.minus.families[t.family].slope;
            std::int64_t e = body == Body::V ? sl.p : sl.q;
            if (!t.out) e = -e;
            for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) w.push_back(e < 0 ? -2 : 2);
            s = tr.minus_step(s);
        }
    } while (s != 0);

    cyclic_reduce(w);
    return least_rotation(w);
}

bool is_separating(const CurveDiagram& d) {
    if (d.kind == DiagramKind::Base) return true;
    if (d.kind == DiagramKind::ClosedSide) return false;  // primitive class is never null mod 2
    std::int64_t par[4] = {0, 0, 0, 0};
    for (const auto& f : d.plus.families) {
        par[0] += f.slope.p * f.weight;
        par[1] += f.slope.q * f.weight;
    }
    for (const auto& f : d.minus.families) {
        par[2] += f.slope.p * f.weight;
        par[3] += f.slope.q * f.weight;
    }
    for (std::int64_t p : par)
        if (pmod(p, 2) != 0) return false;
    return true;
}

bool is_reducing(const CurveDiagram& d) {
    if (d.kind == DiagramKind::Base) return true;
    if (d.kind == DiagramKind::ClosedSide) return false;
    if (!validate(d).ok) return false;
    if (component_count(d) != 1) return false;
    if (!is_separating(d)) return false;
    return handlebody_word(d, Body::V).empty() && handlebody_word(d, Body::W).empty();
}

// --- canonical form -----------------------------------------------------------

CurveDiagram canonical_form(const CurveDiagram& d) {
    auto rep = validate(d);
    if (!rep.ok) {
        for (const auto& f : d.plus.families)
            if (f.slope.inessential()) throw NotMinimal();
        for (const auto& f : d.minus.families)
            if (f.slope.inessential()) throw NotMinimal();
        throw InvalidDiagram(rep.violations.front());
    }
    CurveDiagram c = d;
    if (c.kind == DiagramKind::Slotted) {
        std::int64_t t = c.twist();
        c.plus.offset = 0;
        c.minus.offset = t;
    } else {
        c.plus.offset = c.minus.offset = 0;
    }
    return c;
}

std::string canonical_key(const CurveDiagram& d) {
    std::ostringstream os;
    switch (d.kind) {
        case DiagramKind::Base:
            os << "base";
            break;
        case DiagramKind::ClosedSide:
            os << "closed:" << (d.closed_side == Side::Plus ? "+" : "-") << ":"
               << d.closed_class.str();
            break;
        case DiagramKind::Slotted: {
            os << "s:";
            for (const auto& f : d.plus.families) os << f.slope.str() << "x" << f.weight << ",";
            os << "|";
            for (const auto& f : d.minus.families) os << f.slope.str() << "x" << f.weight << ",";
            os << "|t=" << d.twist();
            break;
        }
    }
    return os.str();
}

// --- JSON ----------------------------------------------------------------------

namespace {

nlohmann::json side_to_json(const SideDiagram& s) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : s.families)
        fams.push_back({{"slope", {f.slope.p, f.slope.q}}, {"weight", f.weight}});
    return {{"families", fams}, {"offset", s.offset}};
}

SideDiagram side_from_json(const nlohmann::json& j) {
    SideDiagram s;
    for (const auto& f : j.at("families")) {
        ArcFamily fam;
        fam.slope.p = f.at("slope").at(0).get<std::int64_t>();
        fam.slope.q = f.at("slope").at(1).get<std::int64_t>();
        fam.weight = f.at("weight").get<std::int64_t>();
        s.families.push_back(fam);
    }
    s.offset = j.value("offset", std::int64_t{0});
    return s;
}

}  // namespace

std::string to_json(const CurveDiagram& d, bool pretty) {
    nlohmann::json j;
    if (d.kind == DiagramKind::ClosedSide) {
        j["closed"] = {{"side", d.closed_side == Side::Plus ? "plus" : "minus"},
                       {"slope", {d.closed_class.p, d.closed_class.q}}};
    } else {
        j["plus"] = side_to_json(d.plus);
        j["minus"] = side_to_json(d.minus);
    }
    return pretty ? j.dump(2) : j.dump();
}

CurveDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("closed")) {
        const auto& c = j["closed"];
        Side s = c.at("side").get<std::string>() == "plus" ? Side::Plus : Side::Minus;
        Slope cls = normalize_slope(c.at("slope").at(0).get<std::int64_t>(),
                                    c.at("slope").at(1).get<std::int64_t>());
        return CurveDiagram::closed(s, cls);
    }
    CurveDiagram d;
    d.plus = side_from_json(j.at("plus"));
    d.minus = side_from_json(j.at("minus"));
    d.kind = (d.plus.families.empty() && d.minus.families.empty()) ? DiagramKind::Base
                                                                   : DiagramKind::Slotted;
    return d;
}

}  // namespace goeritz
