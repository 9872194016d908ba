#include "goeritz/action.hpp"

#include "goeritz/delta.hpp"

#include <random>
#include <sstream>

namespace goeritz {

Generator inverse(Generator g) {
    switch (g) {
        case Generator::Beta: return Generator::BetaInv;
        case Generator::BetaInv: return Generator::Beta;
        case Generator::Delta: return Generator::DeltaInv;
        case Generator::DeltaInv: return Generator::Delta;
        default: return g;  // involutions
    }
}

GeneratorWord inverse_word(const GeneratorWord& w) {
    GeneratorWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

std::string word_to_string(const GeneratorWord& w) {
    std::string s;
    for (Generator g : w) {
        switch (g) {
            case Generator::Alpha: s += 'a'; break;
            case Generator::Beta: s += 'b'; break;
            case Generator::BetaInv: s += 'B'; break;
            case Generator::Gamma: s += 'g'; break;
            case Generator::Delta: s += 'd'; break;
            case Generator::DeltaInv: s += 'D'; break;
        }
    }
    return s;
}

GeneratorWord word_from_string(const std::string& text) {
    GeneratorWord w;
    for (char c : text) {
        switch (c) {
            case 'a': w.push_back(Generator::Alpha); break;
            case 'b': w.push_back(Generator::Beta); break;
            case 'B': w.push_back(Generator::BetaInv); break;
            case 'g': w.push_back(Generator::Gamma); break;
            case 'd': w.push_back(Generator::Delta); break;
            case 'D': w.push_back(Generator::DeltaInv); break;
            case ' ':
            case '\t':
            case '\n':
            case '\r': break;
            default:
                throw std::runtime_error(std::string("unknown generator letter '") + c + "'");
        }
    }
    return w;
}

namespace {

CurveDiagram beta_action(const CurveDiagram& d, int dir) {
    if (d.kind != DiagramKind::Slotted) return d;  // beta fixes c and both sides' closed curves
    CurveDiagram out = d;
    out.minus.offset += dir * d.arcs_per_side();
    return out;
}

CurveDiagram gamma_action(const CurveDiagram& d) {
    switch (d.kind) {
        case DiagramKind::Base: return d;
        case DiagramKind::ClosedSide: {
            return CurveDiagram::closed(other(d.closed_side), d.closed_class);
        }
        case DiagramKind::Slotted: {
            // Exchange of the two punctured tori; the gluing twist is preserved.
            return CurveDiagram::slotted(d.minus.families, d.plus.families, d.twist());
        }
    }
    return d;
}

}  // namespace

CurveDiagram apply_generator(Generator g, const CurveDiagram& d) {
    {
        auto rep = validate(d);
        if (!rep.ok) throw InvalidDiagram(rep.violations.front());
    }
    switch (g) {
        case Generator::Alpha: return canonical_form(d);
        case Generator::Beta: return canonical_form(beta_action(d, +1));
        case Generator::BetaInv: return canonical_form(beta_action(d, -1));
        case Generator::Gamma: return canonical_form(gamma_action(d));
        case Generator::Delta: return delta_action(d, false);
        case Generator::DeltaInv: return delta_action(d, true);
    }
    return d;
}

CurveDiagram apply_word(const GeneratorWord& w, const CurveDiagram& d) {
    CurveDiagram cur = canonical_form(d);
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_generator(*it, cur);
    return cur;
}

const CurveDiagram& delta_of_base() {
    static const CurveDiagram dP = delta_action(CurveDiagram::base(), false);
    return dP;
}

CurveDiagram neighbor(std::int64_t n, int g) {
    CurveDiagram d = delta_of_base();
    if (g) d = apply_generator(Generator::Gamma, d);
    d.minus.offset += n * d.arcs_per_side();
    return canonical_form(d);
}

// --- stabilizer ------------------------------------------------------------------

StabilizerNormalForm stabilizer_normal_form(const GeneratorWord& w) {
    StabilizerNormalForm f;
    // Multiply generators on the right, leftmost letter first (the normal form
    // is of the group element the word spells).
    for (Generator g : w) {
        switch (g) {
            case Generator::Alpha: f.a ^= 1; break;
            case Generator::Gamma: f.g ^= 1; break;
            case Generator::Beta:
                f.n += 1;
                if (f.g) f.a ^= 1;
                break;
            case Generator::BetaInv:
                f.n -= 1;
                if (f.g) f.a ^= 1;
                break;
            default: throw NotStabilizerWord();
        }
    }
    return f;
}

StabilizerNormalForm stabilizer_multiply(const StabilizerNormalForm& x, const StabilizerNormalForm& y) {
    StabilizerNormalForm f;
    f.n = x.n + y.n;
    f.g = x.g ^ y.g;
    // gamma beta^m alpha^b gamma = beta^m alpha^(m+b)
    f.a = (x.a + y.a + (x.g ? y.n : 0)) & 1;
    if (f.a < 0) f.a += 2;
    return f;
}

GeneratorWord stabilizer_word(const StabilizerNormalForm& f) {
    GeneratorWord w;
    for (std::int64_t i = 0; i < (f.n < 0 ? -f.n : f.n); ++i)
        w.push_back(f.n < 0 ? Generator::BetaInv : Generator::Beta);
    if (f.a) w.push_back(Generator::Alpha);
    if (f.g) w.push_back(Generator::Gamma);
    return w;
}

// --- relation suite ----------------------------------------------------------------

namespace {

bool same_action(const GeneratorWord& u, const GeneratorWord& v, const CurveDiagram& d) {
    return canonical_key(apply_word(u, d)) == canonical_key(apply_word(v, d));
}

}  // namespace

RelationReport check_relations(const std::vector<CurveDiagram>& samples) {
    using G = Generator;
    struct Rel {
        const char* name;
        GeneratorWord lhs, rhs;
    };
    const std::vector<Rel> rels = {
        {"alpha^2 = id", {G::Alpha, G::Alpha}, {}},
        {"gamma^2 = id", {G::Gamma, G::Gamma}, {}},
        {"delta^3 = id", {G::Delta, G::Delta, G::Delta}, {}},
        {"alpha beta = beta alpha", {G::Alpha, G::Beta}, {G::Beta, G::Alpha}},
        {"gamma alpha gamma = alpha", {G::Gamma, G::Alpha, G::Gamma}, {G::Alpha}},
        {"gamma beta gamma = alpha beta", {G::Gamma, G::Beta, G::Gamma}, {G::Alpha, G::Beta}},
    };
    RelationReport rep;
    rep.relations_checked = static_cast<int>(rels.size());
    rep.samples = static_cast<int>(samples.size());
    for (size_t si = 0; si < samples.size(); ++si) {
        for (const auto& r : rels) {
            if (!same_action(r.lhs, r.rhs, samples[si])) {
                rep.ok = false;
                std::ostringstream os;
                os << r.name << " fails on sample " << si << " ("
                   << canonical_key(samples[si]) << ")";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

GeneratorWord random_word(std::uint64_t seed, int length) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 5);
    GeneratorWord w;
    for (int i = 0; i < length; ++i) w.push_back(static_cast<Generator>(pick(rng)));
    return w;
}

std::vector<CurveDiagram> random_diagrams(int count, std::uint64_t seed, int max_word_len) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, max_word_len);
    std::vector<CurveDiagram> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        GeneratorWord w = random_word(rng(), len(rng));
        out.push_back(apply_word(w, CurveDiagram::base()));
    }
    return out;
}

}  // namespace goeritz
