#pragma once

#include "goeritz/slope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goeritz {

// A parallel family of essential arcs in one punctured-torus side.
struct ArcFamily {
    Slope slope;
    std::int64_t weight = 1;
    bool operator==(const ArcFamily&) const = default;
};

// One side of a curve diagram: at most three arc families (distinct slopes,
// pairwise Farey distance one) plus the offset that places the side's
// canonical endpoint pattern on c.  Only the difference of the two sides'
// offsets is an isotopy invariant; it is kept as a plain integer because the
// twisting of a curve about c is unbounded.
struct SideDiagram {
    std::vector<ArcFamily> families;  // kept sorted: finite slopes ascending, infinity last
    std::int64_t offset = 0;

    std::int64_t total_weight() const;
    std::int64_t infinity_weight() const;
};

// Kinds of isotopy classes the diagram type can hold.
//
//   Base       -- the base reducing curve c itself (empty diagram).
//   Slotted    -- a curve crossing c transversally in 2m > 0 points.
//   ClosedSide -- a closed curve disjoint from c and not parallel to it,
//                 i.e. a (p,q) curve in one punctured-torus side.  Needed so
//                 reference-curve images (mu/lambda) are representable.
enum class DiagramKind { Base, Slotted, ClosedSide };

enum class Side { Plus, Minus };
inline Side other(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

struct CurveDiagram {
    DiagramKind kind = DiagramKind::Base;

    // Slotted data.
    SideDiagram plus;
    SideDiagram minus;

    // ClosedSide data: primitive class (p,q) measured like an arc slope
    // (p = crossings with mu, q = crossings with lambda of that side).
    Side closed_side = Side::Plus;
    Slope closed_class;

    static CurveDiagram base();
    static CurveDiagram slotted(std::vector<ArcFamily> plus_fams, std::vector<ArcFamily> minus_fams,
                                std::int64_t twist);
    static CurveDiagram closed(Side s, Slope cls);

    bool is_base() const { return kind == DiagramKind::Base; }

    // Half the slot count (number of arcs per side); 0 for base/closed.
    std::int64_t arcs_per_side() const;
    std::int64_t slot_count() const { return 2 * arcs_per_side(); }

    // The gluing parameter: plus token i and minus token j share a slot
    // exactly when i + j = twist (as token-ladder lifts).
    std::int64_t twist() const { return minus.offset - plus.offset; }

    bool operator==(const CurveDiagram& o) const;
};

// --- pattern bookkeeping ----------------------------------------------------
//
// The canonical endpoint pattern of a side lists 2m tokens in the cyclic
// order in which the arc endpoints meet c (as seen from that side): first the
// out-blocks of the families (finite slopes ascending, then infinity), then
// the in-blocks in the same family order.  Out-block position k is arc copy
// k; in-block position k is arc copy w-1-k; copies are parallel.
struct PatternToken {
    int family = 0;   // index into SideDiagram::families
    bool out = true;  // out-end (departure direction (q,p)) or in-end
    std::int64_t copy = 0;
};

class SidePattern {
  public:
    explicit SidePattern(const SideDiagram& side);

    std::int64_t size() const { return 2 * m_; }  // token count
    PatternToken token(std::int64_t index) const;
    std::int64_t index_of(const PatternToken& t) const;
    // The other end of the arc through the given token.
    std::int64_t partner(std::int64_t index) const;

  private:
    std::int64_t m_ = 0;
    std::vector<std::int64_t> cum_;  // cumulative weights per family
    const SideDiagram* side_;
};

// --- operations -------------------------------------------------------------

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationReport validate(const CurveDiagram& d);

// Number of closed components the slot gluing traces out (1 for a curve).
int component_count(const CurveDiagram& d);

class NotMinimal : public std::runtime_error {
  public:
    NotMinimal() : std::runtime_error("diagram has inessential arcs") {}
};
class Disconnected : public std::runtime_error {
  public:
    Disconnected() : std::runtime_error("diagram traces more than one component") {}
};
class InvalidDiagram : public std::runtime_error {
  public:
    explicit InvalidDiagram(const std::string& why) : std::runtime_error("invalid diagram: " + why) {}
};

// |Q ∩ c| for the represented class (diagrams here are always minimal).
std::int64_t base_intersection(const CurveDiagram& d);

std::vector<ArcFamily> slope_spectrum(const CurveDiagram& d, Side side);

enum class Body { V, W };

// Freely and cyclically reduced crossing word of the traced curve with the
// meridian disks of the requested handlebody; letters are +/-1 (plus-side
// reference) and +/-2 (minus-side).  Empty word iff the curve bounds a disk.
std::vector<int> handlebody_word(const CurveDiagram& d, Body body);

bool is_separating(const CurveDiagram& d);
bool is_reducing(const CurveDiagram& d);

// Canonical representative: normalizes offsets to (0, twist).  Equality of
// canonical forms is the isotopy test.
CurveDiagram canonical_form(const CurveDiagram& d);
std::string canonical_key(const CurveDiagram& d);

// --- JSON -------------------------------------------------------------------

std::string to_json(const CurveDiagram& d, bool pretty = true);
CurveDiagram diagram_from_json(const std::string& text);

}  // namespace goeritz
