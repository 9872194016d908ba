#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace goeritz {

// Slope of an essential arc in a once-punctured torus, measured against the
// reference curves mu (bounds a disk in V) and lambda (bounds a disk in W):
// an arc of slope p/q crosses mu |p| times and lambda |q| times when taut.
//
// Stored reduced with q >= 0; infinity is (1,0).  The pair (0,0) is the
// marker for an inessential (boundary-parallel) arc; it never appears in a
// validated minimal diagram but shows up transiently inside minimization.
struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 0;

    bool inessential() const { return p == 0 && q == 0; }
    bool infinite() const { return q == 0 && p != 0; }

    bool operator==(const Slope&) const = default;

    // Total order used for family sorting: finite slopes ascending by value,
    // infinity greatest.  Inessential compares least (it sorts apart anyway).
    bool operator<(const Slope& o) const;

    std::string str() const;
};

class InessentialSlope : public std::runtime_error {
  public:
    InessentialSlope() : std::runtime_error("farey_distance on inessential slope") {}
};

// Reduce and sign-normalize; (0,0) passes through as the inessential marker.
Slope normalize_slope(std::int64_t p, std::int64_t q);

// |p s - q r| for slopes p/q and r/s.  Throws InessentialSlope on (0,0).
std::int64_t farey_distance(const Slope& a, const Slope& b);

// Slope negation (gamma sends a side of slope s to a side of slope -s).
Slope negate(const Slope& s);

}  // namespace goeritz
