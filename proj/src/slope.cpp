#include "goeritz/slope.hpp"

#include <numeric>

namespace goeritz {

Slope normalize_slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) return {0, 0};
    if (q == 0) return {1, 0};
    if (p == 0) return {0, 1};
    std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

bool Slope::operator<(const Slope& o) const {
    if (inessential() != o.inessential()) return inessential();
    if (infinite() != o.infinite()) return o.infinite();
    // both finite (or both inessential/infinite, then equal-ish): compare p/q.
    return p * o.q < o.p * q;
}

std::string Slope::str() const {
    if (inessential()) return "0/0";
    if (infinite()) return "inf";
    return std::to_string(p) + "/" + std::to_string(q);
}

std::int64_t farey_distance(const Slope& a, const Slope& b) {
    if (a.inessential() || b.inessential()) throw InessentialSlope();
    std::int64_t d = a.p * b.q - a.q * b.p;
    return d < 0 ? -d : d;
}

Slope negate(const Slope& s) { return normalize_slope(-s.p, s.q); }

}  // namespace goeritz
