#pragma once

#include "goeritz/exact_curve.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goeritz {

// A homeomorphism h of the splitting surface acts on diagrams by measurement
// against preimages: the diagram of h(Q) relative to (c, mu, lambda) equals
// the diagram of Q relative to (h^-1 c, h^-1 mu, h^-1 lambda).  A TableSpec
// lists those preimages as diagrams in standard coordinates, together with
// the orientation conventions of the measurement.
struct TableSpec {
    CurveDiagram c_curve;     // h^-1(c)
    CurveDiagram mu_p, la_p;  // h^-1(mu_plus), h^-1(lambda_plus)
    CurveDiagram mu_m, la_m;  // h^-1(mu_minus), h^-1(lambda_minus)
    CurveDiagram wind;        // h^-1 of the twist probe (a curve crossing c twice)
    int s_mu_p = 1, s_la_p = 1, s_mu_m = 1, s_la_m = 1;  // crossing sign conventions
    int enter_plus_sign = 1;  // c'-crossing sign entering the image plus side
    bool c_reversed = false;  // image slot order runs against the c-loop trace
};

// The identity table (standard reference curves); its conventions are
// calibrated once by identity round-trips.
const TableSpec& identity_table();

class TransportError : public std::runtime_error {
  public:
    explicit TransportError(const std::string& w) : std::runtime_error(w) {}
};

// Apply the homeomorphism described by `fwd`; `inv` describes its inverse
// and pins the twist lift of slotted results.
CurveDiagram transport(const CurveDiagram& d, const TableSpec& fwd, const TableSpec& inv);

// Transport through the identity (a machinery self-test: must be the
// identity map on valid diagrams).
CurveDiagram transport_identity(const CurveDiagram& d);

}  // namespace goeritz
