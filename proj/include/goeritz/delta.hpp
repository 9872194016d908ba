#pragma once

#include "goeritz/diagram.hpp"
#include "goeritz/transport.hpp"

namespace goeritz {

// The order-three rotation delta: in the (pair of pants) x I model of the
// handlebody V it rigidly rotates the three reducing disks, so it cyclically
// permutes the base sphere P and its two simplex partners delta(P),
// delta^2(P).  Its action on diagrams is computed by transport through the
// images of the reference curves, which are pinned once by the bootstrap
// search below and certified by delta^3 = id and P . delta(P) = 4.
CurveDiagram delta_action(const CurveDiagram& d, bool inverse);

// The pinned companion curves of the delta tables.
struct DeltaPins {
    std::int64_t t2 = 0;    // twist of delta(P)   (plus slope 0 x2 | minus inf x2)
    std::int64_t t3 = 0;    // twist of delta^2(P) (plus inf x2 | minus slope 0 x2)
    std::int64_t t_nu = 0;  // twist of nu = delta(mu_minus): (0|0) two-slot curve
    std::int64_t t_z = 0;   // twist of Z = delta(lambda_minus): (inf|inf) two-slot curve
    TableSpec fwd, inv;
};

const DeltaPins& delta_pins();

// nu: the two-slot curve bounding a disk in V; Z: the two-slot curve bounding
// a disk in W (the cuff of the pants model at the base sphere).
const CurveDiagram& nu_curve();
const CurveDiagram& z_curve();

}  // namespace goeritz
