#pragma once

#include "goeritz/diagram.hpp"

#include <string>
#include <vector>

namespace goeritz {

// The four Goeritz generators (with inverses for the infinite-order ones).
// alpha and gamma are involutions; delta is the order-three simplex rotation.
enum class Generator { Alpha, Beta, BetaInv, Gamma, Delta, DeltaInv };

using GeneratorWord = std::vector<Generator>;

Generator inverse(Generator g);
GeneratorWord inverse_word(const GeneratorWord& w);

// Words serialize over the alphabet "a b B g d D" (B = beta^-1, D = delta^-1),
// whitespace-insensitive.
std::string word_to_string(const GeneratorWord& w);
GeneratorWord word_from_string(const std::string& text);

// Apply one generator.  The result is always minimal: alpha fixes every
// diagram (the hyperelliptic involution preserves each isotopy class of
// curves in genus two), beta shifts the gluing twist by half the slot count
// (one half Dehn twist about c), gamma exchanges the two sides, and delta is
// computed by exact transport through its reference-curve images.
CurveDiagram apply_generator(Generator g, const CurveDiagram& d);

// w acts as a group element: the rightmost letter is applied first, so
// apply_word({b, d}, P) = beta(delta(P)).
CurveDiagram apply_word(const GeneratorWord& w, const CurveDiagram& d);

// delta(P): the distinguished neighbor of the base vertex.
const CurveDiagram& delta_of_base();

// neighbor(n, g) = beta^n gamma^g delta applied to the base curve; the
// complete family of vertices adjacent to the base vertex of Gamma.
CurveDiagram neighbor(std::int64_t n, int g);

// --- stabilizer of the base vertex -------------------------------------------
// beta^n alpha^a gamma^g, the normal form in
//   < alpha, beta, gamma | alpha^2 = gamma^2 = 1, alpha beta = beta alpha,
//                          gamma alpha gamma = alpha, gamma beta gamma = alpha beta >.
struct StabilizerNormalForm {
    std::int64_t n = 0;
    int a = 0;
    int g = 0;
    bool operator==(const StabilizerNormalForm&) const = default;
};

class NotStabilizerWord : public std::runtime_error {
  public:
    NotStabilizerWord() : std::runtime_error("word contains delta; not a stabilizer word") {}
};

StabilizerNormalForm stabilizer_normal_form(const GeneratorWord& w);
StabilizerNormalForm stabilizer_multiply(const StabilizerNormalForm& x, const StabilizerNormalForm& y);
GeneratorWord stabilizer_word(const StabilizerNormalForm& f);

// --- relation suite ------------------------------------------------------------

struct RelationReport {
    bool ok = true;
    // one entry per (relation, sample) failure
    std::vector<std::string> failures;
    int relations_checked = 0;
    int samples = 0;
};

// Verifies alpha^2 = gamma^2 = delta^3 = id, alpha beta = beta alpha,
// gamma alpha gamma = alpha, gamma beta gamma = alpha beta as action
// equalities (canonical forms of images) on every sample diagram.
RelationReport check_relations(const std::vector<CurveDiagram>& samples);

// Seeded sample generator used by the relation suite and the CLI: images of
// random short words applied to the base curve (plus the base itself).
std::vector<CurveDiagram> random_diagrams(int count, std::uint64_t seed, int max_word_len = 6);
GeneratorWord random_word(std::uint64_t seed, int length);

}  // namespace goeritz
