#ifndef PETRIAL_WITNESS_HPP
#define PETRIAL_WITNESS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "petrial/graph.hpp"

namespace petrial {

enum class WitnessKind { Path, Nonpath };

std::string to_string(WitnessKind k);

// A replayable reduction: starting graft, deletion order, claimed end state.
// A path-witness ends in one isolated unmarked vertex; a nonpath-witness
// ends with at least two isolated unmarked vertices.
struct WitnessCertificate {
    WitnessKind kind = WitnessKind::Path;
    Graft initial;
    std::vector<Vertex> sequence;
    Graft final;
};

// Marks the two leaves and deletes along the path starting from the lower-id
// leaf, leaving the far leaf isolated and unmarked. A single vertex needs no
// marks and no deletions. Non-path input is refused.
WitnessCertificate path_witness(const SimpleGraph& p);

// Recursive construction for any non-path on >= 2 vertices: a disconnected
// input solves its first two components, the triangle is the explicit base
// case (all three marked, one deletion), and otherwise some vertex u whose
// one-step deletion leaves a non-path is found by an increasing-id scan and
// the sub-witness marks L' are lifted to (L' u {u}) symdiff N(u). Path input
// is refused; a failed scan cannot happen and raises an internal error.
WitnessCertificate nonpath_witness(const SimpleGraph& g);

struct CheckReport {
    bool ok = false;
    std::string failure;    // empty when ok; otherwise names the failed step
    std::size_t corank = 0; // corank shared by every replay step when ok
    std::size_t steps = 0;  // deletions replayed
};

// Independent replay of a certificate: every deleted vertex must be present
// and marked, the corank of the marked adjacency matrix must never change,
// the end state must equal `final`, and `final` must deliver what the kind
// promises. Failures are verdicts, not exceptions.
CheckReport check_witness(const WitnessCertificate& c);

struct NonbinomialCertificate {
    std::size_t corank = 0; // corank of the initial marked matrix, >= 2
    WitnessCertificate certificate;
};

// For a connected non-path: a checked witness whose initial marked matrix
// has corank >= 2, i.e. some twist subset realizes genus <= n-2. For circle
// graphs the polynomial also has degree n and no gaps, so three or more
// coefficients are forced and it cannot be binomial.
NonbinomialCertificate certify_nonbinomial(const SimpleGraph& g);

// Certificate JSON: {"kind", "initial": {"n", "edges", "marks"}, "sequence",
// "final": same shape}. The initial graft must use the contiguous vertex ids
// 0..n-1; `final` lists the survivors, keeping their initial ids, and its
// "n" is the survivor count.
nlohmann::ordered_json to_json(const WitnessCertificate& c);
WitnessCertificate certificate_from_json(const nlohmann::json& j);
WitnessCertificate parse_certificate(const std::string& text);

} // namespace petrial

#endif
