#pragma once

#include <cstdint>
#include <string>

#include "matsplit/split.hpp"

namespace matsplit {

// Construction classes of the circuit characterization. ElementSplit covers
// every circuit of the element splitting matroid (computed, not constructed);
// C4..C8 and Delta are built from classified circuits of the base matroid.
enum class PredictedCircuitKind { ElementSplit, C4, C5, C6, C7, C8, Delta };

struct PredictedCircuit {
    LabelSet elements;
    PredictedCircuitKind klass = PredictedCircuitKind::ElementSplit;
};

enum class PredictedBasisKind { ElementSplitBasis, B1, B2, B3, B4 };

struct PredictedBasis {
    LabelSet elements;
    PredictedBasisKind klass = PredictedBasisKind::ElementSplitBasis;
};

const char* to_string(PredictedCircuitKind k);
const char* to_string(PredictedBasisKind k);

// Predicted circuit family of the es-splitting matroid: the circuits of the
// element splitting matroid together with the classes C4..C8 and Delta,
// merged and restricted to inclusion-minimal members. When one set is
// constructible in several classes the earliest class in declaration order
// keeps the tag.
std::vector<PredictedCircuit> predicted_circuits(const VectorMatroid& m, const SplitSpec& spec,
                                                 const EnumerationLimits& limits = {});

// Predicted basis family: bases of the element splitting matroid plus the
// classes B1..B4. B4 is included although the displayed union of the source
// theorem omits it; the proof requires it.
std::vector<PredictedBasis> predicted_bases(const VectorMatroid& m, const SplitSpec& spec,
                                            const EnumerationLimits& limits = {});

// Closed-form rank of X (within E(M)) optionally joined with z and/or gamma,
// evaluated by the four rank equations. The gamma-only equation is evaluated
// under a fixed case priority: an np-circuit inside X is tested first, then
// the "a,e outside X and e in cl(X)" clause, then the default increment.
int predicted_rank(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& subset,
                   bool include_z, bool include_gamma);
int predicted_rank(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& subset,
                   bool include_z, bool include_gamma,
                   const std::vector<ClassifiedCircuit>& circuits_of_m);

// Outcome of one theorem check: a predicted family against the brute-force
// oracle on the constructed matrix. pass holds iff nothing is missing,
// nothing is spurious and no unexplained mismatch was seen.
struct VerificationReport {
    std::string suite;
    std::string instance;
    bool pass = false;
    std::size_t predicted_count = 0;
    std::size_t oracle_count = 0;
    std::vector<LabelSet> missing;   // in the oracle, not predicted
    std::vector<LabelSet> spurious;  // predicted, not in the oracle
    std::vector<std::string> notes;
    std::string detail;          // one-line outcome description
    std::string counterexample;  // minimized failing case, empty when pass

    std::string summary() const;
};

struct CircuitVerifyOptions {
    // Self-test hook: drop the Delta class from the prediction so the
    // comparison harness provably reports a missing circuit.
    bool corrupt_drop_delta = false;
};

VerificationReport verify_circuit_theorem(const VectorMatroid& m, const SplitSpec& spec,
                                          const EnumerationLimits& limits = {},
                                          const CircuitVerifyOptions& options = {});
VerificationReport verify_basis_theorem(const VectorMatroid& m, const SplitSpec& spec,
                                        const EnumerationLimits& limits = {});

// Rank equations over every subset of E(M) and every {z, gamma} flag pair.
// Mismatches of the gamma-only equation that fit the documented clause
// overlap (np-circuit-free X containing a, with a C5-style circuit through e
// avoiding a inside X u e) are logged as notes and do not fail the report.
VerificationReport verify_rank_theorem(const VectorMatroid& m, const SplitSpec& spec,
                                       const EnumerationLimits& limits = {});

VerificationReport verify_cocircuit_corollary(const VectorMatroid& m, const SplitSpec& spec,
                                              const EnumerationLimits& limits = {});
VerificationReport verify_connectivity(const VectorMatroid& m, const SplitSpec& spec,
                                       const EnumerationLimits& limits = {});

// Witness collection of the Eulerian characterization: an np-circuit through
// both a and b, then C1 meeting it exactly in {b}, then pairwise disjoint
// circuits covering the rest of the ground set.
struct EulerianWitness {
    Circuit c_np;
    std::vector<Circuit> chain;  // C1, C2, ..., Ck with chain[0] = C1
};

std::optional<EulerianWitness> eulerian_witness(const VectorMatroid& m, const SplitSpec& spec,
                                                const EnumerationLimits& limits = {});

// Decomposition built from a witness: { C_np u z, (C1 \ e) u gamma, C2, ... }.
std::vector<LabelSet> witness_decomposition(const SplitSpec& spec, const EulerianWitness& w);

VerificationReport verify_eulerian_theorem(const VectorMatroid& m, const SplitSpec& spec,
                                           const EnumerationLimits& limits = {});

struct HamiltonianWitness {
    Circuit c_np;                      // spanning np-circuit of the base matroid
    LabelSet with_z;                   // C_np u z, a spanning circuit of M^e
    std::optional<LabelSet> with_gamma;  // C_np u gamma when a and e lie in C_np
};

std::optional<HamiltonianWitness> hamiltonian_witness(const VectorMatroid& m,
                                                      const SplitSpec& spec,
                                                      const EnumerationLimits& limits = {});

VerificationReport verify_hamiltonian(const VectorMatroid& m, const SplitSpec& spec,
                                      const EnumerationLimits& limits = {});

// Lift identities: deleting z from the element splitting matroid recovers the
// splitting matrix exactly, and contracting z recovers the circuits of M.
VerificationReport verify_lift(const VectorMatroid& m, const SplitSpec& spec,
                               const EnumerationLimits& limits = {});

struct RandomInstance {
    VectorMatroid matroid;
    SplitSpec spec;
};

// Seeded deterministic generator of simple coloopless matroids over GF(p)
// with a valid spec (e = b, tied constants). Same seed, same instance.
RandomInstance random_instance(std::uint64_t seed, int p, int rows, int cols);

std::string describe_instance(const VectorMatroid& m, const SplitSpec& spec);

}  // namespace matsplit
