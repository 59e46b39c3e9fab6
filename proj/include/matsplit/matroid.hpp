#pragma once

#include <optional>
#include <vector>

#include "matsplit/labeled_matrix.hpp"

namespace matsplit {

// Enumeration guards. Exceeding one is an error, never a silent truncation.
struct EnumerationLimits {
    int max_enumeration_ground = 24;       // circuits / bases / derived predicates
    int max_partition_ground = 20;         // connectivity bipartition scan
    long long max_kernel_vectors = 1'000'000;  // p-dependence kernel enumeration
};

// A matroid given by a representing matrix over GF(p); the ground set is the
// label set of the matrix and the rank is cached at construction.
class VectorMatroid {
  public:
    explicit VectorMatroid(LabeledMatrix matrix);

    const LabeledMatrix& matrix() const { return matrix_; }
    const PrimeField& field() const { return matrix_.field(); }
    const LabelSet& ground() const { return matrix_.label_set(); }
    int rank() const { return rank_; }

  private:
    LabeledMatrix matrix_;
    int rank_;
};

// A minimal dependent set. Producers guarantee minimality; use make_circuit
// to validate an untrusted set.
struct Circuit {
    LabelSet elements;

    bool operator==(const Circuit& other) const { return elements == other.elements; }
};

struct CoefficientVector {
    std::vector<int> labels;  // ascending
    std::vector<int> coeffs;  // same length, values in [0, p)

    int coeff_of(int label) const;  // 0 when the label is absent
};

struct Separation {
    LabelSet side_s;
    LabelSet side_t;
    int order = 0;  // the k for which this is a k-separation
};

struct ConnectivityResult {
    bool connected = false;  // n-connected for the n that was asked
    std::optional<Separation> witness;
};

struct CircuitDecomposition {
    std::vector<Circuit> parts;  // pairwise disjoint circuits covering the ground set
};

struct MatroidReport {
    LabelSet loops;
    LabelSet coloops;
    std::vector<LabelSet> parallel_classes;  // classes of size >= 2 only

    bool simple() const { return loops.empty() && parallel_classes.empty(); }
    bool coloopless() const { return coloops.empty(); }
};

int rank_of(const VectorMatroid& m, const LabelSet& subset);
bool is_independent(const VectorMatroid& m, const LabelSet& subset);
LabelSet closure(const VectorMatroid& m, const LabelSet& subset);

bool is_circuit(const VectorMatroid& m, const LabelSet& subset);
Circuit make_circuit(const VectorMatroid& m, const LabelSet& subset);  // NotACircuit

// All circuits, ordered by (size, lexicographic labels).
std::vector<Circuit> circuits(const VectorMatroid& m, const EnumerationLimits& limits = {});

// All bases, ordered lexicographically.
std::vector<LabelSet> bases(const VectorMatroid& m, const EnumerationLimits& limits = {});

// The canonical dependency of a circuit: leading coefficient 1, every
// coordinate nonzero.
CoefficientVector circuit_certificate(const VectorMatroid& m, const LabelSet& circuit);

// Standard-form dual representation on the same labels.
VectorMatroid dual(const VectorMatroid& m);
std::vector<LabelSet> cocircuits(const VectorMatroid& m, const EnumerationLimits& limits = {});

VectorMatroid deletion(const VectorMatroid& m, const LabelSet& remove);
VectorMatroid contraction(const VectorMatroid& m, const LabelSet& contract);

// True iff no k-separation exists for 1 <= k <= n-1; reports a minimal-order
// witness otherwise.
ConnectivityResult is_n_connected(const VectorMatroid& m, int n,
                                  const EnumerationLimits& limits = {});

// First circuit partition of the ground set in canonical order, if any.
std::optional<CircuitDecomposition> is_eulerian(const VectorMatroid& m,
                                                const EnumerationLimits& limits = {});

// Exact-cover backtracking: extend parts by pairwise disjoint circuits from
// the canonical list until the uncovered set is exactly covered. Returns the
// first solution in canonical order.
bool cover_with_disjoint_circuits(const std::vector<Circuit>& all, const LabelSet& uncovered,
                                  std::vector<Circuit>& parts);

// Every circuit has even size.
bool is_bipartite(const VectorMatroid& m, const EnumerationLimits& limits = {});

// A spanning circuit (size rank+1), first in canonical order, if any.
std::optional<Circuit> is_hamiltonian(const VectorMatroid& m,
                                      const EnumerationLimits& limits = {});

MatroidReport validate(const VectorMatroid& m);

}  // namespace matsplit
