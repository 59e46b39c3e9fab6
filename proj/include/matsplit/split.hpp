#pragma once

#include <optional>

#include "matsplit/matroid.hpp"

namespace matsplit {

// Parameters of the splitting family of constructions: the pair {a,b}, the
// distinguished element e in {a,b}, the nonzero constant written into the new
// row, the nonzero constant of the new column z, and the labels for the two
// new elements.
struct SplitSpec {
    int a = 0;
    int b = 0;
    int e = 0;
    Scalar alpha_row;
    Scalar alpha_z;
    int z_label = 0;
    int gamma_label = 0;

    // Paper defaults: both constants 1, z and gamma labelled max(ground)+1
    // and max(ground)+2.
    static SplitSpec standard(const VectorMatroid& m, int a, int b, int e);
    static SplitSpec with_constants(const VectorMatroid& m, int a, int b, int e, int alpha_row,
                                    int alpha_z);
};

// Throws if the spec is malformed for this matroid: a, b must be distinct
// ground elements, e one of them, the constants nonzero in the matroid's
// field, and z/gamma fresh distinct labels.
void validate_spec(const VectorMatroid& m, const SplitSpec& spec);

enum class CircuitKind { Disjoint, PCircuit, NpCircuit };

struct CircuitClass {
    CircuitKind kind = CircuitKind::Disjoint;
    CoefficientVector certificate;  // canonical dependency of the circuit
};

// New row with alpha_row under columns a and b. Requires coloopless input.
VectorMatroid splitting(const VectorMatroid& m, const SplitSpec& spec);

// Splitting plus the column z, supported only on the new row.
VectorMatroid element_splitting(const VectorMatroid& m, const SplitSpec& spec);

// Element splitting plus the column gamma = (column of e) - (column of z).
VectorMatroid es_splitting(const VectorMatroid& m, const SplitSpec& spec);

// Classify a circuit of m relative to {a,b}: disjoint from the pair, or a
// p-circuit (coeff(a)+coeff(b) = 0), or an np-circuit. Scale-invariant.
CircuitClass classify_circuit(const VectorMatroid& m, const SplitSpec& spec,
                              const LabelSet& circuit);

struct ClassifiedCircuit {
    Circuit circuit;
    CircuitKind kind = CircuitKind::Disjoint;
};

// All circuits of m with their classification, canonical order.
std::vector<ClassifiedCircuit> classified_circuits(const VectorMatroid& m, const SplitSpec& spec,
                                                   const EnumerationLimits& limits = {});

// p-dependence of C (an np-circuit) together with a disjoint independent set
// I covering {a,b}: no member of C0 inside, and some dependency over C u I
// with every coefficient nonzero and coeff(a)+coeff(b) = 0.
bool is_p_dependent(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& np_circuit,
                    const LabelSet& independent, const EnumerationLimits& limits = {});

// The p-dependence test on an arbitrary subset, without the (C, I) shape
// preconditions; this is what the basis prediction needs.
bool p_dependent_set(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& subset,
                     const EnumerationLimits& limits = {});

}  // namespace matsplit
