#include "matsplit/split.hpp"

#include <algorithm>

#include "matsplit/errors.hpp"

namespace matsplit {

SplitSpec SplitSpec::standard(const VectorMatroid& m, int a, int b, int e) {
    return with_constants(m, a, b, e, 1, 1);
}

SplitSpec SplitSpec::with_constants(const VectorMatroid& m, int a, int b, int e, int alpha_row,
                                    int alpha_z) {
    const int top = m.ground().empty() ? 0 : m.ground().back();
    SplitSpec spec{a,
                   b,
                   e,
                   Scalar(alpha_row, m.field()),
                   Scalar(alpha_z, m.field()),
                   top + 1,
                   top + 2};
    validate_spec(m, spec);
    return spec;
}

void validate_spec(const VectorMatroid& m, const SplitSpec& spec) {
    m.matrix().column_index(spec.a);
    m.matrix().column_index(spec.b);
    if (spec.a == spec.b) {
        throw PreconditionViolated("split pair must be two distinct elements, got a = b = " +
                                   std::to_string(spec.a));
    }
    if (spec.e != spec.a && spec.e != spec.b) {
        throw PreconditionViolated("e = " + std::to_string(spec.e) + " must be one of a = " +
                                   std::to_string(spec.a) + ", b = " + std::to_string(spec.b));
    }
    if (spec.alpha_row.p != m.field().order() || spec.alpha_z.p != m.field().order()) {
        throw FieldMismatch("split constants must live in GF(" +
                            std::to_string(m.field().order()) + ")");
    }
    if (spec.alpha_row.value == 0 || spec.alpha_z.value == 0) {
        throw PreconditionViolated("split constants must be nonzero");
    }
    if (m.ground().contains(spec.z_label) || m.ground().contains(spec.gamma_label)) {
        throw LabelCollision("labels z = " + std::to_string(spec.z_label) + ", gamma = " +
                             std::to_string(spec.gamma_label) + " must be fresh");
    }
    if (spec.z_label == spec.gamma_label || spec.z_label <= 0 || spec.gamma_label <= 0) {
        throw PreconditionViolated("z and gamma need distinct positive labels");
    }
}

namespace {

void require_coloopless(const VectorMatroid& m) {
    MatroidReport report = validate(m);
    if (!report.coloopless()) {
        throw ColoopPresent("matroid has coloops " + report.coloops.to_string() +
                            "; the splitting constructions require a coloopless matroid");
    }
}

}  // namespace

VectorMatroid splitting(const VectorMatroid& m, const SplitSpec& spec) {
    validate_spec(m, spec);
    require_coloopless(m);
    const GfMatrix& a = m.matrix().entries();
    GfMatrix out(a.rows() + 1, a.cols());
    out.topRows(a.rows()) = a;
    out.row(a.rows()).setZero();
    out(a.rows(), m.matrix().column_index(spec.a)) = spec.alpha_row.value;
    out(a.rows(), m.matrix().column_index(spec.b)) = spec.alpha_row.value;
    return VectorMatroid(LabeledMatrix(m.field(), std::move(out), m.matrix().labels()));
}

VectorMatroid element_splitting(const VectorMatroid& m, const SplitSpec& spec) {
    VectorMatroid split = splitting(m, spec);
    const GfMatrix& a = split.matrix().entries();
    GfMatrix out(a.rows(), a.cols() + 1);
    out.leftCols(a.cols()) = a;
    out.col(a.cols()).setZero();
    out(a.rows() - 1, a.cols()) = spec.alpha_z.value;
    std::vector<int> labels = split.matrix().labels();
    labels.push_back(spec.z_label);
    return VectorMatroid(LabeledMatrix(m.field(), std::move(out), std::move(labels)));
}

VectorMatroid es_splitting(const VectorMatroid& m, const SplitSpec& spec) {
    VectorMatroid elsplit = element_splitting(m, spec);
    const GfMatrix& a = elsplit.matrix().entries();
    const PrimeField& field = m.field();
    const int e_col = elsplit.matrix().column_index(spec.e);
    const int z_col = elsplit.matrix().column_index(spec.z_label);
    GfMatrix out(a.rows(), a.cols() + 1);
    out.leftCols(a.cols()) = a;
    for (int i = 0; i < a.rows(); ++i) {
        out(i, a.cols()) = field.sub(a(i, e_col), a(i, z_col));
    }
    std::vector<int> labels = elsplit.matrix().labels();
    labels.push_back(spec.gamma_label);
    return VectorMatroid(LabeledMatrix(field, std::move(out), std::move(labels)));
}

CircuitClass classify_circuit(const VectorMatroid& m, const SplitSpec& spec,
                              const LabelSet& circuit) {
    CircuitClass out;
    out.certificate = circuit_certificate(m, circuit);  // NotACircuit on bad input
    const bool has_a = circuit.contains(spec.a);
    const bool has_b = circuit.contains(spec.b);
    if (!has_a && !has_b) {
        out.kind = CircuitKind::Disjoint;
        return out;
    }
    // The pair condition coeff(a)+coeff(b) = 0 is invariant under rescaling
    // the certificate, so the canonical representative decides it. A circuit
    // meeting {a,b} in one element always fails it (the lone coefficient is
    // nonzero).
    const int s = m.field().add(out.certificate.coeff_of(spec.a),
                                out.certificate.coeff_of(spec.b));
    out.kind = (has_a && has_b && s == 0) ? CircuitKind::PCircuit : CircuitKind::NpCircuit;
    return out;
}

std::vector<ClassifiedCircuit> classified_circuits(const VectorMatroid& m, const SplitSpec& spec,
                                                   const EnumerationLimits& limits) {
    std::vector<ClassifiedCircuit> out;
    for (Circuit& c : circuits(m, limits)) {
        CircuitKind kind = classify_circuit(m, spec, c.elements).kind;
        out.push_back(ClassifiedCircuit{std::move(c), kind});
    }
    return out;
}

bool p_dependent_set(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& subset,
                     const EnumerationLimits& limits) {
    // No member of C0 inside: every circuit within the subset must be an
    // np-circuit. Circuits inside the subset are the circuits of the
    // restriction to it.
    VectorMatroid restricted = deletion(m, m.ground().difference(subset));
    for (const Circuit& c : circuits(restricted, limits)) {
        if (classify_circuit(m, spec, c.elements).kind != CircuitKind::NpCircuit) return false;
    }

    DependencySpace dep = dependency_space(m.matrix(), subset);
    const int dim = dep.dimension();
    const int p = m.field().order();
    long long total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= p;
        if (total > limits.max_kernel_vectors) {
            throw KernelTooLarge("kernel of dimension " + std::to_string(dim) + " over GF(" +
                                 std::to_string(p) + ") exceeds the enumeration guard");
        }
    }
    const int n = static_cast<int>(subset.size());
    int a_pos = -1;
    int b_pos = -1;
    for (int i = 0; i < n; ++i) {
        if (dep.labels[i] == spec.a) a_pos = i;
        if (dep.labels[i] == spec.b) b_pos = i;
    }
    std::vector<int> mix(dim, 0);
    std::vector<int> vec(n);
    for (long long step = 1; step < total; ++step) {
        int carry = 0;
        do {
            mix[carry] = (mix[carry] + 1) % p;
        } while (mix[carry] == 0 && ++carry < dim);
        std::fill(vec.begin(), vec.end(), 0);
        for (int i = 0; i < dim; ++i) {
            if (mix[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                vec[j] = m.field().add(vec[j], m.field().mul(mix[i], dep.basis(i, j)));
            }
        }
        bool all_nonzero = true;
        for (int j = 0; j < n; ++j) {
            if (vec[j] == 0) {
                all_nonzero = false;
                break;
            }
        }
        if (!all_nonzero) continue;
        const int coeff_a = a_pos >= 0 ? vec[a_pos] : 0;
        const int coeff_b = b_pos >= 0 ? vec[b_pos] : 0;
        if (m.field().add(coeff_a, coeff_b) == 0) return true;
    }
    return false;
}

bool is_p_dependent(const VectorMatroid& m, const SplitSpec& spec, const LabelSet& np_circuit,
                    const LabelSet& independent, const EnumerationLimits& limits) {
    if (classify_circuit(m, spec, np_circuit).kind != CircuitKind::NpCircuit) {
        throw PreconditionViolated("C = " + np_circuit.to_string() + " is not an np-circuit");
    }
    if (!is_independent(m, independent)) {
        throw PreconditionViolated("I = " + independent.to_string() + " is not independent");
    }
    if (!np_circuit.disjoint_with(independent)) {
        throw PreconditionViolated("C and I must be disjoint");
    }
    LabelSet joined = np_circuit.unite(independent);
    if (!joined.contains(spec.a) || !joined.contains(spec.b)) {
        throw PreconditionViolated("C u I must contain both split elements {a,b}");
    }
    return p_dependent_set(m, spec, joined, limits);
}

}  // namespace matsplit
