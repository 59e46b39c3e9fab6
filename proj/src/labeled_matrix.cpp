#include "matsplit/labeled_matrix.hpp"

#include <algorithm>

#include "matsplit/errors.hpp"

namespace matsplit {

LabeledMatrix::LabeledMatrix(PrimeField field, GfMatrix entries, std::vector<int> labels)
    : field_(field),
      entries_(std::move(entries)),
      labels_(std::move(labels)),
      label_set_(labels_) {
    if (static_cast<int>(labels_.size()) != entries_.cols()) {
        throw ValidationError("label count " + std::to_string(labels_.size()) +
                              " does not match column count " + std::to_string(entries_.cols()));
    }
    if (label_set_.size() != labels_.size()) {
        throw ValidationError("duplicate column labels");
    }
    for (int l : labels_) {
        if (l <= 0) throw ValidationError("labels must be positive integers");
    }
    for (int i = 0; i < entries_.rows(); ++i) {
        for (int j = 0; j < entries_.cols(); ++j) {
            const int v = entries_(i, j);
            if (v < 0 || v >= field_.order()) {
                throw ValidationError("entry " + std::to_string(v) + " out of range for GF(" +
                                      std::to_string(field_.order()) + ")");
            }
        }
    }
}

int LabeledMatrix::column_index(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    throw UnknownElement("element " + std::to_string(label) + " is not in the ground set");
}

GfMatrix LabeledMatrix::columns(const LabelSet& subset) const {
    GfMatrix out(entries_.rows(), static_cast<int>(subset.size()));
    int j = 0;
    for (int label : subset) out.col(j++) = entries_.col(column_index(label));
    return out;
}

bool LabeledMatrix::same_matrix(const LabeledMatrix& other) const {
    return field_ == other.field_ && labels_ == other.labels_ &&
           entries_.rows() == other.entries_.rows() &&
           entries_.cols() == other.entries_.cols() && entries_ == other.entries_;
}

RrefResult rref(const LabeledMatrix& m) { return rref(m.entries(), m.field()); }

int column_rank(const LabeledMatrix& m, const LabelSet& subset) {
    if (subset.empty()) return 0;
    return rank_of(m.columns(subset), m.field());
}

DependencySpace dependency_space(const LabeledMatrix& m, const LabelSet& subset) {
    DependencySpace out;
    out.labels = subset.labels();
    out.basis = kernel_basis(m.columns(subset), m.field());
    return out;
}

}  // namespace matsplit
