#pragma once

#include <vector>

#include "matsplit/gf_linalg.hpp"
#include "matsplit/label_set.hpp"

namespace matsplit {

// A GF(p) matrix whose columns carry distinct positive element labels.
// Labels stay attached to their columns through every construction.
class LabeledMatrix {
  public:
    LabeledMatrix(PrimeField field, GfMatrix entries, std::vector<int> labels);

    const PrimeField& field() const { return field_; }
    const GfMatrix& entries() const { return entries_; }
    const std::vector<int>& labels() const { return labels_; }
    int rows() const { return static_cast<int>(entries_.rows()); }
    int cols() const { return static_cast<int>(entries_.cols()); }
    const LabelSet& label_set() const { return label_set_; }

    // Column position of a label; throws UnknownElement.
    int column_index(int label) const;

    // Submatrix of the selected columns, ordered by ascending label.
    GfMatrix columns(const LabelSet& subset) const;

    // Field, shape, labels and entries all equal.
    bool same_matrix(const LabeledMatrix& other) const;

  private:
    PrimeField field_;
    GfMatrix entries_;
    std::vector<int> labels_;
    LabelSet label_set_;
};

struct DependencySpace {
    std::vector<int> labels;  // ascending; one coordinate per label
    GfMatrix basis;           // rows are coefficient vectors, canonical RREF
    int dimension() const { return static_cast<int>(basis.rows()); }
};

// Spec operations of the linear-algebra layer.
RrefResult rref(const LabeledMatrix& m);
int column_rank(const LabeledMatrix& m, const LabelSet& subset);
DependencySpace dependency_space(const LabeledMatrix& m, const LabelSet& subset);

}  // namespace matsplit
