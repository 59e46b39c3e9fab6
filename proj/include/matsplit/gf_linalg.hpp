#pragma once

#include <Eigen/Core>
#include <vector>

#include "matsplit/gf.hpp"

namespace matsplit {

// Dense matrix over GF(p); entries are kept reduced in [0, p).
using GfMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct RrefResult {
    GfMatrix reduced;
    std::vector<int> pivot_columns;
    int rank = 0;
};

// Reduced row echelon form by Gauss-Jordan elimination over GF(p).
RrefResult rref(const GfMatrix& m, const PrimeField& field);

int rank_of(const GfMatrix& m, const PrimeField& field);

// Canonical basis of { x : m x = 0 }, returned as rows. The free-variable
// basis is itself row-reduced, so the result is the unique RREF basis of the
// kernel and each row leads with 1.
GfMatrix kernel_basis(const GfMatrix& m, const PrimeField& field);

}  // namespace matsplit
