#include "matsplit/matroid.hpp"

#include <algorithm>

#include "matsplit/errors.hpp"

namespace matsplit {

namespace {

void check_enumeration_guard(const VectorMatroid& m, const EnumerationLimits& limits) {
    if (static_cast<int>(m.ground().size()) > limits.max_enumeration_ground) {
        throw GroundSetTooLarge("ground set of size " + std::to_string(m.ground().size()) +
                                " exceeds the enumeration guard " +
                                std::to_string(limits.max_enumeration_ground));
    }
}

}  // namespace

VectorMatroid::VectorMatroid(LabeledMatrix matrix)
    : matrix_(std::move(matrix)), rank_(rank_of(matrix_.entries(), matrix_.field())) {}

int CoefficientVector::coeff_of(int label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return coeffs[i];
    }
    return 0;
}

int rank_of(const VectorMatroid& m, const LabelSet& subset) {
    return column_rank(m.matrix(), subset);
}

bool is_independent(const VectorMatroid& m, const LabelSet& subset) {
    return rank_of(m, subset) == static_cast<int>(subset.size());
}

LabelSet closure(const VectorMatroid& m, const LabelSet& subset) {
    const int base_rank = rank_of(m, subset);
    std::vector<int> result;
    for (int y : m.ground()) {
        if (subset.contains(y) || rank_of(m, subset.with(y)) == base_rank) {
            result.push_back(y);
        }
    }
    return LabelSet(std::move(result));
}

bool is_circuit(const VectorMatroid& m, const LabelSet& subset) {
    if (subset.empty()) return false;
    DependencySpace dep = dependency_space(m.matrix(), subset);
    if (dep.dimension() != 1) return false;
    for (int j = 0; j < dep.basis.cols(); ++j) {
        if (dep.basis(0, j) == 0) return false;
    }
    return true;
}

Circuit make_circuit(const VectorMatroid& m, const LabelSet& subset) {
    if (!is_circuit(m, subset)) {
        throw NotACircuit(subset.to_string() + " is not a circuit");
    }
    return Circuit{subset};
}

std::vector<Circuit> circuits(const VectorMatroid& m, const EnumerationLimits& limits) {
    check_enumeration_guard(m, limits);
    std::vector<Circuit> found;
    const std::vector<int>& ground = m.ground().labels();

    // Breadth-first over independent sets: every circuit shows up as an
    // independent (k-1)-prefix extended by its largest element.
    std::vector<LabelSet> frontier = {LabelSet{}};
    while (!frontier.empty()) {
        std::vector<LabelSet> next;
        for (const LabelSet& s : frontier) {
            for (int x : ground) {
                if (!s.empty() && x <= s.back()) continue;
                LabelSet t = s.with(x);
                if (rank_of(m, t) == static_cast<int>(t.size())) {
                    next.push_back(std::move(t));
                    continue;
                }
                // Dependent extension of an independent set: rank is |t|-1.
                // It is a circuit iff every one-element deletion is independent.
                bool minimal = true;
                for (int y : t) {
                    if (y == x) continue;  // t \ x = s, independent by construction
                    if (!is_independent(m, t.without(y))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) found.push_back(Circuit{std::move(t)});
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const Circuit& a, const Circuit& b) {
        return size_lex_less(a.elements, b.elements);
    });
    return found;
}

std::vector<LabelSet> bases(const VectorMatroid& m, const EnumerationLimits& limits) {
    check_enumeration_guard(m, limits);
    const std::vector<int>& ground = m.ground().labels();
    const int n = static_cast<int>(ground.size());
    const int r = m.rank();
    std::vector<LabelSet> out;
    std::vector<int> pick(r);
    // Lexicographic r-combinations of the sorted ground set.
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::vector<int> subset(r);
        for (int i = 0; i < r; ++i) subset[i] = ground[pick[i]];
        LabelSet candidate(std::move(subset));
        if (rank_of(m, candidate) == r) out.push_back(std::move(candidate));
        if (r == 0) break;
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

CoefficientVector circuit_certificate(const VectorMatroid& m, const LabelSet& circuit) {
    DependencySpace dep = dependency_space(m.matrix(), circuit);
    if (dep.dimension() != 1) {
        throw NotACircuit(circuit.to_string() + " is not a circuit (kernel dimension " +
                          std::to_string(dep.dimension()) + ")");
    }
    CoefficientVector cert;
    cert.labels = dep.labels;
    cert.coeffs.resize(dep.labels.size());
    for (std::size_t j = 0; j < cert.labels.size(); ++j) {
        const int c = dep.basis(0, static_cast<int>(j));
        if (c == 0) {
            throw NotACircuit(circuit.to_string() + " is dependent but not minimal");
        }
        cert.coeffs[j] = c;
    }
    return cert;
}

VectorMatroid dual(const VectorMatroid& m) {
    GfMatrix k = kernel_basis(m.matrix().entries(), m.field());
    return VectorMatroid(LabeledMatrix(m.field(), std::move(k), m.matrix().labels()));
}

std::vector<LabelSet> cocircuits(const VectorMatroid& m, const EnumerationLimits& limits) {
    std::vector<Circuit> cs = circuits(dual(m), limits);
    std::vector<LabelSet> out;
    out.reserve(cs.size());
    for (Circuit& c : cs) out.push_back(std::move(c.elements));
    return out;
}

VectorMatroid deletion(const VectorMatroid& m, const LabelSet& remove) {
    for (int x : remove) m.matrix().column_index(x);  // UnknownElement check
    LabelSet keep = m.ground().difference(remove);
    std::vector<int> labels;
    std::vector<int> cols;
    for (std::size_t j = 0; j < m.matrix().labels().size(); ++j) {
        const int label = m.matrix().labels()[j];
        if (keep.contains(label)) {
            labels.push_back(label);
            cols.push_back(static_cast<int>(j));
        }
    }
    GfMatrix entries(m.matrix().rows(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        entries.col(static_cast<int>(j)) = m.matrix().entries().col(cols[j]);
    }
    return VectorMatroid(LabeledMatrix(m.field(), std::move(entries), std::move(labels)));
}

VectorMatroid contraction(const VectorMatroid& m, const LabelSet& contract) {
    const PrimeField& field = m.field();
    GfMatrix a = m.matrix().entries();
    const int rows = static_cast<int>(a.rows());
    std::vector<bool> row_gone(rows, false);
    // Pivot on a maximal independent subset of the contracted labels,
    // ascending; pivot rows are chosen by lowest row index.
    for (int x : contract) {
        const int col = m.matrix().column_index(x);
        int pivot = -1;
        for (int i = 0; i < rows; ++i) {
            if (!row_gone[i] && a(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;  // loop or dependent on already-contracted elements
        const int scale = field.inv(a(pivot, col));
        for (int j = 0; j < a.cols(); ++j) a(pivot, j) = field.mul(a(pivot, j), scale);
        for (int i = 0; i < rows; ++i) {
            if (i == pivot || row_gone[i] || a(i, col) == 0) continue;
            const int factor = a(i, col);
            for (int j = 0; j < a.cols(); ++j) {
                a(i, j) = field.sub(a(i, j), field.mul(factor, a(pivot, j)));
            }
        }
        row_gone[pivot] = true;
    }
    std::vector<int> labels;
    std::vector<int> cols;
    for (std::size_t j = 0; j < m.matrix().labels().size(); ++j) {
        const int label = m.matrix().labels()[j];
        if (!contract.contains(label)) {
            labels.push_back(label);
            cols.push_back(static_cast<int>(j));
        }
    }
    int kept_rows = 0;
    for (int i = 0; i < rows; ++i) kept_rows += row_gone[i] ? 0 : 1;
    GfMatrix entries(kept_rows, static_cast<int>(cols.size()));
    int out_row = 0;
    for (int i = 0; i < rows; ++i) {
        if (row_gone[i]) continue;
        for (std::size_t j = 0; j < cols.size(); ++j) entries(out_row, static_cast<int>(j)) = a(i, cols[j]);
        ++out_row;
    }
    return VectorMatroid(LabeledMatrix(field, std::move(entries), std::move(labels)));
}

ConnectivityResult is_n_connected(const VectorMatroid& m, int n,
                                  const EnumerationLimits& limits) {
    const int size = static_cast<int>(m.ground().size());
    if (size > limits.max_partition_ground) {
        throw GroundSetTooLarge("ground set of size " + std::to_string(size) +
                                " exceeds the partition guard " +
                                std::to_string(limits.max_partition_ground));
    }
    ConnectivityResult result;
    result.connected = true;
    if (size < 2) return result;

    const std::vector<int>& ground = m.ground().labels();
    const int rank = m.rank();
    // Symmetry break: the lowest label always goes to side S.
    const int free_count = size - 1;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << free_count); ++mask) {
        std::vector<int> s = {ground[0]};
        std::vector<int> t;
        for (int i = 0; i < free_count; ++i) {
            (mask >> i & 1 ? s : t).push_back(ground[i + 1]);
        }
        if (t.empty()) continue;
        LabelSet side_s(std::move(s));
        LabelSet side_t(std::move(t));
        const int lambda = rank_of(m, side_s) + rank_of(m, side_t) - rank;
        const int k = lambda + 1;  // minimal order this partition certifies
        const int min_side = static_cast<int>(std::min(side_s.size(), side_t.size()));
        if (k > n - 1 || min_side < k) continue;
        if (result.connected || k < result.witness->order) {
            result.connected = false;
            result.witness = Separation{std::move(side_s), std::move(side_t), k};
            if (k == 1) break;  // cannot do better
        }
    }
    return result;
}

bool cover_with_disjoint_circuits(const std::vector<Circuit>& all, const LabelSet& uncovered,
                                  std::vector<Circuit>& parts) {
    if (uncovered.empty()) return true;
    const int lowest = uncovered.front();
    for (const Circuit& c : all) {
        if (!c.elements.contains(lowest) || !c.elements.subset_of(uncovered)) continue;
        parts.push_back(c);
        if (cover_with_disjoint_circuits(all, uncovered.difference(c.elements), parts)) {
            return true;
        }
        parts.pop_back();
    }
    return false;
}

std::optional<CircuitDecomposition> is_eulerian(const VectorMatroid& m,
                                                const EnumerationLimits& limits) {
    std::vector<Circuit> all = circuits(m, limits);
    CircuitDecomposition decomposition;
    if (!cover_with_disjoint_circuits(all, m.ground(), decomposition.parts)) return std::nullopt;
    return decomposition;
}

bool is_bipartite(const VectorMatroid& m, const EnumerationLimits& limits) {
    for (const Circuit& c : circuits(m, limits)) {
        if (c.elements.size() % 2 != 0) return false;
    }
    return true;
}

std::optional<Circuit> is_hamiltonian(const VectorMatroid& m, const EnumerationLimits& limits) {
    const std::size_t spanning = static_cast<std::size_t>(m.rank()) + 1;
    for (const Circuit& c : circuits(m, limits)) {
        if (c.elements.size() == spanning) return c;
    }
    return std::nullopt;
}

MatroidReport validate(const VectorMatroid& m) {
    MatroidReport report;
    std::vector<int> loops;
    for (int x : m.ground()) {
        if (m.matrix().entries().col(m.matrix().column_index(x)).isZero()) loops.push_back(x);
    }
    report.loops = LabelSet(std::move(loops));

    // Coloops are the loops of the dual.
    VectorMatroid d = dual(m);
    std::vector<int> coloops;
    for (int x : d.ground()) {
        if (d.matrix().cols() == 0) break;
        if (d.matrix().rows() == 0 ||
            d.matrix().entries().col(d.matrix().column_index(x)).isZero()) {
            coloops.push_back(x);
        }
    }
    report.coloops = LabelSet(std::move(coloops));

    std::vector<int> seen;
    for (int x : m.ground()) {
        if (report.loops.contains(x)) continue;
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        std::vector<int> cls = {x};
        for (int y : m.ground()) {
            if (y <= x || report.loops.contains(y)) continue;
            if (rank_of(m, LabelSet{x, y}) == 1) {
                cls.push_back(y);
                seen.push_back(y);
            }
        }
        if (cls.size() >= 2) report.parallel_classes.push_back(LabelSet(std::move(cls)));
    }
    return report;
}

}  // namespace matsplit
