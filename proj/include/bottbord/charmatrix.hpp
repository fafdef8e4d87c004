#pragma once

#include <optional>
#include <vector>

#include "bottbord/polytope.hpp"

namespace bottbord {

enum class CoeffMode { Mod2, Integer };

// The m x n reduced vector matrix A: row i holds the coordinates of
// lambda(F_i^0) in the basis fixed at the base vertex v_{0...0}, blocked
// by simplex factor in the canonical facet order.
class ReducedVectorMatrix {
public:
    ReducedVectorMatrix() = default;

    const SimplexProduct& polytope() const { return P_; }
    CoeffMode mode() const { return mode_; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    // a^j_{ik}: row factor i, column factor j (both 1-based), column index
    // k in 1..n_j.
    long long entry(int i, int j, int k) const
    {
        return rows_[i - 1][P_.col_offset(j) + k - 1];
    }

    friend bool operator==(const ReducedVectorMatrix&, const ReducedVectorMatrix&) = default;

    friend ReducedVectorMatrix parse_matrix(const std::vector<int>& dims, CoeffMode mode,
                                            std::vector<std::vector<long long>> raw_rows);

private:
    SimplexProduct P_;
    CoeffMode mode_ = CoeffMode::Mod2;
    std::vector<std::vector<long long>> rows_;
};

struct VertexFailure {
    VertexId vertex;
    long long det;
};

struct ValidationReport {
    bool valid = true;
    std::vector<VertexFailure> failures;
};

struct Triangularization {
    std::vector<int> perm; // perm[p] = 0-based original factor at position p
    ReducedVectorMatrix matrix;
};

ReducedVectorMatrix parse_matrix(const std::vector<int>& dims, CoeffMode mode,
                                 std::vector<std::vector<long long>> raw_rows);

// Checks the characteristic condition at every vertex: det of the sub-block
// picked by the nonzero choices must be a unit (1 mod 2, or +-1 over Z).
ValidationReport validate_characteristic(const ReducedVectorMatrix& A);

// True iff every principal minor of every submatrix A_{k_1...k_m} equals 1.
bool principal_minors_all_one(const ReducedVectorMatrix& A);

// Searches the m! factor permutations for one putting A in unipotent upper
// triangular vector form. Identity is tried first.
std::optional<Triangularization> try_triangularize(const ReducedVectorMatrix& A);
Triangularization triangularize(const ReducedVectorMatrix& A);

// Triangularization constrained to put the given 0-based factor in the final
// position; the bundle tower then ends with that factor's fiber stage.
std::optional<Triangularization> try_triangularize_factor_last(const ReducedVectorMatrix& A,
                                                               int last_factor);

// Triangularization whose final factor has dimension 1. A triangular order
// alone is not enough for the boundary theorems over P x interval: the tower
// must end with the interval stage, so the interval's row blocks into every
// other factor have to vanish.
std::optional<Triangularization> try_triangularize_interval_last(const ReducedVectorMatrix& A);

// Conjugate A by a factor permutation (perm[p] = original factor at p).
ReducedVectorMatrix permute_factors(const ReducedVectorMatrix& A, const std::vector<int>& perm);

// Cube-only orientability test: every row of E_n + A sums to 0 mod 2
// (equivalent to first_sw = 0; see the ring's linear-form convention).
bool orientability_column_test(const ReducedVectorMatrix& A);

ReducedVectorMatrix mod2_reduce(const ReducedVectorMatrix& A);

// Integer determinant (Bareiss); entries stay exact at desk scale.
long long det_ll(std::vector<std::vector<long long>> M);

} // namespace bottbord
