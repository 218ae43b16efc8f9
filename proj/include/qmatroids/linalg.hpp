#pragma once

#include <optional>
#include <vector>

#include "qmatroids/gf.hpp"

namespace qm::linalg {

/// Row-major matrix over a single FieldSpec; entries are packed FVals.
using Mat = std::vector<std::vector<FVal>>;

/// Full reduced row echelon form in place: unit pivots, zeros above and
/// below, pivot columns strictly increasing, zero rows removed. Returns the
/// rank. The result is the canonical representative of the row space.
int rref_in_place(Mat& rows, const FieldSpec& F);

[[nodiscard]] Mat rref(Mat rows, const FieldSpec& F);

[[nodiscard]] int rank_of(Mat rows, const FieldSpec& F);

/// Whether v lies in the row space described by RREF rows.
[[nodiscard]] bool in_row_space(const Mat& rref_rows, std::vector<FVal> v, const FieldSpec& F);

/// Canonical basis of the right kernel {x : rows * x = 0} in K^ncols.
[[nodiscard]] Mat kernel(Mat rows, int ncols, const FieldSpec& F);

[[nodiscard]] Mat matmul(const Mat& A, const Mat& B, const FieldSpec& F);

[[nodiscard]] std::vector<FVal> vec_mat(const std::vector<FVal>& v, const Mat& B,
                                        const FieldSpec& F);

[[nodiscard]] Mat transpose(const Mat& A, int ncols);

/// Solves x * A = b (x a row vector); nullopt when no solution exists.
[[nodiscard]] std::optional<std::vector<FVal>> solve_left(const Mat& A,
                                                          const std::vector<FVal>& b, int ncols,
                                                          const FieldSpec& F);

[[nodiscard]] std::vector<FVal> dot_rows(const Mat& A, const std::vector<FVal>& v,
                                         const FieldSpec& F);

}  // namespace qm::linalg
