#include "qmatroids/linalg.hpp"

#include <algorithm>

namespace qm::linalg {

namespace {
void require_rect(const Mat& rows, int ncols) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ncols) {
      throw Error(Errc::DimensionMismatch, "ragged matrix");
    }
  }
}
}  // namespace

int rref_in_place(Mat& rows, const FieldSpec& F) {
  if (rows.empty()) return 0;
  int nrows = static_cast<int>(rows.size());
  int ncols = static_cast<int>(rows[0].size());
  require_rect(rows, ncols);
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    FVal s = F.inv(rows[r][c]);
    if (s != 1) {
      for (int j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], s);
    }
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      FVal f = rows[i][c];
      for (int j = c; j < ncols; ++j) {
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
      }
    }
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  return r;
}

Mat rref(Mat rows, const FieldSpec& F) {
  rref_in_place(rows, F);
  return rows;
}

int rank_of(Mat rows, const FieldSpec& F) { return rref_in_place(rows, F); }

bool in_row_space(const Mat& rref_rows, std::vector<FVal> v, const FieldSpec& F) {
  for (const auto& row : rref_rows) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    if (pc >= v.size()) throw Error(Errc::DimensionMismatch, "vector length mismatch");
    if (v[pc] == 0) continue;
    FVal f = v[pc];
    for (std::size_t j = pc; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, row[j]));
  }
  return std::all_of(v.begin(), v.end(), [](FVal x) { return x == 0; });
}

Mat kernel(Mat rows, int ncols, const FieldSpec& F) {
  require_rect(rows, ncols);
  rref_in_place(rows, F);
  std::vector<int> pivot_col(rows.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int pc = 0;
    while (rows[i][static_cast<std::size_t>(pc)] == 0) ++pc;
    pivot_col[i] = pc;
    is_pivot[static_cast<std::size_t>(pc)] = true;
  }
  Mat out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<FVal> v(static_cast<std::size_t>(ncols), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      v[static_cast<std::size_t>(pivot_col[i])] = F.neg(rows[i][static_cast<std::size_t>(f)]);
    }
    out.push_back(std::move(v));
  }
  rref_in_place(out, F);
  return out;
}

Mat matmul(const Mat& A, const Mat& B, const FieldSpec& F) {
  std::size_t s = B.size();
  std::size_t t = s == 0 ? 0 : B[0].size();
  Mat out(A.size(), std::vector<FVal>(t, 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != s) throw Error(Errc::DimensionMismatch, "matmul shape mismatch");
    for (std::size_t k = 0; k < s; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < t; ++j) {
        out[i][j] = F.add(out[i][j], F.mul(A[i][k], B[k][j]));
      }
    }
  }
  return out;
}

std::vector<FVal> vec_mat(const std::vector<FVal>& v, const Mat& B, const FieldSpec& F) {
  Mat out = matmul({v}, B, F);
  return out[0];
}

Mat transpose(const Mat& A, int ncols) {
  require_rect(A, ncols);
  Mat out(static_cast<std::size_t>(ncols), std::vector<FVal>(A.size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (int j = 0; j < ncols; ++j) {
      out[static_cast<std::size_t>(j)][i] = A[i][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::optional<std::vector<FVal>> solve_left(const Mat& A, const std::vector<FVal>& b, int ncols,
                                            const FieldSpec& F) {
  require_rect(A, ncols);
  if (static_cast<int>(b.size()) != ncols) {
    throw Error(Errc::DimensionMismatch, "rhs length mismatch");
  }
  std::size_t k = A.size();
  // Solve A^T y = b via the augmented reduced form.
  Mat aug = transpose(A, ncols);
  for (int i = 0; i < ncols; ++i) aug[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
  rref_in_place(aug, F);
  std::vector<FVal> y(k, 0);
  for (const auto& row : aug) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    if (pc == k) return std::nullopt;  // pivot landed in the rhs column
    y[pc] = row[k];
  }
  return y;
}

std::vector<FVal> dot_rows(const Mat& A, const std::vector<FVal>& v, const FieldSpec& F) {
  std::vector<FVal> out(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != v.size()) throw Error(Errc::DimensionMismatch, "dot length mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) {
      out[i] = F.add(out[i], F.mul(A[i][j], v[j]));
    }
  }
  return out;
}

}  // namespace qm::linalg
