#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tnet/field.hpp"

namespace tnet {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void append_row(const Vec& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Rank and null space of a matrix; every null vector is re-checked against
/// the original rows before the certificate is returned.
struct RankCertificate {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<Vec> nullspace;

  std::size_t nullity() const { return nullspace.size(); }
};

/// Gaussian elimination; the pivot in each column is the first nonzero entry
/// at or below the current row.
RankCertificate row_reduce(const Field& F, const Matrix& m);

Elem dot(const Field& F, const Vec& a, const Vec& b);
/// Scales v so that its first nonzero entry is one. v must be nonzero.
void normalize_first_nonzero(const Field& F, std::span<Elem> v);

/// Solves A x = b for square invertible A; nullopt when singular.
std::optional<Vec> solve(const Field& F, const Matrix& a, const Vec& b);

using Vec3 = std::array<Elem, 3>;
using Mat3 = std::array<std::array<Elem, 3>, 3>;

Mat3 mat3_identity(const Field& F);
Mat3 mat3_mul(const Field& F, const Mat3& a, const Mat3& b);
Vec3 mat3_apply(const Field& F, const Mat3& m, const Vec3& v);
/// Row vector times matrix (lines transform contravariantly).
Vec3 mat3_apply_row(const Field& F, const Vec3& v, const Mat3& m);
Elem mat3_det(const Field& F, const Mat3& m);
/// Inverse, or nullopt for a singular matrix.
std::optional<Mat3> mat3_inverse(const Field& F, const Mat3& m);
/// Projective normal form: first nonzero entry (row-major) equal to one.
Mat3 mat3_normalize(const Field& F, Mat3 m);
bool mat3_is_scalar(const Field& F, const Mat3& m);
Mat3 mat3_from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

Vec3 cross(const Field& F, const Vec3& a, const Vec3& b);
Elem dot3(const Field& F, const Vec3& a, const Vec3& b);

}  // namespace tnet
