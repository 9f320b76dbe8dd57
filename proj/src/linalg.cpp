#include "tnet/linalg.hpp"

#include <utility>

namespace tnet {

void Matrix::append_row(const Vec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorCode::SizeMismatch, "row length differs from matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Elem dot(const Field& F, const Vec& a, const Vec& b) {
  Elem acc = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return acc;
}

void normalize_first_nonzero(const Field& F, std::span<Elem> v) {
  for (Elem e : v) {
    if (!e.is_zero()) {
      const Elem s = F.inv(e);
      for (Elem& x : v) x = F.mul(x, s);
      return;
    }
  }
  throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
}

RankCertificate row_reduce(const Field& F, const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  Matrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = R;
    for (std::size_t r = row; r < R; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == R) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < C; ++c) std::swap(a.at(piv, c), a.at(row, c));
    }
    const Elem s = F.inv(a.at(row, col));
    for (std::size_t c = 0; c < C; ++c) a.at(row, c) = F.mul(a.at(row, c), s);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const Elem f = a.at(r, col);
      for (std::size_t c = 0; c < C; ++c) a.at(r, c) = F.sub(a.at(r, c), F.mul(f, a.at(row, c)));
    }
    pivot_cols.push_back(col);
    ++row;
  }

  RankCertificate cert;
  cert.rows = R;
  cert.cols = C;
  cert.rank = pivot_cols.size();
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    Vec v(C, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = F.neg(a.at(i, free));
    normalize_first_nonzero(F, v);
    cert.nullspace.push_back(std::move(v));
  }

  for (const auto& v : cert.nullspace) {
    for (std::size_t r = 0; r < R; ++r) {
      Elem acc = F.zero();
      for (std::size_t c = 0; c < C; ++c) acc = F.add(acc, F.mul(m.at(r, c), v[c]));
      if (!acc.is_zero()) throw Error(ErrorCode::TheoremViolated, "null vector fails to annihilate a row");
    }
  }
  return cert;
}

std::optional<Vec> solve(const Field& F, const Matrix& a, const Vec& b) {
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!aug.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n) return std::nullopt;
    for (std::size_t c = 0; c <= n; ++c) std::swap(aug.at(piv, c), aug.at(col, c));
    const Elem s = F.inv(aug.at(col, col));
    for (std::size_t c = 0; c <= n; ++c) aug.at(col, c) = F.mul(aug.at(col, c), s);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug.at(r, col).is_zero()) continue;
      const Elem f = aug.at(r, col);
      for (std::size_t c = 0; c <= n; ++c) aug.at(r, c) = F.sub(aug.at(r, c), F.mul(f, aug.at(col, c)));
    }
  }
  Vec x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug.at(r, n);
  return x;
}

Mat3 mat3_identity(const Field& F) {
  Mat3 m{};
  for (auto& row : m) row.fill(F.zero());
  for (int i = 0; i < 3; ++i) m[i][i] = F.one();
  return m;
}

Mat3 mat3_mul(const Field& F, const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Elem acc = F.zero();
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
      m[i][j] = acc;
    }
  }
  return m;
}

Vec3 mat3_apply(const Field& F, const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) {
    Elem acc = F.zero();
    for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(m[i][k], v[k]));
    r[i] = acc;
  }
  return r;
}

Vec3 mat3_apply_row(const Field& F, const Vec3& v, const Mat3& m) {
  Vec3 r{};
  for (int j = 0; j < 3; ++j) {
    Elem acc = F.zero();
    for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(v[k], m[k][j]));
    r[j] = acc;
  }
  return r;
}

Elem mat3_det(const Field& F, const Mat3& m) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(m[r0][c0], m[r1][c1]), F.mul(m[r0][c1], m[r1][c0]));
  };
  Elem d = F.mul(m[0][0], minor(1, 2, 1, 2));
  d = F.sub(d, F.mul(m[0][1], minor(1, 2, 0, 2)));
  d = F.add(d, F.mul(m[0][2], minor(1, 2, 0, 1)));
  return d;
}

std::optional<Mat3> mat3_inverse(const Field& F, const Mat3& m) {
  const Elem d = mat3_det(F, m);
  if (d.is_zero()) return std::nullopt;
  const Elem di = F.inv(d);
  Mat3 inv{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Elem cof = F.sub(F.mul(m[r0][c0], m[r1][c1]), F.mul(m[r0][c1], m[r1][c0]));
      inv[i][j] = F.mul(cof, di);
    }
  }
  return inv;
}

Mat3 mat3_normalize(const Field& F, Mat3 m) {
  std::span<Elem> flat(&m[0][0], 9);
  normalize_first_nonzero(F, flat);
  return m;
}

bool mat3_is_scalar(const Field& /*F*/, const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && !m[i][j].is_zero()) return false;
    }
  }
  return !m[0][0].is_zero() && m[0][0] == m[1][1] && m[1][1] == m[2][2];
}

Mat3 mat3_from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    m[i][0] = c0[i];
    m[i][1] = c1[i];
    m[i][2] = c2[i];
  }
  return m;
}

Vec3 cross(const Field& F, const Vec3& a, const Vec3& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Elem dot3(const Field& F, const Vec3& a, const Vec3& b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

}  // namespace tnet
