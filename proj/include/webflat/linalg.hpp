#pragma once

#include <array>

#include "webflat/cyclotomic.hpp"
#include "webflat/mpoly.hpp"

namespace webflat {

template <typename T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = T(i == j ? 1 : 0);
    return r;
  }

  const std::array<T, 3>& operator[](int i) const { return m[static_cast<size_t>(i)]; }
  std::array<T, 3>& operator[](int i) { return m[static_cast<size_t>(i)]; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T acc = m[i][0] * o.m[0][j];
        acc += m[i][1] * o.m[1][j];
        acc += m[i][2] * o.m[2][j];
        r.m[i][j] = acc;
      }
    return r;
  }

  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
};

using Mat3F = Mat3<FieldElement>;
using Mat3P = Mat3<MPoly>;

inline Mat3F mat3f_inverse(const Mat3F& a) {
  FieldElement d = a.det();
  if (d.is_zero()) fail("SingularMatrix", "3x3 matrix is singular");
  FieldElement inv = d.inverse();
  Mat3F r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // adjugate: note transpose
      int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r.m[i][j] = (a.m[i1][j1] * a.m[i2][j2] - a.m[i1][j2] * a.m[i2][j1]) * inv;
    }
  return r;
}

inline Mat3P mat3_to_poly(const Mat3F& a) {
  Mat3P r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = MPoly(a.m[i][j]);
  return r;
}

}  // namespace webflat
