#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "rhoc/error.hpp"
#include "rhoc/partitions.hpp"

namespace rhoc::test {

inline Vector vec(const Field& f, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.push_back(f.from_int(x));
  return v;
}

inline Matrix mat(const Field& f, std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.push_back(vec(f, r));
  return Matrix::from_rows(f, cols, out);
}

inline Subspace span(const Field& f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  return Subspace::span_of(mat(f, n, rows));
}


inline Subspace line(const Field& f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v[i] = f.one();
  return Subspace::span_of(Matrix::from_rows(f, n, {v}));
}

inline bool all_zero(const Field& f, const Vector& v) {
  for (const auto& s : v)
    if (!f.is_zero(s)) return false;
  return true;
}

inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Unsupported;
}

}  // namespace rhoc::test
