#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "coreflect/error.hpp"
#include "coreflect/field.hpp"

namespace coreflect {

/// Dense row-major matrix over a Field. Rational and prime-field matrices use
/// separate native storage; the element type never leaks through the API.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  static Mat fromInts(const Field& f, std::size_t rows, std::size_t cols,
                      std::initializer_list<long long> entries);
  static Mat fromRows(const Field& f, const std::vector<std::vector<Scalar>>& rows,
                      std::size_t cols = 0);
  /// Builds a column vector.
  static Mat column(const Field& f, const std::vector<Scalar>& entries);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  bool entryIsZero(std::size_t i, std::size_t j) const;
  bool isZero() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat selectColumns(std::span<const std::size_t> cols) const;
  Mat selectRows(std::span<const std::size_t> rows) const;
  /// Copies `src` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Mat& src);

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat blockDiag(const Field& f, std::span<const Mat> blocks);

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<mpq_class>& qdata() noexcept { return q_; }
  const std::vector<mpq_class>& qdata() const noexcept { return q_; }
  std::vector<std::uint32_t>& rdata() noexcept { return r_; }
  const std::vector<std::uint32_t>& rdata() const noexcept { return r_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint32_t> r_;
};

namespace detail {

inline std::vector<mpq_class>& storage(Mat& m, const QOps&) { return m.qdata(); }
inline const std::vector<mpq_class>& storage(const Mat& m, const QOps&) { return m.qdata(); }
inline std::vector<std::uint32_t>& storage(Mat& m, const FpOps&) { return m.rdata(); }
inline const std::vector<std::uint32_t>& storage(const Mat& m, const FpOps&) {
  return m.rdata();
}

/// Invokes fn with the arithmetic policy matching the field.
template <class Fn>
decltype(auto) withOps(const Field& f, Fn&& fn) {
  if (f.isRationals()) return fn(QOps{});
  return fn(FpOps{f.characteristic()});
}

}  // namespace detail

void requireSameField(const Mat& a, const Mat& b);

}  // namespace coreflect
