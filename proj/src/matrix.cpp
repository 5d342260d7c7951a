#include "coreflect/matrix.hpp"

#include <string>

namespace coreflect {

using detail::storage;
using detail::withOps;

namespace {

std::string shape(const Mat& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

void requireSameField(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field()))
    throw Error("matrix field mismatch: " + a.field().name() + " vs " + b.field().name());
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.isRationals())
    q_.assign(rows * cols, mpq_class(0));
  else
    r_.assign(rows * cols, 0);
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

Mat Mat::fromInts(const Field& f, std::size_t rows, std::size_t cols,
                  std::initializer_list<long long> entries) {
  if (entries.size() != rows * cols)
    throw DimensionMismatch("fromInts: expected " + std::to_string(rows * cols) + " entries");
  Mat m(f, rows, cols);
  std::size_t k = 0;
  for (long long v : entries) {
    m.set(k / cols, k % cols, Scalar::fromInt(f, v));
    ++k;
  }
  return m;
}

Mat Mat::fromRows(const Field& f, const std::vector<std::vector<Scalar>>& rows,
                  std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("fromRows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::column(const Field& f, const std::vector<Scalar>& entries) {
  Mat m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("Mat::at out of range");
  if (field_.isRationals()) return Scalar::fromRational(field_, q_[i * cols_ + j]);
  return Scalar::fromResidue(field_, r_[i * cols_ + j]);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("Mat::set out of range");
  if (!(s.field() == field_)) throw Error("Mat::set: scalar from a different field");
  if (field_.isRationals())
    q_[i * cols_ + j] = s.rational();
  else
    r_[i * cols_ + j] = s.residue();
}

bool Mat::entryIsZero(std::size_t i, std::size_t j) const {
  return field_.isRationals() ? sgn(q_[i * cols_ + j]) == 0 : r_[i * cols_ + j] == 0;
}

bool Mat::isZero() const {
  if (field_.isRationals()) {
    for (const auto& x : q_)
      if (sgn(x) != 0) return false;
    return true;
  }
  for (auto x : r_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  requireSameField(*this, o);
  if (cols_ != o.rows_)
    throw DimensionMismatch("product of " + shape(*this) + " and " + shape(o));
  Mat out(field_, rows_, o.cols_);
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(*this, ops);
    const auto& b = storage(o, ops);
    auto& c = storage(out, ops);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& aik = a[i * cols_ + k];
        if (ops.isZero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const auto& bkj = b[k * o.cols_ + j];
          if (!ops.isZero(bkj)) ops.addMul(c[i * o.cols_ + j], aik, bkj);
        }
      }
  });
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  requireSameField(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("sum of " + shape(*this) + " and " + shape(o));
  Mat out = *this;
  withOps(field_, [&](const auto& ops) {
    auto& c = storage(out, ops);
    const auto& b = storage(o, ops);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = ops.add(c[k], b[k]);
  });
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat out = *this;
  withOps(field_, [&](const auto& ops) {
    for (auto& x : storage(out, ops)) x = ops.neg(x);
  });
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw Error("Mat::scaled: scalar from a different field");
  Mat out = *this;
  withOps(field_, [&](const auto& ops) {
    const auto v = ops.fromScalar(s);
    for (auto& x : storage(out, ops)) x = ops.mul(x, v);
  });
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(*this, ops);
    auto& c = storage(out, ops);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) c[j * rows_ + i] = a[i * cols_ + j];
  });
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Mat out(field_, nr, nc);
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(*this, ops);
    auto& c = storage(out, ops);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) c[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
  });
  return out;
}

Mat Mat::selectColumns(std::span<const std::size_t> cols) const {
  Mat out(field_, rows_, cols.size());
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(*this, ops);
    auto& c = storage(out, ops);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw DimensionMismatch("selectColumns out of range");
        c[i * cols.size() + j] = a[i * cols_ + cols[j]];
      }
  });
  return out;
}

Mat Mat::selectRows(std::span<const std::size_t> rows) const {
  Mat out(field_, rows.size(), cols_);
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(*this, ops);
    auto& c = storage(out, ops);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= rows_) throw DimensionMismatch("selectRows out of range");
      for (std::size_t j = 0; j < cols_; ++j) c[i * cols_ + j] = a[rows[i] * cols_ + j];
    }
  });
  return out;
}

void Mat::place(std::size_t r0, std::size_t c0, const Mat& src) {
  requireSameField(*this, src);
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
    throw DimensionMismatch("place out of range");
  withOps(field_, [&](const auto& ops) {
    const auto& a = storage(src, ops);
    auto& c = storage(*this, ops);
    for (std::size_t i = 0; i < src.rows_; ++i)
      for (std::size_t j = 0; j < src.cols_; ++j)
        c[(r0 + i) * cols_ + c0 + j] = a[i * src.cols_ + j];
  });
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  requireSameField(a, b);
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row mismatch");
  Mat out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.place(0, 0, a);
  out.place(0, a.cols_, b);
  return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  requireSameField(a, b);
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column mismatch");
  Mat out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.place(0, 0, a);
  out.place(a.rows_, 0, b);
  return out;
}

Mat Mat::blockDiag(const Field& f, std::span<const Mat> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    if (!(b.field_ == f)) throw Error("blockDiag: field mismatch");
    r += b.rows_;
    c += b.cols_;
  }
  Mat out(f, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.place(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.field_.isRationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace coreflect
