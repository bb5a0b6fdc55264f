// Exact dense linear algebra over a field scalar: echelon forms, kernels,
// canonical subspaces, quotient spaces and Kronecker products.
//
// Every routine here is exact; the Scalar type must model a field with
// exact equality (whopf::Rational in practice).
#pragma once

#include "whopf/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace whopf {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

template <typename Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

/// Position of (i, j) inside u ⊗ v. The only place the convention lives.
constexpr Index tensor_index(Index i, Index j, Index dim_right) { return i * dim_right + j; }

template <typename Scalar>
VectorX<Scalar> unit_vector(Index n, Index i) {
  VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
  v(i) = Scalar(1);
  return v;
}

inline Vector basis_vector(Index n, Index i) { return unit_vector<Rational>(n, i); }

/// Reduced row-echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> form;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{MatrixX<Scalar>(input), {}};
  MatrixX<Scalar>& m = out.form;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

/// Unique reduced row-echelon form; zero rows stay at the bottom.
template <typename Derived>
MatrixX<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  return echelon(m).form;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return echelon(m).rank();
}

/// Subspace of Scalar^n stored by its canonical RREF basis (one row per
/// basis vector). Equal subspaces have identical basis matrices.
template <typename Scalar>
class BasicSubspace {
 public:
  using MatrixType = MatrixX<Scalar>;
  using VectorType = VectorX<Scalar>;

  BasicSubspace() : BasicSubspace(0) {}
  explicit BasicSubspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row span of `rows`.
  template <typename Derived>
  static BasicSubspace row_span(const Eigen::MatrixBase<Derived>& rows) {
    BasicSubspace s(rows.cols());
    auto e = echelon(rows);
    s.basis_ = e.form.topRows(e.rank());
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  /// Column span of `cols` (e.g. the image of a linear map).
  template <typename Derived>
  static BasicSubspace column_span(const Eigen::MatrixBase<Derived>& cols) {
    return row_span(cols.transpose());
  }

  static BasicSubspace span(Index ambient_dim, const std::vector<VectorType>& vectors) {
    MatrixType rows(static_cast<Index>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim) throw std::invalid_argument("span: vector length mismatch");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return row_span(rows);
  }

  static BasicSubspace full(Index n) { return row_span(MatrixType::Identity(n, n)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatrixType& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorType vector(Index i) const { return basis_.row(i).transpose(); }

  /// Basis vectors as columns (ambient_dim x dim).
  MatrixType basis_columns() const { return basis_.transpose(); }

  /// v minus its component along the pivot directions; zero iff v lies in the subspace.
  VectorType reduce(VectorType v) const {
    for (Index i = 0; i < dim(); ++i) {
      const Scalar f = v(pivots_[static_cast<std::size_t>(i)]);
      if (is_zero(f)) continue;
      for (Index j = 0; j < ambient_; ++j)
        if (!is_zero(basis_(i, j))) v(j) -= f * basis_(i, j);
    }
    return v;
  }

  bool contains(const VectorType& v) const { return is_zero_vector(reduce(v)); }

  bool contains(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates in the RREF basis: the entries at the pivot columns.
  VectorType coordinates(const VectorType& v) const {
    VectorType c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

  std::optional<VectorType> try_coordinates(const VectorType& v) const {
    if (!contains(v)) return std::nullopt;
    return coordinates(v);
  }

  VectorType from_coordinates(const VectorType& c) const {
    VectorType v = VectorType::Zero(ambient_);
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(c(i))) v += c(i) * vector(i);
    return v;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

  friend BasicSubspace operator+(const BasicSubspace& a, const BasicSubspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    MatrixType rows(a.dim() + b.dim(), a.ambient_);
    rows << a.basis_, b.basis_;
    return row_span(rows);
  }

 private:
  Index ambient_;
  MatrixType basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

/// {v : m v = 0}.
template <typename Derived>
BasicSubspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> rows(n - e.rank(), n);
  rows.setZero();
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    rows(k, f) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) rows(k, e.pivots[static_cast<std::size_t>(i)]) = -e.form(i, f);
    ++k;
  }
  return BasicSubspace<Scalar>::row_span(rows);
}

template <typename Scalar>
BasicSubspace<Scalar> intersect(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return BasicSubspace<Scalar>(a.ambient_dim());
  // x A = y B  <=>  [A; -B]^T [x; y] = 0
  MatrixX<Scalar> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), -b.basis();
  const auto rel = kernel(stacked.transpose());
  MatrixX<Scalar> rows = rel.basis().leftCols(a.dim()) * a.basis();
  return BasicSubspace<Scalar>::row_span(rows);
}

/// Scalar^n modulo a subspace. Representatives of the quotient basis are the
/// ambient unit vectors at the non-pivot columns of the relation basis.
template <typename Scalar>
class BasicQuotientSpace {
 public:
  using MatrixType = MatrixX<Scalar>;
  using VectorType = VectorX<Scalar>;

  BasicQuotientSpace() = default;
  explicit BasicQuotientSpace(BasicSubspace<Scalar> relations) : rel_(std::move(relations)) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(rel_.ambient_dim()), false);
    for (Index p : rel_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    for (Index j = 0; j < rel_.ambient_dim(); ++j)
      if (!is_pivot[static_cast<std::size_t>(j)]) free_.push_back(j);
  }

  Index ambient_dim() const { return rel_.ambient_dim(); }
  Index dim() const { return static_cast<Index>(free_.size()); }
  const BasicSubspace<Scalar>& relations() const { return rel_; }
  /// Ambient index represented by quotient coordinate i.
  const std::vector<Index>& representatives() const { return free_; }

  VectorType project(const VectorType& w) const {
    const VectorType r = rel_.reduce(w);
    VectorType q(dim());
    for (Index i = 0; i < dim(); ++i) q(i) = r(free_[static_cast<std::size_t>(i)]);
    return q;
  }

  VectorType section(const VectorType& q) const {
    VectorType w = VectorType::Zero(ambient_dim());
    for (Index i = 0; i < dim(); ++i) w(free_[static_cast<std::size_t>(i)]) = q(i);
    return w;
  }

  MatrixType projection_matrix() const {
    MatrixType p(dim(), ambient_dim());
    for (Index j = 0; j < ambient_dim(); ++j) p.col(j) = project(unit_vector<Scalar>(ambient_dim(), j));
    return p;
  }

  MatrixType section_matrix() const {
    MatrixType s = MatrixType::Zero(ambient_dim(), dim());
    for (Index i = 0; i < dim(); ++i) s(free_[static_cast<std::size_t>(i)], i) = Scalar(1);
    return s;
  }

 private:
  BasicSubspace<Scalar> rel_;
  std::vector<Index> free_;
};

using QuotientSpace = BasicQuotientSpace<Rational>;

template <typename Scalar>
BasicQuotientSpace<Scalar> quotient(Index ambient_dim, const BasicSubspace<Scalar>& relations) {
  if (relations.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient: ambient mismatch");
  return BasicQuotientSpace<Scalar>(relations);
}

/// Kronecker product; for column vectors this is u ⊗ v with tensor_index().
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <typename DA, typename DB>
VectorX<typename DA::Scalar> tensor_vec(const Eigen::MatrixBase<DA>& u, const Eigen::MatrixBase<DB>& v) {
  return kron(u, v);
}

template <typename DA, typename DB>
MatrixX<typename DA::Scalar> tensor_map(const Eigen::MatrixBase<DA>& f, const Eigen::MatrixBase<DB>& g) {
  return kron(f, g);
}

/// Views x as a tensor [outer][f.cols()][inner] and applies f to the middle
/// factor, giving [outer][f.rows()][inner]. With f a multiplication table
/// (dim x dim^2) this multiplies two adjacent tensor factors together.
template <typename Scalar>
VectorX<Scalar> apply_block(const VectorX<Scalar>& x, Index outer, Index inner, const MatrixX<Scalar>& f) {
  const Index block = f.cols();
  if (x.size() != outer * block * inner) throw std::invalid_argument("apply_block: size mismatch");
  VectorX<Scalar> y = VectorX<Scalar>::Zero(outer * f.rows() * inner);
  for (Index idx = 0; idx < x.size(); ++idx) {
    if (is_zero(x(idx))) continue;
    const Index o = idx / (block * inner);
    const Index b = (idx / inner) % block;
    const Index in = idx % inner;
    for (Index r = 0; r < f.rows(); ++r)
      if (!is_zero(f(r, b))) y((o * f.rows() + r) * inner + in) += f(r, b) * x(idx);
  }
  return y;
}

/// Sparse-aware matrix-vector product.
template <typename Scalar>
VectorX<Scalar> apply(const MatrixX<Scalar>& f, const VectorX<Scalar>& x) {
  return apply_block(x, 1, 1, f);
}

/// Solves a x = b exactly; nullopt when inconsistent. Free variables are 0.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = echelon(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    const Index p = e.pivots[static_cast<std::size_t>(i)];
    if (p == a.cols()) return std::nullopt;
    x(p) = e.form(i, a.cols());
  }
  return x;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << m, MatrixX<Scalar>::Identity(n, n);
  const auto e = echelon(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  return MatrixX<Scalar>(e.form.rightCols(n));
}

/// The unique L with L * src = dst when the columns of `src` (generator
/// images in the source) determine such a map; nullopt when two generators
/// with a linear relation in `src` are sent to images violating it.
template <typename Scalar>
std::optional<MatrixX<Scalar>> linear_map_through(const MatrixX<Scalar>& src, const MatrixX<Scalar>& dst) {
  if (src.cols() != dst.cols()) throw std::invalid_argument("linear_map_through: generator count mismatch");
  const auto e = echelon(src);
  if (e.rank() != src.rows()) return std::nullopt;  // generators must span the source
  MatrixX<Scalar> s(src.rows(), e.rank());
  MatrixX<Scalar> d(dst.rows(), e.rank());
  for (Index i = 0; i < e.rank(); ++i) {
    s.col(i) = src.col(e.pivots[static_cast<std::size_t>(i)]);
    d.col(i) = dst.col(e.pivots[static_cast<std::size_t>(i)]);
  }
  const auto s_inv = inverse(s);
  if (!s_inv) return std::nullopt;
  MatrixX<Scalar> l = d * *s_inv;
  if (!(MatrixX<Scalar>(l * src) == dst)) return std::nullopt;
  return l;
}

}  // namespace whopf
