#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "g2s6/linalg.hpp"
#include "g2s6/matrix.hpp"

namespace g2s6 {

std::size_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing k-tuples over {0, ..., n-1}, in colex order
/// (the storage order of MultiForm coefficients).
const std::vector<std::vector<std::size_t>>& subsets(std::size_t n, std::size_t k);

/// Colex rank of a strictly increasing tuple.
std::size_t subset_rank(std::span<const std::size_t> sorted);

/// Alternating k-linear map on R^dim with values in m x n matrices over S
/// (scalars are 1 x 1, vectors m x 1).
///
/// Stored as one coefficient per increasing k-tuple I: the value on the
/// basis vectors (e_I). Wedge products use the shuffle sum with no 1/k!
/// normalization, so (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X) for 1-forms.
template <Scalar S>
class MultiForm {
 public:
  MultiForm() = default;
  /// Zero form.
  MultiForm(std::size_t dim, std::size_t degree, std::size_t value_rows = 1, std::size_t value_cols = 1);

  /// Constant 0-form.
  static MultiForm constant(std::size_t dim, const CMatrix<S>& value);
  /// 1-form from its values on the basis vectors.
  static MultiForm one_form(std::size_t dim, const std::vector<CMatrix<S>>& values);
  /// Vector-valued 1-form from an m x dim matrix of covectors (row k is component k).
  static MultiForm from_covectors(const CMatrix<S>& rows);
  /// Scalar 2-form with omega(e_i, e_j) = m(i, j); m must be antisymmetric.
  static MultiForm from_antisymmetric(const CMatrix<S>& m);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t value_rows() const { return value_rows_; }
  std::size_t value_cols() const { return value_cols_; }
  bool is_scalar_valued() const { return value_rows_ == 1 && value_cols_ == 1; }
  std::size_t coefficient_count() const { return coeffs_.size(); }

  /// Coefficient by colex rank / by increasing tuple.
  const CMatrix<S>& coefficient(std::size_t rank) const { return coeffs_[rank]; }
  const CMatrix<S>& coefficient(std::span<const std::size_t> sorted) const;
  void set_coefficient(std::size_t rank, CMatrix<S> value);
  void set_coefficient(std::span<const std::size_t> sorted, CMatrix<S> value);

  /// Value on basis vectors in any order: sign(perm) times the stored
  /// coefficient, zero on repeated indices.
  CMatrix<S> on_basis(std::span<const std::size_t> indices) const;
  CMatrix<S> on_basis(std::initializer_list<std::size_t> indices) const {
    return on_basis(std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  /// Value on arbitrary (possibly complex) coordinate vectors, each dim x 1.
  CMatrix<S> evaluate(std::span<const CMatrix<S>> vectors) const;
  CMatrix<S> evaluate(std::initializer_list<CMatrix<S>> vectors) const {
    return evaluate(std::span<const CMatrix<S>>(vectors.begin(), vectors.size()));
  }

  /// Scalar form of one value entry.
  MultiForm component(std::size_t i, std::size_t j = 0) const;
  MultiForm conjugate() const;
  MultiForm transpose_values() const;

  /// Largest coefficient entry magnitude.
  double max_abs() const;
  /// Scalar forms only: every coefficient real (exactly, or within tol).
  bool is_real_valued(double tol = 0.0) const;

  MultiForm& operator+=(const MultiForm& o);
  MultiForm& operator-=(const MultiForm& o);
  MultiForm& operator*=(const S& s);
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator-(MultiForm a) { return a *= S(-1); }
  friend MultiForm operator*(MultiForm a, const S& s) { return a *= s; }
  friend MultiForm operator*(const S& s, MultiForm a) { return a *= s; }
  friend bool operator==(const MultiForm& a, const MultiForm& b) = default;

 private:
  void require_compatible(const MultiForm& o, const char* op) const;

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::size_t value_rows_ = 1;
  std::size_t value_cols_ = 1;
  std::vector<CMatrix<S>> coeffs_;
};

template <Scalar S>
double max_abs_diff(const MultiForm<S>& a, const MultiForm<S>& b) {
  return (a - b).max_abs();
}

/// Shuffle-sum wedge; values combine by matrix multiplication (1 x 1 values act as scalars).
template <Scalar S>
MultiForm<S> wedge(const MultiForm<S>& a, const MultiForm<S>& b);

/// Constant matrix times a form: the wedge with a 0-form.
template <Scalar S>
MultiForm<S> multiply(const CMatrix<S>& m, const MultiForm<S>& a);

/// Bracket on the evaluation space, as structure constants:
/// [e_i, e_j] = sum_m c(i, j, m) e_m.
template <Scalar S>
class StructureConstants {
 public:
  StructureConstants() = default;
  /// bracket(i, j) returns the dim x 1 coordinates of [e_i, e_j].
  StructureConstants(std::size_t dim, const std::function<CMatrix<S>(std::size_t, std::size_t)>& bracket);

  std::size_t dim() const { return dim_; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t m) const { return table_[(i * dim_ + j) * dim_ + m]; }
  /// Bracket of coordinate vectors by bilinearity.
  CMatrix<S> bracket(const CMatrix<S>& x, const CMatrix<S>& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<S> table_;
};

/// Exterior derivative of a left-invariant form (Chevalley-Eilenberg):
/// (d a)(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0, .., ^X_i, .., ^X_j, .., X_k).
/// With this sign d(phi)(X, Y) = -phi([X, Y]). Throws DomainError if the
/// structure constants are missing or of the wrong dimension.
template <Scalar S>
MultiForm<S> left_invariant_d(const MultiForm<S>& a, const StructureConstants<S>& bracket);

/// Pullback along a linear map R^new -> R^old given as an old_dim x new_dim matrix.
template <Scalar S>
MultiForm<S> pullback(const MultiForm<S>& a, const CMatrix<S>& linear_map);

/// Splitting V_C = V^{1,0} (+) V^{0,1} of a complexified 2n-dimensional real space.
template <Scalar S>
class Splitting {
 public:
  /// From a 2n x n matrix whose columns span V^{1,0}; V^{0,1} is its conjugate.
  static Splitting from_vectors(const CMatrix<S>& holomorphic);
  /// From both subspaces; checks that the second is the conjugate of the first.
  static Splitting from_subspaces(const CMatrix<S>& holomorphic, const CMatrix<S>& antiholomorphic);
  /// From n (1,0)-covectors (rows of an n x 2n matrix), i.e. a coframe.
  static Splitting from_coframe(const CMatrix<S>& covectors);

  std::size_t complex_dim() const { return n_; }
  std::size_t real_dim() const { return 2 * n_; }
  /// Columns z_1..z_n, conj(z_1)..conj(z_n).
  const CMatrix<S>& vector_basis() const { return basis_; }
  /// Rows z^1..z^n, conj(z^1)..conj(z^n); the dual of vector_basis().
  const CMatrix<S>& coframe() const { return coframe_; }
  CMatrix<S> holomorphic_vectors() const { return basis_.block(0, 0, 2 * n_, n_); }
  CMatrix<S> holomorphic_covectors() const { return coframe_.block(0, 0, n_, 2 * n_); }

 private:
  Splitting(std::size_t n, CMatrix<S> basis, CMatrix<S> coframe)
      : n_(n), basis_(std::move(basis)), coframe_(std::move(coframe)) {}

  std::size_t n_ = 0;
  CMatrix<S> basis_;
  CMatrix<S> coframe_;
};

/// The (p,q)-component of a form on the 2n-dimensional space of the splitting.
template <Scalar S>
MultiForm<S> type_project(const MultiForm<S>& a, const Splitting<S>& split, std::size_t p, std::size_t q);

/// Real structure with the given (+i, -i) eigenspaces: J v = i v^{1,0} - i v^{0,1}.
template <Scalar S>
CMatrix<S> from_splitting(const Splitting<S>& split, double tol = kDefaultTolerances.identity);

/// omega = i h_{ab} z^a ^ conj(z^b) for the (1,0)-coframe z of the splitting.
template <Scalar S>
MultiForm<S> omega_from_hermitian(const CMatrix<S>& h, const Splitting<S>& split,
                                  double tol = kDefaultTolerances.identity);

}  // namespace g2s6
