#include "g2s6/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace g2s6 {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::vector<std::vector<std::size_t>>& subsets(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, k});
  if (!inserted) return it->second;
  auto& out = it->second;
  out.resize(binomial(n, k));
  // Colex order: enumerate lexicographically, then place by rank.
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out[subset_rank(cur)] = cur;
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(std::span<const std::size_t> sorted) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) r += binomial(sorted[j], j + 1);
  return r;
}

namespace {

// Sort in place and return the permutation sign; 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

template <Scalar S>
CMatrix<S> multiply_values(const CMatrix<S>& a, const CMatrix<S>& b) {
  if (a.rows() == 1 && a.cols() == 1) return a(0, 0) * b;
  if (b.rows() == 1 && b.cols() == 1) return a * b(0, 0);
  return a * b;
}

std::pair<std::size_t, std::size_t> product_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
  if (ar == 1 && ac == 1) return {br, bc};
  if (br == 1 && bc == 1) return {ar, ac};
  if (ac != br) {
    throw DomainError("wedge: value shapes " + std::to_string(ar) + "x" + std::to_string(ac) + " and " +
                      std::to_string(br) + "x" + std::to_string(bc) + " are not composable");
  }
  return {ar, bc};
}

// Submatrix det(m[rows, cols]).
template <Scalar S>
S minor_det(const CMatrix<S>& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return S(1);
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  CMatrix<S> sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return det(sub);
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiForm

template <Scalar S>
MultiForm<S>::MultiForm(std::size_t dim, std::size_t degree, std::size_t value_rows, std::size_t value_cols)
    : dim_(dim),
      degree_(degree),
      value_rows_(value_rows),
      value_cols_(value_cols),
      coeffs_(binomial(dim, degree), CMatrix<S>(value_rows, value_cols)) {}

template <Scalar S>
MultiForm<S> MultiForm<S>::constant(std::size_t dim, const CMatrix<S>& value) {
  MultiForm f(dim, 0, value.rows(), value.cols());
  f.coeffs_[0] = value;
  return f;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::one_form(std::size_t dim, const std::vector<CMatrix<S>>& values) {
  if (values.size() != dim) throw DomainError("MultiForm::one_form: need one value per basis vector");
  MultiForm f(dim, 1, values.empty() ? 1 : values[0].rows(), values.empty() ? 1 : values[0].cols());
  for (std::size_t j = 0; j < dim; ++j) f.set_coefficient(j, values[j]);
  return f;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::from_covectors(const CMatrix<S>& rows) {
  MultiForm f(rows.cols(), 1, rows.rows(), 1);
  for (std::size_t j = 0; j < rows.cols(); ++j) f.coeffs_[j] = rows.col(j);
  return f;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::from_antisymmetric(const CMatrix<S>& m) {
  if (!m.is_square()) throw DomainError("MultiForm::from_antisymmetric: square matrix required");
  if constexpr (is_exact_v<S>) {
    if (!(m.transpose() == -m)) throw DomainError("MultiForm::from_antisymmetric: matrix is not antisymmetric");
  } else {
    if (g2s6::max_abs(CMatrix<S>(m.transpose() + m)) > kDefaultTolerances.identity) {
      throw DomainError("MultiForm::from_antisymmetric: matrix is not antisymmetric");
    }
  }
  MultiForm f(m.rows(), 2);
  for (std::size_t r = 0; r < f.coeffs_.size(); ++r) {
    const auto& idx = subsets(m.rows(), 2)[r];
    f.coeffs_[r](0, 0) = m(idx[0], idx[1]);
  }
  return f;
}

template <Scalar S>
const CMatrix<S>& MultiForm<S>::coefficient(std::span<const std::size_t> sorted) const {
  if (sorted.size() != degree_) throw DomainError("MultiForm::coefficient: wrong number of indices");
  return coeffs_[subset_rank(sorted)];
}

template <Scalar S>
void MultiForm<S>::set_coefficient(std::size_t rank, CMatrix<S> value) {
  if (value.rows() != value_rows_ || value.cols() != value_cols_) {
    throw DomainError("MultiForm::set_coefficient: value shape " + value.shape() + " does not match form");
  }
  coeffs_.at(rank) = std::move(value);
}

template <Scalar S>
void MultiForm<S>::set_coefficient(std::span<const std::size_t> sorted, CMatrix<S> value) {
  if (sorted.size() != degree_) throw DomainError("MultiForm::set_coefficient: wrong number of indices");
  set_coefficient(subset_rank(sorted), std::move(value));
}

template <Scalar S>
CMatrix<S> MultiForm<S>::on_basis(std::span<const std::size_t> indices) const {
  if (indices.size() != degree_) throw DomainError("MultiForm::on_basis: wrong number of arguments");
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  for (std::size_t i : idx)
    if (i >= dim_) throw DomainError("MultiForm::on_basis: basis index out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0) return CMatrix<S>(value_rows_, value_cols_);
  const CMatrix<S>& c = coeffs_[subset_rank(idx)];
  return sign > 0 ? c : -c;
}

template <Scalar S>
CMatrix<S> MultiForm<S>::evaluate(std::span<const CMatrix<S>> vectors) const {
  if (vectors.size() != degree_) throw DomainError("MultiForm::evaluate: wrong number of arguments");
  CMatrix<S> v(dim_, degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    if (vectors[j].rows() != dim_ || vectors[j].cols() != 1) {
      throw DomainError("MultiForm::evaluate: argument has shape " + vectors[j].shape());
    }
    for (std::size_t i = 0; i < dim_; ++i) v(i, j) = vectors[j][i];
  }
  std::vector<std::size_t> all_cols(degree_);
  for (std::size_t j = 0; j < degree_; ++j) all_cols[j] = j;
  CMatrix<S> out(value_rows_, value_cols_);
  const auto& subs = subsets(dim_, degree_);
  for (std::size_t r = 0; r < subs.size(); ++r) {
    if (is_zero_matrix(coeffs_[r])) continue;
    const S m = minor_det(v, subs[r], all_cols);
    if (is_zero(m)) continue;
    out += coeffs_[r] * m;
  }
  return out;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::component(std::size_t i, std::size_t j) const {
  if (i >= value_rows_ || j >= value_cols_) throw DomainError("MultiForm::component: index out of range");
  MultiForm f(dim_, degree_);
  for (std::size_t r = 0; r < coeffs_.size(); ++r) f.coeffs_[r](0, 0) = coeffs_[r](i, j);
  return f;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::conjugate() const {
  MultiForm f = *this;
  for (auto& c : f.coeffs_) c = c.conjugate();
  return f;
}

template <Scalar S>
MultiForm<S> MultiForm<S>::transpose_values() const {
  MultiForm f(dim_, degree_, value_cols_, value_rows_);
  for (std::size_t r = 0; r < coeffs_.size(); ++r) f.coeffs_[r] = coeffs_[r].transpose();
  return f;
}

template <Scalar S>
double MultiForm<S>::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, g2s6::max_abs(c));
  return m;
}

template <Scalar S>
bool MultiForm<S>::is_real_valued(double tol) const {
  for (const auto& c : coeffs_)
    for (const auto& e : c.data()) {
      if constexpr (is_exact_v<S>) {
        if (!e.is_real()) return false;
      } else {
        if (std::abs(e.imag()) > tol) return false;
      }
    }
  return true;
}

template <Scalar S>
void MultiForm<S>::require_compatible(const MultiForm& o, const char* op) const {
  if (dim_ != o.dim_ || degree_ != o.degree_ || value_rows_ != o.value_rows_ || value_cols_ != o.value_cols_) {
    throw DomainError(std::string("MultiForm: incompatible operands for ") + op);
  }
}

template <Scalar S>
MultiForm<S>& MultiForm<S>::operator+=(const MultiForm& o) {
  require_compatible(o, "+");
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
  return *this;
}

template <Scalar S>
MultiForm<S>& MultiForm<S>::operator-=(const MultiForm& o) {
  require_compatible(o, "-");
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= o.coeffs_[r];
  return *this;
}

template <Scalar S>
MultiForm<S>& MultiForm<S>::operator*=(const S& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Products and derivatives

template <Scalar S>
MultiForm<S> wedge(const MultiForm<S>& a, const MultiForm<S>& b) {
  if (a.dim() != b.dim()) throw DomainError("wedge: forms live on different spaces");
  const auto [rows, cols] = product_shape(a.value_rows(), a.value_cols(), b.value_rows(), b.value_cols());
  const std::size_t k = a.degree();
  const std::size_t l = b.degree();
  const std::size_t n = a.dim();
  MultiForm<S> out(n, k + l, rows, cols);
  if (k + l > n) return out;

  // Shuffles: positions (within the k+l tuple) that go to a, with signs.
  const auto& positions = subsets(k + l, k);
  std::vector<int> signs(positions.size());
  std::vector<std::vector<std::size_t>> complements(positions.size());
  for (std::size_t s = 0; s < positions.size(); ++s) {
    std::size_t inversions = 0;
    for (std::size_t j = 0; j < k; ++j) inversions += positions[s][j] - j;
    signs[s] = inversions % 2 == 0 ? 1 : -1;
    std::vector<bool> used(k + l, false);
    for (std::size_t p : positions[s]) used[p] = true;
    for (std::size_t p = 0; p < k + l; ++p)
      if (!used[p]) complements[s].push_back(p);
  }

  const auto& target = subsets(n, k + l);
  std::vector<std::size_t> ia(k);
  std::vector<std::size_t> ib(l);
  for (std::size_t r = 0; r < target.size(); ++r) {
    CMatrix<S> acc(rows, cols);
    for (std::size_t s = 0; s < positions.size(); ++s) {
      for (std::size_t j = 0; j < k; ++j) ia[j] = target[r][positions[s][j]];
      for (std::size_t j = 0; j < l; ++j) ib[j] = target[r][complements[s][j]];
      const CMatrix<S>& va = a.coefficient(ia);
      if (is_zero_matrix(va)) continue;
      const CMatrix<S>& vb = b.coefficient(ib);
      if (is_zero_matrix(vb)) continue;
      if (signs[s] > 0) {
        acc += multiply_values(va, vb);
      } else {
        acc -= multiply_values(va, vb);
      }
    }
    out.set_coefficient(r, std::move(acc));
  }
  return out;
}

template <Scalar S>
MultiForm<S> multiply(const CMatrix<S>& m, const MultiForm<S>& a) {
  return wedge(MultiForm<S>::constant(a.dim(), m), a);
}

template <Scalar S>
StructureConstants<S>::StructureConstants(std::size_t dim,
                                          const std::function<CMatrix<S>(std::size_t, std::size_t)>& bracket)
    : dim_(dim), table_(dim * dim * dim, S(0)) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const CMatrix<S> c = bracket(i, j);
      if (c.rows() != dim || c.cols() != 1) throw DomainError("StructureConstants: bracket returned " + c.shape());
      for (std::size_t m = 0; m < dim; ++m) table_[(i * dim + j) * dim + m] = c[m];
    }
}

template <Scalar S>
CMatrix<S> StructureConstants<S>::bracket(const CMatrix<S>& x, const CMatrix<S>& y) const {
  if (x.rows() != dim_ || y.rows() != dim_) throw DomainError("StructureConstants::bracket: dimension mismatch");
  CMatrix<S> out(dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const S xy = x[i] * y[j];
      for (std::size_t m = 0; m < dim_; ++m) out[m] += xy * (*this)(i, j, m);
    }
  }
  return out;
}

template <Scalar S>
MultiForm<S> left_invariant_d(const MultiForm<S>& a, const StructureConstants<S>& bracket) {
  if (bracket.dim() == 0) throw DomainError("left_invariant_d: no bracket supplied");
  if (bracket.dim() != a.dim()) throw DomainError("left_invariant_d: bracket dimension does not match the form");
  const std::size_t n = a.dim();
  const std::size_t k = a.degree();
  MultiForm<S> out(n, k + 1, a.value_rows(), a.value_cols());
  if (k == 0 || k + 1 > n) return out;

  const auto& target = subsets(n, k + 1);
  std::vector<std::size_t> args(k);
  for (std::size_t r = 0; r < target.size(); ++r) {
    const auto& idx = target[r];
    CMatrix<S> acc(a.value_rows(), a.value_cols());
    for (std::size_t p = 0; p < k + 1; ++p)
      for (std::size_t q = p + 1; q < k + 1; ++q) {
        // Remaining arguments, in order, after the bracket slot.
        std::size_t w = 1;
        for (std::size_t t = 0; t < k + 1; ++t)
          if (t != p && t != q) args[w++] = idx[t];
        const bool negative = (p + q) % 2 == 1;
        for (std::size_t m = 0; m < n; ++m) {
          const S& c = bracket(idx[p], idx[q], m);
          if (is_zero(c)) continue;
          args[0] = m;
          CMatrix<S> v = a.on_basis(args);
          if (is_zero_matrix(v)) continue;
          v *= c;
          if (negative) {
            acc -= v;
          } else {
            acc += v;
          }
        }
      }
    out.set_coefficient(r, std::move(acc));
  }
  return out;
}

template <Scalar S>
MultiForm<S> pullback(const MultiForm<S>& a, const CMatrix<S>& linear_map) {
  if (linear_map.rows() != a.dim()) throw DomainError("pullback: map target dimension does not match the form");
  const std::size_t new_dim = linear_map.cols();
  const std::size_t k = a.degree();
  MultiForm<S> out(new_dim, k, a.value_rows(), a.value_cols());
  if (k == 0) {
    out.set_coefficient(0, a.coefficient(std::size_t{0}));
    return out;
  }
  const auto& src = subsets(a.dim(), k);
  const auto& dst = subsets(new_dim, k);
  for (std::size_t rj = 0; rj < dst.size(); ++rj) {
    CMatrix<S> acc(a.value_rows(), a.value_cols());
    for (std::size_t ri = 0; ri < src.size(); ++ri) {
      const CMatrix<S>& c = a.coefficient(ri);
      if (is_zero_matrix(c)) continue;
      const S m = minor_det(linear_map, src[ri], dst[rj]);
      if (is_zero(m)) continue;
      acc += c * m;
    }
    out.set_coefficient(rj, std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splittings and types

template <Scalar S>
Splitting<S> Splitting<S>::from_vectors(const CMatrix<S>& holomorphic) {
  const std::size_t two_n = holomorphic.rows();
  const std::size_t n = holomorphic.cols();
  if (two_n != 2 * n || n == 0) throw DomainError("Splitting: expected a 2n x n matrix, got " + holomorphic.shape());
  CMatrix<S> basis(two_n, two_n);
  basis.set_block(0, 0, holomorphic);
  basis.set_block(0, n, holomorphic.conjugate());
  if (rank(basis) != two_n) throw DomainError("Splitting: subspaces are not complementary");
  return Splitting(n, basis, inverse(basis));
}

template <Scalar S>
Splitting<S> Splitting<S>::from_subspaces(const CMatrix<S>& holomorphic, const CMatrix<S>& antiholomorphic) {
  if (holomorphic.rows() != antiholomorphic.rows() || holomorphic.cols() != antiholomorphic.cols()) {
    throw DomainError("Splitting: subspace shapes differ");
  }
  const std::size_t n = holomorphic.cols();
  CMatrix<S> both(holomorphic.rows(), 2 * n);
  both.set_block(0, 0, holomorphic.conjugate());
  both.set_block(0, n, antiholomorphic);
  if (rank(antiholomorphic) != n || rank(both) != n) {
    throw DomainError("Splitting: the (0,1) subspace is not the conjugate of the (1,0) subspace");
  }
  return from_vectors(holomorphic);
}

template <Scalar S>
Splitting<S> Splitting<S>::from_coframe(const CMatrix<S>& covectors) {
  const std::size_t n = covectors.rows();
  if (covectors.cols() != 2 * n || n == 0) throw DomainError("Splitting: expected an n x 2n coframe, got " + covectors.shape());
  CMatrix<S> coframe(2 * n, 2 * n);
  coframe.set_block(0, 0, covectors);
  coframe.set_block(n, 0, covectors.conjugate());
  if (rank(coframe) != 2 * n) throw DomainError("Splitting: coframe and its conjugate are not a basis");
  return Splitting(n, inverse(coframe), coframe);
}

template <Scalar S>
MultiForm<S> type_project(const MultiForm<S>& a, const Splitting<S>& split, std::size_t p, std::size_t q) {
  if (p + q != a.degree()) throw DomainError("type_project: p + q must equal the degree");
  if (a.dim() != split.real_dim()) throw DomainError("type_project: splitting dimension does not match the form");
  const std::size_t n = split.complex_dim();
  const std::size_t k = a.degree();
  const CMatrix<S>& z = split.vector_basis();
  const CMatrix<S>& w = split.coframe();

  MultiForm<S> out(a.dim(), k, a.value_rows(), a.value_cols());
  const auto& tuples = subsets(2 * n, k);
  std::vector<std::size_t> all(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) all[i] = i;

  for (const auto& I : tuples) {
    const auto holo = static_cast<std::size_t>(std::count_if(I.begin(), I.end(), [n](std::size_t i) { return i < n; }));
    if (holo != p) continue;
    // Expansion coefficient a(z_I) of the coframe wedge w^I.
    std::vector<CMatrix<S>> args;
    args.reserve(k);
    for (std::size_t i : I) args.push_back(z.col(i));
    const CMatrix<S> coeff = a.evaluate(args);
    if (is_zero_matrix(coeff)) continue;
    for (std::size_t rj = 0; rj < tuples.size(); ++rj) {
      const S m = minor_det(w, I, tuples[rj]);
      if (is_zero(m)) continue;
      CMatrix<S> c = out.coefficient(rj);
      c += coeff * m;
      out.set_coefficient(rj, std::move(c));
    }
  }
  return out;
}

template <Scalar S>
CMatrix<S> from_splitting(const Splitting<S>& split, double tol) {
  const std::size_t n = split.complex_dim();
  CMatrix<S> eig(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    eig(i, i) = imag_unit<S>();
    eig(n + i, n + i) = -imag_unit<S>();
  }
  const CMatrix<S> j = split.vector_basis() * eig * split.coframe();
  CMatrix<S> real(2 * n, 2 * n);
  for (std::size_t k = 0; k < j.size(); ++k) {
    if constexpr (is_exact_v<S>) {
      if (!j[k].is_real()) throw ConsistencyError("from_splitting: J is not real; splitting is not conjugate-symmetric");
    } else {
      if (std::abs(j[k].imag()) > tol) throw ConsistencyError("from_splitting: J is not real within tolerance");
    }
    real[k] = real_part(j[k]);
  }
  return real;
}

template <Scalar S>
MultiForm<S> omega_from_hermitian(const CMatrix<S>& h, const Splitting<S>& split, double tol) {
  const std::size_t n = split.complex_dim();
  if (h.rows() != n || h.cols() != n) throw DomainError("omega_from_hermitian: h must be n x n");
  if (!is_hermitian(h, tol)) throw DomainError("omega_from_hermitian: h is not Hermitian");
  const CMatrix<S> zeta = split.holomorphic_covectors();
  const CMatrix<S> zeta_bar = zeta.conjugate();
  const std::size_t dim = 2 * n;
  MultiForm<S> out(dim, 2);
  const S i_unit = imag_unit<S>();
  const auto& pairs = subsets(dim, 2);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const std::size_t x = pairs[r][0];
    const std::size_t y = pairs[r][1];
    S acc(0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (is_zero(h(a, b))) continue;
        acc += h(a, b) * (zeta(a, x) * zeta_bar(b, y) - zeta(a, y) * zeta_bar(b, x));
      }
    CMatrix<S> v(1, 1);
    v(0, 0) = i_unit * acc;
    out.set_coefficient(r, std::move(v));
  }
  return out;
}

#define G2S6_INSTANTIATE_EXTERIOR(S)                                                                   \
  template class MultiForm<S>;                                                                         \
  template class StructureConstants<S>;                                                                \
  template class Splitting<S>;                                                                         \
  template MultiForm<S> wedge<S>(const MultiForm<S>&, const MultiForm<S>&);                            \
  template MultiForm<S> multiply<S>(const CMatrix<S>&, const MultiForm<S>&);                           \
  template MultiForm<S> left_invariant_d<S>(const MultiForm<S>&, const StructureConstants<S>&);        \
  template MultiForm<S> pullback<S>(const MultiForm<S>&, const CMatrix<S>&);                           \
  template MultiForm<S> type_project<S>(const MultiForm<S>&, const Splitting<S>&, std::size_t, std::size_t); \
  template CMatrix<S> from_splitting<S>(const Splitting<S>&, double);                                  \
  template MultiForm<S> omega_from_hermitian<S>(const CMatrix<S>&, const Splitting<S>&, double);

G2S6_INSTANTIATE_EXTERIOR(Exact)
G2S6_INSTANTIATE_EXTERIOR(Float)

#undef G2S6_INSTANTIATE_EXTERIOR

}  // namespace g2s6
