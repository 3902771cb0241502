#pragma once

#include <cstddef>
#include <vector>

#include "g2s6/exterior.hpp"
#include "g2s6/linalg.hpp"
#include "g2s6/matrix.hpp"
#include "g2s6/random.hpp"

namespace g2s6 {

/// Real dimension of g2 and of its horizontal part {D = 0}.
inline constexpr std::size_t kAlgebraDim = 14;
inline constexpr std::size_t kHorizontalDim = 6;

/// Element of g2 given by a in C^3 and D in su(3). It embeds into C^{7x7} in
/// the basis (e1, F1, F2, F3, conj F1, conj F2, conj F3), F_k = (e_{2k} - i e_{2k+1}) / 2:
///
///     [   0     -i a^*   i a^t ]
///     [ -2i a     D     [conj a] ]
///     [ 2i conj a  [a]   conj D ]
template <Scalar S>
class G2AlgebraElem {
 public:
  G2AlgebraElem() : a_(3, 1), d_(3, 3) {}
  /// Throws DomainError unless D + D^* = 0 and tr D = 0 (exactly, or within tol).
  G2AlgebraElem(CMatrix<S> a, CMatrix<S> d, double tol = kDefaultTolerances.identity);

  static G2AlgebraElem horizontal(CMatrix<S> a) { return G2AlgebraElem(std::move(a), CMatrix<S>(3, 3)); }
  static G2AlgebraElem vertical(CMatrix<S> d) { return G2AlgebraElem(CMatrix<S>(3, 1), std::move(d)); }

  const CMatrix<S>& a() const { return a_; }
  const CMatrix<S>& d() const { return d_; }

  G2AlgebraElem& operator+=(const G2AlgebraElem& o) {
    a_ += o.a_;
    d_ += o.d_;
    return *this;
  }
  friend G2AlgebraElem operator+(G2AlgebraElem x, const G2AlgebraElem& y) { return x += y; }
  friend G2AlgebraElem operator-(const G2AlgebraElem& x, const G2AlgebraElem& y) {
    G2AlgebraElem r = x;
    r.a_ -= y.a_;
    r.d_ -= y.d_;
    return r;
  }
  friend G2AlgebraElem operator*(const S& s, G2AlgebraElem x) {
    x.a_ *= s;
    x.d_ *= s;
    return x;
  }
  friend bool operator==(const G2AlgebraElem& x, const G2AlgebraElem& y) { return x.a_ == y.a_ && x.d_ == y.d_; }

 private:
  CMatrix<S> a_;
  CMatrix<S> d_;
};

/// [a] = ((0, a3, -a2), (-a3, 0, a1), (a2, -a1, 0)).
template <Scalar S>
CMatrix<S> cross_matrix(const CMatrix<S>& a);

template <Scalar S>
CMatrix<S> embed_algebra(const G2AlgebraElem<S>& el);

template <Scalar S>
struct AlgebraProjection {
  G2AlgebraElem<S> element;
  /// max |X - embed(element)|; zero exactly when X lies in g2 (exact backend).
  double residual = 0.0;
};

/// Reads (a, D) off a 7x7 matrix; D is projected onto su(3) first.
template <Scalar S>
AlgebraProjection<S> project_algebra(const CMatrix<S>& x);

/// Matrix commutator followed by projection. Throws ConsistencyError if the
/// commutator leaves g2 (residual > 0 exact, > tol float).
template <Scalar S>
G2AlgebraElem<S> bracket(const G2AlgebraElem<S>& x, const G2AlgebraElem<S>& y,
                         double tol = kDefaultTolerances.identity);

/// Fixed real basis: indices 2k, 2k+1 are a = e_k, a = i e_k (D = 0);
/// indices 6..13 are, with a = 0,
///   i diag(1,-1,0), i diag(0,1,-1), E12 - E21, i(E12 + E21),
///   E13 - E31, i(E13 + E31), E23 - E32, i(E23 + E32).
template <Scalar S>
const std::vector<G2AlgebraElem<S>>& basis14();

/// Real coordinates (14 x 1) in basis14.
template <Scalar S>
CMatrix<S> coordinates(const G2AlgebraElem<S>& el);
template <Scalar S>
G2AlgebraElem<S> from_coordinates(const CMatrix<S>& c);

/// Structure constants of g2 in basis14.
template <Scalar S>
const StructureConstants<S>& g2_structure_constants();

/// ad_x in basis14 coordinates.
template <Scalar S>
CMatrix<S> ad_matrix(const G2AlgebraElem<S>& x);

/// trace(ad_x ad_y).
template <Scalar S>
S killing_form(const G2AlgebraElem<S>& x, const G2AlgebraElem<S>& y);

template <Scalar S>
CMatrix<S> killing_gram();

/// Columns e1, F1, F2, F3, conj F1, conj F2, conj F3 in e-coordinates.
template <Scalar S>
const CMatrix<S>& basis_change();
template <Scalar S>
const CMatrix<S>& basis_change_inverse();

/// Hermitian Gram matrix of the split basis, diag(1, 1/2, ..., 1/2).
template <Scalar S>
const CMatrix<S>& split_gram();

/// max |X^* G + G X|: zero iff X is skew-Hermitian once F_k is normalized.
template <Scalar S>
double skew_hermitian_residual(const CMatrix<S>& x);

/// Columns x, f1, f2, f3 of the frame matrix P * rho^C_g.
template <Scalar S>
struct MovingFrame {
  CMatrix<S> x;
  CMatrix<S> f1;
  CMatrix<S> f2;
  CMatrix<S> f3;

  const CMatrix<S>& f(std::size_t k) const { return k == 0 ? f1 : (k == 1 ? f2 : f3); }
};

/// Element of G2 inside SO(7).
template <Scalar S>
class G2GroupElem {
 public:
  static G2GroupElem identity();
  /// From the matrix in the split basis. Throws DomainError when rho_g is not
  /// real orthogonal with det 1, or conjugation does not preserve g2
  /// (exactly, or within tol).
  static G2GroupElem from_split(const CMatrix<S>& m, double tol = 1e-8);

  /// Matrix in the (e1, F, conj F) basis.
  const CMatrix<S>& split() const { return split_; }
  /// rho_g in the e-basis (real entries).
  const CMatrix<S>& real() const { return real_; }
  /// Columns (x, f1, f2, f3, conj f1, conj f2, conj f3) = P * split().
  CMatrix<S> frame_matrix() const;
  MovingFrame<S> frame() const;

  G2GroupElem inverse() const;
  friend G2GroupElem operator*(const G2GroupElem& g, const G2GroupElem& h) { return G2GroupElem(g.split_ * h.split_); }

  /// max |rho^t rho - I|, |Im rho|, |det rho - 1|.
  double orthogonality_residual() const;
  /// Largest projection residual of g E_j g^{-1} over basis14.
  double ad_invariance_residual() const;

 private:
  explicit G2GroupElem(CMatrix<S> split);

  CMatrix<S> split_;
  CMatrix<S> real_;
};

/// diag(1, A, conj A). Throws DomainError unless A^* A = I and det A = 1.
template <Scalar S>
G2GroupElem<S> su3_embed_group(const CMatrix<S>& a, double tol = kDefaultTolerances.identity);

/// exp(t * embed(el)); validated at tol.
G2GroupElem<Float> exp_group(const G2AlgebraElem<Float>& el, double t = 1.0, double tol = 1e-8);

/// phi(X) for X = g A, with X encoded by A: returns A.
template <Scalar S>
G2AlgebraElem<S> maurer_cartan(const G2GroupElem<S>& g, const G2AlgebraElem<S>& left_translated);

/// phi(X) = g^{-1} X for a raw tangent matrix X in the split basis. Throws
/// DomainError if g^{-1} X is not in g2.
template <Scalar S>
G2AlgebraElem<S> maurer_cartan_raw(const G2GroupElem<S>& g, const CMatrix<S>& tangent,
                                   double tol = kDefaultTolerances.identity);

template <Scalar S>
inline const CMatrix<S>& theta(const G2AlgebraElem<S>& el) {
  return el.a();
}
template <Scalar S>
inline const CMatrix<S>& kappa(const G2AlgebraElem<S>& el) {
  return el.d();
}

/// The Maurer-Cartan form and its components as left-invariant forms on basis14.
template <Scalar S>
MultiForm<S> phi_form();
template <Scalar S>
MultiForm<S> theta_form();
template <Scalar S>
MultiForm<S> kappa_form();

/// Ad_g as a 14 x 14 matrix in basis14 coordinates.
template <Scalar S>
CMatrix<S> adjoint_coordinates(const G2GroupElem<S>& g, double tol = 1e-8);

template <Scalar S>
struct RightTranslation {
  /// R_A^* theta, computed by conjugating the Maurer-Cartan value.
  MultiForm<S> pulled_back;
  /// A^{-1} theta.
  MultiForm<S> expected;
  double residual = 0.0;
};

/// Pullback of the theta-valued form under right translation by diag(1, A, conj A).
/// Throws ConsistencyError if it differs from A^{-1} * form beyond tol.
template <Scalar S>
RightTranslation<S> right_translate(const CMatrix<S>& a, const MultiForm<S>& form,
                                    double tol = kDefaultTolerances.identity);

/// Finds g with rho_g e1 = y by geodesic steps along horizontal one-parameter
/// subgroups, starting from `start` (identity by default). Throws
/// NumericalError when the residual stays above tol.
G2GroupElem<Float> lift_point(const CMatrix<Float>& y, double tol = 1e-8, const G2GroupElem<Float>* start = nullptr);

/// Random element of g2 (normal coordinates, scaled).
G2AlgebraElem<Float> random_algebra_element(Rng& rng, double scale = 1.0);
/// Random element with Gaussian-rational coordinates.
G2AlgebraElem<Exact> random_exact_algebra_element(Rng& rng);
/// Random su(3) matrix / SU(3) element exp(su(3)).
CMatrix<Float> random_su3_algebra(Rng& rng, double scale = 1.0);
CMatrix<Float> random_su3(Rng& rng, double scale = 1.0);

}  // namespace g2s6
