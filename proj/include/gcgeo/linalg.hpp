#ifndef GCGEO_LINALG_HPP
#define GCGEO_LINALG_HPP

#include "gcgeo/poly.hpp"
#include "gcgeo/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gcg {

// Row scaling that clears denominators before fraction-free elimination, so
// Bareiss steps stay on "integral" entries of the field.
template <class K>
struct RowClear {
  static void clear(Mat<K>&, Eigen::Index) {}
};

template <>
struct RowClear<GaussQ> {
  static void clear(Mat<GaussQ>& m, Eigen::Index r) {
    Int l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const GaussQ& e = m(r, j);
      l = boost::multiprecision::lcm(l, denominator(e.re));
      l = boost::multiprecision::lcm(l, denominator(e.im));
    }
    if (l == 1) return;
    GaussQ f{Rat(l), Rat(0)};
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) *= f;
  }
};

template <>
struct RowClear<RatFunc> {
  static void clear(Mat<RatFunc>& m, Eigen::Index r) {
    RatFunc f(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m(r, j);
      if (!e.denIsOne()) f = f * RatFunc(e.den());
    }
    if (f == RatFunc(1)) return;
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) *= f;
  }
};

template <class K>
struct Echelon {
  Mat<K> mat;                       // row echelon (fraction-free)
  std::vector<Eigen::Index> pivots; // pivot column per pivot row
  Eigen::Index rank = 0;
};

/// Fraction-free (Bareiss) forward elimination on denominator-cleared rows.
template <class K>
Echelon<K> echelon(Mat<K> m) {
  Echelon<K> e;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index r = 0; r < rows; ++r) RowClear<K>::clear(m, r);
  Eigen::Index pr = 0;
  K prev(1);
  for (Eigen::Index c = 0; c < cols && pr < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pr; r < rows; ++r)
      if (!m(r, c).isZero()) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pr) m.row(sel).swap(m.row(pr));
    for (Eigen::Index r = pr + 1; r < rows; ++r) {
      if (m(r, c).isZero()) {
        // Still rescale the row so the Bareiss determinant bookkeeping holds.
        for (Eigen::Index j = c + 1; j < cols; ++j)
          m(r, j) = m(pr, c) * m(r, j) / prev;
        continue;
      }
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(r, j) = (m(pr, c) * m(r, j) - m(r, c) * m(pr, j)) / prev;
      m(r, c) = K(0);
    }
    prev = m(pr, c);
    e.pivots.push_back(c);
    ++pr;
  }
  e.rank = pr;
  e.mat = std::move(m);
  return e;
}

template <class K>
Eigen::Index rank(const Mat<K>& m) {
  return echelon(m).rank;
}

/// Reduced row echelon form with unit pivots; unique per row space.
template <class K>
Mat<K> rref(const Mat<K>& m) {
  Echelon<K> e = echelon(m);
  Mat<K> a = e.mat.topRows(e.rank);
  for (Eigen::Index r = e.rank - 1; r >= 0; --r) {
    Eigen::Index c = e.pivots[r];
    K inv = K(1) / a(r, c);
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index r2 = 0; r2 < r; ++r2) {
      K f = a(r2, c);
      if (f.isZero()) continue;
      for (Eigen::Index j = c; j < a.cols(); ++j)
        a(r2, j) = a(r2, j) - f * a(r, j);
    }
  }
  return a;
}

template <class K>
struct RankKernel {
  Eigen::Index rank = 0;
  Mat<K> kernel;  // columns form a basis of the null space
};

/// Exact rank and kernel basis of m (kernel of the column action x -> m x).
template <class K>
RankKernel<K> rankKernel(const Mat<K>& m) {
  RankKernel<K> out;
  if (m.cols() == 0) {
    out.kernel = Mat<K>::Zero(0, 0);
    return out;
  }
  Mat<K> r = rref(m);
  out.rank = r.rows();
  std::vector<Eigen::Index> pivots;
  {
    Eigen::Index c = 0;
    for (Eigen::Index row = 0; row < r.rows(); ++row) {
      while (c < r.cols() && r(row, c).isZero()) ++c;
      pivots.push_back(c);
    }
  }
  std::vector<bool> isPivot(m.cols(), false);
  for (Eigen::Index c : pivots) isPivot[c] = true;
  const Eigen::Index nfree = m.cols() - out.rank;
  out.kernel = Mat<K>::Zero(m.cols(), nfree);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    out.kernel(f, k) = K(1);
    for (Eigen::Index row = 0; row < r.rows(); ++row)
      out.kernel(pivots[row], k) = -r(row, f);
    ++k;
  }
  return out;
}

/// Some x with m x = b, or nothing when b is outside the column space.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat<K> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Mat<K> r = rref(aug);
  Vec<K> x = Vec<K>::Zero(m.cols());
  for (Eigen::Index row = 0; row < r.rows(); ++row) {
    Eigen::Index c = 0;
    while (c < r.cols() && r(row, c).isZero()) ++c;
    if (c == m.cols()) return std::nullopt;  // 0 = 1 row
    if (c > m.cols()) break;
    x(c) = r(row, m.cols());
  }
  return x;
}

/// Subspace of K^n stored as a reduced-echelon row basis, so equality of
/// subspaces is equality of representations.
template <class K>
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}
  explicit Subspace(Eigen::Index ambient)
      : ambient_(ambient), basis_(0, ambient) {}
  /// Rows of `vectors` span the subspace.
  static Subspace fromRows(const Mat<K>& vectors) {
    Subspace s(vectors.cols());
    s.basis_ = rref(vectors);
    return s;
  }
  static Subspace fromColumns(const Mat<K>& vectors) {
    return fromRows(Mat<K>(vectors.transpose()));
  }
  static Subspace full(Eigen::Index ambient) {
    return fromRows(Mat<K>(Mat<K>::Identity(ambient, ambient)));
  }

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }

  bool contains(const Vec<K>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    Vec<K> r = v;
    reduceInPlace(r);
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!r(i).isZero()) return false;
    return true;
  }
  bool contains(const Subspace& other) const {
    for (Eigen::Index i = 0; i < other.dim(); ++i)
      if (!contains(Vec<K>(other.basis_.row(i).transpose()))) return false;
    return true;
  }

  /// Residue of v modulo this subspace (eliminating pivot coordinates).
  Vec<K> reduce(Vec<K> v) const {
    reduceInPlace(v);
    return v;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    checkAmbient(a, b);
    Mat<K> stack(a.dim() + b.dim(), a.ambient_);
    stack.topRows(a.dim()) = a.basis_;
    stack.bottomRows(b.dim()) = b.basis_;
    return fromRows(stack);
  }

  /// Zassenhaus intersection.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    checkAmbient(a, b);
    const Eigen::Index n = a.ambient_;
    Mat<K> z = Mat<K>::Zero(a.dim() + b.dim(), 2 * n);
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      z.block(i, 0, 1, n) = a.basis_.row(i);
      z.block(i, n, 1, n) = a.basis_.row(i);
    }
    z.block(a.dim(), 0, b.dim(), n) = b.basis_;
    Echelon<K> e = echelon(std::move(z));
    // Rows whose left half vanished carry intersection vectors on the right.
    Mat<K> rows(e.rank, n);
    Eigen::Index cnt = 0;
    for (Eigen::Index r = 0; r < e.rank; ++r) {
      if (e.pivots[r] >= n) rows.row(cnt++) = e.mat.block(r, n, 1, n);
    }
    return fromRows(rows.topRows(cnt));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  static void checkAmbient(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
      throw std::invalid_argument("Subspace: ambient mismatch");
  }
  void reduceInPlace(Vec<K>& v) const {
    for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
      Eigen::Index c = 0;
      while (c < ambient_ && basis_(r, c).isZero()) ++c;
      if (c == ambient_) continue;
      K f = v(c);  // pivot entries are 1 in rref
      if (f.isZero()) continue;
      for (Eigen::Index j = c; j < ambient_; ++j) v(j) = v(j) - f * basis_(r, j);
    }
  }

  Eigen::Index ambient_;
  Mat<K> basis_;
};

using SubspaceQ = Subspace<GaussQ>;

/// dim(a+b) + dim(a∩b) = dim a + dim b is checked by property tests.
template <class K>
Eigen::Index quotientDim(const Subspace<K>& big, const Subspace<K>& small) {
  return big.dim() - intersect(big, small).dim();
}

}  // namespace gcg

#endif  // GCGEO_LINALG_HPP
