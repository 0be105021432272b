#ifndef GCGEO_FORM_HPP
#define GCGEO_FORM_HPP

#include "gcgeo/linalg.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gcg {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Sign of e_A ∧ e_B for disjoint index sets (count of inversions).
inline int wedgeSign(Mask a, Mask b) {
  int inv = 0;
  Mask bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    inv += std::popcount(a >> (j + 1));
    bb &= bb - 1;
  }
  return (inv & 1) ? -1 : 1;
}

/// Sign picked up by ι_j extracting e_j from e_M.
inline int iotaSign(Mask m, int j) {
  return (std::popcount(m & ((Mask(1) << j) - 1)) & 1) ? -1 : 1;
}

/// Sparse element of Λ•V* ⊗ C on n generators (or of Λ•V when used as a
/// multivector). Keys are bitmasks over generator indices 0..n-1; no zero
/// coefficients are stored, so representation is canonical.
template <class K>
class FormT {
 public:
  using Terms = std::map<Mask, K>;

  FormT() : n_(0) {}
  explicit FormT(int n) : n_(n) {}

  static FormT zero(int n) { return FormT(n); }
  static FormT unit(int n) { return basis(n, 0, K(1)); }
  static FormT basis(int n, Mask m, const K& c = K(1)) {
    FormT f(n);
    f.add(m, c);
    return f;
  }
  /// Generator e_idx with 1-based index.
  static FormT gen(int n, int idx, const K& c = K(1)) {
    return basis(n, Mask(1) << (idx - 1), c);
  }

  int gens() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(Mask m, const K& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  K coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Lowest and highest nonzero degrees; -1 on the zero form.
  int minDegree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int p = popcount(m);
      if (d < 0 || p < d) d = p;
    }
    return d;
  }
  int maxDegree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, popcount(m));
    return d;
  }
  bool isHomogeneous(int k) const {
    for (const auto& [m, c] : terms_)
      if (popcount(m) != k) return false;
    return true;
  }

  FormT component(int k) const {
    FormT f(n_);
    for (const auto& [m, c] : terms_)
      if (popcount(m) == k) f.terms_.emplace(m, c);
    return f;
  }
  FormT evenPart() const {
    FormT f(n_);
    for (const auto& [m, c] : terms_)
      if (!(popcount(m) & 1)) f.terms_.emplace(m, c);
    return f;
  }
  FormT oddPart() const {
    FormT f(n_);
    for (const auto& [m, c] : terms_)
      if (popcount(m) & 1) f.terms_.emplace(m, c);
    return f;
  }

  FormT operator-() const {
    FormT f(n_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
  }
  FormT& operator+=(const FormT& o) {
    checkGens(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  FormT& operator-=(const FormT& o) {
    checkGens(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend FormT operator+(FormT a, const FormT& b) { return a += b; }
  friend FormT operator-(FormT a, const FormT& b) { return a -= b; }
  FormT operator*(const K& c) const {
    FormT f(n_);
    if (c.isZero()) return f;
    for (const auto& [m, k] : terms_) f.terms_.emplace(m, k * c);
    return f;
  }
  friend FormT operator*(const K& c, const FormT& a) { return a * c; }
  friend bool operator==(const FormT& a, const FormT& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }
  friend bool operator<(const FormT& a, const FormT& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
  }

  void checkGens(const FormT& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("Form: generator count mismatch");
  }

 private:
  int n_;
  Terms terms_;
};

template <class K>
FormT<K> wedge(const FormT<K>& a, const FormT<K>& b) {
  a.checkGens(b);
  FormT<K> r(a.gens());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      K c = ca * cb;
      if (wedgeSign(ma, mb) < 0) c = -c;
      r.add(ma | mb, c);
    }
  return r;
}

/// Interior product by the coordinate vector with 1-based index idx.
template <class K>
FormT<K> iota(int idx, const FormT<K>& a) {
  FormT<K> r(a.gens());
  Mask bit = Mask(1) << (idx - 1);
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    K v = c;
    if (iotaSign(m, idx - 1) < 0) v = -v;
    r.add(m & ~bit, v);
  }
  return r;
}

/// Contraction by a multivector P: for P = X1∧...∧Xk the first factor acts
/// innermost, (X1∧X2)⌟φ = ι_{X2} ι_{X1} φ. This is the convention under
/// which e^{β}⌟(θ1∧...∧θn) = e^{θ_{n-1}∧θ_n}∧θ1...θ_{n-2} for
/// β = x_{n-1}∧x_n dual to the θ's.
template <class K>
FormT<K> contract(const FormT<K>& mv, const FormT<K>& a) {
  mv.checkGens(a);
  FormT<K> r(a.gens());
  for (const auto& [m, c] : mv.terms()) {
    FormT<K> t = a;
    Mask mm = m;
    while (mm && !t.isZero()) {
      int j = std::countr_zero(mm);
      t = iota(j + 1, t);
      mm &= mm - 1;
    }
    r += t * c;
  }
  return r;
}

/// Generalized vector X + ξ in (V ⊕ V*) ⊗ C.
template <class K>
struct GenVectorT {
  std::vector<K> X;   // vector part, length n
  std::vector<K> xi;  // covector part, length n

  explicit GenVectorT(int n) : X(n, K(0)), xi(n, K(0)) {}
  int gens() const { return static_cast<int>(X.size()); }

  GenVectorT conj() const {
    GenVectorT v = *this;
    for (auto& c : v.X) c = c.conj();
    for (auto& c : v.xi) c = c.conj();
    return v;
  }
  GenVectorT operator*(const K& c) const {
    GenVectorT v = *this;
    for (auto& t : v.X) t *= c;
    for (auto& t : v.xi) t *= c;
    return v;
  }
  GenVectorT operator+(const GenVectorT& o) const {
    GenVectorT v = *this;
    for (int i = 0; i < gens(); ++i) {
      v.X[i] += o.X[i];
      v.xi[i] += o.xi[i];
    }
    return v;
  }
  /// Coordinates in the basis (∂_1..∂_n, e_1..e_n).
  Vec<K> coords() const {
    Vec<K> v(2 * gens());
    for (int i = 0; i < gens(); ++i) {
      v(i) = X[i];
      v(gens() + i) = xi[i];
    }
    return v;
  }
  static GenVectorT fromCoords(const Vec<K>& v) {
    int n = static_cast<int>(v.size() / 2);
    GenVectorT g(n);
    for (int i = 0; i < n; ++i) {
      g.X[i] = v(i);
      g.xi[i] = v(n + i);
    }
    return g;
  }
};

/// ⟨X+ξ, Y+η⟩ = (ξ(Y) + η(X)) / 2.
template <class K>
K pairing(const GenVectorT<K>& v, const GenVectorT<K>& w) {
  K s(0);
  for (int i = 0; i < v.gens(); ++i) s += v.xi[i] * w.X[i] + w.xi[i] * v.X[i];
  return s / K(2);
}

/// Clifford action (X + ξ)·φ = X⌟φ + ξ∧φ.
template <class K>
FormT<K> clifford(const GenVectorT<K>& v, const FormT<K>& a) {
  FormT<K> r(a.gens());
  for (int i = 0; i < v.gens(); ++i) {
    if (!v.X[i].isZero()) r += iota(i + 1, a) * v.X[i];
    if (!v.xi[i].isZero()) r += wedge(FormT<K>::gen(a.gens(), i + 1), a) * v.xi[i];
  }
  return r;
}

/// Degree reversal antiautomorphism: multiplies degree k by (-1)^{k(k-1)/2}.
template <class K>
FormT<K> alphaRev(const FormT<K>& a) {
  FormT<K> r(a.gens());
  for (const auto& [m, c] : a.terms()) {
    int k = popcount(m);
    r.add(m, ((k * (k - 1) / 2) & 1) ? -c : c);
  }
  return r;
}

/// Mukai pairing: top-degree component of α(a) ∧ b.
template <class K>
FormT<K> mukai(const FormT<K>& a, const FormT<K>& b) {
  return wedge(alphaRev(a), b).component(a.gens());
}

template <class K>
FormT<K> conjForm(const FormT<K>& a) {
  FormT<K> r(a.gens());
  for (const auto& [m, c] : a.terms()) r.add(m, c.conj());
  return r;
}

/// e^g ∧ a for g of positive minimal degree (finite sum).
template <class K>
FormT<K> expWedge(const FormT<K>& g, const FormT<K>& a) {
  if (g.isZero()) return a;
  if (g.minDegree() < 1)
    throw std::invalid_argument("expWedge: argument has a scalar term");
  FormT<K> res = a, cur = a;
  for (int k = 1; !cur.isZero(); ++k) {
    cur = wedge(g, cur) * (K(1) / K(k));
    res += cur;
  }
  return res;
}

/// e^{g⌟} a for a multivector g of positive minimal degree.
template <class K>
FormT<K> expContract(const FormT<K>& g, const FormT<K>& a) {
  if (g.isZero()) return a;
  FormT<K> res = a, cur = a;
  for (int k = 1; !cur.isZero(); ++k) {
    cur = contract(g, cur) * (K(1) / K(k));
    res += cur;
  }
  return res;
}

/// Bivector in Λ²L̄ kept as decomposable wedge pairs of generalized vectors;
/// the pairs must be mutually isotropic for the Clifford action to be
/// well defined.
template <class K>
struct BivectorPairs {
  struct Term {
    GenVectorT<K> a, b;
    K c;
  };
  std::vector<Term> terms;

  /// Clifford (spin) action; the first wedge factor acts innermost.
  FormT<K> act(const FormT<K>& phi) const {
    FormT<K> r(phi.gens());
    for (const auto& t : terms)
      r += clifford(t.b, clifford(t.a, phi)) * t.c;
    return r;
  }
};

template <class K>
FormT<K> expCliffordBivector(const BivectorPairs<K>& eps, const FormT<K>& a) {
  FormT<K> res = a, cur = a;
  for (int k = 1; !cur.isZero(); ++k) {
    cur = eps.act(cur) * (K(1) / K(k));
    res += cur;
  }
  return res;
}

/// Masks of fixed popcount in increasing numeric order.
inline std::vector<Mask> masksOfDegree(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

inline std::vector<Mask> allMasks(int n) {
  std::vector<Mask> out(size_t(1) << n);
  for (Mask m = 0; m < (Mask(1) << n); ++m) out[m] = m;
  return out;
}

template <class K>
Vec<K> toDense(const FormT<K>& f, const std::vector<Mask>& basis) {
  std::map<Mask, Eigen::Index> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = Eigen::Index(i);
  Vec<K> v = Vec<K>::Zero(basis.size());
  for (const auto& [m, c] : f.terms()) {
    auto it = pos.find(m);
    if (it == pos.end())
      throw std::invalid_argument("toDense: form outside spanned degrees");
    v(it->second) = c;
  }
  return v;
}

template <class K>
FormT<K> fromDense(int n, const Vec<K>& v, const std::vector<Mask>& basis) {
  FormT<K> f(n);
  for (size_t i = 0; i < basis.size(); ++i) f.add(basis[i], v(Eigen::Index(i)));
  return f;
}

using Form = FormT<GaussQ>;
using FormX = FormT<RatFunc>;
using GenVector = GenVectorT<GaussQ>;
using GenVectorX = GenVectorT<RatFunc>;

// ---- printing ------------------------------------------------------------

namespace detail {
inline std::string maskIndexString(Mask m) {
  std::string s;
  while (m) {
    int j = std::countr_zero(m) + 1;
    if (j <= 9) s += std::to_string(j);
    else s += "[" + std::to_string(j) + "]";
    m &= m - 1;
  }
  return s;
}

inline std::string coeffPrefix(const GaussQ& c) {
  if (c.isOne()) return "";
  if (c == GaussQ(-1)) return "-";
  if (c == GaussQ::I()) return "i*";
  if (c == -GaussQ::I()) return "-i*";
  if (c.im == 0) return ratStr(c.re) + "*";
  std::string s = str(c);
  if (s[0] != '(') s = "(" + s + ")";
  return s + "*";
}

inline std::string coeffPrefix(const RatFunc& c) {
  if (c.isConstant()) return coeffPrefix(c.constantValue());
  std::string s = str(c);
  if (s[0] != '(') s = "(" + s + ")";
  return s + "*";
}
}  // namespace detail

/// Canonical printer. Terms are ordered by (degree, mask); the unit form
/// prints as "one" so everything reparses unambiguously.
template <class K>
std::string str(const FormT<K>& f) {
  if (f.isZero()) return "0";
  std::vector<std::pair<Mask, K>> ts(f.terms().begin(), f.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = popcount(a.first), db = popcount(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [m, c] : ts) {
    std::string pre = detail::coeffPrefix(c);
    std::string body = m == 0 ? "one" : detail::maskIndexString(m);
    std::string term = pre + body;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const FormT<K>& f) {
  return os << str(f);
}

template <class K>
std::string str(const GenVectorT<K>& v) {
  std::string out;
  auto addPart = [&out](const std::string& base, const K& c) {
    if (c.isZero()) return;
    std::string pre = detail::coeffPrefix(c);
    std::string term = pre + base;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  };
  for (int i = 0; i < v.gens(); ++i) addPart("d" + std::to_string(i + 1), v.X[i]);
  for (int i = 0; i < v.gens(); ++i) addPart("e" + std::to_string(i + 1), v.xi[i]);
  return out.empty() ? "0" : out;
}

}  // namespace gcg

#endif  // GCGEO_FORM_HPP
