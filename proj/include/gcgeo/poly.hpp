#ifndef GCGEO_POLY_HPP
#define GCGEO_POLY_HPP

#include "gcgeo/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

namespace gcg {

/// Shared, immutable list of formal variable names.
using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr makeVars(std::initializer_list<std::string> names) {
  return std::make_shared<const Vars>(names);
}
inline VarsPtr makeVars(const Vars& names) {
  return std::make_shared<const Vars>(names);
}

/// Exponent vector, one entry per declared variable.
using Expv = std::vector<unsigned>;

namespace detail {
// Graded lexicographic order on exponent vectors of equal length.
struct ExpvLess {
  bool operator()(const Expv& a, const Expv& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};
}  // namespace detail

/// Sparse multivariate polynomial with GaussQ coefficients.
class Poly {
 public:
  using Terms = std::map<Expv, GaussQ, detail::ExpvLess>;

  Poly() = default;
  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}
  Poly(VarsPtr vars, const GaussQ& c) : vars_(std::move(vars)) {
    if (!c.isZero()) terms_[Expv(nvars(), 0)] = c;
  }

  static Poly variable(VarsPtr vars, size_t idx) {
    Poly p(vars);
    Expv e(p.nvars(), 0);
    e.at(idx) = 1;
    p.terms_[e] = GaussQ(1);
    return p;
  }

  size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const VarsPtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expv& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }
  GaussQ constantValue() const {
    if (terms_.empty()) return GaussQ(0);
    return terms_.begin()->second;
  }
  unsigned totalDegree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }
  unsigned degreeIn(size_t v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(v));
    return d;
  }

  void addTerm(Expv e, const GaussQ& c) {
    if (c.isZero()) return;
    e.resize(nvars(), 0);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r(mergedVars(a, b));
    for (const auto& [e, c] : a.terms_) r.addTerm(e, c);
    for (const auto& [e, c] : b.terms_) r.addTerm(e, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r(mergedVars(a, b));
    for (const auto& [e, c] : a.terms_) r.addTerm(e, c);
    for (const auto& [e, c] : b.terms_) r.addTerm(e, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(mergedVars(a, b));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expv e = ea;
        e.resize(r.nvars(), 0);
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.addTerm(std::move(e), ca * cb);
      }
    return r;
  }
  Poly operator*(const GaussQ& c) const {
    Poly r(vars_);
    if (c.isZero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars() == b.nvars()) return a.terms_ == b.terms_;
    return (a - b).isZero();
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Deterministic total order for use as a container key.
  friend bool operator<(const Poly& a, const Poly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
          detail::ExpvLess less;
          if (less(x.first, y.first)) return true;
          if (less(y.first, x.first)) return false;
          return x.second < y.second;
        });
  }

  const std::pair<const Expv, GaussQ>& leading() const {
    return *terms_.rbegin();
  }

  Poly conj() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
    return r;
  }

  Poly derivative(size_t v) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(v) == 0) continue;
      Expv e2 = e;
      e2[v] -= 1;
      r.addTerm(e2, c * GaussQ(Rat(e[v])));
    }
    return r;
  }

  GaussQ evaluate(const std::vector<GaussQ>& point) const {
    GaussQ acc(0);
    for (const auto& [e, c] : terms_) {
      GaussQ t = c;
      for (size_t v = 0; v < e.size(); ++v)
        for (unsigned k = 0; k < e[v]; ++k) t *= point.at(v);
      acc += t;
    }
    return acc;
  }

 private:
  static VarsPtr mergedVars(const Poly& a, const Poly& b) {
    if (!a.vars_) return b.vars_;
    if (!b.vars_) return a.vars_;
    if (a.vars_ != b.vars_ && *a.vars_ != *b.vars_)
      throw std::logic_error("Poly: mixing distinct variable contexts");
    return a.vars_;
  }

 public:

  /// Exact division; throws if the divisor does not divide exactly.
  friend Poly exactDiv(const Poly& a, const Poly& b) {
    if (b.isZero()) throw std::domain_error("Poly: division by zero");
    if (b.isConstant()) {
      Poly r(a.vars_);
      GaussQ inv = GaussQ(1) / b.constantValue();
      for (const auto& [e, c] : a.terms_) r.terms_[e] = c * inv;
      return r;
    }
    Poly rem = a;
    Poly quot(a.vars_);
    const auto& [lbExp, lbCoef] = b.leading();
    while (!rem.isZero()) {
      const auto& [leExp, leCoef] = rem.leading();
      Expv q(leExp.size());
      for (size_t i = 0; i < q.size(); ++i) {
        if (leExp[i] < lbExp[i]) throw std::domain_error("Poly: inexact division");
        q[i] = leExp[i] - lbExp[i];
      }
      GaussQ qc = leCoef / lbCoef;
      Poly mono(a.vars_);
      mono.terms_[q] = qc;
      quot = quot + mono;
      rem = rem - mono * b;
    }
    return quot;
  }

 private:
  VarsPtr vars_;
  Terms terms_;
};

namespace detail {

// View of p as a univariate polynomial in variable v with Poly coefficients.
inline std::map<unsigned, Poly> asUnivariate(const Poly& p, size_t v) {
  std::map<unsigned, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Expv rest = e;
    unsigned k = rest[v];
    rest[v] = 0;
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, Poly(p.vars())).first;
    it->second.addTerm(rest, c);
  }
  return out;
}

inline Poly fromUnivariate(const std::map<unsigned, Poly>& u, size_t v,
                           const VarsPtr& vars) {
  Poly out(vars);
  Poly xv = Poly::variable(vars, v);
  for (const auto& [k, coef] : u) {
    Poly t = coef;
    for (unsigned j = 0; j < k; ++j) t = t * xv;
    out = out + t;
  }
  return out;
}

}  // namespace detail

Poly polyGcd(const Poly& a, const Poly& b);

namespace detail {

// Normalizes so the leading coefficient (graded-lex) is 1.
inline Poly makeMonic(const Poly& p) {
  if (p.isZero()) return p;
  return exactDiv(p, Poly(p.vars(), p.leading().second));
}

inline Poly contentIn(const std::map<unsigned, Poly>& u) {
  Poly g;
  bool first = true;
  for (const auto& [k, c] : u) {
    g = first ? c : polyGcd(g, c);
    first = false;
  }
  return g;
}

// Pseudo-remainder of a by b as univariate polynomials in v.
inline Poly pseudoRem(Poly a, const Poly& b, size_t v, const VarsPtr& vars) {
  auto ub = asUnivariate(b, v);
  unsigned db = ub.rbegin()->first;
  const Poly& lb = ub.rbegin()->second;
  Poly xv = Poly::variable(vars, v);
  while (!a.isZero()) {
    auto ua = asUnivariate(a, v);
    unsigned da = ua.rbegin()->first;
    if (da < db) break;
    const Poly& la = ua.rbegin()->second;
    // a <- lb*a - la*x^(da-db)*b
    Poly shift(vars, GaussQ(1));
    for (unsigned j = 0; j < da - db; ++j) shift = shift * xv;
    a = a * lb - la * shift * b;
  }
  return a;
}

}  // namespace detail

/// Primitive-PRS multivariate gcd, normalized monic in graded-lex order.
inline Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero()) return detail::makeMonic(b);
  if (b.isZero()) return detail::makeMonic(a);
  if (a.isConstant() || b.isConstant()) return Poly(a.vars(), GaussQ(1));
  // Main variable: highest index occurring in either.
  size_t v = 0;
  for (size_t i = 0; i < a.nvars(); ++i)
    if (a.degreeIn(i) > 0 || b.degreeIn(i) > 0) v = i;
  auto ua = detail::asUnivariate(a, v);
  auto ub = detail::asUnivariate(b, v);
  Poly ca = detail::contentIn(ua);
  Poly cb = detail::contentIn(ub);
  Poly pa = exactDiv(a, ca), pb = exactDiv(b, cb);
  // Euclidean chain on primitive parts.
  while (true) {
    auto upb = detail::asUnivariate(pb, v);
    if (upb.rbegin()->first == 0) {
      // pb nonzero of degree 0 in v: primitive => unit content in v.
      pa = Poly(a.vars(), GaussQ(1));
      pb = Poly();
      break;
    }
    Poly r = detail::pseudoRem(pa, pb, v, a.vars());
    if (r.isZero()) break;
    pa = pb;
    pb = exactDiv(r, detail::contentIn(detail::asUnivariate(r, v)));
  }
  Poly gp = pb.isZero() ? pa : pb;
  if (gp.isZero()) gp = Poly(a.vars(), GaussQ(1));
  else gp = exactDiv(gp, detail::contentIn(detail::asUnivariate(gp, v)));
  return detail::makeMonic(polyGcd(ca, cb) * gp);
}

std::string str(const Poly& p);

/// Element of the rational-function field over declared variables.
/// Canonical: gcd-reduced, denominator monic in graded-lex order.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int v) : num_(), den_() {  // NOLINT
    num_ = Poly(nullptr, GaussQ(v));
  }
  RatFunc(const GaussQ& c) : num_(nullptr, c) {}  // NOLINT
  explicit RatFunc(Poly num) : num_(std::move(num)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  static RatFunc variable(const VarsPtr& vars, size_t idx) {
    return RatFunc(Poly::variable(vars, idx));
  }

  const Poly& num() const { return num_; }
  Poly den() const { return den_.isZero() ? onePoly() : den_; }
  bool isZero() const { return num_.isZero(); }
  bool isConstant() const { return num_.isConstant() && denIsOne(); }
  GaussQ constantValue() const { return num_.constantValue(); }
  bool denIsOne() const {
    return den_.isZero() || (den_.isConstant() && den_.constantValue().isOne());
  }

  RatFunc operator-() const { return fromReduced(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den() + b.num_ * a.den(), a.den() * b.den());
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den() - b.num_ * a.den(), a.den() * b.den());
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den() * b.den());
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.isZero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den(), a.den() * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den() == b.den();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.num_ < b.num_) return true;
    if (b.num_ < a.num_) return false;
    return a.den() < b.den();
  }

  RatFunc conj() const { return fromReduced(num_.conj(), den().conj()); }

  RatFunc derivative(size_t v) const {
    // (n/d)' = (n'd - nd')/d^2
    Poly d = den();
    return RatFunc(num_.derivative(v) * d - num_ * d.derivative(v), d * d);
  }

  GaussQ evaluate(const std::vector<GaussQ>& point) const {
    GaussQ dv = den().evaluate(point);
    if (dv.isZero()) throw std::domain_error("RatFunc: pole at sample point");
    return num_.evaluate(point) / dv;
  }

 private:
  Poly onePoly() const { return Poly(num_.vars(), GaussQ(1)); }
  static RatFunc fromReduced(Poly n, Poly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  void reduce() {
    if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.isZero()) {
      den_ = Poly();
      return;
    }
    if (den_.isConstant()) {
      num_ = exactDiv(num_, den_);
      den_ = Poly();
      return;
    }
    Poly g = polyGcd(num_, den_);
    num_ = exactDiv(num_, g);
    den_ = exactDiv(den_, g);
    GaussQ lead = den_.leading().second;
    if (!lead.isOne()) {
      Poly l(den_.vars(), lead);
      num_ = exactDiv(num_, l);
      den_ = exactDiv(den_, l);
    }
    if (den_.isConstant()) den_ = Poly();
  }

  Poly num_;
  Poly den_;  // empty means 1
};

inline RatFunc conj(const RatFunc& a) { return a.conj(); }

inline std::string str(const Poly& p) {
  if (p.isZero()) return "0";
  std::string s;
  bool first = true;
  // Print highest-degree terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string term;
    bool allZero = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    std::string coef = str(c);
    if (allZero) {
      term = coef;
    } else {
      std::string mono;
      for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*p.vars())[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      if (c.isOne()) term = mono;
      else if (c == GaussQ(-1)) term = "-" + mono;
      else term = coef + "*" + mono;
    }
    if (!first && !term.empty() && term[0] != '-') s += "+";
    s += term;
    first = false;
  }
  return s;
}

inline std::string str(const RatFunc& f) {
  if (f.denIsOne()) {
    if (f.num().isConstant()) return str(f.num().constantValue());
    return "(" + str(f.num()) + ")";
  }
  return "(" + str(f.num()) + ")/(" + str(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << str(f);
}

}  // namespace gcg

namespace Eigen {
template <>
struct NumTraits<gcg::RatFunc> {
  typedef gcg::RatFunc Real;
  typedef gcg::RatFunc NonInteger;
  typedef gcg::RatFunc Nested;
  typedef gcg::RatFunc Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 60,
    MulCost = 120
  };
  static inline Real epsilon() { return gcg::RatFunc(0); }
  static inline Real dummy_precision() { return gcg::RatFunc(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // GCGEO_POLY_HPP
