#ifndef GCGEO_SCALAR_HPP
#define GCGEO_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gcg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*i with exact arithmetic. The canonical form of
/// cpp_rational makes equality syntactic.
struct GaussQ {
  Rat re;
  Rat im;

  GaussQ() = default;
  GaussQ(int v) : re(v) {}                // NOLINT: implicit by design
  GaussQ(long long v) : re(v) {}          // NOLINT
  GaussQ(const Rat& r) : re(r) {}         // NOLINT
  GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussQ I() { return GaussQ(Rat(0), Rat(1)); }

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }
  bool isOne() const { return im == 0 && re == 1; }

  GaussQ conj() const { return GaussQ(re, -im); }
  /// re^2 + im^2 as a rational.
  Rat normSq() const { return re * re + im * im; }

  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
  GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
  GaussQ& operator*=(const GaussQ& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o) {
    Rat n = o.normSq();
    if (n == 0) throw std::domain_error("GaussQ: division by zero");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
  /// Lexicographic order; used only for deterministic containers.
  friend bool operator<(const GaussQ& a, const GaussQ& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline GaussQ conj(const GaussQ& a) { return a.conj(); }

namespace detail {
inline std::string ratStr(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}
}  // namespace detail

/// Prints in the scalar sub-grammar: "3", "-1/2", "i", "2i", "(1+2i)", ...
inline std::string str(const GaussQ& a) {
  if (a.im == 0) return detail::ratStr(a.re);
  std::string imPart;
  if (a.im == 1) imPart = "i";
  else if (a.im == -1) imPart = "-i";
  else imPart = detail::ratStr(a.im) + "i";
  if (a.re == 0) return imPart;
  std::string s = "(" + detail::ratStr(a.re);
  if (!imPart.empty() && imPart[0] != '-') s += "+";
  return s + imPart + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GaussQ& a) {
  return os << str(a);
}

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using MatQ = Mat<GaussQ>;
using VecQ = Vec<GaussQ>;

}  // namespace gcg

namespace Eigen {
template <>
struct NumTraits<gcg::GaussQ> {
  typedef gcg::GaussQ Real;
  typedef gcg::GaussQ NonInteger;
  typedef gcg::GaussQ Nested;
  typedef gcg::GaussQ Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return gcg::GaussQ(0); }
  static inline Real dummy_precision() { return gcg::GaussQ(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // GCGEO_SCALAR_HPP
