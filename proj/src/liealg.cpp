#include "gcgeo/liealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gcg {

namespace {

// d extends the generator table as a degree-+1 derivation:
// d(e_{i1..ik}) = Σ_p (-1)^{p-1} de_{ip} ∧ e_{I∖ip}.
template <class K>
FormT<K> derivationApply(int n, const std::vector<FormT<K>>& dg,
                         const FormT<K>& a) {
  FormT<K> out(n);
  for (const auto& [m, c] : a.terms()) {
    int p = 0;
    Mask mm = m;
    while (mm) {
      int j = std::countr_zero(mm);
      mm &= mm - 1;
      const FormT<K>& dj = dg[j];
      if (!dj.isZero()) {
        K s = (p & 1) ? -c : c;
        out += wedge(dj, FormT<K>::basis(n, m & ~(Mask(1) << j))) * s;
      }
      ++p;
    }
  }
  return out;
}

}  // namespace

LieModel::LieModel(int n, std::vector<Form> dGen, Form twist)
    : n_(n), d1_(std::move(dGen)), H_(std::move(twist)) {
  if (static_cast<int>(d1_.size()) != n)
    throw std::invalid_argument("LieModel: differential table size mismatch");
  for (int k = 1; k <= n_; ++k) {
    const Form& f = d1_[k - 1];
    if (!f.isZero() && !f.isHomogeneous(2))
      throw std::invalid_argument("LieModel: de_" + std::to_string(k) +
                                  " is not a 2-form");
    if (!d(f).isZero())
      throw std::invalid_argument("LieModel: d^2 e_" + std::to_string(k) +
                                  " != 0 (Jacobi failure)");
  }
  if (!H_.isZero()) {
    if (!H_.isHomogeneous(3))
      throw std::invalid_argument("LieModel: twist is not a 3-form");
    if (!d(H_).isZero()) throw std::invalid_argument("LieModel: dH != 0");
  }
}

LieModel LieModel::parseTuple(const std::string& tuple) {
  return parseTuple(tuple, "0");
}

LieModel LieModel::parseTuple(const std::string& tuple, const std::string& twist) {
  std::vector<std::string> parts = splitTuple(tuple);
  int n = static_cast<int>(parts.size());
  std::vector<Form> dg;
  dg.reserve(n);
  for (const std::string& p : parts) dg.push_back(parseForm(p, n));
  return LieModel(n, std::move(dg), parseForm(twist, n));
}

void LieModel::bindVariables(VarsPtr vars, std::vector<int> varGen) {
  if (!vars || vars->size() != varGen.size())
    throw std::invalid_argument("LieModel: variable binding size mismatch");
  for (int g : varGen)
    if (g < 1 || g > n_ || !d1_[g - 1].isZero())
      throw std::invalid_argument(
          "LieModel: variables must bind to closed generators");
  vars_ = std::move(vars);
  varGen_ = std::move(varGen);
}

Form LieModel::d(const Form& a) const { return derivationApply(n_, d1_, a); }

FormX LieModel::d(const FormX& a) const {
  std::vector<FormX> dg;
  dg.reserve(n_);
  for (const Form& f : d1_) {
    FormX g(n_);
    for (const auto& [m, c] : f.terms()) g.add(m, RatFunc(c));
    dg.push_back(std::move(g));
  }
  FormX out = derivationApply(n_, dg, a);
  // Coefficient derivatives: Σ_v ∂c/∂x_v · e_{gen(v)} ∧ e_I.
  for (size_t v = 0; v < varGen_.size(); ++v) {
    FormX dc(n_);
    for (const auto& [m, c] : a.terms()) dc.add(m, c.derivative(v));
    out += wedge(FormX::gen(n_, varGen_[v]), dc);
  }
  return out;
}

FormX LieModel::twistX() const {
  FormX h(n_);
  for (const auto& [m, c] : H_.terms()) h.add(m, RatFunc(c));
  return h;
}

FormX LieModel::dH(const FormX& a) const { return d(a) + wedge(twistX(), a); }

VecQ LieModel::bracket(int i, int j) const {
  VecQ out = VecQ::Zero(n_);
  if (i == j) return out;
  Mask mij = (Mask(1) << (i - 1)) | (Mask(1) << (j - 1));
  for (int k = 1; k <= n_; ++k) {
    GaussQ c = d1_[k - 1].coeff(mij);
    if (c.isZero()) continue;
    // de_k(x_i, x_j) = -e_k([x_i, x_j]); stored coefficient is for the
    // increasing mask, so evaluate with the orientation of (i, j).
    if (i > j) c = -c;
    out(k - 1) -= c;
  }
  return out;
}

GenVector LieModel::courant(const GenVector& v, const GenVector& w,
                            bool useTwist) const {
  GenVector out(n_);
  // [X, Y]
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      GaussQ c = v.X[i - 1] * w.X[j - 1];
      if (c.isZero() || i == j) continue;
      VecQ br = bracket(i, j);
      for (int k = 0; k < n_; ++k) out.X[k] += c * br(k);
    }
  // ι_X dη - ι_Y dξ  (+ ι_Y ι_X H when twisted); the exact term d(...)
  // vanishes on constant coefficients.
  Form dEta(n_), dXi(n_);
  for (int i = 0; i < n_; ++i) {
    dEta += d1_[i] * w.xi[i];
    dXi += d1_[i] * v.xi[i];
  }
  Form res(n_);
  for (int i = 0; i < n_; ++i) {
    if (!v.X[i].isZero()) res += iota(i + 1, dEta) * v.X[i];
    if (!w.X[i].isZero()) res -= iota(i + 1, dXi) * w.X[i];
  }
  if (useTwist && !H_.isZero()) {
    Form hx(n_);
    for (int i = 0; i < n_; ++i)
      if (!v.X[i].isZero()) hx += iota(i + 1, H_) * v.X[i];
    for (int i = 0; i < n_; ++i)
      if (!w.X[i].isZero()) res += iota(i + 1, hx) * w.X[i];
  }
  for (int i = 0; i < n_; ++i) out.xi[i] = res.coeff(Mask(1) << i);
  return out;
}

std::string LieModel::printTuple() const {
  std::string s = "(";
  for (int k = 1; k <= n_; ++k) {
    if (k > 1) s += ",";
    s += str(d1_[k - 1]);
  }
  return s + ")";
}

Filtration filtrationReport(const LieModel& m) {
  const int n = m.gens();
  Filtration f;
  f.V.push_back(SubspaceQ(n));  // V_0 = {0}
  // Degree-2 basis for quotient tests.
  std::vector<Mask> deg2 = masksOfDegree(n, 2);
  while (true) {
    const SubspaceQ& prev = f.V.back();
    // Λ²V_{i-1} inside Λ².
    MatQ wedges(prev.dim() * (prev.dim() - 1) / 2, deg2.size());
    Eigen::Index row = 0;
    for (Eigen::Index a = 0; a < prev.dim(); ++a)
      for (Eigen::Index b = a + 1; b < prev.dim(); ++b) {
        Form fa(n), fb(n);
        for (int j = 0; j < n; ++j) {
          fa.add(Mask(1) << j, prev.basis()(a, j));
          fb.add(Mask(1) << j, prev.basis()(b, j));
        }
        wedges.row(row++) = toDense(wedge(fa, fb), deg2).transpose();
      }
    SubspaceQ lam2 = SubspaceQ::fromRows(wedges);
    // V_i = { v : dv ∈ Λ²V_{i-1} }: kernel of Λ¹ → Λ²/Λ²V_{i-1}.
    MatQ dmat(deg2.size(), n);
    for (int j = 0; j < n; ++j)
      dmat.col(j) = toDense(m.dGen(j + 1), deg2);
    // Compose with quotient: reduce each column by lam2 and stack.
    MatQ q(deg2.size(), n);
    for (int j = 0; j < n; ++j) q.col(j) = lam2.reduce(dmat.col(j));
    RankKernel<GaussQ> rk = rankKernel(q);
    SubspaceQ next = SubspaceQ::fromColumns(rk.kernel);
    if (next.dim() == prev.dim()) {
      // Stabilized strictly below the full space: not nilpotent.
      if (next.dim() < n) throw std::domain_error("filtration: model is not nilpotent");
      break;
    }
    f.V.push_back(next);
    if (next.dim() == n) break;
  }
  f.nilpotent = true;
  f.nilIndex = static_cast<int>(f.V.size()) - 1;
  if (f.V.back().dim() != n)
    throw std::domain_error("filtration: model is not nilpotent");
  for (size_t i = 1; i < f.V.size(); ++i)
    f.stepDims.push_back(f.V[i].dim() - f.V[i - 1].dim());
  f.genNil.resize(n, 0);
  for (int g = 0; g < n; ++g) {
    VecQ v = VecQ::Zero(n);
    v(g) = GaussQ(1);
    for (size_t i = 1; i < f.V.size(); ++i)
      if (f.V[i].contains(v)) {
        f.genNil[g] = static_cast<int>(i);
        break;
      }
  }
  // Type bound: with dim(V_{i+1}/V_i) = 1 for all i >= j, types
  // k >= 2n' - nil + j are impossible (n = 2n').
  if (n % 2 == 0) {
    for (int j = 1; j < f.nilIndex; ++j) {
      bool allOne = true;
      for (int i = j; i < f.nilIndex; ++i)
        if (f.stepDims[i] != 1) { allOne = false; break; }
      if (allOne) {
        f.excludedTypesFrom = n - f.nilIndex + j;
        break;
      }
    }
  }
  return f;
}

int nilDegree(const Filtration& f, const Form& a) {
  if (a.isZero()) return 0;
  const int n = static_cast<int>(f.V.back().ambient());
  std::vector<int> degs;
  for (const auto& [m, c] : a.terms()) {
    (void)c;
    int k = popcount(m);
    if (std::find(degs.begin(), degs.end(), k) == degs.end()) degs.push_back(k);
  }
  for (size_t i = 1; i < f.V.size(); ++i) {
    bool ok = true;
    for (int k : degs) {
      std::vector<Mask> basis = masksOfDegree(n, k);
      // Span of Λ^k V_i from wedge products of k basis rows.
      const MatQ& B = f.V[i].basis();
      std::vector<Form> rows;
      for (Eigen::Index r = 0; r < B.rows(); ++r) {
        Form fr(n);
        for (int j = 0; j < n; ++j) fr.add(Mask(1) << j, B(r, j));
        rows.push_back(fr);
      }
      std::vector<VecQ> span;
      std::function<void(int, int, Form)> rec = [&](int start, int left,
                                                    Form acc) {
        if (left == 0) {
          span.push_back(toDense(acc, basis));
          return;
        }
        for (int r = start; r + left <= static_cast<int>(rows.size()); ++r)
          rec(r + 1, left - 1, wedge(acc, rows[r]));
      };
      rec(0, k, Form::unit(n));
      MatQ sp(span.size(), basis.size());
      for (size_t r = 0; r < span.size(); ++r)
        sp.row(Eigen::Index(r)) = span[r].transpose();
      SubspaceQ sub = SubspaceQ::fromRows(sp);
      if (!sub.contains(toDense(a.component(k), basis))) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<int>(i);
  }
  throw std::logic_error("nilDegree: form outside the full filtration");
}

Form restrictToFrame(const std::vector<VecQ>& frame, const Form& a) {
  const int m = static_cast<int>(frame.size());
  if (m == 0) throw std::invalid_argument("restrictToFrame: empty frame");
  const int n = static_cast<int>(frame[0].size());
  MatQ F(m, n);
  for (int i = 0; i < m; ++i) F.row(i) = frame[i].transpose();
  if (rank(F) != m)
    throw std::invalid_argument("restrictToFrame: dependent tangent set");
  Form out(m);
  // Coefficient of γ_J is a evaluated on (t_{j1}, ..., t_{jp}).
  for (const auto& [mask, c] : a.terms()) {
    int p = popcount(mask);
    if (p > m) continue;
    // Evaluate over all p-subsets of the frame.
    std::vector<int> gens;
    for (int j = 0; j < n; ++j)
      if (mask & (Mask(1) << j)) gens.push_back(j);
    std::vector<int> subset(p);
    std::function<void(int, int)> rec = [&](int start, int pos) {
      if (pos == p) {
        // det of p x p matrix e_{gens[r]}(frame[subset[s]])
        MatQ d(p, p);
        for (int r = 0; r < p; ++r)
          for (int s = 0; s < p; ++s) d(r, s) = frame[subset[s]](gens[r]);
        // exact determinant by cofactor (p small)
        std::function<GaussQ(MatQ)> det = [&](MatQ mm) -> GaussQ {
          Eigen::Index k = mm.rows();
          if (k == 0) return GaussQ(1);
          if (k == 1) return mm(0, 0);
          GaussQ acc(0);
          for (Eigen::Index r = 0; r < k; ++r) {
            if (mm(r, 0).isZero()) continue;
            MatQ minor(k - 1, k - 1);
            Eigen::Index rr = 0;
            for (Eigen::Index r2 = 0; r2 < k; ++r2) {
              if (r2 == r) continue;
              minor.row(rr++) = mm.row(r2).tail(k - 1);
            }
            GaussQ t = mm(r, 0) * det(minor);
            acc += (r & 1) ? -t : t;
          }
          return acc;
        };
        Mask outMask = 0;
        for (int s = 0; s < p; ++s) outMask |= Mask(1) << subset[s];
        out.add(outMask, c * det(d));
        return;
      }
      for (int r = (pos == 0 ? 0 : subset[pos - 1] + 1); r < m; ++r) {
        subset[pos] = r;
        rec(r + 1, pos + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

Form lieDerivative(const LieModel& m, const VecQ& X, const Form& a) {
  // L_X = ι_X d + d ι_X for a constant vector field on the model.
  Form iXa(m.gens()), da = m.d(a);
  Form iXda(m.gens());
  for (int i = 0; i < m.gens(); ++i) {
    if (X(i).isZero()) continue;
    iXa += iota(i + 1, a) * X(i);
    iXda += iota(i + 1, da) * X(i);
  }
  return iXda + m.d(iXa);
}

}  // namespace gcg
