#include "gcgeo/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcg {

VecQ FiniteCDGA::mulVec(int ka, const VecQ& a, int kb, const VecQ& b) const {
  int kc = ka + kb;
  VecQ out = zeroVec(kc);
  if (kc > top) return out;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).isZero()) continue;
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      if (b(j).isZero()) continue;
      out += mul(ka, i, kb, j) * (a(i) * b(j));
    }
  }
  return out;
}

void FiniteCDGA::validate() const {
  for (int ka = 0; ka <= top; ++ka)
    for (Eigen::Index i = 0; i < dims(ka); ++i) {
      if (ka + 2 <= top) {
        VecQ e = zeroVec(ka);
        e(i) = GaussQ(1);
        VecQ dd = dVec(ka + 1, dVec(ka, e));
        for (Eigen::Index r = 0; r < dd.size(); ++r)
          if (!dd(r).isZero()) throw std::logic_error("CDGA: d^2 != 0");
      }
      for (int kb = ka; kb <= top - ka; ++kb)
        for (Eigen::Index j = 0; j < dims(kb); ++j) {
          VecQ ab = mul(ka, i, kb, j);
          VecQ ba = mul(kb, j, ka, i);
          GaussQ s = ((ka * kb) % 2) ? GaussQ(-1) : GaussQ(1);
          for (Eigen::Index r = 0; r < ab.size(); ++r)
            if (ab(r) != s * ba(r))
              throw std::logic_error("CDGA: graded commutativity fails");
          if (ka + kb < top) {
            VecQ ea = zeroVec(ka), eb = zeroVec(kb);
            ea(i) = GaussQ(1);
            eb(j) = GaussQ(1);
            VecQ lhs = dVec(ka + kb, ab);
            VecQ rhs = mulVec(ka + 1, dVec(ka, ea), kb, eb) +
                       mulVec(ka, ea, kb + 1, dVec(kb, eb)) *
                           (ka % 2 ? GaussQ(-1) : GaussQ(1));
            for (Eigen::Index r = 0; r < lhs.size(); ++r)
              if (lhs(r) != rhs(r)) throw std::logic_error("CDGA: Leibniz fails");
          }
        }
    }
}

CEComplex makeCE(const LieModel& m) {
  CEComplex ce;
  ce.model = m;
  const int n = m.gens();
  auto cdga = std::make_shared<FiniteCDGA>();
  cdga->top = n;
  ce.bases.resize(n + 1);
  cdga->labels.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    ce.bases[k] = masksOfDegree(n, k);
    for (Mask mm : ce.bases[k])
      cdga->labels[k].push_back(mm == 0 ? "one" : "e" + detail::maskIndexString(mm));
  }
  cdga->d.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    Eigen::Index rows = (k + 1 <= n) ? Eigen::Index(ce.bases[k + 1].size()) : 0;
    cdga->d[k] = MatQ::Zero(rows, Eigen::Index(ce.bases[k].size()));
    if (k + 1 > n) continue;
    for (size_t j = 0; j < ce.bases[k].size(); ++j) {
      Form df = m.d(Form::basis(n, ce.bases[k][j]));
      cdga->d[k].col(Eigen::Index(j)) = toDense(df, ce.bases[k + 1]);
    }
  }
  std::vector<std::vector<Mask>> bases = ce.bases;
  cdga->mul = [n, bases](int ka, Eigen::Index i, int kb,
                         Eigen::Index j) -> VecQ {
    int kc = ka + kb;
    if (kc > n) return VecQ::Zero(0);
    Mask ma = bases[ka][size_t(i)], mb = bases[kb][size_t(j)];
    VecQ out = VecQ::Zero(Eigen::Index(bases[kc].size()));
    if (ma & mb) return out;
    Mask mc = ma | mb;
    auto it = std::lower_bound(bases[kc].begin(), bases[kc].end(), mc);
    out(Eigen::Index(it - bases[kc].begin())) = GaussQ(wedgeSign(ma, mb));
    return out;
  };
  ce.cdga = cdga;
  return ce;
}

VecQ CEComplex::toChain(const Form& f) const {
  int k = f.maxDegree();
  if (k < 0) k = 0;
  if (!f.isHomogeneous(k))
    throw std::invalid_argument("toChain: form is not homogeneous");
  return toChain(k, f);
}

VecQ CEComplex::toChain(int k, const Form& f) const {
  return toDense(f.component(k), bases[k]);
}

Form CEComplex::toForm(int k, const VecQ& v) const {
  return fromDense(model.gens(), v, bases[k]);
}

CohomologyRing CohomologyRing::compute(CDGAPtr c) {
  CohomologyRing ring;
  ring.cdga_ = std::move(c);
  const FiniteCDGA& a = *ring.cdga_;
  ring.reps_.resize(a.top + 1);
  ring.exact_.resize(a.top + 1);
  ring.closed_.resize(a.top + 1);
  for (int k = 0; k <= a.top; ++k) {
    Eigen::Index dim = a.dims(k);
    MatQ dk = (k < a.top) ? a.d[k] : MatQ::Zero(0, dim);
    RankKernel<GaussQ> rk = rankKernel(dk);
    SubspaceQ Z = SubspaceQ::fromColumns(rk.kernel);
    SubspaceQ B = (k == 0) ? SubspaceQ(dim) : SubspaceQ::fromColumns(a.d[k - 1]);
    ring.exact_[k] = B;
    ring.closed_[k] = Z;
    // Deterministic representatives by echelon pivoting through the kernel.
    std::vector<VecQ> reps;
    SubspaceQ span = B;
    for (Eigen::Index cidx = 0; cidx < rk.kernel.cols(); ++cidx) {
      VecQ z = rk.kernel.col(cidx);
      if (span.contains(z)) continue;
      reps.push_back(B.reduce(z));
      MatQ stack(span.dim() + 1, dim);
      stack.topRows(span.dim()) = span.basis();
      stack.bottomRows(1) = z.transpose();
      span = SubspaceQ::fromRows(stack);
    }
    ring.reps_[k] = MatQ::Zero(Eigen::Index(reps.size()), dim);
    for (size_t r = 0; r < reps.size(); ++r)
      ring.reps_[k].row(Eigen::Index(r)) = reps[r].transpose();
  }
  return ring;
}

bool CohomologyRing::isClosed(int k, const VecQ& v) const {
  if (k >= top()) return true;
  VecQ dv = cdga_->d[k] * v;
  for (Eigen::Index i = 0; i < dv.size(); ++i)
    if (!dv(i).isZero()) return false;
  return true;
}

VecQ CohomologyRing::classOf(int k, const VecQ& v) const {
  if (k < 0 || k > top()) return VecQ::Zero(0);
  Eigen::Index nb = betti(k);
  const SubspaceQ& B = exact_[k];
  MatQ sys(v.size(), nb + B.dim());
  for (Eigen::Index i = 0; i < nb; ++i) sys.col(i) = reps_[k].row(i).transpose();
  for (Eigen::Index i = 0; i < B.dim(); ++i)
    sys.col(nb + i) = B.basis().row(i).transpose();
  auto x = solve(sys, v);
  if (!x) throw std::invalid_argument("classOf: vector is not closed");
  return x->head(nb);
}

VecQ CohomologyRing::repOf(int k, const VecQ& cls) const {
  VecQ out = cdga_->zeroVec(k);
  for (Eigen::Index i = 0; i < cls.size(); ++i)
    out += reps_[k].row(i).transpose() * cls(i);
  return out;
}

VecQ CohomologyRing::cup(int ka, const VecQ& clsA, int kb,
                         const VecQ& clsB) const {
  if (ka + kb > top()) return VecQ::Zero(0);
  VecQ chain = cdga_->mulVec(ka, repOf(ka, clsA), kb, repOf(kb, clsB));
  return classOf(ka + kb, chain);
}

long CohomologyRing::eulerChar() const {
  long e = 0;
  for (int k = 0; k <= top(); ++k) e += (k % 2 ? -1 : 1) * long(betti(k));
  return e;
}

bool CohomologyRing::cupWellDefined(unsigned seed, int checksPerPair) const {
  std::mt19937 rng(seed);
  const FiniteCDGA& a = *cdga_;
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int ka = 0; ka <= top(); ++ka)
    for (int kb = ka; kb + ka <= top(); ++kb) {
      if (betti(ka) == 0 || betti(kb) == 0) continue;
      for (int t = 0; t < checksPerPair; ++t) {
        VecQ ca = VecQ::Zero(betti(ka)), cb = VecQ::Zero(betti(kb));
        for (Eigen::Index i = 0; i < ca.size(); ++i) ca(i) = GaussQ(coef(rng));
        for (Eigen::Index i = 0; i < cb.size(); ++i) cb(i) = GaussQ(coef(rng));
        VecQ base = cup(ka, ca, kb, cb);
        VecQ ra = repOf(ka, ca), rb = repOf(kb, cb);
        if (ka > 0 && a.dims(ka - 1) > 0) {
          VecQ u = VecQ::Zero(a.dims(ka - 1));
          for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = GaussQ(coef(rng));
          ra += a.d[ka - 1] * u;
        }
        if (kb > 0 && a.dims(kb - 1) > 0) {
          VecQ u = VecQ::Zero(a.dims(kb - 1));
          for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = GaussQ(coef(rng));
          rb += a.d[kb - 1] * u;
        }
        VecQ pert = classOf(ka + kb, a.mulVec(ka, ra, kb, rb));
        if (pert.size() != base.size()) return false;
        for (Eigen::Index i = 0; i < base.size(); ++i)
          if (base(i) != pert(i)) return false;
      }
    }
  return true;
}

// ---- Lefschetz -------------------------------------------------------------

LefschetzReport lefschetzReport(const LieModel& m, const Form& omega) {
  CEComplex ce = makeCE(m);
  CohomologyRing ring = CohomologyRing::compute(ce.cdga);
  return lefschetzReport(ring, ce, omega);
}

LefschetzReport lefschetzReport(const CohomologyRing& ring, const CEComplex& ce,
                                const Form& omega) {
  LefschetzReport rep;
  const LieModel& m = ce.model;
  const int nGen = m.gens();
  if (nGen % 2 != 0) throw std::invalid_argument("lefschetz: odd dimension");
  const int n = nGen / 2;
  rep.omegaClosed = m.d(omega).isZero();
  Form power = Form::unit(nGen);
  for (int i = 0; i < n; ++i) power = wedge(power, omega);
  rep.omegaNondegenerate = !power.isZero();
  if (!rep.omegaClosed || !rep.omegaNondegenerate) return rep;
  rep.lefschetz = true;
  for (int k = 0; k <= n; ++k) {
    LefschetzLevel lvl;
    lvl.level = k;
    Form wk = Form::unit(nGen);
    for (int i = 0; i < n - k; ++i) wk = wedge(wk, omega);
    Eigen::Index bk = ring.betti(k);
    Eigen::Index btarget = ring.betti(2 * n - k);
    MatQ map = MatQ::Zero(btarget, bk);
    for (Eigen::Index i = 0; i < bk; ++i) {
      Form repForm = ce.toForm(k, VecQ(ring.reps(k).row(i).transpose()));
      Form img = wedge(wk, repForm);
      map.col(i) = ring.classOf(2 * n - k, ce.toChain(2 * n - k, img));
    }
    RankKernel<GaussQ> rk = rankKernel(map);
    lvl.kernelDim = rk.kernel.cols();
    lvl.kernel = SubspaceQ::fromColumns(rk.kernel);
    lvl.surjective = rk.rank == btarget;
    lvl.injective = lvl.kernelDim == 0;
    if (!lvl.surjective) rep.lefschetz = false;
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

// ---- lemma check -----------------------------------------------------------

namespace {
bool matZero(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).isZero()) return false;
  return true;
}
}  // namespace

LemmaReport lemmaCheck(const MatQ& A, const MatQ& B) {
  LemmaReport rep;
  rep.anticommute = matZero(A * B + B * A);
  if (!rep.anticommute)
    throw std::invalid_argument("lemmaCheck: operators do not anticommute");
  SubspaceQ imA = SubspaceQ::fromColumns(A);
  SubspaceQ imB = SubspaceQ::fromColumns(B);
  SubspaceQ kerA = SubspaceQ::fromColumns(rankKernel(A).kernel);
  SubspaceQ kerB = SubspaceQ::fromColumns(rankKernel(B).kernel);
  SubspaceQ iab = intersect(imA, kerB);
  SubspaceQ iba = intersect(imB, kerA);
  SubspaceQ imAB = SubspaceQ::fromColumns(MatQ(A * B));
  rep.dimImAkerB = iab.dim();
  rep.dimImBkerA = iba.dim();
  rep.dimImAB = imAB.dim();
  rep.holds = (iab == imAB) && (iba == imAB);
  if (!rep.holds) {
    for (Eigen::Index r = 0; r < iab.dim(); ++r) {
      VecQ v = iab.basis().row(r).transpose();
      if (!imAB.contains(v)) {
        rep.witness = v;
        break;
      }
    }
    if (!rep.witness) {
      for (Eigen::Index r = 0; r < iba.dim(); ++r) {
        VecQ v = iba.basis().row(r).transpose();
        if (!imAB.contains(v)) {
          rep.witness = v;
          break;
        }
      }
    }
  }
  return rep;
}

// ---- Massey ----------------------------------------------------------------

namespace {

std::optional<VecQ> primitiveFor(const CohomologyRing& ring, int deg,
                                 const VecQ& target) {
  // solve d x = target with x in degree deg-1
  const FiniteCDGA& a = ring.cdga();
  if (deg - 1 < 0 || deg - 1 > a.top) return std::nullopt;
  return solve(a.d[deg - 1], target);
}

SubspaceQ outerIdealSlice(const CohomologyRing& ring, int da, const VecQ& a,
                          int de, const VecQ& e, int target) {
  Eigen::Index bt = ring.betti(target);
  std::vector<VecQ> rows;
  int ka = target - da;
  for (Eigen::Index i = 0; ka >= 0 && i < ring.betti(ka); ++i) {
    VecQ h = VecQ::Zero(ring.betti(ka));
    h(i) = GaussQ(1);
    rows.push_back(ring.cup(da, a, ka, h));
  }
  int ke = target - de;
  for (Eigen::Index i = 0; ke >= 0 && i < ring.betti(ke); ++i) {
    VecQ h = VecQ::Zero(ring.betti(ke));
    h(i) = GaussQ(1);
    rows.push_back(ring.cup(ke, h, de, e));
  }
  MatQ m = MatQ::Zero(Eigen::Index(rows.size()), bt);
  for (size_t r = 0; r < rows.size(); ++r)
    m.row(Eigen::Index(r)) = rows[r].transpose();
  return SubspaceQ::fromRows(m);
}

VecQ bar(int deg, const VecQ& v) { return deg % 2 ? VecQ(-v) : v; }

}  // namespace

MasseyResult massey3(const CohomologyRing& ring, int da, const VecQ& a, int db,
                     const VecQ& b, int dc, const VecQ& c) {
  MasseyResult res;
  const FiniteCDGA& A = ring.cdga();
  res.targetDeg = da + db + dc - 1;
  VecQ ab = A.mulVec(da, bar(da, a), db, b);
  VecQ bc = A.mulVec(db, bar(db, b), dc, c);
  auto a13 = primitiveFor(ring, da + db, ab);
  auto a24 = primitiveFor(ring, db + dc, bc);
  if (!a13 || !a24) {
    res.defined = false;
    res.error = "pairwise products do not vanish in cohomology";
    return res;
  }
  res.defined = true;
  res.primitives = {*a13, *a24};
  VecQ rep = A.mulVec(da, bar(da, a), db + dc - 1, *a24) +
             A.mulVec(da + db - 1, bar(da + db - 1, *a13), dc, c);
  res.repChain = rep;
  res.repClass = ring.classOf(res.targetDeg, rep);
  VecQ clsA = ring.classOf(da, a);
  VecQ clsC = ring.classOf(dc, c);
  res.indeterminacy = outerIdealSlice(ring, da, clsA, dc, clsC, res.targetDeg);
  res.vanishes = res.indeterminacy.contains(res.repClass);
  return res;
}

MasseyResult massey4(const CohomologyRing& ring, int da, const VecQ& a, int db,
                     const VecQ& b, int dc, const VecQ& c, int de,
                     const VecQ& e) {
  MasseyResult res;
  const FiniteCDGA& A = ring.cdga();
  res.targetDeg = da + db + dc + de - 2;
  auto x13 = primitiveFor(ring, da + db, A.mulVec(da, bar(da, a), db, b));
  auto x24 = primitiveFor(ring, db + dc, A.mulVec(db, bar(db, b), dc, c));
  auto x35 = primitiveFor(ring, dc + de, A.mulVec(dc, bar(dc, c), de, e));
  if (!x13 || !x24 || !x35) {
    res.defined = false;
    res.error = "pairwise products do not vanish in cohomology";
    return res;
  }
  int d13 = da + db - 1, d24 = db + dc - 1, d35 = dc + de - 1;
  int d14 = da + db + dc - 1, d25 = db + dc + de - 1;
  // Adjust x13, x24, x35 by closed vectors so both triple-product
  // representatives become exact simultaneously.
  auto kernelBasis = [&](int deg) {
    return rankKernel(deg < A.top ? A.d[deg] : MatQ::Zero(0, A.dims(deg)))
        .kernel;
  };
  MatQ k13 = kernelBasis(d13), k24 = kernelBasis(d24), k35 = kernelBasis(d35);
  VecQ t1 = A.mulVec(da, bar(da, a), d24, *x24) +
            A.mulVec(d13, bar(d13, *x13), dc, c);
  VecQ t2 = A.mulVec(db, bar(db, b), d35, *x35) +
            A.mulVec(d24, bar(d24, *x24), de, e);
  VecQ clsT1 = ring.classOf(d14, t1);
  VecQ clsT2 = ring.classOf(d25, t2);
  Eigen::Index n13 = k13.cols(), n24 = k24.cols(), n35 = k35.cols();
  MatQ sys = MatQ::Zero(clsT1.size() + clsT2.size(), n13 + n24 + n35);
  for (Eigen::Index i = 0; i < n13; ++i) {
    VecQ shift = A.mulVec(d13, bar(d13, VecQ(k13.col(i))), dc, c);
    sys.block(0, i, clsT1.size(), 1) = ring.classOf(d14, shift);
  }
  for (Eigen::Index i = 0; i < n24; ++i) {
    VecQ s1 = A.mulVec(da, bar(da, a), d24, VecQ(k24.col(i)));
    VecQ s2 = A.mulVec(d24, bar(d24, VecQ(k24.col(i))), de, e);
    sys.block(0, n13 + i, clsT1.size(), 1) = ring.classOf(d14, s1);
    sys.block(clsT1.size(), n13 + i, clsT2.size(), 1) = ring.classOf(d25, s2);
  }
  for (Eigen::Index i = 0; i < n35; ++i) {
    VecQ shift = A.mulVec(db, bar(db, b), d35, VecQ(k35.col(i)));
    sys.block(clsT1.size(), n13 + n24 + i, clsT2.size(), 1) =
        ring.classOf(d25, shift);
  }
  VecQ rhs(clsT1.size() + clsT2.size());
  rhs.head(clsT1.size()) = -clsT1;
  rhs.tail(clsT2.size()) = -clsT2;
  auto z = solve(sys, rhs);
  if (!z) {
    res.defined = false;
    res.error = "no simultaneous choice makes both triple subproducts vanish";
    return res;
  }
  for (Eigen::Index i = 0; i < n13; ++i) *x13 += k13.col(i) * (*z)(i);
  for (Eigen::Index i = 0; i < n24; ++i) *x24 += k24.col(i) * (*z)(n13 + i);
  for (Eigen::Index i = 0; i < n35; ++i)
    *x35 += k35.col(i) * (*z)(n13 + n24 + i);
  t1 = A.mulVec(da, bar(da, a), d24, *x24) +
       A.mulVec(d13, bar(d13, *x13), dc, c);
  t2 = A.mulVec(db, bar(db, b), d35, *x35) +
       A.mulVec(d24, bar(d24, *x24), de, e);
  auto x14 = primitiveFor(ring, d14 + 1, t1);
  auto x25 = primitiveFor(ring, d25 + 1, t2);
  if (!x14 || !x25) {
    res.defined = false;
    res.error = "internal: adjusted triple representatives not exact";
    return res;
  }
  res.defined = true;
  res.primitives = {*x13, *x24, *x35, *x14, *x25};
  VecQ rep = A.mulVec(da, bar(da, a), d25, *x25) +
             A.mulVec(d13, bar(d13, *x13), d35, *x35) +
             A.mulVec(d14, bar(d14, *x14), de, e);
  res.repChain = rep;
  res.repClass = ring.classOf(res.targetDeg, rep);
  res.indeterminacy = outerIdealSlice(ring, da, ring.classOf(da, a), de,
                                      ring.classOf(de, e), res.targetDeg);
  res.vanishes = res.indeterminacy.contains(res.repClass);
  return res;
}

// ---- twisted ----------------------------------------------------------------

MatQ operatorMatrix(int n, const std::function<Form(const Form&)>& op) {
  std::vector<Mask> basis = allMasks(n);
  MatQ m = MatQ::Zero(Eigen::Index(basis.size()), Eigen::Index(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    m.col(Eigen::Index(j)) = toDense(op(Form::basis(n, basis[j])), basis);
  return m;
}

MatQ dHMatrix(const LieModel& m) {
  return operatorMatrix(m.gens(), [&m](const Form& f) { return m.dH(f); });
}

TwistedReport twistedCohomology(const LieModel& m) {
  TwistedReport rep;
  const int n = m.gens();
  std::vector<Mask> evens, odds;
  for (Mask mm : allMasks(n)) (popcount(mm) % 2 ? odds : evens).push_back(mm);
  MatQ dEO = MatQ::Zero(Eigen::Index(odds.size()), Eigen::Index(evens.size()));
  MatQ dOE = MatQ::Zero(Eigen::Index(evens.size()), Eigen::Index(odds.size()));
  for (size_t j = 0; j < evens.size(); ++j)
    dEO.col(Eigen::Index(j)) =
        toDense(m.dH(Form::basis(n, evens[j])).oddPart(), odds);
  for (size_t j = 0; j < odds.size(); ++j)
    dOE.col(Eigen::Index(j)) =
        toDense(m.dH(Form::basis(n, odds[j])).evenPart(), evens);
  Eigen::Index rEO = rank(dEO), rOE = rank(dOE);
  rep.dhEven = Eigen::Index(evens.size()) - rEO - rOE;
  rep.dhOdd = Eigen::Index(odds.size()) - rOE - rEO;
  // H-cohomology: the action of [H] on ordinary cohomology.
  CEComplex ce = makeCE(m);
  CohomologyRing ring = CohomologyRing::compute(ce.cdga);
  const Form& H = m.twist();
  rep.hDims.assign(n + 1, 0);
  std::vector<MatQ> mulH(n + 1);
  for (int k = 0; k <= n; ++k) {
    Eigen::Index bk = ring.betti(k);
    Eigen::Index bt = (k + 3 <= n) ? ring.betti(k + 3) : 0;
    mulH[k] = MatQ::Zero(bt, bk);
    if (k + 3 > n || H.isZero()) continue;
    for (Eigen::Index i = 0; i < bk; ++i) {
      Form f = ce.toForm(k, VecQ(ring.reps(k).row(i).transpose()));
      mulH[k].col(i) = ring.classOf(k + 3, ce.toChain(k + 3, wedge(H, f)));
    }
  }
  for (int k = 0; k <= n; ++k) {
    Eigen::Index kerDim = ring.betti(k) - rank(mulH[k]);
    Eigen::Index imDim = (k >= 3) ? rank(mulH[k - 3]) : 0;
    rep.hDims[size_t(k)] = kerDim - imDim;
    (k % 2 ? rep.hOdd : rep.hEven) += rep.hDims[size_t(k)];
  }
  rep.agree = rep.hEven == rep.dhEven && rep.hOdd == rep.dhOdd;
  return rep;
}

// ---- symplectic existence ----------------------------------------------------

SymplecticExistence symplecticExistence(const LieModel& m, int coeffBound,
                                        int samples) {
  const int n = m.gens();
  if (n % 2 != 0)
    throw std::invalid_argument("symplecticExistence: odd generator count");
  const int half = n / 2;
  SymplecticExistence out;
  std::vector<Mask> deg2 = masksOfDegree(n, 2);
  std::vector<Mask> deg3 = masksOfDegree(n, 3);
  MatQ d2(Eigen::Index(deg3.size()), Eigen::Index(deg2.size()));
  for (size_t j = 0; j < deg2.size(); ++j)
    d2.col(Eigen::Index(j)) = toDense(m.d(Form::basis(n, deg2[j])), deg3);
  RankKernel<GaussQ> rk = rankKernel(d2);
  out.closed2Dim = rk.kernel.cols();
  std::vector<Form> zbasis;
  for (Eigen::Index c = 0; c < rk.kernel.cols(); ++c)
    zbasis.push_back(fromDense(n, VecQ(rk.kernel.col(c)), deg2));
  // Multilinear certificate on index-sorted basis tuples.
  bool allZero = true;
  std::function<void(int, int, const Form&)> rec = [&](int start, int left,
                                                       const Form& acc) {
    if (!allZero) return;
    if (left == 0) {
      if (!acc.isZero()) allZero = false;
      return;
    }
    for (int i = start; i < int(zbasis.size()); ++i)
      rec(i, left - 1, wedge(acc, zbasis[i]));
  };
  if (!zbasis.empty()) rec(0, half, Form::unit(n));
  out.certificateZero = allZero;
  if (allZero) {
    out.verdict = SymplecticExistence::Verdict::Impossible;
    return out;
  }
  auto isSymplectic = [&](const Form& w) {
    Form p = Form::unit(n);
    for (int i = 0; i < half; ++i) p = wedge(p, w);
    return !p.isZero();
  };
  for (const Form& z : zbasis)
    if (isSymplectic(z)) {
      out.verdict = SymplecticExistence::Verdict::Exists;
      out.witness = z;
      return out;
    }
  {
    Form sum(n);
    for (const Form& z : zbasis) sum += z;
    if (isSymplectic(sum)) {
      out.verdict = SymplecticExistence::Verdict::Exists;
      out.witness = sum;
      return out;
    }
  }
  std::mt19937 rng(20040617);
  std::uniform_int_distribution<int> coef(-coeffBound, coeffBound);
  for (int t = 0; t < samples; ++t) {
    Form w(n);
    for (const Form& z : zbasis) w += z * GaussQ(coef(rng));
    if (isSymplectic(w)) {
      out.verdict = SymplecticExistence::Verdict::Exists;
      out.witness = w;
      return out;
    }
  }
  out.verdict = SymplecticExistence::Verdict::Inconclusive;
  return out;
}

}  // namespace gcg
