#ifndef GCGEO_GCS_HPP
#define GCGEO_GCS_HPP

#include "gcgeo/cohomology.hpp"
#include "gcgeo/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcg {

struct GCSVerification {
  bool pure = false;
  bool nondegenerate = false;
  bool integrable = false;
  bool closed = false;
  int type = -1;
  Eigen::Index annihilatorDim = 0;
  bool realSplit = true;  // L ∩ L̄ = {0}
  bool courantInvolutive = false;  // second integrability route
  std::optional<GenVector> integrabilityWitness;
  std::string failure;
};

/// Invariant generalized complex structure built from a pure spinor on a
/// model. Exists only when the spinor is pure, nondegenerate and L∩L̄ = 0;
/// integrability and closedness live in the verification report.
class GCStructure {
 public:
  const LieModel& model() const { return model_; }
  const Form& rho() const { return rho_; }
  const SubspaceQ& L() const { return L_; }
  const SubspaceQ& Lbar() const { return Lbar_; }
  const MatQ& J() const { return J_; }
  int type() const { return report_.type; }
  int halfDim() const { return model_.gens() / 2; }
  const GCSVerification& report() const { return report_; }
  bool integrable() const { return report_.integrable; }

  /// Basis of U^k as a subspace of Λ• (all-masks coordinates), k = -n..n.
  const SubspaceQ& U(int k) const { return U_.at(size_t(k + halfDim())); }
  /// U^k component of a form.
  Form componentU(int k, const Form& a) const;
  std::vector<Form> decomposeU(const Form& a) const;  // indexed k+n

  /// Lie-algebra spin action of J (B-part -> -B∧, β-part -> β⌟,
  /// A-part -> -A* + tr(A)/2).
  Form jayAlgebra(const Form& a) const;
  /// Lie-group action: multiplication by i^k on U^k (and its inverse).
  Form jayGroup(const Form& a) const;
  Form jayGroupInv(const Form& a) const;
  /// d^J = J^{-1} d_H J via the group action.
  Form dJ(const Form& a) const;

  struct Split {
    Form del;      // component in U^{k+1}
    Form delbar;   // component in U^{k-1}
    Form residual; // anything else: integrability-failure witness
  };
  /// d_H a split along the U-grading (a arbitrary; split per component).
  Split delSplit(const Form& a) const;

  /// dims of H_∂^k, k = -n..n.
  std::vector<Eigen::Index> canonicalE1() const;
  /// χ(M) = ± Σ (-1)^k dim H_∂^k with + when U^0 is even.
  bool eulerCheck() const;
  bool uZeroEven() const;

  friend struct GCSBuilder;

 private:
  LieModel model_;
  Form rho_;
  SubspaceQ L_, Lbar_;
  MatQ J_;
  GCSVerification report_;
  std::vector<SubspaceQ> U_;
  MatQ uBasisInv_;  // inverse of the U-bases column matrix
  std::vector<std::pair<int, Eigen::Index>> uColumn_;  // column -> (k, index)
};

struct GCSResult {
  GCSVerification report;
  std::optional<GCStructure> structure;
};

/// Builds the structure and its verification report; never throws on
/// mathematical failure (only on ρ = 0 / size mismatch).
GCSResult structureFromSpinor(const LieModel& m, const Form& rho);

/// Extended-mode verification: purity/nondegeneracy/closedness of a spinor
/// with rational-function coefficients; nondegeneracy failure loci are
/// reported through the vanishing polynomial of the Mukai pairing.
struct GCSVerificationX {
  bool pure = false;
  bool nondegenerateGeneric = false;
  RatFunc mukaiTop;  // top coefficient of (ρ, ρ̄)
  bool closed = false;
  int type = -1;
};
GCSVerificationX verifySpinorX(const LieModel& m, const FormX& rho);

/// B-field transform e^B ∧ ρ. Non-closed B requires allowTwistShift, which
/// moves the twist to H + dB on the returned structure's model.
GCSResult transformB(const GCStructure& s, const Form& B,
                     bool allowTwistShift = false);
/// β-field transform e^β⌟ρ for a bivector β.
GCSResult transformBeta(const GCStructure& s, const Form& beta);

struct DeformationResult {
  bool mcHolds = false;
  VecQ mcWitness;  // coordinates of d_Lε + [ε,ε]/2 in Λ³L̄ when nonzero
  Form deformedSpinor;
  GCSResult deformed;  // populated when MC holds
};

/// Deformation by ε ∈ Λ²L̄ given as decomposable wedge pairs; factors must
/// lie in L̄.
DeformationResult deform(const GCStructure& s, const BivectorPairs<GaussQ>& eps);

// ---- generalized Kähler pairs ---------------------------------------------

struct GKReport {
  bool sameModel = false;
  bool commute = false;
  bool gSquaresToId = false;
  bool positive = false;
  int failedMinor = -1;  // index of the first non-positive leading minor
  bool intersectionDim = false;  // dim_C(L1 ∩ L2) == n
  bool valid = false;
  MatQ G;
  MatQ metric;  // g
  MatQ bField;  // b
  MatQ Jplus, Jminus;
  SubspaceQ Cplus, Cminus;
};

GKReport kahlerPairCheck(const GCStructure& s1, const GCStructure& s2);

// ---- submanifolds -----------------------------------------------------------

struct SubmanifoldReport {
  bool invariant = false;   // τ_F invariant under J
  SubspaceQ tauF;
  bool coisotropic = false; // symplectic-only extras
  bool transverseComplex = false;  // (ω^{-1}F)² = -Id on W/W^ω
};

SubmanifoldReport submanifoldCheck(const GCStructure& s, const SubspaceQ& W,
                                   const Form& F);

/// The natural pairing as a 2n x 2n matrix.
MatQ pairingMatrix(int n);

/// GenVector basis of a coordinate subspace of (V ⊕ V*) ⊗ C.
std::vector<GenVector> genVectorBasis(const SubspaceQ& s);

}  // namespace gcg

#endif  // GCGEO_GCS_HPP
