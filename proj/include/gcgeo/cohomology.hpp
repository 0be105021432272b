#ifndef GCGEO_COHOMOLOGY_HPP
#define GCGEO_COHOMOLOGY_HPP

#include "gcgeo/liealg.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gcg {

/// A graded-commutative differential algebra with a finite basis per degree.
struct FiniteCDGA {
  int top = 0;
  std::vector<std::vector<std::string>> labels;  // per degree 0..top
  std::vector<MatQ> d;  // d[k]: dims(k+1) x dims(k); d[top] has 0 rows
  std::function<VecQ(int, Eigen::Index, int, Eigen::Index)> mul;

  Eigen::Index dims(int k) const {
    return (k < 0 || k > top) ? 0 : Eigen::Index(labels[k].size());
  }
  VecQ zeroVec(int k) const { return VecQ::Zero(dims(k)); }
  VecQ mulVec(int ka, const VecQ& a, int kb, const VecQ& b) const;
  VecQ dVec(int k, const VecQ& a) const {
    return k >= top ? VecQ::Zero(0) : VecQ(d[k] * a);
  }
  /// Checks graded commutativity, the Leibniz rule and d² = 0 on basis pairs.
  void validate() const;
};

using CDGAPtr = std::shared_ptr<const FiniteCDGA>;

/// Chevalley–Eilenberg complex of a model (untwisted differential).
struct CEComplex {
  LieModel model;
  std::vector<std::vector<Mask>> bases;  // per degree
  CDGAPtr cdga;

  VecQ toChain(const Form& f) const;  // f homogeneous; degree from content
  VecQ toChain(int k, const Form& f) const;
  Form toForm(int k, const VecQ& v) const;
};

CEComplex makeCE(const LieModel& m);

class CohomologyRing {
 public:
  static CohomologyRing compute(CDGAPtr c);

  const FiniteCDGA& cdga() const { return *cdga_; }
  CDGAPtr cdgaPtr() const { return cdga_; }
  int top() const { return cdga_->top; }
  Eigen::Index betti(int k) const {
    return (k < 0 || k > top()) ? 0 : reps_[k].rows();
  }
  /// Rows are chain-level representatives of the chosen basis of H^k.
  const MatQ& reps(int k) const { return reps_[k]; }
  const SubspaceQ& exact(int k) const { return exact_[k]; }
  const SubspaceQ& closed(int k) const { return closed_[k]; }

  bool isClosed(int k, const VecQ& v) const;
  /// Coordinates of [v] in the H^k basis (v must be closed).
  VecQ classOf(int k, const VecQ& v) const;
  /// Chain-level representative of a class.
  VecQ repOf(int k, const VecQ& cls) const;
  /// Cup product in class coordinates.
  VecQ cup(int ka, const VecQ& clsA, int kb, const VecQ& clsB) const;
  long eulerChar() const;

  /// Perturbs representatives by random exact forms and recomputes a sample
  /// of cup products; returns false if any structure constant moved.
  bool cupWellDefined(unsigned seed, int checksPerPair = 2) const;

 private:
  CDGAPtr cdga_;
  std::vector<MatQ> reps_;
  std::vector<SubspaceQ> exact_;
  std::vector<SubspaceQ> closed_;
};

// ---- Lefschetz -------------------------------------------------------------

struct LefschetzLevel {
  int level = 0;  // k, for the map [ω^{n-k}]: H^k -> H^{2n-k}
  Eigen::Index kernelDim = 0;
  SubspaceQ kernel;  // in H^k class coordinates
  bool surjective = false;
  bool injective = false;
};

struct LefschetzReport {
  bool omegaClosed = false;
  bool omegaNondegenerate = false;  // ω^n != 0
  std::vector<LefschetzLevel> levels;
  bool lefschetz = false;  // all levels surjective
};

LefschetzReport lefschetzReport(const LieModel& m, const Form& omega);
LefschetzReport lefschetzReport(const CohomologyRing& ring, const CEComplex& ce,
                                const Form& omega);

// ---- dd^J / dδ lemma -------------------------------------------------------

/// Operators act on one exact coordinate space (typically all of Λ•).
struct LemmaReport {
  bool anticommute = false;
  Eigen::Index dimImAkerB = 0;
  Eigen::Index dimImBkerA = 0;
  Eigen::Index dimImAB = 0;
  bool holds = false;
  std::optional<VecQ> witness;  // element of a big space missing Im AB
};

LemmaReport lemmaCheck(const MatQ& A, const MatQ& B);

// ---- Massey products -------------------------------------------------------

struct MasseyResult {
  bool defined = false;
  std::string error;
  int targetDeg = 0;
  VecQ repChain;           // chain-level representative
  VecQ repClass;           // class coordinates
  SubspaceQ indeterminacy; // span of the outer-ideal slice, class coordinates
  bool vanishes = true;    // class lies in the indeterminacy
  std::vector<VecQ> primitives;
};

/// Triple product ⟨a,b,c⟩ with ā = (-1)^{|a|} a and
/// da_{13} = ā b, da_{24} = b̄ c, representative ā a_{24} + ā_{13} c.
MasseyResult massey3(const CohomologyRing& ring, int da, const VecQ& a, int db,
                     const VecQ& b, int dc, const VecQ& c);

/// Quadruple product; requires simultaneous vanishing of both triple
/// subproducts, searched over the affine choice space.
MasseyResult massey4(const CohomologyRing& ring, int da, const VecQ& a, int db,
                     const VecQ& b, int dc, const VecQ& c, int de,
                     const VecQ& e);

// ---- twisted and H-cohomology ---------------------------------------------

struct TwistedReport {
  Eigen::Index dhEven = 0, dhOdd = 0;
  std::vector<Eigen::Index> hDims;  // H-cohomology dims per degree
  Eigen::Index hEven = 0, hOdd = 0;
  bool agree = false;  // d_H-cohomology dims equal regrouped H-cohomology
};

TwistedReport twistedCohomology(const LieModel& m);

// ---- symplectic existence ---------------------------------------------------

struct SymplecticExistence {
  enum class Verdict { Impossible, Exists, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  bool certificateZero = false;  // the m-linear map vanished identically
  Eigen::Index closed2Dim = 0;
  Form witness;  // valid when verdict == Exists
};

SymplecticExistence symplecticExistence(const LieModel& m, int coeffBound = 2,
                                        int samples = 4000);

// ---- helpers ----------------------------------------------------------------

/// Matrix of a linear operator on Λ• in the all-masks basis.
MatQ operatorMatrix(int n, const std::function<Form(const Form&)>& op);

/// Full-space matrix of d_H (mixes degrees when H != 0).
MatQ dHMatrix(const LieModel& m);

}  // namespace gcg

#endif  // GCGEO_COHOMOLOGY_HPP
