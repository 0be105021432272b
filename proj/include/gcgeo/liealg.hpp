#ifndef GCGEO_LIEALG_HPP
#define GCGEO_LIEALG_HPP

#include "gcgeo/form.hpp"
#include "gcgeo/parse.hpp"

#include <string>
#include <vector>

namespace gcg {

/// Lie-algebra presentation through the differentials of a coframe, with an
/// optional closed twist 3-form and optional formal base variables bound to
/// closed coframe generators.
class LieModel {
 public:
  LieModel() = default;
  /// Throws on d² ≠ 0 (reports the first offending generator) or dH ≠ 0.
  LieModel(int n, std::vector<Form> dGen, Form twist);

  static LieModel parseTuple(const std::string& tuple);
  static LieModel parseTuple(const std::string& tuple, const std::string& twist);

  int gens() const { return n_; }
  const Form& dGen(int idx1) const { return d1_.at(idx1 - 1); }
  const std::vector<Form>& dGens() const { return d1_; }
  const Form& twist() const { return H_; }
  bool twisted() const { return !H_.isZero(); }

  /// Extended mode: binds variable v (0-based into vars) to a closed
  /// generator (1-based); d then differentiates coefficients formally.
  void bindVariables(VarsPtr vars, std::vector<int> varGen);
  const VarsPtr& vars() const { return vars_; }
  const std::vector<int>& varGens() const { return varGen_; }

  Form d(const Form& a) const;
  Form dH(const Form& a) const { return d(a) + wedge(H_, a); }
  FormX d(const FormX& a) const;
  FormX dH(const FormX& a) const;
  FormX twistX() const;

  /// [x_i, x_j] in vector coordinates (1-based generators).
  VecQ bracket(int i, int j) const;
  /// Courant bracket of constant-coefficient generalized vectors, twisted by
  /// the model twist when `twisted`.
  GenVector courant(const GenVector& v, const GenVector& w, bool useTwist) const;

  /// Tuple shorthand (defined whenever every de_k reprints compactly).
  std::string printTuple() const;

 private:
  int n_ = 0;
  std::vector<Form> d1_;
  Form H_;
  VarsPtr vars_;
  std::vector<int> varGen_;
};

/// The V_i filtration data of a nilpotent model.
struct Filtration {
  bool nilpotent = false;
  int nilIndex = 0;
  std::vector<SubspaceQ> V;     // V[0] = {0}, ..., V[nilIndex] = everything
  std::vector<int> genNil;      // nilpotent degree of each generator (1-based idx-1)
  std::vector<Eigen::Index> stepDims;  // dim V_i/V_{i-1}
  /// Types k >= excludedTypesFrom admit no left-invariant structure;
  /// -1 when the jump criterion gives no bound (or odd dimension).
  int excludedTypesFrom = -1;
};

/// Throws std::domain_error when the model is not nilpotent.
Filtration filtrationReport(const LieModel& m);

/// Nilpotent degree of a form w.r.t. a filtration (smallest i with
/// a ∈ Λ•V_i); 0 for the zero form.
int nilDegree(const Filtration& f, const Form& a);

/// Pullback of `a` to the span of the given frame, in the frame's dual basis.
/// Throws on a linearly dependent frame.
Form restrictToFrame(const std::vector<VecQ>& frame, const Form& a);

/// Lie derivative along the constant vector X (coords length n).
Form lieDerivative(const LieModel& m, const VecQ& X, const Form& a);

}  // namespace gcg

#endif  // GCGEO_LIEALG_HPP
