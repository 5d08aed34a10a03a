#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dalie/exactla/sparse.hpp"
#include "dalie/rep/weight.hpp"

namespace dalie::rep {

/// A module vector, or nullopt when some term left the truncation window.
using MaybeVector = std::optional<SparseVector>;

/// Finite truncation of a weight module: basis labels, weights and a letter
/// action. Letter actions are memoized; all public methods are thread safe.
class WeightModule {
 public:
  explicit WeightModule(liecore::AlgebraPtr g) : g_(std::move(g)) {}
  virtual ~WeightModule() = default;
  WeightModule(const WeightModule&) = delete;
  WeightModule& operator=(const WeightModule&) = delete;

  const liecore::AlgebraPtr& algebra() const { return g_; }
  virtual std::size_t dim() const = 0;
  virtual const TorWeight& weight(std::size_t i) const = 0;
  virtual std::string label(std::size_t i) const = 0;
  /// Generators used for closures and module-axiom checks.
  virtual std::vector<TorElement> generators() const = 0;
  /// Raising generators whose joint kernel defines highest-weight vectors.
  virtual std::vector<TorElement> raising_generators() const = 0;
  /// JSON object describing the module and its truncation.
  virtual std::string descriptor() const = 0;
  /// false when the t2-degree is not a grading (evaluation modules)
  virtual bool d2_graded() const { return true; }

  /// Letter acting on basis vector i.
  MaybeVector act_basis(const Letter& l, std::size_t i) const;

 protected:
  virtual MaybeVector compute(const Letter& l, std::size_t i) const = 0;

 private:
  liecore::AlgebraPtr g_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Letter, std::size_t>, MaybeVector> cache_;
};

using ModulePtr = std::shared_ptr<const WeightModule>;

MaybeVector act(const WeightModule& m, const Letter& l, const SparseVector& v);
MaybeVector act(const WeightModule& m, const TorElement& e, const SparseVector& v);
/// factors[0] ... factors.back() applied to v (last factor first).
MaybeVector act_word(const WeightModule& m, const std::vector<TorElement>& factors, const SparseVector& v);

/// Basis vectors grouped by weight.
std::map<TorWeight, std::vector<std::size_t>> weight_spaces(const WeightModule& m);

struct Closure {
  std::vector<SparseVector> basis;  // reduced echelon rows
  bool loss = false;                // some generator image left the window
  std::size_t dim() const { return basis.size(); }
};

/// Least subspace containing the seeds and stable under `generators` (the
/// module's generators when empty), as far as images stay in the window.
/// Vectors are split into weight components first (finite part for the
/// default generators, d1/d2 when those are generators), so a mixed seed
/// does not lose the directions whose images stay in the window.
Closure submodule_closure(const WeightModule& m, const std::vector<SparseVector>& seeds,
                          const std::vector<TorElement>& generators = {});
bool closure_contains(const Closure& c, const SparseVector& v);

struct HighestWeightSpace {
  TorWeight weight;
  std::vector<SparseVector> vectors;
  bool loss = false;  // some raising image left the window; vectors exclude those directions
};

/// Joint kernel of the raising generators in each weight space.
std::vector<HighestWeightSpace> highest_weight_vectors(const WeightModule& m,
                                                       const std::vector<TorElement>& raising = {});

/// Weight -> dimension.
std::map<TorWeight, std::size_t> character(const WeightModule& m);
std::string character_json(const WeightModule& m);

/// Counts basis vectors and generator pairs on which
/// act([a,b]) != act(a)act(b) - act(b)act(a); pairs with window loss are skipped.
struct AxiomReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::string witness;
};
AxiomReport module_axiom_check(const WeightModule& m, const std::vector<TorElement>& generators = {});

/// Each generator maps V_μ into V_{μ+root}; returns the number of violations.
std::size_t grading_violations(const WeightModule& m, const std::vector<TorElement>& generators = {});

/// Operator of a letter combination as a map basis index -> image (loss entries omitted).
std::map<std::size_t, SparseVector> operator_matrix(const WeightModule& m, const TorElement& e, bool* loss = nullptr);

/// Weight-preserving linear maps commuting with the generators on every
/// loss-free basis vector.
std::vector<SparseMatrix> endomorphisms(const WeightModule& m, const std::vector<TorElement>& generators = {});
/// True when every endomorphism is a scalar plus a nilpotent and the
/// nilpotent parts form a nilpotent algebra (no nontrivial idempotents).
bool endomorphism_algebra_is_local(const std::vector<SparseMatrix>& endos, std::size_t dim);

}  // namespace dalie::rep
