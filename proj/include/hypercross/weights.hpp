#ifndef HYPERCROSS_WEIGHTS_HPP
#define HYPERCROSS_WEIGHTS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypercross/errors.hpp"

namespace hypercross {

// Absolute tolerance on natural-log weights. Membership in a cross at
// threshold T means log_weight <= log(T) + kMembershipTol. Test fixtures
// keep T at least 1e-9 away from attainable weights so this never flips
// a membership decision.
inline constexpr double kMembershipTol = 1e-12;

// ---------------------------------------------------------------------------
// Smoothness sequences r_1, r_2, ...: an explicit positive prefix followed by
// a closed-form tail generator. Tail "none" pins the sequence to the prefix
// coordinates only; coordinates beyond it carry an infinite rate and can never
// hold a nonzero index entry.
// ---------------------------------------------------------------------------

enum class TailKind { None, Affine, Power };

struct TailGenerator {
  TailKind kind = TailKind::None;
  double c0 = 0.0;     // affine: r_j = c0 + c1*j
  double c1 = 0.0;
  double omega = 0.0;  // power: r_j = omega * j^tau
  double tau = 0.0;

  static TailGenerator none() { return {}; }
  static TailGenerator affine(double c0, double c1) {
    TailGenerator t;
    t.kind = TailKind::Affine;
    t.c0 = c0;
    t.c1 = c1;
    return t;
  }
  static TailGenerator power(double omega, double tau) {
    TailGenerator t;
    t.kind = TailKind::Power;
    t.omega = omega;
    t.tau = tau;
    return t;
  }
};

class SmoothnessSequence {
public:
  SmoothnessSequence() = default;
  SmoothnessSequence(std::vector<double> prefix, TailGenerator tail)
      : prefix_(std::move(prefix)), tail_(tail) {}

  // 1-based rate r_j; +infinity past the prefix when the tail is "none".
  double rate(long j) const;

  const std::vector<double>& prefix() const { return prefix_; }
  const TailGenerator& tail() const { return tail_; }
  long prefix_length() const { return static_cast<long>(prefix_.size()); }

  // True when every coordinate beyond the prefix has an unbounded rate,
  // i.e. the index support cannot extend past a finite dimension at any T.
  bool finite_support() const { return tail_.kind == TailKind::None; }

  // True when the generated tail rates grow without bound.
  bool tail_unbounded() const;

  bool nondecreasing() const;

private:
  std::vector<double> prefix_;
  TailGenerator tail_;
};

// ---------------------------------------------------------------------------
// Cross specifications.
// ---------------------------------------------------------------------------

struct KorobovParams {
  int t = 0;       // first t+1 coordinates share the rate r
  double r = 1.0;
};

struct AnalyticParams {
  double p = 0.0;  // algebraic prefactor (1 + p s)^(-q)
  double q = 0.0;
};

struct CrossSpec {
  std::variant<KorobovParams, AnalyticParams> family;
  int m = 1;             // spatial block length
  double alpha = 2.0;    // smoothness exponent of the approximated class
  double beta = 1.0;     // smoothness exponent of the error norm
  bool x_signed = false; // k ranges over Z^m instead of Z^m_+
  bool y_signed = false; // s ranges over Z^infinity instead of Z^infinity_+
  SmoothnessSequence seq;

  bool is_korobov() const { return std::holds_alternative<KorobovParams>(family); }
  const KorobovParams& korobov() const { return std::get<KorobovParams>(family); }
  const AnalyticParams& analytic() const { return std::get<AnalyticParams>(family); }
  double a() const { return alpha - beta; }
};

// One point (k, s) of a cross. Signs are never stored; signed variants are
// handled downstream as multiplicities.
struct SparseEntry {
  long coord = 0;  // 1-based
  long value = 0;  // >= 1
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
  friend auto operator<=>(const SparseEntry&, const SparseEntry&) = default;
};

using SparseIndex = std::vector<SparseEntry>;  // sorted by coord, values >= 1

struct MultiIndex {
  std::vector<long> k;  // length m, entries >= 0
  SparseIndex s;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// Deterministic ordering: k vectors lexicographically, then the s entry
// sequences lexicographically. Used for coefficient maps and tie-breaking.
bool index_less(const MultiIndex& a, const MultiIndex& b);

struct MultiIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return index_less(a, b);
  }
};

int sparse_nnz(const SparseIndex& s);

// ---------------------------------------------------------------------------
// Validation and hypothesis checks.
// ---------------------------------------------------------------------------

// Advisory flags: whether the cardinality theorems applicable to the spec's
// family hold. Validation succeeds regardless; bounds refuse later when a
// flag is false.
struct HypothesisFlags {
  bool ok = false;
  std::vector<std::string> violations;
};

// Throws a ValidationError subclass when a type invariant is broken,
// otherwise returns the spec unchanged.
CrossSpec validate_spec(const CrossSpec& spec);

HypothesisFlags check_hypotheses(const CrossSpec& spec);

// ---------------------------------------------------------------------------
// Log-space weight evaluation. The weight here is the ratio lambda/nu, so its
// k-part exponent is a = alpha - beta; the full norms live in the approx
// module.
// ---------------------------------------------------------------------------

// Per-coordinate s factor in log space.
//   Korobov:  r_j * log(1 + s)
//   Analytic: r_j * s - q * log(1 + p*s)
double log_s_factor(const CrossSpec& spec, long j, long s);

// Sum of the s factors of a sparse index.
double log_s_weight(const CrossSpec& spec, const SparseIndex& s);

// a * log(max_j (1 + k_j)); 0 for m = 0.
double log_k_weight(const CrossSpec& spec, const std::vector<long>& k);

double log_weight(const CrossSpec& spec, const MultiIndex& idx);

// Largest coordinate that can carry a nonzero s entry at threshold T; 0 when
// none. For Korobov and analytic p = 0 this is the largest j whose unit index
// e_j stays inside the cross. For analytic p > 0 the per-coordinate factor
// may dip below 1, so other coordinates can subsidize the budget; the scan
// then uses the coordinate-cap criterion at log T plus the total dip.
int active_dimension(const CrossSpec& spec, double T);

// Largest S >= 0 with log_s_factor(spec, j, S) <= log_budget + tol, together
// with the guarantee that every larger value exceeds the budget (the factor
// is eventually monotone for p > 0 and monotone otherwise).
long coordinate_cap(const CrossSpec& spec, long j, double log_budget);

// Sum over coordinates of max(0, -min_{s>=1} log_s_factor(j, s)): the total
// budget subsidy available from factors below 1. Zero unless analytic p > 0.
double total_dip(const CrossSpec& spec);

}  // namespace hypercross

#endif
