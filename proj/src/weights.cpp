#include "hypercross/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypercross {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Hard stop for cap scans; a cap that large means the enumeration would never
// finish anyway, and counting reports overflow long before.
constexpr long kScanLimit = 2'000'000'000L;

}  // namespace

double SmoothnessSequence::rate(long j) const {
  if (j <= 0) throw InvalidParameterError("sequence coordinate must be >= 1");
  if (j <= prefix_length()) return prefix_[static_cast<size_t>(j - 1)];
  switch (tail_.kind) {
    case TailKind::None:
      return kInf;
    case TailKind::Affine:
      return tail_.c0 + tail_.c1 * static_cast<double>(j);
    case TailKind::Power:
      return tail_.omega * std::pow(static_cast<double>(j), tail_.tau);
  }
  return kInf;
}

bool SmoothnessSequence::tail_unbounded() const {
  switch (tail_.kind) {
    case TailKind::None:
      return true;  // rates are +infinity past the prefix
    case TailKind::Affine:
      return tail_.c1 > 0.0;
    case TailKind::Power:
      return tail_.omega > 0.0 && tail_.tau > 0.0;
  }
  return false;
}

bool SmoothnessSequence::nondecreasing() const {
  for (long j = 1; j < prefix_length(); ++j)
    if (rate(j + 1) < rate(j)) return false;
  if (tail_.kind == TailKind::None) return true;
  // seam and generator monotonicity
  if (prefix_length() >= 1 && rate(prefix_length() + 1) < rate(prefix_length()))
    return false;
  if (tail_.kind == TailKind::Affine) return tail_.c1 >= 0.0;
  return tail_.tau > 0.0;  // power with omega, tau > 0 is increasing
}

bool index_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.k != b.k) return a.k < b.k;
  return a.s < b.s;
}

int sparse_nnz(const SparseIndex& s) { return static_cast<int>(s.size()); }

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

void validate_sequence(const CrossSpec& spec) {
  const SmoothnessSequence& seq = spec.seq;
  for (long j = 1; j <= seq.prefix_length(); ++j)
    if (!(seq.rate(j) > 0.0) || !std::isfinite(seq.rate(j)))
      throw NonPositiveRateError("rate r_" + std::to_string(j) + " must be positive");
  const TailGenerator& tail = seq.tail();
  switch (tail.kind) {
    case TailKind::None:
      break;
    case TailKind::Affine: {
      if (tail.c1 < 0.0)
        throw NonMonotoneSequenceError("affine tail slope must be >= 0");
      double first = seq.rate(seq.prefix_length() + 1);
      if (!(first > 0.0))
        throw NonPositiveRateError("affine tail produces nonpositive rates");
      break;
    }
    case TailKind::Power:
      if (!(tail.omega > 0.0))
        throw NonPositiveRateError("power tail needs omega > 0");
      if (!(tail.tau > 0.0))
        throw NonMonotoneSequenceError("power tail needs tau > 0");
      break;
  }
}

}  // namespace

CrossSpec validate_spec(const CrossSpec& spec) {
  if (spec.m < 0) throw InvalidParameterError("m must be >= 0");
  if (!(spec.alpha > spec.beta) || spec.beta < 0.0)
    throw BadExponentsError("need alpha > beta >= 0");
  validate_sequence(spec);

  if (spec.is_korobov()) {
    const KorobovParams& kp = spec.korobov();
    if (spec.m == 0)
      throw UnsupportedZeroMError("m = 0 is supported only for analytic p = 0");
    if (kp.t < 0) throw InvalidParameterError("t must be >= 0");
    if (!(kp.r > 0.0)) throw NonPositiveRateError("Korobov rate r must be positive");
    for (long j = 1; j <= kp.t + 1; ++j) {
      double rj = spec.seq.rate(j);
      if (rj != kp.r)
        throw BadPrefixBlockError("r_1..r_{t+1} must all equal r exactly");
    }
    if (!spec.seq.nondecreasing())
      throw NonMonotoneSequenceError("Korobov sequence must be nondecreasing");
  } else {
    const AnalyticParams& ap = spec.analytic();
    if (ap.p < 0.0 || ap.q < 0.0)
      throw InvalidParameterError("need p >= 0 and q >= 0");
    if (ap.p > 0.0 && !(ap.q > 0.0))
      throw InvalidParameterError("p > 0 requires q > 0");
    if (spec.m == 0 && ap.p > 0.0)
      throw UnsupportedZeroMError("m = 0 is supported only for analytic p = 0");
  }
  return spec;
}

HypothesisFlags check_hypotheses(const CrossSpec& spec) {
  HypothesisFlags flags;
  flags.ok = true;
  auto fail = [&flags](const std::string& why) {
    flags.ok = false;
    flags.violations.push_back(why);
  };

  if (spec.m == 0) {
    fail("cardinality theorems require m >= 1");
    return flags;
  }
  double a = spec.a();
  if (spec.is_korobov()) {
    const KorobovParams& kp = spec.korobov();
    double lambda = std::max(static_cast<double>(spec.m) / a, 1.0 / kp.r);
    double r_next = spec.seq.rate(kp.t + 2);
    if (!(lambda * r_next > 1.0))
      fail("need lambda * r_{t+2} > 1");
    if (!spec.seq.tail_unbounded())
      fail("M(t) diverges: tail rates do not grow");
  } else {
    const AnalyticParams& ap = spec.analytic();
    if (!spec.seq.tail_unbounded())
      fail("M diverges: tail rates do not grow");
    if (ap.p > 0.0) {
      double threshold = (ap.q + std::sqrt(ap.q * a / spec.m)) / ap.p;
      // The conditions must hold for all j. Checking the prefix plus the
      // first generated tail rate suffices: generated tails are nondecreasing.
      long probe = spec.seq.prefix_length() + (spec.seq.finite_support() ? 0 : 1);
      for (long j = 1; j <= probe; ++j) {
        double rj = spec.seq.rate(j);
        if (!(rj > ap.p * ap.q)) {
          fail("need r_j > p*q for all j");
          break;
        }
        if (!(rj >= threshold)) {
          fail("need r_j >= (q + sqrt(q*a/m)) / p for all j");
          break;
        }
      }
    }
  }
  return flags;
}

// ---------------------------------------------------------------------------
// Weight evaluation
// ---------------------------------------------------------------------------

double log_s_factor(const CrossSpec& spec, long j, long s) {
  if (s < 0) throw InvalidParameterError("s entries must be >= 0");
  if (s == 0) return 0.0;
  double r = spec.seq.rate(j);
  if (std::isinf(r)) return kInf;
  if (spec.is_korobov())
    return r * std::log1p(static_cast<double>(s));
  const AnalyticParams& ap = spec.analytic();
  return r * static_cast<double>(s) - ap.q * std::log1p(ap.p * static_cast<double>(s));
}

double log_s_weight(const CrossSpec& spec, const SparseIndex& s) {
  double w = 0.0;
  for (const SparseEntry& e : s) w += log_s_factor(spec, e.coord, e.value);
  return w;
}

double log_k_weight(const CrossSpec& spec, const std::vector<long>& k) {
  if (static_cast<int>(k.size()) != spec.m)
    throw InvalidParameterError("k must have length m");
  long maxk = 0;
  for (long v : k) {
    if (v < 0) throw InvalidParameterError("k entries must be >= 0");
    maxk = std::max(maxk, v);
  }
  if (spec.m == 0) return 0.0;
  return spec.a() * std::log1p(static_cast<double>(maxk));
}

double log_weight(const CrossSpec& spec, const MultiIndex& idx) {
  return log_k_weight(spec, idx.k) + log_s_weight(spec, idx.s);
}

// ---------------------------------------------------------------------------
// Caps, dips, active dimension
// ---------------------------------------------------------------------------

long coordinate_cap(const CrossSpec& spec, long j, double log_budget) {
  double r = spec.seq.rate(j);
  if (std::isinf(r)) return 0;
  if (spec.is_korobov()) {
    // monotone factor: largest S with r*log(1+S) <= budget
    if (log_budget < -kMembershipTol) return 0;
    long cap = static_cast<long>(std::floor(std::exp(log_budget / r))) - 1;
    cap = std::max(cap, 0L);
    while (log_s_factor(spec, j, cap + 1) <= log_budget + kMembershipTol) ++cap;
    while (cap > 0 && log_s_factor(spec, j, cap) > log_budget + kMembershipTol) --cap;
    return cap;
  }
  // Analytic: the factor may dip before growing; scan until it is both above
  // the budget and increasing, which certifies every later value exceeds it
  // (consecutive differences r - q*log((1+p(s+1))/(1+ps)) are nondecreasing).
  long cap = 0;
  double prev = 0.0;
  for (long s = 1; s <= kScanLimit; ++s) {
    double f = log_s_factor(spec, j, s);
    if (f <= log_budget + kMembershipTol) cap = s;
    else if (f > prev) return cap;
    prev = f;
  }
  throw InvalidParameterError("coordinate cap scan exceeded limit");
}

double total_dip(const CrossSpec& spec) {
  if (spec.is_korobov()) return 0.0;
  const AnalyticParams& ap = spec.analytic();
  if (ap.p == 0.0 || ap.q == 0.0) return 0.0;

  // dip of one coordinate: -min_{s>=1} f(s) when negative
  auto dip_at = [&spec](long j) {
    double lo = 0.0;
    double prev = kInf;
    for (long s = 1; s <= kScanLimit; ++s) {
      double f = log_s_factor(spec, j, s);
      lo = std::min(lo, f);
      if (f >= prev && f >= 0.0) break;
      prev = f;
    }
    return -lo;
  };

  double total = 0.0;
  long L = spec.seq.prefix_length();
  for (long j = 1; j <= L; ++j) total += dip_at(j);
  if (spec.seq.finite_support()) return total;
  // generated tail: rates nondecreasing, so once a coordinate has no dip the
  // later ones cannot dip either
  for (long j = L + 1; j <= kScanLimit; ++j) {
    double d = dip_at(j);
    if (d <= 0.0) return total;
    total += d;
    if (!spec.seq.tail_unbounded())
      throw DivergesError("constant tail rates dip on every coordinate");
  }
  throw InvalidParameterError("dip scan exceeded limit");
}

int active_dimension(const CrossSpec& spec, double T) {
  if (!(T >= 1.0)) throw BadThresholdError("active dimension needs T >= 1");
  double budget = std::log(T) + total_dip(spec);

  auto usable = [&](long j) { return coordinate_cap(spec, j, budget) >= 1; };

  int d = 0;
  long L = spec.seq.prefix_length();
  for (long j = 1; j <= L; ++j)
    if (usable(j)) d = static_cast<int>(j);
  if (spec.seq.finite_support()) return d;

  // Generated tail rates are nondecreasing, so the minimal factor of
  // coordinate j is nondecreasing in j: once a coordinate is unusable the
  // scan can stop.
  for (long j = L + 1; j <= kScanLimit; ++j) {
    if (!usable(j)) return d;
    if (!spec.seq.tail_unbounded())
      throw DivergesError("cross is infinite: constant tail rate fits at every coordinate");
    d = static_cast<int>(j);
  }
  throw InvalidParameterError("active dimension scan exceeded limit");
}

}  // namespace hypercross
