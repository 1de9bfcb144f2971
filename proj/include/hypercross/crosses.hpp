#ifndef HYPERCROSS_CROSSES_HPP
#define HYPERCROSS_CROSSES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "hypercross/bigcount.hpp"
#include "hypercross/weights.hpp"

namespace hypercross {

// One s-block of a cross together with the closed form of its admissible
// k-block: every k with 1 + k_j <= K is admissible, so the block holds K^m
// unsigned points, or (2K-1)^m signed ones.
struct CompressedRecord {
  SparseIndex s;
  long K = 1;                     // k-block radius, >= 1 (1 for m = 0)
  Count128 s_sign_multiplicity = 1;  // 2^{nnz(s)} when y is signed, else 1

  Count128 expanded_count(const CrossSpec& spec) const;
};

struct CrossCount {
  Count128 total = 0;
  long records = 0;
  int active_dim = 0;
  double T = 1.0;
};

// Exact cardinality of the cross at threshold T by depth-first traversal over
// the s coordinates with coordinate-cap pruning and closed-form k-block
// counting. dim_cap truncates the s support to {1..dim_cap}. Deterministic
// for any worker count; overflow raises instead of wrapping.
CrossCount count_cross(const CrossSpec& spec, double T,
                       std::optional<int> dim_cap = std::nullopt);

// Streams the compressed records in lexicographic order of the s entry
// sequence (by coordinate, then value). Sequential and reproducible
// byte-for-byte.
void enumerate_cross(const CrossSpec& spec, double T,
                     const std::function<void(const CompressedRecord&)>& sink,
                     std::optional<int> dim_cap = std::nullopt);

// Unfolds each record into explicit unsigned-representative indices. The
// multiplicity accompanies each index: 2^{nnz(k)} (x signed) times
// 2^{nnz(s)} (y signed); 1 when unsigned.
void enumerate_expanded(const CrossSpec& spec, double T,
                        const std::function<void(const MultiIndex&, Count128)>& sink,
                        std::optional<int> dim_cap = std::nullopt);

std::vector<CompressedRecord> collect_records(const CrossSpec& spec, double T,
                                              std::optional<int> dim_cap = std::nullopt);

// Explicit scan box for the brute-force oracle.
struct BruteBox {
  long k_hi = 0;                // scan k_j (or |k_j|) in [0, k_hi]
  std::vector<long> s_caps;     // scan s_j (or |s_j|) in [0, s_caps[j-1]]
};

BruteBox default_brute_box(const CrossSpec& spec, double T);
double brute_box_points(const CrossSpec& spec, const BruteBox& box);

// Independent oracle: full scan of the box applying log-weight membership,
// iterating genuine signed values for signed variants. Refuses boxes larger
// than 10^8 points. Must equal count_cross on every tested instance.
CrossCount brute_force_count(const CrossSpec& spec, double T,
                             std::optional<BruteBox> box = std::nullopt);

// |{s in Z^d_+ : sum_j rates[j] s_j <= log_budget}| by recursion over
// coordinates. Equals count_cross for the analytic m = 0, p = 0 spec with
// T = exp(log_budget).
Count128 simplex_count(const std::vector<double>& rates, double log_budget);

}  // namespace hypercross

#endif
