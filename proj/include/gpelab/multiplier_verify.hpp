#pragma once
//
// Closed-form multiplier functions arising from the I-method commutator
// estimates, the dyadic case regions in which pointwise bounds are claimed,
// and a randomized sampler that checks each claim.
//
// Conventions: frequency tuples xi_1..xi_k in R^3 with xi_1 + ... + xi_k = 0.
// "A >> B" is realized as A >= 8B, "A ~ B" as max/min <= 2, and ">~" as >=.
//
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpelab/spectral.hpp"

namespace gpelab {

using FrequencyTuple = std::vector<Vec3>;
using TupleFunction = std::function<double(const FrequencyTuple&, double N, double s)>;

struct MultiplierExpr {
    std::string label;
    int arity;  // tuple length including the frequency fixed by the zero sum
    TupleFunction evaluator;
    std::vector<std::vector<int>> symmetric_groups;  // index sets the expression is symmetric in
};

struct CaseRegion {
    std::string label;
    int arity;
    int dependent;  // index solved from the zero sum
    // Per-index magnitude windows as multiples of N, intersected with [1/64, 64].
    std::vector<double> lo;
    std::vector<double> hi;
    // Remaining constraints on the magnitudes (ordering, ratios).
    std::function<bool(const std::vector<double>& mags, double N)> predicate;
    std::string note;  // non-empty when the region encodes a resolved ambiguity
};

struct ClaimedBound {
    CaseRegion region;
    TupleFunction bound;
    std::string source;
    double s_min = 0.5;  // smallest s for which the claim is made
};

/// Evaluate with the singular guard: any |xi_i| < 1e-9 -> SingularInput.
double eval_multiplier(const MultiplierExpr& expr, const FrequencyTuple& xis, double N, double s);

/// Rejection sampler: independent magnitudes log-uniform inside their windows,
/// directions uniform on the sphere, the dependent frequency from the zero sum.
/// Throws InfeasibleRegion when no sample is accepted within the attempt budget.
struct RegionSample {
    std::vector<FrequencyTuple> tuples;
    std::uint64_t attempts = 0;
};
RegionSample sample_region(const CaseRegion& region, double N, int count, std::uint64_t seed);

bool region_contains(const CaseRegion& region, const FrequencyTuple& xis, double N);

struct PerNReport {
    double N;
    double max_ratio = 0.0;
    FrequencyTuple witness;
    int samples = 0;
    int singular_rejections = 0;
    std::uint64_t attempts = 0;
};

struct VerifyReport {
    std::string expr;
    std::string region;
    std::string source;
    std::string note;
    double s;
    std::vector<PerNReport> per_N;
    double max_ratio = 0.0;
    FrequencyTuple witness;
    double witness_N = 0.0;
    double slope = 0.0;
    double cap = 64.0;
    double slope_cap = 0.1;
    bool passed = false;
};

struct VerifyOptions {
    double s = 0.75;
    double cap = 64.0;
    double slope_cap = 0.1;
    int threads = 1;
};

/// Every N reuses the same sample seed (common random numbers); the slope of
/// the per-N maxima therefore isolates N-dependence from sampling noise.
VerifyReport verify_bound(const MultiplierExpr& expr, const ClaimedBound& claim,
                          const std::vector<double>& N_list, int samples_per_N, std::uint64_t seed,
                          const VerifyOptions& opts = {});

struct CatalogEntry {
    const MultiplierExpr* expr;
    ClaimedBound claim;
};

/// All encoded multipliers (stable storage).
const std::vector<MultiplierExpr>& multiplier_exprs();
const MultiplierExpr& multiplier_expr(const std::string& label);
/// Every (expression, case, claimed bound) triple.
std::vector<CatalogEntry> multiplier_catalog();

}  // namespace gpelab
