#pragma once

#include <random>
#include <set>
#include <string>

#include "bottbord/charmatrix.hpp"

namespace bottbord {

enum class FamilyKind { Triangular, Cyclic, BoundedEntry, Explicit };

struct FamilySpec {
    std::vector<int> dims;
    CoeffMode mode = CoeffMode::Mod2;
    FamilyKind kind = FamilyKind::Triangular;
    int entry_bound = 1;     // triangular / bounded-entry integer families
    long long prod_b = 2;    // cyclic: required product of the b-vector
    int max_abs_b = 2;       // cyclic: |b_i| bound
    long long cap = 1000000; // emitted-instance cap
    std::vector<std::vector<std::vector<long long>>> explicit_rows;
};

struct EnumeratedFamily {
    std::vector<ReducedVectorMatrix> matrices;
    long long skipped = 0; // candidates failing the vertex condition
};

// Deterministic, exhaustive up to the cap; every emitted matrix passes
// validate_characteristic.
EnumeratedFamily enum_family(const FamilySpec& spec);

struct BatchSummary {
    long long total = 0;
    long long sw_nonzero = 0;
    long long pontryagin_nonzero = 0;
    long long skipped = 0;
};

// Evaluates every instance of the family (worker pool, deterministic
// emission order) and appends one JSON line per instance to out_path.
// tasks may contain "sw" and/or "pontryagin"; empty means both.
BatchSummary batch_run(const FamilySpec& spec, const std::set<std::string>& tasks,
                       const std::string& out_path, int threads = 0);

int default_thread_count(); // BOTTBORD_THREADS or hardware concurrency

// Rejection sampler over free entries; diagonal blocks stay 1.
ReducedVectorMatrix random_valid_matrix(const std::vector<int>& dims, CoeffMode mode,
                                        int bound, std::mt19937_64& rng);

// Strictly-upper free entries only; always valid.
ReducedVectorMatrix random_triangular_matrix(const std::vector<int>& dims, CoeffMode mode,
                                             int bound, std::mt19937_64& rng);

} // namespace bottbord
