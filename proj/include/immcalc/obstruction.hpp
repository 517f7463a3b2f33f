#pragma once

#include <optional>
#include <string>
#include <vector>

#include "immcalc/catalog.hpp"

namespace immcalc {

enum class QueryKind { TotallyReal, Independent };

std::string query_kind_name(QueryKind k);

// Inclusive range of target dimensions N; no hi means unbounded above.
struct NRange {
    int lo = 1;
    std::optional<int> hi;
};

// Certified existence / non-existence ranges for one manifold and one query
// kind.  The three ranges partition the N axis (N >= 1): for totally real
// immersions `impossible` is downward-closed and `exists` upward-closed; for
// independent maps the closures are reversed.
struct ObstructionReport {
    QueryKind kind = QueryKind::TotallyReal;
    std::string manifold;
    int dimension = 0;
    std::optional<NRange> impossible;
    std::optional<NRange> exists;
    std::optional<NRange> unknown;
    std::string impossible_reason;
    std::string exists_reason;
    std::optional<int> min_rank;  // complement (tri) or kernel (indep) rank bound
    std::optional<std::string> witness_class;  // rendered c(Q) resp. c(B)
    std::optional<int> witness_top_degree;
    std::vector<std::string> trace;
};

// Least possible rank of a bundle Q with (C (x) TM) + Q trivial, read off the
// top nonzero degree of the inverse total Chern class.
int min_complement_rank(const ManifoldDescriptor& m);

// Least possible rank of a bundle B with C (x) TM = (trivial) + B.
int min_kernel_rank(const ManifoldDescriptor& m);

// Generic-map threshold: totally real immersions exist into C^N for all
// N >= floor(3n/2) (n >= 2); independent maps for all 1 <= N <= floor((n+1)/2).
int existence_threshold(int n, QueryKind kind);

struct TransversalityCheck {
    bool applies = false;
    int dim_m = 0;
    int codim_sigma = 0;  // <= 0 means the degenerate jet locus has full dimension
};

// Codimension of the degenerate one-jet locus for maps M^n -> C^N, and whether
// generic maps avoid it (dim M < codim Sigma).
TransversalityCheck transversality_check(int n, int target, QueryKind kind);

ObstructionReport obstruction_report(const ManifoldDescriptor& m, QueryKind kind);

}  // namespace immcalc
