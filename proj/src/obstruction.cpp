/* Existence thresholds and Chern-class obstructions for totally real
 * immersions and independent maps into C^N. */

#include "immcalc/obstruction.hpp"

#include <stdexcept>

#include "immcalc/classify4.hpp"

namespace immcalc {

std::string query_kind_name(QueryKind k) {
    return k == QueryKind::TotallyReal ? "totally_real" : "independent";
}

namespace {

int half_top_degree(const GradedElement& u) {
    auto d = top_nonzero_degree(u);
    if (!d)
        throw std::logic_error("internal: total class is zero");
    if (*d % 2 != 0)
        throw std::logic_error("internal: odd top degree in an integral total class");
    return *d / 2;
}

}  // namespace

int min_complement_rank(const ManifoldDescriptor& m) {
    // c(Q) = c(C (x) TM)^-1 and c_j(Q) = 0 above rank Q.
    return half_top_degree(invert_unit(m.chern_complexified()));
}

int min_kernel_rank(const ManifoldDescriptor& m) {
    return half_top_degree(m.chern_complexified());
}

int existence_threshold(int n, QueryKind kind) {
    if (n < 1)
        throw semantic_error("existence threshold: dimension must be >= 1");
    if (kind == QueryKind::TotallyReal) {
        if (n == 1)
            throw unsupported_query(
                "the totally real existence threshold is not determined for 1-manifolds");
        return 3 * n / 2;
    }
    return (n + 1) / 2;
}

TransversalityCheck transversality_check(int n, int target, QueryKind kind) {
    if (n < 1 || target < 1)
        throw semantic_error("transversality check: dimension and target must be >= 1");
    TransversalityCheck out;
    out.dim_m = n;
    if (kind == QueryKind::TotallyReal) {
        // Degenerate locus: complex N x n jet matrices of complex rank < n
        // (the real span of the columns and their J-images drops dimension
        // exactly when the columns are C-dependent).  Complex codimension
        // (N - (n-1))(n - (n-1)), doubled over R.
        out.codim_sigma = 2 * (target - n + 1);
    } else {
        // Degenerate locus: complex N x n jet matrices of complex rank < N.
        out.codim_sigma = 2 * (n - target + 1);
    }
    out.applies = n < out.codim_sigma;
    return out;
}

ObstructionReport obstruction_report(const ManifoldDescriptor& m, QueryKind kind) {
    const int n = m.dimension();
    const bool dim4 = n == 4;
    const bool open_trivial =
        !m.closed() && m.has_rings() && m.sw_total().constant_term() == 1 &&
        m.sw_total().terms().size() == 1 &&
        (!m.has_chern() || m.chern_complexified().terms().size() == 1);
    if (!m.has_chern() && !dim4 && !open_trivial)
        throw unsupported_query("no decision route for " + m.canonical_name() +
                                ": integral Chern data unavailable and dimension is not 4");

    ObstructionReport rep;
    rep.kind = kind;
    rep.manifold = m.canonical_name();
    rep.dimension = n;

    if (m.has_chern()) {
        const GradedElement& c = m.chern_complexified();
        rep.trace.push_back("c(C(x)TM) = " + render(c));
        if (kind == QueryKind::TotallyReal) {
            GradedElement cq = invert_unit(c);
            rep.min_rank = half_top_degree(cq);
            rep.witness_class = render(cq);
            rep.witness_top_degree = 2 * *rep.min_rank;
            rep.trace.push_back("c(Q) = c(C(x)TM)^-1 = " + *rep.witness_class +
                                ", top nonzero degree " +
                                std::to_string(*rep.witness_top_degree) +
                                " forces rank Q >= " + std::to_string(*rep.min_rank));
        } else {
            rep.min_rank = half_top_degree(c);
            rep.witness_class = render(c);
            rep.witness_top_degree = 2 * *rep.min_rank;
            rep.trace.push_back("c(B) = c(C(x)TM) = " + *rep.witness_class +
                                ", top nonzero degree " +
                                std::to_string(*rep.witness_top_degree) +
                                " forces rank B >= " + std::to_string(*rep.min_rank));
        }
    }

    std::optional<Classify4Report> cls;
    if (dim4) {
        cls = classify4(m);
        rep.trace.push_back("dimension 4: consulting the 4-manifold classification");
    }

    if (kind == QueryKind::TotallyReal) {
        // impossible = [1, imp_hi], exists = [ex_lo, inf).
        int imp_hi = n - 1;
        rep.impossible_reason = "a totally real immersion needs rank Q = N - n >= 0";
        if (rep.min_rank && n + *rep.min_rank - 1 > imp_hi) {
            imp_hi = n + *rep.min_rank - 1;
            rep.impossible_reason = "Chern classes force rank Q >= " +
                                    std::to_string(*rep.min_rank) + ", so N >= n + " +
                                    std::to_string(*rep.min_rank);
        }
        std::optional<int> ex_lo;
        if (n >= 2) {
            ex_lo = existence_threshold(n, kind);
            rep.exists_reason =
                "generic maps are totally real embeddings once N >= floor(3n/2) = " +
                std::to_string(*ex_lo);
        } else {
            rep.exists_reason = "no existence threshold is known for 1-manifolds";
        }
        if (cls) {
            Tri c1 = cls->conditions[0].value;  // totally real into C^5
            Tri c2 = cls->conditions[1].value;  // totally real into C^4
            if (c2 == Tri::True) {
                ex_lo = 4;
                rep.exists_reason = "4-manifold classification: " + cls->conditions[1].reason;
            } else if (c1 == Tri::True) {
                ex_lo = std::min(ex_lo.value_or(5), 5);
                rep.exists_reason = "4-manifold classification: " + cls->conditions[0].reason;
            }
            if (c1 == Tri::False && imp_hi < 5) {
                imp_hi = 5;
                rep.impossible_reason =
                    "4-manifold classification: " + cls->conditions[0].reason;
            } else if (c2 == Tri::False && imp_hi < 4) {
                imp_hi = 4;
                rep.impossible_reason =
                    "4-manifold classification: " + cls->conditions[1].reason;
            }
        }
        if (ex_lo && imp_hi >= *ex_lo)
            throw std::logic_error("internal: contradictory ranges for " + m.canonical_name());
        if (imp_hi >= 1)
            rep.impossible = NRange{1, imp_hi};
        if (ex_lo)
            rep.exists = NRange{*ex_lo, std::nullopt};
        int unk_lo = imp_hi + 1;
        if (!ex_lo)
            rep.unknown = NRange{unk_lo, std::nullopt};
        else if (unk_lo <= *ex_lo - 1)
            rep.unknown = NRange{unk_lo, *ex_lo - 1};
    } else {
        // exists = [1, ex_hi], impossible = [imp_lo, inf).
        int imp_lo = n + 1;
        rep.impossible_reason = "an independent map needs rank B = n - N >= 0";
        if (rep.min_rank && n - *rep.min_rank + 1 < imp_lo) {
            imp_lo = n - *rep.min_rank + 1;
            rep.impossible_reason = "Chern classes force rank B >= " +
                                    std::to_string(*rep.min_rank) + ", so N <= n - " +
                                    std::to_string(*rep.min_rank);
        }
        int ex_hi = existence_threshold(n, kind);
        rep.exists_reason =
            "generic maps are independent once N <= floor((n+1)/2) = " + std::to_string(ex_hi);
        if (cls) {
            Tri c3 = cls->conditions[2].value;  // independent into C^3
            Tri c4 = cls->conditions[3].value;  // independent into C^4
            if (c4 == Tri::True) {
                ex_hi = std::max(ex_hi, 4);
                rep.exists_reason = "4-manifold classification: " + cls->conditions[3].reason;
            } else if (c3 == Tri::True) {
                ex_hi = std::max(ex_hi, 3);
                rep.exists_reason = "4-manifold classification: " + cls->conditions[2].reason;
            }
            if (c3 == Tri::False && imp_lo > 3) {
                imp_lo = 3;
                rep.impossible_reason =
                    "4-manifold classification: " + cls->conditions[2].reason;
            } else if (c4 == Tri::False && imp_lo > 4) {
                imp_lo = 4;
                rep.impossible_reason =
                    "4-manifold classification: " + cls->conditions[3].reason;
            }
        }
        if (ex_hi >= imp_lo)
            throw std::logic_error("internal: contradictory ranges for " + m.canonical_name());
        rep.exists = NRange{1, ex_hi};
        rep.impossible = NRange{imp_lo, std::nullopt};
        if (ex_hi + 1 <= imp_lo - 1)
            rep.unknown = NRange{ex_hi + 1, imp_lo - 1};
    }
    return rep;
}

}  // namespace immcalc
