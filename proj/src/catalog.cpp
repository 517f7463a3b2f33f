/* Catalog manifolds: primitives, products and connected sums together with
 * their cohomology presentations and stored characteristic classes. */

#include "immcalc/catalog.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace immcalc {

std::optional<Family> family_from_string(std::string_view s) {
    if (s == "CP") return Family::CP;
    if (s == "RP") return Family::RP;
    if (s == "S") return Family::S;
    if (s == "T") return Family::T;
    if (s == "R") return Family::R;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::CP: return "CP";
        case Family::RP: return "RP";
        case Family::S: return "S";
        case Family::T: return "T";
        case Family::R: return "R";
    }
    return "?";
}

namespace {

// Static data of one primitive factor: generator blueprints carry base names,
// renamed later when factors are combined.
struct FactorPlan {
    PrimitiveSpec spec;
    int dim = 0;
    bool orientable = true;
    bool closed = true;
    std::vector<Generator> mod2_gens;
    std::vector<Generator> z_gens;
    bool has_integral = true;
    std::vector<int> fund_mod2;  // exponents of the factor's top mod-2 monomial
    std::vector<int> fund_z;     // integral counterpart (CP factors only)
};

FactorPlan plan_primitive(Family f, int n) {
    FactorPlan p;
    p.spec = {f, n};
    switch (f) {
        case Family::CP:
            // H*(CP^n; Z/2) = Z/2[a]/(a^{n+1}), deg a = 2; w = (1+a)^{n+1}.
            p.dim = 2 * n;
            p.mod2_gens = {{"a", 2, n + 1, 0}};
            p.z_gens = {{"a", 2, n + 1, 0}};
            p.fund_mod2 = {n};
            p.fund_z = {n};
            break;
        case Family::RP:
            // H*(RP^n; Z/2) = Z/2[x]/(x^{n+1}); w = (1+x)^{n+1}.
            p.dim = n;
            p.orientable = (n % 2 == 1);
            p.mod2_gens = {{"x", 1, n + 1, 0}};
            p.fund_mod2 = {n};
            if (n == 2) {
                // H^2(RP^2; Z) = Z/2 generated by the Chern class b of the
                // complexified tautological line bundle.
                p.z_gens = {{"b", 2, 2, 2}};
                p.fund_z = {0};
            } else {
                p.has_integral = false;
            }
            break;
        case Family::S:
            // Stably parallelizable; the top generator exists only to make
            // fundamental-class pairings total and never enters any class.
            p.dim = n;
            p.mod2_gens = {{"s", n, 2, 0}};
            p.fund_mod2 = {1};
            break;
        case Family::T:
            p.dim = n;
            p.mod2_gens.reserve(n);
            p.fund_mod2.assign(n, 1);
            for (int i = 1; i <= n; ++i)
                p.mod2_gens.push_back({"t" + std::to_string(i), 1, 2, 0});
            break;
        case Family::R:
            p.dim = n;
            p.closed = false;
            break;
    }
    return p;
}

// Suffix repeated base names by occurrence index (a, a -> a1, a2); if that
// still collides, suffix every generator of factor i with _i instead.
std::vector<std::vector<std::string>> resolve_names(
    const std::vector<std::vector<std::string>>& base) {
    std::map<std::string, int> mult;
    for (const auto& f : base)
        for (const auto& n : f)
            ++mult[n];
    std::vector<std::vector<std::string>> out(base.size());
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const auto& n : base[i])
            out[i].push_back(mult[n] > 1 ? n + std::to_string(++seen[n]) : n);
    std::set<std::string> all;
    bool unique = true;
    for (const auto& f : out)
        for (const auto& n : f)
            unique = all.insert(n).second && unique;
    if (!unique)
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = 0; j < base[i].size(); ++j)
                out[i][j] = base[i][j] + "_" + std::to_string(i + 1);
    return out;
}

GradedElement factor_w(const FactorPlan& p, const PresentationPtr& ring, std::size_t offset) {
    GradedElement one = GradedElement::unit(ring);
    switch (p.spec.family) {
        case Family::CP:
        case Family::RP:
            return pow(one + GradedElement::generator(ring, offset), p.spec.n + 1);
        default:
            return one;  // S, T, R are stably parallelizable
    }
}

GradedElement factor_c(const FactorPlan& p, const PresentationPtr& ring, std::size_t offset) {
    GradedElement one = GradedElement::unit(ring);
    switch (p.spec.family) {
        case Family::CP: {
            // c(C (x) TCP^n) = c(T^{1,0}) c(conj T^{1,0}) = (1+a)^{n+1}(1-a)^{n+1}.
            GradedElement a = GradedElement::generator(ring, offset);
            return pow(one - a * a, p.spec.n + 1);
        }
        case Family::RP:
            // T(RP^2) + e = 3 gamma, so c(C (x) T) = (1+b)^3 = 1 + 3b (2b = 0).
            return one + scalar_mul(GradedElement::generator(ring, offset), 3);
        default:
            return one;
    }
}

std::string wrap_summand(const ManifoldDescriptor& m) {
    return m.kind() == ManifoldDescriptor::Kind::Primitive ? m.canonical_name()
                                                           : "(" + m.canonical_name() + ")";
}

}  // namespace

const PresentationPtr& ManifoldDescriptor::mod2_ring() const {
    if (!has_rings())
        throw unsupported_query("ring-wise classes are not defined for connected sums (" +
                                name_ + ")");
    return mod2_ring_;
}

const GradedElement& ManifoldDescriptor::sw_total() const {
    if (!has_rings())
        throw unsupported_query("ring-wise classes are not defined for connected sums (" +
                                name_ + ")");
    return *w_total_;
}

GradedElement ManifoldDescriptor::dual_sw_total() const { return invert_unit(sw_total()); }

const GradedElement& ManifoldDescriptor::chern_complexified() const {
    if (!has_rings())
        throw unsupported_query("ring-wise classes are not defined for connected sums (" +
                                name_ + ")");
    if (!c_complexified_)
        throw unsupported_query("integral Chern data is not available for " + name_);
    return *c_complexified_;
}

const PresentationPtr& ManifoldDescriptor::integral_ring() const {
    chern_complexified();  // raises when unavailable
    return integral_ring_;
}

const std::vector<GradedElement>& ManifoldDescriptor::mod2_images() const {
    chern_complexified();
    return mod2_images_;
}

const Monomial& ManifoldDescriptor::fundamental_mod2() const {
    if (!has_rings())
        throw unsupported_query("ring-wise classes are not defined for connected sums (" +
                                name_ + ")");
    if (!fundamental_mod2_)
        throw unsupported_query("no fundamental class: " + name_ + " is open");
    return *fundamental_mod2_;
}

ManifoldDescriptor ManifoldDescriptor::from_factors(std::vector<PrimitiveSpec> factors) {
    std::vector<FactorPlan> plans;
    plans.reserve(factors.size());
    for (const auto& s : factors)
        plans.push_back(plan_primitive(s.family, s.n));

    ManifoldDescriptor out;
    out.kind_ = factors.size() == 1 ? Kind::Primitive : Kind::Product;
    out.factors_ = std::move(factors);
    out.dimension_ = 0;
    out.orientable_ = true;
    out.closed_ = true;
    bool has_integral = true;
    for (const auto& p : plans) {
        out.dimension_ += p.dim;
        out.orientable_ = out.orientable_ && p.orientable;
        out.closed_ = out.closed_ && p.closed;
        has_integral = has_integral && p.has_integral;
        if (!out.name_.empty())
            out.name_ += "*";
        out.name_ += family_name(p.spec.family) + std::to_string(p.spec.n);
    }

    // Rename generators of both presentations factor by factor.
    std::vector<std::vector<std::string>> mod2_base(plans.size()), z_base(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
        for (const auto& g : plans[i].mod2_gens)
            mod2_base[i].push_back(g.name);
        for (const auto& g : plans[i].z_gens)
            z_base[i].push_back(g.name);
    }
    auto mod2_names = resolve_names(mod2_base);
    auto z_names = resolve_names(z_base);

    std::vector<Generator> mod2_gens, z_gens;
    std::vector<std::size_t> mod2_off(plans.size()), z_off(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
        mod2_off[i] = mod2_gens.size();
        z_off[i] = z_gens.size();
        for (std::size_t j = 0; j < plans[i].mod2_gens.size(); ++j) {
            Generator g = plans[i].mod2_gens[j];
            g.name = mod2_names[i][j];
            mod2_gens.push_back(std::move(g));
        }
        for (std::size_t j = 0; j < plans[i].z_gens.size(); ++j) {
            Generator g = plans[i].z_gens[j];
            g.name = z_names[i][j];
            z_gens.push_back(std::move(g));
        }
    }

    out.mod2_ring_ = make_presentation(std::move(mod2_gens), out.dimension_, CoeffMode::Mod2);
    GradedElement w = GradedElement::unit(out.mod2_ring_);
    for (std::size_t i = 0; i < plans.size(); ++i)
        w = w * factor_w(plans[i], out.mod2_ring_, mod2_off[i]);
    if (w.constant_term() != 1)
        throw std::logic_error("internal: total Stiefel-Whitney class of " + out.name_ +
                               " lost its constant term");
    out.w_total_ = w;

    if (has_integral) {
        out.integral_ring_ =
            make_presentation(std::move(z_gens), out.dimension_, CoeffMode::Integer);
        GradedElement c = GradedElement::unit(out.integral_ring_);
        for (std::size_t i = 0; i < plans.size(); ++i)
            c = c * factor_c(plans[i], out.integral_ring_, z_off[i]);
        out.c_complexified_ = c;
        for (std::size_t i = 0; i < plans.size(); ++i) {
            switch (plans[i].spec.family) {
                case Family::CP:
                    out.mod2_images_.push_back(
                        GradedElement::generator(out.mod2_ring_, mod2_off[i]));
                    break;
                case Family::RP: {
                    GradedElement x = GradedElement::generator(out.mod2_ring_, mod2_off[i]);
                    out.mod2_images_.push_back(x * x);
                    break;
                }
                default:
                    break;
            }
        }
        // Complexification bridge: mod-2 reduction of c(C (x) TM) must equal w(M)^2.
        if (!(reduce_mod2(c, out.mod2_ring_, out.mod2_images_) == w * w))
            throw std::logic_error("internal: complexification bridge failed for " + out.name_);
    }

    if (out.closed_) {
        std::vector<int> fexp(out.mod2_ring_->generators().size(), 0);
        for (std::size_t i = 0; i < plans.size(); ++i)
            for (std::size_t j = 0; j < plans[i].fund_mod2.size(); ++j)
                fexp[mod2_off[i] + j] = plans[i].fund_mod2[j];
        out.fundamental_mod2_ = Monomial(*out.mod2_ring_, fexp);
        if (has_integral) {
            std::vector<int> zexp(out.integral_ring_->generators().size(), 0);
            for (std::size_t i = 0; i < plans.size(); ++i)
                for (std::size_t j = 0; j < plans[i].fund_z.size(); ++j)
                    zexp[z_off[i] + j] = plans[i].fund_z[j];
            out.fundamental_integral_ = Monomial(*out.integral_ring_, zexp);
        }
    }

    if (out.closed_ && out.dimension_ == 4) {
        CharNumbers4 nums;
        GradedElement w2 = component(w, 2);
        nums.w2_sq = pair_fundamental(w2 * w2, *out.fundamental_mod2_) == 0 ? 0 : 1;
        GradedElement wbar2 = component(invert_unit(w), 2);
        nums.dual_w2_sq = pair_fundamental(wbar2 * wbar2, *out.fundamental_mod2_) == 0 ? 0 : 1;
        if (out.orientable_ && has_integral) {
            // p1(M) = -c2(C (x) TM), paired against the integral fundamental class.
            GradedElement p1 = -component(*out.c_complexified_, 4);
            if (p1.is_zero()) {
                nums.p1_number = 0;
            } else {
                if (!out.fundamental_integral_ || out.fundamental_integral_->degree() != 4)
                    throw std::logic_error("internal: no integral fundamental monomial for " +
                                           out.name_);
                for (const auto& [m, coeff] : p1.terms())
                    if (!(m == *out.fundamental_integral_))
                        throw std::logic_error("internal: stray top class in p1 of " + out.name_);
                nums.p1_number = p1.coefficient(*out.fundamental_integral_);
            }
        }
        out.char4_ = nums;
    }
    return out;
}

ManifoldDescriptor primitive(Family f, int n) {
    if (n < 1)
        throw semantic_error(family_name(f) + std::to_string(n) +
                             ": dimension parameter must be >= 1");
    return ManifoldDescriptor::from_factors({{f, n}});
}

ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    if (a.kind() == ManifoldDescriptor::Kind::ConnectedSum ||
        b.kind() == ManifoldDescriptor::Kind::ConnectedSum)
        throw semantic_error("products over connected sums are not supported");
    std::vector<PrimitiveSpec> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return ManifoldDescriptor::from_factors(std::move(factors));
}

ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    if (!a.closed() || !b.closed())
        throw semantic_error("connected sum requires closed summands (" +
                             (a.closed() ? b.canonical_name() : a.canonical_name()) +
                             " is open)");
    if (a.dimension() != b.dimension())
        throw semantic_error("connected sum requires equal dimensions (" + a.canonical_name() +
                             " has dimension " + std::to_string(a.dimension()) + ", " +
                             b.canonical_name() + " has dimension " +
                             std::to_string(b.dimension()) + ")");
    ManifoldDescriptor out;
    out.kind_ = ManifoldDescriptor::Kind::ConnectedSum;
    out.name_ = wrap_summand(a) + " # " + wrap_summand(b);
    out.dimension_ = a.dimension();
    out.orientable_ = a.orientable() && b.orientable();
    out.closed_ = true;
    if (out.dimension_ == 4) {
        const CharNumbers4& na = *a.char_numbers4();
        const CharNumbers4& nb = *b.char_numbers4();
        CharNumbers4 nums;
        nums.w2_sq = (na.w2_sq + nb.w2_sq) % 2;
        nums.dual_w2_sq = (na.dual_w2_sq + nb.dual_w2_sq) % 2;
        if (out.orientable_ && na.p1_number && nb.p1_number)
            nums.p1_number = *na.p1_number + *nb.p1_number;
        out.char4_ = nums;
    }
    return out;
}

}  // namespace immcalc
