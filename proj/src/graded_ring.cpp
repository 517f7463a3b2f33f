/* Exact arithmetic in truncated graded-commutative rings. */

#include "immcalc/graded_ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace immcalc {

namespace {

bool monomial_has_torsion(const RingPresentation& ring, const Monomial& m) {
    const auto& gens = ring.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (m.exponents()[i] > 0 && gens[i].torsion == 2)
            return true;
    return false;
}

void require_same_ring(const GradedElement& u, const GradedElement& v, const char* op) {
    if (u.ring() == v.ring())
        return;
    if (!(*u.ring() == *v.ring()))
        throw std::invalid_argument(std::string(op) + ": presentation mismatch");
}

}  // namespace

RingPresentation::RingPresentation(std::vector<Generator> gens, int truncation, CoeffMode mode)
    : gens_(std::move(gens)), truncation_(truncation), mode_(mode) {
    if (truncation_ < 0)
        throw std::invalid_argument("ring presentation: negative truncation degree");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.name.empty())
            throw std::invalid_argument("ring presentation: empty generator name");
        if (g.degree < 1)
            throw std::invalid_argument("generator " + g.name + ": degree must be >= 1");
        if (g.nilpotence < 1)
            throw std::invalid_argument("generator " + g.name + ": nilpotence must be >= 1");
        if (g.torsion != 0 && g.torsion != 2)
            throw std::invalid_argument("generator " + g.name + ": torsion must be 0 or 2");
        // Odd-degree generators anticommute over the integers, so they are
        // admitted only in Mod2 mode where signs vanish.
        if (mode_ == CoeffMode::Integer && g.degree % 2 != 0)
            throw std::invalid_argument("generator " + g.name +
                                        ": odd degree requires Mod2 coefficients");
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].name == g.name)
                throw std::invalid_argument("duplicate generator name: " + g.name);
    }
}

PresentationPtr make_presentation(std::vector<Generator> gens, int truncation, CoeffMode mode) {
    return std::make_shared<RingPresentation>(std::move(gens), truncation, mode);
}

Monomial::Monomial(const RingPresentation& ring, std::vector<int> exponents)
    : exps_(std::move(exponents)) {
    const auto& gens = ring.generators();
    if (exps_.size() != gens.size())
        throw std::invalid_argument("monomial: exponent count does not match generator count");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exps_[i] < 0)
            throw std::invalid_argument("monomial: negative exponent");
        if (exps_[i] >= gens[i].nilpotence)
            throw std::invalid_argument("monomial: exponent of " + gens[i].name +
                                        " reaches its nilpotence");
        degree_ += exps_[i] * gens[i].degree;
    }
    if (degree_ > ring.truncation())
        throw std::invalid_argument("monomial: degree exceeds truncation");
}

GradedElement GradedElement::zero(PresentationPtr ring) { return GradedElement(std::move(ring)); }

GradedElement GradedElement::unit(PresentationPtr ring) { return constant(std::move(ring), 1); }

GradedElement GradedElement::constant(PresentationPtr ring, const Int& value) {
    TermMap raw;
    raw.emplace(Monomial(std::vector<int>(ring->generators().size(), 0), 0), value);
    return normalized(std::move(ring), std::move(raw));
}

GradedElement GradedElement::generator(PresentationPtr ring, std::size_t index) {
    if (index >= ring->generators().size())
        throw std::invalid_argument("generator index out of range");
    std::vector<int> e(ring->generators().size(), 0);
    e[index] = 1;
    return term(std::move(ring), e, 1);
}

GradedElement GradedElement::term(PresentationPtr ring, const std::vector<int>& exponents,
                                  const Int& coeff) {
    const auto& gens = ring->generators();
    if (exponents.size() != gens.size())
        throw std::invalid_argument("term: exponent count does not match generator count");
    int degree = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exponents[i] < 0)
            throw std::invalid_argument("term: negative exponent");
        if (exponents[i] >= gens[i].nilpotence)
            return zero(std::move(ring));  // killed by nilpotence
        degree += exponents[i] * gens[i].degree;
    }
    if (degree > ring->truncation())
        return zero(std::move(ring));  // killed by truncation
    TermMap raw;
    raw.emplace(Monomial(exponents, degree), coeff);
    return normalized(std::move(ring), std::move(raw));
}

GradedElement GradedElement::normalized(PresentationPtr ring, TermMap raw) {
    GradedElement out(std::move(ring));
    const RingPresentation& pres = *out.ring_;
    for (auto& [m, c] : raw) {
        if (c == 0)
            continue;
        Int cc = c;
        if (pres.mode() == CoeffMode::Mod2 || monomial_has_torsion(pres, m)) {
            if (cc % 2 == 0)
                continue;
            cc = 1;
        }
        out.terms_.emplace_hint(out.terms_.end(), m, std::move(cc));
    }
    return out;
}

Int GradedElement::constant_term() const {
    if (terms_.empty() || !terms_.begin()->first.is_unit())
        return 0;
    return terms_.begin()->second;
}

Int GradedElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

bool GradedElement::operator==(const GradedElement& other) const {
    if (!(ring_ == other.ring_ || *ring_ == *other.ring_))
        return false;
    return std::equal(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                      [](const auto& a, const auto& b) {
                          return a.first == b.first && a.second == b.second;
                      }) &&
           terms_.size() == other.terms_.size();
}

GradedElement add(const GradedElement& u, const GradedElement& v) {
    require_same_ring(u, v, "add");
    TermMap raw = u.terms_;
    for (const auto& [m, c] : v.terms_)
        raw[m] += c;
    return GradedElement::normalized(u.ring_, std::move(raw));
}

GradedElement mul(const GradedElement& u, const GradedElement& v) {
    require_same_ring(u, v, "mul");
    const RingPresentation& ring = *u.ring_;
    const auto& gens = ring.generators();
    TermMap raw;
    for (const auto& [ma, ca] : u.terms_) {
        for (const auto& [mb, cb] : v.terms_) {
            int degree = ma.degree() + mb.degree();
            if (degree > ring.truncation())
                continue;
            std::vector<int> e(gens.size());
            bool dead = false;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                e[i] = ma.exponents()[i] + mb.exponents()[i];
                if (e[i] >= gens[i].nilpotence) {
                    dead = true;
                    break;
                }
            }
            if (dead)
                continue;
            raw[Monomial(std::move(e), degree)] += ca * cb;
        }
    }
    return GradedElement::normalized(u.ring_, std::move(raw));
}

GradedElement scalar_mul(const GradedElement& u, const Int& c) {
    TermMap raw = u.terms_;
    for (auto& [m, coeff] : raw)
        coeff *= c;
    return GradedElement::normalized(u.ring_, std::move(raw));
}

GradedElement pow(const GradedElement& u, int k) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    GradedElement acc = GradedElement::unit(u.ring());
    for (int i = 0; i < k; ++i)
        acc = mul(acc, u);
    return acc;
}

GradedElement invert_unit(const GradedElement& u) {
    Int c = u.constant_term();
    if (c != 1 && c != -1)
        throw std::invalid_argument("invert_unit: constant term must be +1 or -1, got " +
                                    c.str());
    // u = c(1 + m) with m nilpotent, so u^-1 = c * sum_j (-m)^j.
    GradedElement m = scalar_mul(u - GradedElement::constant(u.ring(), c), c);
    GradedElement neg_m = -m;
    GradedElement acc = GradedElement::unit(u.ring());
    GradedElement p = GradedElement::unit(u.ring());
    for (int j = 1; j <= u.ring()->truncation(); ++j) {
        p = mul(p, neg_m);
        if (p.is_zero())
            break;
        acc = add(acc, p);
    }
    return scalar_mul(acc, c);
}

GradedElement component(const GradedElement& u, int degree) {
    if (degree < 0 || degree > u.ring()->truncation())
        throw std::invalid_argument("component: degree out of range");
    GradedElement out(u.ring());
    for (const auto& [m, c] : u.terms_)
        if (m.degree() == degree)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

std::optional<int> top_nonzero_degree(const GradedElement& u) {
    if (u.is_zero())
        return std::nullopt;
    return u.terms().rbegin()->first.degree();
}

GradedElement reduce_mod2(const GradedElement& u, const PresentationPtr& target,
                          const std::vector<GradedElement>& images) {
    if (u.ring()->mode() != CoeffMode::Integer)
        throw std::invalid_argument("reduce_mod2: source element must use Integer coefficients");
    if (target->mode() != CoeffMode::Mod2)
        throw std::invalid_argument("reduce_mod2: target presentation must use Mod2 coefficients");
    const auto& gens = u.ring()->generators();
    if (images.size() != gens.size())
        throw std::invalid_argument("reduce_mod2: image table size does not match generator count");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!(images[i].ring() == target || *images[i].ring() == *target))
            throw std::invalid_argument("reduce_mod2: image of " + gens[i].name +
                                        " lives in a different presentation");
        for (const auto& [m, c] : images[i].terms())
            if (m.degree() != gens[i].degree)
                throw std::invalid_argument("reduce_mod2: degree mismatch in image table for " +
                                            gens[i].name);
    }
    GradedElement out = GradedElement::zero(target);
    for (const auto& [m, c] : u.terms()) {
        if (c % 2 == 0)
            continue;
        GradedElement t = GradedElement::unit(target);
        for (std::size_t i = 0; i < gens.size() && !t.is_zero(); ++i)
            if (m.exponents()[i] > 0)
                t = mul(t, pow(images[i], m.exponents()[i]));
        out = add(out, t);
    }
    return out;
}

Int pair_fundamental(const GradedElement& u, const Monomial& fundamental) {
    if (fundamental.degree() != u.ring()->truncation())
        throw std::invalid_argument(
            "pair_fundamental: fundamental monomial must have full truncation degree");
    return u.coefficient(fundamental);
}

std::string render(const Monomial& m, const RingPresentation& ring) {
    if (m.is_unit())
        return "1";
    std::string s;
    const auto& gens = ring.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int e = m.exponents()[i];
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += gens[i].name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string render(const GradedElement& u) {
    if (u.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        Int a = c;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (m.is_unit())
            out << a.str();
        else {
            if (a != 1)
                out << a.str() << "*";
            out << render(m, *u.ring());
        }
    }
    return out.str();
}

}  // namespace immcalc
