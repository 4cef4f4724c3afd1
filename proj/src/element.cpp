#include "brauer/element.hpp"

namespace brauer {

Element::Element(const Diagram& d, Ring ring, const Rat& coeff)
    : n_(d.n()), ring_(std::move(ring)) {
    add_term(d, coeff);
}

Rat Element::coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add_term(const Diagram& d, const Rat& c) {
    if (d.n() != n_) throw diagram_error("term strand count mismatch");
    auto it = terms_.find(d);
    Rat v = ring_.canon(it == terms_.end() ? c : it->second + c);
    if (v == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[d] = v;
    }
}

void Element::check_compatible(const Element& o) const {
    if (n_ != o.n_) throw diagram_error("strand-count mismatch");
    if (ring_ != o.ring_) throw ring_error("ring mismatch");
}

Element Element::operator+(const Element& o) const {
    check_compatible(o);
    Element r = *this;
    for (auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    check_compatible(o);
    Element r = *this;
    for (auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

Element Element::operator*(const Element& o) const {
    check_compatible(o);
    Element r(n_, ring_);
    for (auto& [d1, c1] : terms_) {
        for (auto& [d2, c2] : o.terms_) {
            Composition comp = compose(d1, d2);
            r.add_term(comp.diagram, ring_.mul(ring_.mul(c1, c2), ring_.pow(ring_.delta(), comp.loops)));
        }
    }
    return r;
}

Element Element::scaled(const Rat& c) const {
    Element r(n_, ring_);
    for (auto& [d, v] : terms_) r.add_term(d, ring_.mul(v, c));
    return r;
}

bool Element::operator==(const Element& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && terms_ == o.terms_;
}

bool Element::is_symmetric() const {
    for (auto& [d, c] : terms_)
        if (!d.is_permutation()) return false;
    return true;
}

Rat augmentation(const Element& a) {
    Rat s = 0;
    for (auto& [d, c] : a.terms())
        if (d.is_permutation()) s += c;
    return a.ring().canon(s);
}

Element iota(const Element& a) {
    if (!a.is_symmetric()) throw diagram_error("iota input not supported on permutations");
    return a;
}

Element pi(const Element& a) {
    Element r(a.n(), a.ring());
    for (auto& [d, c] : a.terms())
        if (d.is_permutation()) r.add_term(d, c);
    return r;
}

Diagram embed(const Diagram& d, int N) {
    if (N < d.n()) throw diagram_error("embed target smaller than source");
    auto pairs = d.pairs();
    for (int j = d.n() + 1; j <= N; ++j) pairs.emplace_back(-j, j);
    return Diagram(N, std::move(pairs));
}

Element embed(const Element& a, int N) {
    Element r(N, a.ring());
    for (auto& [d, c] : a.terms()) r.add_term(embed(d, N), c);
    return r;
}

IdealBasis ideal_basis(int n, Subset X, int bound) {
    IdealBasis ib{n, X, {}};
    for (auto& d : enumerate_diagrams(n, bound))
        if (d.has_right_pair_within(X)) ib.basis.push_back(d);
    return ib;
}

RelationsReport relations_check(int n, const Ring& ring, const ComposeFn& mul) {
    ComposeFn cmp = mul ? mul : [](const Diagram& a, const Diagram& b) { return compose(a, b); };

    auto product = [&](const std::vector<Diagram>& factors) {
        Element acc = Element::one(n, ring);
        for (auto& f : factors) {
            Element next(n, ring);
            for (auto& [d, c] : acc.terms()) {
                Composition comp = cmp(d, f);
                next.add_term(comp.diagram,
                              ring.mul(c, ring.pow(ring.delta(), comp.loops)));
            }
            acc = next;
        }
        return acc;
    };

    RelationsReport rep;
    auto record = [&](const std::string& name, bool ok) {
        rep.families.emplace_back(name, ok);
        rep.pass = rep.pass && ok;
    };

    auto S = [&](int i) { return Diagram::s(n, i); };
    auto U = [&](int i) { return Diagram::u(n, i); };
    const Element one = Element::one(n, ring);
    const Rat delta = ring.delta();

    bool ok;

    ok = true;
    for (int i = 1; i <= n - 1; ++i) ok = ok && product({S(i), S(i)}) == one;
    record("S_i^2 = 1", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n - 1)
                ok = ok && product({S(i), S(j), S(i)}) == product({S(j), S(i), S(j)});
    record("S_iS_jS_i = S_jS_iS_j (|i-j|=1)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            ok = ok && product({S(i), S(j)}) == product({S(j), S(i)});
    record("S_iS_j = S_jS_i (|i-j|>=2)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        ok = ok && product({U(i), U(i)}) == Element(U(i), ring).scaled(delta);
    record("U_i^2 = delta U_i", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n - 1)
                ok = ok && product({U(i), U(j), U(i)}) == Element(U(i), ring);
    record("U_iU_jU_i = U_i (|i-j|=1)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            ok = ok && product({U(i), U(j)}) == product({U(j), U(i)});
    record("U_iU_j = U_jU_i (|i-j|>=2)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        ok = ok && product({U(i), S(i)}) == Element(U(i), ring) &&
             product({S(i), U(i)}) == Element(U(i), ring);
    record("U_iS_i = S_iU_i = U_i", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n - 1)
                ok = ok && product({U(i), S(j), U(i)}) == Element(U(i), ring);
    record("U_iS_jU_i = U_i (|i-j|=1)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j : {i - 1, i + 1})
            if (j >= 1 && j <= n - 1)
                ok = ok && product({S(i), S(j), U(i)}) == product({U(j), U(i)}) &&
                     product({U(i), S(j), S(i)}) == product({U(i), U(j)});
    record("S_iS_jU_i = U_jU_i, U_iS_jS_i = U_iU_j (|i-j|=1)", ok);

    ok = true;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            ok = ok && product({U(i), S(j)}) == product({S(j), U(i)});
    record("U_iS_j = S_jU_i (|i-j|>=2)", ok);

    return rep;
}

}  // namespace brauer
