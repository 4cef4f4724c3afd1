#pragma once

// Linear algebra over diagrams: elements of Br_n(R,delta), the group
// algebra RS_n as the sub-object supported on permutation diagrams, the
// maps iota/pi, subalgebra embeddings, the augmentation and the ideals J_X.

#include "brauer/diagram.hpp"
#include "brauer/ring.hpp"

#include <functional>
#include <map>
#include <string>

namespace brauer {

class Element {
public:
    Element(int n, Ring ring) : n_(n), ring_(std::move(ring)) {}
    Element(const Diagram& d, Ring ring, const Rat& coeff = 1);

    static Element zero(int n, const Ring& ring) { return Element(n, ring); }
    static Element one(int n, const Ring& ring) { return Element(Diagram::identity(n), ring); }

    int n() const { return n_; }
    const Ring& ring() const { return ring_; }
    const std::map<Diagram, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Diagram& d) const;
    void add_term(const Diagram& d, const Rat& c);  // canonicalizes, drops zeros

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;  // delta^loops per diagram product
    Element scaled(const Rat& c) const;
    bool operator==(const Element& o) const;

    // True iff supported on permutation diagrams (i.e. lies in RS_n).
    bool is_symmetric() const;

private:
    void check_compatible(const Element& o) const;

    int n_;
    Ring ring_;
    std::map<Diagram, Rat> terms_;
};

// Sum of the coefficients of permutation diagrams; multiplicative and unital.
Rat augmentation(const Element& a);

// iota: RS_n -> Br_n is inclusion-as-identity (validates the support);
// pi: Br_n -> RS_n restricts to permutation diagrams.
Element iota(const Element& a);
Element pi(const Element& a);

// Injective algebra map Br_m -> Br_N adding straight strands m+1..N.
Diagram embed(const Diagram& d, int N);
Element embed(const Element& a, int N);

struct IdealBasis {
    int n;
    Subset X;
    std::vector<Diagram> basis;
};

// Basis of J_X: all diagrams with a right-hand pair inside X.
IdealBasis ideal_basis(int n, Subset X, int bound = kDefaultDiagramBound);

// One line per relation family of the defining presentation.
struct RelationsReport {
    std::vector<std::pair<std::string, bool>> families;
    bool pass = true;
};

using ComposeFn = std::function<Composition(const Diagram&, const Diagram&)>;

// Evaluates every relation family for every admissible index pair.  The
// compose hook exists for fault-injection in tests; by default the real
// composition is used.
RelationsReport relations_check(int n, const Ring& ring, const ComposeFn& mul = {});

}  // namespace brauer
