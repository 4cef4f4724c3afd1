#pragma once

// Coefficient modules: the trivial module t (implicit, via the
// augmentation), the induced modules Br_n (x)_{Br_m} t with their
// box-diagram basis, and the quotient modules Br_n/J_X.
//
// Box convention: the m-box sits at the top of the right-hand column and
// absorbs the right labels 1..m (the strands carrying the Br_m-action);
// the free right nodes are the old labels m+1..n, relabelled 1..n-m from
// top to bottom.

#include "brauer/diagram.hpp"
#include "brauer/element.hpp"
#include "brauer/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace brauer {

class BoxDiagram {
public:
    // pairs match endpoints of {-n..-1} u {1..n-m}; box lists the m
    // endpoints connected to the box.
    BoxDiagram(int n, int m, std::vector<std::pair<int, int>> pairs, std::vector<int> box);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& box() const { return box_; }

    int left_left_pairs() const;
    // Right-right pairs between free nodes (those NOT connected to the box).
    int free_right_pairs() const;
    bool box_contains(int endpoint) const;

    auto operator<=>(const BoxDiagram&) const = default;

private:
    int n_, m_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> box_;
};

class ModuleElement {
public:
    ModuleElement(int n, int m, Ring ring) : n_(n), m_(m), ring_(std::move(ring)) {}
    ModuleElement(const BoxDiagram& d, Ring ring, const Rat& coeff = 1);

    int n() const { return n_; }
    int m() const { return m_; }
    const Ring& ring() const { return ring_; }
    const std::map<BoxDiagram, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BoxDiagram& d, const Rat& c);
    ModuleElement operator+(const ModuleElement& o) const;
    bool operator==(const ModuleElement& o) const;

private:
    int n_, m_;
    Ring ring_;
    std::map<BoxDiagram, Rat> terms_;
};

// All basis box diagrams of Br_n (x)_{Br_m} t in canonical order.
std::vector<BoxDiagram> induced_basis(int n, int m, int bound = kDefaultDiagramBound);
// The sub-basis with no left-left connections; these are exactly the
// box diagrams with permutation lifts, i.e. the basis of RS_n (x)_{RS_m} t.
std::vector<BoxDiagram> sym_induced_basis(int n, int m, int bound = kDefaultDiagramBound);

// Left action: pastes the diagram onto the left of the box diagram,
// converting middle loops into delta factors and killing any term whose
// pasting produces a box-to-box arc.
ModuleElement induced_act(const Diagram& d, const BoxDiagram& v, const Ring& ring);
ModuleElement induced_act(const Element& a, const ModuleElement& v);

// Image of a Brauer diagram under Br_n -> Br_n (x)_{Br_m} t: merge the
// right nodes 1..m into the box; nullopt when a box-internal arc results.
std::optional<BoxDiagram> box_project(const Diagram& d, int m);
// A diagram mapping onto the given box diagram (box members attached to
// the right slots 1..m in ascending order).
Diagram box_lift(const BoxDiagram& v);

struct QuotientBasis {
    int n;
    Subset X;
    std::vector<Diagram> basis;  // diagrams with no right pair inside X
};

QuotientBasis quotient_basis(int n, Subset X, int bound = kDefaultDiagramBound);

// Left action of an algebra element on Br_n/J_X, expanded over the basis.
std::map<Diagram, Rat> quotient_act(const Element& a, const Diagram& b, Subset X);
// Right action of a permutation of [m] (well defined on Br_n/J_m).
Diagram quotient_right_perm(const Diagram& b, const std::vector<int>& w, int m);

struct FreenessReport {
    int n = 0, m = 0;
    long basis_size = 0;
    long orbit_count = 0;
    bool all_orbits_regular = false;  // every orbit has size m!
    bool pass = false;
};

// Lemma: Br_n/J_m is a free right RS_m-module; checks the S_m-orbit
// decomposition of the quotient basis.
FreenessReport sm_freeness_check(int n, int m, int bound = kDefaultDiagramBound);

struct TensorIsoReport {
    int n = 0, m = 0;
    long orbit_count = 0, box_count = 0;
    bool bijective = false;
    bool equivariant = false;  // commutes with every generator of Br_n
    bool pass = false;
};

// Lemma: Br_n/J_m (x)_{RS_m} t  ~=  Br_n (x)_{Br_m} t as left Br_n-modules,
// via (b + J_m) (x) 1  <->  b (x) 1.
TensorIsoReport tensor_iso_check(int n, int m, const Ring& ring,
                                 int bound = kDefaultDiagramBound);

}  // namespace brauer
