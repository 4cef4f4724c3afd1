#pragma once

// Homology of chain complexes: Betti numbers over fields, free rank plus
// invariant factors over Z, and Z/m through the integral computation.
// Also the certificate-carrying presentations used to evaluate induced
// maps on homology.

#include "brauer/complex.hpp"

#include <string>
#include <vector>

namespace brauer {

struct HomologyGroup {
    bool over_field = false;
    long free_rank = 0;          // dimension when over a field
    std::vector<Int> torsion;    // invariant factors > 1 (divisibility chain)

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

// Canonical invariant-factor form of  Z^free (+) sum of Z/order.
// Orders equal to 0 count toward the free rank; orders 1 vanish.
HomologyGroup group_from_cyclics(long free_rank, std::vector<Int> orders);

bool group_iso(const HomologyGroup& a, const HomologyGroup& b);
std::string group_to_string(const HomologyGroup& g);

// H_p for p in [lo..hi]; ring Z or a field (Z/m complexes go through
// homology_range_mod below).
std::vector<HomologyGroup> homology_range(const ChainComplex& c, int lo, int hi);
HomologyGroup homology_at(const ChainComplex& c, int p);

// Homology with Z/m coefficients of a complex built over Z, via the
// universal-coefficient decomposition of H(C (x) Z/m).  Cyclic summands
// of full order m are reported as free rank over Z/m.
std::vector<HomologyGroup> homology_range_mod(const ChainComplex& z_complex, const Int& m,
                                              int lo, int hi);

// ---- presentations and induced maps ---------------------------------------

// A presentation of H_p(C) with enough certificates to express arbitrary
// cycles in canonical coordinates and to lift canonical generators back to
// cycles.  Over Z the canonical form is sum Z/d_i (+) Z^f with generators
// ordered torsion-first; over a field it is a basis of the quotient.
class Presentation {
public:
    static Presentation compute(const ChainComplex& c, int p);

    const HomologyGroup& group() const { return group_; }
    long generators() const { return (long)orders_.size(); }
    // order of generator i: d_i > 1 for torsion, 0 for free
    const std::vector<Int>& orders() const { return orders_; }

    // Canonical coordinates of the class of a cycle (throws if not a cycle).
    std::vector<Rat> class_of(const std::vector<Rat>& cycle) const;
    // An explicit cycle representing generator i.
    std::vector<Rat> generator_cycle(long i) const;

private:
    Presentation() = default;

    bool field_ = false;
    Ring ring_{RingKind::integers};
    long chain_dim_ = 0;
    HomologyGroup group_;
    std::vector<Int> orders_;

    // integer certificates
    std::vector<int> kernel_cols_;
    DenseInt v_, vinv_;       // column transform of the lower boundary
    DenseInt w_, winv_;       // row transform of the compressed image
    std::vector<Int> diag_;   // nonzero invariant factors of the image
    std::vector<long> kept_;  // SNF coordinates kept as canonical generators

    // field certificates
    std::vector<std::vector<Rat>> vf_, vinvf_;
    std::vector<std::vector<Rat>> img_;  // echelonized image in kernel coords
    std::vector<int> img_pivot_;         // pivot row of each image column
    std::vector<long> quot_coords_;      // kernel coords spanning the quotient
};

// A homomorphism between homology groups in canonical coordinates.
struct GroupMap {
    bool field = false;
    Ring ring{RingKind::integers};
    HomologyGroup source, target;
    std::vector<Int> source_orders, target_orders;
    std::vector<std::vector<Rat>> m;  // target coords x source generators

    bool is_identity() const;
    bool is_surjective() const;
    bool is_iso() const;
};

GroupMap compose(const GroupMap& g, const GroupMap& f);  // g after f

}  // namespace brauer
