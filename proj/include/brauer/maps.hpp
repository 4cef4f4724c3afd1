#pragma once

// Chain maps between bar complexes induced by augmentation-preserving
// algebra maps (iota, pi, subalgebra inclusions) together with compatible
// module maps, and their induced maps on Tor.

#include "brauer/bar.hpp"
#include "brauer/homology.hpp"

#include <map>
#include <memory>

namespace brauer {

enum class MapKind {
    identity,  // same spec on both sides
    iota,      // RS_n -> Br_n, module map by inclusion of bases
    pi,        // Br_n -> RS_n, kills non-permutation diagrams
    incl,      // subalgebra inclusion src.n <= dst.n via embed()
};

class BarChainMap {
public:
    // Validates that the algebra map preserves augmentations and that the
    // whole assignment is a chain map; throws ring_error / logic_error
    // otherwise.
    BarChainMap(const BarComplex& src, const BarComplex& dst, MapKind kind);
    // Raw constructor for tests: explicit images (-1 = killed).
    BarChainMap(const BarComplex& src, const BarComplex& dst, std::vector<long> abar_img,
                std::vector<long> mod_img);

    const BarComplex& src() const { return *src_; }
    const BarComplex& dst() const { return *dst_; }

    // Image of a chain basis element of degree k (empty = killed).
    SparseRatCol image_column(int k, long index) const;

private:
    void validate() const;

    const BarComplex* src_;
    const BarComplex* dst_;
    std::vector<long> abar_img_;
    std::vector<long> mod_img_;
};

// Presentations are expensive; share them across map computations.
class PresentationCache {
public:
    const Presentation& at(const BarComplex& bar, int degree);

private:
    std::map<std::pair<const void*, int>, std::unique_ptr<Presentation>> cache_;
};

// The induced map Tor_i(src) -> Tor_i(dst) in canonical coordinates.
GroupMap tor_induced_map(const BarChainMap& f, int i, PresentationCache& cache);

}  // namespace brauer
