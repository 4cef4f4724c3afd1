#include "brauer/maps.hpp"

#include <algorithm>

namespace brauer {

namespace {

long find_abar(const BarComplex& dst, const Diagram& d) {
    const auto& basis = dst.abar();
    auto it = std::lower_bound(basis.begin(), basis.end(), d);
    if (it == basis.end() || !(*it == d)) throw std::logic_error("image diagram not in target basis");
    return it - basis.begin();
}

long find_box(const BarComplex& dst, const BoxDiagram& b) {
    const auto& basis = dst.module_box_basis();
    auto it = std::lower_bound(basis.begin(), basis.end(), b);
    if (it == basis.end() || !(*it == b)) throw std::logic_error("image box diagram not in target basis");
    return it - basis.begin();
}

}  // namespace

BarChainMap::BarChainMap(const BarComplex& src, const BarComplex& dst, MapKind kind)
    : src_(&src), dst_(&dst) {
    if (src.spec().ring != dst.spec().ring) throw ring_error("ring mismatch between bar complexes");
    if (src.D() != dst.D()) throw std::logic_error("truncation mismatch");

    // algebra generator images
    for (auto& d : src.abar()) {
        switch (kind) {
            case MapKind::identity:
                abar_img_.push_back(find_abar(dst, d));
                break;
            case MapKind::iota:
                if (src.spec().alg != AlgebraKind::symmetric ||
                    dst.spec().alg != AlgebraKind::brauer || src.spec().n != dst.spec().n)
                    throw std::logic_error("iota expects RS_n -> Br_n");
                abar_img_.push_back(find_abar(dst, d));
                break;
            case MapKind::pi:
                if (src.spec().alg != AlgebraKind::brauer ||
                    dst.spec().alg != AlgebraKind::symmetric || src.spec().n != dst.spec().n)
                    throw std::logic_error("pi expects Br_n -> RS_n");
                abar_img_.push_back(d.is_permutation() ? find_abar(dst, d) : -1);
                break;
            case MapKind::incl: {
                if (src.spec().n > dst.spec().n) throw std::logic_error("inclusion needs src n <= dst n");
                if (dst.spec().alg == AlgebraKind::symmetric &&
                    src.spec().alg == AlgebraKind::brauer)
                    throw std::logic_error("no inclusion Br -> RS");
                abar_img_.push_back(find_abar(dst, embed(d, dst.spec().n)));
                break;
            }
        }
    }

    // module images
    const auto& sc = src.spec().coeff;
    const auto& dc = dst.spec().coeff;
    if (sc.kind == CoeffModule::Kind::trivial && dc.kind == CoeffModule::Kind::trivial) {
        mod_img_.push_back(0);
    } else if (sc.kind == CoeffModule::Kind::induced && dc.kind == CoeffModule::Kind::induced &&
               sc.m == dc.m && src.spec().n == dst.spec().n) {
        for (auto& b : src.module_box_basis()) {
            if (kind == MapKind::pi && b.left_left_pairs() != 0) {
                mod_img_.push_back(-1);
                continue;
            }
            mod_img_.push_back(find_box(dst, b));
        }
    } else {
        throw std::logic_error("unsupported module map: " + sc.describe() + " -> " + dc.describe());
    }
    validate();
}

BarChainMap::BarChainMap(const BarComplex& src, const BarComplex& dst,
                         std::vector<long> abar_img, std::vector<long> mod_img)
    : src_(&src), dst_(&dst), abar_img_(std::move(abar_img)), mod_img_(std::move(mod_img)) {
    validate();
}

void BarChainMap::validate() const {
    const Ring& ring = src_->spec().ring;
    if (abar_img_.size() != src_->abar().size() || (long)mod_img_.size() != src_->module_dim())
        throw std::logic_error("image table size mismatch");
    // the algebra map must preserve the augmentation
    for (size_t i = 0; i < abar_img_.size(); ++i) {
        Rat eps_src = src_->abar()[i].is_permutation() ? ring.one() : ring.zero();
        Rat eps_dst = abar_img_[i] < 0
                          ? ring.zero()
                          : (dst_->abar()[abar_img_[i]].is_permutation() ? ring.one() : ring.zero());
        if (!ring.eq(eps_src, eps_dst))
            throw ring_error("algebra map does not preserve the augmentation");
    }
    // chain map: commutes with the bar differential in every degree
    for (int k = 1; k <= src_->D(); ++k) {
        const RatMat& dsrc = src_->cx().boundary(k);
        const RatMat& ddst = dst_->cx().boundary(k);
        for (long col = 0; col < src_->chain_dim(k); ++col) {
            std::map<int, Rat> lhs;  // F(d x)
            for (auto& [r, v] : dsrc.col[col])
                for (auto& [rr, vv] : image_column(k - 1, r)) lhs[rr] += v * vv;
            for (auto& [r, v] : image_column(k, col))  // d F(x)
                for (auto& [rr, vv] : ddst.col[r]) lhs[rr] -= v * vv;
            for (auto& [r, v] : lhs)
                if (!ring.is_zero(v))
                    throw std::logic_error("assignment is not a chain map at degree " +
                                           std::to_string(k));
        }
    }
}

SparseRatCol BarChainMap::image_column(int k, long index) const {
    auto [tuple, mod_idx] = src_->tuple_of(k, index);
    std::vector<long> img(tuple.size());
    for (size_t t = 0; t < tuple.size(); ++t) {
        img[t] = abar_img_[tuple[t]];
        if (img[t] < 0) return {};
    }
    long mimg = mod_img_[mod_idx];
    if (mimg < 0) return {};
    SparseRatCol out;
    out.emplace_back((int)dst_->tuple_index(img, mimg), src_->spec().ring.one());
    return out;
}

const Presentation& PresentationCache::at(const BarComplex& bar, int degree) {
    auto key = std::make_pair((const void*)&bar, degree);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_
                 .emplace(key, std::make_unique<Presentation>(
                                   Presentation::compute(bar.cx(), degree)))
                 .first;
    return *it->second;
}

GroupMap tor_induced_map(const BarChainMap& f, int i, PresentationCache& cache) {
    const Presentation& psrc = cache.at(f.src(), i);
    const Presentation& pdst = cache.at(f.dst(), i);
    const Ring& ring = f.src().spec().ring;

    GroupMap out;
    out.field = ring.is_field();
    out.ring = ring;
    out.source = psrc.group();
    out.target = pdst.group();
    out.source_orders = psrc.orders();
    out.target_orders = pdst.orders();
    out.m.assign(pdst.generators(), std::vector<Rat>(psrc.generators(), Rat(0)));

    for (long g = 0; g < psrc.generators(); ++g) {
        std::vector<Rat> cycle = psrc.generator_cycle(g);
        std::vector<Rat> image((size_t)f.dst().chain_dim(i), Rat(0));
        for (long j = 0; j < (long)cycle.size(); ++j) {
            if (ring.is_zero(cycle[j])) continue;
            for (auto& [r, v] : f.image_column(i, j))
                image[r] = ring.add(image[r], ring.mul(v, cycle[j]));
        }
        std::vector<Rat> coords = pdst.class_of(image);
        for (long r = 0; r < (long)coords.size(); ++r) out.m[r][g] = coords[r];
    }
    return out;
}

}  // namespace brauer
