#include "brauer/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

namespace {

std::map<Int, int> factorize(Int n) {
    std::map<Int, int> f;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

HomologyGroup group_from_cyclics(long free_rank, std::vector<Int> orders) {
    HomologyGroup g;
    g.free_rank = free_rank;
    // prime -> exponents, one per cyclic summand containing that prime
    std::map<Int, std::vector<int>> primes;
    size_t chain_len = 0;
    for (auto& d : orders) {
        if (d == 0) {
            ++g.free_rank;
            continue;
        }
        Int a = d < 0 ? Int(-d) : d;
        if (a == 1) continue;
        for (auto& [p, e] : factorize(a)) primes[p].push_back(e);
    }
    for (auto& [p, es] : primes) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> chain(chain_len, Int(1));
    for (auto& [p, es] : primes)
        for (size_t i = 0; i < es.size(); ++i) {
            Int pw = 1;
            for (int t = 0; t < es[i]; ++t) pw *= p;
            chain[i] *= pw;
        }
    // chain[0] is the largest factor; canonical order is ascending
    std::reverse(chain.begin(), chain.end());
    g.torsion = std::move(chain);
    return g;
}

bool group_iso(const HomologyGroup& a, const HomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::string group_to_string(const HomologyGroup& g) {
    if (g.is_zero()) return "0";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += " + ";
        s += part;
    };
    if (g.free_rank == 1) append(g.over_field ? "k" : "Z");
    else if (g.free_rank > 1)
        append((g.over_field ? std::string("k^") : std::string("Z^")) +
               std::to_string(g.free_rank));
    for (auto& d : g.torsion) append("Z/" + d.str());
    return s;
}

namespace {

struct DegreeData {
    long rank = 0;                 // rank of the boundary out of degree p
    std::vector<Int> factors;      // its invariant factors (Z case)
};

DegreeData boundary_data(const ChainComplex& c, int p, bool need_factors) {
    DegreeData d;
    if (p <= c.lo() || p > c.hi()) return d;
    const RatMat& b = c.boundary(p);
    if (c.ring().kind() == RingKind::integers) {
        if (need_factors) {
            SnfSummary s = snf(to_int_mat(b));
            d.rank = s.rank;
            d.factors = std::move(s.factors);
        } else {
            d.rank = int_rank(to_int_mat(b));
        }
    } else {
        d.rank = field_rank(to_field_mat(b), c.ring());
    }
    return d;
}

}  // namespace

std::vector<HomologyGroup> homology_range(const ChainComplex& c, int lo, int hi) {
    if (c.ring().kind() == RingKind::integers_mod)
        throw std::logic_error("Z/m homology goes through homology_range_mod");
    const bool field = c.ring().is_field();
    lo = std::max(lo, c.lo());
    hi = std::min(hi, c.hi());
    std::vector<HomologyGroup> out;
    std::map<int, DegreeData> memo;
    auto data = [&](int p) -> const DegreeData& {
        auto it = memo.find(p);
        if (it == memo.end()) it = memo.emplace(p, boundary_data(c, p, !field)).first;
        return it->second;
    };
    for (int p = lo; p <= hi; ++p) {
        long z = c.rank(p) - data(p).rank;
        const DegreeData& up = data(p + 1);
        HomologyGroup g;
        g.over_field = field;
        g.free_rank = z - up.rank;
        if (!field)
            for (auto& f : up.factors)
                if (f > 1) g.torsion.push_back(f);
        out.push_back(std::move(g));
    }
    return out;
}

HomologyGroup homology_at(const ChainComplex& c, int p) {
    return homology_range(c, p, p).at(0);
}

std::vector<HomologyGroup> homology_range_mod(const ChainComplex& z_complex, const Int& m,
                                              int lo, int hi) {
    if (z_complex.ring().kind() != RingKind::integers)
        throw std::logic_error("homology_range_mod expects a complex over Z");
    if (m < 2) throw ring_error("modulus must be at least 2");
    int zlo = std::max(lo - 1, z_complex.lo());
    std::vector<HomologyGroup> integral = homology_range(z_complex, zlo, hi);
    auto integral_at = [&](int p) -> const HomologyGroup* {
        if (p < zlo || p > hi) return nullptr;
        return &integral[p - zlo];
    };
    std::vector<HomologyGroup> out;
    for (int p = std::max(lo, z_complex.lo()); p <= std::min(hi, z_complex.hi()); ++p) {
        std::vector<Int> orders;
        const HomologyGroup* hp = integral_at(p);
        if (hp) {
            for (long i = 0; i < hp->free_rank; ++i) orders.push_back(m);
            for (auto& d : hp->torsion) orders.push_back(gcd(d, m));
        }
        if (const HomologyGroup* hq = integral_at(p - 1))
            for (auto& d : hq->torsion) orders.push_back(gcd(d, m));
        HomologyGroup g = group_from_cyclics(0, std::move(orders));
        // summands of full order m act as free Z/m-modules
        long full = 0;
        std::vector<Int> rest;
        for (auto& d : g.torsion) {
            if (d == m) ++full;
            else rest.push_back(d);
        }
        g.free_rank += full;
        g.torsion = std::move(rest);
        out.push_back(std::move(g));
    }
    return out;
}

// ---- presentations ---------------------------------------------------------

Presentation Presentation::compute(const ChainComplex& c, int p) {
    Presentation pres;
    pres.ring_ = c.ring();
    pres.field_ = c.ring().is_field();
    if (c.ring().kind() == RingKind::integers_mod)
        throw std::logic_error("presentations not supported over Z/m");
    pres.chain_dim_ = c.rank(p);

    const bool has_lower = p > c.lo();
    const bool has_upper = p < c.hi();

    if (!pres.field_) {
        IntMat a = has_lower ? to_int_mat(c.boundary(p))
                             : IntMat::zero(0, (int)pres.chain_dim_);
        ColEchelonCertified ech = col_echelon_certified(a);
        pres.kernel_cols_ = ech.kernel_cols;
        pres.v_ = std::move(ech.v);
        pres.vinv_ = std::move(ech.vinv);
        const long z = (long)pres.kernel_cols_.size();

        // image lattice of the upper boundary, in kernel coordinates
        IntMat img_kernel_coords = IntMat::zero((int)z, 0);
        if (has_upper) {
            // compress the image lattice first (sparse, no transforms)
            std::vector<SparseIntCol> gens = int_image_lattice(to_int_mat(c.boundary(p + 1)));
            img_kernel_coords = IntMat::zero((int)z, (int)gens.size());
            std::map<int, int> kernel_pos;
            for (long i = 0; i < z; ++i) kernel_pos[pres.kernel_cols_[i]] = (int)i;
            for (int g = 0; g < (int)gens.size(); ++g) {
                // vinv * column
                std::vector<Int> full((size_t)pres.chain_dim_, Int(0));
                for (auto& [r, v] : gens[g])
                    for (long i = 0; i < pres.chain_dim_; ++i)
                        if (pres.vinv_[i][r] != 0) full[i] += pres.vinv_[i][r] * v;
                for (long i = 0; i < pres.chain_dim_; ++i) {
                    if (full[i] == 0) continue;
                    auto it = kernel_pos.find((int)i);
                    if (it == kernel_pos.end())
                        throw std::logic_error("boundary image escapes the cycle space");
                    img_kernel_coords.set(it->second, g, full[i]);
                }
            }
        }
        SnfCertified cert = snf_certified(dense_from_sparse(img_kernel_coords));
        pres.w_ = std::move(cert.u);
        pres.winv_ = std::move(cert.uinv);
        pres.diag_ = cert.factors;
        std::vector<Int> torsion;
        for (long q = 0; q < (long)cert.factors.size(); ++q)
            if (cert.factors[q] > 1) {
                pres.kept_.push_back(q);
                pres.orders_.push_back(cert.factors[q]);
                torsion.push_back(cert.factors[q]);
            }
        for (long q = (long)cert.factors.size(); q < z; ++q) {
            pres.kept_.push_back(q);
            pres.orders_.push_back(0);
        }
        pres.group_.over_field = false;
        pres.group_.free_rank = z - cert.rank;
        pres.group_.torsion = std::move(torsion);
        return pres;
    }

    // field case
    FieldMat a = has_lower ? to_field_mat(c.boundary(p))
                           : FieldMat{0, (int)pres.chain_dim_,
                                      std::vector<SparseFieldCol>((size_t)pres.chain_dim_)};
    FieldColEchelon ech = field_col_echelon(a, pres.ring_);
    pres.kernel_cols_ = ech.kernel_cols;
    pres.vf_ = std::move(ech.v);
    pres.vinvf_ = std::move(ech.vinv);
    const long z = (long)pres.kernel_cols_.size();
    std::map<int, int> kernel_pos;
    for (long i = 0; i < z; ++i) kernel_pos[pres.kernel_cols_[i]] = (int)i;

    // echelonize the image inside the kernel coordinates
    if (has_upper) {
        const RatMat& bup = c.boundary(p + 1);
        for (int g = 0; g < bup.cols; ++g) {
            std::vector<Rat> full((size_t)pres.chain_dim_, Rat(0));
            for (auto& [r, v] : bup.col[g])
                for (long i = 0; i < pres.chain_dim_; ++i)
                    if (!pres.ring_.is_zero(pres.vinvf_[i][r]))
                        full[i] = pres.ring_.add(full[i], pres.ring_.mul(pres.vinvf_[i][r], v));
            std::vector<Rat> coord((size_t)z, Rat(0));
            for (long i = 0; i < pres.chain_dim_; ++i) {
                if (pres.ring_.is_zero(full[i])) continue;
                auto it = kernel_pos.find((int)i);
                if (it == kernel_pos.end())
                    throw std::logic_error("boundary image escapes the cycle space");
                coord[it->second] = full[i];
            }
            // reduce against existing image columns
            for (size_t t = 0; t < pres.img_.size(); ++t) {
                const Rat& lead = coord[pres.img_pivot_[t]];
                if (pres.ring_.is_zero(lead)) continue;
                Rat q = pres.ring_.mul(lead, pres.ring_.inverse(pres.img_[t][pres.img_pivot_[t]]));
                for (long i = 0; i < z; ++i)
                    coord[i] = pres.ring_.sub(coord[i], pres.ring_.mul(q, pres.img_[t][i]));
            }
            int pivot = -1;
            for (long i = 0; i < z; ++i)
                if (!pres.ring_.is_zero(coord[i])) {
                    pivot = (int)i;
                    break;
                }
            if (pivot >= 0) {
                pres.img_.push_back(std::move(coord));
                pres.img_pivot_.push_back(pivot);
            }
        }
    }
    std::set<int> pivots(pres.img_pivot_.begin(), pres.img_pivot_.end());
    for (long i = 0; i < z; ++i)
        if (!pivots.count((int)i)) {
            pres.quot_coords_.push_back(i);
            pres.orders_.push_back(0);
        }
    pres.group_.over_field = true;
    pres.group_.free_rank = (long)pres.quot_coords_.size();
    return pres;
}

std::vector<Rat> Presentation::class_of(const std::vector<Rat>& cycle) const {
    if ((long)cycle.size() != chain_dim_) throw std::logic_error("cycle dimension mismatch");
    const long z = (long)kernel_cols_.size();
    if (!field_) {
        std::vector<Int> full((size_t)chain_dim_, Int(0));
        for (long j = 0; j < chain_dim_; ++j) {
            if (cycle[j] == 0) continue;
            if (denominator(cycle[j]) != 1) throw std::logic_error("non-integral cycle");
            Int v = numerator(cycle[j]);
            for (long i = 0; i < chain_dim_; ++i)
                if (vinv_[i][j] != 0) full[i] += vinv_[i][j] * v;
        }
        std::vector<Int> coord((size_t)z, Int(0));
        std::map<int, int> kernel_pos;
        for (long i = 0; i < z; ++i) kernel_pos[kernel_cols_[i]] = (int)i;
        for (long i = 0; i < chain_dim_; ++i) {
            if (full[i] == 0) continue;
            auto it = kernel_pos.find((int)i);
            if (it == kernel_pos.end()) throw std::logic_error("vector is not a cycle");
            coord[it->second] = full[i];
        }
        std::vector<Rat> out;
        out.reserve(kept_.size());
        for (size_t t = 0; t < kept_.size(); ++t) {
            long q = kept_[t];
            Int v = 0;
            for (long i = 0; i < z; ++i)
                if (w_[q][i] != 0) v += w_[q][i] * coord[i];
            if (orders_[t] > 1) {
                v %= orders_[t];
                if (v < 0) v += orders_[t];
            }
            out.emplace_back(v);
        }
        return out;
    }
    std::vector<Rat> full((size_t)chain_dim_, Rat(0));
    for (long j = 0; j < chain_dim_; ++j) {
        if (ring_.is_zero(cycle[j])) continue;
        for (long i = 0; i < chain_dim_; ++i)
            if (!ring_.is_zero(vinvf_[i][j]))
                full[i] = ring_.add(full[i], ring_.mul(vinvf_[i][j], cycle[j]));
    }
    std::vector<Rat> coord((size_t)z, Rat(0));
    std::map<int, int> kernel_pos;
    for (long i = 0; i < z; ++i) kernel_pos[kernel_cols_[i]] = (int)i;
    for (long i = 0; i < chain_dim_; ++i) {
        if (ring_.is_zero(full[i])) continue;
        auto it = kernel_pos.find((int)i);
        if (it == kernel_pos.end()) throw std::logic_error("vector is not a cycle");
        coord[it->second] = full[i];
    }
    for (size_t t = 0; t < img_.size(); ++t) {
        const Rat& lead = coord[img_pivot_[t]];
        if (ring_.is_zero(lead)) continue;
        Rat q = ring_.mul(lead, ring_.inverse(img_[t][img_pivot_[t]]));
        for (long i = 0; i < z; ++i)
            coord[i] = ring_.sub(coord[i], ring_.mul(q, img_[t][i]));
    }
    std::vector<Rat> out;
    out.reserve(quot_coords_.size());
    for (long qc : quot_coords_) out.push_back(coord[qc]);
    return out;
}

std::vector<Rat> Presentation::generator_cycle(long i) const {
    const long z = (long)kernel_cols_.size();
    std::vector<Rat> cycle((size_t)chain_dim_, Rat(0));
    if (!field_) {
        long q = kept_.at(i);
        // kernel coordinates of the generator: winv column q
        for (long t = 0; t < z; ++t) {
            Int coeff = winv_[t][q];
            if (coeff == 0) continue;
            int col = kernel_cols_[t];
            for (long r = 0; r < chain_dim_; ++r)
                if (v_[r][col] != 0) cycle[r] += Rat(v_[r][col] * coeff);
        }
        return cycle;
    }
    long qc = quot_coords_.at(i);
    int col = kernel_cols_[qc];
    for (long r = 0; r < chain_dim_; ++r)
        if (!ring_.is_zero(vf_[r][col])) cycle[r] = vf_[r][col];
    return cycle;
}

// ---- group maps -------------------------------------------------------------

bool GroupMap::is_identity() const {
    if (!group_iso(source, target)) return false;
    size_t k = source_orders.size();
    if (m.size() != k) return false;
    for (size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) return false;
        for (size_t j = 0; j < k; ++j) {
            Rat want = (i == j) ? 1 : 0;
            Rat diff = m[i][j] - want;
            if (field) {
                if (!ring.is_zero(diff)) return false;
            } else {
                if (denominator(diff) != 1) return false;
                Int d = numerator(diff);
                if (target_orders[i] > 1) d %= target_orders[i];
                if (d != 0) return false;
            }
        }
    }
    return true;
}

bool GroupMap::is_surjective() const {
    size_t rows = target_orders.size();
    if (rows == 0) return true;
    if (field) {
        // a field "group" here is a vector space; surjective iff full rank
        FieldMat fm;
        fm.rows = (int)rows;
        fm.cols = m.empty() ? 0 : (int)m[0].size();
        fm.col.assign(fm.cols, {});
        for (int c = 0; c < fm.cols; ++c)
            for (int r = 0; r < (int)rows; ++r)
                if (!ring.is_zero(m[r][c])) fm.col[c].emplace_back(r, m[r][c]);
        return field_rank(fm, ring) == (long)rows;
    }
    // surjective over Z iff [M | target relations] has trivial cokernel
    int cols = m.empty() ? 0 : (int)m[0].size();
    IntMat a = IntMat::zero((int)rows, cols + (int)rows);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < (int)rows; ++r)
            if (m[r][c] != 0) a.set(r, c, numerator(m[r][c]));
    int extra = cols;
    for (int r = 0; r < (int)rows; ++r) {
        if (target_orders[r] > 0) a.set(r, extra, target_orders[r]);
        ++extra;
    }
    SnfSummary s = snf(a);
    if (s.rank != (long)rows) return false;
    for (auto& f : s.factors)
        if (f != 1) return false;
    return true;
}

bool GroupMap::is_iso() const {
    // finitely generated abelian groups are Hopfian: a surjection between
    // isomorphic groups is an isomorphism
    return group_iso(source, target) && is_surjective();
}

GroupMap compose(const GroupMap& g, const GroupMap& f) {
    if (!group_iso(f.target, g.source))
        throw std::logic_error("composition target/source mismatch");
    GroupMap out;
    out.field = g.field;
    out.ring = g.ring;
    out.source = f.source;
    out.target = g.target;
    out.source_orders = f.source_orders;
    out.target_orders = g.target_orders;
    size_t rows = g.target_orders.size();
    size_t mid = g.source_orders.size();
    size_t cols = f.source_orders.size();
    out.m.assign(rows, std::vector<Rat>(cols, Rat(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t t = 0; t < mid; ++t) {
            if (g.m[i][t] == 0) continue;
            for (size_t j = 0; j < cols; ++j) out.m[i][j] += g.m[i][t] * f.m[t][j];
        }
    if (out.field) {
        for (auto& row : out.m)
            for (auto& v : row) v = out.ring.canon(v);
    } else {
        for (size_t i = 0; i < rows; ++i)
            if (out.target_orders[i] > 1)
                for (size_t j = 0; j < cols; ++j) {
                    Int v = numerator(out.m[i][j]) % out.target_orders[i];
                    if (v < 0) v += out.target_orders[i];
                    out.m[i][j] = Rat(v);
                }
    }
    return out;
}

}  // namespace brauer
