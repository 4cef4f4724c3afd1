#include "brauer/bar.hpp"

#include <cstdlib>
#include <map>

namespace brauer {

std::string CoeffModule::describe() const {
    switch (kind) {
        case Kind::trivial: return "t";
        case Kind::induced: return "induced(m=" + std::to_string(m) + ")";
        case Kind::quotient: {
            std::string s = "quotient(X={";
            bool first = true;
            for (int a : subset_elements(X)) {
                if (!first) s += ",";
                s += std::to_string(a);
                first = false;
            }
            return s + "})";
        }
        case Kind::algebra: return "Br_" + std::to_string(N);
    }
    return "?";
}

std::string BarSpec::describe() const {
    std::string a = alg == AlgebraKind::brauer ? "Br_" : "RS_";
    return a + std::to_string(n) + "(" + ring.spec_string() +
           ", delta=" + ring.to_string(ring.delta()) + "); M = " + coeff.describe();
}

double bar_budget() {
    if (const char* env = std::getenv("BRAUER_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return kDefaultBarBudget;
}

BarComplex::BarComplex(const BarSpec& spec, int D, double budget)
    : spec_(spec), D_(D), cx_(spec.ring, 0, D) {
    if (D < 1) throw budget_error("bar complex needs D >= 1");
    build(budget);
}

long BarComplex::chain_dim(int k) const {
    long dim = mdim_;
    for (int t = 0; t < k; ++t) dim *= (long)abar_.size();
    return dim;
}

long BarComplex::tuple_index(const std::vector<long>& abar_idx, long mod_idx) const {
    long idx = 0;
    for (long a : abar_idx) idx = idx * (long)abar_.size() + a;
    return idx * mdim_ + mod_idx;
}

std::pair<std::vector<long>, long> BarComplex::tuple_of(int k, long index) const {
    long mod_idx = index % mdim_;
    index /= mdim_;
    std::vector<long> tuple(k);
    for (int t = k - 1; t >= 0; --t) {
        tuple[t] = index % (long)abar_.size();
        index /= (long)abar_.size();
    }
    return {tuple, mod_idx};
}

SparseRatCol BarComplex::product_column(long i, long j) const {
    const Ring& ring = spec_.ring;
    const Diagram& d = abar_[i];
    const Diagram& e = abar_[j];
    // (d - aug d)(e - aug e) = delta^loops de' - aug(d) e - aug(e) d + aug(d)aug(e)
    // and the Abar coordinate of a kernel element at basis f is simply its
    // diagram coefficient at f (the identity coefficient is redundant).
    std::map<long, Rat> acc;
    Composition comp = compose(d, e);
    Rat de = ring.pow(ring.delta(), comp.loops);
    if (!(comp.diagram == Diagram::identity(comp.diagram.n()))) {
        if (!ring.is_zero(de)) acc[abar_idx_.at(comp.diagram)] += de;
    }
    Rat ad = d.is_permutation() ? ring.one() : ring.zero();
    Rat ae = e.is_permutation() ? ring.one() : ring.zero();
    if (!ring.is_zero(ad)) acc[j] -= ad;
    if (!ring.is_zero(ae)) acc[i] -= ae;
    SparseRatCol out;
    for (auto& [r, v] : acc) {
        Rat cv = ring.canon(v);
        if (!ring.is_zero(cv)) out.emplace_back((int)r, cv);
    }
    return out;
}

SparseRatCol BarComplex::action_column(long i, long mod_idx) const {
    const Ring& ring = spec_.ring;
    const Diagram& d = abar_[i];
    Rat ad = d.is_permutation() ? ring.one() : ring.zero();
    std::map<long, Rat> acc;
    switch (spec_.coeff.kind) {
        case CoeffModule::Kind::trivial:
            // elements of Abar act as zero on t
            break;
        case CoeffModule::Kind::induced: {
            ModuleElement img = induced_act(d, mbox_[mod_idx], ring);
            for (auto& [b, c] : img.terms()) acc[mbox_idx_.at(b)] += c;
            if (!ring.is_zero(ad)) acc[mod_idx] -= ad;
            break;
        }
        case CoeffModule::Kind::quotient: {
            Composition comp = compose(d, mdiag_[mod_idx]);
            if (!comp.diagram.has_right_pair_within(spec_.coeff.X)) {
                Rat c = ring.pow(ring.delta(), comp.loops);
                if (!ring.is_zero(c)) acc[mdiag_idx_.at(comp.diagram)] += c;
            }
            if (!ring.is_zero(ad)) acc[mod_idx] -= ad;
            break;
        }
        case CoeffModule::Kind::algebra: {
            Composition comp = compose(embed(d, spec_.coeff.N), mdiag_[mod_idx]);
            Rat c = ring.pow(ring.delta(), comp.loops);
            if (!ring.is_zero(c)) acc[mdiag_idx_.at(comp.diagram)] += c;
            if (!ring.is_zero(ad)) acc[mod_idx] -= ad;
            break;
        }
    }
    SparseRatCol out;
    for (auto& [r, v] : acc) {
        Rat cv = ring.canon(v);
        if (!ring.is_zero(cv)) out.emplace_back((int)r, cv);
    }
    return out;
}

void BarComplex::build(double budget) {
    const Ring& ring = spec_.ring;
    const int n = spec_.n;

    for (auto& d : enumerate_diagrams(n)) {
        if (d == Diagram::identity(n)) continue;
        if (spec_.alg == AlgebraKind::symmetric && !d.is_permutation()) continue;
        abar_idx_.emplace(d, (long)abar_.size());
        abar_.push_back(d);
    }

    switch (spec_.coeff.kind) {
        case CoeffModule::Kind::trivial:
            mdim_ = 1;
            break;
        case CoeffModule::Kind::induced: {
            if (spec_.coeff.m < 0 || spec_.coeff.m > n)
                throw diagram_error("induced module needs 0 <= m <= n");
            mbox_ = spec_.alg == AlgebraKind::brauer ? induced_basis(n, spec_.coeff.m)
                                                     : sym_induced_basis(n, spec_.coeff.m);
            for (long i = 0; i < (long)mbox_.size(); ++i) mbox_idx_.emplace(mbox_[i], i);
            mdim_ = (long)mbox_.size();
            break;
        }
        case CoeffModule::Kind::quotient: {
            if (spec_.alg != AlgebraKind::brauer)
                throw diagram_error("quotient coefficients are defined over Br_n");
            mdiag_ = quotient_basis(n, spec_.coeff.X).basis;
            for (long i = 0; i < (long)mdiag_.size(); ++i) mdiag_idx_.emplace(mdiag_[i], i);
            mdim_ = (long)mdiag_.size();
            break;
        }
        case CoeffModule::Kind::algebra: {
            if (spec_.alg != AlgebraKind::brauer)
                throw diagram_error("algebra coefficients are defined over Br_n");
            if (spec_.coeff.N < n) throw diagram_error("algebra module needs N >= n");
            mdiag_ = enumerate_diagrams(spec_.coeff.N);
            for (long i = 0; i < (long)mdiag_.size(); ++i) mdiag_idx_.emplace(mdiag_[i], i);
            mdim_ = (long)mdiag_.size();
            break;
        }
    }

    double entries = 0;
    for (int k = 0; k <= D_; ++k) entries += (double)chain_dim(k);
    if (entries > budget)
        throw budget_error("bar complex budget exceeded: " + std::to_string(entries) +
                           " chain entries > " + std::to_string(budget) +
                           " (override with BRAUER_BUDGET)");

    for (int k = 0; k <= D_; ++k) cx_.set_rank(k, chain_dim(k));

    // memoized expansion tables
    std::map<std::pair<long, long>, SparseRatCol> prod_tab, act_tab;
    auto product = [&](long i, long j) -> const SparseRatCol& {
        auto key = std::make_pair(i, j);
        auto it = prod_tab.find(key);
        if (it == prod_tab.end()) it = prod_tab.emplace(key, product_column(i, j)).first;
        return it->second;
    };
    auto action = [&](long i, long m) -> const SparseRatCol& {
        auto key = std::make_pair(i, m);
        auto it = act_tab.find(key);
        if (it == act_tab.end()) it = act_tab.emplace(key, action_column(i, m)).first;
        return it->second;
    };

    for (int k = 1; k <= D_; ++k) {
        RatMat mat = RatMat::zero((int)chain_dim(k - 1), (int)chain_dim(k));
        std::vector<long> tuple(k, 0);
        long mod_idx = 0;
        const long cols = chain_dim(k);
        for (long col = 0; col < cols; ++col) {
            auto [tup, mi] = tuple_of(k, col);
            tuple = tup;
            mod_idx = mi;
            std::map<long, Rat> acc;
            // merge terms
            for (int i = 1; i <= k - 1; ++i) {
                int sign = (i % 2 == 0) ? 1 : -1;
                for (auto& [f, c] : product(tuple[i - 1], tuple[i])) {
                    std::vector<long> shorter;
                    shorter.reserve(k - 1);
                    for (int t = 0; t < i - 1; ++t) shorter.push_back(tuple[t]);
                    shorter.push_back(f);
                    for (int t = i + 1; t < k; ++t) shorter.push_back(tuple[t]);
                    acc[tuple_index(shorter, mod_idx)] += sign * c;
                }
            }
            // module action term
            {
                int sign = (k % 2 == 0) ? 1 : -1;
                std::vector<long> shorter(tuple.begin(), tuple.end() - 1);
                for (auto& [mi2, c] : action(tuple[k - 1], mod_idx))
                    acc[tuple_index(shorter, mi2)] += sign * c;
            }
            for (auto& [r, v] : acc) {
                Rat cv = ring.canon(v);
                if (!ring.is_zero(cv)) mat.col[col].emplace_back((int)r, cv);
            }
        }
        cx_.set_boundary(k, std::move(mat));
    }
    cx_.check_d2();
}

TorResult bar_tor(const BarSpec& spec, int D, double budget) {
    TorResult out;
    out.spec = spec;
    out.D = D;
    if (spec.ring.kind() == RingKind::integers_mod) {
        // lift to Z with the canonical representative of delta, then reduce
        Ring zring(RingKind::integers, spec.ring.delta());
        BarSpec lifted = spec;
        lifted.ring = zring;
        BarComplex bar(lifted, D, budget);
        out.groups = homology_range_mod(bar.cx(), spec.ring.modulus(), 0, D - 1);
        return out;
    }
    BarComplex bar(spec, D, budget);
    out.groups = homology_range(bar.cx(), 0, D - 1);
    return out;
}

}  // namespace brauer
