#pragma once

// Normalized bar complexes computing Tor over Br_n(R,delta) and RS_n:
// chain group k is Abar^(x)k (x) M where Abar has basis {d - aug(d)*1}
// over the non-identity basis diagrams.  Coefficients M: the trivial
// module, an induced module, a quotient Br_n/J_X, or Br_N restricted
// along the subalgebra embedding.

#include "brauer/complex.hpp"
#include "brauer/homology.hpp"

#include <optional>
#include <string>

namespace brauer {

enum class AlgebraKind { brauer, symmetric };

struct CoeffModule {
    enum class Kind { trivial, induced, quotient, algebra } kind = Kind::trivial;
    int m = 0;      // induced: Br_n (x)_{Br_m} t  /  RS_n (x)_{RS_m} t
    Subset X = 0;   // quotient: Br_n/J_X
    int N = 0;      // algebra: Br_N as a module over Br_n (n <= N)

    static CoeffModule trivial() { return {}; }
    static CoeffModule induced(int m) { return {Kind::induced, m, 0, 0}; }
    static CoeffModule quotient(Subset X) { return {Kind::quotient, 0, X, 0}; }
    static CoeffModule algebra(int N) { return {Kind::algebra, 0, 0, N}; }

    std::string describe() const;
};

struct BarSpec {
    AlgebraKind alg = AlgebraKind::brauer;
    int n = 0;
    Ring ring{RingKind::integers};
    CoeffModule coeff;

    std::string describe() const;
};

inline constexpr double kDefaultBarBudget = 5e7;

// Returns the env override BRAUER_BUDGET when set, else the default.
double bar_budget();

class BarComplex {
public:
    BarComplex(const BarSpec& spec, int D, double budget = bar_budget());

    const BarSpec& spec() const { return spec_; }
    int D() const { return D_; }
    const ChainComplex& cx() const { return cx_; }
    ChainComplex& cx() { return cx_; }

    const std::vector<Diagram>& abar() const { return abar_; }
    long module_dim() const { return mdim_; }
    const std::vector<BoxDiagram>& module_box_basis() const { return mbox_; }
    const std::vector<Diagram>& module_diagram_basis() const { return mdiag_; }

    long chain_dim(int k) const;
    // mixed-radix index of a chain basis element (a_1..a_k, m)
    long tuple_index(const std::vector<long>& abar_idx, long mod_idx) const;
    std::pair<std::vector<long>, long> tuple_of(int k, long index) const;

private:
    void build(double budget);
    // expansion of (d - aug d)(e - aug e) over the Abar basis
    SparseRatCol product_column(long i, long j) const;
    // expansion of (d - aug d) * m over the module basis
    SparseRatCol action_column(long i, long mod_idx) const;

    BarSpec spec_;
    int D_;
    std::vector<Diagram> abar_;
    std::map<Diagram, long> abar_idx_;
    std::vector<BoxDiagram> mbox_;
    std::map<BoxDiagram, long> mbox_idx_;
    std::vector<Diagram> mdiag_;
    std::map<Diagram, long> mdiag_idx_;
    long mdim_ = 1;
    ChainComplex cx_;
};

struct TorResult {
    BarSpec spec;
    int D = 0;
    std::vector<HomologyGroup> groups;  // degrees 0..D-1
};

// Tor_i for 0 <= i < D.  Over Z/m the computation is lifted to Z (with
// the canonical lift of delta) and reduced by universal coefficients.
TorResult bar_tor(const BarSpec& spec, int D, double budget = bar_budget());

}  // namespace brauer
