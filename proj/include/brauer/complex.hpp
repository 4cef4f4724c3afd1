#pragma once

// Chain complexes over an exact ring: the complex C_n built from induced
// modules, its splitting by left-left connection count, the filtration by
// free right-right connections, complexes of injective words with
// separators, the tuple isomorphism between the two, and the inductive
// resolutions C(X,x) / D(X,x,y).

#include "brauer/modules.hpp"
#include "brauer/ring.hpp"
#include "brauer/snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SparseRatCol = std::vector<std::pair<int, Rat>>;

struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRatCol> col;

    static RatMat zero(int r, int c) { return RatMat{r, c, std::vector<SparseRatCol>(c)}; }
};

IntMat to_int_mat(const RatMat& a);      // requires integral entries
FieldMat to_field_mat(const RatMat& a);

class ChainComplex {
public:
    ChainComplex(Ring ring, int lo, int hi);

    const Ring& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    long rank(int p) const;
    void set_rank(int p, long r);
    // boundary(p): C_p -> C_{p-1}, defined for lo < p <= hi
    const RatMat& boundary(int p) const;
    void set_boundary(int p, RatMat m);

    // throws std::logic_error when some consecutive pair fails to compose to 0
    void check_d2() const;

private:
    Ring ring_;
    int lo_, hi_;
    std::vector<long> rank_;
    std::vector<RatMat> bnd_;
};

// ---- the complex C_n ---------------------------------------------------

// Plug free node i (0-based from the top) into the box; nullopt when the
// node is itself box-connected (the result has a loop at the box).
std::optional<BoxDiagram> plug_into_box(const BoxDiagram& v, int i);

// Matrix of the face map d_i^p from induced_basis(n, n-p-1) to
// induced_basis(n, n-p).
RatMat face_map(int n, int p, int i, const Ring& ring, int bound = kDefaultDiagramBound);

struct LabeledComplex {
    ChainComplex cx;
    std::vector<std::vector<BoxDiagram>> basis;  // per degree, index lo..hi

    const std::vector<BoxDiagram>& basis_at(int p) const { return basis[p - cx.lo()]; }
};

LabeledComplex build_cn(int n, const Ring& ring, int bound = kDefaultDiagramBound);

// One subcomplex per left-left connection count k = 0..floor(n/2).
std::vector<LabeledComplex> split_cn(const LabeledComplex& cn);

// F_j: sub complex spanned by labels with at most j free right-right pairs.
LabeledComplex filter_sub(const LabeledComplex& ck, int j);
// F_j / F_{j-1}: labels with exactly j free right-right pairs.
LabeledComplex filter_quotient(const LabeledComplex& ck, int j);

// ---- injective words with separators ------------------------------------

struct SepWord {
    std::vector<int> letters;  // 0 = separator, otherwise a label from X

    int x_letters() const;
    auto operator<=>(const SepWord&) const = default;
};

struct WordComplex {
    ChainComplex cx;
    std::vector<int> X;
    int seps = 0;
    std::vector<std::vector<SepWord>> words;  // per degree -1..|X|-1

    const std::vector<SepWord>& words_at(int p) const { return words[p - cx.lo()]; }
};

WordComplex build_w(const std::vector<int>& X, int s, const Ring& ring, int bound = 9);

// ---- the tuple map Phi ---------------------------------------------------

struct WordTuple {
    std::vector<int> X;                        // left nodes with left-to-right arcs
    std::vector<std::pair<int, int>> P;        // left-left pairs on [n]-X
    int y_size = 0;                            // k + j
    std::vector<std::pair<int, int>> y_pairs;  // paired positions within Y (1-based)
    SepWord word;
};

// Extracts (X, P, Y, a) from a box-diagram label of F_j/F_{j-1}.
WordTuple phi_tuple(const BoxDiagram& label);
// Rebuilds the label from its tuple (inverse assignment).
BoxDiagram phi_inverse(int n, int m, const WordTuple& t);

struct PhiReport {
    int n = 0, k = 0, j = 0;
    long labels_checked = 0;
    bool roundtrip = false;
    bool chain_map = false;
    bool pass = false;
};

// Round-trips every label of F_j C_n^(k) / F_{j-1} and checks that Phi
// intertwines the quotient differential with the word differential
// (degree shift -(k+j)).
PhiReport phi_iso_check(int n, int k, int j, const Ring& ring);

// ---- inductive resolutions ----------------------------------------------

enum class InductiveKind { C, D };

struct InductiveComplex {
    ChainComplex cx;
    InductiveKind kind;
    int n, x, cutoff;
    Subset X;
    std::optional<int> y;
    // degree -1 holds Br_n/J_X; degree 0 holds Br_n/J_{X-x}; degrees >= 1
    // hold the direct sum over w in X-{x} of Br_n/J_{X-{x,w}}.
    std::vector<std::vector<Diagram>> basis;  // per degree (blocks concatenated)
};

InductiveComplex build_inductive(int n, Subset X, int x, std::optional<int> y, int cutoff,
                                 const Ring& ring, int bound = kDefaultDiagramBound);

// t (x)_{Br_n} of the same complex: every quotient collapses to R and each
// block map becomes multiplication by the augmentation of its multiplier.
ChainComplex build_inductive_trivial(int n, Subset X, int x, std::optional<int> y, int cutoff,
                                     const Ring& ring);

}  // namespace brauer
