#include "brauer/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace brauer {

IntMat to_int_mat(const RatMat& a) {
    IntMat m{a.rows, a.cols, std::vector<SparseIntCol>(a.cols)};
    for (int c = 0; c < a.cols; ++c) {
        m.col[c].reserve(a.col[c].size());
        for (auto& [r, v] : a.col[c]) {
            if (denominator(v) != 1) throw std::logic_error("non-integral entry in Z matrix");
            m.col[c].emplace_back(r, numerator(v));
        }
    }
    return m;
}

FieldMat to_field_mat(const RatMat& a) {
    FieldMat m{a.rows, a.cols, a.col};
    return m;
}

ChainComplex::ChainComplex(Ring ring, int lo, int hi)
    : ring_(std::move(ring)), lo_(lo), hi_(hi) {
    if (hi < lo) throw std::logic_error("empty degree range");
    rank_.assign(hi - lo + 1, 0);
    bnd_.assign(hi - lo + 1, RatMat{});
}

long ChainComplex::rank(int p) const {
    if (p < lo_ || p > hi_) return 0;
    return rank_[p - lo_];
}

void ChainComplex::set_rank(int p, long r) { rank_[p - lo_] = r; }

const RatMat& ChainComplex::boundary(int p) const {
    if (p <= lo_ || p > hi_) throw std::logic_error("boundary degree out of range");
    return bnd_[p - lo_];
}

void ChainComplex::set_boundary(int p, RatMat m) {
    if (p <= lo_ || p > hi_) throw std::logic_error("boundary degree out of range");
    if (m.rows != rank(p - 1) || m.cols != rank(p))
        throw std::logic_error("boundary shape mismatch");
    bnd_[p - lo_] = std::move(m);
}

void ChainComplex::check_d2() const {
    for (int p = lo_ + 2; p <= hi_; ++p) {
        const RatMat& a = boundary(p - 1);
        const RatMat& b = boundary(p);
        for (int c = 0; c < b.cols; ++c) {
            std::map<int, Rat> acc;
            for (auto& [mid, v] : b.col[c])
                for (auto& [r, w] : a.col[mid]) acc[r] += v * w;
            for (auto& [r, v] : acc)
                if (!ring_.is_zero(v))
                    throw std::logic_error("d^2 != 0 at degree " + std::to_string(p));
        }
    }
}

// ---- C_n ------------------------------------------------------------------

std::optional<BoxDiagram> plug_into_box(const BoxDiagram& v, int i) {
    const int label = i + 1;
    const int free_right = v.n() - v.m();
    if (i < 0 || i >= free_right) throw diagram_error("free node index out of range");
    if (v.box_contains(label)) return std::nullopt;  // loop at the box

    auto relabel = [&](int lab) {
        if (lab > 0 && lab > label) return lab - 1;
        return lab;
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> box;
    int partner = 0;
    for (auto& [a, b] : v.pairs()) {
        if (a == label) partner = b;
        else if (b == label) partner = a;
        else pairs.emplace_back(relabel(a), relabel(b));
    }
    for (int lab : v.box()) box.push_back(relabel(lab));
    box.push_back(relabel(partner));
    return BoxDiagram(v.n(), v.m() + 1, std::move(pairs), std::move(box));
}

namespace {

template <typename T>
std::map<T, int> index_of(const std::vector<T>& basis) {
    std::map<T, int> idx;
    for (int i = 0; i < (int)basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

}  // namespace

RatMat face_map(int n, int p, int i, const Ring& ring, int bound) {
    if (p < 0 || p > n - 1 || i < 0 || i > p) throw diagram_error("face-map index out of range");
    auto src = induced_basis(n, n - p - 1, bound);
    auto dst = induced_basis(n, n - p, bound);
    auto dst_idx = index_of(dst);
    RatMat m = RatMat::zero((int)dst.size(), (int)src.size());
    for (int c = 0; c < (int)src.size(); ++c) {
        auto img = plug_into_box(src[c], i);
        if (!img) continue;
        m.col[c].emplace_back(dst_idx.at(*img), ring.one());
    }
    return m;
}

LabeledComplex build_cn(int n, const Ring& ring, int bound) {
    if (n > bound)
        throw budget_error("C_n bound exceeded: n = " + std::to_string(n));
    ChainComplex cx(ring, -1, n - 1);
    std::vector<std::vector<BoxDiagram>> basis;
    for (int p = -1; p <= n - 1; ++p) {
        basis.push_back(induced_basis(n, n - p - 1, bound));
        cx.set_rank(p, (long)basis.back().size());
    }
    for (int p = 0; p <= n - 1; ++p) {
        const auto& src = basis[p + 1];
        const auto& dst = basis[p];
        auto dst_idx = index_of(dst);
        RatMat m = RatMat::zero((int)dst.size(), (int)src.size());
        for (int c = 0; c < (int)src.size(); ++c) {
            std::map<int, Rat> acc;
            for (int i = 0; i <= p; ++i) {
                auto img = plug_into_box(src[c], i);
                if (!img) continue;
                acc[dst_idx.at(*img)] += (i % 2 == 0) ? 1 : -1;
            }
            for (auto& [r, v] : acc)
                if (!ring.is_zero(v)) m.col[c].emplace_back(r, ring.canon(v));
        }
        cx.set_boundary(p, std::move(m));
    }
    cx.check_d2();
    return LabeledComplex{std::move(cx), std::move(basis)};
}

namespace {

// Restriction of a labeled complex to the labels selected by `keep`;
// requires the selection to be closed under the differential (no entries
// from kept columns to dropped rows) unless project == true, in which
// case entries to dropped rows are projected away.
LabeledComplex select_labels(const LabeledComplex& c,
                             const std::function<bool(const BoxDiagram&)>& keep, bool project) {
    const ChainComplex& cx = c.cx;
    ChainComplex out(cx.ring(), cx.lo(), cx.hi());
    std::vector<std::vector<BoxDiagram>> basis;
    std::vector<std::vector<int>> sel;  // per degree: old index -> new index or -1
    for (int p = cx.lo(); p <= cx.hi(); ++p) {
        const auto& full = c.basis_at(p);
        std::vector<BoxDiagram> kept;
        std::vector<int> map(full.size(), -1);
        for (int i = 0; i < (int)full.size(); ++i)
            if (keep(full[i])) {
                map[i] = (int)kept.size();
                kept.push_back(full[i]);
            }
        basis.push_back(std::move(kept));
        sel.push_back(std::move(map));
        out.set_rank(p, (long)basis.back().size());
    }
    for (int p = cx.lo() + 1; p <= cx.hi(); ++p) {
        const RatMat& full = cx.boundary(p);
        const auto& row_map = sel[p - 1 - cx.lo()];
        const auto& col_map = sel[p - cx.lo()];
        RatMat m = RatMat::zero((int)basis[p - 1 - cx.lo()].size(),
                                (int)basis[p - cx.lo()].size());
        for (int c0 = 0; c0 < full.cols; ++c0) {
            if (col_map[c0] < 0) continue;
            for (auto& [r, v] : full.col[c0]) {
                if (row_map[r] < 0) {
                    if (!project)
                        throw std::logic_error("selection not closed under the differential");
                    continue;
                }
                m.col[col_map[c0]].emplace_back(row_map[r], v);
            }
        }
        out.set_boundary(p, std::move(m));
    }
    return LabeledComplex{std::move(out), std::move(basis)};
}

}  // namespace

std::vector<LabeledComplex> split_cn(const LabeledComplex& cn) {
    int n = cn.cx.hi() + 1;
    std::vector<LabeledComplex> parts;
    for (int k = 0; k <= n / 2; ++k)
        parts.push_back(select_labels(
            cn, [k](const BoxDiagram& d) { return d.left_left_pairs() == k; }, false));
    return parts;
}

LabeledComplex filter_sub(const LabeledComplex& ck, int j) {
    return select_labels(
        ck, [j](const BoxDiagram& d) { return d.free_right_pairs() <= j; }, false);
}

LabeledComplex filter_quotient(const LabeledComplex& ck, int j) {
    // Exactly-j labels; differential entries landing in fewer-than-j labels
    // are killed by the quotient.
    return select_labels(
        ck, [j](const BoxDiagram& d) { return d.free_right_pairs() == j; }, true);
}

// ---- injective words -------------------------------------------------------

int SepWord::x_letters() const {
    int c = 0;
    for (int a : letters)
        if (a != 0) ++c;
    return c;
}

namespace {

void words_rec(const std::vector<int>& X, std::vector<char>& used, int s_left, int x_left,
               SepWord& acc, std::vector<SepWord>& out) {
    if (s_left == 0 && x_left == 0) {
        out.push_back(acc);
        return;
    }
    if (s_left > 0) {
        acc.letters.push_back(0);
        words_rec(X, used, s_left - 1, x_left, acc, out);
        acc.letters.pop_back();
    }
    if (x_left > 0) {
        for (size_t i = 0; i < X.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            acc.letters.push_back(X[i]);
            words_rec(X, used, s_left, x_left - 1, acc, out);
            acc.letters.pop_back();
            used[i] = 0;
        }
    }
}

std::vector<SepWord> words_of_degree(const std::vector<int>& X, int s, int p) {
    std::vector<SepWord> out;
    std::vector<char> used(X.size(), 0);
    SepWord acc;
    words_rec(X, used, s, p + 1, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WordComplex build_w(const std::vector<int>& X, int s, const Ring& ring, int bound) {
    if ((int)X.size() + s > bound)
        throw budget_error("separator-word complex bound exceeded");
    for (int a : X)
        if (a <= 0) throw diagram_error("word labels must be positive");
    if (s < 0) throw diagram_error("negative separator count");
    const int top = (int)X.size() - 1;
    ChainComplex cx(ring, -1, top);
    std::vector<std::vector<SepWord>> words;
    for (int p = -1; p <= top; ++p) {
        words.push_back(words_of_degree(X, s, p));
        cx.set_rank(p, (long)words.back().size());
    }
    for (int p = 0; p <= top; ++p) {
        const auto& src = words[p + 1];
        const auto& dst = words[p];
        auto dst_idx = index_of(dst);
        RatMat m = RatMat::zero((int)dst.size(), (int)src.size());
        for (int c = 0; c < (int)src.size(); ++c) {
            std::map<int, Rat> acc;
            const auto& w = src[c].letters;
            for (int i = 0; i < (int)w.size(); ++i) {
                if (w[i] == 0) continue;  // separators are never deleted
                SepWord shorter;
                shorter.letters.reserve(w.size() - 1);
                for (int t = 0; t < (int)w.size(); ++t)
                    if (t != i) shorter.letters.push_back(w[t]);
                acc[dst_idx.at(shorter)] += (i % 2 == 0) ? 1 : -1;
            }
            for (auto& [r, v] : acc)
                if (!ring.is_zero(v)) m.col[c].emplace_back(r, ring.canon(v));
        }
        cx.set_boundary(p, std::move(m));
    }
    cx.check_d2();
    return WordComplex{std::move(cx), X, s, std::move(words)};
}

// ---- Phi -------------------------------------------------------------------

WordTuple phi_tuple(const BoxDiagram& label) {
    const int n = label.n();
    const int free_right = n - label.m();
    WordTuple t;

    // X: left nodes with a left-to-right arc (box counts as right).
    std::vector<char> in_pair_left(n + 1, 0);
    for (auto& [a, b] : label.pairs())
        if (a < 0 && b < 0) {
            t.P.emplace_back(-b, -a);
            in_pair_left[-a] = in_pair_left[-b] = 1;
        }
    std::sort(t.P.begin(), t.P.end());
    for (int v = 1; v <= n; ++v)
        if (!in_pair_left[v]) t.X.push_back(v);

    // Y: free right nodes in right-right connections (to a node or the box),
    // ordered by position; pairing from node-to-node connections.
    std::vector<int> y_nodes;  // free labels, ascending
    std::map<int, int> partner_right;
    for (int lab = 1; lab <= free_right; ++lab)
        if (label.box_contains(lab)) y_nodes.push_back(lab);
    for (auto& [a, b] : label.pairs())
        if (a > 0 && b > 0) {
            y_nodes.push_back(a);
            y_nodes.push_back(b);
            partner_right[a] = b;
            partner_right[b] = a;
        }
    std::sort(y_nodes.begin(), y_nodes.end());
    t.y_size = (int)y_nodes.size();
    std::map<int, int> y_pos;
    for (int i = 0; i < (int)y_nodes.size(); ++i) y_pos[y_nodes[i]] = i + 1;
    for (auto& [a, b] : partner_right)
        if (a < b) t.y_pairs.emplace_back(y_pos[a], y_pos[b]);
    std::sort(t.y_pairs.begin(), t.y_pairs.end());

    // The word: position i carries a separator when free node i is
    // right-right connected, and the left label of its arc otherwise.
    std::map<int, int> left_of;  // free label -> left node label (positive)
    for (auto& [a, b] : label.pairs())
        if (a < 0 && b > 0) left_of[b] = -a;
    for (int lab = 1; lab <= free_right; ++lab) {
        if (y_pos.count(lab)) t.word.letters.push_back(0);
        else t.word.letters.push_back(left_of.at(lab));
    }
    return t;
}

BoxDiagram phi_inverse(int n, int m, const WordTuple& t) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> box;
    for (auto& [a, b] : t.P) pairs.emplace_back(-a, -b);

    // Separator positions, in order, are the elements of Y.
    std::vector<int> sep_pos;
    for (int i = 0; i < (int)t.word.letters.size(); ++i)
        if (t.word.letters[i] == 0) sep_pos.push_back(i + 1);
    if ((int)sep_pos.size() != t.y_size) throw diagram_error("tuple/word separator mismatch");
    std::vector<char> y_paired(t.y_size + 1, 0);
    for (auto& [u, v] : t.y_pairs) {
        pairs.emplace_back(sep_pos[u - 1], sep_pos[v - 1]);
        y_paired[u] = y_paired[v] = 1;
    }
    for (int u = 1; u <= t.y_size; ++u)
        if (!y_paired[u]) box.push_back(sep_pos[u - 1]);

    // Left-to-right arcs from the letters; unused elements of X join the box.
    std::set<int> used_letters;
    for (int i = 0; i < (int)t.word.letters.size(); ++i)
        if (t.word.letters[i] != 0) {
            pairs.emplace_back(-t.word.letters[i], i + 1);
            used_letters.insert(t.word.letters[i]);
        }
    for (int v : t.X)
        if (!used_letters.count(v)) box.push_back(-v);
    return BoxDiagram(n, m, std::move(pairs), std::move(box));
}

PhiReport phi_iso_check(int n, int k, int j, const Ring& ring) {
    PhiReport rep;
    rep.n = n;
    rep.k = k;
    rep.j = j;
    auto cn = build_cn(n, ring);
    auto parts = split_cn(cn);
    auto quot = filter_quotient(parts[k], j);
    rep.roundtrip = true;
    rep.chain_map = true;

    // Group labels by (X, P, Y) and compare differentials under Phi.
    const ChainComplex& cx = quot.cx;
    struct Key {
        std::vector<int> X;
        std::vector<std::pair<int, int>> P;
        int y_size;
        std::vector<std::pair<int, int>> y_pairs;
        auto operator<=>(const Key&) const = default;
    };
    auto key_of = [](const WordTuple& t) {
        return Key{t.X, t.P, t.y_size, t.y_pairs};
    };
    std::map<Key, WordComplex> word_cx;

    for (int p = cx.lo(); p <= cx.hi(); ++p) {
        for (int c = 0; c < (int)quot.basis_at(p).size(); ++c) {
            const BoxDiagram& label = quot.basis_at(p)[c];
            WordTuple t = phi_tuple(label);
            ++rep.labels_checked;
            if ((int)t.X.size() != n - 2 * k || t.y_size != k + j ||
                (int)t.y_pairs.size() != j)
                rep.roundtrip = false;
            if (!(phi_inverse(n, label.m(), t) == label)) rep.roundtrip = false;

            Key key = key_of(t);
            if (!word_cx.count(key)) word_cx.emplace(key, build_w(t.X, k + j, ring, 12));
            const WordComplex& w = word_cx.at(key);
            int wp = p - (k + j);  // Phi has degree -(k+j)
            if (t.word.x_letters() - 1 != wp) rep.chain_map = false;

            if (p == cx.lo()) continue;
            // Phi(del label) computed in the quotient complex...
            std::map<std::pair<Key, SepWord>, Rat> lhs;
            for (auto& [r, v] : cx.boundary(p).col[c]) {
                WordTuple tr = phi_tuple(quot.basis_at(p - 1)[r]);
                lhs[{key_of(tr), tr.word}] += v;
            }
            // ...must match del(Phi label) in the word complex.
            std::map<std::pair<Key, SepWord>, Rat> rhs;
            if (wp > w.cx.lo()) {
                const auto& col_words = w.words_at(wp);
                int widx = (int)(std::lower_bound(col_words.begin(), col_words.end(), t.word) -
                                 col_words.begin());
                for (auto& [r, v] : w.cx.boundary(wp).col[widx])
                    rhs[{key, w.words_at(wp - 1)[r]}] += v;
            }
            for (auto& [kk, v] : rhs) lhs[kk] -= v;
            for (auto& [kk, v] : lhs)
                if (!ring.is_zero(v)) rep.chain_map = false;
        }
    }
    rep.pass = rep.roundtrip && rep.chain_map;
    return rep;
}

// ---- inductive resolutions --------------------------------------------------

namespace {

// Coordinates of (the class of) an element in a quotient basis.
SparseRatCol quotient_coords(const Element& e, Subset X,
                             const std::map<Diagram, int>& idx) {
    SparseRatCol out;
    for (auto& [d, c] : e.terms()) {
        if (d.has_right_pair_within(X)) continue;
        out.emplace_back(idx.at(d), c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

InductiveComplex build_inductive(int n, Subset X, int x, std::optional<int> y, int cutoff,
                                 const Ring& ring, int bound) {
    if (!subset_contains(X, x)) throw diagram_error("x must lie in X");
    if (cutoff < 2) throw diagram_error("cutoff must be at least 2");
    InductiveKind kind = y ? InductiveKind::D : InductiveKind::C;
    if (kind == InductiveKind::C && !ring.is_unit(ring.delta()))
        throw ring_error("C(X,x) requires delta invertible");
    if (kind == InductiveKind::D && subset_contains(X, *y))
        throw diagram_error("y must lie outside X");
    if (y && (*y < 1 || *y > n)) throw diagram_error("y out of range");

    std::vector<int> ws;  // X - {x}
    for (int w : subset_elements(X))
        if (w != x) ws.push_back(w);

    Subset X0 = X & ~(Subset(1) << (x - 1));  // X - {x}

    // bases
    auto qb_full = quotient_basis(n, X, bound).basis;
    auto qb_zero = quotient_basis(n, X0, bound).basis;
    std::vector<std::vector<Diagram>> qb_w;
    for (int w : ws) {
        Subset Xw = X0 & ~(Subset(1) << (w - 1));
        qb_w.push_back(quotient_basis(n, Xw, bound).basis);
    }

    ChainComplex cx(ring, -1, cutoff);
    std::vector<std::vector<Diagram>> basis;
    basis.push_back(qb_full);
    cx.set_rank(-1, (long)qb_full.size());
    basis.push_back(qb_zero);
    cx.set_rank(0, (long)qb_zero.size());
    long block_total = 0;
    std::vector<long> block_offset;
    std::vector<Diagram> stacked;
    for (auto& qb : qb_w) {
        block_offset.push_back(block_total);
        block_total += (long)qb.size();
        for (auto& d : qb) stacked.push_back(d);
    }
    for (int p = 1; p <= cutoff; ++p) {
        basis.push_back(stacked);
        cx.set_rank(p, block_total);
    }

    // multipliers on each summand, per degree
    auto multiplier = [&](int p, int w) -> Element {
        Element uxw(Diagram::u_ab(n, x, w), ring);
        if (kind == InductiveKind::C) {
            Element scaled = uxw.scaled(ring.inverse(ring.delta()));
            if (p % 2 == 1) return scaled;
            return Element::one(n, ring) - scaled;
        }
        if (p == 1) return uxw;
        Element uxy(Diagram::u_ab(n, x, *y), ring);
        Element prod = uxw * uxy;
        if (p % 2 == 1) return prod;
        return Element::one(n, ring) - prod;
    };

    // degree 0 -> -1: projection extending the ideal from J_{X-x} to J_X
    {
        auto idx = index_of(qb_full);
        RatMat m = RatMat::zero((int)qb_full.size(), (int)qb_zero.size());
        for (int c = 0; c < (int)qb_zero.size(); ++c) {
            const Diagram& b = qb_zero[c];
            if (!b.has_right_pair_within(X)) m.col[c].emplace_back(idx.at(b), ring.one());
        }
        cx.set_boundary(0, std::move(m));
    }
    // degree 1 -> 0: right multiplication, all blocks into Br_n/J_{X-x}
    {
        auto idx = index_of(qb_zero);
        RatMat m = RatMat::zero((int)qb_zero.size(), (int)block_total);
        for (size_t bi = 0; bi < ws.size(); ++bi) {
            Element u = multiplier(1, ws[bi]);
            for (int c = 0; c < (int)qb_w[bi].size(); ++c) {
                Element prod = Element(qb_w[bi][c], ring) * u;
                m.col[block_offset[bi] + c] = quotient_coords(prod, X0, idx);
            }
        }
        cx.set_boundary(1, std::move(m));
    }
    // degrees p >= 2: block diagonal
    for (int p = 2; p <= cutoff; ++p) {
        RatMat m = RatMat::zero((int)block_total, (int)block_total);
        for (size_t bi = 0; bi < ws.size(); ++bi) {
            Subset Xw = X0 & ~(Subset(1) << (ws[bi] - 1));
            auto idx = index_of(qb_w[bi]);
            Element u = multiplier(p, ws[bi]);
            for (int c = 0; c < (int)qb_w[bi].size(); ++c) {
                Element prod = Element(qb_w[bi][c], ring) * u;
                SparseRatCol col = quotient_coords(prod, Xw, idx);
                for (auto& [r, v] : col)
                    m.col[block_offset[bi] + c].emplace_back(block_offset[bi] + r, v);
            }
        }
        cx.set_boundary(p, std::move(m));
    }
    cx.check_d2();
    return InductiveComplex{std::move(cx), kind, n, x, cutoff, X, y, std::move(basis)};
}

ChainComplex build_inductive_trivial(int n, Subset X, int x, std::optional<int> y, int cutoff,
                                     const Ring& ring) {
    if (!subset_contains(X, x)) throw diagram_error("x must lie in X");
    if (cutoff < 2) throw diagram_error("cutoff must be at least 2");
    InductiveKind kind = y ? InductiveKind::D : InductiveKind::C;
    if (kind == InductiveKind::C && !ring.is_unit(ring.delta()))
        throw ring_error("C(X,x) requires delta invertible");
    if (kind == InductiveKind::D && subset_contains(X, *y))
        throw diagram_error("y must lie outside X");

    std::vector<int> ws;
    for (int w : subset_elements(X))
        if (w != x) ws.push_back(w);
    const int blocks = (int)ws.size();

    auto multiplier_aug = [&](int p, int w) -> Rat {
        Element uxw(Diagram::u_ab(n, x, w), ring);
        Element u = [&]() -> Element {
            if (kind == InductiveKind::C) {
                Element scaled = uxw.scaled(ring.inverse(ring.delta()));
                return (p % 2 == 1) ? scaled : Element::one(n, ring) - scaled;
            }
            if (p == 1) return uxw;
            Element uxy(Diagram::u_ab(n, x, *y), ring);
            Element prod = uxw * uxy;
            return (p % 2 == 1) ? prod : Element::one(n, ring) - prod;
        }();
        return augmentation(u);
    };

    ChainComplex cx(ring, -1, cutoff);
    cx.set_rank(-1, 1);
    cx.set_rank(0, 1);
    for (int p = 1; p <= cutoff; ++p) cx.set_rank(p, blocks);
    {
        RatMat m = RatMat::zero(1, 1);
        m.col[0].emplace_back(0, ring.one());
        cx.set_boundary(0, std::move(m));
    }
    {
        RatMat m = RatMat::zero(1, blocks);
        for (int b = 0; b < blocks; ++b) {
            Rat v = multiplier_aug(1, ws[b]);
            if (!ring.is_zero(v)) m.col[b].emplace_back(0, v);
        }
        cx.set_boundary(1, std::move(m));
    }
    for (int p = 2; p <= cutoff; ++p) {
        RatMat m = RatMat::zero(blocks, blocks);
        for (int b = 0; b < blocks; ++b) {
            Rat v = multiplier_aug(p, ws[b]);
            if (!ring.is_zero(v)) m.col[b].emplace_back(b, v);
        }
        cx.set_boundary(p, std::move(m));
    }
    cx.check_d2();
    return cx;
}

}  // namespace brauer
