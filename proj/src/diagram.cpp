#include "brauer/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace brauer {

namespace {

// label in [-n]u[n]  ->  slot in [0, 2n)
int slot(int label, int n) { return label < 0 ? -label - 1 : n + label - 1; }
int unslot(int s, int n) { return s < n ? -(s + 1) : s - n + 1; }

}  // namespace

Subset subset_of(const std::vector<int>& elems) {
    Subset X = 0;
    for (int a : elems) {
        if (a < 1 || a > 31) throw diagram_error("subset element out of range: " + std::to_string(a));
        X |= (1u << (a - 1));
    }
    return X;
}

std::vector<int> subset_elements(Subset X) {
    std::vector<int> out;
    for (int a = 1; a <= 31; ++a)
        if (subset_contains(X, a)) out.push_back(a);
    return out;
}

Diagram::Diagram(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
    if (n < 0) throw diagram_error("negative strand count");
    if ((int)pairs_.size() != n)
        throw diagram_error("expected " + std::to_string(n) + " pairs, got " +
                            std::to_string(pairs_.size()));
    std::vector<int> seen(2 * n, 0);
    for (auto& [a, b] : pairs_) {
        for (int lab : {a, b}) {
            if (lab == 0 || lab < -n || lab > n)
                throw diagram_error("label out of range: " + std::to_string(lab));
            if (seen[slot(lab, n)]++)
                throw diagram_error("repeated label: " + std::to_string(lab));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
}

Diagram Diagram::identity(int n) {
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j <= n; ++j) p.emplace_back(-j, j);
    return Diagram(n, std::move(p));
}

Diagram Diagram::s(int n, int i) {
    if (i < 1 || i > n - 1) throw diagram_error("generator index out of range");
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j <= n; ++j) {
        if (j == i) p.emplace_back(-i, i + 1);
        else if (j == i + 1) p.emplace_back(-(i + 1), i);
        else p.emplace_back(-j, j);
    }
    return Diagram(n, std::move(p));
}

Diagram Diagram::u(int n, int i) {
    if (i < 1 || i > n - 1) throw diagram_error("generator index out of range");
    return u_ab(n, i, i + 1);
}

Diagram Diagram::u_ab(int n, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) throw diagram_error("bad U_ab indices");
    std::vector<std::pair<int, int>> p;
    p.emplace_back(-a, -b);
    p.emplace_back(a, b);
    for (int j = 1; j <= n; ++j)
        if (j != a && j != b) p.emplace_back(-j, j);
    return Diagram(n, std::move(p));
}

Diagram Diagram::permutation(const std::vector<int>& w) {
    int n = (int)w.size();
    std::vector<std::pair<int, int>> p;
    for (int j = 1; j <= n; ++j) p.emplace_back(-j, w[j - 1]);
    return Diagram(n, std::move(p));
}

int Diagram::partner(int label) const {
    for (auto& [a, b] : pairs_) {
        if (a == label) return b;
        if (b == label) return a;
    }
    throw diagram_error("label not present: " + std::to_string(label));
}

int Diagram::left_left_pairs() const {
    int k = 0;
    for (auto& [a, b] : pairs_)
        if (a < 0 && b < 0) ++k;
    return k;
}

int Diagram::right_right_pairs() const {
    int k = 0;
    for (auto& [a, b] : pairs_)
        if (a > 0 && b > 0) ++k;
    return k;
}

bool Diagram::has_right_pair_within(Subset X) const {
    for (auto& [a, b] : pairs_)
        if (a > 0 && b > 0 && subset_contains(X, a) && subset_contains(X, b)) return true;
    return false;
}

std::vector<int> Diagram::to_permutation() const {
    std::vector<int> w(n_);
    for (auto& [a, b] : pairs_) {
        if (a >= 0 || b <= 0) throw diagram_error("not a permutation diagram");
        w[-a - 1] = b;
    }
    return w;
}

Composition compose(const Diagram& d1, const Diagram& d2) {
    if (d1.n() != d2.n()) throw diagram_error("strand-count mismatch in composition");
    const int n = d1.n();

    // Node universe: 0..n-1 outer-left (d1 left), n..2n-1 middle,
    // 2n..3n-1 outer-right (d2 right).  Each node carries exactly two
    // incidences except the outer ones, which carry one.
    const int OL = 0, MID = n, OR = 2 * n;
    std::vector<std::array<int, 2>> adj(3 * n, {-1, -1});
    auto push = [&](int x, int y) {
        if (adj[x][0] == -1) adj[x][0] = y;
        else adj[x][1] = y;
    };
    auto add_edge = [&](int u, int v) {
        push(u, v);
        push(v, u);
    };
    auto d1_node = [&](int label) { return label < 0 ? OL + (-label - 1) : MID + label - 1; };
    auto d2_node = [&](int label) { return label < 0 ? MID + (-label - 1) : OR + label - 1; };
    for (auto& [a, b] : d1.pairs()) add_edge(d1_node(a), d1_node(b));
    for (auto& [a, b] : d2.pairs()) add_edge(d2_node(a), d2_node(b));

    std::vector<char> used(3 * n, 0);
    std::vector<std::pair<int, int>> out_pairs;
    auto outer_label = [&](int node) { return node < n ? -(node + 1) : node - OR + 1; };

    // Walk from each outer node to the outer node at the other end.
    for (int start = 0; start < 3 * n; ++start) {
        bool outer = start < n || start >= OR;
        if (!outer || used[start]) continue;
        used[start] = 1;
        int prev = -1, cur = start;
        while (true) {
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
            used[cur] = 1;
            if (cur < n || cur >= OR) break;
        }
        out_pairs.emplace_back(outer_label(start), outer_label(cur));
    }

    // Remaining unvisited middle nodes form closed loops.
    int loops = 0;
    for (int v = MID; v < OR; ++v) {
        if (used[v]) continue;
        ++loops;
        int prev = -1, cur = v;
        while (!used[cur]) {
            used[cur] = 1;
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
        }
    }
    return Composition{Diagram(n, std::move(out_pairs)), loops};
}

namespace {

void enumerate_rec(int n, std::vector<int>& partner, int first_free,
                   std::vector<std::pair<int, int>>& acc, std::vector<Diagram>& out) {
    int s = first_free;
    while (s < 2 * n && partner[s] != -1) ++s;
    if (s == 2 * n) {
        out.emplace_back(n, acc);
        return;
    }
    for (int t = s + 1; t < 2 * n; ++t) {
        if (partner[t] != -1) continue;
        partner[s] = t;
        partner[t] = s;
        acc.emplace_back(unslot(s, n), unslot(t, n));
        enumerate_rec(n, partner, s + 1, acc, out);
        acc.pop_back();
        partner[s] = -1;
        partner[t] = -1;
    }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int n, int bound) {
    if (n < 0) throw diagram_error("negative strand count");
    if (n > bound)
        throw diagram_error("enumeration bound exceeded: n = " + std::to_string(n) +
                            " > bound = " + std::to_string(bound));
    std::vector<int> partner(2 * n, -1);
    std::vector<std::pair<int, int>> acc;
    std::vector<Diagram> out;
    enumerate_rec(n, partner, 0, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> enumerate_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace brauer
