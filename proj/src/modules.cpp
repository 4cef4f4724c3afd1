#include "brauer/modules.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace brauer {

BoxDiagram::BoxDiagram(int n, int m, std::vector<std::pair<int, int>> pairs,
                       std::vector<int> box)
    : n_(n), m_(m), pairs_(std::move(pairs)), box_(std::move(box)) {
    if (m < 0 || m > n) throw diagram_error("box size out of range");
    if ((int)box_.size() != m) throw diagram_error("box must absorb exactly m endpoints");
    int free_right = n - m;
    std::set<int> seen;
    auto check_label = [&](int lab) {
        if (lab == 0 || lab < -n || lab > free_right)
            throw diagram_error("box-diagram label out of range: " + std::to_string(lab));
        if (!seen.insert(lab).second)
            throw diagram_error("repeated box-diagram label: " + std::to_string(lab));
    };
    for (auto& [a, b] : pairs_) {
        check_label(a);
        check_label(b);
        if (a > b) std::swap(a, b);
    }
    for (int lab : box_) check_label(lab);
    if ((int)seen.size() != n + free_right)
        throw diagram_error("box diagram does not cover all endpoints");
    std::sort(pairs_.begin(), pairs_.end());
    std::sort(box_.begin(), box_.end());
}

int BoxDiagram::left_left_pairs() const {
    int k = 0;
    for (auto& [a, b] : pairs_)
        if (a < 0 && b < 0) ++k;
    return k;
}

int BoxDiagram::free_right_pairs() const {
    int k = 0;
    for (auto& [a, b] : pairs_)
        if (a > 0 && b > 0) ++k;
    return k;
}

bool BoxDiagram::box_contains(int endpoint) const {
    return std::binary_search(box_.begin(), box_.end(), endpoint);
}

ModuleElement::ModuleElement(const BoxDiagram& d, Ring ring, const Rat& coeff)
    : n_(d.n()), m_(d.m()), ring_(std::move(ring)) {
    add_term(d, coeff);
}

void ModuleElement::add_term(const BoxDiagram& d, const Rat& c) {
    if (d.n() != n_ || d.m() != m_) throw diagram_error("module term shape mismatch");
    auto it = terms_.find(d);
    Rat v = ring_.canon(it == terms_.end() ? c : it->second + c);
    if (v == 0) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[d] = v;
    }
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw diagram_error("module shape mismatch");
    if (ring_ != o.ring_) throw ring_error("ring mismatch");
    ModuleElement r = *this;
    for (auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    return n_ == o.n_ && m_ == o.m_ && ring_ == o.ring_ && terms_ == o.terms_;
}

namespace {

// Endpoints of a box diagram: left nodes -1..-n then free rights 1..n-m.
void box_basis_rec(int n, int m, std::vector<int>& endpoints, size_t next,
                   std::vector<std::pair<int, int>>& pairs, std::vector<int>& box,
                   std::vector<char>& used, std::vector<BoxDiagram>& out) {
    while (next < endpoints.size() && used[next]) ++next;
    if (next == endpoints.size()) {
        if ((int)box.size() == m) out.emplace_back(n, m, pairs, box);
        return;
    }
    used[next] = 1;
    // connect to the box
    if ((int)box.size() < m) {
        box.push_back(endpoints[next]);
        box_basis_rec(n, m, endpoints, next + 1, pairs, box, used, out);
        box.pop_back();
    }
    // or pair with a later endpoint
    for (size_t t = next + 1; t < endpoints.size(); ++t) {
        if (used[t]) continue;
        used[t] = 1;
        pairs.emplace_back(endpoints[next], endpoints[t]);
        box_basis_rec(n, m, endpoints, next + 1, pairs, box, used, out);
        pairs.pop_back();
        used[t] = 0;
    }
    used[next] = 0;
}

}  // namespace

std::vector<BoxDiagram> induced_basis(int n, int m, int bound) {
    if (m < 0 || m > n) throw diagram_error("induced_basis requires 0 <= m <= n");
    if (n > bound) throw diagram_error("enumeration bound exceeded");
    std::vector<int> endpoints;
    for (int j = n; j >= 1; --j) endpoints.push_back(-j);
    for (int j = 1; j <= n - m; ++j) endpoints.push_back(j);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> box;
    std::vector<char> used(endpoints.size(), 0);
    std::vector<BoxDiagram> out;
    box_basis_rec(n, m, endpoints, 0, pairs, box, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoxDiagram> sym_induced_basis(int n, int m, int bound) {
    std::vector<BoxDiagram> out;
    for (auto& v : induced_basis(n, m, bound))
        if (v.left_left_pairs() == 0) out.push_back(v);
    return out;
}

ModuleElement induced_act(const Diagram& d, const BoxDiagram& v, const Ring& ring) {
    if (d.n() != v.n()) throw diagram_error("strand-count mismatch in module action");
    const int n = d.n();
    const int free_right = n - v.m();

    // Nodes: 0..n-1 outer-left (d's left), n..2n-1 middle, 2n..2n+free_right-1
    // outer-right (v's free nodes), and one box node at the end.
    const int OL = 0, MID = n, OR = 2 * n, BOX = 2 * n + free_right;
    std::vector<std::vector<int>> adj(BOX + 1);
    auto add_edge = [&](int x, int y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };
    auto d_node = [&](int label) { return label < 0 ? OL + (-label - 1) : MID + label - 1; };
    auto v_node = [&](int label) { return label < 0 ? MID + (-label - 1) : OR + label - 1; };
    for (auto& [a, b] : d.pairs()) add_edge(d_node(a), d_node(b));
    for (auto& [a, b] : v.pairs()) add_edge(v_node(a), v_node(b));
    for (int lab : v.box()) add_edge(v_node(lab), BOX);

    // Walk from each degree-one node (outer nodes and box stubs).
    std::vector<char> used(BOX + 1, 0);
    std::vector<std::pair<int, int>> out_pairs;
    std::vector<int> out_box;
    auto outer_label = [&](int node) { return node < n ? -(node + 1) : node - OR + 1; };

    // Box-to-box arcs kill the term; track endpoints reached from the box.
    for (size_t e = 0; e < adj[BOX].size(); ++e) {
        int prev = BOX, cur = adj[BOX][e];
        if (used[cur]) continue;  // already traversed from the other side
        while (cur != BOX && !(cur < n || cur >= OR)) {
            used[cur] = 1;
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
        }
        if (cur == BOX) return ModuleElement(v.n(), v.m(), ring);  // box-to-box arc: zero
        used[cur] = 1;
        out_box.push_back(outer_label(cur));
    }
    for (int start = 0; start <= BOX; ++start) {
        bool outer = start < n || (start >= OR && start < BOX);
        if (!outer || used[start]) continue;
        used[start] = 1;
        int prev = -1, cur = start;
        while (true) {
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
            if (cur < n || (cur >= OR && cur < BOX)) break;
            used[cur] = 1;
        }
        used[cur] = 1;
        out_pairs.emplace_back(outer_label(start), outer_label(cur));
    }
    int loops = 0;
    for (int x = MID; x < OR; ++x) {
        if (used[x]) continue;
        ++loops;
        int prev = -1, cur = x;
        while (!used[cur]) {
            used[cur] = 1;
            int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
        }
    }
    return ModuleElement(BoxDiagram(v.n(), v.m(), std::move(out_pairs), std::move(out_box)),
                         ring, ring.pow(ring.delta(), loops));
}

ModuleElement induced_act(const Element& a, const ModuleElement& v) {
    if (a.n() != v.n()) throw diagram_error("strand-count mismatch in module action");
    if (a.ring() != v.ring()) throw ring_error("ring mismatch");
    ModuleElement r(v.n(), v.m(), v.ring());
    for (auto& [d, c] : a.terms()) {
        for (auto& [bd, cv] : v.terms()) {
            ModuleElement piece = induced_act(d, bd, v.ring());
            for (auto& [t, ct] : piece.terms())
                r.add_term(t, v.ring().mul(ct, v.ring().mul(c, cv)));
        }
    }
    return r;
}

std::optional<BoxDiagram> box_project(const Diagram& d, int m) {
    const int n = d.n();
    if (m < 0 || m > n) throw diagram_error("box size out of range");
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> box;
    auto relabel = [&](int lab) { return lab < 0 ? lab : lab - m; };
    for (auto& [a, b] : d.pairs()) {
        bool a_in = a >= 1 && a <= m;
        bool b_in = b >= 1 && b <= m;
        if (a_in && b_in) return std::nullopt;  // arc inside the box
        if (a_in) box.push_back(relabel(b));
        else if (b_in) box.push_back(relabel(a));
        else pairs.emplace_back(relabel(a), relabel(b));
    }
    return BoxDiagram(n, m, std::move(pairs), std::move(box));
}

Diagram box_lift(const BoxDiagram& v) {
    std::vector<std::pair<int, int>> pairs;
    auto unrelabel = [&](int lab) { return lab < 0 ? lab : lab + v.m(); };
    for (auto& [a, b] : v.pairs()) pairs.emplace_back(unrelabel(a), unrelabel(b));
    int slot = 1;
    for (int lab : v.box()) pairs.emplace_back(unrelabel(lab), slot++);
    return Diagram(v.n(), std::move(pairs));
}

QuotientBasis quotient_basis(int n, Subset X, int bound) {
    QuotientBasis qb{n, X, {}};
    for (auto& d : enumerate_diagrams(n, bound))
        if (!d.has_right_pair_within(X)) qb.basis.push_back(d);
    return qb;
}

std::map<Diagram, Rat> quotient_act(const Element& a, const Diagram& b, Subset X) {
    Element prod = a * Element(b, a.ring());
    std::map<Diagram, Rat> out;
    for (auto& [d, c] : prod.terms())
        if (!d.has_right_pair_within(X)) out[d] = c;
    return out;
}

Diagram quotient_right_perm(const Diagram& b, const std::vector<int>& w, int m) {
    if ((int)w.size() != m) throw diagram_error("permutation size mismatch");
    std::vector<int> ext(w);
    for (int j = m + 1; j <= b.n(); ++j) ext.push_back(j);
    Composition comp = compose(b, Diagram::permutation(ext));
    if (comp.loops != 0) throw diagram_error("permutation action created a loop");
    return comp.diagram;
}

FreenessReport sm_freeness_check(int n, int m, int bound) {
    FreenessReport rep;
    rep.n = n;
    rep.m = m;
    QuotientBasis qb = quotient_basis(n, full_subset(m), bound);
    rep.basis_size = (long)qb.basis.size();
    auto perms = enumerate_permutations(m);
    std::set<Diagram> remaining(qb.basis.begin(), qb.basis.end());
    long fact = 1;
    for (int j = 2; j <= m; ++j) fact *= j;
    rep.all_orbits_regular = true;
    while (!remaining.empty()) {
        Diagram b = *remaining.begin();
        std::set<Diagram> orbit;
        for (auto& w : perms) orbit.insert(quotient_right_perm(b, w, m));
        if ((long)orbit.size() != fact) rep.all_orbits_regular = false;
        for (auto& d : orbit) remaining.erase(d);
        ++rep.orbit_count;
    }
    rep.pass = rep.all_orbits_regular && rep.orbit_count * fact == rep.basis_size;
    return rep;
}

TensorIsoReport tensor_iso_check(int n, int m, const Ring& ring, int bound) {
    TensorIsoReport rep;
    rep.n = n;
    rep.m = m;
    Subset X = full_subset(m);
    QuotientBasis qb = quotient_basis(n, X, bound);
    auto box = induced_basis(n, m, bound);
    rep.box_count = (long)box.size();

    // Orbit representatives of the right S_m-action on the quotient basis,
    // each mapped through b |-> box_project(b, m).
    auto perms = enumerate_permutations(m);
    std::set<Diagram> remaining(qb.basis.begin(), qb.basis.end());
    std::map<Diagram, BoxDiagram> orbit_image;  // representative -> box diagram
    std::set<BoxDiagram> images;
    bool bijective = true;
    while (!remaining.empty()) {
        Diagram b = *remaining.begin();
        std::set<BoxDiagram> orbit_boxes;
        for (auto& w : perms) {
            Diagram bw = quotient_right_perm(b, w, m);
            remaining.erase(bw);
            auto pr = box_project(bw, m);
            if (!pr) bijective = false;
            else orbit_boxes.insert(*pr);
        }
        // the whole orbit must map to a single box diagram
        if (orbit_boxes.size() != 1) bijective = false;
        else {
            orbit_image.emplace(b, *orbit_boxes.begin());
            if (!images.insert(*orbit_boxes.begin()).second) bijective = false;
        }
        ++rep.orbit_count;
    }
    bijective = bijective && (long)images.size() == rep.box_count &&
                rep.orbit_count == rep.box_count;
    rep.bijective = bijective;

    // Equivariance: for every generator g, acting before or after the
    // correspondence agrees.  On the quotient side g.b expands over the
    // quotient basis; each surviving term is sent to its box projection.
    rep.equivariant = true;
    std::vector<Diagram> gens;
    for (int i = 1; i <= n - 1; ++i) {
        gens.push_back(Diagram::s(n, i));
        gens.push_back(Diagram::u(n, i));
    }
    for (auto& [b, vbox] : orbit_image) {
        for (auto& g : gens) {
            Element ge(g, ring);
            auto lhs_terms = quotient_act(ge, b, X);
            ModuleElement lhs(n, m, ring);
            for (auto& [d, c] : lhs_terms) {
                auto pr = box_project(d, m);
                if (pr) lhs.add_term(*pr, c);
            }
            ModuleElement rhs = induced_act(ge, ModuleElement(vbox, ring));
            if (!(lhs == rhs)) rep.equivariant = false;
        }
    }
    rep.pass = rep.bijective && rep.equivariant;
    return rep;
}

}  // namespace brauer
