#pragma once

// Brauer diagrams: perfect matchings of [-n] u [n], with left nodes
// labelled -1..-n and right nodes 1..n.  Composition pastes two diagrams
// side by side; closed loops in the middle column are counted separately
// so callers can convert them into powers of delta.

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace brauer {

struct diagram_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Subsets of [n] = {1,..,n} as bitmasks (bit i-1 <-> element i).
using Subset = std::uint32_t;

Subset subset_of(const std::vector<int>& elems);
std::vector<int> subset_elements(Subset X);
inline bool subset_contains(Subset X, int a) { return (X >> (a - 1)) & 1u; }
inline Subset full_subset(int n) { return n == 0 ? 0u : ((~0u) >> (32 - n)); }

class Diagram {
public:
    // Canonicalizes and validates: every label of [-n] u [n] in exactly
    // one pair.
    Diagram(int n, std::vector<std::pair<int, int>> pairs);

    static Diagram identity(int n);
    // s(i): crossing of strands i, i+1.  u(i): cup/cap on strands i, i+1.
    static Diagram s(int n, int i);
    static Diagram u(int n, int i);
    // u_ab: horizontal arcs {-a,-b} and {a,b}, all other strands straight.
    static Diagram u_ab(int n, int a, int b);
    // w[j-1] is the right-hand label paired with left node -j.
    static Diagram permutation(const std::vector<int>& w);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int partner(int label) const;

    int left_left_pairs() const;   // equals the number of right-right pairs
    int right_right_pairs() const;
    bool is_permutation() const { return left_left_pairs() == 0; }
    // True iff some pair lies inside X on the right-hand side (membership
    // criterion for the ideals J_X).
    bool has_right_pair_within(Subset X) const;

    // Extracts w with pairs {-j, w(j)}; requires is_permutation().
    std::vector<int> to_permutation() const;

    auto operator<=>(const Diagram&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;  // canonical: min first, sorted
};

struct Composition {
    Diagram diagram;
    int loops = 0;
};

// Pastes d1 to the left of d2 and traces the middle column.
Composition compose(const Diagram& d1, const Diagram& d2);

inline constexpr int kDefaultDiagramBound = 6;

// All (2n-1)!! perfect matchings in canonical order.
std::vector<Diagram> enumerate_diagrams(int n, int bound = kDefaultDiagramBound);

std::vector<std::vector<int>> enumerate_permutations(int n);

}  // namespace brauer
