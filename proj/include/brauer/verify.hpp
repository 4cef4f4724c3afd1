#pragma once

// Theorem-verification suites at desk scale: each check records instance
// parameters, the expected and computed values, and a pass bit.

#include "brauer/bar.hpp"
#include "brauer/complex.hpp"
#include "brauer/homology.hpp"
#include "brauer/maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

struct CheckLine {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool pass = true;

    void add(std::string name, std::string expected, std::string computed, bool ok);
    void add(std::string name, bool ok);
};

// Presentation relations for all admissible indices.
SuiteReport verify_relations(int n, const Ring& ring);

// Inverse isomorphisms iota_*/pi_* on Tor_i(t,t), i < D (delta must be a unit).
SuiteReport verify_thmA(int n, int D, const Ring& ring);

// iota_*: H_i(S_n) -> Tor_i(Br_n) is an isomorphism for n >= 2i+1; for
// n = 2, i = 1, delta = 0 the map fails to be surjective (sharpness).
SuiteReport verify_thmB(int n, int i, const Ring& ring);

// The stabilisation H_i(S_{n-1}) -> Tor_i(Br_n) is onto for i <= (n-1)/2.
SuiteReport verify_surjection63(int n, int i, const Ring& ring);

// Tor_i(t, Br_n (x)_{Br_m} t) ~= H_i(S_m) for i < D, plus the composite
// identities of iota_* and pi_* on these groups.
SuiteReport verify_thm41(int n, int m, int D, const Ring& ring);

// Tor_i(t, Br_n/J_X) = 0 for 1 <= i < D, over every X admitted by the
// hypotheses (|X| < n, or any X when delta is a unit).
SuiteReport verify_thm31(int n, int D, const Ring& ring);

// Acyclicity of the inductive resolutions C(X,x)/D(X,x,y) through the
// cutoff, and of their t-tensored collapses.
SuiteReport verify_inductive(int n, Subset X, int x, std::optional<int> y, int cutoff,
                             const Ring& ring);

// Round-trip and chain-map checks for the tuple map, all (k, j).
SuiteReport verify_phi(int n, const Ring& ring);

// Shapiro's lemma for symmetric groups: both sides computed independently.
SuiteReport verify_shapiro(int n, int m, int D, const Ring& ring);

// H_*(S_m; t) for 0 <= i < D via the bar complex over RS_m.
std::vector<HomologyGroup> symmetric_homology(int m, int D, const Ring& ring);

}  // namespace brauer
