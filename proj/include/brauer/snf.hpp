#pragma once

// Exact linear algebra over Z and over the supported fields: sparse
// column echelon forms, Smith normal form (with or without transform
// certificates) and integer kernel lattices.  Everything is
// arbitrary-precision; no floating point.

#include "brauer/ring.hpp"

#include <map>
#include <vector>

namespace brauer {

// Sparse column: (row, value) with rows strictly increasing, values nonzero.
using SparseIntCol = std::vector<std::pair<int, Int>>;

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseIntCol> col;

    static IntMat zero(int r, int c) { return IntMat{r, c, std::vector<SparseIntCol>(c)}; }
    void set(int r, int c, Int v);
    Int get(int r, int c) const;
};

SparseIntCol col_axpy(const SparseIntCol& x, const Int& q, const SparseIntCol& y);  // x - q*y

struct SnfSummary {
    long rank = 0;
    std::vector<Int> factors;  // positive, d_1 | d_2 | ... | d_rank
};

// Invariant factors via sparse column echelon followed by dense SNF of the
// compressed pivot block.  Does not keep transforms.
SnfSummary snf(const IntMat& a);

long int_rank(const IntMat& a);

// A generating set for the column span of `a` as a lattice in Z^rows
// (echelonized, one column per leading row).
std::vector<SparseIntCol> int_image_lattice(const IntMat& a);

// Dense matrices (used for the certificate-carrying routines at small sizes).
using DenseInt = std::vector<std::vector<Int>>;

DenseInt dense_identity(int n);
DenseInt dense_from_sparse(const IntMat& a);
DenseInt dense_mul(const DenseInt& a, const DenseInt& b);

struct SnfCertified {
    // u * a * v = diag(factors) with u, v unimodular; uinv, vinv their inverses.
    DenseInt u, uinv, v, vinv;
    std::vector<Int> factors;  // nonzero diagonal entries, divisibility chain
    long rank = 0;
};

SnfCertified snf_certified(DenseInt a);

// Column echelon with a unimodular column transform: a * v has its zero
// columns exactly in the positions listed in `kernel_cols`.
struct ColEchelonCertified {
    DenseInt v, vinv;
    std::vector<int> kernel_cols;
    long rank = 0;
};

ColEchelonCertified col_echelon_certified(const IntMat& a);

// Solves a * x = b over Z; returns false when no integral solution exists.
bool int_solve(const IntMat& a, const std::vector<Int>& b, std::vector<Int>& x);

// ---- field side -------------------------------------------------------

using SparseFieldCol = std::vector<std::pair<int, Rat>>;

struct FieldMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseFieldCol> col;
};

long field_rank(const FieldMat& a, const Ring& ring);

struct FieldColEchelon {
    std::vector<std::vector<Rat>> v, vinv;  // column transform over the field
    std::vector<int> kernel_cols;
    long rank = 0;
};

FieldColEchelon field_col_echelon(const FieldMat& a, const Ring& ring);

}  // namespace brauer
