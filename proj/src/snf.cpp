#include "brauer/snf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brauer {

void IntMat::set(int r, int c, Int v) {
    auto& column = col[c];
    auto it = std::lower_bound(column.begin(), column.end(), r,
                               [](const auto& p, int row) { return p.first < row; });
    if (it != column.end() && it->first == r) {
        if (v == 0) column.erase(it);
        else it->second = std::move(v);
    } else if (v != 0) {
        column.insert(it, {r, std::move(v)});
    }
}

Int IntMat::get(int r, int c) const {
    for (auto& [row, val] : col[c])
        if (row == r) return val;
    return 0;
}

SparseIntCol col_axpy(const SparseIntCol& x, const Int& q, const SparseIntCol& y) {
    SparseIntCol out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -q * y[j].second);
            ++j;
        } else {
            Int v = x[i].second - q * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// Floor division: b = q*a + r with 0 <= r < |a|.
Int floor_quot(const Int& b, const Int& a) {
    Int q = b / a;
    Int r = b - q * a;
    if (r < 0) q += (a > 0 ? -1 : 1);
    return q;
}

long long floor_quot64(long long b, long long a) {
    long long q = b / a;
    long long r = b - q * a;
    if (r < 0) q += (a > 0 ? -1 : 1);
    return q;
}

struct IntEchelon {
    std::map<int, SparseIntCol> pivots;  // leading row -> column (leading value > 0)

    void insert(SparseIntCol c) {
        while (!c.empty()) {
            int r = c.front().first;
            auto it = pivots.find(r);
            if (it == pivots.end()) {
                if (c.front().second < 0)
                    for (auto& [row, v] : c) v = -v;
                pivots.emplace(r, std::move(c));
                return;
            }
            SparseIntCol& p = it->second;
            // keep the sparser column as the pivot when both lead by a unit
            if (abs(c.front().second) == 1 && c.size() < p.size()) std::swap(p, c);
            Int q = floor_quot(c.front().second, p.front().second);
            if (q != 0) c = col_axpy(c, q, p);
            if (!c.empty() && c.front().first == r) {
                // 0 < leading(c) < leading(p): shrink the pivot (Euclid step).
                std::swap(p, c);
            }
        }
    }
};

// int64 fast path for the same echelon; falls back to the exact path when
// any intermediate value approaches overflow.
using Col64 = std::vector<std::pair<int, long long>>;

constexpr long long kGuard = 1LL << 57;

bool axpy64(Col64& out, const Col64& x, long long q, const Col64& y) {
    out.clear();
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            long long yv = y[j].second;
            if (std::abs(q) > kGuard / (std::abs(yv) + 1)) return false;
            out.emplace_back(y[j].first, -q * yv);
            ++j;
        } else {
            long long yv = y[j].second;
            if (std::abs(q) > kGuard / (std::abs(yv) + 1)) return false;
            long long prod = q * yv;
            if (std::abs(x[i].second) > kGuard || std::abs(prod) > kGuard) return false;
            long long v = x[i].second - prod;
            if (v != 0) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return true;
}

struct Echelon64 {
    std::map<int, Col64> pivots;
    Col64 scratch;

    bool insert(Col64 c) {
        while (!c.empty()) {
            int r = c.front().first;
            auto it = pivots.find(r);
            if (it == pivots.end()) {
                if (c.front().second < 0)
                    for (auto& [row, v] : c) v = -v;
                pivots.emplace(r, std::move(c));
                return true;
            }
            Col64& p = it->second;
            if (std::abs(c.front().second) == 1 && c.size() < p.size()) std::swap(p, c);
            long long q = floor_quot64(c.front().second, p.front().second);
            if (q != 0) {
                if (!axpy64(scratch, c, q, p)) return false;
                std::swap(c, scratch);
            }
            if (!c.empty() && c.front().first == r) std::swap(p, c);
        }
        return true;
    }
};

// Echelonizes the columns of `a`, returning the pivot columns of the image
// lattice (exact).  Tries int64 first and redoes everything in
// arbitrary precision if values grow too large.
std::vector<SparseIntCol> image_lattice(const IntMat& a) {
    // sparsest columns first keeps fill-in low
    std::vector<int> order;
    order.reserve(a.col.size());
    for (int c = 0; c < (int)a.col.size(); ++c)
        if (!a.col[c].empty()) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.col[i].size() < a.col[j].size(); });

    bool fits64 = true;
    for (int c : order)
        for (auto& [r, v] : a.col[c])
            if (abs(v) > (1LL << 40)) fits64 = false;

    if (fits64) {
        Echelon64 ech;
        bool ok = true;
        for (int c : order) {
            Col64 col;
            col.reserve(a.col[c].size());
            for (auto& [r, v] : a.col[c]) col.emplace_back(r, (long long)v);
            if (!ech.insert(std::move(col))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<SparseIntCol> out;
            out.reserve(ech.pivots.size());
            for (auto& [r, col] : ech.pivots) {
                SparseIntCol c;
                c.reserve(col.size());
                for (auto& [row, v] : col) c.emplace_back(row, Int(v));
                out.push_back(std::move(c));
            }
            return out;
        }
    }

    IntEchelon ech;
    for (int c : order) ech.insert(a.col[c]);
    std::vector<SparseIntCol> out;
    out.reserve(ech.pivots.size());
    for (auto& [r, col] : ech.pivots) out.push_back(std::move(col));
    return out;
}

// Textbook dense SNF without transforms; returns the diagonal (nonzero,
// divisibility chain, positive).
std::vector<Int> dense_snf_diag(DenseInt a) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    std::vector<Int> diag;
    int t = 0;
    while (true) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == -1 || abs(a[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = abs(a[i][j]);
                }
        if (pi == -1) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_quot(a[i][t], a[t][t]);
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_quot(a[t][j], a[t][t]);
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // corner must divide the remaining block
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

SnfSummary snf(const IntMat& a) {
    std::vector<SparseIntCol> gens = image_lattice(a);
    SnfSummary out;
    out.rank = (long)gens.size();
    if (out.rank == 0) return out;

    bool all_unit = true;
    for (auto& c : gens)
        if (!(c.front().second == 1 || c.front().second == -1)) {
            all_unit = false;
            break;
        }
    if (all_unit) {
        // echelon with distinct unit leading rows: the lattice is a direct
        // summand, every invariant factor is 1
        out.factors.assign(out.rank, Int(1));
        return out;
    }

    // Compress to the rows actually used and run the dense SNF.
    std::set<int> rows_used;
    for (auto& c : gens)
        for (auto& [row, v] : c) rows_used.insert(row);
    std::map<int, int> row_index;
    int k = 0;
    for (int r : rows_used) row_index[r] = k++;
    DenseInt dense(rows_used.size(), std::vector<Int>(gens.size(), Int(0)));
    for (size_t j = 0; j < gens.size(); ++j)
        for (auto& [row, v] : gens[j]) dense[row_index[row]][j] = v;
    out.factors = dense_snf_diag(std::move(dense));
    return out;
}

long int_rank(const IntMat& a) { return (long)image_lattice(a).size(); }

std::vector<SparseIntCol> int_image_lattice(const IntMat& a) { return image_lattice(a); }

DenseInt dense_identity(int n) {
    DenseInt m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

DenseInt dense_from_sparse(const IntMat& a) {
    DenseInt m(a.rows, std::vector<Int>(a.cols, Int(0)));
    for (int c = 0; c < a.cols; ++c)
        for (auto& [r, v] : a.col[c]) m[r][c] = v;
    return m;
}

DenseInt dense_mul(const DenseInt& a, const DenseInt& b) {
    int n = (int)a.size();
    int k = n ? (int)a[0].size() : 0;
    int m = k ? (int)b[0].size() : (b.empty() ? 0 : (int)b[0].size());
    DenseInt out(n, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

namespace {

struct TransformOps {
    DenseInt *u, *uinv, *v, *vinv;
    DenseInt* a;
    int rows, cols;

    void row_swap(int i, int j) {
        std::swap((*a)[i], (*a)[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
        if (uinv)
            for (auto& row : *uinv) std::swap(row[i], row[j]);
    }
    // row_i -= q * row_j
    void row_sub(int i, const Int& q, int j) {
        for (int c = 0; c < cols; ++c) (*a)[i][c] -= q * (*a)[j][c];
        if (u)
            for (size_t c = 0; c < (*u)[i].size(); ++c) (*u)[i][c] -= q * (*u)[j][c];
        if (uinv)
            for (auto& row : *uinv) row[j] += q * row[i];
    }
    void row_negate(int i) {
        for (int c = 0; c < cols; ++c) (*a)[i][c] = -(*a)[i][c];
        if (u)
            for (auto& x : (*u)[i]) x = -x;
        if (uinv)
            for (auto& row : *uinv) row[i] = -row[i];
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap((*a)[r][i], (*a)[r][j]);
        if (v)
            for (auto& row : *v) std::swap(row[i], row[j]);
        if (vinv) std::swap((*vinv)[i], (*vinv)[j]);
    }
    // col_i -= q * col_j
    void col_sub(int i, const Int& q, int j) {
        for (int r = 0; r < rows; ++r) (*a)[r][i] -= q * (*a)[r][j];
        if (v)
            for (auto& row : *v) row[i] -= q * row[j];
        if (vinv)
            for (size_t c = 0; c < (*vinv)[j].size(); ++c) (*vinv)[j][c] += q * (*vinv)[i][c];
    }
    void col_negate(int i) {
        for (int r = 0; r < rows; ++r) (*a)[r][i] = -(*a)[r][i];
        if (v)
            for (auto& row : *v) row[i] = -row[i];
        if (vinv)
            for (auto& x : (*vinv)[i]) x = -x;
    }
};

}  // namespace

SnfCertified snf_certified(DenseInt a) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    SnfCertified out;
    out.u = dense_identity(rows);
    out.uinv = dense_identity(rows);
    out.v = dense_identity(cols);
    out.vinv = dense_identity(cols);
    TransformOps ops{&out.u, &out.uinv, &out.v, &out.vinv, &a, rows, cols};

    int t = 0;
    while (true) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == -1 || abs(a[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = abs(a[i][j]);
                }
        if (pi == -1) break;
        if (pi != t) ops.row_swap(t, pi);
        if (pj != t) ops.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_quot(a[i][t], a[t][t]);
                if (q != 0) ops.row_sub(i, q, t);
                if (a[i][t] != 0) {
                    ops.row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_quot(a[t][j], a[t][t]);
                if (q != 0) ops.col_sub(j, q, t);
                if (a[t][j] != 0) {
                    ops.col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) {
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            ops.row_sub(t, Int(-1), i);  // row_t += row_i
                            clean = false;
                        }
            }
        }
        if (a[t][t] < 0) ops.row_negate(t);
        out.factors.push_back(a[t][t]);
        ++t;
    }
    out.rank = t;
    return out;
}

ColEchelonCertified col_echelon_certified(const IntMat& a) {
    DenseInt m = dense_from_sparse(a);
    const int rows = a.rows, cols = a.cols;
    ColEchelonCertified out;
    out.v = dense_identity(cols);
    out.vinv = dense_identity(cols);
    TransformOps ops{nullptr, nullptr, &out.v, &out.vinv, &m, rows, cols};

    // Gauss-style column elimination with Euclid steps, sweeping rows top
    // to bottom; after the sweep the nonzero columns have distinct leading
    // rows and the remaining columns are zero.
    std::vector<char> used((size_t)cols, 0);
    for (int r = 0; r < rows; ++r) {
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (!used[j] && m[r][j] != 0 && (p == -1 || abs(m[r][j]) < abs(m[r][p]))) p = j;
        if (p == -1) continue;
        bool again = true;
        while (again) {
            again = false;
            for (int j = 0; j < cols; ++j) {
                if (j == p || used[j] || m[r][j] == 0) continue;
                Int q = floor_quot(m[r][j], m[r][p]);
                if (q != 0) ops.col_sub(j, q, p);
                if (m[r][j] != 0) {
                    // remainder smaller than the pivot: swap roles
                    std::swap(p, j);
                    again = true;
                }
            }
        }
        if (m[r][p] < 0) ops.col_negate(p);
        used[p] = 1;
        ++out.rank;
    }
    for (int j = 0; j < cols; ++j)
        if (!used[j]) out.kernel_cols.push_back(j);
    return out;
}

bool int_solve(const IntMat& a, const std::vector<Int>& b, std::vector<Int>& x) {
    SnfCertified cert = snf_certified(dense_from_sparse(a));
    // a = uinv * D * vinv, so a x = b  <=>  D (vinv x) = u b.
    std::vector<Int> ub(a.rows, Int(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j) ub[i] += cert.u[i][j] * b[j];
    std::vector<Int> y(a.cols, Int(0));
    for (int i = 0; i < a.rows; ++i) {
        if (i < cert.rank) {
            if (ub[i] % cert.factors[i] != 0) return false;
            y[i] = ub[i] / cert.factors[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x.assign(a.cols, Int(0));
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.cols; ++j) x[i] += cert.v[i][j] * y[j];
    return true;
}

long field_rank(const FieldMat& a, const Ring& ring) {
    std::map<int, SparseFieldCol> pivots;
    for (auto c : a.col) {
        while (!c.empty()) {
            int r = c.front().first;
            auto it = pivots.find(r);
            if (it == pivots.end()) {
                pivots.emplace(r, std::move(c));
                break;
            }
            const SparseFieldCol& p = it->second;
            Rat q = ring.mul(c.front().second, ring.inverse(p.front().second));
            SparseFieldCol next;
            next.reserve(c.size() + p.size());
            size_t i = 0, j = 0;
            while (i < c.size() || j < p.size()) {
                if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
                    next.push_back(c[i++]);
                } else if (i == c.size() || p[j].first < c[i].first) {
                    Rat v = ring.neg(ring.mul(q, p[j].second));
                    if (!ring.is_zero(v)) next.emplace_back(p[j].first, v);
                    ++j;
                } else {
                    Rat v = ring.sub(c[i].second, ring.mul(q, p[j].second));
                    if (!ring.is_zero(v)) next.emplace_back(c[i].first, v);
                    ++i;
                    ++j;
                }
            }
            c = std::move(next);
        }
    }
    return (long)pivots.size();
}

FieldColEchelon field_col_echelon(const FieldMat& a, const Ring& ring) {
    const int rows = a.rows, cols = a.cols;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols, Rat(0)));
    for (int c = 0; c < cols; ++c)
        for (auto& [r, v] : a.col[c]) m[r][c] = v;
    FieldColEchelon out;
    out.v.assign(cols, std::vector<Rat>(cols, Rat(0)));
    out.vinv.assign(cols, std::vector<Rat>(cols, Rat(0)));
    for (int i = 0; i < cols; ++i) out.v[i][i] = out.vinv[i][i] = 1;

    auto col_sub = [&](int i, const Rat& q, int j) {  // col_i -= q * col_j
        for (int r = 0; r < rows; ++r) m[r][i] = ring.sub(m[r][i], ring.mul(q, m[r][j]));
        for (int r = 0; r < cols; ++r) out.v[r][i] = ring.sub(out.v[r][i], ring.mul(q, out.v[r][j]));
        for (int c = 0; c < cols; ++c) out.vinv[j][c] = ring.add(out.vinv[j][c], ring.mul(q, out.vinv[i][c]));
    };

    std::vector<char> used((size_t)cols, 0);
    for (int r = 0; r < rows; ++r) {
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (!used[j] && !ring.is_zero(m[r][j])) {
                p = j;
                break;
            }
        if (p == -1) continue;
        for (int j = 0; j < cols; ++j) {
            if (j == p || used[j] || ring.is_zero(m[r][j])) continue;
            col_sub(j, ring.mul(m[r][j], ring.inverse(m[r][p])), p);
        }
        used[p] = 1;
        ++out.rank;
    }
    for (int j = 0; j < cols; ++j)
        if (!used[j]) out.kernel_cols.push_back(j);
    return out;
}

}  // namespace brauer
