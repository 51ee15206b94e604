#include "gvt/linalg.hpp"

#include <algorithm>

namespace gvt {

namespace {

// Row echelon with full pivoting on nonzero entries. Returns rank and the
// column permutation applied; `rhs` (optional, may be null) is carried along.
int echelon(RatMat& a, RatVV* rhs, std::vector<int>& col_of) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    col_of.resize(cols);
    for (int j = 0; j < cols; ++j) col_of[j] = j;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1, pc = -1;
        for (int j = c; j < cols && pr < 0; ++j)
            for (int i = r; i < rows; ++i)
                if (a(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pc != c) {
            a.col(c).swap(a.col(pc));
            std::swap(col_of[c], col_of[pc]);
        }
        if (pr != r) {
            a.row(r).swap(a.row(pr));
            if (rhs) std::swap((*rhs)[r], (*rhs)[pr]);
        }
        Rat piv = a(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Rat factor = a(i, c) / piv;
            a.row(i) -= factor * a.row(r);
            if (rhs) (*rhs)[i] -= factor * (*rhs)[r];
        }
        ++r;
    }
    return r;
}

}  // namespace

int rat_rank(RatMat a) {
    std::vector<int> col_of;
    return echelon(a, nullptr, col_of);
}

std::optional<RatVV> rat_solve(RatMat a, RatVV b) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    std::vector<int> col_of;
    int rank = echelon(a, &b, col_of);
    for (int i = rank; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVV y = RatVV::Zero(cols);
    for (int i = rank - 1; i >= 0; --i) {
        Rat acc = b[i];
        for (int j = i + 1; j < cols; ++j) acc -= a(i, j) * y[j];
        y[i] = acc / a(i, i);
    }
    RatVV x = RatVV::Zero(cols);
    for (int j = 0; j < cols; ++j) x[col_of[j]] = y[j];
    return x;
}

std::optional<RatMat> rat_inverse(RatMat a) {
    const int n = static_cast<int>(a.rows());
    RatMat inv(n, n);
    for (int k = 0; k < n; ++k) {
        RatVV e = RatVV::Zero(n);
        e[k] = 1;
        auto col = rat_solve(a, e);
        if (!col) return std::nullopt;
        // A singular matrix may still admit a consistent solve; verify.
        RatVV resid = a * (*col) - e;
        for (int i = 0; i < n; ++i)
            if (resid[i] != 0) return std::nullopt;
        inv.col(k) = *col;
    }
    return inv;
}

BigInt int_det(BigMat a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            a.row(k).swap(a.row(swap_row));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::vector<BigInt> smith_invariants(BigMat a) {
    using std::swap;
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    int t = 0;
    const int bound = std::min(rows, cols);
    while (t < bound) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a(i, j) != 0 &&
                    (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        a.row(t).swap(a.row(pr));
        a.col(t).swap(a.col(pc));
        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (a(i, t) != 0) {
                BigInt q = a(i, t) / a(t, t);
                a.row(i) -= q * a.row(t);
                if (a(i, t) != 0) clean = false;
            }
        for (int j = t + 1; j < cols; ++j)
            if (a(t, j) != 0) {
                BigInt q = a(t, j) / a(t, t);
                a.col(j) -= q * a.col(t);
                if (a(t, j) != 0) clean = false;
            }
        if (!clean) continue;  // remainders left; re-pivot on a smaller entry
        // Entry not divisible by the pivot spoils the divisibility chain;
        // fold it into the pivot row and continue.
        bool folded = false;
        for (int i = t + 1; i < rows && !folded; ++i)
            for (int j = t + 1; j < cols && !folded; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    a.row(t) += a.row(i);
                    folded = true;
                }
        if (folded) continue;
        ++t;
    }
    std::vector<BigInt> inv;
    for (int k = 0; k < t; ++k) inv.push_back(abs(a(k, k)));
    return inv;
}

}  // namespace gvt
