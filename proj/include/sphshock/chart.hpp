#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sphshock/errors.hpp"

namespace sphshock {

/// Characteristic-coordinate triangle T_eps = {0 <= u <= v <= u/a <= eps},
/// bounded by the left shock u = v, the right shock u = a v, and the outgoing
/// characteristic u = a eps.
struct Region {
    double epsilon = 0.0;
    double a = 0.0;  // coordinate ratio in (0, 1)

    bool contains(double u, double v) const
    {
        return 0.0 <= u && u <= v && a * v <= u && u <= a * epsilon;
    }
};

enum class NodeKind { Exterior, Interior, OnRightShock, NearLeftShock };

/// Anisotropic lattice over T_eps: v_j = j h with h = eps/N, u_i = a i h.
/// The right shock u = a v is exactly the index diagonal (i = j); the left
/// shock u = v cuts each column at its anchor height v = u_i, one clipped
/// sub-cell below the first full lattice row.
///
/// Column i carries rows j in [row_lo(i), i]; row j spans columns [j, col_hi(j)].
class CharGrid {
public:
    CharGrid(Region region, int n);

    const Region& region() const { return region_; }
    int n() const { return n_; }
    double h() const { return h_; }    // v spacing
    double hu() const { return hu_; }  // u spacing = a h

    double u(int i) const { return i * hu_; }
    double v(int j) const { return j * h_; }

    int row_lo(int i) const { return row_lo_[i]; }
    int row_hi(int i) const { return i; }
    int col_lo(int j) const { return j; }
    int col_hi(int j) const { return col_hi_[j]; }

    int col_len(int i) const { return i - row_lo_[i] + 1; }
    std::size_t node_count() const { return count_; }

    bool has_node(int i, int j) const
    {
        return i >= 0 && i <= n_ && j >= row_lo_[i] && j <= i;
    }

    std::size_t flat(int i, int j) const { return offset_[i] + (j - row_lo_[i]); }

    NodeKind classify(int i, int j) const;

private:
    Region region_;
    int n_;
    double h_, hu_;
    std::vector<int> row_lo_, col_hi_;
    std::vector<std::size_t> offset_;
    std::size_t count_;
};

CharGrid build_grid(const Region& region, int n);

/// Result of the normalization iteration phi_n(x) = f^(n)(x) / a^n.
struct PhiResult {
    std::vector<double> x;       // uniform samples of [0, x_max]
    std::vector<double> phi;     // converged phi on the samples
    std::vector<double> deltas;  // sup|phi_{n+1} - phi_n| history
    int iterations = 0;
    double dphi0 = 0.0;          // one-sided estimate of phi'(0)
    double conj_residual = 0.0;  // sup |phi(f(x)) - a phi(x)|
};

/// Koenigs-type normalization: iterate phi_n = f^(n)/a^n pointwise until the
/// sup delta falls below tol. Preconditions (f(0) = 0, |f(x)| <= x, f'(0) = a
/// in (0,1)) are checked by sampling.
PhiResult phi_normalize(const std::function<double(double)>& f, double a, double x_max,
                        int n_max, double tol, int samples = 2048);

}  // namespace sphshock
