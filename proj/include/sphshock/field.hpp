#pragma once

#include <vector>

#include "sphshock/chart.hpp"

namespace sphshock {

/// Execution policy for the grid kernels. Parallel loops write disjoint
/// outputs and reduce only through max, so both policies produce bit-identical
/// results; the serial path is the reference implementation.
enum class Exec { Serial, Parallel };

/// Grid samples in ragged column-major storage plus one anchor value per
/// column at the clipped left-shock height v = u_i.
class Field {
public:
    explicit Field(const CharGrid& grid)
        : grid_(&grid), vals_(grid.node_count(), 0.0), anchor_(grid.n() + 1, 0.0) {}

    const CharGrid& grid() const { return *grid_; }

    double at(int i, int j) const { return vals_[grid_->flat(i, j)]; }
    double& at(int i, int j) { return vals_[grid_->flat(i, j)]; }

    double anchor(int i) const { return anchor_[i]; }
    double& anchor(int i) { return anchor_[i]; }

    const std::vector<double>& values() const { return vals_; }
    const std::vector<double>& anchors() const { return anchor_; }

private:
    const CharGrid* grid_;
    std::vector<double> vals_;
    std::vector<double> anchor_;
};

namespace kernels {

/// Quadratic Lagrange evaluation through (xs[k], ys[k]) at x.
double lagrange3(const double* xs, const double* ys, double x);

/// Cubic Lagrange read of a uniformly indexed array at fractional index q
/// (clamped 4-point window; linear for very short arrays).
double read_frac(const std::vector<double>& arr, double q);

/// Second-order first derivative of a uniform 1D array.
std::vector<double> d1(const std::vector<double>& y, double h);

/// Cumulative trapezoid of a uniform 1D array from index 0.
std::vector<double> cumtrapz(const std::vector<double>& y, double h);

/// Replace the first k (last k) entries by quadratic extrapolation from the
/// next three; used to repair trace entries whose stencils were deficient.
void repair_lo(std::vector<double>& arr, int k);
void repair_hi(std::vector<double>& arr, int k);

/// Column-direction derivative d/dv; anchor-augmented stencils on short
/// columns, anchors filled by extrapolation.
Field d_dv(const Field& f, Exec exec);

/// Row-direction derivative d/du; the single-node corner rows (origin and
/// (N, N)) are filled by column extrapolation afterwards.
Field d_du(const Field& f, Exec exec);

/// Quadratic extrapolation of each column's lattice values down to its anchor.
void extrapolate_anchors(Field& f, Exec exec);

/// Cumulative column integral from the anchor: out(i,j) = int_{u_i}^{v_j} q(u_i, .) dv.
Field integrate_columns(const Field& q, Exec exec);

/// Cumulative row integral from the right shock: out(i,j) = int_{a v_j}^{u_i} q(., v_j) du.
/// Anchors are extrapolated (row integrals are O(u - a v) small there).
Field integrate_rows(const Field& q, Exec exec);

/// Values at the right-shock nodes (j, j).
std::vector<double> shock2_values(const Field& f);

/// Interpolated read of column k at height vstar in [u_k, v_{row_hi}]; uses
/// the anchor plus lattice rows (quadratic window).
double column_read(const Field& f, int k, double vstar);

/// W[i] = int over the fractional row v = u_i of q from u' = a u_i to u_i;
/// the left endpoint is the right-shock restriction q_tr2 read at index a i.
std::vector<double> fractional_row_integrals(const Field& q, const std::vector<double>& q_tr2,
                                             Exec exec);

double sup_abs_delta(const Field& a, const Field& b, Exec exec);
double sup_abs_delta(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace kernels

}  // namespace sphshock
