#include "sphshock/field.hpp"

#include <algorithm>
#include <cmath>

namespace sphshock::kernels {

namespace {

// Parallel-for over an index range; iterations must write disjoint state.
template <typename Fn>
void for_range(int lo, int hi, Exec exec, Fn fn)
{
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static, 1)
        for (int k = lo; k <= hi; ++k)
            fn(k);
    } else {
        for (int k = lo; k <= hi; ++k)
            fn(k);
    }
}

// derivative at x of the quadratic through three points
double dlagrange3(const double* xs, const double* ys, double x)
{
    double d = 0.0;
    d += ys[0] * (2 * x - xs[1] - xs[2]) / ((xs[0] - xs[1]) * (xs[0] - xs[2]));
    d += ys[1] * (2 * x - xs[0] - xs[2]) / ((xs[1] - xs[0]) * (xs[1] - xs[2]));
    d += ys[2] * (2 * x - xs[0] - xs[1]) / ((xs[2] - xs[0]) * (xs[2] - xs[1]));
    return d;
}

}  // namespace

double lagrange3(const double* xs, const double* ys, double x)
{
    double L = 0.0;
    for (int p = 0; p < 3; ++p) {
        double w = 1.0;
        for (int l = 0; l < 3; ++l)
            if (l != p)
                w *= (x - xs[l]) / (xs[p] - xs[l]);
        L += w * ys[p];
    }
    return L;
}

double read_frac(const std::vector<double>& arr, double q)
{
    int n = static_cast<int>(arr.size()) - 1;
    if (q <= 0.0)
        return arr[0];
    if (q >= n)
        return arr[n];
    if (n < 3) {
        int k = std::min(static_cast<int>(q), n - 1);
        double t = q - k;
        return arr[k] * (1.0 - t) + arr[k + 1] * t;
    }
    int k0 = std::clamp(static_cast<int>(q) - 1, 0, n - 3);
    double L = 0.0;
    for (int m = 0; m < 4; ++m) {
        double w = 1.0;
        for (int l = 0; l < 4; ++l)
            if (l != m)
                w *= (q - (k0 + l)) / static_cast<double>(m - l);
        L += w * arr[k0 + m];
    }
    return L;
}

std::vector<double> d1(const std::vector<double>& y, double h)
{
    int n = static_cast<int>(y.size());
    std::vector<double> d(n, 0.0);
    if (n >= 3) {
        for (int k = 1; k < n - 1; ++k)
            d[k] = (y[k + 1] - y[k - 1]) / (2 * h);
        d[0] = (-3 * y[0] + 4 * y[1] - y[2]) / (2 * h);
        d[n - 1] = (3 * y[n - 1] - 4 * y[n - 2] + y[n - 3]) / (2 * h);
    } else if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / h;
    }
    return d;
}

std::vector<double> cumtrapz(const std::vector<double>& y, double h)
{
    std::vector<double> out(y.size(), 0.0);
    for (std::size_t k = 1; k < y.size(); ++k)
        out[k] = out[k - 1] + 0.5 * h * (y[k - 1] + y[k]);
    return out;
}

void repair_lo(std::vector<double>& arr, int k)
{
    int n = static_cast<int>(arr.size());
    if (n < k + 3)
        return;
    double xs[3] = {double(k), double(k + 1), double(k + 2)};
    double ys[3] = {arr[k], arr[k + 1], arr[k + 2]};
    for (int m = 0; m < k; ++m)
        arr[m] = lagrange3(xs, ys, m);
}

void repair_hi(std::vector<double>& arr, int k)
{
    int n = static_cast<int>(arr.size());
    if (n < k + 3)
        return;
    double xs[3] = {double(n - k - 3), double(n - k - 2), double(n - k - 1)};
    double ys[3] = {arr[n - k - 3], arr[n - k - 2], arr[n - k - 1]};
    for (int m = n - k; m < n; ++m)
        arr[m] = lagrange3(xs, ys, m);
}

void extrapolate_anchors(Field& f, Exec exec)
{
    const CharGrid& g = f.grid();
    f.anchor(0) = f.at(0, 0);
    for_range(1, g.n(), exec, [&](int i) {
        int j0 = g.row_lo(i);
        int len = g.col_len(i);
        double x = g.u(i);
        if (len >= 3) {
            double xs[3] = {g.v(j0), g.v(j0 + 1), g.v(j0 + 2)};
            double ys[3] = {f.at(i, j0), f.at(i, j0 + 1), f.at(i, j0 + 2)};
            f.anchor(i) = lagrange3(xs, ys, x);
        } else if (len == 2) {
            double t = (x - g.v(j0)) / g.h();
            f.anchor(i) = f.at(i, j0) * (1.0 - t) + f.at(i, j0 + 1) * t;
        } else {
            f.anchor(i) = f.at(i, j0);
        }
    });
}

Field d_dv(const Field& f, Exec exec)
{
    const CharGrid& g = f.grid();
    Field out(g);
    for_range(0, g.n(), exec, [&](int i) {
        int j0 = g.row_lo(i);
        int len = g.col_len(i);
        double h = g.h();
        if (len >= 3) {
            for (int j = j0 + 1; j < i; ++j)
                out.at(i, j) = (f.at(i, j + 1) - f.at(i, j - 1)) / (2 * h);
            out.at(i, j0) = (-3 * f.at(i, j0) + 4 * f.at(i, j0 + 1) - f.at(i, j0 + 2)) / (2 * h);
            out.at(i, i) = (3 * f.at(i, i) - 4 * f.at(i, i - 1) + f.at(i, i - 2)) / (2 * h);
        } else if (len == 2) {
            double xs[3] = {g.u(i), g.v(j0), g.v(j0 + 1)};
            double ys[3] = {f.anchor(i), f.at(i, j0), f.at(i, j0 + 1)};
            out.at(i, j0) = dlagrange3(xs, ys, xs[1]);
            out.at(i, j0 + 1) = dlagrange3(xs, ys, xs[2]);
        } else if (i > 0) {
            out.at(i, j0) = (f.at(i, j0) - f.anchor(i)) / (g.v(j0) - g.u(i));
        }
    });
    extrapolate_anchors(out, exec);
    return out;
}

Field d_du(const Field& f, Exec exec)
{
    const CharGrid& g = f.grid();
    Field out(g);
    double hu = g.hu();
    for_range(0, g.n(), exec, [&](int j) {
        int lo = g.col_lo(j), hi = g.col_hi(j);
        int n = hi - lo + 1;
        if (n >= 3) {
            for (int i = lo + 1; i < hi; ++i)
                out.at(i, j) = (f.at(i + 1, j) - f.at(i - 1, j)) / (2 * hu);
            out.at(lo, j) = (-3 * f.at(lo, j) + 4 * f.at(lo + 1, j) - f.at(lo + 2, j)) / (2 * hu);
            out.at(hi, j) = (3 * f.at(hi, j) - 4 * f.at(hi - 1, j) + f.at(hi - 2, j)) / (2 * hu);
        } else if (n == 2) {
            double d = (f.at(hi, j) - f.at(lo, j)) / hu;
            out.at(lo, j) = d;
            out.at(hi, j) = d;
        }
    });
    // single-node rows (origin, top corner): extrapolate along the column
    for (int j : {0, g.n()}) {
        int lo = g.col_lo(j), hi = g.col_hi(j);
        if (hi != lo)
            continue;
        int i = lo;
        if (g.col_len(i) >= 4) {
            double xs[3] = {g.v(j - 3), g.v(j - 2), g.v(j - 1)};
            double ys[3] = {out.at(i, j - 3), out.at(i, j - 2), out.at(i, j - 1)};
            out.at(i, j) = lagrange3(xs, ys, g.v(j));
        }
    }
    extrapolate_anchors(out, exec);
    return out;
}

Field integrate_columns(const Field& q, Exec exec)
{
    const CharGrid& g = q.grid();
    Field out(g);
    for_range(0, g.n(), exec, [&](int i) {
        int j0 = g.row_lo(i);
        double acc = 0.5 * (g.v(j0) - g.u(i)) * (q.anchor(i) + q.at(i, j0));
        out.at(i, j0) = acc;
        for (int j = j0 + 1; j <= i; ++j) {
            acc += 0.5 * g.h() * (q.at(i, j - 1) + q.at(i, j));
            out.at(i, j) = acc;
        }
        out.anchor(i) = 0.0;
    });
    return out;
}

Field integrate_rows(const Field& q, Exec exec)
{
    const CharGrid& g = q.grid();
    Field out(g);
    for_range(0, g.n(), exec, [&](int j) {
        double acc = 0.0;
        out.at(g.col_lo(j), j) = 0.0;
        for (int i = g.col_lo(j) + 1; i <= g.col_hi(j); ++i) {
            acc += 0.5 * g.hu() * (q.at(i - 1, j) + q.at(i, j));
            out.at(i, j) = acc;
        }
    });
    extrapolate_anchors(out, exec);
    return out;
}

std::vector<double> shock2_values(const Field& f)
{
    const CharGrid& g = f.grid();
    std::vector<double> out(g.n() + 1);
    for (int j = 0; j <= g.n(); ++j)
        out[j] = f.at(j, j);
    return out;
}

double column_read(const Field& f, int k, double vstar)
{
    const CharGrid& g = f.grid();
    if (vstar <= g.u(k))
        return f.anchor(k);
    int j0 = g.row_lo(k);
    int len = g.col_len(k);
    // sample chain: anchor at u_k, then lattice rows
    if (len == 1) {
        double t = (vstar - g.u(k)) / (g.v(j0) - g.u(k));
        return f.anchor(k) * (1.0 - t) + f.at(k, j0) * t;
    }
    if (vstar <= g.v(j0 + 1) || len == 2) {
        double xs[3] = {g.u(k), g.v(j0), g.v(j0 + 1)};
        double ys[3] = {f.anchor(k), f.at(k, j0), f.at(k, j0 + 1)};
        return lagrange3(xs, ys, vstar);
    }
    int j = std::min(static_cast<int>(std::floor(vstar / g.h())), k - 1);
    int jlo = std::clamp(j - 1, j0, k - 2);
    double xs[3] = {g.v(jlo), g.v(jlo + 1), g.v(jlo + 2)};
    double ys[3] = {f.at(k, jlo), f.at(k, jlo + 1), f.at(k, jlo + 2)};
    return lagrange3(xs, ys, vstar);
}

std::vector<double> fractional_row_integrals(const Field& q, const std::vector<double>& q_tr2,
                                             Exec exec)
{
    const CharGrid& g = q.grid();
    std::vector<double> W(g.n() + 1, 0.0);
    double a = g.region().a;
    for_range(1, g.n(), exec, [&](int i) {
        double vstar = g.u(i);
        double left_u = a * g.u(i);
        double xprev = left_u;
        double yprev = read_frac(q_tr2, a * i);
        double acc = 0.0;
        int klo = std::max(1, static_cast<int>(std::ceil(a * i - 1e-12)));
        for (int k = klo; k <= i; ++k) {
            if (g.u(k) <= left_u)
                continue;
            double y = column_read(q, k, vstar);
            acc += 0.5 * (g.u(k) - xprev) * (yprev + y);
            xprev = g.u(k);
            yprev = y;
        }
        W[i] = acc;
    });
    return W;
}

double sup_abs_delta(const Field& a, const Field& b, Exec exec)
{
    const std::vector<double>& x = a.values();
    const std::vector<double>& y = b.values();
    double sup = 0.0;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(max : sup)
        for (std::size_t k = 0; k < x.size(); ++k)
            sup = std::max(sup, std::abs(x[k] - y[k]));
    } else {
        for (std::size_t k = 0; k < x.size(); ++k)
            sup = std::max(sup, std::abs(x[k] - y[k]));
    }
    return sup;
}

double sup_abs_delta(const std::vector<double>& a, const std::vector<double>& b)
{
    double sup = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        sup = std::max(sup, std::abs(a[k] - b[k]));
    return sup;
}

}  // namespace sphshock::kernels
