#include "sphshock/chart.hpp"

#include <algorithm>
#include <string>

namespace sphshock {

CharGrid::CharGrid(Region region, int n) : region_(region), n_(n)
{
    if (n < 8)
        raise(ErrKind::BadResolution, "grid needs N >= 8, got " + std::to_string(n));
    if (!(region.epsilon > 0.0))
        raise(ErrKind::ConfigError, "region epsilon must be > 0");
    if (!(region.a > 0.0 && region.a < 1.0))
        raise(ErrKind::ConfigError, "region ratio a must be in (0, 1)");

    h_ = region.epsilon / n;
    hu_ = region.a * h_;

    row_lo_.resize(n + 1);
    col_hi_.assign(n + 1, 0);
    offset_.resize(n + 1);
    row_lo_[0] = 0;
    for (int i = 1; i <= n; ++i)
        row_lo_[i] = std::max(1, static_cast<int>(std::ceil(region.a * i - 1e-12)));
    count_ = 0;
    for (int i = 0; i <= n; ++i) {
        offset_[i] = count_;
        count_ += static_cast<std::size_t>(col_len(i));
        for (int j = row_lo_[i]; j <= i; ++j)
            col_hi_[j] = std::max(col_hi_[j], i);
    }
}

NodeKind CharGrid::classify(int i, int j) const
{
    if (!has_node(i, j))
        return NodeKind::Exterior;
    if (i == j)
        return NodeKind::OnRightShock;
    if (j == row_lo_[i])
        return NodeKind::NearLeftShock;
    return NodeKind::Interior;
}

CharGrid build_grid(const Region& region, int n)
{
    return CharGrid(region, n);
}

PhiResult phi_normalize(const std::function<double(double)>& f, double a, double x_max,
                        int n_max, double tol, int samples)
{
    if (!(a > 0.0 && a < 1.0))
        raise(ErrKind::InadmissibleConfiguration, "phi normalization needs 0 < f'(0) < 1");
    if (std::abs(f(0.0)) > 1e-14)
        raise(ErrKind::InadmissibleConfiguration, "phi normalization needs f(0) = 0");

    PhiResult res;
    res.x.resize(samples + 1);
    double hx = x_max / samples;
    for (int k = 0; k <= samples; ++k)
        res.x[k] = k * hx;

    // contraction and slope checks by sampling
    double fd = (f(hx) - f(0.0)) / hx;
    if (std::abs(fd - a) > 0.05 * std::max(1.0, std::abs(a)) || fd >= 1.0)
        raise(ErrKind::InadmissibleConfiguration, "sampled f'(0) inconsistent with a");
    for (int k = 1; k <= samples; ++k)
        if (std::abs(f(res.x[k])) > res.x[k])
            raise(ErrKind::InadmissibleConfiguration, "f is not contracting on [0, x_max]");

    std::vector<double> y = res.x;     // f^(n)(x)
    std::vector<double> prev = res.x;  // phi_{n-1}
    res.phi = res.x;
    double an = 1.0;
    bool converged = false;
    for (int n = 1; n <= n_max; ++n) {
        an *= a;
        double dsup = 0.0;
        for (int k = 0; k <= samples; ++k) {
            y[k] = f(y[k]);
            res.phi[k] = y[k] / an;
            dsup = std::max(dsup, std::abs(res.phi[k] - prev[k]));
        }
        res.deltas.push_back(dsup);
        res.iterations = n;
        if (dsup <= tol) {
            converged = true;
            break;
        }
        prev = res.phi;
    }
    if (!converged)
        raise(ErrKind::NoConvergence, "phi iteration exceeded n_max");

    res.dphi0 = (-3.0 * res.phi[0] + 4.0 * res.phi[1] - res.phi[2]) / (2.0 * hx);

    // conjugation residual via cubic Lagrange reads of phi at f(x)
    auto read = [&](double xq) {
        double q = xq / hx;
        int k0 = std::clamp(static_cast<int>(q) - 1, 0, samples - 3);
        double L = 0.0;
        for (int m = 0; m < 4; ++m) {
            double w = 1.0;
            for (int l = 0; l < 4; ++l)
                if (l != m)
                    w *= (q - (k0 + l)) / static_cast<double>(m - l);
            L += w * res.phi[k0 + m];
        }
        return L;
    };
    double sup = 0.0;
    for (int k = 0; k <= samples; ++k)
        sup = std::max(sup, std::abs(read(f(res.x[k])) - a * res.phi[k]));
    res.conj_residual = sup;
    return res;
}

}  // namespace sphshock
