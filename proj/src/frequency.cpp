#include "crm/frequency.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "crm/numerics.hpp"

namespace crm {

FrequencyDistribution::FrequencyDistribution(std::vector<double> pmf, double trunc_mass)
    : pmf_(std::move(pmf)), trunc_mass_(trunc_mass) {
    if (pmf_.empty()) throw std::invalid_argument("frequency: empty pmf");
    cdf_.resize(pmf_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf_.size(); ++i) {
        if (pmf_[i] < -1e-15) throw std::invalid_argument("frequency: negative pmf value");
        acc += pmf_[i];
        cdf_[i] = std::min(acc, 1.0);
    }
}

FrequencyDistribution FrequencyDistribution::poisson(double mean, double tail_eps) {
    if (mean < 0.0) throw std::invalid_argument("poisson: mean must be >= 0");
    if (mean == 0.0) return degenerate(0);
    std::vector<double> p;
    double term = std::exp(-mean);
    double acc = term;
    p.push_back(term);
    for (int n = 1; n < 100000; ++n) {
        term *= mean / n;
        p.push_back(term);
        acc += term;
        if (1.0 - acc < tail_eps && n > mean) break;
    }
    return FrequencyDistribution(std::move(p), std::max(0.0, 1.0 - acc));
}

FrequencyDistribution FrequencyDistribution::geometric(double p, double tail_eps) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric: p outside (0,1]");
    std::vector<double> v;
    double term = p, acc = 0.0;
    for (int n = 0; n < 1000000; ++n) {
        v.push_back(term);
        acc += term;
        term *= (1.0 - p);
        if (1.0 - acc < tail_eps) break;
    }
    return FrequencyDistribution(std::move(v), std::max(0.0, 1.0 - acc));
}

FrequencyDistribution FrequencyDistribution::negative_binomial(double r, double p,
                                                               double tail_eps) {
    if (!(r > 0.0)) throw std::invalid_argument("negative_binomial: r must be > 0");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("negative_binomial: p outside (0,1)");
    std::vector<double> v;
    double term = std::pow(p, r); // n = 0
    double acc = 0.0;
    double mean = r * (1.0 - p) / p;
    for (int n = 0; n < 1000000; ++n) {
        v.push_back(term);
        acc += term;
        if (1.0 - acc < tail_eps && n > mean) break;
        term *= (r + n) / (n + 1.0) * (1.0 - p);
    }
    return FrequencyDistribution(std::move(v), std::max(0.0, 1.0 - acc));
}

FrequencyDistribution FrequencyDistribution::binomial(int n, double p) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
    std::vector<double> v(n + 1);
    for (int k = 0; k <= n; ++k)
        v[k] = std::exp(num::log_binom(n, k) + (k > 0 ? k * std::log(p) : 0.0) +
                        (n - k > 0 ? (n - k) * std::log1p(-p) : 0.0));
    return FrequencyDistribution(std::move(v), 0.0);
}

FrequencyDistribution FrequencyDistribution::degenerate(int value) {
    if (value < 0) throw std::invalid_argument("degenerate: value must be >= 0");
    std::vector<double> v(value + 1, 0.0);
    v[value] = 1.0;
    return FrequencyDistribution(std::move(v), 0.0);
}

FrequencyDistribution FrequencyDistribution::from_pmf(std::vector<double> pmf) {
    double s = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    if (std::fabs(s - 1.0) > 1e-9)
        throw std::invalid_argument("frequency pmf must sum to 1");
    return FrequencyDistribution(std::move(pmf), std::max(0.0, 1.0 - s));
}

double FrequencyDistribution::pmf(int n) const {
    if (n < 0 || n >= static_cast<int>(pmf_.size())) return 0.0;
    return pmf_[n];
}

double FrequencyDistribution::cdf(int n) const {
    if (n < 0) return 0.0;
    if (n >= static_cast<int>(cdf_.size())) return cdf_.back();
    return cdf_[n];
}

double FrequencyDistribution::mean() const {
    double m = 0.0;
    for (std::size_t n = 1; n < pmf_.size(); ++n) m += n * pmf_[n];
    return m;
}

double FrequencyDistribution::second_moment() const {
    double m = 0.0;
    for (std::size_t n = 1; n < pmf_.size(); ++n) m += static_cast<double>(n) * n * pmf_[n];
    return m;
}

double FrequencyDistribution::variance() const {
    double mu = mean();
    return second_moment() - mu * mu;
}

double FrequencyDistribution::pgf(double z) const {
    double acc = 0.0, zp = 1.0;
    for (std::size_t n = 0; n < pmf_.size(); ++n) {
        acc += pmf_[n] * zp;
        zp *= z;
    }
    return acc;
}

std::complex<double> FrequencyDistribution::pgf(std::complex<double> z) const {
    std::complex<double> acc = 0.0, zp = 1.0;
    for (std::size_t n = 0; n < pmf_.size(); ++n) {
        acc += pmf_[n] * zp;
        zp *= z;
    }
    return acc;
}

int FrequencyDistribution::quantile(double kappa) const {
    if (!(kappa > 0.0 && kappa < 1.0))
        throw std::invalid_argument("quantile: kappa outside (0,1)");
    for (std::size_t n = 0; n < cdf_.size(); ++n)
        if (cdf_[n] >= kappa) return static_cast<int>(n);
    return static_cast<int>(cdf_.size()) - 1;
}

double FrequencyDistribution::tvar(double kappa, TailConvention conv) const {
    int q = quantile(kappa);
    double tail = 0.0;
    int from = (conv == TailConvention::strict) ? q + 1 : q;
    for (std::size_t n = from; n < pmf_.size(); ++n) tail += n * pmf_[n];
    return (tail + q * (cdf(q) - kappa)) / (1.0 - kappa);
}

double FrequencyDistribution::order_pmf(int j, int n) const {
    if (n < 0) return 0.0;
    double F = cdf(n), Fm = cdf(n - 1);
    if (j == 1) return (1.0 - Fm) * (1.0 - Fm) - (1.0 - F) * (1.0 - F);
    if (j == 2) return F * F - Fm * Fm;
    throw std::invalid_argument("order_pmf: j must be 1 or 2");
}

double FrequencyDistribution::order_cdf(int j, int n) const {
    if (n < 0) return 0.0;
    double F = cdf(n);
    if (j == 1) return 1.0 - (1.0 - F) * (1.0 - F);
    if (j == 2) return F * F;
    throw std::invalid_argument("order_cdf: j must be 1 or 2");
}

FrequencyDistribution FrequencyDistribution::order_statistic(int j) const {
    std::vector<double> v(pmf_.size());
    double acc = 0.0;
    for (std::size_t n = 0; n < pmf_.size(); ++n) {
        v[n] = order_pmf(j, static_cast<int>(n));
        acc += v[n];
    }
    return FrequencyDistribution(std::move(v), std::max(0.0, 1.0 - acc));
}

} // namespace crm
