#ifndef CRM_FREQUENCY_HPP
#define CRM_FREQUENCY_HPP

#include <complex>
#include <string>
#include <vector>

namespace crm {

// Tail-expectation convention for discrete laws. `strict` is the left-inverse
// definition, TVaR = [E[Z 1{Z>q}] + q(F(q)-kappa)]/(1-kappa) with q the
// kappa-quantile. `inclusive_atom` additionally counts the whole probability
// mass at q inside the tail expectation; it exists to reproduce reference
// implementations that compute the tail with Z >= q.
enum class TailConvention { strict, inclusive_atom };

// Discrete claim-count law on {0, 1, 2, ...}, stored as a dense pmf from 0 up
// to a truncation point. Truncated tail mass is reported, never renormalized.
class FrequencyDistribution {
public:
    static constexpr double kDefaultTailEps = 1e-12;

    static FrequencyDistribution poisson(double mean, double tail_eps = kDefaultTailEps);
    // pmf p(1-p)^n on n >= 0
    static FrequencyDistribution geometric(double p, double tail_eps = kDefaultTailEps);
    // pmf C(r+n-1, n) p^r (1-p)^n, real r > 0
    static FrequencyDistribution negative_binomial(double r, double p,
                                                   double tail_eps = kDefaultTailEps);
    static FrequencyDistribution binomial(int n, double p);
    static FrequencyDistribution degenerate(int value);
    static FrequencyDistribution from_pmf(std::vector<double> pmf);

    double pmf(int n) const;
    double cdf(int n) const;            // right-continuous step function
    int support_max() const { return static_cast<int>(pmf_.size()) - 1; }
    double truncation_mass() const { return trunc_mass_; }

    double mean() const;
    double second_moment() const;
    double variance() const;
    double pgf(double z) const;
    std::complex<double> pgf(std::complex<double> z) const;

    // left inverse of the cdf
    int quantile(double kappa) const;
    double tvar(double kappa, TailConvention conv = TailConvention::strict) const;

    // order statistics of two iid copies; j = 1 is the min, j = 2 the max
    double order_pmf(int j, int n) const;
    double order_cdf(int j, int n) const;
    FrequencyDistribution order_statistic(int j) const;

    const std::vector<double>& pmf_vector() const { return pmf_; }

private:
    FrequencyDistribution(std::vector<double> pmf, double trunc_mass);

    std::vector<double> pmf_;
    std::vector<double> cdf_;
    double trunc_mass_ = 0.0;
};

} // namespace crm

#endif
