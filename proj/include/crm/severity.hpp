#ifndef CRM_SEVERITY_HPP
#define CRM_SEVERITY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace crm {

enum class SeverityKind { exponential, gamma, pareto, lognormal, mixed_erlang, discrete_grid };

class OrderStatisticPair;

// Positive claim-size law. Continuous parametric kinds have cdf(0) = 0;
// discrete grids may carry mass at 0 (a discretization artifact, reported
// through pmf_at(0)).
class SeverityDistribution {
public:
    static SeverityDistribution exponential(double mean);
    static SeverityDistribution gamma(double shape, double rate);
    // survival lambda^alpha / (lambda + x)^alpha
    static SeverityDistribution pareto(double alpha, double lambda);
    static SeverityDistribution lognormal(double mean, double variance);
    // masses[k-1] is the weight of the Erlang(k, rate) component
    static SeverityDistribution mixed_erlang(double rate, std::vector<double> masses);
    // masses[j] sits at j*step
    static SeverityDistribution discrete(double step, std::vector<double> masses);

    SeverityKind kind() const { return kind_; }
    std::string kind_name() const;

    double cdf(double x) const;
    double density(double x) const;         // continuous kinds only
    double pmf_at(int j) const;             // discrete kind only
    double lst(double t) const;
    std::complex<double> pgf(std::complex<double> z) const; // discrete kind, z per grid step

    // raw moment E[X^m]; throws MomentError when it does not exist
    double moment(int m) const;
    double mean() const { return moment(1); }
    double variance() const;
    double limited_expectation(double c) const; // E[min(X, c)]
    double quantile(double kappa) const;
    double tvar(double kappa) const;

    // order statistics of two iid copies; j = 1 is the min, j = 2 the max
    double order_cdf(int j, double x) const;
    double order_density(int j, double x) const;
    double order_moment(int j, int m) const;
    double order_lst(int j, double t) const;
    OrderStatisticPair order_statistics() const;

    // kinds representable as a mixed Erlang (exponential, integer-shape gamma,
    // mixed_erlang itself) admit exact mixed-Erlang order statistics
    bool has_mixed_erlang_form() const;
    double erlang_rate() const;                       // mixed-Erlang form rate
    std::vector<double> erlang_masses() const;        // weight of order k at [k-1]
    // masses of the order statistic at rate 2*erlang_rate(); j = 1 or 2
    std::vector<double> order_erlang_masses(int j, double tail_tol = 1e-14) const;

    double grid_step() const;
    const std::vector<double>& grid_masses() const;
    std::vector<double> order_grid_masses(int j) const;

    // parameter access for samplers and reports
    double param(const std::string& name) const;

private:
    SeverityDistribution() = default;

    SeverityKind kind_ = SeverityKind::exponential;
    double a_ = 0.0, b_ = 0.0;       // meaning depends on kind
    std::vector<double> masses_;     // mixed-Erlang or grid masses
    double step_ = 0.0;              // grid step
};

// Min/max laws of two iid severities, materialized where the representation is
// closed under order statistics, plus spacing moments.
class OrderStatisticPair {
public:
    explicit OrderStatisticPair(SeverityDistribution parent);

    const std::optional<SeverityDistribution>& min_law() const { return min_; }
    const std::optional<SeverityDistribution>& max_law() const { return max_; }
    double min_moment(int m) const { return parent_.order_moment(1, m); }
    double max_moment(int m) const { return parent_.order_moment(2, m); }
    double spacing(int m) const { return max_moment(m) - min_moment(m); }
    double min_cdf(double x) const { return parent_.order_cdf(1, x); }
    double max_cdf(double x) const { return parent_.order_cdf(2, x); }

private:
    SeverityDistribution parent_;
    std::optional<SeverityDistribution> min_, max_;
};

namespace num {
// cdf of Erlang(k, rate) at x for k = 1..kmax (index k-1); log-space Poisson sums
std::vector<double> erlang_cdf_prefix(int kmax, double rate, double x);
} // namespace num

} // namespace crm

#endif
