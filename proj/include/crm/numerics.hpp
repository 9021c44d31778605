#ifndef CRM_NUMERICS_HPP
#define CRM_NUMERICS_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crm {

// Thrown when a requested moment is infinite or undefined.
class MomentError : public std::domain_error {
public:
    explicit MomentError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a numerical routine cannot reach its accuracy target.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

namespace num {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, continued fraction otherwise.
double gamma_p(double a, double x);

// Standard normal cdf and its inverse (inverse refined by one Newton step).
double normal_cdf(double z);
double normal_quantile(double p);

// Adaptive Simpson on [a, b] with relative tolerance on the accumulated value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, int max_depth = 60);

// Integral over (0, inf) of f, mapped through x = s*u/(1-u) with scale s.
double integrate_half_line(const std::function<double(double)>& f, double scale,
                           double rel_tol = 1e-10);

// In-place radix-2 FFT; size must be a power of two. inverse=true divides by n.
void fft(std::vector<std::complex<double>>& a, bool inverse);

// log(n choose k)
double log_binom(int n, int k);

} // namespace num
} // namespace crm

#endif
