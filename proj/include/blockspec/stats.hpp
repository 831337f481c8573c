#pragma once

#include <vector>

namespace blockspec {

/// Upper tail P(X > x) of a chi-square variable with k degrees of freedom.
double chi_square_tail(double x, int dof);

struct ChiSquareTest {
    double chi2 = 0.0;
    double pvalue = 1.0;
    int dof = 0;
};

/// Pearson goodness of fit of observed counts against expected counts
/// (fully specified null, dof = cells - 1).
ChiSquareTest chi_square_gof(const std::vector<long>& observed,
                             const std::vector<double>& expected);

/// Pearson independence test on a contingency table, dof = (R-1)(C-1).
ChiSquareTest chi_square_independence(const std::vector<std::vector<long>>& table);

/// Kolmogorov function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// Two-sample KS statistic for sorted samples.
double ks_statistic_two_sample(const std::vector<double>& a_sorted,
                               const std::vector<double>& b_sorted);

/// Asymptotic p-value for a two-sample KS statistic.
double ks_p_value_two_sample(double statistic, std::size_t n, std::size_t m);

/// Two-sample KS critical value at significance alpha (0.05 or 0.01).
double ks_critical_value_two_sample(double alpha, std::size_t n, std::size_t m);

/// Streaming mean/variance accumulator.
class RunningMoments {
public:
    void add(double x);
    long count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const; // unbiased
    double std_error() const;

private:
    long count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace blockspec
