#ifndef QDAPSP_STATS_HPP
#define QDAPSP_STATS_HPP

#include <span>

namespace qdapsp {

struct SampleSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;   // sample standard deviation (n-1)
    double median = 0.0;
    double ci95_low = 0.0; // Student-t interval for the mean
    double ci95_high = 0.0;
};

SampleSummary summarize(std::span<const double> samples);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

/// Ordinary least squares of log(y) on log(x). Needs at least two distinct x.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

} // namespace qdapsp

#endif
