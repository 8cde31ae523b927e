#pragma once

#include <vector>

namespace acttend {

struct Metrics {
    long tp = 0, fp = 0, fn = 0, tn = 0;
    double accuracy = 0.0;
    double precision = 0.0;  // 0 when no positive predictions
    double recall = 0.0;     // 0 when no positive labels
    double f1 = 0.0;         // 0 when precision + recall == 0
};

Metrics compute_metrics(const std::vector<bool>& predictions, const std::vector<bool>& labels);

}  // namespace acttend
