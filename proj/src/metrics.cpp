#include "acttend/metrics.hpp"

#include <string>

#include "acttend/errors.hpp"

namespace acttend {

Metrics compute_metrics(const std::vector<bool>& predictions, const std::vector<bool>& labels) {
    if (predictions.empty()) throw InputError("compute_metrics: empty inputs");
    if (predictions.size() != labels.size())
        throw InputError("compute_metrics: " + std::to_string(predictions.size()) +
                         " predictions vs " + std::to_string(labels.size()) + " labels");

    Metrics m;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] && labels[i]) ++m.tp;
        else if (predictions[i] && !labels[i]) ++m.fp;
        else if (!predictions[i] && labels[i]) ++m.fn;
        else ++m.tn;
    }
    const double total = static_cast<double>(m.tp + m.fp + m.fn + m.tn);
    m.accuracy = static_cast<double>(m.tp + m.tn) / total;
    m.precision = (m.tp + m.fp) > 0 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp) : 0.0;
    m.recall = (m.tp + m.fn) > 0 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn) : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    return m;
}

}  // namespace acttend
