#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edgecast {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
};

struct F1Score {
  double value = 0.0;
  bool degenerate = false;  // no positives anywhere (2*tp + fn + fp == 0)
};

/// F1 = 2*TP / (2*TP + FN + FP).
inline F1Score f1_score(const ConfusionCounts& c) {
  const double denom = static_cast<double>(2 * c.tp + c.fn + c.fp);
  if (denom == 0.0) return {0.0, true};
  return {2.0 * static_cast<double>(c.tp) / denom, false};
}

enum class F1Averaging { Macro, Micro };

/// One-vs-rest F1 over class labels. Classes are 0..max(label) across both
/// sequences. Macro averages per-class F1 (degenerate classes score 0);
/// Micro pools the counts first.
inline double multiclass_f1(const std::vector<std::size_t>& truth,
                            const std::vector<std::size_t>& predicted,
                            F1Averaging averaging = F1Averaging::Macro) {
  if (truth.size() != predicted.size())
    throw std::invalid_argument("label sequences differ in length");
  if (truth.empty()) throw std::invalid_argument("empty label sequences");
  std::size_t n_classes = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    n_classes = std::max({n_classes, truth[i] + 1, predicted[i] + 1});

  std::vector<ConfusionCounts> per_class(n_classes);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t c = 0; c < n_classes; ++c) {
      const bool t = truth[i] == c;
      const bool p = predicted[i] == c;
      if (t && p) ++per_class[c].tp;
      else if (!t && p) ++per_class[c].fp;
      else if (t && !p) ++per_class[c].fn;
      else ++per_class[c].tn;
    }
  }
  if (averaging == F1Averaging::Macro) {
    double sum = 0.0;
    for (const auto& c : per_class) sum += f1_score(c).value;
    return sum / static_cast<double>(n_classes);
  }
  ConfusionCounts pooled;
  for (const auto& c : per_class) {
    pooled.tp += c.tp;
    pooled.fp += c.fp;
    pooled.fn += c.fn;
    pooled.tn += c.tn;
  }
  return f1_score(pooled).value;
}

/// Mean squared error over all samples and target dimensions.
inline double mse(const std::vector<std::vector<double>>& y_true,
                  const std::vector<std::vector<double>>& y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw std::invalid_argument("mse: shape mismatch");
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i].size() != y_pred[i].size())
      throw std::invalid_argument("mse: shape mismatch");
    for (std::size_t d = 0; d < y_true[i].size(); ++d) {
      const double e = y_true[i][d] - y_pred[i][d];
      sum += e * e;
    }
    count += y_true[i].size();
  }
  if (count == 0) throw std::invalid_argument("mse: shape mismatch");
  return sum / static_cast<double>(count);
}

/// Per-sample squared error: mean over target dimensions of (y - yhat)^2.
inline std::vector<double> per_sample_squared_errors(
    const std::vector<std::vector<double>>& y_true,
    const std::vector<std::vector<double>>& y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw std::invalid_argument("shape mismatch");
  std::vector<double> errs(y_true.size());
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i].size() != y_pred[i].size() || y_true[i].empty())
      throw std::invalid_argument("shape mismatch");
    double s = 0.0;
    for (std::size_t d = 0; d < y_true[i].size(); ++d) {
      const double e = y_true[i][d] - y_pred[i][d];
      s += e * e;
    }
    errs[i] = s / static_cast<double>(y_true[i].size());
  }
  return errs;
}

/// Population variance of the per-sample squared errors (the sigma^2
/// column of the comparison reports).
inline double error_variance(const std::vector<std::vector<double>>& y_true,
                             const std::vector<std::vector<double>>& y_pred) {
  const auto errs = per_sample_squared_errors(y_true, y_pred);
  double mean = 0.0;
  for (double e : errs) mean += e;
  mean /= static_cast<double>(errs.size());
  double var = 0.0;
  for (double e : errs) var += (e - mean) * (e - mean);
  return var / static_cast<double>(errs.size());
}

}  // namespace edgecast
