#ifndef KNOTCLASS_CLASSIFY_HPP
#define KNOTCLASS_CLASSIFY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace knotclass {

/// Binary polynomial-set classifier: each class is characterized by the set
/// of canonical polynomial strings seen in its training images.
struct PolyClassModel {
    std::array<std::string, 2> class_labels{"fracture", "no_fracture"};
    // per label: polynomial -> occurrence count
    std::array<std::map<std::string, int>, 2> sets;

    int class_index(const std::string& label) const;
    /// Distinct polynomial types in class c (K_1 or K_2).
    int k_count(int c) const { return int(sets[c].size()); }
    /// Distinct polynomial types present in both classes (K_12).
    int k_shared() const;
};

enum class PredictionKind { label, ambiguous, unclassified };

struct Prediction {
    PredictionKind kind;
    std::string label; // set only when kind == label

    static Prediction of(const std::string& l) { return {PredictionKind::label, l}; }
    static Prediction ambiguous() { return {PredictionKind::ambiguous, {}}; }
    static Prediction unclassified() { return {PredictionKind::unclassified, {}}; }
    std::string to_string() const;
};

/// How AMBIGUOUS / UNCLASSIFIED predictions enter the confusion matrix.
enum class ScoringPolicy { count_as_negative, exclude };

/// What the per-class precision counts: distinct polynomial types (default)
/// or training instances weighted by occurrence count.
enum class PrecisionMode { types, instances };

struct MetricsReport {
    std::map<std::string, double> knot_precision; // per class label, Eq-style (K_c - K_12)/K_c
    int k1 = 0, k2 = 0, k12 = 0;
    long tp = 0, fp = 0, fn = 0, tn = 0;
    long ambiguous = 0, unclassified = 0;
    double recall = 0.0, precision = 0.0, f1 = 0.0;
};

/// Build the model from (canonical polynomial, label) pairs. Throws
/// BadLabelSet unless exactly two distinct labels occur.
PolyClassModel train(const std::vector<std::pair<std::string, std::string>>& labelled);

/// Exact set membership: one class -> its label; both -> AMBIGUOUS;
/// neither -> UNCLASSIFIED.
Prediction predict(const PolyClassModel& model, const std::string& polynomial);

/// (K_label - K_12) / K_label with type counting; instance counting uses
/// occurrence counts instead of distinct types. Throws EmptyClass when the
/// class is empty.
double knot_precision(const PolyClassModel& model, const std::string& label,
                      PrecisionMode mode = PrecisionMode::types);

/// Confusion-matrix recall / precision / F1 for the given positive label.
MetricsReport confusion_metrics(const std::vector<Prediction>& preds,
                                const std::vector<std::string>& truths,
                                const std::string& positive, ScoringPolicy policy);

} // namespace knotclass

#endif
