#include "knotclass/classify.hpp"

#include "knotclass/errors.hpp"

#include <set>

namespace knotclass {

int PolyClassModel::class_index(const std::string& label) const {
    if (label == class_labels[0]) return 0;
    if (label == class_labels[1]) return 1;
    return -1;
}

int PolyClassModel::k_shared() const {
    int n = 0;
    for (const auto& [poly, cnt] : sets[0])
        if (sets[1].count(poly)) ++n;
    return n;
}

std::string Prediction::to_string() const {
    switch (kind) {
        case PredictionKind::label: return label;
        case PredictionKind::ambiguous: return "AMBIGUOUS";
        case PredictionKind::unclassified: return "UNCLASSIFIED";
    }
    return "?";
}

PolyClassModel train(const std::vector<std::pair<std::string, std::string>>& labelled) {
    if (labelled.empty()) throw BadLabelSet("empty training list");
    std::set<std::string> labels;
    for (const auto& [poly, label] : labelled) labels.insert(label);
    if (labels.size() != 2)
        throw BadLabelSet("expected exactly 2 distinct labels, got " +
                          std::to_string(labels.size()));
    PolyClassModel m;
    auto it = labels.begin();
    m.class_labels[0] = *it++;
    m.class_labels[1] = *it;
    for (const auto& [poly, label] : labelled)
        m.sets[m.class_index(label)][poly] += 1;
    return m;
}

Prediction predict(const PolyClassModel& model, const std::string& polynomial) {
    bool in0 = model.sets[0].count(polynomial) > 0;
    bool in1 = model.sets[1].count(polynomial) > 0;
    if (in0 && in1) return Prediction::ambiguous();
    if (in0) return Prediction::of(model.class_labels[0]);
    if (in1) return Prediction::of(model.class_labels[1]);
    return Prediction::unclassified();
}

double knot_precision(const PolyClassModel& model, const std::string& label,
                      PrecisionMode mode) {
    int c = model.class_index(label);
    if (c < 0) throw BadLabelSet("unknown class label: '" + label + "'");
    if (model.sets[c].empty()) throw EmptyClass("class '" + label + "' has no polynomials");
    long k = 0, shared = 0;
    for (const auto& [poly, cnt] : model.sets[c]) {
        long w = mode == PrecisionMode::types ? 1 : cnt;
        k += w;
        if (model.sets[1 - c].count(poly)) shared += w;
    }
    return double(k - shared) / double(k);
}

MetricsReport confusion_metrics(const std::vector<Prediction>& preds,
                                const std::vector<std::string>& truths,
                                const std::string& positive, ScoringPolicy policy) {
    if (preds.size() != truths.size())
        throw LengthMismatch("predictions and truths differ in length");
    MetricsReport r;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        bool truth_pos = truths[i] == positive;
        const Prediction& p = preds[i];
        if (p.kind != PredictionKind::label) {
            if (p.kind == PredictionKind::ambiguous)
                ++r.ambiguous;
            else
                ++r.unclassified;
            if (policy == ScoringPolicy::exclude) continue;
            // count as a negative prediction
            truth_pos ? ++r.fn : ++r.tn;
            continue;
        }
        bool pred_pos = p.label == positive;
        if (pred_pos && truth_pos)
            ++r.tp;
        else if (pred_pos)
            ++r.fp;
        else if (truth_pos)
            ++r.fn;
        else
            ++r.tn;
    }
    r.recall = (r.tp + r.fn) > 0 ? double(r.tp) / double(r.tp + r.fn) : 0.0;
    r.precision = (r.tp + r.fp) > 0 ? double(r.tp) / double(r.tp + r.fp) : 0.0;
    r.f1 = (r.precision + r.recall) > 0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    return r;
}

} // namespace knotclass
