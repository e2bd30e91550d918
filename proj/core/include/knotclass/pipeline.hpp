#ifndef KNOTCLASS_PIPELINE_HPP
#define KNOTCLASS_PIPELINE_HPP

#include "knotclass/classify.hpp"
#include "knotclass/config.hpp"
#include "knotclass/featurize.hpp"
#include "knotclass/knot.hpp"
#include "knotclass/synth.hpp"

#include <string>
#include <vector>

namespace knotclass {

/// One line of the polynomial file.
struct PolyRecord {
    std::string image_id;
    std::string polynomial; // canonical string
    std::string knot;       // table name or "UNKNOWN"
    std::array<double, 3> direction{0, 0, 1};
    int crossing_count = 0;
};

// Coordinate file: JSON lines, one record per image.
void write_coordinate_file(const std::vector<CoordinateSet>& sets, const std::string& path);
std::vector<CoordinateSet> read_coordinate_file(const std::string& path);

// Polynomial file: JSON lines.
void write_polynomial_file(const std::vector<PolyRecord>& records, const std::string& path);
std::vector<PolyRecord> read_polynomial_file(const std::string& path);

// Model file: single JSON document.
void write_model(const PolyClassModel& model, const std::string& path);
PolyClassModel read_model(const std::string& path);

void write_metrics(const MetricsReport& report, const std::string& txt_path,
                   const std::string& csv_path);

/// Featurize every manifest image under image_dir (center-cropped to
/// config.side). Records are emitted in manifest order.
std::vector<CoordinateSet> featurize_corpus(const Config& cfg, const std::string& image_dir,
                                            const std::vector<ManifestEntry>& manifest);

/// Curve + invariant + naming for each coordinate record.
std::vector<PolyRecord> knot_corpus(const Config& cfg, const std::vector<CoordinateSet>& sets);

PolyClassModel train_from(const std::vector<PolyRecord>& records,
                          const std::vector<ManifestEntry>& manifest);

MetricsReport evaluate_model(const Config& cfg, const PolyClassModel& model,
                             const std::vector<PolyRecord>& records,
                             const std::vector<ManifestEntry>& manifest,
                             const std::string& positive);

} // namespace knotclass

#endif
