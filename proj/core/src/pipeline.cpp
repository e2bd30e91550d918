#include "knotclass/pipeline.hpp"

#include "knotclass/curve.hpp"
#include "knotclass/errors.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace knotclass {

namespace {

using nlohmann::json;

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp);
        out << content;
        if (!out) throw IoError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::string> kernel_order(const CoordinateSet& cs) {
    std::vector<std::string> order;
    for (const auto& p : cs.provenance)
        if (order.empty() || order.back() != p.kernel) order.push_back(p.kernel);
    return order;
}

} // namespace

void write_coordinate_file(const std::vector<CoordinateSet>& sets, const std::string& path) {
    std::ostringstream os;
    for (const auto& cs : sets) {
        json rec;
        rec["image_id"] = cs.image_id;
        rec["kernels"] = kernel_order(cs);
        rec["points"] = cs.points;
        rec["schedule"] = cs.schedule.targets;
        rec["tau"] = cs.tau;
        os << rec.dump() << '\n';
    }
    atomic_write(path, os.str());
}

std::vector<CoordinateSet> read_coordinate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("coordinate file not found: " + path);
    std::vector<CoordinateSet> sets;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        CoordinateSet cs;
        cs.image_id = rec.at("image_id").get<std::string>();
        cs.points = rec.at("points").get<std::vector<std::array<double, 3>>>();
        cs.schedule.targets = rec.at("schedule").get<std::vector<int>>();
        cs.tau = rec.at("tau").get<double>();
        auto kernels = rec.at("kernels").get<std::vector<std::string>>();
        if (kernels.empty() || cs.points.size() != kernels.size() * 4)
            throw ParseError(path + ": record '" + cs.image_id +
                             "' does not have 4 points per kernel");
        for (const auto& k : kernels)
            for (int j = 0; j < 4; ++j) cs.provenance.push_back({k, j});
        sets.push_back(std::move(cs));
    }
    return sets;
}

void write_polynomial_file(const std::vector<PolyRecord>& records, const std::string& path) {
    std::ostringstream os;
    for (const auto& r : records) {
        json rec;
        rec["image_id"] = r.image_id;
        rec["polynomial"] = r.polynomial;
        rec["knot"] = r.knot;
        rec["direction"] = r.direction;
        rec["crossings"] = r.crossing_count;
        os << rec.dump() << '\n';
    }
    atomic_write(path, os.str());
}

std::vector<PolyRecord> read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("polynomial file not found: " + path);
    std::vector<PolyRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        PolyRecord r;
        r.image_id = rec.at("image_id").get<std::string>();
        r.polynomial = rec.at("polynomial").get<std::string>();
        r.knot = rec.at("knot").get<std::string>();
        r.direction = rec.at("direction").get<std::array<double, 3>>();
        r.crossing_count = rec.at("crossings").get<int>();
        records.push_back(std::move(r));
    }
    return records;
}

void write_model(const PolyClassModel& model, const std::string& path) {
    json doc;
    doc["labels"] = model.class_labels;
    json classes = json::object();
    for (int c = 0; c < 2; ++c) {
        json list = json::array();
        for (const auto& [poly, count] : model.sets[c])
            list.push_back({{"polynomial", poly}, {"count", count}});
        classes[model.class_labels[c]] = std::move(list);
    }
    doc["classes"] = std::move(classes);
    atomic_write(path, doc.dump(2) + "\n");
}

PolyClassModel read_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("model not found: " + path);
    json doc = json::parse(in);
    PolyClassModel m;
    m.class_labels = doc.at("labels").get<std::array<std::string, 2>>();
    for (int c = 0; c < 2; ++c)
        for (const auto& item : doc.at("classes").at(m.class_labels[c]))
            m.sets[c][item.at("polynomial").get<std::string>()] =
                item.at("count").get<int>();
    return m;
}

void write_metrics(const MetricsReport& report, const std::string& txt_path,
                   const std::string& csv_path) {
    std::ostringstream txt;
    txt << "knot types: K1=" << report.k1 << " K2=" << report.k2 << " K12=" << report.k12
        << "\n";
    for (const auto& [label, p] : report.knot_precision)
        txt << "knot precision [" << label << "]: " << p << "\n";
    txt << "confusion: TP=" << report.tp << " FP=" << report.fp << " FN=" << report.fn
        << " TN=" << report.tn << " ambiguous=" << report.ambiguous
        << " unclassified=" << report.unclassified << "\n";
    txt << "recall: " << report.recall << "\nprecision: " << report.precision
        << "\nF1: " << report.f1 << "\n";
    atomic_write(txt_path, txt.str());

    std::ostringstream csv;
    csv << "metric,value\n";
    csv << "K1," << report.k1 << "\nK2," << report.k2 << "\nK12," << report.k12 << "\n";
    for (const auto& [label, p] : report.knot_precision)
        csv << "knot_precision_" << label << "," << p << "\n";
    csv << "TP," << report.tp << "\nFP," << report.fp << "\nFN," << report.fn << "\nTN,"
        << report.tn << "\nambiguous," << report.ambiguous << "\nunclassified,"
        << report.unclassified << "\n";
    csv << "recall," << report.recall << "\nprecision," << report.precision << "\nF1,"
        << report.f1 << "\n";
    atomic_write(csv_path, csv.str());
}

std::vector<CoordinateSet> featurize_corpus(const Config& cfg, const std::string& image_dir,
                                            const std::vector<ManifestEntry>& manifest) {
    KernelAsset asset = load_bank(cfg.kernel_asset);
    KernelBank bank = asset.bank;
    if (cfg.subset != "all") {
        auto it = asset.presets.find(cfg.subset);
        if (it == asset.presets.end())
            throw UnknownKernel("no preset '" + cfg.subset + "' in " + cfg.kernel_asset);
        bank = select(bank, it->second);
    }
    ColorLut lut = load_lut(cfg.lut_asset);
    PoolSchedule schedule = make_schedule(cfg.side, cfg.cycles);

    std::vector<CoordinateSet> sets;
    for (const auto& entry : manifest) {
        std::string path = (std::filesystem::path(image_dir) / entry.filename).string();
        GrayImage gray = load_gray(path);
        if (gray.width < cfg.side || gray.height < cfg.side)
            throw PlaneTooSmall(entry.filename + ": smaller than configured side " +
                                std::to_string(cfg.side));
        if (gray.width > cfg.side || gray.height > cfg.side) {
            GrayImage crop;
            crop.width = crop.height = cfg.side;
            crop.pixels.resize(std::size_t(cfg.side) * cfg.side);
            int ox = (gray.width - cfg.side) / 2, oy = (gray.height - cfg.side) / 2;
            for (int y = 0; y < cfg.side; ++y)
                for (int x = 0; x < cfg.side; ++x)
                    crop.pixels[std::size_t(y) * cfg.side + x] = gray.at(x + ox, y + oy);
            gray = std::move(crop);
        }
        RgbImage rgb = apply_colormap(gray, lut);
        sets.push_back(extract_coordinates(rgb, bank, schedule, cfg.tau, entry.filename));
    }
    return sets;
}

std::vector<PolyRecord> knot_corpus(const Config& cfg, const std::vector<CoordinateSet>& sets) {
    KnotTable table = load_knot_table(cfg.knot_table);
    std::vector<PolyRecord> records;
    for (const auto& cs : sets) {
        ClosedPolyline curve = build_curve(cs, cfg.fixed_jitter_seed());
        InvariantResult inv;
        try {
            inv = curve_invariant(curve, cfg.samples, cfg.crossing_cap);
        } catch (const Error& e) {
            throw Error("knot stage failed for image '" + cs.image_id + "': " + e.what());
        }
        PolyRecord r;
        r.image_id = cs.image_id;
        r.polynomial = inv.polynomial.canonical_string();
        r.knot = knot_name(inv.polynomial, table);
        r.direction = inv.direction.v;
        r.crossing_count = inv.crossing_count;
        records.push_back(std::move(r));
    }
    return records;
}

PolyClassModel train_from(const std::vector<PolyRecord>& records,
                          const std::vector<ManifestEntry>& manifest) {
    std::map<std::string, std::string> label_of;
    for (const auto& e : manifest) label_of[e.filename] = e.label;
    std::vector<std::pair<std::string, std::string>> labelled;
    for (const auto& r : records) {
        auto it = label_of.find(r.image_id);
        if (it == label_of.end())
            throw ParseError("no manifest label for image '" + r.image_id + "'");
        labelled.emplace_back(r.polynomial, it->second);
    }
    return train(labelled);
}

MetricsReport evaluate_model(const Config& cfg, const PolyClassModel& model,
                             const std::vector<PolyRecord>& records,
                             const std::vector<ManifestEntry>& manifest,
                             const std::string& positive) {
    std::map<std::string, std::string> label_of;
    for (const auto& e : manifest) label_of[e.filename] = e.label;
    std::vector<Prediction> preds;
    std::vector<std::string> truths;
    for (const auto& r : records) {
        preds.push_back(predict(model, r.polynomial));
        truths.push_back(label_of.at(r.image_id));
    }
    MetricsReport rep = confusion_metrics(preds, truths, positive, cfg.scoring);
    rep.k1 = model.k_count(0);
    rep.k2 = model.k_count(1);
    rep.k12 = model.k_shared();
    for (int c = 0; c < 2; ++c)
        rep.knot_precision[model.class_labels[c]] =
            model.k_count(c) > 0
                ? knot_precision(model, model.class_labels[c], cfg.precision_mode)
                : 0.0;
    return rep;
}

} // namespace knotclass
