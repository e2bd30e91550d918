// Command-line front end for the topological image classifier pipeline.

#include "knotclass/errors.hpp"
#include "knotclass/pipeline.hpp"
#include "knotclass/selection.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace knotclass;

namespace {

struct Cli {
    std::string config_path;
    Config cfg;
    std::string scoring_flag;
    std::string precision_flag;

    void load() {
        if (!config_path.empty()) cfg = load_config(config_path);
    }
    void apply_overrides() {
        if (scoring_flag == "negative")
            cfg.scoring = ScoringPolicy::count_as_negative;
        else if (scoring_flag == "exclude")
            cfg.scoring = ScoringPolicy::exclude;
        else if (!scoring_flag.empty())
            throw ParseError("--scoring must be 'negative' or 'exclude'");
        if (precision_flag == "types")
            cfg.precision_mode = PrecisionMode::types;
        else if (precision_flag == "instances")
            cfg.precision_mode = PrecisionMode::instances;
        else if (!precision_flag.empty())
            throw ParseError("--precision-mode must be 'types' or 'instances'");
        cfg.validate();
    }
};

void add_config_flags(CLI::App* app, Cli& cli) {
    app->add_option("--config", cli.config_path, "plain-text key = value config file");
    app->add_option("--kernels", cli.cfg.kernel_asset, "kernel asset file");
    app->add_option("--lut", cli.cfg.lut_asset, "colormap LUT asset");
    app->add_option("--knots", cli.cfg.knot_table, "knot table asset");
    app->add_option("--subset", cli.cfg.subset, "kernel preset name, or 'all'");
    app->add_option("--cycles", cli.cfg.cycles, "convolution/pooling cycles");
    app->add_option("--tau", cli.cfg.tau, "softmax pooling temperature");
    app->add_option("--samples", cli.cfg.samples, "projection direction samples");
    app->add_option("--cap", cli.cfg.crossing_cap, "crossing cap for the skein recursion");
    app->add_option("--side", cli.cfg.side, "square input side (center crop)");
    app->add_option("--jitter-seed", cli.cfg.jitter_seed_policy,
                    "'image_id' or a fixed integer seed");
    app->add_option("--scoring", cli.scoring_flag,
                    "AMBIGUOUS/UNCLASSIFIED policy: 'negative' or 'exclude'");
    app->add_option("--precision-mode", cli.precision_flag,
                    "per-class precision counting: 'types' or 'instances'");
}

std::vector<ManifestEntry> manifest_for(const std::string& images,
                                        const std::string& manifest_path) {
    std::string p = manifest_path.empty()
                        ? (fs::path(images) / "manifest.csv").string()
                        : manifest_path;
    return read_manifest(p);
}

std::vector<RgbImage> load_corpus_images(const Config& cfg, const std::string& images,
                                         const std::vector<ManifestEntry>& manifest) {
    ColorLut lut = load_lut(cfg.lut_asset);
    std::vector<RgbImage> out;
    for (const auto& e : manifest) {
        GrayImage g = load_gray((fs::path(images) / e.filename).string());
        out.push_back(apply_colormap(g, lut));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotclass: topological image classification via HOMFLY polynomials"};
    app.require_subcommand(1);
    Cli cli;

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic two-class corpus");
    SynthParams sp;
    std::string synth_out;
    synth->add_option("--out", synth_out, "output directory")->required();
    synth->add_option("--count", sp.count_per_class, "images per class");
    synth->add_option("--side", sp.side, "image side in pixels");
    synth->add_option("--ridges", sp.ridges, "ridge count");
    synth->add_option("--gap-min", sp.gap_min, "min discontinuity width (px)");
    synth->add_option("--gap-max", sp.gap_max, "max discontinuity width (px)");
    synth->add_option("--noise", sp.noise, "noise amplitude (gray levels)");
    synth->add_option("--wiggle", sp.wiggle, "ridge undulation factor (0 = straight)");
    synth->add_option("--seed", sp.seed, "master seed");
    synth->add_option("--config", cli.config_path, "plain-text key = value config file");

    // featurize
    auto* feat = app.add_subcommand("featurize", "images -> coordinate file");
    std::string images, manifest_path, out_path;
    feat->add_option("--images", images, "image directory")->required();
    feat->add_option("--manifest", manifest_path, "manifest CSV (default <images>/manifest.csv)");
    feat->add_option("--out", out_path, "coordinate file to write")->required();
    add_config_flags(feat, cli);

    // knot
    auto* knot = app.add_subcommand("knot", "coordinate file -> polynomial file");
    std::string coords_path;
    knot->add_option("--coords", coords_path, "coordinate file")->required();
    knot->add_option("--out", out_path, "polynomial file to write")->required();
    add_config_flags(knot, cli);

    // train
    auto* train_cmd = app.add_subcommand("train", "polynomial file + labels -> model");
    std::string polys_path, model_path;
    train_cmd->add_option("--polys", polys_path, "polynomial file")->required();
    train_cmd->add_option("--manifest", manifest_path, "manifest CSV")->required();
    train_cmd->add_option("--out", model_path, "model file to write")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "model + polynomial file -> predictions");
    classify_cmd->add_option("--model", model_path, "model file")->required();
    classify_cmd->add_option("--polys", polys_path, "polynomial file")->required();
    classify_cmd->add_option("--out", out_path, "predictions CSV to write")->required();

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "full pipeline + metrics into a directory");
    std::string outdir, positive = "fracture";
    eval->add_option("--images", images, "image directory")->required();
    eval->add_option("--manifest", manifest_path, "manifest CSV (default <images>/manifest.csv)");
    eval->add_option("--outdir", outdir, "output directory")->required();
    eval->add_option("--positive", positive, "positive class label");
    add_config_flags(eval, cli);

    // select-kernels
    auto* selk = app.add_subcommand("select-kernels", "greedy crossing-minimizing kernel subset");
    int target = 13;
    selk->add_option("--images", images, "image directory")->required();
    selk->add_option("--manifest", manifest_path, "manifest CSV");
    selk->add_option("--target", target, "subset size");
    selk->add_option("--out", out_path, "file for the selected kernel names");
    add_config_flags(selk, cli);

    // select-cycles
    auto* selc = app.add_subcommand("select-cycles", "pick the cycle count maximizing median D");
    std::vector<int> candidates{2, 3, 4, 5};
    std::string d_csv;
    selc->add_option("--images", images, "image directory")->required();
    selc->add_option("--manifest", manifest_path, "manifest CSV");
    selc->add_option("--candidates", candidates, "candidate cycle counts");
    selc->add_option("--d-csv", d_csv, "export per-pair D records as CSV");
    add_config_flags(selc, cli);

    // colormap
    auto* cmap = app.add_subcommand("colormap", "apply the pseudo-color LUT to a grayscale PNG");
    std::string in_png, out_png;
    cmap->add_option("--in", in_png, "grayscale PNG")->required();
    cmap->add_option("--out", out_png, "RGB PNG to write")->required();
    add_config_flags(cmap, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // collapse CLI11's assorted parse-error codes to 1; --help stays 0
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        cli.load();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    // Re-parse so flags override values loaded from the config file.
    if (!cli.config_path.empty()) {
        try {
            app.clear();
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            return app.exit(e) == 0 ? 0 : 1;
        }
    }

    try {
        cli.apply_overrides();
        const Config& cfg = cli.cfg;

        if (*synth) {
            auto manifest = synth_dataset(sp, synth_out);
            std::cout << "wrote " << manifest.size() << " images under " << synth_out << "\n";
        } else if (*feat) {
            auto manifest = manifest_for(images, manifest_path);
            auto sets = featurize_corpus(cfg, images, manifest);
            write_coordinate_file(sets, out_path);
            std::cout << "featurized " << sets.size() << " images -> " << out_path << "\n";
        } else if (*knot) {
            auto sets = read_coordinate_file(coords_path);
            auto records = knot_corpus(cfg, sets);
            write_polynomial_file(records, out_path);
            std::cout << "computed " << records.size() << " polynomials -> " << out_path
                      << "\n";
        } else if (*train_cmd) {
            auto records = read_polynomial_file(polys_path);
            auto manifest = read_manifest(manifest_path);
            write_model(train_from(records, manifest), model_path);
            std::cout << "trained model -> " << model_path << "\n";
        } else if (*classify_cmd) {
            auto model = read_model(model_path);
            auto records = read_polynomial_file(polys_path);
            std::ostringstream os;
            os << "image_id,polynomial,knot,prediction\n";
            for (const auto& r : records)
                os << r.image_id << ",\"" << r.polynomial << "\"," << r.knot << ","
                   << predict(model, r.polynomial).to_string() << "\n";
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cannot write " + out_path);
            out << os.str();
            std::cout << "classified " << records.size() << " records -> " << out_path << "\n";
        } else if (*eval) {
            auto manifest = manifest_for(images, manifest_path);
            fs::create_directories(outdir);
            auto sets = featurize_corpus(cfg, images, manifest);
            write_coordinate_file(sets, (fs::path(outdir) / "coords.jsonl").string());
            auto records = knot_corpus(cfg, sets);
            write_polynomial_file(records, (fs::path(outdir) / "polys.jsonl").string());
            auto model = train_from(records, manifest);
            write_model(model, (fs::path(outdir) / "model.json").string());
            auto report = evaluate_model(cfg, model, records, manifest, positive);
            write_metrics(report, (fs::path(outdir) / "metrics.txt").string(),
                          (fs::path(outdir) / "metrics.csv").string());
            std::ifstream mtxt((fs::path(outdir) / "metrics.txt").string());
            std::cout << mtxt.rdbuf();
        } else if (*selk) {
            auto manifest = manifest_for(images, manifest_path);
            auto corpus = load_corpus_images(cfg, images, manifest);
            KernelAsset asset = load_bank(cfg.kernel_asset);
            PoolSchedule schedule = make_schedule(cfg.side, cfg.cycles);
            SelectionConfig scfg{cfg.tau, cfg.samples};
            KernelBank chosen = select_kernels(corpus, asset.bank, target, schedule, scfg);
            std::ostringstream os;
            for (const auto& k : chosen.kernels) os << k.name << "\n";
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
                if (!out) throw IoError("cannot write " + out_path);
                out << os.str();
            }
            std::cout << os.str();
        } else if (*selc) {
            auto manifest = manifest_for(images, manifest_path);
            auto corpus = load_corpus_images(cfg, images, manifest);
            KernelAsset asset = load_bank(cfg.kernel_asset);
            KernelBank bank = asset.bank;
            if (cfg.subset != "all") bank = select(bank, asset.presets.at(cfg.subset));
            std::map<int, std::vector<CoordinateSet>> by_cycles;
            std::vector<DRecord> all_records;
            for (int n : candidates) {
                PoolSchedule schedule = make_schedule(cfg.side, n);
                std::vector<CoordinateSet> sets;
                for (std::size_t i = 0; i < corpus.size(); ++i)
                    sets.push_back(extract_coordinates(corpus[i], bank, schedule, cfg.tau,
                                                       manifest[i].filename));
                auto recs = d_records(sets, n);
                all_records.insert(all_records.end(), recs.begin(), recs.end());
                by_cycles[n] = std::move(sets);
            }
            if (!d_csv.empty()) export_d_analysis(all_records, d_csv);
            std::cout << select_cycles(by_cycles) << "\n";
        } else if (*cmap) {
            ColorLut lut = load_lut(cfg.lut_asset);
            save_rgb(apply_colormap(load_gray(in_png), lut), out_png);
            std::cout << "wrote " << out_png << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
