#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotclass/errors.hpp"
#include "knotclass/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace knotclass;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("knotclass_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str(const std::string& rel = "") const { return (path / rel).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("synth_pair is deterministic and classes share the base image") {
    SynthParams p;
    p.side = 32;
    p.seed = 9;
    auto [a1, f1] = synth_pair(p, 0);
    auto [a2, f2] = synth_pair(p, 0);
    CHECK(a1.pixels == a2.pixels);
    CHECK(f1.pixels == f2.pixels);
    CHECK(a1.pixels != f1.pixels); // fracture differs with nonzero gap
    auto [b1, bf1] = synth_pair(p, 1);
    CHECK(a1.pixels != b1.pixels); // different index, different image

    SynthParams zero = p;
    zero.gap_min = zero.gap_max = 0;
    auto [z, zf] = synth_pair(zero, 0);
    CHECK(z.pixels == zf.pixels); // width 0 -> pixel identical classes
    CHECK(z.pixels == a1.pixels); // gap stream is separate from the base stream
}

TEST_CASE("wiggle zero gives straight ridges") {
    SynthParams p;
    p.side = 32;
    p.noise = 0.0;
    p.wiggle = 0.0;
    auto [img, _] = synth_pair(p, 3);
    for (int y = 0; y < 32; ++y)
        for (int x = 1; x < 32; ++x) CHECK(img.at(x, y) == img.at(0, y));
}

TEST_CASE("synth_dataset layout and manifest round trip") {
    TempDir dir;
    SynthParams p;
    p.count_per_class = 3;
    p.side = 24;
    auto manifest = synth_dataset(p, dir.str());
    CHECK(manifest.size() == 6);
    CHECK(fs::exists(dir.str("no_fracture/img_0000.png")));
    CHECK(fs::exists(dir.str("fracture/img_0002.png")));
    CHECK(fs::exists(dir.str("manifest.csv")));
    auto back = read_manifest(dir.str("manifest.csv"));
    REQUIRE(back.size() == manifest.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].filename == manifest[i].filename);
        CHECK(back[i].label == manifest[i].label);
    }
    CHECK_THROWS_AS(read_manifest(dir.str("nope.csv")), FileNotFound);
}

TEST_CASE("config parsing, overrides and validation") {
    TempDir dir;
    {
        std::ofstream out(dir.str("run.conf"));
        out << "# experiment configuration\n";
        out << "subset = synthetic6\n";
        out << "cycles = 3\n";
        out << "tau = 0.5\n";
        out << "samples = 100   # projection directions\n";
        out << "jitter_seed = 42\n";
        out << "scoring = exclude\n";
        out << "precision_mode = instances\n";
    }
    Config cfg = load_config(dir.str("run.conf"));
    CHECK(cfg.subset == "synthetic6");
    CHECK(cfg.cycles == 3);
    CHECK(cfg.tau == 0.5);
    CHECK(cfg.samples == 100);
    CHECK(cfg.fixed_jitter_seed() == 42);
    CHECK(cfg.scoring == ScoringPolicy::exclude);
    CHECK(cfg.precision_mode == PrecisionMode::instances);

    Config defaults;
    CHECK(defaults.fixed_jitter_seed() == std::nullopt);
    CHECK(defaults.precision_mode == PrecisionMode::types);

    {
        std::ofstream out(dir.str("bad.conf"));
        out << "unknown_key = 3\n";
    }
    CHECK_THROWS_AS(load_config(dir.str("bad.conf")), ParseError);
    {
        std::ofstream out(dir.str("bad2.conf"));
        out << "cycles 4\n";
    }
    CHECK_THROWS_AS(load_config(dir.str("bad2.conf")), ParseError);
    Config invalid;
    invalid.tau = -1;
    CHECK_THROWS_AS(invalid.validate(), ParseError);
    invalid = Config{};
    invalid.jitter_seed_policy = "sometimes";
    CHECK_THROWS_AS(invalid.validate(), ParseError);
}

TEST_CASE("coordinate file round trip") {
    TempDir dir;
    CoordinateSet cs;
    cs.image_id = "a/b.png";
    cs.schedule.targets = {11, 5, 2};
    cs.tau = 0.25;
    for (int i = 0; i < 8; ++i) {
        cs.points.push_back({i * 0.5, -i * 0.25, i * i * 1e-3});
        cs.provenance.push_back({i < 4 ? "blur_box" : "sobel_x", i % 4});
    }
    write_coordinate_file({cs}, dir.str("coords.jsonl"));
    auto back = read_coordinate_file(dir.str("coords.jsonl"));
    REQUIRE(back.size() == 1);
    CHECK(back[0].image_id == cs.image_id);
    CHECK(back[0].points == cs.points);
    CHECK(back[0].schedule.targets == cs.schedule.targets);
    CHECK(back[0].tau == cs.tau);
    REQUIRE(back[0].provenance.size() == 8);
    CHECK(back[0].provenance[5].kernel == "sobel_x");
    CHECK(back[0].provenance[5].flatten_index == 1);

    // re-write is byte identical
    std::string first = slurp(dir.str("coords.jsonl"));
    write_coordinate_file(back, dir.str("coords.jsonl"));
    CHECK(slurp(dir.str("coords.jsonl")) == first);

    CHECK_THROWS_AS(read_coordinate_file(dir.str("missing.jsonl")), FileNotFound);
    std::ofstream(dir.str("bad.jsonl")) << R"({"image_id":"x","kernels":["k"],)"
                                        << R"("points":[[0,0,0]],"schedule":[2],"tau":1})"
                                        << "\n";
    CHECK_THROWS_AS(read_coordinate_file(dir.str("bad.jsonl")), ParseError);
}

TEST_CASE("polynomial file round trip") {
    TempDir dir;
    PolyRecord r;
    r.image_id = "img.png";
    r.polynomial = "2*a^2*z^0 + -1*a^4*z^0 + 1*a^2*z^2";
    r.knot = "3_1";
    r.direction = {0.1, -0.2, 0.97};
    r.crossing_count = 3;
    write_polynomial_file({r}, dir.str("polys.jsonl"));
    auto back = read_polynomial_file(dir.str("polys.jsonl"));
    REQUIRE(back.size() == 1);
    CHECK(back[0].image_id == r.image_id);
    CHECK(back[0].polynomial == r.polynomial);
    CHECK(back[0].knot == r.knot);
    CHECK(back[0].direction == r.direction);
    CHECK(back[0].crossing_count == 3);
}

TEST_CASE("model file round trip") {
    TempDir dir;
    PolyClassModel m = train({{"p", "fracture"},
                              {"p", "fracture"},
                              {"q", "no_fracture"},
                              {"p", "no_fracture"}});
    write_model(m, dir.str("model.json"));
    PolyClassModel back = read_model(dir.str("model.json"));
    CHECK(back.class_labels == m.class_labels);
    CHECK(back.sets[0] == m.sets[0]);
    CHECK(back.sets[1] == m.sets[1]);
}

TEST_CASE("metrics writer emits both formats") {
    TempDir dir;
    MetricsReport rep;
    rep.k1 = 4;
    rep.k2 = 3;
    rep.k12 = 1;
    rep.knot_precision["fracture"] = 0.75;
    rep.knot_precision["no_fracture"] = 2.0 / 3.0;
    rep.tp = 5;
    rep.fp = 1;
    rep.fn = 2;
    rep.tn = 6;
    rep.recall = 5.0 / 7.0;
    rep.precision = 5.0 / 6.0;
    rep.f1 = 10.0 / 13.0;
    write_metrics(rep, dir.str("m.txt"), dir.str("m.csv"));
    std::string txt = slurp(dir.str("m.txt"));
    CHECK(txt.find("K1=4") != std::string::npos);
    CHECK(txt.find("knot precision [fracture]: 0.75") != std::string::npos);
    std::string csv = slurp(dir.str("m.csv"));
    CHECK(csv.find("metric,value\n") == 0);
    CHECK(csv.find("knot_precision_fracture,0.75") != std::string::npos);
    CHECK(csv.find("TP,5") != std::string::npos);
}

TEST_CASE("end-to-end corpus helpers work together on a tiny corpus") {
    TempDir dir;
    SynthParams p;
    p.count_per_class = 2;
    p.side = 32;
    p.noise = 1.0;
    p.wiggle = 0.0;
    p.gap_min = p.gap_max = 4;
    p.seed = 5;
    auto manifest = synth_dataset(p, dir.str());

    Config cfg;
    cfg.kernel_asset = std::string(KNOTCLASS_DATA_DIR) + "/kernels.txt";
    cfg.lut_asset = std::string(KNOTCLASS_DATA_DIR) + "/nipy_spectral.txt";
    cfg.knot_table = std::string(KNOTCLASS_DATA_DIR) + "/knots.txt";
    cfg.subset = "synthetic6";
    cfg.side = 32;
    cfg.samples = 100;

    auto sets = featurize_corpus(cfg, dir.str(), manifest);
    REQUIRE(sets.size() == 4);
    for (const auto& cs : sets) CHECK(cs.points.size() == 24); // 6 kernels x 4

    auto records = knot_corpus(cfg, sets);
    REQUIRE(records.size() == 4);
    for (const auto& r : records) {
        CHECK(!r.polynomial.empty());
        CHECK(r.crossing_count >= 0);
    }

    PolyClassModel model = train_from(records, manifest);
    MetricsReport rep = evaluate_model(cfg, model, records, manifest, "fracture");
    CHECK(rep.k1 >= 1);
    CHECK(rep.k2 >= 1);
    CHECK(rep.tp + rep.fp + rep.fn + rep.tn == 4);
}
