#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dressage/field_io.hpp"
#include "dressage/random.hpp"
#include "dressage/suite.hpp"

using namespace dressage;

namespace {

struct TempDir {
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("dressage-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    std::filesystem::path path;
};

} // namespace

TEST_CASE("scalar fields round-trip bit exactly") {
    const Lattice lat({3, 4});
    const ScalarField f = random_scalar(lat, 7, 0.5);
    std::stringstream ss;
    write_field(ss, f);

    std::string header;
    std::getline(ss, header);
    CHECK(header == "dressage-field v1 2 3 4 1");
    ss.seekg(0);

    const ScalarField back = read_scalar_field(ss);
    CHECK(back.lattice() == lat);
    for (Site s = 0; s < lat.volume(); ++s)
        CHECK(back[s] == f[s]);
}

TEST_CASE("vector fields round-trip bit exactly") {
    const Lattice lat({4, 2, 3});
    const VectorField f = random_vector(lat, 9, 0.0);
    std::stringstream ss;
    write_field(ss, f);
    const VectorField back = read_vector_field(ss);
    for (std::size_t i = 0; i < f.raw().size(); ++i)
        CHECK(back.raw()[i] == f.raw()[i]);
}

TEST_CASE("malformed field files are rejected") {
    SUBCASE("wrong magic") {
        std::stringstream ss("not-a-field v1 1 4 1\n0 0 0 0\n");
        CHECK_THROWS_AS(read_scalar_field(ss), IoError);
    }
    SUBCASE("component mismatch") {
        std::stringstream ss("dressage-field v1 2 4 4 2\n");
        CHECK_THROWS_AS(read_scalar_field(ss), IoError);
    }
    SUBCASE("truncated body") {
        std::stringstream ss("dressage-field v1 1 4 1\n1.0 2.0\n");
        CHECK_THROWS_AS(read_scalar_field(ss), IoError);
    }
    SUBCASE("non-finite values") {
        std::stringstream ss("dressage-field v1 1 2 1\n1.0 inf\n");
        CHECK_THROWS_AS(read_scalar_field(ss), IoError);
    }
}

TEST_CASE("kernel save/load keeps kind and sink") {
    TempDir tmp;

    const Lattice lat({4, 4});
    const DressingKernel coulomb = coulomb_kernel(lat);
    save_kernel(coulomb, tmp.file("c"));
    const DressingKernel c2 = load_kernel_files(tmp.file("c"));
    CHECK(c2.kind() == KernelKind::coulomb);
    CHECK(c2.divergence_residual() <= 1e-10);

    const DressingKernel path = path_kernel(lat, parse_path("+x,+y"));
    save_kernel(path, tmp.file("p"));
    const DressingKernel p2 = load_kernel_files(tmp.file("p"));
    CHECK(p2.kind() == KernelKind::path);
    CHECK(p2.sink_offset() == path.sink_offset());

    // sidecar carries the three contract fields
    std::ifstream is(tmp.file("c") + ".json");
    nlohmann::json doc;
    is >> doc;
    CHECK(doc.at("kind") == "coulomb");
    CHECK(doc.contains("divergence_residual"));
    CHECK(doc.contains("sink_offset"));
}

TEST_CASE("state serialization carries every column") {
    const Lattice lat({4, 4});
    auto k = std::make_shared<const DressingKernel>(coulomb_kernel(lat));
    const QFTbit q1 = make_qftbit(0, 1.0, 0.0, +1, k);
    const QFTbit q2 = make_qftbit(5, 1.0, 0.0, -1, k);
    const std::array<std::array<Complex, 2>, 2> t{
        {{Complex{1.0, 0.0}, 0.0}, {0.0, Complex{0.0, 0.0}}}};
    const MultiQubitState s = entangle(q1, q2, t);
    const std::vector<std::string> ids{"a", "b"};
    const nlohmann::json doc = state_to_json(s, ids);
    CHECK(doc.at("sites") == nlohmann::json({0, 5}));
    CHECK(doc.at("charges") == nlohmann::json({1, -1}));
    CHECK(doc.at("kernel_ids") == nlohmann::json({"a", "b"}));
    CHECK(doc.at("amplitudes_re").size() == 4);
    CHECK(doc.at("amplitudes_im").size() == 4);
}

TEST_CASE("profile csv schema") {
    RadialProfile p;
    p.ndim = 3;
    p.shells = {{1.0, 0.08, 6}, {2.0, 0.02, 18}};
    std::stringstream ss;
    write_profile_csv(ss, p, 1.0);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "r,mean_E,count,continuum_E,rel_dev");
    std::getline(ss, line);
    CHECK(line.substr(0, 2) == "1,");
    CHECK(line.find("0.080000000000000002") != std::string::npos);
}

TEST_CASE("report json is deterministic minus its timestamp") {
    SuiteConfig cfg;
    cfg.seed = 5;
    cfg.include_large = false;
    cfg.contrast_transforms = 5;
    cfg.phase_law_transforms = 3;
    cfg.invariant_seeds = 3;
    cfg.sbp_pairs = 5;
    const std::string a = run_full_suite(cfg).to_json(false).dump();
    const std::string b = run_full_suite(cfg).to_json(false).dump();
    CHECK(a == b);

    nlohmann::json with_ts = run_full_suite(cfg).to_json(true);
    CHECK(with_ts.contains("timestamp"));
    with_ts.erase("timestamp");
    CHECK(with_ts.dump() == a);
}
