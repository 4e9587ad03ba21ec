#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sepwit/io.hpp"
#include "sepwit/presets.hpp"
#include "test_util.hpp"

using namespace sepwit;

TEST_CASE("matrix JSON round trip verifies Hermiticity") {
    std::mt19937_64 gen(51);
    const auto h = testutil::random_hermitian(gen, 4);
    const auto back = io::operator_from_json(io::operator_to_json(h));
    CHECK((back.matrix() - h.matrix()).max_abs() <= 1e-15);

    // non-Hermitian payload is rejected by the reader
    auto j = io::operator_to_json(h);
    j["re"][0][1] = j["re"][0][1].get<double>() + 1.0;
    CHECK_THROWS_AS(io::operator_from_json(j), std::invalid_argument);

    // shape mismatch
    auto bad = io::operator_to_json(h);
    bad["dim"] = 5;
    CHECK_THROWS_AS(io::operator_from_json(bad), std::invalid_argument);
}

TEST_CASE("pair and state JSON round trips") {
    const auto pair = presets::planted_common();
    const auto back = io::pair_from_json(io::pair_to_json(pair));
    CHECK((back.A1.matrix() - pair.A1.matrix()).max_abs() <= 1e-15);
    CHECK((back.B2.matrix() - pair.B2.matrix()).max_abs() <= 1e-15);

    const auto rho = presets::singlet();
    const auto rho2 = io::state_from_json(io::state_to_json(rho));
    CHECK(rho2.dimA() == 2);
    CHECK((rho2.matrix() - rho.matrix()).max_abs() <= 1e-15);
}

TEST_CASE("polygon CSV format") {
    const PlanarRegion r{{{1, 0}, {0, 1}, {-1, 0}}};
    const std::string csv = io::region_to_csv(r);
    CHECK(csv.substr(0, 4) == "x,y\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("report JSON carries the schema tag") {
    const auto rep = build_witness(presets::pauli_xxzz(), 1.0, 1.0, WitnessSide::min);
    const auto j = io::witness_report_to_json(rep);
    CHECK(j.at("schema") == "witness-lab/1");
    CHECK(j.at("is_witness") == true);
    CHECK(io::effectiveness_to_json(effectiveness_check(presets::pauli_xxzz()))
              .at("schema") == "witness-lab/1");
}

TEST_CASE("atomic file write") {
    const auto dir = std::filesystem::temp_directory_path() / "sepwit_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    io::write_file(path, "x,y\n1,2\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y");
    CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
    std::filesystem::remove_all(dir);
}
