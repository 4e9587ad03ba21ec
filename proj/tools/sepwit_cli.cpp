// Command-line front end: ranges, pair checks, state detection, refinement,
// and the appendix experiments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sepwit/io.hpp"
#include "sepwit/presets.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using namespace sepwit;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::string pair_file;
    std::string preset;
    std::string out_dir = ".";
    std::size_t n_angles = 720;
    double tolerance = 1e-7;
    OptimizerConfig opt;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_pair = true) {
    if (needs_pair) {
        cmd->add_option("--pair", o.pair_file, "pair JSON file (A1,A2,B1,B2)");
        cmd->add_option("--preset", o.preset, "built-in preset name");
    }
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--angles", o.n_angles, "supporting-line sweep resolution")
        ->check(CLI::Range(std::size_t(8), std::size_t(100000)));
    cmd->add_option("--tol", o.tolerance, "membership tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--restarts", o.opt.restarts, "seesaw restarts");
    cmd->add_option("--max-iters", o.opt.max_iters, "seesaw iteration cap");
    cmd->add_option("--seed", o.opt.seed, "sampling seed");
}

ProductPair load_pair(const CommonOpts& o) {
    if (!o.preset.empty()) return presets::by_name(o.preset);
    if (!o.pair_file.empty()) return io::pair_from_json(io::load_json(o.pair_file));
    throw std::invalid_argument("one of --pair or --preset is required");
}

DensityState load_state(const std::string& file, const std::string& preset) {
    if (!preset.empty()) {
        if (preset == "singlet") return presets::singlet();
        if (preset == "bell-phi-plus") return presets::bell_phi_plus();
        if (preset == "mixed") return DensityState::maximally_mixed(2, 2);
        if (preset == "product-00")
            return DensityState::from_pure(Vector{1, 0, 0, 0}, 2, 2);
        throw std::invalid_argument("unknown state preset: " + preset);
    }
    if (!file.empty()) return io::state_from_json(io::load_json(file));
    throw std::invalid_argument("one of --state or --state-preset is required");
}

void emit(const fs::path& dir, const std::string& name, const std::string& contents) {
    fs::create_directories(dir);
    io::write_file(dir / name, contents);
}

int cmd_range(const CommonOpts& o, std::size_t cloud_samples,
              const std::vector<double>& tangent) {
    const ProductPair pair = load_pair(o);
    const HermitianOperator h1 = pair.H1(), h2 = pair.H2();
    const PlanarRegion joint = joint_range(h1, h2, o.n_angles);
    const PlanarRegion sep = separable_range(pair, o.n_angles);
    PointCloud cloud;
    if (cloud_samples > 0) cloud = product_cloud(pair, cloud_samples, o.opt.seed);

    std::vector<svg::TangentLine> tangents;
    json tangent_json = json::array();
    if (tangent.size() == 2) {
        const double k1 = tangent[0], k2 = tangent[1];
        const SepExtremum ext = sep_min(pair, k1, k2, o.opt);
        std::ostringstream label;
        label.precision(6);
        label << "tangent " << k1 << "x + " << k2 << "y = " << ext.value
              << "  (min side, k=(" << k1 << "," << k2 << "))";
        tangents.push_back(svg::TangentLine{k1, k2, ext.value, label.str()});
        tangent_json.push_back(
            json{{"k1", k1}, {"k2", k2}, {"sep_min", ext.value}, {"side", "min"}});
    }

    const fs::path dir(o.out_dir);
    emit(dir, "joint.csv", io::region_to_csv(joint));
    emit(dir, "separable.csv", io::region_to_csv(sep));
    if (cloud_samples > 0) emit(dir, "cloud.csv", io::cloud_to_csv(cloud));
    emit(dir, "range.svg", svg::overlay(joint, sep, cloud, tangents));

    json summary{{"schema", "witness-lab/1"},
                 {"joint_vertices", joint.vertices.size()},
                 {"separable_vertices", sep.vertices.size()},
                 {"tangents", tangent_json}};
    std::cout << summary.dump(2) << "\n";
    return kExitOk;
}

int cmd_check_pair(const CommonOpts& o, int scan_k) {
    const ProductPair pair = load_pair(o);
    const EffectivenessVerdict verdict = effectiveness_check(pair);
    json out = io::effectiveness_to_json(verdict);

    if (scan_k > 0) {
        std::vector<Point2> grid;
        for (int i = 0; i < scan_k; ++i) {
            const double angle = 2.0 * 3.14159265358979323846 * (i + 0.5) / scan_k;
            const double k1 = std::cos(angle), k2 = std::sin(angle);
            if (k1 * k2 == 0.0) continue;
            grid.push_back(Point2{k1, k2});
        }
        json scan = json::array();
        for (const auto& e : ground_state_scan(pair, grid, o.opt))
            scan.push_back(json{{"k1", e.k1},
                                {"k2", e.k2},
                                {"min_space", io::to_string(e.min_space)},
                                {"max_space", io::to_string(e.max_space)},
                                {"side_entangled", io::to_string(e.side_entangled)}});
        out["ground_state_scan"] = std::move(scan);
    }

    emit(fs::path(o.out_dir), "check_pair.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_detect(const CommonOpts& o, const std::string& state_file,
               const std::string& state_preset) {
    const ProductPair pair = load_pair(o);
    const DensityState rho = load_state(state_file, state_preset);
    const PlanarRegion region = separable_range(pair, o.n_angles);
    const DetectionReport rep = detect_state(pair, rho, region, o.opt, o.tolerance);

    json out = io::detection_to_json(rep);
    if (rho.dim() <= 6) {
        const double pt_min = eig_hermitian(HermitianOperator(partial_transpose(rho)))
                                  .eigenvalues.front();
        out["ppt_check"] = json{{"min_eigenvalue", pt_min}, {"npt", pt_min < -1e-9}};
    }
    emit(fs::path(o.out_dir), "detect.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    if (rep.witness && !rep.witness->converged) return kExitNumerical;
    return rep.detected ? kExitOk : kExitNegative;
}

int cmd_refine(const CommonOpts& o) {
    const ProductPair pair = load_pair(o);
    const RefinementResult ref = refine_pair(pair);

    const std::vector<Point2> k_grid{{1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                     {1, 2},  {2, 1},  {-1, 2}, {2, -1}};
    json certs = json::array();
    bool all_hold = true;
    bool any_inconclusive = false;
    for (const auto& k : k_grid) {
        const DominanceCertificate c = dominance_certificate(pair, ref.refined, k.x, k.y, o.opt);
        all_hold = all_hold && c.holds;
        any_inconclusive = any_inconclusive || c.inconclusive;
        certs.push_back(json{{"k1", k.x},
                             {"k2", k.y},
                             {"holds", c.holds},
                             {"inconclusive", c.inconclusive},
                             {"difference_min_eigenvalue", c.difference_min_eigenvalue}});
    }

    const bool fully_reducible = ref.refined.A1.matrix().max_abs() < 1e-12 &&
                                 ref.refined.A2.matrix().max_abs() < 1e-12;
    json out{{"schema", "witness-lab/1"},
             {"refined", io::pair_to_json(ref.refined)},
             {"removed_A", ref.removed_A.size()},
             {"removed_B", ref.removed_B.size()},
             {"fully_reducible", fully_reducible},
             {"certificates", std::move(certs)}};
    emit(fs::path(o.out_dir), "refine.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    if (any_inconclusive) return kExitNumerical;
    return all_hold ? kExitOk : kExitNegative;
}

int cmd_experiments(const CommonOpts& o, bool appendix_a, bool appendix_b,
                    std::vector<double> x_grid, bool a_true_family) {
    json out{{"schema", "witness-lab/1"}};
    if (appendix_a) {
        const ProductPair pair = o.preset.empty() && o.pair_file.empty()
                                     ? presets::planted_common()
                                     : load_pair(o);
        const AppendixAResult r = appendix_a_check(pair.A1, pair.A2, o.n_angles);
        const char* status = r.status == AppendixAResult::Status::holds    ? "holds"
                             : r.status == AppendixAResult::Status::fails  ? "fails"
                                                                           : "skipped";
        out["appendix_a"] = json{{"status", status},
                                 {"hausdorff", r.hausdorff_distance},
                                 {"diameter", r.diameter},
                                 {"note", r.note}};
    }
    if (appendix_b) {
        ProductPair pair = [&] {
            if (!o.preset.empty() || !o.pair_file.empty()) return load_pair(o);
            // diag(1,2) (x) diag(1,2) family, perturbed by X (x) X or Z (x) X.
            ComplexMatrix d(2, 2);
            d(0, 0) = 1.0;
            d(1, 1) = 2.0;
            const HermitianOperator diag12{d};
            const HermitianOperator a2 = a_true_family ? presets::pauli_z() : presets::pauli_x();
            return ProductPair(diag12, a2, diag12, presets::pauli_x());
        }();
        if (x_grid.empty()) x_grid = {-1e-2, -1e-3, -1e-4, 1e-4, 1e-3, 1e-2};
        const PerturbationScan scan = perturbation_scan(pair, x_grid, o.opt);
        json rows = json::array();
        for (const auto& e : scan.entries)
            rows.push_back(json{{"x", e.x},
                                {"ground_degenerate", e.ground_degenerate},
                                {"separable_ground_exists", e.separable_ground_exists},
                                {"test", io::to_string(e.test)}});
        out["appendix_b"] = json{{"statement_a", scan.statement_a},
                                 {"baseline_ground_product", scan.baseline_ground_product},
                                 {"entries", std::move(rows)}};
    }
    emit(fs::path(o.out_dir), "experiments.json", out.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint separable numerical ranges and product-form entanglement witnesses"};
    app.require_subcommand(1);

    CommonOpts range_o, check_o, detect_o, refine_o, exp_o;
    std::size_t cloud_samples = 0;
    std::vector<double> tangent;
    int scan_k = 0;
    std::string state_file, state_preset;
    bool appendix_a = false, appendix_b = false, a_true_family = false;
    std::vector<double> x_grid;

    auto* range = app.add_subcommand("range", "joint/separable range polygons + SVG");
    add_common(range, range_o);
    range->add_option("--cloud", cloud_samples, "also sample a product-state cloud");
    range->add_option("--tangent", tangent, "k1,k2 tangent line coefficients")
        ->delimiter(',')
        ->expected(2);

    auto* check = app.add_subcommand("check-pair", "Thm.1/Cor.1 effectiveness verdict");
    add_common(check, check_o);
    check->add_option("--scan-k", scan_k, "ground-state scan over N directions");

    auto* detect = app.add_subcommand("detect", "detect a state against a pair");
    add_common(detect, detect_o);
    detect->add_option("--state", state_file, "state JSON file");
    detect->add_option("--state-preset", state_preset,
                       "singlet | bell-phi-plus | mixed | product-00");

    auto* refine = app.add_subcommand("refine", "remove common eigenvectors, certify dominance");
    add_common(refine, refine_o);

    auto* exp = app.add_subcommand("experiments", "appendix experiments");
    add_common(exp, exp_o);
    exp->add_flag("--appendix-a", appendix_a, "convex-hull identity check");
    exp->add_flag("--appendix-b", appendix_b, "perturbation scan");
    exp->add_flag("--a-true", a_true_family, "use the statement-(a)-true default family");
    exp->add_option("--x-grid", x_grid, "perturbation strengths")->delimiter(',');

    try {
        app.parse(argc, argv);
        if (range->parsed()) return cmd_range(range_o, cloud_samples, tangent);
        if (check->parsed()) return cmd_check_pair(check_o, scan_k);
        if (detect->parsed()) return cmd_detect(detect_o, state_file, state_preset);
        if (refine->parsed()) return cmd_refine(refine_o);
        if (exp->parsed())
            return cmd_experiments(exp_o, appendix_a, appendix_b, x_grid, a_true_family);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
