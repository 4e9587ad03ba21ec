#include "sepwit/io.hpp"

#include <fstream>
#include <sstream>

namespace sepwit::io {

json matrix_to_json(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix JSON requires square matrix");
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rr = json::array(), ri = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rr.push_back(m(i, j).real());
            ri.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != dim || im.size() != dim)
        throw std::invalid_argument("matrix JSON row count does not match dim");
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (re[i].size() != dim || im[i].size() != dim)
            throw std::invalid_argument("matrix JSON column count does not match dim");
        for (std::size_t k = 0; k < dim; ++k)
            m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
    }
    return m;
}

json operator_to_json(const HermitianOperator& h) { return matrix_to_json(h.matrix()); }

HermitianOperator operator_from_json(const json& j) {
    return HermitianOperator(matrix_from_json(j));
}

json pair_to_json(const ProductPair& pair) {
    return json{{"A1", operator_to_json(pair.A1)},
                {"A2", operator_to_json(pair.A2)},
                {"B1", operator_to_json(pair.B1)},
                {"B2", operator_to_json(pair.B2)}};
}

ProductPair pair_from_json(const json& j) {
    return ProductPair(operator_from_json(j.at("A1")), operator_from_json(j.at("A2")),
                       operator_from_json(j.at("B1")), operator_from_json(j.at("B2")));
}

json state_to_json(const DensityState& rho) {
    return json{{"dimA", rho.dimA()}, {"dimB", rho.dimB()},
                {"matrix", matrix_to_json(rho.matrix())}};
}

DensityState state_from_json(const json& j) {
    return DensityState(j.at("dimA").get<std::size_t>(), j.at("dimB").get<std::size_t>(),
                        matrix_from_json(j.at("matrix")));
}

json witness_report_to_json(const WitnessReport& rep) {
    json dir;
    return json{{"schema", "witness-lab/1"},
                {"W", operator_to_json(rep.W)},
                {"side", rep.side == WitnessSide::min ? "min" : "max"},
                {"k1", rep.k1},
                {"k2", rep.k2},
                {"sep_extremum", rep.sep_extremum},
                {"global_extremum", rep.global_extremum},
                {"is_witness", rep.is_witness},
                {"undecided", rep.undecided},
                {"converged", rep.converged}};
}

json effectiveness_to_json(const EffectivenessVerdict& v) {
    auto records = [](const std::vector<CommonEigenvectorRecord>& rs) {
        json arr = json::array();
        for (const auto& r : rs) arr.push_back(json{{"a1", r.a1}, {"a2", r.a2}});
        return arr;
    };
    return json{{"schema", "witness-lab/1"},
                {"commuting_A", v.commuting_A},
                {"commuting_B", v.commuting_B},
                {"common_A", records(v.common_A)},
                {"common_B", records(v.common_B)},
                {"cor1_satisfied", v.cor1_satisfied},
                {"thm1_satisfied", v.thm1_satisfied}};
}

json detection_to_json(const DetectionReport& rep) {
    json j{{"schema", "witness-lab/1"},
           {"detected", rep.detected},
           {"point", {rep.point.x, rep.point.y}}};
    if (rep.direction) j["direction"] = {rep.direction->x, rep.direction->y};
    if (rep.witness) j["witness"] = witness_report_to_json(*rep.witness);
    return j;
}

namespace {

std::string points_to_csv(const std::vector<Point2>& pts) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y\n";
    for (const auto& p : pts) os << p.x << "," << p.y << "\n";
    return os.str();
}

}  // namespace

std::string region_to_csv(const PlanarRegion& region) { return points_to_csv(region.vertices); }

std::string cloud_to_csv(const PointCloud& cloud) { return points_to_csv(cloud.points); }

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

std::string to_string(ProductTestOutcome o) {
    switch (o) {
        case ProductTestOutcome::contains_product: return "contains_product";
        case ProductTestOutcome::entangled_only: return "entangled_only";
        default: return "inconclusive";
    }
}

std::string to_string(SideVerdict v) {
    switch (v) {
        case SideVerdict::min: return "min";
        case SideVerdict::max: return "max";
        case SideVerdict::both: return "both";
        case SideVerdict::neither: return "neither";
        default: return "inconclusive";
    }
}

}  // namespace sepwit::io
