#include "merodiff/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace merodiff {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_row(std::initializer_list<double> fields) {
    std::string row;
    bool first = true;
    for (double f : fields) {
        if (!first) row += ',';
        row += format_g17(f);
        first = false;
    }
    return row;
}

std::string basis_name(BasisFamily basis) {
    switch (basis) {
        case BasisFamily::Algebraic: return "algebraic";
        case BasisFamily::Trigonometric: return "trigonometric";
        case BasisFamily::Rational: return "rational";
        case BasisFamily::PeriodicMeromorphic: return "periodic-meromorphic";
    }
    throw ValidationError("unknown basis");
}

BasisFamily basis_from_name(const std::string& name) {
    if (name == "algebraic") return BasisFamily::Algebraic;
    if (name == "trigonometric") return BasisFamily::Trigonometric;
    if (name == "rational") return BasisFamily::Rational;
    if (name == "periodic-meromorphic") return BasisFamily::PeriodicMeromorphic;
    throw ValidationError("unknown basis name: " + name);
}

namespace {

nlohmann::json complex_pair(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_pair(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("expected [re, im] pair in JSON");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json nodes_to_json(const NodeSet<Complex>& nodes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& z : nodes.points()) arr.push_back(complex_pair(z));
    return nlohmann::json{{"nodes", arr}};
}

NodeSet<Complex> nodes_from_json(const nlohmann::json& j) {
    if (!j.contains("nodes")) throw ValidationError("JSON lacks a \"nodes\" array");
    std::vector<Complex> pts;
    for (const auto& e : j["nodes"]) pts.push_back(complex_from_pair(e));
    return NodeSet<Complex>(std::move(pts));
}

nlohmann::json poles_to_json(const PoleSet<Complex>& poles) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : poles.poles())
        arr.push_back({{"re", p.location.real()}, {"im", p.location.imag()}, {"order", p.order}});
    return nlohmann::json{{"poles", arr}};
}

PoleSet<Complex> poles_from_json(const nlohmann::json& j) {
    if (!j.contains("poles")) throw ValidationError("JSON lacks a \"poles\" array");
    std::vector<Pole<Complex>> ps;
    for (const auto& e : j["poles"])
        ps.push_back({Complex{e.at("re").get<double>(), e.at("im").get<double>()},
                      e.at("order").get<int>()});
    return PoleSet<Complex>(std::move(ps));
}

nlohmann::json samples_to_json(const CVector& samples) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& z : samples) arr.push_back(complex_pair(z));
    return nlohmann::json{{"samples", arr}};
}

CVector samples_from_json(const nlohmann::json& j) {
    if (!j.contains("samples")) throw ValidationError("JSON lacks a \"samples\" array");
    CVector v;
    for (const auto& e : j["samples"]) v.push_back(complex_from_pair(e));
    return v;
}

nlohmann::json diffmatrix_to_json(const DiffMatrix<Complex>& d) {
    nlohmann::json out;
    out["basis"] = basis_name(d.basis);
    out["order"] = d.order;
    out["nodes"] = nodes_to_json(d.nodes)["nodes"];
    if (d.poles) out["poles"] = poles_to_json(*d.poles)["poles"];
    nlohmann::json mat = nlohmann::json::array();
    for (const Complex& z : d.matrix.data()) mat.push_back(complex_pair(z));
    out["matrix"] = mat;
    return out;
}

DiffMatrix<Complex> diffmatrix_from_json(const nlohmann::json& j) {
    DiffMatrix<Complex> d{CMatrix{}, basis_from_name(j.at("basis").get<std::string>()),
                          nodes_from_json(nlohmann::json{{"nodes", j.at("nodes")}}),
                          std::nullopt, j.at("order").get<int>()};
    if (j.contains("poles") && !j["poles"].empty())
        d.poles = poles_from_json(nlohmann::json{{"poles", j["poles"]}});
    const std::size_t n = d.nodes.size();
    const auto& mat = j.at("matrix");
    if (mat.size() != n * n) throw ValidationError("matrix entry count disagrees with nodes");
    d.matrix = CMatrix(n, n);
    for (std::size_t i = 0; i < n * n; ++i) d.matrix.data()[i] = complex_from_pair(mat[i]);
    return d;
}

namespace {

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

NodeSet<Complex> nodes_from_file(const std::string& path) { return nodes_from_json(parse_file(path)); }
PoleSet<Complex> poles_from_file(const std::string& path) { return poles_from_json(parse_file(path)); }
CVector samples_from_file(const std::string& path) { return samples_from_json(parse_file(path)); }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open file for writing: " + path);
    out << content;
}

}  // namespace merodiff
