#ifndef MERODIFF_SERIALIZE_HPP
#define MERODIFF_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "merodiff/diffmat.hpp"
#include "merodiff/nodes.hpp"

namespace merodiff {

// 17 significant digits: enough to round-trip a double exactly, so identical
// runs produce byte-identical CSV.
std::string format_g17(double x);
std::string csv_row(std::initializer_list<double> fields);

std::string basis_name(BasisFamily basis);
BasisFamily basis_from_name(const std::string& name);

// {"nodes":[[re,im],...]}
nlohmann::json nodes_to_json(const NodeSet<Complex>& nodes);
NodeSet<Complex> nodes_from_json(const nlohmann::json& j);

// {"poles":[{"re":..,"im":..,"order":..},...]}
nlohmann::json poles_to_json(const PoleSet<Complex>& poles);
PoleSet<Complex> poles_from_json(const nlohmann::json& j);

// {"samples":[[re,im],...]}
nlohmann::json samples_to_json(const CVector& samples);
CVector samples_from_json(const nlohmann::json& j);

// {"basis":..,"order":..,"nodes":[...],"poles":[...],"matrix":[[re,im],...]}
// with the matrix stored row-major; "poles" present only for pole-carrying
// bases.
nlohmann::json diffmatrix_to_json(const DiffMatrix<Complex>& d);
DiffMatrix<Complex> diffmatrix_from_json(const nlohmann::json& j);

NodeSet<Complex> nodes_from_file(const std::string& path);
PoleSet<Complex> poles_from_file(const std::string& path);
CVector samples_from_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace merodiff

#endif
