#pragma once

#include "khup/group.hpp"
#include "khup/grid.hpp"
#include "khup/khadamard.hpp"
#include "khup/report.hpp"

#include <json.hpp>

#include <string>

namespace khup::cli {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become null.
Json number(double x);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
/// Accepts the matrix schema with cols = 1.
ComplexVector vector_from_json(const Json& j);

Json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const Json& j);

/// {"order", "cayley", "labels"} plus optional {"irreps": {"dims", "matrices"}}
/// where matrices[i][x] is a d_i x d_i matrix in the matrix schema.
GroupWithIrreps group_from_json(const Json& j);

Json certificate_to_json(const KHadamardCertificate& c);
Json report_to_json(const InequalityReport& r);

Json load_json_file(const std::string& path);

}  // namespace khup::cli
