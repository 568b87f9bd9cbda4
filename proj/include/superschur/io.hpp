#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "superschur/subspace.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

/// Input-format error (malformed file, unresolved label, bracket given twice).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk presentation of an algebra, with optional pair data.
struct AlgebraFile {
    std::string name;
    SuperAlgebra algebra;
    std::optional<GradedSubspace> ideal;
    std::optional<GradedSubspace> complement;
};

AlgebraFile parse_algebra_json(const nlohmann::json& doc);
AlgebraFile load_algebra_file(const std::string& path);

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& a, const std::string& name);
void save_algebra_file(const SuperAlgebra& a, const std::string& name, const std::string& path);

/// Basis-aligned subspace from labels (used for "ideal" / "complement").
GradedSubspace subspace_from_labels(const SuperAlgebra& a, const std::vector<std::string>& labels);

}  // namespace superschur
