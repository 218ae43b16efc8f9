#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "qmatroids/constructions.hpp"
#include "qmatroids/qmatroid.hpp"
#include "qmatroids/rankmetric.hpp"

namespace qm::io {

using nlohmann::json;

/// All writers emit canonical forms (alphabetical keys, lattice-ordered
/// lists, packed integer field values), so serialization is byte-stable.

[[nodiscard]] json field_to_json(const Field& F);
[[nodiscard]] Field field_from_json(const json& j);

[[nodiscard]] json matrix_to_json(const linalg::Mat& M);
[[nodiscard]] linalg::Mat matrix_from_json(const json& j);

[[nodiscard]] json subspace_to_json(const Subspace& s);
[[nodiscard]] Subspace subspace_from_json(const json& j);

[[nodiscard]] json qmatroid_to_json(const QMatroid& M);
[[nodiscard]] QMatroid qmatroid_from_json(const json& j);

struct FamilyFile {
  std::uint64_t q = 2;
  int n = 0;
  std::vector<Subspace> members;
};

[[nodiscard]] json family_to_json(const FamilyFile& fam);
[[nodiscard]] FamilyFile family_from_json(const json& j);

[[nodiscard]] json code_to_json(const RankMetricCode& C);
[[nodiscard]] RankMetricCode code_from_json(const json& j);

[[nodiscard]] json report_to_json(const AxiomReport& rep);
[[nodiscard]] json reports_to_json(const std::vector<AxiomReport>& reps);

[[nodiscard]] json rank_poly_to_json(const RankPolynomial& P);

[[nodiscard]] json minor_duality_to_json(const MinorDualityReport& rep);

/// Coordinate vector from CLI text: either one digit per coordinate
/// ("1021", only when q <= 10) or '.'-separated values ("1.0.12").
[[nodiscard]] std::vector<FVal> parse_vector(const std::string& text, std::uint64_t q, int n);

/// Subspace from CLI text: generating vectors separated by ','.
[[nodiscard]] Subspace parse_subspace(const std::string& text, std::uint64_t q, int n);

/// Parses a JSON document from a file; ParseError on IO or syntax trouble.
[[nodiscard]] json load_json_file(const std::string& path);

/// dump(2) with a trailing newline.
[[nodiscard]] std::string render(const json& j);

}  // namespace qm::io
