#pragma once

// JSON forms of matrices and reports. Every top-level document carries
// "schema": 1. Column witnesses are 1-based in JSON.

#include <json.hpp>

#include "nmds/codes.hpp"
#include "nmds/construct.hpp"
#include "nmds/recursive.hpp"

namespace nmds {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Array of rows of element strings in the given notation.
Json matrix_to_json(const FieldMatrix& a, Notation notation = Notation::Power);
/// Rows of element strings (any accepted element form) or raw integer representatives.
FieldMatrix matrix_from_json(const Field& field, const Json& j);

Json indices_to_json(const std::vector<std::size_t>& zero_based);
Json code_report_to_json(const Field& field, const CodeReport& report);
Json condition_report_to_json(const ConditionReport& report);
Json three_clause_to_json(const ThreeClauseCheck& check);
Json elements_to_json(const Field& field, const std::vector<Rep>& v, Notation notation = Notation::Power);

/// Full construction documents, as printed by `construct --json`. `report`
/// is null when the construction was not verified.
Json construction_to_json(const XYSpec& spec, Target target, const Construction& c, const std::optional<CodeReport>& report,
                          Notation notation = Notation::Power);
Json involutory_to_json(const std::vector<Rep>& x, Rep l, Target target, const InvolutoryConstruction& c,
                        const std::optional<CodeReport>& report, Notation notation = Notation::Power);

}  // namespace nmds
