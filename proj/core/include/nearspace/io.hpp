#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nearspace/oracle.hpp"
#include "nearspace/span_engine.hpp"

namespace nearspace::io {

/// Polynomial in x, ascending powers, zero terms omitted: "0", "2", "x",
/// "1+2x", "2+x^2".
std::string render_element(const FiniteField& F, Elem a);

/// Accepts terms in any order with optional '*' and '-' signs; coefficients
/// are reduced mod p. Powers >= the extension degree are rejected
/// (DegreeTooHigh), not reduced.
Elem parse_element(const FiniteField& F, std::string_view text);

/// "(e1, e2, ..., en)".
std::string render_vector(const FiniteField& F, const NfVector& v);
NfVector parse_vector(const FiniteField& F, std::string_view text);

/// One vector literal per line; blank lines and '#' comments are ignored.
/// With no rows, the column count is `cols` (0 if not given).
NfMatrix parse_matrix(const FiniteField& F, std::istream& in,
                      std::optional<std::size_t> cols = std::nullopt);
NfMatrix parse_matrix(const FiniteField& F, std::string_view text,
                      std::optional<std::size_t> cols = std::nullopt);

enum class TableFormat { Ascii, Csv, Json };

std::string render_table(const FiniteField& F, const CayleyTable& table, TableFormat format);

/// Sorted vector literals, one per line, for diffing oracle and engine sets.
std::string render_set(const FiniteField& F, const oracle::VectorSet& set);

nlohmann::json to_json(const FiniteField& F, const NfVector& v);
nlohmann::json to_json(const FiniteField& F, const NDTriple& t);
nlohmann::json to_json(const FiniteField& F, const GenCertificate& cert);
nlohmann::json to_json(const FiniteField& F, const SpanCertificate& cert);

/// { "pair", "n", "basis", "rank", "certificate", "field_mode" }.
nlohmann::json gen_result_json(const Nearfield& R, const GenResult& result);
/// { "pair", "n", "mask", "dimension", "is_subspace_of_inputs_gen",
///   "certificate", "field_mode" } plus "basis" in field mode.
/// Mask positions are 1-based.
nlohmann::json span_result_json(const Nearfield& R, const SpanResult& result);

/// Reads the "basis" (and "n", "field_mode") of a gen result document.
GenBasis basis_from_json(const Nearfield& R, const nlohmann::json& doc);

}  // namespace nearspace::io
