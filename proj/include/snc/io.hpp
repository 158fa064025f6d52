#ifndef SNC_IO_HPP
#define SNC_IO_HPP

#include <string>

#include <json.hpp>

#include "snc/configuration.hpp"
#include "snc/reciprocity.hpp"

namespace snc
{

using Json = nlohmann::ordered_json;

/// One configuration document: the divisor D, π1 data and edge labels.
struct Document
{
    SncConfiguration config;
    Pi1Input pi1;
    EdgeLabelCochain labels;
};

/**
 * Parses a configuration document. Schema errors are collected with their
 * JSON pointer locations and thrown together as one ValidationError. With
 * `validate`, the configuration, π1 data and labels are checked as well.
 */
Document parse_document(const std::string& text, bool validate = true);
Document parse_document(const Json& json, bool validate = true);

Json to_json(const Document& document);
Json config_to_json(const SncConfiguration& config);
SncConfiguration config_from_json(const Json& json);

/// Decimal string when outside the 64-bit range, number otherwise.
Json integer_to_json(const Integer& x);
Json matrix_to_json(const IntMatrix& m);
Json invariants_to_json(const GroupInvariants& g);

} // namespace snc

#endif
