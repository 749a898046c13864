#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lypbw/presentation.hpp"

namespace lypbw {

using Json = nlohmann::ordered_json;

/// An input document failed to parse or to satisfy the schema; carries the
/// location of the offence.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a presentation document. Unknown fields are rejected; coefficients
/// must be exact rational strings. `max_degree_override`, when positive,
/// wins over the document's max_degree.
Presentation parse_presentation(const Json& doc, int max_degree_override = 0);

/// Reads and parses the file; throws ParseError for I/O, syntax and schema
/// problems alike.
Presentation load_presentation_file(const std::string& path, int max_degree_override = 0);

/// Serializers used by the report: exact, deterministic, schema-stable.
Json word_to_json(const Alphabet& alphabet, const Word& w);
Json poly_to_json(const Poly& f);
Json tensor_to_json(const TensorPoly& t);

}  // namespace lypbw
