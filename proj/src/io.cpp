#include "lypbw/io.hpp"

#include <fstream>
#include <set>

namespace lypbw {

namespace {

void reject_unknown_fields(const Json& obj, const std::set<std::string>& known,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            throw ParseError(where + ": unknown field '" + key + "'");
}

Word parse_word(const Json& letters, const AlphabetPtr& alphabet, const std::string& where) {
    if (!letters.is_array()) throw ParseError(where + ": word must be an array of generator names");
    std::vector<int32_t> ranks;
    for (const auto& item : letters) {
        if (!item.is_string()) throw ParseError(where + ": generator name must be a string");
        const int idx = alphabet->index_of(item.get<std::string>());
        if (idx < 0)
            throw ParseError(where + ": unknown generator '" + item.get<std::string>() + "'");
        ranks.push_back(idx);
    }
    return make_word(*alphabet, ranks);
}

Rational parse_coefficient(const Json& c, const std::string& where) {
    if (!c.is_string())
        throw ParseError(where + ": coefficient must be a rational string like \"-3/2\"");
    try {
        return rational_from_string(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Poly parse_poly(const Json& terms, const AlphabetPtr& alphabet, const std::string& where) {
    if (!terms.is_array()) throw ParseError(where + ": expected an array of [coefficient, word]");
    Poly f(alphabet);
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& term = terms[i];
        const std::string here = where + ", term " + std::to_string(i);
        if (!term.is_array() || term.size() != 2)
            throw ParseError(here + ": expected [coefficient, word]");
        f.add_term(parse_word(term[1], alphabet, here), parse_coefficient(term[0], here));
    }
    return f;
}

TensorPoly parse_tensor(const Json& terms, const AlphabetPtr& alphabet, const std::string& where) {
    if (!terms.is_array())
        throw ParseError(where + ": expected an array of [coefficient, left word, right word]");
    TensorPoly t(alphabet);
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& term = terms[i];
        const std::string here = where + ", term " + std::to_string(i);
        if (!term.is_array() || term.size() != 3)
            throw ParseError(here + ": expected [coefficient, left word, right word]");
        t.add_term(parse_word(term[1], alphabet, here), parse_word(term[2], alphabet, here),
                   parse_coefficient(term[0], here));
    }
    return t;
}

}  // namespace

Presentation parse_presentation(const Json& doc, int max_degree_override) {
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    reject_unknown_fields(doc, {"generators", "relations", "delta", "max_degree",
                                "subalgebra_relations"},
                          "document");

    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        throw ParseError("generators: expected a non-empty array");

    std::vector<Generator> listed;
    std::vector<bool> marks;
    for (size_t i = 0; i < doc["generators"].size(); ++i) {
        const auto& g = doc["generators"][i];
        const std::string where = "generators[" + std::to_string(i) + "]";
        if (!g.is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_fields(g, {"name", "degree", "in_subalgebra"}, where);
        if (!g.contains("name") || !g["name"].is_string())
            throw ParseError(where + ": 'name' must be a string");
        if (!g.contains("degree") || !g["degree"].is_number_integer())
            throw ParseError(where + ": 'degree' must be an integer");
        bool mark = false;
        if (g.contains("in_subalgebra")) {
            if (!g["in_subalgebra"].is_boolean())
                throw ParseError(where + ": 'in_subalgebra' must be a boolean");
            mark = g["in_subalgebra"].get<bool>();
        }
        listed.push_back({g["name"].get<std::string>(), g["degree"].get<int>()});
        marks.push_back(mark);
    }

    Presentation p;
    try {
        std::vector<int> listed_to_canonical;
        Alphabet alpha = canonical_alphabet(listed, marks, &listed_to_canonical);
        p.alphabet = std::make_shared<const Alphabet>(std::move(alpha));
        p.in_subalgebra.assign(static_cast<size_t>(p.alphabet->size()), false);
        for (size_t i = 0; i < marks.size(); ++i)
            p.in_subalgebra[static_cast<size_t>(listed_to_canonical[i])] = marks[i];
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("generators: ") + e.what());
    }

    p.bound = 6;
    if (doc.contains("max_degree")) {
        if (!doc["max_degree"].is_number_integer() || doc["max_degree"].get<int>() < 1)
            throw ParseError("max_degree: expected a positive integer");
        p.bound = doc["max_degree"].get<int>();
    }
    if (max_degree_override > 0) p.bound = max_degree_override;

    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw ParseError("relations: expected an array");
        for (size_t i = 0; i < doc["relations"].size(); ++i)
            p.relations.push_back(
                parse_poly(doc["relations"][i], p.alphabet, "relations[" + std::to_string(i) + "]"));
    }

    p.delta_images.assign(static_cast<size_t>(p.alphabet->size()), std::nullopt);
    if (doc.contains("delta")) {
        if (!doc["delta"].is_object()) throw ParseError("delta: expected an object");
        for (const auto& [name, image] : doc["delta"].items()) {
            const int idx = p.alphabet->index_of(name);
            if (idx < 0) throw ParseError("delta: unknown generator '" + name + "'");
            p.delta_images[static_cast<size_t>(idx)] =
                parse_tensor(image, p.alphabet, "delta['" + name + "']");
        }
    }

    if (doc.contains("subalgebra_relations")) {
        if (!doc["subalgebra_relations"].is_array())
            throw ParseError("subalgebra_relations: expected an array");
        for (size_t i = 0; i < doc["subalgebra_relations"].size(); ++i)
            p.subalgebra_relations.push_back(parse_poly(
                doc["subalgebra_relations"][i], p.alphabet,
                "subalgebra_relations[" + std::to_string(i) + "]"));
    }
    return p;
}

Presentation load_presentation_file(const std::string& path, int max_degree_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("'") + path + "': " + e.what());
    }
    return parse_presentation(doc, max_degree_override);
}

Json word_to_json(const Alphabet& alphabet, const Word& w) {
    Json arr = Json::array();
    for (int32_t x : w.letters()) arr.push_back(alphabet.name(x));
    return arr;
}

Json poly_to_json(const Poly& f) {
    Json arr = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        arr.push_back(Json::array(
            {rational_to_string(it->second), word_to_json(*f.alphabet(), it->first)}));
    return arr;
}

Json tensor_to_json(const TensorPoly& t) {
    Json arr = Json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
        arr.push_back(Json::array({rational_to_string(it->second),
                                   word_to_json(*t.alphabet(), it->first.first),
                                   word_to_json(*t.alphabet(), it->first.second)}));
    return arr;
}

}  // namespace lypbw
