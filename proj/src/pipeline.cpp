#include "lypbw/pipeline.hpp"

#include <sstream>

namespace lypbw {

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "unverifiable";
    }
}

Json gen_to_json(const Alphabet& alphabet, const AlgebraGenerator& g) {
    Json j = Json::object();
    if (g.is_letter) {
        j["kind"] = "generator";
        j["name"] = alphabet.name(g.letter);
    } else {
        j["kind"] = "z";
        j["gamma"] = word_to_json(alphabet, g.gamma);
    }
    return j;
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json arr = Json::array();
    for (const auto& v : violations) {
        Json j = Json::object();
        j["where"] = v.where;
        j["message"] = v.message;
        arr.push_back(j);
    }
    return arr;
}

Json validation_section(const std::vector<Violation>& violations) {
    Json j = Json::object();
    j["ok"] = violations.empty();
    j["violations"] = violations_to_json(violations);
    return j;
}

Json delta_section(const Presentation& p, const DeltaCheckReport& report) {
    Json j = Json::object();
    j["checked_degree"] = report.checked_degree;
    j["ok"] = report.ok();
    Json arr = Json::array();
    for (const auto& v : report.violations) {
        Json e = Json::object();
        e["kind"] = v.kind == DeltaViolation::Kind::ideal ? "ideal" : "shape";
        e["index"] = v.index;
        if (v.kind == DeltaViolation::Kind::shape)
            e["generator"] = p.alphabet->name(v.index);
        e["residual"] = tensor_to_json(v.residual);
        arr.push_back(e);
    }
    j["violations"] = arr;
    return j;
}

Json groebner_section(const TruncatedGB& gb) {
    Json j = Json::object();
    j["bound"] = gb.bound;
    j["complete_below"] = gb.complete_below;
    j["finite_certificate"] = gb.finite_certificate;
    Json elements = Json::array();
    for (const Poly& e : gb.elements) elements.push_back(poly_to_json(e));
    j["elements"] = elements;
    Json obstructions = Json::array();
    for (const Word& o : gb.obstructions) obstructions.push_back(word_to_json(*gb.alphabet, o));
    j["obstructions"] = obstructions;
    return j;
}

Json words_to_json(const Alphabet& alphabet, const std::vector<Word>& words) {
    Json arr = Json::array();
    for (const Word& w : words) arr.push_back(word_to_json(alphabet, w));
    return arr;
}

// Structural facts: every obstruction is Lyndon, and the irreducible words of
// each degree coincide with the nondecreasing products over the irreducible
// Lyndon set.
struct StructureFacts {
    bool obstructions_lyndon = true;
    bool basis_matches_lyndon_products = true;
};

StructureFacts check_structure_facts(const PbwData& d, const Presentation& p,
                                     const TruncatedGB& gb) {
    StructureFacts facts;
    for (const Word& o : gb.obstructions)
        if (!is_lyndon(o)) facts.obstructions_lyndon = false;
    std::set<Word> n_i(d.n_i.begin(), d.n_i.end());
    for (int n = 1; n <= gb.complete_below && facts.basis_matches_lyndon_products; ++n)
        for (const Word& w : words_of_degree(*p.alphabet, n)) {
            const bool irreducible = !is_reducible(w, gb);
            if (irreducible != cfl_parts_within(*p.alphabet, w, n_i)) {
                facts.basis_matches_lyndon_products = false;
                break;
            }
        }
    return facts;
}

Json pbw_section(const PbwData& d, const Presentation& p,
                 const SubalgebraComparison& sub, const StructureFacts& facts) {
    const Alphabet& alpha = *p.alphabet;
    Json j = Json::object();
    j["n_i"] = words_to_json(alpha, d.n_i);
    j["n_j"] = words_to_json(alpha, d.n_j);
    j["gamma"] = words_to_json(alpha, d.gamma);  // in Gamma's total (lex) order
    Json zs = Json::array();
    for (const Word& g : d.gamma) {
        Json e = Json::object();
        e["gamma"] = word_to_json(alpha, g);
        e["z"] = poly_to_json(d.z.at(g));
        zs.push_back(e);
    }
    j["z"] = zs;
    Json structure = Json::object();
    structure["obstructions_lyndon"] = facts.obstructions_lyndon;
    structure["basis_matches_lyndon_products"] = facts.basis_matches_lyndon_products;
    j["structure"] = structure;
    Json crosscheck = Json::object();
    crosscheck["n_match"] = sub.irreducible_lyndon_match;
    crosscheck["o_match"] = sub.obstructions_match;
    crosscheck["g_match"] = sub.basis_match;
    j["subalgebra_crosscheck"] = crosscheck;
    return j;
}

Json hilbert_section(const HilbertReport& h, bool sub_certified) {
    Json j = Json::object();
    j["dims"] = h.dims;
    j["product_dims"] = h.product_dims;
    j["consistent"] = h.dims == h.product_dims;
    Json gk = Json::object();
    gk["count"] = h.n_i_count;
    gk["certified"] = h.certified_complete;
    j["gk_estimate"] = gk;
    Json rel = Json::object();
    rel["n_i_count"] = h.n_i_count;
    rel["n_j_count"] = h.n_j_count;
    rel["gamma_count"] = h.gamma_count;
    rel["subalgebra_certified"] = sub_certified;
    j["relative"] = rel;
    return j;
}

Json condition1_to_json(const Condition1Report& r, const Alphabet& alpha) {
    Json j = Json::object();
    j["ok"] = r.ok();
    Json arr = Json::array();
    for (const auto& e : r.entries) {
        Json item = Json::object();
        item["gamma"] = word_to_json(alpha, e.gamma);
        item["status"] = status_name(e.status);
        item["residual"] = tensor_to_json(e.residual);
        arr.push_back(item);
    }
    j["per_gamma"] = arr;
    return j;
}

Json condition2_to_json(const Condition2Report& r, const Alphabet& alpha) {
    Json j = Json::object();
    j["ok"] = r.ok();
    Json arr = Json::array();
    for (const auto& e : r.entries) {
        Json item = Json::object();
        item["gamma"] = word_to_json(alpha, e.gamma);
        item["generator"] = gen_to_json(alpha, e.gen);
        item["status"] = status_name(e.status);
        item["commutator"] = poly_to_json(e.commutator_nf);
        arr.push_back(item);
    }
    j["pairs"] = arr;
    return j;
}

Json condition3_to_json(const std::vector<Condition3Entry>& entries) {
    Json j = Json::object();
    bool ok = true;
    Json arr = Json::array();
    for (const auto& e : entries) {
        if (!e.pass()) ok = false;
        Json item = Json::object();
        item["degree"] = e.degree;
        item["dim"] = e.dim;
        item["left_count"] = e.left_count;
        item["left_rank"] = e.left_rank;
        item["right_count"] = e.right_count;
        item["right_rank"] = e.right_rank;
        item["status"] = e.pass() ? "pass" : "fail";
        arr.push_back(item);
    }
    j["ok"] = ok;
    j["per_degree"] = arr;
    return j;
}

Json tower_section(const TowerReport& t, const Alphabet& alpha) {
    Json j = Json::object();
    j["step_count"] = t.step_count;
    j["certified"] = t.certified;
    j["partial"] = t.partial;
    j["failed"] = t.failed;
    if (t.failed) j["failure"] = t.failure_reason;
    j["certified_through_degree"] = t.certified_through_degree;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step = Json::object();
        step["gamma"] = word_to_json(alpha, s.gamma);
        step["degree"] = s.degree;
        step["z"] = poly_to_json(s.z);
        Json table = Json::array();
        for (const auto& e : s.delta_table) {
            Json entry = Json::object();
            entry["generator"] = gen_to_json(alpha, e.gen);
            entry["status"] = status_name(e.status);
            entry["value"] = poly_to_json(e.value);
            Json pbw_terms = Json::array();
            for (const auto& [c, parts] : e.value_pbw) {
                Json words = Json::array();
                for (const Word& w : parts) words.push_back(word_to_json(alpha, w));
                pbw_terms.push_back(Json::array({rational_to_string(c), words}));
            }
            entry["value_pbw"] = pbw_terms;
            table.push_back(entry);
        }
        step["delta_table"] = table;
        step["leibniz"] = status_name(s.leibniz);
        Json freeness = Json::array();
        for (const auto& [n, pass] : s.freeness) {
            Json f = Json::object();
            f["degree"] = n;
            f["status"] = pass ? "pass" : "fail";
            freeness.push_back(f);
        }
        step["freeness"] = freeness;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

}  // namespace

RunResult run_pipeline(const Presentation& p, const std::string& input_name,
                       const RunOptions& options) {
    RunResult result;
    Json& report = result.report;
    report["report_version"] = 1;

    Json input = Json::object();
    input["file"] = input_name;
    input["max_degree"] = p.bound;
    Json order = Json::array();
    for (int i = 0; i < p.alphabet->size(); ++i) order.push_back(p.alphabet->name(i));
    input["generator_order"] = order;
    Json sub = Json::array();
    for (int32_t x : p.subalgebra_letters()) sub.push_back(p.alphabet->name(x));
    input["subalgebra"] = sub;
    report["input"] = input;

    const std::vector<Violation> violations = validate(p);
    report["validation"] = validation_section(violations);
    if (!violations.empty()) {
        result.exit_code = 1;
        return result;
    }

    const TruncatedGB gb = complete(p.alphabet, p.relations, p.bound);
    const DeltaCheckReport delta = check_delta_ideal(p, gb);
    report["delta_check"] = delta_section(p, delta);
    if (options.strict_coassoc) {
        const std::vector<Violation> coassoc = check_coassociativity(p, gb);
        Json j = Json::object();
        j["ok"] = coassoc.empty();
        j["violations"] = violations_to_json(coassoc);
        report["delta_check"]["coassociativity"] = j;
        if (!coassoc.empty()) result.exit_code = 1;
    }
    if (!delta.ok()) result.exit_code = 1;
    if (result.exit_code != 0 || options.command == Command::check) return result;

    report["groebner"] = groebner_section(gb);

    const SubalgebraComparison sub_cmp = compare_subalgebra_data(p, gb, delta);
    const PbwData d = compute_pbw(p, gb, delta);
    const StructureFacts facts = check_structure_facts(d, p, gb);
    report["pbw"] = pbw_section(d, p, sub_cmp, facts);

    const HilbertReport hilbert = hilbert_report(d, gb);
    bool sub_no_tail = true;
    for (const Word& v : d.n_j)
        if (2 * v.degree() > gb.complete_below) sub_no_tail = false;
    const bool sub_certified = sub_cmp.gb_sub.finite_certificate && sub_no_tail;
    report["hilbert"] = hilbert_section(hilbert, sub_certified);

    const Condition1Report c1 = verify_condition_1(d, p, gb);
    const Condition2Report c2 = verify_condition_2(d, p, gb);
    std::vector<Condition3Entry> c3;
    for (int n = 0; n <= gb.complete_below; ++n)
        c3.push_back(verify_condition_3(d, p, gb, n));

    Json theorem_a = Json::object();
    theorem_a["condition_1"] = condition1_to_json(c1, *p.alphabet);
    theorem_a["condition_2"] = condition2_to_json(c2, *p.alphabet);
    theorem_a["condition_3"] = condition3_to_json(c3);
    Json c4 = Json::object();
    c4["gk_full"] = hilbert.n_i_count;
    c4["gk_full_certified"] = hilbert.certified_complete;
    c4["gk_subalgebra"] = hilbert.n_j_count;
    c4["gk_subalgebra_certified"] = sub_certified;
    c4["gamma_count"] = hilbert.gamma_count;
    c4["additive"] = hilbert.n_i_count == hilbert.n_j_count + hilbert.gamma_count;
    theorem_a["condition_4"] = c4;
    report["theorem_a"] = theorem_a;

    bool c3_ok = true;
    for (const auto& e : c3)
        if (!e.pass()) c3_ok = false;
    const bool consistent = hilbert.dims == hilbert.product_dims;
    const bool structure_ok = facts.obstructions_lyndon && facts.basis_matches_lyndon_products;
    const bool crosscheck_ok = sub_cmp.irreducible_lyndon_match && sub_cmp.obstructions_match &&
                          sub_cmp.basis_match;
    if (!c1.ok() || !c2.ok() || !c3_ok || !consistent || !structure_ok || !crosscheck_ok)
        result.exit_code = 1;
    if (result.exit_code != 0 || options.command == Command::pbw) return result;

    const TowerReport tower = build_tower(d, p, gb);
    report["tower"] = tower_section(tower, *p.alphabet);
    if (tower.failed)
        result.exit_code = 1;
    else if (!tower.certified || tower.partial)
        result.exit_code = 3;
    return result;
}

namespace {

std::string join_word(const Json& word) {
    if (word.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += "\xc2\xb7";
        s += word[i].get<std::string>();
    }
    return s;
}

std::string join_poly(const Json& poly) {
    if (poly.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) s += " + ";
        s += poly[i][0].get<std::string>();
        s += " ";
        s += join_word(poly[i][1]);
    }
    return s;
}

std::string join_tensor(const Json& tensor) {
    if (tensor.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < tensor.size(); ++i) {
        if (i) s += " + ";
        s += tensor[i][0].get<std::string>();
        s += " ";
        s += join_word(tensor[i][1]);
        s += "\xe2\x8a\x97";
        s += join_word(tensor[i][2]);
    }
    return s;
}

std::string join_words(const Json& words) {
    std::string s = "[";
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) s += ", ";
        s += join_word(words[i]);
    }
    return s + "]";
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    out << "input: " << report["input"]["file"].get<std::string>()
        << "  (max degree " << report["input"]["max_degree"].get<int>() << ")\n";
    out << "generator order:";
    for (const auto& name : report["input"]["generator_order"])
        out << " " << name.get<std::string>();
    out << "  subalgebra:";
    if (report["input"]["subalgebra"].empty()) out << " (none)";
    for (const auto& name : report["input"]["subalgebra"]) out << " " << name.get<std::string>();
    out << "\n";

    const auto& validation = report["validation"];
    out << "validation: " << (validation["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    for (const auto& v : validation["violations"])
        out << "  - " << v["where"].get<std::string>() << ": " << v["message"].get<std::string>()
            << "\n";

    if (report.contains("delta_check")) {
        const auto& delta = report["delta_check"];
        out << "delta check (degree " << delta["checked_degree"].get<int>()
            << "): " << (delta["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        for (const auto& v : delta["violations"]) {
            out << "  - " << v["kind"].get<std::string>() << " violation at index "
                << v["index"].get<int>() << ": residual " << join_tensor(v["residual"]) << "\n";
        }
        if (delta.contains("coassociativity"))
            out << "  coassociativity: "
                << (delta["coassociativity"]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }

    if (report.contains("groebner")) {
        const auto& gb = report["groebner"];
        out << "groebner: " << gb["elements"].size() << " elements, complete below "
            << gb["complete_below"].get<int>()
            << (gb["finite_certificate"].get<bool>() ? ", finite basis certified" : "") << "\n";
        out << "  obstructions: " << join_words(gb["obstructions"]) << "\n";
    }

    if (report.contains("pbw")) {
        const auto& pbw = report["pbw"];
        out << "pbw: N_I " << join_words(pbw["n_i"]) << "\n";
        out << "     N_J " << join_words(pbw["n_j"]) << "\n";
        out << "     Gamma " << join_words(pbw["gamma"]) << "\n";
        for (const auto& z : pbw["z"])
            out << "     z[" << join_word(z["gamma"]) << "] = " << join_poly(z["z"]) << "\n";
    }

    if (report.contains("hilbert")) {
        const auto& h = report["hilbert"];
        out << "hilbert dims:";
        for (const auto& v : h["dims"]) out << " " << v.get<long>();
        out << "  (consistent: " << (h["consistent"].get<bool>() ? "yes" : "NO") << ")\n";
        out << "  gk estimate " << h["gk_estimate"]["count"].get<long>()
            << (h["gk_estimate"]["certified"].get<bool>() ? " (certified)" : " (lower bound at truncation)")
            << "\n";
    }

    if (report.contains("theorem_a")) {
        const auto& ta = report["theorem_a"];
        out << "conditions: (1) " << (ta["condition_1"]["ok"].get<bool>() ? "pass" : "FAIL")
            << "  (2) " << (ta["condition_2"]["ok"].get<bool>() ? "pass" : "FAIL") << "  (3) "
            << (ta["condition_3"]["ok"].get<bool>() ? "pass" : "FAIL") << "\n";
        const auto& c4 = ta["condition_4"];
        out << "  gk: " << c4["gk_full"].get<long>() << " = " << c4["gk_subalgebra"].get<long>()
            << " + " << c4["gamma_count"].get<long>()
            << (c4["additive"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }

    if (report.contains("tower")) {
        const auto& t = report["tower"];
        out << "tower: " << t["step_count"].get<int>() << " steps"
            << (t["certified"].get<bool>() ? ", certified" : ", NOT certified at bound")
            << (t["partial"].get<bool>() ? ", partial" : "")
            << (t["failed"].get<bool>() ? ", FAILED" : "") << "\n";
        for (const auto& s : t["steps"]) {
            out << "  step " << join_word(s["gamma"]) << " (degree " << s["degree"].get<int>()
                << "), leibniz " << s["leibniz"].get<std::string>() << "\n";
            for (const auto& e : s["delta_table"]) {
                const auto& g = e["generator"];
                const std::string gname = g["kind"].get<std::string>() == "generator"
                                              ? g["name"].get<std::string>()
                                              : "z[" + join_word(g["gamma"]) + "]";
                out << "    delta(" << gname << ") = " << join_poly(e["value"]) << "  ["
                    << e["status"].get<std::string>() << "]\n";
            }
        }
    }
    return out.str();
}

}  // namespace lypbw
