#include "dihedra/schema.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dihedra {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("schema error at " + where + ": " + what);
}

std::size_t basis_index(const InvolutiveSpace& v, const std::string& name,
                        const std::string& where) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v.space.names[i] == name) return i;
    fail(where, "unknown basis name \"" + name + "\"");
}

// "eps", "eps^2", "eps1*eps2^2" against the ring's variables.
std::size_t parse_monomial(const NilpotentRing& ring, const std::string& text,
                           const std::string& where) {
    std::vector<unsigned> e(ring.vars.size(), 0);
    if (text != "1") {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, '*')) {
            auto caret = part.find('^');
            std::string var = part.substr(0, caret);
            unsigned k = 1;
            if (caret != std::string::npos) k = static_cast<unsigned>(std::stoul(part.substr(caret + 1)));
            bool found = false;
            for (std::size_t i = 0; i < ring.vars.size(); ++i)
                if (ring.vars[i] == var) {
                    e[i] += k;
                    if (e[i] >= ring.orders[i]) fail(where, "monomial " + text + " vanishes in " + ring.str());
                    found = true;
                }
            if (!found) fail(where, "unknown ring variable \"" + var + "\"");
        }
    }
    return ring.index(e);
}

}  // namespace

Scalar parse_scalar_json(const json& v, const FieldSpec& f) {
    if (v.is_string()) return Scalar::parse(v.get<std::string>(), f);
    if (v.is_number_integer()) return Scalar::in_field(v.get<long>(), f);
    fail("scalar", "expected an integer or a \"p/q\" string, got " + v.dump());
}

Matrix parse_matrix_json(const json& v, const FieldSpec& f) {
    if (!v.is_array()) fail("matrix", "expected a nested array");
    std::size_t rows = v.size();
    std::size_t cols = rows == 0 ? 0 : v[0].size();
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols) fail("matrix", "ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parse_scalar_json(v[i][j], f);
    }
    return m;
}

namespace {

// Entry lists {generator, word, coeff} -> dual components per weight.
std::map<std::size_t, Matrix> parse_dual_components(const json& comps, const InvolutiveSpace& v,
                                                    const LetterSpace& letters, std::size_t trunc,
                                                    const FieldSpec& f) {
    std::map<std::size_t, Matrix> out;
    if (!comps.is_array()) fail("structure.components", "expected an array of entries");
    for (const auto& e : comps) {
        std::string where = "structure.components";
        if (!e.contains("generator") || !e.contains("word") || !e.contains("coeff"))
            fail(where, "entry needs generator, word, coeff");
        std::size_t j = basis_index(v, e["generator"].get<std::string>(), where);
        Word word;
        for (const auto& n : e["word"]) word.push_back(basis_index(v, n.get<std::string>(), where));
        std::size_t n = word.size();
        if (n > trunc) fail(where, "entry weight exceeds the truncation");
        WordSpace ws = letters.words(n);
        auto it = out.find(n);
        if (it == out.end())
            it = out.emplace(n, Matrix(ws.size(), letters.dim(), f)).first;
        it->second.at(ws.index(word), j) += parse_scalar_json(e["coeff"], f);
    }
    return out;
}

// Entry lists on the operation side {args, result:[{basis,coeff}]}; weight =
// number of arguments. Transported to the dual side with the fixed sign
// convention, so files can pin either presentation.
std::map<std::size_t, Matrix> parse_hat_components(const json& ops, const InvolutiveSpace& v,
                                                   std::size_t trunc, const FieldSpec& f) {
    std::map<std::size_t, Matrix> hat;  // weight -> dim x dim^n
    for (const auto& e : ops) {
        std::string where = "structure.operations";
        if (!e.contains("args") || !e.contains("result")) fail(where, "entry needs args, result");
        Word word;
        for (const auto& n : e["args"]) word.push_back(basis_index(v, n.get<std::string>(), where));
        std::size_t n = word.size();
        if (n == 0) fail(where, "operations need at least one argument");
        if (n > trunc) continue;
        WordSpace ws{v.dim(), n};
        auto it = hat.find(n);
        if (it == hat.end()) it = hat.emplace(n, Matrix(v.dim(), ws.size(), f)).first;
        for (const auto& r : e["result"]) {
            std::size_t b = basis_index(v, r["basis"].get<std::string>(), where);
            it->second.at(b, ws.index(word)) += parse_scalar_json(r["coeff"], f);
        }
    }
    std::map<std::size_t, Matrix> out;
    for (const auto& [n, m] : hat) out[n] = hat_untransport(v.space.degrees, m, n, 1);
    return out;
}

std::map<std::size_t, Derivation> parse_deriv_terms(const json& arr, const AlgebraDescription& d,
                                                    const LetterSpace& letters, int degree,
                                                    const std::string& where) {
    std::map<std::size_t, Derivation> out;
    for (const auto& e : arr) {
        if (!e.contains("monomial")) fail(where, "entry needs a monomial");
        std::size_t mono = parse_monomial(*d.ring, e["monomial"].get<std::string>(), where);
        std::size_t j = basis_index(d.space, e["generator"].get<std::string>(), where);
        Word word;
        for (const auto& n : e["word"]) word.push_back(basis_index(d.space, n.get<std::string>(), where));
        std::size_t n = word.size();
        if (n > d.truncation) fail(where, "entry weight exceeds the truncation");
        auto it = out.find(mono);
        if (it == out.end())
            it = out.emplace(mono, Derivation::zero(letters, degree, d.truncation)).first;
        WordSpace ws = letters.words(n);
        it->second.comp[n].at(ws.index(word), j) += parse_scalar_json(e["coeff"], d.field);
    }
    for (auto& [mono, der] : out) der.validate_homogeneous(letters);
    return out;
}

}  // namespace

AlgebraDescription parse_description(const json& doc) {
    AlgebraDescription d;
    d.field = FieldSpec::parse(doc.value("field", "Q"));

    if (!doc.contains("basis") || !doc["basis"].is_array()) fail("basis", "missing basis array");
    std::vector<std::pair<std::string, int>> basis;
    for (const auto& b : doc["basis"])
        basis.emplace_back(b.at("name").get<std::string>(), b.at("degree").get<int>());

    std::optional<Matrix> invol;
    if (doc.contains("involution")) invol = parse_matrix_json(doc["involution"], d.field);

    std::optional<BilinearForm> form;
    if (doc.contains("form")) {
        BilinearForm f;
        f.degree = doc["form"].at("degree").get<int>();
        f.gram = parse_matrix_json(doc["form"].at("gram"), d.field);
        std::string sym = doc["form"].value("symmetry", "graded");
        if (sym == "graded")
            f.symmetry = FormSymmetry::Graded;
        else if (sym == "strict")
            f.symmetry = FormSymmetry::Strict;
        else
            fail("form.symmetry", "expected \"graded\" or \"strict\"");
        form = std::move(f);
    }
    d.space = make_involutive_space(std::move(basis), std::move(invol), std::move(form), d.field);

    d.involutive = doc.contains("involution");
    d.cyclic = doc.contains("form");
    if (doc.contains("flags")) {
        d.involutive = doc["flags"].value("involutive", d.involutive);
        d.cyclic = doc["flags"].value("cyclic", d.cyclic);
    }

    d.truncation = doc.value("truncation", 5u);
    d.degree_lo = 0;
    d.degree_hi = static_cast<int>(d.truncation);
    if (doc.contains("degrees")) {
        if (!doc["degrees"].is_array() || doc["degrees"].size() != 2)
            fail("degrees", "expected [lo, hi]");
        d.degree_lo = doc["degrees"][0].get<int>();
        d.degree_hi = doc["degrees"][1].get<int>();
        if (d.degree_lo > d.degree_hi) fail("degrees", "lo > hi");
    }

    LetterSpace letters = letter_space(d.space);

    if (!doc.contains("structure")) fail("structure", "missing structure object");
    const json& st = doc["structure"];
    d.structure_mode = st.value("mode", "dual");
    if (d.structure_mode == "dual") {
        d.components = parse_dual_components(st.value("components", json::array()), d.space,
                                             letters, d.truncation, d.field);
    } else if (d.structure_mode == "dga") {
        std::size_t dim = d.space.dim();
        Matrix mult(dim, dim * dim, d.field);
        for (const auto& e : st.value("multiplication", json::array())) {
            std::size_t i = basis_index(d.space, e.at("left").get<std::string>(), "multiplication");
            std::size_t j = basis_index(d.space, e.at("right").get<std::string>(), "multiplication");
            for (const auto& r : e.at("result"))
                mult.at(basis_index(d.space, r.at("basis").get<std::string>(), "multiplication"),
                        i * dim + j) += parse_scalar_json(r.at("coeff"), d.field);
        }
        Matrix diff(dim, dim, d.field);
        for (const auto& e : st.value("differential", json::array())) {
            std::size_t i = basis_index(d.space, e.at("from").get<std::string>(), "differential");
            for (const auto& r : e.at("result"))
                diff.at(basis_index(d.space, r.at("basis").get<std::string>(), "differential"), i) +=
                    parse_scalar_json(r.at("coeff"), d.field);
        }
        // Degree screening happens in from_dga; reuse it to build components.
        AInftyStructure s = from_dga(d.space, d.truncation, mult, diff);
        for (std::size_t n = 0; n <= d.truncation; ++n)
            if (!s.m.comp[n].is_zero()) d.components[n] = s.m.comp[n];
    } else if (d.structure_mode == "hat") {
        d.components = parse_hat_components(st.value("operations", json::array()), d.space,
                                            d.truncation, d.field);
    } else {
        fail("structure.mode", "expected dual, dga or hat");
    }

    if (doc.contains("deformation")) {
        const json& def = doc["deformation"];
        if (def.contains("ring")) d.ring = NilpotentRing::parse(def["ring"].get<std::string>());
        if (!d.ring) d.ring = NilpotentRing::single(2);
        if (def.contains("eta"))
            d.eta_terms = parse_deriv_terms(def["eta"], d, letters, 1, "deformation.eta");
        if (def.contains("y"))
            d.y_terms = parse_deriv_terms(def["y"], d, letters, 0, "deformation.y");
    }
    return d;
}

AlgebraDescription parse_description_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    return parse_description(doc);
}

AlgebraDescription parse_description_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_description_text(ss.str());
}

AInftyStructure AlgebraDescription::structure(std::optional<std::size_t> trunc_override) const {
    std::size_t n = trunc_override.value_or(truncation);
    std::map<std::size_t, Matrix> comps;
    LetterSpace letters = letter_space(space);
    for (const auto& [w, m] : components) {
        if (w <= n) comps[w] = m;
    }
    AInftyStructure s = make_structure(space, n, comps, involutive, cyclic && space.form.has_value());
    return s;
}

}  // namespace dihedra
