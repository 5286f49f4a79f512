#include "gerst/hopf_io.hpp"

#include <fstream>
#include <sstream>

namespace gerst {

namespace {

json field_to_json(const FieldSpec& f) {
    json j;
    j["kind"] = f.is_prime() ? "prime" : "rational";
    if (f.is_prime()) j["p"] = f.p();
    return j;
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("field: expected an object with a 'kind' string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind != "prime") throw ParseError("field: unknown kind '" + kind + "'");
    if (!j.contains("p") || !j["p"].is_number_unsigned())
        throw ParseError("field: prime kind needs a positive integer 'p'");
    return FieldSpec::prime(j["p"].get<std::uint32_t>());
}

json scalars_to_json(const Vec& v) {
    json arr = json::array();
    for (const Scalar& s : v) arr.push_back(s.to_string());
    return arr;
}

Vec scalars_from_json(const json& arr, const FieldSpec& f, const std::string& key,
                      std::size_t expected) {
    if (!arr.is_array())
        throw ParseError("key '" + key + "' must be an array of scalar strings");
    if (arr.size() != expected)
        throw ParseError("key '" + key + "' has length " + std::to_string(arr.size()) +
                         ", expected " + std::to_string(expected));
    Vec v;
    v.reserve(expected);
    for (const auto& e : arr) {
        if (!e.is_string()) throw ParseError("key '" + key + "' holds a non-string scalar");
        v.push_back(Scalar::parse(f, e.get<std::string>()));
    }
    return v;
}

}  // namespace

json hopf_to_json(const HopfAlgebra& h, const std::optional<std::string>& provenance) {
    json j;
    j["name"] = h.name;
    j["field"] = field_to_json(h.field);
    j["dim"] = h.dim;
    j["unit"] = scalars_to_json(h.unit);
    j["mult"] = scalars_to_json(h.mult);
    j["counit"] = scalars_to_json(h.counit);
    j["comult"] = scalars_to_json(h.comult);
    Vec anti;
    anti.reserve(h.dim * h.dim);
    for (std::size_t r = 0; r < h.dim; ++r)
        for (std::size_t c = 0; c < h.dim; ++c) anti.push_back(h.antipode.at(r, c));
    j["antipode"] = scalars_to_json(anti);
    if (provenance) j["provenance"] = *provenance;
    return j;
}

HopfPtr hopf_from_json(const json& j, bool validate) {
    if (!j.is_object()) throw ParseError("Hopf file: top level must be an object");
    for (const char* key : {"name", "field", "dim", "unit", "mult", "counit", "comult",
                            "antipode"})
        if (!j.contains(key)) throw ParseError(std::string("Hopf file: missing key '") + key + "'");
    if (!j["name"].is_string()) throw ParseError("key 'name' must be a string");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("key 'dim' must be a positive integer");
    FieldSpec f = field_from_json(j["field"]);
    std::size_t d = j["dim"].get<std::size_t>();
    Vec unit = scalars_from_json(j["unit"], f, "unit", d);
    Vec mult = scalars_from_json(j["mult"], f, "mult", d * d * d);
    Vec counit = scalars_from_json(j["counit"], f, "counit", d);
    Vec comult = scalars_from_json(j["comult"], f, "comult", d * d * d);
    Vec anti = scalars_from_json(j["antipode"], f, "antipode", d * d);
    Matrix s(f, d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) s.at(r, c) = anti[r * d + c];
    return make_hopf(f, d, j["name"].get<std::string>(), std::move(mult), std::move(unit),
                     std::move(comult), std::move(counit), std::move(s), validate);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_hopf(const HopfAlgebra& h, const std::string& path,
                const std::optional<std::string>& provenance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << canonical_dump(hopf_to_json(h, provenance));
    if (!out) throw Error("write to '" + path + "' failed");
}

HopfPtr parse_hopf(const std::string& path, bool validate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return hopf_from_json(j, validate);
}

json to_json(const AxiomReport& r) {
    json j;
    j["report"] = "hopf-axioms";
    j["algebra"] = r.algebra;
    j["pass"] = r.pass;
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json e;
        e["axiom"] = a.axiom;
        e["pass"] = a.pass;
        if (!a.pass) e["witness"] = a.witness;
        axioms.push_back(e);
    }
    j["axioms"] = axioms;
    return j;
}

json to_json(const CheckReport& r) {
    json j;
    j["report"] = "check";
    j["check"] = r.check;
    j["algebra"] = r.algebra;
    j["field"] = field_to_json(r.field);
    json p;
    if (r.params.max_degree) p["max_degree"] = *r.params.max_degree;
    if (r.params.p) p["p"] = *r.params.p;
    if (r.params.q) p["q"] = *r.params.q;
    p["trials"] = r.params.trials;
    p["seed"] = r.params.seed;
    j["params"] = p;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["mode"] = r.mode;
    if (r.counterexample) {
        json c;
        c["identity"] = r.counterexample->identity;
        c["basis_tuple"] = r.counterexample->basis_tuple;
        c["lhs"] = r.counterexample->lhs;
        c["rhs"] = r.counterexample->rhs;
        c["inputs"] = r.counterexample->inputs;
        j["counterexample"] = c;
    }
    j["notes"] = r.notes;
    return j;
}

json to_json(const CohomologyReport& r) {
    json j;
    j["report"] = "cohomology";
    j["algebra"] = r.algebra;
    j["field"] = field_to_json(r.field);
    j["coefficients"] = coefficients_name(r.coeff);
    j["max_degree"] = r.max_degree;
    json degs = json::array();
    for (const auto& d : r.degrees) {
        json e;
        e["degree"] = d.degree;
        e["dim_cochains"] = d.dim_cochains;
        e["dim_cocycles"] = d.dim_cocycles;
        e["dim_coboundaries"] = d.dim_coboundaries;
        e["dim_cohomology"] = d.dim_cohomology;
        json basis = json::array();
        for (const auto& v : d.cocycle_basis) {
            json vec = json::array();
            for (const auto& [idx, val] : v) vec.push_back(json::array({idx, val.to_string()}));
            basis.push_back(vec);
        }
        e["cocycle_basis"] = basis;
        degs.push_back(e);
    }
    j["degrees"] = degs;
    return j;
}

std::string render_text(const AxiomReport& r) {
    std::ostringstream o;
    o << "hopf axiom report for " << r.algebra << "\n";
    for (const auto& a : r.axioms) {
        o << "  " << a.axiom;
        for (std::size_t i = a.axiom.size(); i < 18; ++i) o << ' ';
        o << (a.pass ? "pass" : "FAIL");
        if (!a.pass) o << "  witness " << a.witness;
        o << "\n";
    }
    o << "verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
    return o.str();
}

std::string render_text(const CheckReport& r) {
    std::ostringstream o;
    o << "check:    " << r.check << "\n";
    o << "algebra:  " << r.algebra << " over " << r.field.to_string() << "\n";
    o << "params:   ";
    if (r.params.max_degree) o << "max_degree=" << *r.params.max_degree << " ";
    if (r.params.p) o << "p=" << *r.params.p << " ";
    if (r.params.q) o << "q=" << *r.params.q << " ";
    o << "trials=" << r.params.trials << " seed=" << r.params.seed << "\n";
    for (const auto& n : r.notes) o << "note:     " << n << "\n";
    o << "verdict:  " << (r.pass ? "PASS (" + r.mode + ")" : "FAIL") << "\n";
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        o << "counterexample:\n";
        o << "  identity:    " << c.identity << "\n";
        o << "  basis tuple: " << c.basis_tuple << "\n";
        o << "  lhs value:   " << c.lhs << "\n";
        o << "  rhs value:   " << c.rhs << "\n";
        for (const auto& in : c.inputs) o << "  input:       " << in << "\n";
    }
    return o.str();
}

std::string render_text(const CohomologyReport& r) {
    std::ostringstream o;
    o << "cohomology of " << r.algebra << " over " << r.field.to_string() << ", "
      << coefficients_name(r.coeff) << " coefficients, degrees 0.." << r.max_degree << "\n";
    auto cell = [&](const std::string& s, std::size_t w) {
        for (std::size_t i = s.size(); i < w; ++i) o << ' ';
        o << s;
    };
    o << "  n";
    cell("dim C^n", 12);
    cell("cocycles", 12);
    cell("coboundaries", 15);
    cell("dim H^n", 12);
    o << "\n";
    for (const auto& d : r.degrees) {
        o << "  " << d.degree;
        cell(std::to_string(d.dim_cochains), 12);
        cell(std::to_string(d.dim_cocycles), 12);
        cell(std::to_string(d.dim_coboundaries), 15);
        cell(std::to_string(d.dim_cohomology), 12);
        o << "\n";
    }
    return o.str();
}

}  // namespace gerst
