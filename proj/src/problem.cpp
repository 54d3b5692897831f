// JSON problem parsing/serialization. Validation is strict: unknown keys are
// rejected so typos fail loudly, and isotropy failures name the offending
// generator pair.

#include "stabhom/problem.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "stabhom/errors.hpp"

namespace stabhom {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            ok = ok || it.key() == k;
        if (!ok)
            throw input_error(std::string(where) + ": unknown key \"" + it.key() + "\"");
    }
}

uint32_t parse_prime(const json& j) {
    if (!j.is_number_integer() || j.get<int64_t>() < 0)
        throw input_error("\"p\" must be a nonnegative integer");
    int64_t v = j.get<int64_t>();
    if (v > 0xffff)
        throw input_error("field modulus must satisfy 2 <= p < 2^16, got " + std::to_string(v));
    FieldPrime f(static_cast<uint32_t>(v)); // validates primality
    return f.p();
}

std::vector<PartyDecl> parse_parties(const json& j) {
    if (!j.is_array() || j.empty())
        throw input_error("\"parties\" must be a nonempty array");
    std::vector<PartyDecl> out;
    for (const json& pj : j) {
        if (!pj.is_object())
            throw input_error("party entries must be objects");
        require_keys(pj, "party", {"name", "qudits"});
        PartyDecl d;
        if (pj.contains("name")) {
            if (!pj["name"].is_string())
                throw input_error("party \"name\" must be a string");
            d.name = pj["name"].get<std::string>();
        } else {
            d.name = "q" + std::to_string(out.size());
        }
        if (pj.contains("qudits")) {
            if (!pj["qudits"].is_number_integer() || pj["qudits"].get<int64_t>() < 0 ||
                pj["qudits"].get<int64_t>() > (1 << 20))
                throw input_error("party \"qudits\" must be a small nonnegative integer");
            d.qudits = pj["qudits"].get<uint32_t>();
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<PartyDecl> default_parties(size_t n) {
    std::vector<PartyDecl> out;
    for (size_t i = 0; i < n; ++i)
        out.push_back({"q" + std::to_string(i), 1});
    return out;
}

void require_one_qudit_each(const std::vector<PartyDecl>& parties, const char* source) {
    for (const PartyDecl& d : parties)
        if (d.qudits != 1)
            throw input_error(std::string(source) + " sources take exactly one qudit per party; party \"" +
                              d.name + "\" has " + std::to_string(d.qudits));
}

Matrix parse_generator_rows(const json& j, size_t ambient, const FieldPrime& f) {
    if (!j.is_array())
        throw input_error("\"generators\" must be an array of rows");
    Matrix rows(j.size(), ambient);
    for (size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != ambient)
            throw input_error("generator row " + std::to_string(r) + " must have " +
                              std::to_string(ambient) + " entries");
        for (size_t c = 0; c < ambient; ++c) {
            if (!row[c].is_number_integer())
                throw input_error("generator entries must be integers");
            rows(r, c) = f.reduce(row[c].get<int64_t>());
        }
    }
    return rows;
}

Matrix parse_pauli_rows(const json& j, size_t parties) {
    if (!j.is_array())
        throw input_error("\"paulis\" must be an array of strings");
    Matrix rows(j.size(), 2 * parties);
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_string())
            throw input_error("\"paulis\" must be an array of strings");
        const std::string s = j[r].get<std::string>();
        if (s.size() != parties)
            throw input_error("pauli string " + std::to_string(r) + " has length " +
                              std::to_string(s.size()) + ", expected " + std::to_string(parties));
        for (size_t t = 0; t < parties; ++t) {
            switch (s[t]) {
            case 'I': break;
            case 'X': rows(r, 2 * t) = 1; break;
            case 'Z': rows(r, 2 * t + 1) = 1; break;
            case 'Y': rows(r, 2 * t) = 1; rows(r, 2 * t + 1) = 1; break;
            default:
                throw input_error(std::string("pauli strings use characters I, X, Z, Y; got '") +
                                  s[t] + "'");
            }
        }
    }
    return rows;
}

void validate_state(const Matrix& rows, const PartyStructure& ps) {
    const size_t n = ps.ambient_dim();
    if (2 * rows.rows() > n)
        throw input_error("too many generators: " + std::to_string(rows.rows()) +
                          " rows but the ambient dimension is only " + std::to_string(n));
    SymplecticForm form(ps);
    for (size_t i = 0; i < rows.rows(); ++i)
        for (size_t j = i + 1; j < rows.rows(); ++j) {
            uint32_t w = form.omega(rows.row(i), rows.row(j));
            if (w != 0)
                throw input_error("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are not orthogonal: omega = " + std::to_string(w));
        }
}

} // namespace

PartyStructure ProblemFile::structure() const {
    std::vector<uint32_t> counts;
    for (const PartyDecl& d : parties)
        counts.push_back(d.qudits);
    return PartyStructure(FieldPrime(p), std::move(counts));
}

ProblemFile parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw input_error("problem file must be a JSON object");
    require_keys(j, "problem", {"p", "parties", "graph", "paulis", "generators"});

    int sources = j.contains("graph") + j.contains("paulis") + j.contains("generators");
    if (sources != 1)
        throw input_error("exactly one of \"graph\", \"paulis\", \"generators\" must be present");

    ProblemFile pf;
    pf.p = j.contains("p") ? parse_prime(j["p"]) : 2;

    if (j.contains("paulis")) {
        pf.source = "paulis";
        if (pf.p != 2)
            throw input_error("\"paulis\" requires p = 2");
        const json& pj = j["paulis"];
        if (!pj.is_array() || pj.empty() || !pj[0].is_string())
            throw input_error("\"paulis\" must be a nonempty array of strings");
        size_t width = pj[0].get<std::string>().size();
        if (width == 0)
            throw input_error("pauli strings must be nonempty");
        pf.parties = j.contains("parties") ? parse_parties(j["parties"]) : default_parties(width);
        require_one_qudit_each(pf.parties, "\"paulis\"");
        if (pf.parties.size() != width)
            throw input_error("pauli strings have " + std::to_string(width) + " columns but " +
                              std::to_string(pf.parties.size()) + " parties are declared");
        PartyStructure ps = pf.structure();
        Matrix rows = parse_pauli_rows(pj, pf.parties.size());
        validate_state(rows, ps);
        pf.space = Subspace::from_rows(rows, ps.field());
        return pf;
    }

    if (!j.contains("parties"))
        throw input_error("\"parties\" is required for graph and generators sources");
    pf.parties = parse_parties(j["parties"]);
    PartyStructure ps = pf.structure();

    if (j.contains("graph")) {
        pf.source = "graph";
        const json& gj = j["graph"];
        if (!gj.is_object())
            throw input_error("\"graph\" must be an object");
        require_keys(gj, "graph", {"edges"});
        if (!gj.contains("edges") || !gj["edges"].is_array())
            throw input_error("\"graph\" needs an \"edges\" array");
        require_one_qudit_each(pf.parties, "\"graph\"");
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        const int64_t n = static_cast<int64_t>(pf.parties.size());
        for (const json& ej : gj["edges"]) {
            if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() ||
                !ej[1].is_number_integer())
                throw input_error("edges must be pairs of vertex indices");
            int64_t u = ej[0].get<int64_t>(), v = ej[1].get<int64_t>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw input_error("graph edge endpoint out of range: [" + std::to_string(u) +
                                  ", " + std::to_string(v) + "]");
            edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
        }
        Graph g = make_graph(pf.parties.size(), std::move(edges));
        pf.edges = g.edges;
        pf.space = graph_lagrangian(g, ps.field());
        return pf;
    }

    pf.source = "generators";
    Matrix rows = parse_generator_rows(j["generators"], ps.ambient_dim(), ps.field());
    validate_state(rows, ps);
    pf.space = Subspace::from_rows(rows, ps.field());
    return pf;
}

ProblemFile parse_problem_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

ProblemFile parse_problem(const std::string& path) {
    if (path == "-")
        return parse_problem_stream(std::cin);
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    return parse_problem_stream(in);
}

std::string to_json_text(const ProblemFile& pf) {
    json j;
    j["p"] = pf.p;
    json parties = json::array();
    for (const PartyDecl& d : pf.parties)
        parties.push_back({{"name", d.name}, {"qudits", d.qudits}});
    j["parties"] = parties;
    if (pf.source == "graph") {
        json edges = json::array();
        for (auto [u, v] : pf.edges)
            edges.push_back({u, v});
        j["graph"] = {{"edges", edges}};
    } else {
        json rows = json::array();
        const Matrix& b = pf.space.basis();
        for (size_t r = 0; r < b.rows(); ++r)
            rows.push_back(b.row(r));
        j["generators"] = rows;
    }
    return j.dump(2) + "\n";
}

ProblemFile make_problem(const Subspace& space, const PartyStructure& ps,
                         std::vector<std::string> names) {
    if (names.size() != ps.num_parties())
        throw precondition_error("make_problem: name count does not match the party count");
    ProblemFile pf;
    pf.p = ps.field().p();
    for (size_t i = 0; i < names.size(); ++i)
        pf.parties.push_back({std::move(names[i]), ps.qudits(i)});
    pf.source = "generators";
    pf.space = space;
    return pf;
}

} // namespace stabhom
