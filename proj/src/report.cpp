// Report serialization, table renderers, GHZ transcript assembly, and the
// threaded golden-row batch.

#include "stabhom/report.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stabhom/errors.hpp"
#include "stabhom/structure.hpp"

namespace stabhom {

using nlohmann::json;

namespace {

std::string row_to_string(const std::vector<size_t>& row) {
    std::string s = "(";
    for (size_t j = 0; j < row.size(); ++j)
        s += (j ? ", " : "") + std::to_string(row[j]);
    return s + ")";
}

json table_to_json(const InvariantTable& t) {
    return {{"parties", t.parties}, {"rows", t.rows}};
}

InvariantTable table_from_json(const json& j) {
    InvariantTable t;
    t.parties = j.at("parties").get<size_t>();
    t.rows = j.at("rows").get<std::vector<std::vector<size_t>>>();
    return t;
}

json duality_to_json(const DualityReport& d) {
    json degrees = json::array();
    for (const auto& g : d.degrees)
        degrees.push_back({{"degree", g.degree},
                           {"left_dim", g.left_dim},
                           {"right_dim", g.right_dim},
                           {"rank", g.rank}});
    return {{"perfect", d.perfect}, {"degrees", degrees}};
}

DualityReport duality_from_json(const json& j) {
    DualityReport d;
    d.perfect = j.at("perfect").get<bool>();
    for (const json& gj : j.at("degrees"))
        d.degrees.push_back({gj.at("degree").get<size_t>(), gj.at("left_dim").get<size_t>(),
                             gj.at("right_dim").get<size_t>(), gj.at("rank").get<size_t>()});
    return d;
}

json ghz_to_json(const GhzReport& g) {
    return {{"count", g.count},
            {"transcript", g.transcript},
            {"remainder_dim", g.remainder_dim},
            {"remainder_row", g.remainder_row}};
}

GhzReport ghz_from_json(const json& j) {
    GhzReport g;
    g.count = j.at("count").get<size_t>();
    g.transcript = j.at("transcript").get<std::vector<std::string>>();
    g.remainder_dim = j.at("remainder_dim").get<size_t>();
    g.remainder_row = j.at("remainder_row").get<std::vector<size_t>>();
    return g;
}

} // namespace

std::string report_to_json_text(const Report& r) {
    json j;
    j["input"] = json::parse(r.input_json);
    j["table"] = table_to_json(r.table);
    if (r.duality)
        j["duality"] = duality_to_json(*r.duality);
    if (r.ghz)
        j["ghz"] = ghz_to_json(*r.ghz);
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

Report report_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid report JSON: ") + e.what());
    }
    Report r;
    r.input_json = j.at("input").dump(2) + "\n";
    r.table = table_from_json(j.at("table"));
    if (j.contains("duality"))
        r.duality = duality_from_json(j["duality"]);
    if (j.contains("ghz"))
        r.ghz = ghz_from_json(j["ghz"]);
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
}

InvariantTable invariant_table_limited(const Subspace& l, const PartyStructure& ps, size_t kmax) {
    InvariantTable t;
    t.parties = ps.num_parties();
    SectionCache sections(l, ps);
    kmax = std::min(kmax, l.dim());
    for (size_t k = 0; k <= kmax; ++k)
        t.rows.push_back(local_invariants(sections, k));
    return t;
}

GhzReport make_ghz_report(const Subspace& l, const PartyStructure& ps) {
    Decomposition d = try_decompose(l, ps);
    GhzReport g;
    g.count = d.ghz;
    for (auto [party, dim] : d.local)
        g.transcript.push_back("party " + std::to_string(party) + ": split off local dimension " +
                               std::to_string(dim));
    for (size_t i = 0; i < d.ghz; ++i)
        g.transcript.push_back("GHZ summand " + std::to_string(i + 1) + " over " +
                               std::to_string(d.structure.num_parties()) + " parties");
    g.remainder_dim = d.remainder.dim();
    g.remainder_row = local_invariants(d.remainder, d.structure, 1);
    return g;
}

std::string render_table_text(const InvariantTable& t) {
    size_t width = 1;
    for (const auto& row : t.rows)
        for (size_t h : row)
            width = std::max(width, std::to_string(h).size());
    width = std::max(width, std::to_string(t.parties).size());
    std::ostringstream out;
    auto cell = [&](const std::string& s) {
        out << std::string(width + 1 - std::min(s.size(), width + 1), ' ') << s;
    };
    out << "k\\j";
    for (size_t j = 0; j <= t.parties; ++j)
        cell(std::to_string(j));
    out << "\n";
    for (size_t k = 1; k < t.rows.size(); ++k) {
        out << std::string(3 - std::min<size_t>(std::to_string(k).size(), 3), ' ')
            << std::to_string(k);
        for (size_t h : t.rows[k])
            cell(std::to_string(h));
        out << "\n";
    }
    return out.str();
}

std::string render_table_csv(const InvariantTable& t) {
    std::string out = "k,j,h\n";
    for (size_t k = 0; k < t.rows.size(); ++k)
        for (size_t j = 0; j < t.rows[k].size(); ++j)
            out += std::to_string(k) + "," + std::to_string(j) + "," + std::to_string(t.rows[k][j]) +
                   "\n";
    return out;
}

std::vector<GoldenEntry> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open golden file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid golden JSON: ") + e.what());
    }
    if (!j.is_array())
        throw input_error("golden file must be a JSON array");
    std::vector<GoldenEntry> out;
    for (const json& ej : j) {
        GoldenEntry e;
        e.name = ej.at("name").get<std::string>();
        e.table = ej.value("table", std::string("I"));
        e.p = ej.value("p", 2u);
        e.qudits = ej.at("qudits").get<std::vector<uint32_t>>();
        for (const json& edge : ej.at("edges"))
            e.edges.emplace_back(edge.at(0).get<uint32_t>(), edge.at(1).get<uint32_t>());
        for (auto it = ej.at("rows").begin(); it != ej.at("rows").end(); ++it)
            e.rows[std::stoul(it.key())] = it.value().get<std::vector<size_t>>();
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

GoldenResult evaluate_entry(const GoldenEntry& e) {
    GoldenResult res;
    res.name = e.name;
    try {
        FieldPrime f(e.p);
        for (uint32_t q : e.qudits)
            if (q != 1)
                throw input_error("golden entries are graph states: one qudit per party");
        Graph g = make_graph(e.qudits.size(), e.edges);
        Subspace l = graph_lagrangian(g, f);
        PartyStructure ps(f, e.qudits);
        SectionCache sections(l, ps);
        for (const auto& [k, want] : e.rows) {
            std::vector<size_t> got = local_invariants(sections, k);
            if (got != want) {
                res.detail = "k=" + std::to_string(k) + ": got " + row_to_string(got) + ", want " +
                             row_to_string(want);
                return res;
            }
        }
        res.ok = true;
    } catch (const std::exception& ex) {
        res.detail = ex.what();
    }
    return res;
}

} // namespace

std::vector<GoldenResult> run_golden_batch(const std::vector<GoldenEntry>& entries, int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("STABHOM_THREADS"))
            threads = std::atoi(env);
        if (threads <= 0)
            threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0)
            threads = 1;
    }
    threads = std::min<int>(threads, entries.empty() ? 1 : static_cast<int>(entries.size()));

    std::vector<GoldenResult> results(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1))
            results[i] = evaluate_entry(entries[i]);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return results;
}

} // namespace stabhom
