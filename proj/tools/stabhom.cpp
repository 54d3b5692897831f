// stabhom: command-line driver. Subcommands either analyze a state
// (invariants, duality, ghz, oracle) or derive a new one and emit it as
// problem JSON for piping (coarsen, discard, product, family). Exit codes:
// 0 success, 1 failed check (golden diff, oracle disagreement), 2 bad input,
// 3 violated precondition.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabhom/cech.hpp"
#include "stabhom/duality.hpp"
#include "stabhom/errors.hpp"
#include "stabhom/problem.hpp"
#include "stabhom/report.hpp"
#include "stabhom/simplicial.hpp"
#include "stabhom/structure.hpp"
#include "stabhom/symplectic.hpp"

namespace {

using namespace stabhom;

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<size_t> parse_index_list(const std::string& s, const char* what) {
    std::vector<size_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0)
                throw std::invalid_argument(item);
            out.push_back(static_cast<size_t>(v));
        } catch (const std::exception&) {
            throw input_error(std::string(what) + ": expected a comma-separated list of " +
                              "nonnegative integers, got \"" + s + "\"");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::string row_text(const std::vector<size_t>& row) {
    std::string s = "(";
    for (size_t j = 0; j < row.size(); ++j)
        s += (j ? ", " : "") + std::to_string(row[j]);
    return s + ")";
}

void print_header(const ProblemFile& pf) {
    std::cout << "p = " << pf.p << ", parties:";
    for (const PartyDecl& d : pf.parties)
        std::cout << " " << d.name << "(" << d.qudits << ")";
    std::cout << ", dim L = " << pf.space.dim() << "\n";
}

std::string default_golden_path() {
    if (const char* src = std::getenv("STABHOM_SRC"))
        return std::string(src) + "/tests/golden/named_rows.json";
    return "tests/golden/named_rows.json";
}

int run_golden_diff(const std::string& path, int threads) {
    std::vector<GoldenEntry> entries = load_golden(path);
    std::vector<GoldenResult> results = run_golden_batch(entries, threads);
    size_t ok = 0;
    for (const GoldenResult& r : results) {
        if (r.ok) {
            ++ok;
            std::cout << "ok   " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << ok << "/" << results.size() << " rows match\n";
    return ok == results.size() ? 0 : 1;
}

int run_invariants(const std::string& file, int64_t kmax, const std::string& format) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    auto t0 = std::chrono::steady_clock::now();
    size_t eff = kmax < 0 ? pf.space.dim() : static_cast<size_t>(kmax);
    InvariantTable table = invariant_table_limited(pf.space, ps, eff);
    if (format == "csv") {
        std::cout << render_table_csv(table);
    } else if (format == "json") {
        Report r{to_json_text(pf), table, std::nullopt, std::nullopt, ms_since(t0)};
        std::cout << report_to_json_text(r);
    } else {
        print_header(pf);
        std::cout << render_table_text(table);
    }
    return 0;
}

int run_duality(const std::string& file, const std::string& format) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    auto t0 = std::chrono::steady_clock::now();
    DualityReport d = check_perfect(pf.space, ps);
    InvariantTable table = invariant_table_limited(pf.space, ps, 1);
    if (format == "json") {
        Report r{to_json_text(pf), table, d, std::nullopt, ms_since(t0)};
        std::cout << report_to_json_text(r);
        return 0;
    }
    print_header(pf);
    for (const auto& g : d.degrees)
        std::cout << "degree " << g.degree << " <-> " << (ps.num_parties() + 2 - g.degree)
                  << ": " << g.left_dim << " x " << g.right_dim << ", rank " << g.rank << "\n";
    std::cout << "pairing: " << (d.perfect ? "perfect" : "NOT perfect") << "\n";
    return 0;
}

int run_ghz(const std::string& file, const std::string& format) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    auto t0 = std::chrono::steady_clock::now();
    GhzReport g = make_ghz_report(pf.space, ps);
    InvariantTable table = invariant_table_limited(pf.space, ps, 1);
    if (format == "json") {
        Report r{to_json_text(pf), table, std::nullopt, g, ms_since(t0)};
        std::cout << report_to_json_text(r);
        return 0;
    }
    print_header(pf);
    for (const std::string& line : g.transcript)
        std::cout << line << "\n";
    std::cout << "count: " << g.count << "\n";
    std::cout << "remainder: dimension " << g.remainder_dim << ", h^1 row "
              << row_text(g.remainder_row) << "\n";
    return 0;
}

int run_coarsen(const std::string& file, const std::string& map, int64_t target) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    std::vector<size_t> phi = parse_index_list(map, "--map");
    if (phi.size() != ps.num_parties())
        throw input_error("--map needs one target per party: " +
                          std::to_string(ps.num_parties()) + " entries, got " +
                          std::to_string(phi.size()));
    size_t coarse = 0;
    for (size_t q : phi)
        coarse = std::max(coarse, q + 1);
    if (target >= 0) {
        if (static_cast<size_t>(target) < coarse)
            throw input_error("--parties is smaller than the largest --map target");
        coarse = static_cast<size_t>(target);
    }
    auto [space, cps] = coarsen(pf.space, ps, phi, coarse);
    std::vector<std::string> names(coarse);
    for (size_t p = 0; p < phi.size(); ++p)
        names[phi[p]] += (names[phi[p]].empty() ? "" : "+") + pf.parties[p].name;
    for (size_t q = 0; q < coarse; ++q)
        if (names[q].empty())
            names[q] = "p" + std::to_string(q);
    std::cout << to_json_text(make_problem(space, cps, std::move(names)));
    return 0;
}

int run_discard(const std::string& file, const std::string& parties) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    PartyMask mask = 0;
    for (size_t p : parse_index_list(parties, "--parties")) {
        if (p >= ps.num_parties())
            throw input_error("--parties: index " + std::to_string(p) + " is out of range");
        mask |= PartyMask(1) << p;
    }
    auto [space, dps] = discard(pf.space, ps, mask);
    std::vector<std::string> names;
    for (size_t p = 0; p < ps.num_parties(); ++p)
        if (!(mask >> p & 1))
            names.push_back(pf.parties[p].name);
    std::cout << to_json_text(make_problem(space, dps, std::move(names)));
    return 0;
}

int run_product(const std::string& file_a, const std::string& file_b, bool internal,
                bool external) {
    if (internal == external)
        throw input_error("choose exactly one of --internal / --external");
    ProblemFile a = parse_problem(file_a);
    ProblemFile b = parse_problem(file_b);
    if (a.p != b.p)
        throw input_error("operands live over different fields: p = " + std::to_string(a.p) +
                          " vs " + std::to_string(b.p));
    std::vector<std::string> names;
    if (internal) {
        if (a.parties.size() != b.parties.size())
            throw input_error("--internal needs the same party count on both sides");
        for (size_t p = 0; p < a.parties.size(); ++p)
            names.push_back(a.parties[p].name);
        auto [space, sps] = internal_sum(a.space, a.structure(), b.space, b.structure());
        std::cout << to_json_text(make_problem(space, sps, std::move(names)));
    } else {
        for (const PartyDecl& d : a.parties)
            names.push_back(d.name);
        for (const PartyDecl& d : b.parties)
            names.push_back(d.name);
        auto [space, sps] = external_sum(a.space, a.structure(), b.space, b.structure());
        std::cout << to_json_text(make_problem(space, sps, std::move(names)));
    }
    return 0;
}

int run_family(const std::string& name, size_t n, uint32_t p) {
    Graph g = family(name, n);
    FieldPrime f(p);
    ProblemFile pf;
    pf.p = p;
    for (size_t v = 0; v < g.n; ++v)
        pf.parties.push_back({"v" + std::to_string(v), 1});
    pf.source = "graph";
    pf.edges = g.edges;
    pf.space = graph_lagrangian(g, f);
    std::cout << to_json_text(pf);
    return 0;
}

int run_oracle(const std::string& file, size_t trials, uint64_t seed) {
    ProblemFile pf = parse_problem(file);
    PartyStructure ps = pf.structure();
    const Subspace& l = pf.space;
    if (l.dim() == 0)
        throw precondition_error("oracle needs a state with at least one generator");
    const FieldPrime& f = ps.field();
    SymplecticForm form(ps);
    std::mt19937_64 rng(seed);
    size_t ok = 0;
    for (size_t t = 0; t < trials; ++t) {
        Matrix functional(1, l.dim());
        bool nonzero = false;
        while (!nonzero)
            for (size_t j = 0; j < l.dim(); ++j) {
                functional(0, j) = static_cast<uint32_t>(rng() % f.p());
                nonzero = nonzero || functional(0, j) != 0;
            }
        Subspace coeffs = kernel(functional, f);
        Subspace m = Subspace::from_rows(mat_mul(coeffs.basis(), l.basis(), f), f);

        std::vector<size_t> rel = local_invariants_rel(l, m, ps);
        std::vector<size_t> oracle = codim1_oracle(l, m, ps);
        bool rows_equal = rel[0] == 0;
        for (size_t j = 1; j <= ps.num_parties(); ++j)
            rows_equal = rows_equal && rel[j] == oracle[j - 1];

        Polyhedron gamma = codim1_polyhedron(l, m, ps);
        Polyhedron gamma_prime =
            codim1_polyhedron(form.orthogonal_complement(m), form.orthogonal_complement(l), ps);
        bool dual_law = gamma_prime == dual(gamma);

        ok += rows_equal && dual_law;
        std::cout << "trial " << t << ": quotient row " << row_text(rel) << ", "
                  << (rows_equal ? "matches the simplicial oracle" : "MISMATCH") << ", dual law "
                  << (dual_law ? "holds" : "FAILS") << "\n";
    }
    std::cout << ok << "/" << trials << " trials agree\n";
    return ok == trials ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological invariants of multi-party stabilizer states"};
    app.require_subcommand(1);

    std::string file = "-", format = "table", map, parties_list, fam_name;
    std::string file_b, golden_path;
    int64_t kmax = -1, coarse_target = -1;
    size_t fam_n = 0, trials = 5;
    uint64_t seed = 0;
    uint32_t fam_p = 2;
    int threads = 0;
    bool table1 = false, internal = false, external = false;

    CLI::App* inv = app.add_subcommand("invariants", "h^{kj} grid of a state");
    inv->add_option("file", file, "problem JSON, or - for stdin");
    inv->add_option("--kmax", kmax, "largest exterior degree k (default: dim L)");
    inv->add_option("--format", format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    inv->add_flag("--tableI", table1, "diff the named golden rows instead of reading a file");
    inv->add_option("--golden", golden_path, "golden rows file (with --tableI)");
    inv->add_option("--threads", threads, "parallel evaluations for --tableI (default: STABHOM_THREADS or hardware)");

    CLI::App* dua = app.add_subcommand("duality", "pairing ranks against the symplectic complement");
    dua->add_option("file", file, "problem JSON, or - for stdin");
    dua->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* ghz = app.add_subcommand("ghz", "count GHZ summands and print the splitting transcript");
    ghz->add_option("file", file, "problem JSON, or - for stdin");
    ghz->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* coa = app.add_subcommand("coarsen", "merge parties; emits the derived problem JSON");
    coa->add_option("file", file, "problem JSON, or - for stdin");
    coa->add_option("--map", map, "comma list: target party of each input party")->required();
    coa->add_option("--parties", coarse_target, "party count of the result (default: largest target + 1)");

    CLI::App* dis = app.add_subcommand("discard", "drop parties; emits the derived problem JSON");
    dis->add_option("file", file, "problem JSON, or - for stdin");
    dis->add_option("--parties", parties_list, "comma list of party indices to drop")->required();

    CLI::App* pro = app.add_subcommand("product", "sum of two states; emits the derived problem JSON");
    pro->add_option("file_a", file, "left problem JSON")->required();
    pro->add_option("file_b", file_b, "right problem JSON")->required();
    pro->add_flag("--internal", internal, "same parties, blocks concatenated per party");
    pro->add_flag("--external", external, "disjoint parties, concatenated");

    CLI::App* fam = app.add_subcommand("family", "named graph state; emits problem JSON");
    fam->add_option("--name", fam_name, "path, star, cycle, D, E6 or E7")->required();
    fam->add_option("--n", fam_n, "number of vertices")->required();
    fam->add_option("--p", fam_p, "field modulus (default 2)");

    CLI::App* ora = app.add_subcommand("oracle", "cross-check quotient rows against the simplicial oracle");
    ora->add_option("file", file, "problem JSON, or - for stdin");
    ora->add_option("--trials", trials, "number of random codimension-1 subspaces");
    ora->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv)
            return table1 ? run_golden_diff(golden_path.empty() ? default_golden_path() : golden_path,
                                            threads)
                          : run_invariants(file, kmax, format);
        if (*dua)
            return run_duality(file, format);
        if (*ghz)
            return run_ghz(file, format);
        if (*coa)
            return run_coarsen(file, map, coarse_target);
        if (*dis)
            return run_discard(file, parties_list);
        if (*pro)
            return run_product(file, file_b, internal, external);
        if (*fam)
            return run_family(fam_name, fam_n, fam_p);
        if (*ora)
            return run_oracle(file, trials, seed);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
