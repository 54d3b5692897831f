// Machine-readable run reports and the golden-row batch runner. Reports
// serialize to canonical JSON (sorted keys, fixed indentation) so identical
// inputs produce byte-identical output; elapsed_ms is the one field a
// comparison must erase first.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabhom/cech.hpp"
#include "stabhom/duality.hpp"
#include "stabhom/problem.hpp"

namespace stabhom {

struct GhzReport {
    size_t count = 0;
    std::vector<std::string> transcript; // one line per splitting step
    size_t remainder_dim = 0;
    std::vector<size_t> remainder_row; // h^{1,j} of the remainder
    bool operator==(const GhzReport&) const = default;
};

struct Report {
    std::string input_json; // canonical echo of the problem
    InvariantTable table;
    std::optional<DualityReport> duality;
    std::optional<GhzReport> ghz;
    double elapsed_ms = 0.0;
};

std::string report_to_json_text(const Report& r);
Report report_from_json_text(const std::string& text);

// Rows k = 0..kmax of the invariant grid (kmax is clamped to dim L).
InvariantTable invariant_table_limited(const Subspace& l, const PartyStructure& ps, size_t kmax);

// Runs the full splitting pipeline and records a step transcript.
GhzReport make_ghz_report(const Subspace& l, const PartyStructure& ps);

// Text renderers. The table view prints rows k >= 1 (row 0 is identically
// zero for a nonempty party set); CSV emits every computed cell as k,j,h.
std::string render_table_text(const InvariantTable& t);
std::string render_table_csv(const InvariantTable& t);

// One record of tests/golden/named_rows.json: a named graph state and the
// expected invariant rows, keyed by exterior degree k.
struct GoldenEntry {
    std::string name;
    std::string table; // "I" or "II"
    uint32_t p = 2;
    std::vector<uint32_t> qudits;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::map<size_t, std::vector<size_t>> rows;
};

std::vector<GoldenEntry> load_golden(const std::string& path);

struct GoldenResult {
    std::string name;
    bool ok = false;
    std::string detail; // empty when ok, otherwise the first mismatch
};

// Evaluates every entry and diffs against its recorded rows. threads <= 0
// picks STABHOM_THREADS if set, otherwise the hardware count; results keep
// the input order regardless of scheduling.
std::vector<GoldenResult> run_golden_batch(const std::vector<GoldenEntry>& entries, int threads);

} // namespace stabhom
