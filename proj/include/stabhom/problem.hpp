// State descriptions as JSON: a prime field, named parties with qudit counts,
// and one of three state sources — a graph (edge list), Pauli strings (p = 2,
// one qubit per party), or raw generator rows in (e, f) coordinates. Parsing
// validates everything and yields an isotropic subspace; any derived state can
// be re-emitted in the generators form, so subcommands compose through pipes.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stabhom/ffla.hpp"
#include "stabhom/symplectic.hpp"

namespace stabhom {

struct PartyDecl {
    std::string name;
    uint32_t qudits = 1;
    bool operator==(const PartyDecl&) const = default;
};

struct ProblemFile {
    uint32_t p = 2;
    std::vector<PartyDecl> parties;
    Subspace space{FieldPrime(2), 0}; // isotropic; canonical RREF rows
    // "graph", "paulis" or "generators"; graphs keep their edges for re-emission.
    std::string source;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    PartyStructure structure() const;
};

// All throw input_error on malformed or inconsistent data.
ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem_stream(std::istream& in);
// Reads stdin when path is "-"; missing file is an input_error.
ProblemFile parse_problem(const std::string& path);

// Canonical JSON (sorted keys, two-space indent, trailing newline). Graph
// sources serialize as a graph, everything else as generator rows, so the
// output parses back to an equal problem.
std::string to_json_text(const ProblemFile& pf);

// Wraps a computed subspace as a generators-source problem; names must match
// the party count of ps.
ProblemFile make_problem(const Subspace& space, const PartyStructure& ps,
                         std::vector<std::string> names);

} // namespace stabhom
