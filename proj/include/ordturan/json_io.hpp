#ifndef ORDTURAN_JSON_IO_HPP
#define ORDTURAN_JSON_IO_HPP

#include "ordturan/construction.hpp"
#include "ordturan/parameters.hpp"
#include "ordturan/rational.hpp"
#include "ordturan/simplex.hpp"
#include "ordturan/solvers.hpp"

#include <json.hpp>

#include <string>

namespace ordturan {

using Json = nlohmann::json;

// Shortest round-trip decimal representation (std::to_chars).
std::string double_repr(double x);

// Convenience column value: the correctly rounded double of r, rendered
// with double_repr.
std::string float_repr(const Rat& r);

// Rationals serialize as canonical "p/q" strings so reports stay exact.
Json json_of(const Rat& r);
Json json_of(const CertificateDetail& d);
Json json_of(const QuasirandomCertificate& c);
Json json_of(const ConstructionParams& p);
Json json_of(const BlockRecord& b);
// Sidecar metadata: parameters, per-block certificates, and the edge count;
// the adjacency itself lives in the graph text file.
Json json_of(const ConstructedGraph& g);
Json json_of(const Leveling& l);
// include_edges controls whether the kept edge list is embedded (it can be
// large; grid reports keep only counts and the leveling certificate).
Json json_of(const SolveResult& r, bool include_edges = true);
Json json_of(const BoundReport& r);
Json json_of(const TuranParameters& p);
Json json_of(const TransversalReport& r);

} // namespace ordturan

#endif
