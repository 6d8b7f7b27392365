#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "planecover/tower_assembly.hpp"

namespace planecover {

// A complete run configuration: the four tangent lines, the anchor
// conic of the pencil, the pencil parameter selecting the second
// conic, and the group labels of the four branch divisors. The
// defaults reproduce the built-in cover, so a configuration file only
// has to state what it changes.
struct RunConfig {
  Rat t = Rat(1);
  std::array<std::array<Rat, 3>, 4> line_coeffs;  // T1..T4: ax + by + cz
  std::array<Rat, 6> conic_coeffs;                // H1: x2 xy xz y2 yz z2
  std::array<GroupElement, 4> sigma;              // D1..D4

  static RunConfig defaults();
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// The defaults rendered in the configuration file format, with one key
// per line. Parsing this text reproduces RunConfig::defaults().
std::string default_config_text();

// Parses the flat key/value configuration format:
//   t = 1
//   line.T1 = [1, 0, -1]
//   conic.H1 = [1, 0, 0, 1, 0, -1]
//   sigma.D1 = xyz
// '#' starts a comment, blank lines are skipped, scalars are integers
// or p/q rationals (floats are rejected), sigma values are group
// element names over {x, y, z}. Unknown, duplicate, or malformed keys
// raise Config with the offending line number.
RunConfig parse_run_config(const std::string& text);

// Builds validated cover data from a configuration: distinct nonzero
// lines, a smooth anchor conic tangent to all four lines, and a
// nondegenerate pencil member. Any violation raises Config with a
// diagnostic naming the offending field; the semantic checks on the
// group labels stay in the pipeline, which reports them as checks.
BuildingData make_building_data(const RunConfig& cfg);

// The report as canonical JSON text. Key order is fixed and every
// number is an exact integer or a p/q string, so two runs over the
// same configuration produce byte-identical output.
std::string render_report(const TowerReport& rep);

// The 24x12 node-evaluation matrix of the bicanonical system as JSON:
// column labels, then one row per cover node with its plane point and
// sheet name and the exact entry values.
std::string render_matrix_dump(const BuildingData& bd);

// Human-readable run summary: one line per check, the headline
// invariants, and with `verbose` the level table, certificates,
// matchings, and work counters.
std::string render_summary(const TowerReport& rep, bool verbose);

// The command line driver behind the verify tool. Exit status: 0 when
// every check passed, 1 when a check failed (the failing stage is
// named on `err`), 2 for configuration or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace planecover
