#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpw/complexes.hpp"
#include "gpw/graph.hpp"

namespace gpw {

enum class Verdict { kYes, kNo, kUnknown };
enum class WitnessKind { kHole, kAntihole, kNamedSubgraph };

/// "YES", "NO", "UNKNOWN".
std::string to_string(Verdict v);

struct Witness {
  WitnessKind kind = WitnessKind::kHole;
  /// Pattern name for named subgraphs ("C5", "P6opp", ...), empty otherwise.
  std::string pattern;
  /// Cyclic order for holes (in g) and antiholes (in g^opp); the image of
  /// each pattern vertex for named subgraphs.
  std::vector<std::size_t> vertices;

  /// "hole:a,b,c,d,e", "antihole:...", "P6opp:..." using g's labels.
  std::string str(const SimpleGraph& g) const;
};

struct Classification {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Witness> witness;
  std::string basis;
  std::string note;
};

/// Right-angled Coxeter group of g contains a hyperbolic surface group.
/// Decided for at most 7 vertices (YES iff not weakly chordal); larger graphs
/// get YES from a hole or antihole and UNKNOWN otherwise.
Classification racg_surface_subgroup(const SimpleGraph& g);

/// Right-angled Artin group of g contains a hyperbolic surface group: YES
/// iff g has an induced C_m (m >= 5), C6opp, P6opp, P1_7 or P2_7. Decided for
/// at most 7 vertices; larger graphs without a pattern get UNKNOWN.
Classification raag_surface_subgroup(const SimpleGraph& g);

/// The witness really is what it claims to be in g.
bool revalidate_witness(const SimpleGraph& g, const Witness& w);

struct CensusRow {
  SimpleGraph graph;
  std::string graph6;
  bool weakly_chordal = false;
  Classification racg;
  Classification raag;
};

struct CensusSummary {
  std::size_t classes = 0;
  std::size_t weakly_chordal = 0;
  std::size_t racg_yes = 0;
  std::size_t raag_yes = 0;
  std::size_t raag_only = 0;
};

/// One row per isomorphism class on n vertices (1 <= n <= 7) in graph6
/// order. threads = 0 reads GPW_THREADS, falling back to the hardware.
std::vector<CensusRow> census(std::size_t n, std::size_t threads = 0);
CensusRow census_row(const SimpleGraph& g);
CensusSummary summarize(const std::vector<CensusRow>& rows);

/// Header, one tab-separated line per row, then "# key=value" aggregates.
void write_census(std::ostream& out, const std::vector<CensusRow>& rows);
std::string census_header();
std::string census_line(const CensusRow& row);

/// Worker count from GPW_THREADS (at least 1), else the hardware count.
std::size_t worker_count();

struct WitnessCertificate {
  bool certified = false;
  std::optional<CubeComplex> complex;
  Count chi = 0;
  /// "surface=yes chi=-8" for holes; the co-contraction chain and its
  /// relator report for antiholes.
  std::string report;
};

/// For a hole of length m >= 4: Z_0(C_m, all orders 2), certified when it is
/// a closed surface with chi < 0. For an antihole: co-contractions down to
/// C5opp, certified when the composite passes relator_check. Throws
/// std::invalid_argument for a witness that does not revalidate.
WitnessCertificate witness_complex(const SimpleGraph& g, const Witness& w);

}  // namespace gpw
