#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsf/core.hpp"
#include "fsf/optimizer.hpp"

/// Published transition-coefficient fixtures and their re-verification.
///
/// Each fixture row records one published design: which source printed it,
/// the filter spec, the printed coefficients, the PSL claim that accompanied
/// them (when any), and the PSL those exact coefficients really achieve.
/// Rows with source this-paper-optimal carry the corrected optimal values;
/// they are additionally checked against a fresh optimize() run.  Everything
/// ships as CSV (and as embedded copies of the same bytes) so transcription
/// stays diffable.
namespace fsf {

enum class Source { this_paper_optimal, rabiner, lyons, rorabaugh, rybka };

const char* to_string(Source s);

/// Inverse of to_string.  Throws ParseError.
Source source_from_string(std::string_view s);

struct PublishedFixture {
  std::string table;  ///< owning fixture table, e.g. "lpf-cos-12"
  Source source = Source::this_paper_optimal;
  FilterSpec spec;
  std::vector<double> coefficients;        ///< in TransitionAssignment order
  std::optional<double> claimed_psl_db;    ///< PSL exactly as first published
  std::optional<double> corrected_psl_db;  ///< PSL the coefficients really give
};

/// Reproduction tolerances.  PSL within 0.02 dB, relaxed to 0.1 dB below
/// -150 dB where the printed 8-digit coefficients no longer pin the floor;
/// coefficients within 1e-5 for single-variable specs, 5e-5 otherwise.
constexpr double kPslTolDb = 0.02;
constexpr double kDeepPslTolDb = 0.10;
constexpr double kDeepPslFloorDb = -150.0;
constexpr double kCoeffTolSingle = 1e-5;
constexpr double kCoeffTolMulti = 5e-5;

inline double psl_tolerance_db(double psl_db) {
  return psl_db < kDeepPslFloorDb ? kDeepPslTolDb : kPslTolDb;
}

inline double coefficient_tolerance(int t) {
  return t <= 1 ? kCoeffTolSingle : kCoeffTolMulti;
}

/// One fixture re-checked.  Deltas are signed, computed minus published.
struct TableRowResult {
  PublishedFixture fixture;
  std::optional<double> recomputed_psl_db;   ///< PSL of the printed coefficients
  std::optional<double> corrected_delta_db;  ///< recomputed - corrected
  bool corrected_ok = true;                  ///< |delta| within psl_tolerance_db
  std::optional<DesignResult> design;        ///< fresh optimize() of the spec
  std::vector<double> coefficient_deltas;    ///< design values - printed values
  std::optional<double> design_psl_delta_db; ///< design PSL - recomputed PSL
};

struct EmbeddedTable {
  std::string_view name;
  std::string_view csv;
};

/// Compiled-in copies of data/fixtures/*.csv, in canonical table order.
const std::vector<EmbeddedTable>& embedded_tables();

/// Compiled-in copy of data/manifest.csv (`table,rows` per line).
std::string_view embedded_manifest();

/// Expected row count per table, parsed from the embedded manifest.
std::vector<std::pair<std::string, int>> manifest_counts();

/// Every row of every embedded table, in table order.  Subtotals are checked
/// against the embedded manifest; ParseError on any mismatch.
std::vector<PublishedFixture> embedded_fixtures();

/// Parses one fixture CSV file, or every *.csv table in a directory (a
/// `fixtures` subdirectory is used when present; a manifest.csv found next to
/// the tables pins the expected row counts).  Throws ParseError with
/// file:line:column context, ArityMismatch when a row's coefficient count
/// contradicts its spec.
std::vector<PublishedFixture> load_fixtures(const std::string& path);

/// Recomputes the PSL of the fixture's printed coefficients on a density-g
/// stopband grid and compares with corrected_psl_db; this-paper-optimal rows
/// are also redesigned with optimize() and the signed deltas filled in.
TableRowResult verify_fixture(const PublishedFixture& f, double g = 1e-3);

/// Re-checks every row of the named fixture table (or only rows with
/// n == n_filter), running optimize() once per distinct spec and attaching it
/// to each row.  Rows come from `fixtures` when given, else the embedded set.
/// Throws UnknownPreset.
std::vector<TableRowResult> run_preset(std::string_view preset,
                                       std::optional<int> n_filter = {},
                                       double g = 1e-3,
                                       const std::vector<PublishedFixture>* fixtures = nullptr);

/// A claimed PSL is struck through when it disagrees with the recomputed
/// value by more than this.
constexpr double kStrikeDb = 0.05;

struct Report {
  std::string markdown;
  std::string csv;
};

/// Renders rows sorted by (n, bw, m1, spec, source), one line per fixture,
/// striking claimed PSLs that fail the kStrikeDb check.  Output depends only
/// on the rows, so equal inputs give byte-equal documents.
Report comparison_report(std::vector<TableRowResult> rows);

}  // namespace fsf
