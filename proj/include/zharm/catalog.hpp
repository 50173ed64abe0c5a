#pragma once

// Link-table ingestion (LinkInfo-style CSV exports), batch scanning over
// cover degrees, and reproduction of the golden homology-order table.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zharm/braid.hpp"
#include "zharm/cover.hpp"

namespace zharm::catalog {

enum class AlexForm { ALEXANDER, ALEXANDER_OVER_T_MINUS_1 };

struct LinkRecord {
    std::string name;
    std::optional<int> components;
    std::optional<braid::BraidWord> braid_word;
    std::optional<std::string> alex;  // polynomial text under the laurent grammar
    AlexForm alex_form = AlexForm::ALEXANDER;
};

// CSV table with a required header naming a subset of
// {name, components, braid, alexander, alexander_form}. RFC-4180-style
// quoting; quoted fields may contain commas and embedded quotes ("").
// A malformed row aborts with its (1-based) data-row index unless skip_bad
// is set, in which case the row is dropped and a diagnostic recorded.
std::vector<LinkRecord> parse_table(std::istream& in, bool skip_bad = false,
                                    std::vector<std::string>* diagnostics = nullptr);

// The Alexander class of a record: parsed polynomial (times (t-1) when the
// stored form is the Delta/(t-1) column), else the Burau route from the
// braid word. When both are present they are cross-checked and a mismatch
// throws DataError.
laurent::UnitClass effective_delta(const LinkRecord& r);

struct ScanRow {
    std::string name;
    std::string delta;  // canonical representative, serialized
    BigInt determinant;
    std::map<int, BigInt> orders;  // per requested cover degree
    std::string conclusion;
    std::optional<std::string> error;  // set on per-record failures
};

// Evaluate the criterion plus the homology order at each requested degree,
// for every record. Per-record errors become error rows; the batch never
// aborts. Output order equals input order regardless of the worker count.
std::vector<ScanRow> scan(const std::vector<LinkRecord>& records,
                          const std::vector<int>& k_list, int jobs = 1);

struct GoldenRow {
    std::string name;
    std::string p_text;  // the Delta/(t-1) column, verbatim
    BigInt expected_order3;
};

struct DiffEntry {
    std::string name;
    BigInt got;
    BigInt expected;
};

// Golden fixture: CSV with header `name,alexander,order3`.
std::vector<GoldenRow> read_golden(std::istream& in);

// Recompute |H_1(S_3)| = homology_order((t-1) * P, 3) per row; the diff is
// empty iff every value matches the golden integer bit-exactly.
std::vector<DiffEntry> reproduce_appendix(const std::vector<GoldenRow>& golden);

// One compact JSON object per row, newline separated, keys in fixed order:
// {"name":..., "delta":..., "determinant":..., "orders":{"<k>":...}, "conclusion":...}
// Arbitrary-precision integers are emitted as JSON number literals, so the
// output is byte-identical across runs and worker counts.
std::string scan_to_json(const std::vector<ScanRow>& rows);

// Columns: name,delta,order_<k>... — a k=3 scan mirrors the golden table's
// three columns. Error rows carry `#error: <msg>` in the delta column.
std::string scan_to_csv(const std::vector<ScanRow>& rows, const std::vector<int>& k_list);

std::string diff_to_json(const std::vector<DiffEntry>& diff);

}  // namespace zharm::catalog
