#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/classify.hpp"

namespace linkhom {

struct CatalogEntry {
    std::vector<std::int64_t> weights;
    std::optional<std::int64_t> degree;
    std::optional<bool> ke_flag;
    int source_line = 0;
};

enum class CatalogFormat { Csv, Jsonl };
enum class EmitFormat { Csv, Jsonl, Markdown };

struct ParseResult {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> warnings;  // e.g. duplicate weight vectors
};

// CSV schema: w0,...,w_{m-1}[,d][,ke_flag]. Headerless lines use the
// positional rule (exactly six numeric fields = five weights plus degree;
// any other count = all weights). A header line naming w0.., d, ke removes
// the ambiguity and lets extra columns pass through, so emitted CSV
// round-trips. JSONL: one {"w": [...], "d":?, "ke":?} object per line.
ParseResult parse_catalog(std::istream& in, CatalogFormat format);

struct BatchOptions {
    bool filter_ke = false;  // keep only entries with ke_flag == true
    int jobs = 1;
};

// One row of batch output; either a record or the error that replaced it.
struct BatchItem {
    CatalogEntry entry;
    std::optional<LinkRecord> record;
    std::string error;
};

// Per-entry failures become data; output order equals input order no matter
// how many workers run.
std::vector<BatchItem> run_batch(const std::vector<CatalogEntry>& entries,
                                 const BatchOptions& options);

std::string emit(const std::vector<BatchItem>& items, EmitFormat format);

// "(Z_77)^8", "Z_5761 + Z_11", "Z^222", "0"; run-length groups largest first.
std::string homology_string(const HomologyGroup& h);

// Best-effort converter for the upstream plain-text dump: grabs the integers
// on each line as a weight vector and flags lines marked KE. Kept apart from
// the normalized schema above.
ParseResult convert_upstream_text(std::istream& in);

std::string to_json(const LinkRecord& rec);

}  // namespace linkhom
