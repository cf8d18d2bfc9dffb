#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surd/identity.hpp"

namespace surd {

struct CorpusEntry {
  std::string id;
  std::string lhs;
  std::string rhs;
  std::string expect;  // "verified" or "refuted"
  std::string source;
};

struct LoadResult {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> line_errors;  // one message per malformed line
};

// JSON-Lines, one object per line with fields id/lhs/rhs/expect/source.
// Malformed lines are collected, not fatal.
LoadResult load_corpus(std::istream& in);
LoadResult load_corpus_file(const std::string& path);

struct EntryReport {
  std::string id;
  Status status = Status::Unverified;
  bool matched = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  bool interesting = false;
  double elapsed_ms = 0.0;
  std::string note;
  std::string error;  // parse/lower failure, if any
};

struct RunReport {
  std::vector<EntryReport> entries;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t errors = 0;
  std::size_t mismatched = 0;
  std::size_t malformed_lines = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string engine_version;

  bool all_matched() const { return mismatched == 0 && errors == 0; }
};

// Builds the record for one entry (throws on parse/lower failure).
IdentityRecord record_from_entry(const CorpusEntry& entry);

// Verifies all entries; report order follows corpus order regardless of
// the number of workers.
RunReport run_corpus(const std::vector<CorpusEntry>& entries,
                     unsigned precision_bits = kDefaultPrecisionBits,
                     unsigned jobs = 1);

std::string report_to_json(const RunReport& report);

}  // namespace surd
