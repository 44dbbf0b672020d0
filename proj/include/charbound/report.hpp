#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charbound::report {

enum class Status { pass, fail, skipped_cyclic, unsupported };
enum class Provenance { computed, stored_paper_value };

const char* status_name(Status s);
const char* provenance_name(Provenance p);

struct CheckRow {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;  // decimal string, lossless
  std::string rhs;
  bool pass = true;
  Status status = Status::pass;
  Provenance provenance = Provenance::computed;
};

struct Summary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped_cyclic = 0;
  std::int64_t unsupported = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRow> checks;
  Summary summary;

  bool operator==(const VerificationReport& o) const;
};

struct GridConfig {
  int rank_max = -1;       // -1 means the suite default
  std::int64_t q_max = -1;
  std::int64_t p_max = -1;
  int l_max = -1;
  int n_max = -1;
};

/// Runs one suite ("regclasses", "crosschar", "defchar", "symspin",
/// "oracle", or "all") over the grid.  Rows are sorted by (check_id,
/// params); the summary partitions the rows by status.  Throws
/// std::invalid_argument for unknown suite names.
VerificationReport run(const std::string& suite, const GridConfig& cfg = {});

/// "text": aligned table; "json": the report schema, byte-stable across
/// runs for identical inputs.
std::string emit(const VerificationReport& r, const std::string& format);

VerificationReport parse_json(const std::string& text);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const VerificationReport& r);

}  // namespace charbound::report
