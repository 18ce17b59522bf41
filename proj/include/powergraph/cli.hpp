// Front end behind the `powergraph` executable. Every subcommand runs in
// process and reports through the given streams, so tests can drive it
// directly.
//
//   catalog  --max-order N --families a,b,...
//   check    DESCRIPTOR [--patterns claw,K14,C4,K3]
//   audit    --max-order N --families ... [--out report.json] [--jobs J]
//   export   DESCRIPTOR --format dot|json [--out path]
//   ingest   TABLE_FILE [--out path]
//
// Exit codes: 0 success (check: no pattern found; audit: no disagreement),
// 1 check found a pattern or audit found a disagreement, 2 error.

#ifndef POWERGRAPH_CLI_HPP_
#define POWERGRAPH_CLI_HPP_

#include "powergraph/catalog.hpp"
#include "powergraph/classify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace powergraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;
inline constexpr int kExitError = 2;

/// Audits every catalog entry on `jobs` worker threads. The result follows
/// catalog order whatever the completion order.
std::vector<AuditReport> audit_catalog(const std::vector<CatalogEntry>& catalog, unsigned jobs);

/// Versioned JSON report. Timing is left out so equal inputs give equal bytes.
std::string audit_json(const CatalogSpec& spec, const std::vector<AuditReport>& reports);

/// "label order ok" or "label order DISAGREE claim,claim".
std::string summary_line(const AuditReport& report);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace powergraph::cli

#endif // POWERGRAPH_CLI_HPP_
