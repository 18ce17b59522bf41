#include "powergraph/cli.hpp"

#include "powergraph/forbidden.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/subgroups.hpp"
#include "powergraph/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace powergraph::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Pattern {
  std::string name;
  std::size_t star = 0; // r for K_{1,r}; 0 for the others
};

Pattern parse_pattern(const std::string& s) {
  if (s == "claw" || s == "K1,3" || s == "K13")
    return {"K1,3", 3};
  if (s == "K1,4" || s == "K14")
    return {"K1,4", 4};
  if (s == "C4")
    return {"C4", 0};
  if (s == "K3" || s == "triangle")
    return {"K3", 0};
  throw std::invalid_argument("unknown pattern '" + s + "' (use claw, K14, C4, K3)");
}

std::optional<Witness> search(const PowerGraph& pg, const Pattern& p) {
  if (p.star)
    return find_star(pg, p.star);
  if (p.name == "C4")
    return find_induced_c4(pg);
  return find_triangle(pg);
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content) || !f.flush()) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::vector<Family> parse_families(const std::vector<std::string>& names) {
  if (names.empty())
    return all_families();
  std::vector<Family> out;
  for (const auto& n : names) {
    const Family f = parse_family(n);
    if (std::find(out.begin(), out.end(), f) == out.end())
      out.push_back(f);
  }
  return out;
}

int cmd_catalog(const CatalogSpec& spec, std::ostream& out) {
  for (const auto& e : generate_catalog(spec))
    out << e.order << ' ' << e.label << '\n';
  return kExitOk;
}

int cmd_check(const std::string& text, const std::vector<std::string>& pattern_names,
              std::ostream& out) {
  std::vector<Pattern> patterns;
  for (const auto& n : pattern_names)
    patterns.push_back(parse_pattern(n));
  if (patterns.empty())
    patterns = {parse_pattern("claw"), parse_pattern("K14"), parse_pattern("C4"),
                parse_pattern("K3")};
  const FiniteGroup g = build_group(parse_descriptor(text));
  const PowerGraph pg = power_graph(g);
  out << g.label() << " order " << g.order() << '\n';
  bool any = false;
  for (const auto& p : patterns) {
    const auto w = search(pg, p);
    out << p.name << ": ";
    if (!w) {
      out << "free\n";
      continue;
    }
    any = true;
    out << "found";
    for (auto v : w->vertices)
      out << " (" << v << ',' << g.order_of(static_cast<Elem>(v)) << ')';
    out << '\n';
  }
  return any ? kExitFound : kExitOk;
}

int cmd_audit(const CatalogSpec& spec, const std::string& path, unsigned jobs, std::ostream& out,
              std::ostream& err) {
  if (spec.max_order > kAuditHardCap)
    throw std::invalid_argument("audit max order is capped at " + std::to_string(kAuditHardCap));
  const auto catalog = generate_catalog(spec);
  const auto reports = audit_catalog(catalog, jobs);
  if (!path.empty() && !write_file(path, audit_json(spec, reports), err))
    return kExitError;
  std::size_t claims = 0, bad = 0;
  for (const auto& r : reports) {
    out << summary_line(r) << '\n';
    claims += r.verdicts.size();
    bad += r.disagreements().size();
  }
  out << "audited " << reports.size() << " groups, " << claims << " claims, " << bad
      << " disagreements\n";
  return bad ? kExitFound : kExitOk;
}

int cmd_export(const std::string& text, const std::string& format, const std::string& path,
               std::ostream& out, std::ostream& err) {
  const FiniteGroup g = build_group(parse_descriptor(text));
  const PowerGraph pg = power_graph(g);
  const std::string content = format == "dot" ? to_dot(pg, g) : to_json(pg);
  if (path.empty()) {
    out << content;
    return kExitOk;
  }
  return write_file(path, content, err) ? kExitOk : kExitError;
}

int cmd_ingest(const std::string& file, const std::string& path, std::ostream& out,
               std::ostream& err) {
  const FiniteGroup g = load_cayley_table(file);
  out << g.label() << " order " << g.order() << '\n'
      << "identity " << g.identity() << '\n'
      << "abelian " << (is_abelian(g) ? "yes" : "no") << '\n'
      << "cyclic " << (is_cyclic(g) ? "yes" : "no") << '\n'
      << "exponent " << exponent(g) << '\n'
      << "element orders";
  for (auto o : order_spectrum(g))
    out << ' ' << o;
  out << '\n';
  if (path.empty())
    return kExitOk;
  std::ostringstream table;
  write_cayley_table(table, g);
  return write_file(path, table.str(), err) ? kExitOk : kExitError;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["claim"] = v.claim;
  j["relation"] = to_string(v.relation);
  j["structural"] = v.structural;
  j["brute_force"] = v.brute_force ? Json(*v.brute_force) : Json(nullptr);
  j["agrees"] = v.agrees;
  j["witness"] = v.witness;
  j["note"] = v.note;
  return j;
}

} // namespace

std::vector<AuditReport> audit_catalog(const std::vector<CatalogEntry>& catalog, unsigned jobs) {
  std::vector<AuditReport> reports(catalog.size());
  std::vector<std::exception_ptr> errors(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        reports[i] = audit_group(build_group(catalog[i].descriptor));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, catalog.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return reports;
}

std::string audit_json(const CatalogSpec& spec, const std::vector<AuditReport>& reports) {
  Json root;
  root["schema"] = 1;
  Json families = Json::array();
  for (Family f : spec.families)
    families.push_back(to_string(f));
  root["catalog"] = {{"max_order", spec.max_order}, {"families", families}};
  Json groups = Json::array();
  std::size_t claims = 0, bad = 0;
  for (const auto& r : reports) {
    Json g;
    g["label"] = r.group_label;
    g["order"] = r.group_order;
    Json vs = Json::array();
    for (const auto& v : r.verdicts)
      vs.push_back(verdict_json(v));
    g["verdicts"] = std::move(vs);
    const auto dis = r.disagreements();
    g["disagreements"] = dis;
    claims += r.verdicts.size();
    bad += dis.size();
    groups.push_back(std::move(g));
  }
  root["groups"] = std::move(groups);
  root["summary"] = {
      {"groups_audited", reports.size()}, {"claims_checked", claims}, {"disagreements", bad}};
  return root.dump(2) + "\n";
}

std::string summary_line(const AuditReport& report) {
  std::string line = report.group_label + " " + std::to_string(report.group_order);
  const auto dis = report.disagreements();
  if (dis.empty())
    return line + " ok";
  line += " DISAGREE";
  for (std::size_t i = 0; i < dis.size(); ++i)
    line += (i ? "," : " ") + dis[i];
  return line;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of finite groups: forbidden subgraph checks and audits",
               "powergraph"};
  app.require_subcommand(1);

  CatalogSpec spec;
  std::vector<std::string> families;
  std::vector<std::string> patterns;
  std::string descriptor, out_path, format = "dot", table_file;
  unsigned jobs = 1;

  auto add_catalog_flags = [&](CLI::App* sub) {
    sub->add_option("--max-order", spec.max_order, "Largest group order")->capture_default_str();
    sub->add_option("--families", families, "Comma-separated family names")->delimiter(',');
  };

  auto* catalog = app.add_subcommand("catalog", "List the group catalog");
  add_catalog_flags(catalog);

  auto* check = app.add_subcommand("check", "Search one power graph for forbidden subgraphs");
  check->add_option("group", descriptor, "Group descriptor, e.g. Z12, Q8, Z7:Z3(2)")->required();
  check->add_option("--patterns", patterns, "claw, K14, C4, K3")->delimiter(',');

  auto* audit = app.add_subcommand("audit", "Audit every catalog group");
  add_catalog_flags(audit);
  audit->add_option("--out", out_path, "JSON report path");
  audit->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Write a power graph as DOT or JSON");
  exp->add_option("group", descriptor, "Group descriptor")->required();
  exp->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  exp->add_option("--out", out_path, "Output path (default: standard output)");

  auto* ingest = app.add_subcommand("ingest", "Validate a Cayley-table file");
  ingest->add_option("table", table_file, "Cayley-table file")->required();
  ingest->add_option("--out", out_path, "Write the validated table here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    spec.families = parse_families(families);
    if (*catalog)
      return cmd_catalog(spec, out);
    if (*check)
      return cmd_check(descriptor, patterns, out);
    if (*audit)
      return cmd_audit(spec, out_path, jobs, out, err);
    if (*exp)
      return cmd_export(descriptor, format, out_path, out, err);
    if (*ingest)
      return cmd_ingest(table_file, out_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

} // namespace powergraph::cli
