#include "scycle/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "scycle/cubic_packing.hpp"

namespace scycle {

using nlohmann::ordered_json;

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

namespace {

ordered_json bounds_json(const Instance& inst) {
  ordered_json b;
  b["s_k"] = s_threshold(inst.k);
  b["size_bound"] = hitting_set_bound(inst.k, inst.ell);
  b["iteration_cap"] = iteration_cap(inst.k, inst.terminals.size());
  return b;
}

}  // namespace

std::string report_json(const Instance& inst, const SolveResult& result, const ReportOptions& opt) {
  ordered_json j;
  j["format"] = kReportFormat;
  j["version"] = kReportVersion;
  j["instance"] = {{"fingerprint", fingerprint_hex(inst.fingerprint())},
                   {"n", inst.n},
                   {"m", inst.edges.size()},
                   {"k", inst.k},
                   {"ell", inst.ell},
                   {"terminals", inst.terminals.size()}};
  if (const auto* p = std::get_if<Packing>(&result.outcome)) {
    j["outcome"] = "packing";
    ordered_json cycles = ordered_json::array();
    for (const auto& c : p->cycles) cycles.push_back(c.vertices());
    j["cycles"] = std::move(cycles);
  } else {
    j["outcome"] = "hitting_set";
    j["hitting_set"] = std::get<HittingSet>(result.outcome).vertices.members();
  }
  j["bounds"] = bounds_json(inst);
  j["iterations"] = result.iterations;
  j["shortcut"] = result.shortcut;
  if (opt.trace) {
    ordered_json trace = ordered_json::array();
    for (const auto& r : result.trace) {
      ordered_json rec;
      rec["iteration"] = r.iteration;
      rec["score"] = {r.score.branch_count, r.score.terminal_weight};
      rec["branch"] = r.branch;
      rec["cycle_components"] = r.cycle_components;
      rec["pendants"] = r.pendants;
      rec["candidate_size"] = r.candidate_size;
      rec["case"] = std::string(to_string(r.label));
      if (r.trivial_path) rec["trivial_path"] = true;
      trace.push_back(std::move(rec));
    }
    j["trace"] = std::move(trace);
  }
  if (opt.wall_ms >= 0) j["wall_ms"] = opt.wall_ms;
  return j.dump(2) + "\n";
}

std::string report_text(const Instance& inst, const SolveResult& result) {
  std::ostringstream out;
  out << "instance " << fingerprint_hex(inst.fingerprint()) << ": n=" << inst.n << " m=" << inst.edges.size()
      << " k=" << inst.k << " ell=" << inst.ell << " |S|=" << inst.terminals.size() << '\n';
  if (const auto* p = std::get_if<Packing>(&result.outcome)) {
    out << "outcome: packing of " << p->cycles.size() << " disjoint long S-cycles\n";
    for (const auto& c : p->cycles) {
      out << "  cycle (length " << c.length() << "):";
      for (Vertex v : c.vertices()) out << ' ' << v;
      out << '\n';
    }
  } else {
    const auto& x = std::get<HittingSet>(result.outcome).vertices;
    out << "outcome: hitting set of size " << x.size();
    if (result.shortcut) out << " (terminal set, |S| < k)";
    out << "\n ";
    for (Vertex v : x.members()) out << ' ' << v;
    out << '\n';
  }
  out << "bounds: s_k=" << s_threshold(inst.k) << " size_bound=" << hitting_set_bound(inst.k, inst.ell)
      << " iteration_cap=" << iteration_cap(inst.k, inst.terminals.size()) << '\n';
  out << "iterations: " << result.iterations << '\n';
  return out.str();
}

ParsedReport parse_report(const std::string& text) {
  ParsedReport out;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != kReportFormat) throw ReportError("not an scycle report");
    if (j.at("version").get<int>() != kReportVersion) throw ReportError("unsupported report version");
    const auto& inst = j.at("instance");
    const auto hex = inst.at("fingerprint").get<std::string>();
    std::size_t used = 0;
    out.fingerprint = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw ReportError("bad fingerprint '" + hex + "'");
    out.k = inst.at("k").get<int>();
    out.ell = inst.at("ell").get<int>();
    const auto kind = j.at("outcome").get<std::string>();
    if (kind == "packing") {
      out.packing = true;
      out.cycles = j.at("cycles").get<std::vector<std::vector<Vertex>>>();
    } else if (kind == "hitting_set") {
      out.hitting_set = j.at("hitting_set").get<std::vector<Vertex>>();
    } else {
      throw ReportError("unknown outcome '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace scycle
