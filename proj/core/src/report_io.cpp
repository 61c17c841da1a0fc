#include "fibfield/report_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace fibfield {

using nlohmann::json;

namespace {

json hit_to_json(std::uint64_t p, const ScanHit& h) {
  json f = json::array();
  for (const auto& [prime, k] : h.factorization) f.push_back({prime, k});
  json j = {{"p", p},
            {"n", h.n},
            {"degree", h.degree},
            {"factorization", f},
            {"palindromic", true},
            {"trivial", h.trivial},
            {"flagged", h.flagged}};
  j["family"] = h.family ? json(*h.family) : json(nullptr);
  return j;
}

}  // namespace

std::string scan_report_to_jsonl(const ScanReport& report) {
  std::ostringstream os;
  for (const auto& h : report.factored_hits) os << hit_to_json(report.p, h).dump() << '\n';
  json summary = {{"p", report.p},
                  {"n_max", report.n_max},
                  {"hit_count", report.hits.size()},
                  {"nontrivial_hits", report.nontrivial_hits()},
                  {"flagged_hits", report.flagged_hits()}};
  os << json{{"summary", summary}}.dump() << '\n';
  return os.str();
}

ScanReport scan_report_from_jsonl(std::string_view text) {
  ScanReport report;
  bool have_summary = false;
  std::istringstream is{std::string(text)};
  std::string line;
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      if (j.contains("summary")) {
        const auto& s = j.at("summary");
        report.p = s.at("p").get<std::uint64_t>();
        report.n_max = s.at("n_max").get<std::uint64_t>();
        have_summary = true;
        continue;
      }
      ScanHit h;
      h.n = j.at("n").get<std::uint64_t>();
      h.degree = j.at("degree").get<std::uint64_t>();
      for (const auto& pair : j.at("factorization")) {
        h.factorization.emplace_back(pair.at(0).get<std::uint64_t>(), pair.at(1).get<unsigned>());
      }
      h.trivial = j.at("trivial").get<bool>();
      h.flagged = j.at("flagged").get<bool>();
      if (!j.at("family").is_null()) h.family = j.at("family").get<std::string>();
      report.hits.push_back(h.n);
      report.factored_hits.push_back(std::move(h));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scan_report_from_jsonl: ") + e.what());
  }
  if (!have_summary) throw std::invalid_argument("scan_report_from_jsonl: missing summary line");
  return report;
}

std::string render_value(const FqElem& a) {
  if (a.code() < a.ctx().p()) return std::to_string(a.code());
  return "\"" + to_string(a) + "\"";
}

std::string moment_series_to_csv(const MomentSeries& s) {
  std::ostringstream os;
  os << "# q=" << s.ctx->q() << " p=" << s.ctx->p() << " e=" << s.ctx->e() << " case=" << to_string(s.tag)
     << " period=" << s.period << '\n';
  os << "n,d_recur,d_oracle,agree\n";
  for (std::uint64_t n = 1; n <= s.period; ++n) {
    os << n << ',' << render_value(s.d_recur[n]) << ',' << render_value(s.d_oracle[n]) << ','
       << (s.agree[n] ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string even_q_report_to_jsonl(const EvenQReport& r) {
  std::ostringstream os;
  json head = {{"q", r.ctx->q()}, {"power", r.power}, {"period", r.period}, {"periodic", r.periodic},
               {"generating_identity_holds", r.generating_identity_holds},
               {"otherwise_zero_violations", r.otherwise_zero_violations}};
  if (r.matches_first_moment) head["matches_first_moment"] = *r.matches_first_moment;
  os << json{{"even_q", head}}.dump() << '\n';
  for (std::uint64_t n = 1; n <= r.period; ++n) {
    os << json{{"n", n}, {"d", to_string(r.d[n])}}.dump() << '\n';
  }
  for (const auto& id : r.identities) {
    os << json{{"identity", id.name}, {"lhs", to_string(id.lhs)}, {"rhs", to_string(id.rhs)}, {"holds", id.holds}}
              .dump()
       << '\n';
  }
  for (const auto& t : r.generating_terms) {
    os << json{{"z_power", t.power}, {"lhs", to_string(t.lhs)}, {"rhs", to_string(t.rhs)}, {"holds", t.holds}}.dump()
       << '\n';
  }
  return os.str();
}

}  // namespace fibfield
