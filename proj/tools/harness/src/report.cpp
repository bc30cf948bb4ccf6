#include "qpt/harness/report.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace qpt::harness {

namespace {

using Json = nlohmann::ordered_json;

Json schedule_json(const ScheduleEcho& s) {
  return Json{{"m", s.m},
              {"steps", s.steps},
              {"rounds", s.rounds},
              {"predicted_total_calls", s.predicted_total_calls},
              {"guarantees_void", s.guarantees_void}};
}

Json distance_json(const DistanceEcho& d) {
  return Json{{"disagreements", d.disagreements},
              {"domain", d.domain},
              {"epsilon", static_cast<double>(d.disagreements) / static_cast<double>(d.domain)},
              {"witness", d.witness}};
}

std::string to_json(const ExperimentReport& r) {
  Json out;
  out["mode"] = to_string(r.mode);
  out["tester"] = to_string(r.tester);
  out["function"] = r.function;
  out["n"] = r.n;
  out["eps"] = r.eps ? Json(*r.eps) : Json(nullptr);
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  out["acceptance_rate"] = r.acceptance_rate;
  out["accepted"] = r.accepted;
  out["stderr"] = r.standard_error;
  out["mean_calls"] = r.mean_calls;
  out["total_calls"] = r.total_calls;
  out["schedule"] = r.schedule ? schedule_json(*r.schedule) : Json(nullptr);
  out["distance"] = Json{{"linear", distance_json(r.linear_distance)},
                         {"symmetric", distance_json(r.symmetric_distance)}};
  if (r.mode == Mode::kCampaign) {
    Json points = Json::array();
    for (const auto& p : r.campaign) {
      points.push_back(Json{{"eps", p.eps},
                            {"schedule", schedule_json(p.schedule)},
                            {"accepted", p.accepted},
                            {"acceptance_rate", p.acceptance_rate},
                            {"stderr", p.standard_error},
                            {"mean_calls", p.mean_calls},
                            {"accounting_identity", p.accounting_identity}});
    }
    out["campaign"] = std::move(points);
    out["slope"] = r.slope ? Json(*r.slope) : Json(nullptr);
    out["slope_band"] = Json::array({kSlopeBandLow, kSlopeBandHigh});
    out["slope_within_band"] = r.slope_within_band ? Json(*r.slope_within_band) : Json(nullptr);
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json item{{"trial", v.trial}, {"decision", v.decision}, {"accepted", v.accepted},
              {"calls", v.calls}, {"stage", v.stage}};
    if (r.mode == Mode::kCampaign) item["eps"] = v.eps;
    verdicts.push_back(std::move(item));
  }
  out["verdicts"] = std::move(verdicts);
  return out.dump(2) + "\n";
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "trial,decision,calls,stage\n";
  for (const auto& v : r.verdicts) {
    out << v.trial << ',' << v.decision << ',' << v.calls << ',' << v.stage << '\n';
  }
  // Json's number formatting keeps doubles round-trippable and stable.
  auto num = [](double x) { return Json(x).dump(); };
  out << "# aggregate: mode=" << to_string(r.mode) << " trials=" << r.verdicts.size()
      << " accepted=" << r.accepted << " acceptance_rate=" << num(r.acceptance_rate)
      << " stderr=" << num(r.standard_error) << " mean_calls=" << num(r.mean_calls)
      << " seed=" << r.seed
      << " distance_linear=" << r.linear_distance.disagreements << '/'
      << r.linear_distance.domain
      << " distance_symmetric=" << r.symmetric_distance.disagreements << '/'
      << r.symmetric_distance.domain;
  if (r.schedule) {
    out << " m=" << r.schedule->m << " steps=" << r.schedule->steps
        << " rounds=" << r.schedule->rounds;
  }
  if (r.slope) out << " slope=" << num(*r.slope);
  out << '\n';
  return out.str();
}

}  // namespace

std::string emit_report(const ExperimentReport& report, Format format) {
  return format == Format::kJson ? to_json(report) : to_csv(report);
}

void write_report(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw OutputError("failed writing to stdout");
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + *path + "' for writing");
  file << text;
  file.close();
  if (!file) throw OutputError("failed writing '" + *path + "'");
}

}  // namespace qpt::harness
