#include "irr/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "irr/dependent.hpp"
#include "irr/errors.hpp"
#include "irr/parser.hpp"

namespace irr {

namespace {

using Clock = std::chrono::steady_clock;

void add_place(std::vector<Place>& places, const Place& p) {
  if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
}

PlaceValue dependent_value(const ImageCurve& image, const GenericFiberChi& chi, const Place& place) {
  int germ = dependent_germ(image.W, place);
  return {place, -chi.chi * germ, germ, 0};
}

PlaceValue independent_value(const MPoly& R, const InfinityValue& inf, const Place& place) {
  if (place.is_infinity()) return {place, inf.ir, inf.delta1_affine + inf.delta1_boundary, inf.delta2};
  int d = delta1_finite_germ(R, place);
  return {place, d, d, 0};
}

void run_oracle(Report& report, const MPoly& f, const MPoly& g, const AnalyzeOptions& options) {
  if (report.g_constant) {
    report.oracle = std::vector<OracleComparison>{};
    report.oracle_error = "skipped: g is constant";
    return;
  }
  std::vector<Place> places;
  for (const auto& pv : report.finite_places) add_place(places, pv.place);
  for (const auto& pv : report.at) add_place(places, pv.place);
  add_place(places, Place::infinity());
  OracleOptions oo;
  oo.seed = options.seed;
  oo.rho_magnitude = options.rho_magnitude;
  report.oracle_rho_magnitude = options.rho_magnitude;
  try {
    std::vector<OracleComparison> rows;
    for (const auto& ov : oracle_irregularity(f, g, places, oo)) {
      OracleComparison row;
      row.place = ov.place;
      row.symbolic = report.ir_at(ov.place);
      row.chi = ov.chi;
      row.ir = ov.ir;
      row.stable = ov.stable;
      row.agrees = ov.stable && ov.ir == row.symbolic;
      row.per_seed = ov.per_seed;
      rows.push_back(std::move(row));
    }
    report.oracle = std::move(rows);
  } catch (const Error& e) {
    report.oracle = std::vector<OracleComparison>{};
    report.oracle_error = e.what();
  }
}

}  // namespace

bool Report::oracle_agrees() const {
  if (!oracle) return true;
  if (g_constant) return true;
  if (!oracle_error.empty()) return false;
  return std::all_of(oracle->begin(), oracle->end(), [](const auto& row) { return row.agrees; });
}

int Report::ir_at(const Place& place) const {
  if (place.is_infinity()) return infinity.ir;
  for (const auto& pv : at) {
    if (pv.place == place) return pv.ir;
  }
  for (const auto& pv : finite_places) {
    if (pv.place == place) return pv.ir;
  }
  return 0;
}

Report analyze(const MPoly& f, const MPoly& g, const AnalyzeOptions& options) {
  auto start = Clock::now();
  if (f.is_constant()) throw DegenerateInput("f is constant: there is no map to a curve");
  Report report;
  report.f = f.to_string();
  report.g = g.to_string();
  report.seed = options.seed;
  report.g_constant = g.is_constant();

  MPoly jac = jacobian(f, g);
  report.dependent = dependence_test(jac);
  if (report.dependent) {
    ImageCurve image = image_curve(f, g, options.seed);
    GenericFiberChi chi = chi_generic_fiber(f, g, options.seed);
    report.image_curve = image.W;
    report.chi_f = chi.chi;
    for (const auto& [place, germ] : dependent_finite_germs(image.W)) {
      if (germ * chi.chi != 0) report.finite_places.push_back({place, -chi.chi * germ, germ, 0});
    }
    int germ_inf = dependent_germ(image.W, Place::infinity());
    report.infinity = {-chi.chi * germ_inf, germ_inf, 0, 0};
    for (const auto& p : options.at) report.at.push_back(dependent_value(image, chi, p));
  } else {
    PushforwardOptions po;
    po.seed = options.seed;
    PushforwardPoly push = pushforward_polynomial(f, g, jac, po);
    Resolution res = resolve(f, g);
    report.finite_places = profile_finite(push.R);
    report.infinity = irregularity_at_infinity(push.R, res);
    for (const auto& p : options.at) report.at.push_back(independent_value(push.R, report.infinity, p));
    report.pushforward = std::move(push);
    if (options.keep_resolution) report.resolution = std::move(res);
  }
  if (options.oracle) run_oracle(report, f, g, options);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

namespace {

nlohmann::json place_value_json(const PlaceValue& pv) {
  return {{"place", pv.place.to_string()}, {"ir", pv.ir}, {"delta1", pv.delta1}, {"delta2", pv.delta2}};
}

nlohmann::json fraction_json(const MPoly& num, const MPoly& den) {
  return {{"num", num.to_string()}, {"den", den.to_string()}};
}

}  // namespace

nlohmann::json resolution_to_json(const Resolution& resolution) {
  nlohmann::json charts = nlohmann::json::array();
  for (const auto& c : resolution.charts) {
    charts.push_back({{"id", c.id},
                      {"parent", c.parent},
                      {"kind", c.kind},
                      {"field", c.field},
                      {"x", fraction_json(c.x_num, c.x_den)},
                      {"y", fraction_json(c.y_num, c.y_den)},
                      {"history", c.history}});
  }
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& z : resolution.components) {
    nlohmann::json j = {{"id", z.id},
                        {"parent", z.parent},
                        {"chart", z.chart},
                        {"depth", z.depth},
                        {"field", z.field},
                        {"weight", z.weight},
                        {"center", z.center},
                        {"f_infinite", z.f_infinite},
                        {"g_infinite", z.g_infinite},
                        {"f_constant", z.f_constant},
                        {"g_constant", z.g_constant},
                        {"pole_f", z.pole_f},
                        {"pole_g", z.pole_g},
                        {"crit_mult", z.crit_mult},
                        {"germ", z.germ},
                        {"contributes", z.contributes},
                        {"note", z.note}};
    if (!z.f_infinite) j["f"] = fraction_json(z.f_num, z.f_den);
    if (!z.g_infinite) j["g"] = fraction_json(z.g_num, z.g_den);
    if (z.image) j["image"] = z.image->to_string();
    comps.push_back(std::move(j));
  }
  return {{"blowups", resolution.blowups}, {"charts", charts}, {"components", comps}};
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = {{"f", report.f}, {"g", report.g}, {"seed", report.seed}};
  j["dependent"] = report.dependent;
  if (report.chi_f) j["chiF"] = *report.chi_f;
  j["finite_places"] = nlohmann::json::array();
  for (const auto& pv : report.finite_places) j["finite_places"].push_back(place_value_json(pv));
  j["infinity"] = {{"ir", report.infinity.ir},
                   {"delta1_affine", report.infinity.delta1_affine},
                   {"delta1_boundary", report.infinity.delta1_boundary},
                   {"delta2", report.infinity.delta2}};
  if (!report.at.empty()) {
    j["at"] = nlohmann::json::array();
    for (const auto& pv : report.at) j["at"].push_back(place_value_json(pv));
  }
  if (report.pushforward) {
    const auto& p = *report.pushforward;
    j["pushforward"] = {{"R", p.R.to_string()},
                        {"deg_s_bound", p.deg_s_bound},
                        {"deg_t_bound", p.deg_t_bound},
                        {"generic_dim", p.generic_dim},
                        {"samples", p.samples_used.size()},
                        {"validation_samples", p.validation_samples.size()},
                        {"escalated", p.escalated}};
  }
  if (report.image_curve) j["image_curve"] = report.image_curve->to_string();
  if (report.oracle) {
    j["oracle"] = nlohmann::json::array();
    for (const auto& row : *report.oracle) {
      j["oracle"].push_back({{"place", row.place.to_string()},
                             {"chi", row.chi},
                             {"ir", row.ir},
                             {"symbolic", row.symbolic},
                             {"agrees", row.agrees},
                             {"stable", row.stable},
                             {"per_seed", row.per_seed}});
    }
    if (!report.oracle_error.empty()) j["oracle_note"] = report.oracle_error;
    j["oracle_heuristics"] = {{"heuristic", true},
                              {"bounded_rel", OracleThresholds::bounded_rel},
                              {"big_rel", OracleThresholds::big_rel},
                              {"eta", OracleThresholds::eta},
                              {"far_ratios", {OracleThresholds::far_ratio, OracleThresholds::far_ratio_alt}},
                              {"nudge", OracleThresholds::nudge},
                              {"bounded_exponent", OracleThresholds::bounded_exponent},
                              {"escaping_exponent", OracleThresholds::escaping_exponent},
                              {"rho_magnitude", report.oracle_rho_magnitude}};
  }
  if (report.resolution) j["resolution"] = resolution_to_json(*report.resolution);
  j["timing"] = {{"total_ms", report.elapsed_ms}};
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  auto line = [&](const PlaceValue& pv) {
    os << "  " << pv.place.to_string() << ": ir " << pv.ir << " (delta1 " << pv.delta1 << ", delta2 " << pv.delta2
       << ")\n";
  };
  os << "f = " << report.f << "\n";
  os << "g = " << report.g << "\n";
  os << "pair: " << (report.dependent ? "dependent" : "independent") << "\n";
  if (report.chi_f) os << "chi of the generic fibre: " << *report.chi_f << "\n";
  if (report.image_curve) os << "image curve: " << report.image_curve->to_string() << " = 0\n";
  if (report.pushforward) os << "critical image: " << report.pushforward->R.to_string() << " = 0\n";
  os << "finite places with nonzero irregularity:";
  if (report.finite_places.empty()) os << " none";
  os << "\n";
  for (const auto& pv : report.finite_places) line(pv);
  const auto& inf = report.infinity;
  os << "infinity: ir " << inf.ir << " (affine " << inf.delta1_affine << ", boundary " << inf.delta1_boundary
     << ", delta2 " << inf.delta2 << ")\n";
  if (!report.at.empty()) {
    os << "requested places:\n";
    for (const auto& pv : report.at) line(pv);
  }
  if (report.oracle) {
    os << "oracle (heuristic thresholds, not certified):";
    if (!report.oracle_error.empty()) os << " " << report.oracle_error;
    os << "\n";
    for (const auto& row : *report.oracle) {
      os << "  " << row.place.to_string() << ": oracle ir " << row.ir << ", symbolic " << row.symbolic
         << (row.agrees ? ", agrees" : ", DISAGREES") << (row.stable ? "" : " (unstable across rho)") << "\n";
    }
  }
  return os.str();
}

bool json_fragment_matches(const nlohmann::json& expected, const nlohmann::json& actual, const std::string& path,
                           std::vector<std::string>& diff) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      diff.push_back(path + ": expected an object, got " + actual.dump());
      return false;
    }
    bool ok = true;
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        diff.push_back(path + "/" + key + ": missing");
        ok = false;
        continue;
      }
      ok = json_fragment_matches(value, actual.at(key), path + "/" + key, diff) && ok;
    }
    return ok;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      diff.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ok = json_fragment_matches(expected[i], actual[i], path + "/" + std::to_string(i), diff) && ok;
    }
    return ok;
  }
  if (expected != actual) {
    diff.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
    return false;
  }
  return true;
}

namespace {

struct CorpusEntry {
  std::string name;
  MPoly f;
  MPoly g;
  AnalyzeOptions options;
  nlohmann::json expected;
};

CorpusEntry parse_entry(const std::string& line, int line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("f") || !j.contains("g") || !j["f"].is_string() || !j["g"].is_string() ||
      !j.contains("expected") || !j["expected"].is_object()) {
    throw ParseError("corpus line " + std::to_string(line_no) + ": needs string f, g and an expected object", 0);
  }
  CorpusEntry e;
  e.name = j.value("name", "line " + std::to_string(line_no));
  e.f = parse_poly(j["f"].get<std::string>());
  e.g = parse_poly(j["g"].get<std::string>());
  e.options.seed = j.value("seed", std::uint64_t{0});
  e.options.oracle = j.value("oracle", false);
  if (j.contains("at")) {
    for (const auto& p : j["at"]) e.options.at.push_back(Place::parse(p.get<std::string>()));
  }
  e.expected = j["expected"];
  return e;
}

// Analyzes one entry; analysis errors become failures rather than aborting the run.
std::pair<bool, std::string> check_entry(const CorpusEntry& e) {
  try {
    Report r = analyze(e.f, e.g, e.options);
    std::vector<std::string> diff;
    bool ok = json_fragment_matches(e.expected, to_json(r), "", diff);
    if (ok && e.options.oracle && !r.oracle_agrees()) {
      ok = false;
      diff.push_back("oracle disagrees: " + to_json(r)["oracle"].dump());
    }
    std::string msg = e.name;
    for (const auto& d : diff) msg += "\n    " + d;
    return {ok, msg};
  } catch (const std::exception& ex) {
    return {false, e.name + "\n    error: " + ex.what()};
  }
}

}  // namespace

CorpusSummary run_corpus_lines(const std::vector<std::string>& lines) {
  CorpusSummary summary;
  std::vector<CorpusEntry> entries;
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    entries.push_back(parse_entry(line, line_no));
  }
  summary.entries = static_cast<int>(entries.size());
  if (entries.empty()) {
    summary.warnings.push_back("corpus is empty");
    return summary;
  }
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::pair<bool, std::string>> results(entries.size());
  for (std::size_t base = 0; base < entries.size(); base += workers) {
    std::vector<std::future<std::pair<bool, std::string>>> batch;
    for (std::size_t i = base; i < std::min(entries.size(), base + workers); ++i) {
      batch.push_back(std::async(std::launch::async, check_entry, std::cref(entries[i])));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) results[base + k] = batch[k].get();
  }
  for (const auto& [ok, msg] : results) {
    if (ok) {
      ++summary.passed;
    } else {
      summary.failures.push_back(msg);
    }
  }
  return summary;
}

CorpusSummary run_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus " + path, 0);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return run_corpus_lines(lines);
}

}  // namespace irr
