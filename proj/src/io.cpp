#include "chm/io.hpp"

#include <fstream>
#include <sstream>

#include "chm/errors.hpp"

namespace chm {

nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

namespace {

using nlohmann::json;

double number_field(const json& atom, const char* key, std::size_t index) {
  const auto it = atom.find(key);
  if (it == atom.end() || !it->is_number()) {
    throw InvalidDistribution("atom " + std::to_string(index) + ": missing numeric field \"" +
                              key + "\"");
  }
  return it->get<double>();
}

json value_to_json(const BoundReport::Value& value) {
  if (const auto* z = std::get_if<Complex>(&value)) return to_json(*z);
  return std::get<double>(value);
}

}  // namespace

FiniteDistribution parse_distribution(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidDistribution(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array()) {
    throw InvalidDistribution("expected an object with an \"atoms\" array");
  }
  std::vector<Atom> atoms;
  const auto& list = doc["atoms"];
  atoms.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& entry = list[i];
    if (!entry.is_object()) {
      throw InvalidDistribution("atom " + std::to_string(i) + ": expected an object");
    }
    atoms.push_back({{number_field(entry, "re", i), number_field(entry, "im", i)},
                     number_field(entry, "w", i)});
  }
  return FiniteDistribution(std::move(atoms));
}

FiniteDistribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidDistribution("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution(buffer.str());
}

json to_json(const FiniteDistribution& dist) {
  json atoms = json::array();
  for (const auto& atom : dist.atoms()) {
    atoms.push_back({{"re", atom.point.real()}, {"im", atom.point.imag()}, {"w", atom.weight}});
  }
  return {{"atoms", atoms}};
}

json to_json(const BoundReport& report) {
  json out = {{"name", to_string(report.name)},
              {"lhs", value_to_json(report.lhs)},
              {"rhs", value_to_json(report.rhs)},
              {"slack", report.slack},
              {"holds", report.holds},
              {"tol", report.tol},
              {"notes", report.notes}};
  if (report.refused) out["refused"] = true;
  if (!report.details.empty()) out["details"] = report.details;
  return out;
}

json to_json(const ExperimentResult& result) {
  return {{"n", result.n},
          {"seed", result.seed},
          {"arith", to_json(result.arith)},
          {"harm", to_json(result.harm)},
          {"target", to_json(result.target)},
          {"err_arith", result.err_arith},
          {"err_harm", result.err_harm},
          {"se_estimate", result.se_estimate}};
}

json to_json(const Region& region) {
  if (region.is_disk()) {
    return {{"kind", "disk"}, {"center", to_json(region.center())}, {"radius", region.radius()}};
  }
  return {{"kind", "half_plane"}, {"normal", to_json(region.normal())}, {"offset", region.offset()}};
}

json to_json(const CaseRecord& record) {
  json out = {{"index", record.index}, {"case_seed", record.case_seed},
              {"report", to_json(record.report)}};
  if (!record.atoms.empty()) {
    json atoms = json::array();
    for (const auto& atom : record.atoms) {
      atoms.push_back({{"re", atom.point.real()}, {"im", atom.point.imag()}, {"w", atom.weight}});
    }
    out["distribution"] = {{"atoms", atoms}};
  }
  if (!record.real_atoms.empty()) {
    json atoms = json::array();
    for (const auto& atom : record.real_atoms) {
      atoms.push_back({{"x", atom.point}, {"w", atom.weight}});
    }
    out["real_distribution"] = {{"atoms", atoms}};
  }
  if (record.direction) out["c"] = to_json(*record.direction);
  if (record.region) out["region"] = to_json(*record.region);
  if (record.two_point) {
    out["c1"] = to_json(record.two_point->first);
    out["c2"] = to_json(record.two_point->second);
  }
  return out;
}

json to_json(const SuiteSummary& summary) {
  json failures = json::array();
  for (const auto& failure : summary.failures) failures.push_back(to_json(failure));
  return {{"suite", to_string(summary.suite)},
          {"seed", summary.seed},
          {"cases", summary.cases},
          {"checks", summary.checks},
          {"passed", summary.passed},
          {"failed", summary.failed},
          {"refused", summary.refused},
          {"worst_slack", summary.worst_slack},
          {"max_equality_gap", summary.max_equality_gap},
          {"failures", failures}};
}

}  // namespace chm
