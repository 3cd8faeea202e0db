#include "u5slopes/reports.hpp"

#include <sstream>

#include <json.hpp>

namespace u5s {

using nlohmann::json;

namespace {

json quarters_array(const std::vector<QuarterVal>& vals) {
  json arr = json::array();
  for (const auto& v : vals) arr.push_back(v.str());
  return arr;
}

}  // namespace

std::string to_json(const SlopeReport& rep) {
  json j;
  j["class"] = class_name(rep.cls);
  j["char"] = "a=" + std::to_string(rep.params.char_exponent);
  j["t"] = rep.params.t;
  j["n"] = rep.params.n;
  j["digits"] = rep.params.digits;
  json slopes = json::array();
  for (const auto& s : rep.slopes) slopes.push_back(s.str());
  j["slopes"] = slopes;
  j["certified"] = rep.certified;
  j["formula_match"] = rep.formula_match;
  return j.dump();
}

std::string to_json(const SerreReport& rep, const std::string& char_name) {
  json j;
  j["char"] = char_name;
  j["class"] = class_name(rep.cls);
  j["m_max"] = rep.m_max;
  j["condition_a_pass"] = rep.pass_a;
  j["condition_b_pass"] = rep.pass_b;
  json minors = json::array();
  for (const auto& m : rep.minors) {
    json row;
    row["m"] = m.m;
    row["expected"] = m.expected.str();
    row["unit_certificate"] = m.unit_cert;
    if (m.raw_val) row["raw_valuation"] = m.raw_val->str();
    row["pass"] = m.pass;
    minors.push_back(row);
  }
  j["minors"] = minors;
  json cols = json::array();
  for (const auto& c : rep.columns) {
    json row;
    row["j"] = c.j;
    row["min_valuation"] = c.min_val.str();
    row["min_rows"] = c.min_rows;
    row["pass"] = c.pass;
    cols.push_back(row);
  }
  j["columns"] = cols;
  return j.dump();
}

std::string to_json(const ValTableReport& rep) {
  json j;
  j["class"] = class_name(rep.cls);
  j["char"] = rep.char_name;
  j["pass"] = rep.pass;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json row;
    row["list"] = e.j == 0 ? std::string("u5_t5") : "column_" + std::to_string(e.j);
    row["computed"] = quarters_array(e.computed);
    json g = json::array();
    for (int q : e.golden_quarters) g.push_back(QuarterVal(q).str());
    row["golden"] = g;
    row["uniform_offset"] = e.uniform_offset;
    row["delta"] = QuarterVal(e.delta_quarters).str();
    row["match"] = e.match;
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump();
}

std::string to_json(const ClassifyReport& rep) {
  json j;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row;
    row["char"] = "a=" + std::to_string(r.exponent);
    row["annihilating_factor"] = r.annihilating_factor;
    row["slope_class"] = r.slope_class;
    row["coherent"] = r.coherent;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["coherent_count"] = rep.coherent_count;
  j["pass"] = rep.pass;
  return j.dump();
}

std::string to_json(const ClassicalSlopeList& rep) {
  json j;
  j["k"] = rep.k;
  j["char"] = rep.char_name;
  j["class"] = class_name(rep.cls);
  j["d"] = rep.d;
  json slopes = json::array();
  for (const auto& s : rep.slopes) slopes.push_back(s.str());
  j["slopes"] = slopes;
  return j.dump();
}

std::string to_csv(const ValTableReport& rep) {
  std::ostringstream os;
  os << "list,entry,computed,golden,match\n";
  for (const auto& e : rep.entries) {
    std::string name = e.j == 0 ? std::string("u5_t5") : "column_" + std::to_string(e.j);
    for (std::size_t i = 0; i < e.computed.size(); ++i) {
      std::string gold = i < e.golden_quarters.size() ? QuarterVal(e.golden_quarters[i]).str() : "";
      bool ok = i < e.golden_quarters.size() && !e.computed[i].is_infinite() &&
                e.computed[i].q == e.golden_quarters[i];
      os << name << "," << (i + 1) << "," << e.computed[i].str() << "," << gold << ","
         << (ok ? "yes" : "no") << "\n";
    }
  }
  return os.str();
}

std::string slopes_csv(const SlopeReport& rep) {
  std::ostringstream os;
  os << "i,slope,certified,formula\n";
  for (std::size_t i = 0; i < rep.slopes.size(); ++i) {
    os << (i + 1) << "," << rep.slopes[i].str() << ","
       << (static_cast<int>(i) < rep.certified ? "yes" : "no") << ","
       << slope_formula(static_cast<int>(i) + 1, rep.cls).str() << "\n";
  }
  return os.str();
}

}  // namespace u5s
