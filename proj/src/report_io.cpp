#include "resdet/report_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "resdet/error.hpp"

namespace resdet {

using nlohmann::json;

namespace {

json to_json(const CheckReport& r) {
  json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["claim"] = std::string(claim_name(r.claim));
  j["status"] = std::string(status_name(r.status));
  json w = json::object();
  for (const auto& [name, value] : r.witnesses) w[name] = value.get_str();
  j["witnesses"] = std::move(w);
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.g) j["g"] = *r.g;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("record lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("record field \"") + key + "\": " + e.what());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_jsonl_line(const CheckReport& r) { return to_json(r).dump(); }

CheckReport parse_jsonl_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON record: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("record is not a JSON object");

  CheckReport r;
  r.p = required<std::uint64_t>(j, "p");
  r.k = required<std::uint64_t>(j, "k");
  const auto claim = required<std::string>(j, "claim");
  const auto id = parse_claim(claim);
  if (!id) throw InvalidArgument("unknown claim id \"" + claim + "\"");
  r.claim = *id;
  const auto status = required<std::string>(j, "status");
  const auto st = parse_status(status);
  if (!st) throw InvalidArgument("unknown status \"" + status + "\"");
  r.status = *st;
  r.elapsed_ms = required<std::int64_t>(j, "elapsed_ms");

  const json& w = j.contains("witnesses") ? j.at("witnesses") : json();
  if (!w.is_object()) throw InvalidArgument("record lacks a \"witnesses\" object");
  for (const auto& [name, value] : w.items()) {
    if (!value.is_string()) throw InvalidArgument("witness \"" + name + "\" is not a string");
    BigInt v;
    if (v.set_str(value.get<std::string>(), 10) != 0) {
      throw InvalidArgument("witness \"" + name + "\" is not a decimal integer");
    }
    r.witnesses.emplace(name, std::move(v));
  }
  if (j.contains("g")) r.g = required<std::uint64_t>(j, "g");
  if (j.contains("detail")) r.detail = required<std::string>(j, "detail");
  return r;
}

std::vector<CheckReport> read_jsonl(std::istream& in) {
  std::vector<CheckReport> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_jsonl_line(line));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string canonical_line(const CheckReport& r) {
  CheckReport copy = r;
  copy.elapsed_ms = 0;
  return to_jsonl_line(copy);
}

void sort_canonical(std::vector<CheckReport>& reports) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) keys.emplace_back(canonical_line(reports[i]), i);
  std::vector<std::size_t> order(reports.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = reports[a];
    const auto& y = reports[b];
    if (x.p != y.p) return x.p < y.p;
    if (x.k != y.k) return x.k < y.k;
    if (x.claim != y.claim) return static_cast<int>(x.claim) < static_cast<int>(y.claim);
    return keys[a].first < keys[b].first;
  });
  std::vector<CheckReport> sorted;
  sorted.reserve(reports.size());
  for (std::size_t i : order) sorted.push_back(std::move(reports[i]));
  reports = std::move(sorted);
}

std::string csv_number(const BigInt& v) {
  std::string s = v.get_str();
  const std::size_t sign = (!s.empty() && s[0] == '-') ? 1 : 0;
  const std::size_t digits = s.size() - sign;
  if (digits <= kCsvDigits) return s;
  return s.substr(0, sign + kCsvDigits) + "...[+" + std::to_string(digits - kCsvDigits) +
         " digits]";
}

void write_csv(std::ostream& out, const std::vector<CheckReport>& reports) {
  std::set<std::string> names;
  for (const auto& r : reports)
    for (const auto& [name, _] : r.witnesses) names.insert(name);

  out << "p,k,claim,status,elapsed_ms,g,detail";
  for (const auto& n : names) out << ',' << csv_escape(n);
  out << '\n';
  for (const auto& r : reports) {
    out << r.p << ',' << r.k << ',' << claim_name(r.claim) << ',' << status_name(r.status) << ','
        << r.elapsed_ms << ',' << (r.g ? std::to_string(*r.g) : "") << ','
        << csv_escape(r.detail);
    for (const auto& n : names) {
      out << ',';
      auto it = r.witnesses.find(n);
      if (it != r.witnesses.end()) out << csv_number(it->second);
    }
    out << '\n';
  }
}

}  // namespace resdet
