#include <algorithm>
#include <ostream>
#include <tuple>

#include <json.hpp>

#include "pathhom/cli.hpp"

namespace pathhom::cli {

const long long* ResultRecord::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) {
      return &value;
    }
  }
  return nullptr;
}

void sort_records(std::vector<ResultRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
    return std::tie(a.op, a.params, a.method) < std::tie(b.op, b.params, b.method);
  });
}

std::string csv_header() { return "op,n,k,j,method,value,elapsed_ns"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_param(const ResultRecord& r, std::string_view name) {
  const long long* v = r.param(name);
  return v ? std::to_string(*v) : std::string{};
}

} // namespace

void write_records(std::ostream& out, std::span<const ResultRecord> records, Format format) {
  switch (format) {
  case Format::Plain:
    for (const auto& r : records) {
      out << r.value << '\n';
    }
    break;
  case Format::Csv:
    out << csv_header() << '\n';
    for (const auto& r : records) {
      out << csv_field(r.op) << ',' << csv_param(r, "n") << ',' << csv_param(r, "k") << ','
          << csv_param(r, "j") << ',' << csv_field(r.method) << ',' << csv_field(r.value) << ','
          << r.elapsed_ns << '\n';
    }
    break;
  case Format::Json:
    for (const auto& r : records) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [key, value] : r.params) {
        params[key] = value;
      }
      nlohmann::ordered_json j;
      j["op"] = r.op;
      j["params"] = std::move(params);
      j["method"] = r.method;
      j["value"] = r.value;
      j["elapsed_ns"] = r.elapsed_ns;
      out << j.dump() << '\n';
    }
    break;
  }
}

} // namespace pathhom::cli
