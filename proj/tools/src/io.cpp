#include "bellmatch/cli/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace bellmatch::cli {

using nlohmann::ordered_json;

PairedRun RunRecord::to_run() const {
  return PairedRun{RunSpec{theta_a, theta_b, a.size(), Seed{seed.value_or(0)}}, a, b};
}

RunRecord RunRecord::from_run(const PairedRun& run) {
  return RunRecord{run.spec.theta_a, run.spec.theta_b, run.spec.seed.value, run.a_list,
                   run.b_list};
}

std::string to_json(const RunRecord& record) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["theta_a"] = record.theta_a;
  j["theta_b"] = record.theta_b;
  j["n"] = record.n();
  if (record.seed) {
    j["seed"] = *record.seed;
  } else {
    j["seed"] = nullptr;
  }
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < record.n(); ++i) {
    pairs.push_back({value(record.a[i]), value(record.b[i])});
  }
  j["pairs"] = std::move(pairs);
  return j.dump() + "\n";
}

namespace {

const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("run record is missing '") + key + "'");
  return *it;
}

double angle_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_number()) throw FormatError(std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw FormatError(std::string("'") + key + "' must be finite");
  return d;
}

Outcome outcome_field(const ordered_json& v, std::size_t index) {
  if (!v.is_number_integer() || (v.get<long long>() != 1 && v.get<long long>() != -1)) {
    throw FormatError("pair " + std::to_string(index) + " holds a value other than +1/-1");
  }
  return outcome_from_int(v.get<long long>());
}

}  // namespace

RunRecord parse_run_record(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(std::string("run record is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("run record must be a JSON object");

  const ordered_json& version = field(j, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    throw FormatError("unsupported run record format_version");
  }
  RunRecord rec;
  rec.theta_a = angle_field(j, "theta_a");
  rec.theta_b = angle_field(j, "theta_b");

  const ordered_json& n = field(j, "n");
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) {
    throw FormatError("'n' must be a positive integer");
  }
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw FormatError("'seed' must be an unsigned integer");
    rec.seed = it->get<std::uint64_t>();
  }

  const ordered_json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw FormatError("'pairs' must be an array");
  if (pairs.size() != n.get<std::uint64_t>()) {
    throw FormatError("'pairs' has " + std::to_string(pairs.size()) + " entries but n = " +
                      std::to_string(n.get<std::uint64_t>()));
  }
  std::vector<Outcome> a;
  std::vector<Outcome> b;
  a.reserve(pairs.size());
  b.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ordered_json& p = pairs[i];
    if (!p.is_array() || p.size() != 2) {
      throw FormatError("pair " + std::to_string(i) + " must be a two-element array");
    }
    a.push_back(outcome_field(p[0], i));
    b.push_back(outcome_field(p[1], i));
  }
  rec.a = DataList(std::move(a));
  rec.b = DataList(std::move(b));
  return rec;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

RunRecord read_run_record(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_run_record(text);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_run_record(const std::filesystem::path& path, const RunRecord& record) {
  write_text(path, to_json(record));
}

DataList parse_list_text(std::string_view text) {
  std::vector<Outcome> items;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != ',' && text[j] != '#') {
      ++j;
    }
    std::string_view token = text.substr(i, j - i);
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidInput("list entry '" + std::string(text.substr(i, j - i)) +
                         "' is not +1 or -1");
    }
    items.push_back(outcome_from_int(v));
    i = j;
  }
  return DataList(std::move(items));
}

DataList read_list_file(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_list_text(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string format_ratio(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace bellmatch::cli
