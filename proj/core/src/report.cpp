#include "pnc/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnc/errors.hpp"

namespace pnc {

namespace {

constexpr const char* kCsvHeader =
    "N,J,alpha_N_lo,alpha_N_hi,eps_N_lo,eps_N_hi,U_N_lo,U_N_hi,"
    "A_NJ_lo,A_NJ_hi,Y_2NJ_lo,Y_2NJ_hi,E_2N,alpha_lo,alpha_hi,c_lo,c_hi,"
    "predicted_gap";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin) throw IoError("report field is not a number: " + s);
  return v;
}

std::vector<double> report_fields(const BoundsReport& r) {
  return {r.alpha_partial.lo,      r.alpha_partial.hi, r.tail_mass.lo,
          r.tail_mass.hi,          r.log_ratio_sum.lo, r.log_ratio_sum.hi,
          r.weight_term.lo,        r.weight_term.hi,   r.prime_weight_total.lo,
          r.prime_weight_total.hi, r.residual_sup,     r.alpha_lo,
          r.alpha_hi,              r.c_lo,             r.c_hi,
          r.predicted_gap};
}

BoundsReport from_fields(std::uint64_t n, int j, const std::vector<double>& f) {
  if (f.size() != 16) throw IoError("report has the wrong number of fields");
  BoundsReport r;
  r.n_max = n;
  r.weight_order = j;
  r.alpha_partial = {f[0], f[1]};
  r.tail_mass = {f[2], f[3]};
  r.log_ratio_sum = {f[4], f[5]};
  r.weight_term = {f[6], f[7]};
  r.prime_weight_total = {f[8], f[9]};
  r.residual_sup = f[10];
  r.alpha_lo = f[11];
  r.alpha_hi = f[12];
  r.c_lo = f[13];
  r.c_hi = f[14];
  r.predicted_gap = f[15];
  return r;
}

std::string serialize_json(const BoundsReport& r) {
  auto pair = [](const Interval& v) {
    return "{\"lo\": " + fmt(v.lo) + ", \"hi\": " + fmt(v.hi) + "}";
  };
  std::string out;
  out += "{\n";
  out += "  \"N\": " + std::to_string(r.n_max) + ",\n";
  out += "  \"J\": " + std::to_string(r.weight_order) + ",\n";
  out += "  \"alpha_N\": " + pair(r.alpha_partial) + ",\n";
  out += "  \"eps_N\": " + pair(r.tail_mass) + ",\n";
  out += "  \"U_N\": " + pair(r.log_ratio_sum) + ",\n";
  out += "  \"A_NJ\": " + pair(r.weight_term) + ",\n";
  out += "  \"Y_2NJ\": " + pair(r.prime_weight_total) + ",\n";
  out += "  \"E_2N\": " + fmt(r.residual_sup) + ",\n";
  out += "  \"alpha_lo\": " + fmt(r.alpha_lo) + ",\n";
  out += "  \"alpha_hi\": " + fmt(r.alpha_hi) + ",\n";
  out += "  \"c_lo\": " + fmt(r.c_lo) + ",\n";
  out += "  \"c_hi\": " + fmt(r.c_hi) + ",\n";
  out += "  \"predicted_gap\": " + fmt(r.predicted_gap) + "\n";
  out += "}\n";
  return out;
}

std::string serialize_csv(const BoundsReport& r) {
  std::string out = kCsvHeader;
  out += "\n";
  out += std::to_string(r.n_max) + "," + std::to_string(r.weight_order);
  for (double v : report_fields(r)) out += "," + fmt(v);
  out += "\n";
  return out;
}

std::string serialize_text(const BoundsReport& r) {
  auto pair = [](const Interval& v) {
    return "[" + fmt(v.lo) + ", " + fmt(v.hi) + "]";
  };
  std::string out;
  out += "N = " + std::to_string(r.n_max) + "\n";
  out += "J = " + std::to_string(r.weight_order) + "\n";
  out += "alpha_N = " + pair(r.alpha_partial) + "\n";
  out += "eps_N = " + pair(r.tail_mass) + "\n";
  out += "U_N = " + pair(r.log_ratio_sum) + "\n";
  out += "A_NJ = " + pair(r.weight_term) + "\n";
  out += "Y_2NJ = " + pair(r.prime_weight_total) + "\n";
  out += "E_2N = " + fmt(r.residual_sup) + "\n";
  out += "alpha_lo = " + fmt(r.alpha_lo) + "\n";
  out += "alpha_hi = " + fmt(r.alpha_hi) + "\n";
  out += "predicted_gap = " + fmt(r.predicted_gap) + "\n";
  out += "c in [" + fmt(r.c_lo) + ", " + fmt(r.c_hi) + "]\n";
  return out;
}

BoundsReport parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("report JSON is malformed: ") + e.what());
  }
  try {
    auto iv = [&](const char* key) {
      return Interval{doc.at(key).at("lo").get<double>(),
                      doc.at(key).at("hi").get<double>()};
    };
    BoundsReport r;
    r.n_max = doc.at("N").get<std::uint64_t>();
    r.weight_order = doc.at("J").get<int>();
    r.alpha_partial = iv("alpha_N");
    r.tail_mass = iv("eps_N");
    r.log_ratio_sum = iv("U_N");
    r.weight_term = iv("A_NJ");
    r.prime_weight_total = iv("Y_2NJ");
    r.residual_sup = doc.at("E_2N").get<double>();
    r.alpha_lo = doc.at("alpha_lo").get<double>();
    r.alpha_hi = doc.at("alpha_hi").get<double>();
    r.c_lo = doc.at("c_lo").get<double>();
    r.c_hi = doc.at("c_hi").get<double>();
    r.predicted_gap = doc.at("predicted_gap").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("report JSON misses a field: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

BoundsReport parse_csv(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  if (lines.size() < 2 || lines[0] != kCsvHeader) {
    throw IoError("report CSV header mismatch");
  }
  std::vector<std::string> cells = split(lines[1], ',');
  if (cells.size() != 18) throw IoError("report CSV row has the wrong arity");
  std::vector<double> fields;
  for (std::size_t i = 2; i < cells.size(); ++i) {
    fields.push_back(parse_double(cells[i]));
  }
  return from_fields(std::strtoull(cells[0].c_str(), nullptr, 10),
                     std::atoi(cells[1].c_str()), fields);
}

BoundsReport parse_text(const std::string& text) {
  std::uint64_t n = 0;
  int j = 0;
  std::vector<double> fields(16, 0.0);
  bool saw_c = false;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty()) continue;
    if (line.rfind("c in [", 0) == 0) {
      std::vector<std::string> ends = split(line.substr(6), ',');
      if (ends.size() != 2) throw IoError("report text c-line malformed");
      fields[13] = parse_double(ends[0]);
      fields[14] = parse_double(ends[1]);
      saw_c = true;
      continue;
    }
    std::size_t eq = line.find(" = ");
    if (eq == std::string::npos) throw IoError("report text line malformed: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 3);
    auto pair_at = [&](std::size_t slot) {
      std::vector<std::string> ends = split(value.substr(1), ',');
      if (value.empty() || value.front() != '[' || ends.size() != 2) {
        throw IoError("report text interval malformed: " + line);
      }
      fields[slot] = parse_double(ends[0]);
      fields[slot + 1] = parse_double(ends[1]);
    };
    if (key == "N") {
      n = std::strtoull(value.c_str(), nullptr, 10);
    } else if (key == "J") {
      j = std::atoi(value.c_str());
    } else if (key == "alpha_N") {
      pair_at(0);
    } else if (key == "eps_N") {
      pair_at(2);
    } else if (key == "U_N") {
      pair_at(4);
    } else if (key == "A_NJ") {
      pair_at(6);
    } else if (key == "Y_2NJ") {
      pair_at(8);
    } else if (key == "E_2N") {
      fields[10] = parse_double(value);
    } else if (key == "alpha_lo") {
      fields[11] = parse_double(value);
    } else if (key == "alpha_hi") {
      fields[12] = parse_double(value);
    } else if (key == "predicted_gap") {
      fields[15] = parse_double(value);
    } else {
      throw IoError("report text has an unknown key: " + key);
    }
  }
  if (n == 0 || !saw_c) throw IoError("report text is incomplete");
  return from_fields(n, j, fields);
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw ConfigError("unknown report format: " + name);
}

std::string report_serialize(const BoundsReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return serialize_json(report);
    case ReportFormat::csv:
      return serialize_csv(report);
    case ReportFormat::text:
      return serialize_text(report);
  }
  throw ConfigError("unknown report format");
}

BoundsReport report_parse(const std::string& text, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return parse_json(text);
    case ReportFormat::csv:
      return parse_csv(text);
    case ReportFormat::text:
      return parse_text(text);
  }
  throw ConfigError("unknown report format");
}

}  // namespace pnc
