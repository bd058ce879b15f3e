#include "pnc/table_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pnc/errors.hpp"

namespace pnc {

namespace {

constexpr const char* kRowsHeader = "n,sigma";
constexpr const char* kAugmentedHeader =
    "n,sigma,mertens_lo,mertens_hi,log_weight_lo,log_weight_hi,weight_lo,"
    "weight_hi";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc
                                 : std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::string read_all(const std::string& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("read failed: " + path);
  return std::move(buf).str();
}

void put_u64(std::string& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
  out.append(b, 8);
}

void put_double(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

std::uint64_t get_u64(const std::string& in, std::size_t pos) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= std::uint64_t(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  }
  return v;
}

double get_double(const std::string& in, std::size_t pos) {
  std::uint64_t bits = get_u64(in, pos);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

double parse_double_cell(const std::string& s, const std::string& path) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin) throw IoError("bad numeric cell in " + path);
  return v;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const char* header,
                                               std::size_t arity) {
  std::istringstream in(read_all(path, false));
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw IoError("table header mismatch in " + path);
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != arity) throw IoError("bad row arity in " + path);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

void write_rows(const std::vector<PracticalRow>& rows, const std::string& path,
                bool binary) {
  std::ofstream out = open_out(path, binary);
  if (binary) {
    std::string buf;
    buf.reserve(rows.size() * 16);
    for (const PracticalRow& r : rows) {
      put_u64(buf, r.n);
      put_u64(buf, r.sigma);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  } else {
    out << kRowsHeader << "\n";
    for (const PracticalRow& r : rows) {
      out << r.n << "," << r.sigma << "\n";
    }
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

std::vector<PracticalRow> read_rows(const std::string& path, bool binary) {
  std::vector<PracticalRow> rows;
  if (binary) {
    std::string data = read_all(path, true);
    if (data.size() % 16 != 0) throw IoError("truncated row dump: " + path);
    rows.reserve(data.size() / 16);
    for (std::size_t pos = 0; pos < data.size(); pos += 16) {
      rows.push_back({get_u64(data, pos), get_u64(data, pos + 8)});
    }
  } else {
    for (const auto& cells : read_csv(path, kRowsHeader, 2)) {
      rows.push_back({std::strtoull(cells[0].c_str(), nullptr, 10),
                      std::strtoull(cells[1].c_str(), nullptr, 10)});
    }
  }
  return rows;
}

void write_augmented_rows(const std::vector<AugmentedRow>& rows,
                          const std::string& path, bool binary) {
  std::ofstream out = open_out(path, binary);
  if (binary) {
    std::string buf;
    buf.reserve(rows.size() * 64);
    for (const AugmentedRow& r : rows) {
      put_u64(buf, r.row.n);
      put_u64(buf, r.row.sigma);
      put_double(buf, r.mertens.lo);
      put_double(buf, r.mertens.hi);
      put_double(buf, r.log_weight_sum.lo);
      put_double(buf, r.log_weight_sum.hi);
      put_double(buf, r.weight_sum.lo);
      put_double(buf, r.weight_sum.hi);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  } else {
    out << kAugmentedHeader << "\n";
    for (const AugmentedRow& r : rows) {
      out << r.row.n << "," << r.row.sigma << "," << fmt(r.mertens.lo) << ","
          << fmt(r.mertens.hi) << "," << fmt(r.log_weight_sum.lo) << ","
          << fmt(r.log_weight_sum.hi) << "," << fmt(r.weight_sum.lo) << ","
          << fmt(r.weight_sum.hi) << "\n";
    }
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

std::vector<AugmentedRow> read_augmented_rows(const std::string& path,
                                              bool binary) {
  std::vector<AugmentedRow> rows;
  if (binary) {
    std::string data = read_all(path, true);
    if (data.size() % 64 != 0) throw IoError("truncated augmented dump: " + path);
    rows.reserve(data.size() / 64);
    for (std::size_t pos = 0; pos < data.size(); pos += 64) {
      AugmentedRow r;
      r.row = {get_u64(data, pos), get_u64(data, pos + 8)};
      r.mertens = {get_double(data, pos + 16), get_double(data, pos + 24)};
      r.log_weight_sum = {get_double(data, pos + 32), get_double(data, pos + 40)};
      r.weight_sum = {get_double(data, pos + 48), get_double(data, pos + 56)};
      rows.push_back(r);
    }
  } else {
    for (const auto& cells : read_csv(path, kAugmentedHeader, 8)) {
      AugmentedRow r;
      r.row = {std::strtoull(cells[0].c_str(), nullptr, 10),
               std::strtoull(cells[1].c_str(), nullptr, 10)};
      r.mertens = {parse_double_cell(cells[2], path),
                   parse_double_cell(cells[3], path)};
      r.log_weight_sum = {parse_double_cell(cells[4], path),
                          parse_double_cell(cells[5], path)};
      r.weight_sum = {parse_double_cell(cells[6], path),
                      parse_double_cell(cells[7], path)};
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace pnc
