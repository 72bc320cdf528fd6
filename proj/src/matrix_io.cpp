#include "quatrange/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <complex>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace quatrange {

namespace {

using C = std::complex<double>;
using nlohmann::json;

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::pair<int, int> line_column_of(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t p = 0; p < byte && p < text.size(); ++p) {
    if (text[p] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string position_suffix(int line, int column) {
  if (line <= 0) return "";
  std::ostringstream os;
  os << " (line " << line << ", column " << column << ")";
  return os.str();
}

}  // namespace

MatrixParseError::MatrixParseError(const std::string& message, int line,
                                   int column)
    : std::runtime_error(message + position_suffix(line, column)),
      line_(line),
      column_(column) {}

QMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw MatrixParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }

  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw MatrixParseError("expected an object with \"n\" and \"entries\"", 0, 0);
  if (!doc["n"].is_number_integer())
    throw MatrixParseError("\"n\" must be an integer", 0, 0);
  const int n = doc["n"].get<int>();
  if (n < 1) throw MatrixParseError("\"n\" must be at least 1", 0, 0);

  const json& rows = doc["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw MatrixParseError("\"entries\" must be an array of n rows", 0, 0);

  std::vector<Quaternion> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw MatrixParseError("row " + std::to_string(r + 1) +
                                 " must be an array of n strings",
                             0, 0);
    for (int c = 0; c < n; ++c) {
      const json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_string())
        throw MatrixParseError("entry (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + ") must be a string",
                               0, 0);
      try {
        entries.push_back(parse_quaternion(cell.get<std::string>()));
      } catch (const ParseError& e) {
        throw MatrixParseError("entry (" + std::to_string(r + 1) + "," +
                                   std::to_string(c + 1) + "): " + e.what(),
                               0, 0);
      }
    }
  }
  return QMatrix::from_entries(n, std::move(entries));
}

QMatrix parse_matrix_grid(const std::string& text) {
  std::vector<std::vector<Quaternion>> rows;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size() || line[p] == '#') continue;

    std::vector<Quaternion> row;
    while (p < line.size()) {
      const std::size_t start = p;
      while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      const std::string token = line.substr(start, p - start);
      try {
        row.push_back(parse_quaternion(token));
      } catch (const ParseError& e) {
        throw MatrixParseError(e.what(), line_no,
                               static_cast<int>(start + e.offset()) + 1);
      }
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw MatrixParseError("row has " + std::to_string(row.size()) +
                                 " entries, expected " +
                                 std::to_string(rows.front().size()),
                             line_no, 1);
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw MatrixParseError("no matrix rows found", 1, 1);
  if (rows.size() != rows.front().size())
    throw MatrixParseError("matrix must be square: got " +
                               std::to_string(rows.size()) + " rows of " +
                               std::to_string(rows.front().size()) + " entries",
                           line_no, 1);

  const int n = static_cast<int>(rows.size());
  std::vector<Quaternion> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (auto& row : rows)
    for (auto& q : row) entries.push_back(q);
  return QMatrix::from_entries(n, std::move(entries));
}

QMatrix parse_matrix_text(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_matrix_json(text) : parse_matrix_grid(text);
  }
  throw MatrixParseError("empty matrix file", 1, 1);
}

QMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string matrix_to_json(const QMatrix& A) {
  json rows = json::array();
  for (int r = 0; r < A.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < A.dim(); ++c) row.push_back(to_string(A.at(r, c)));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = A.dim();
  doc["entries"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string region_to_csv(const ConvexRegion& region) {
  std::string out = "re,im\n";
  for (const C& v : region.vertices()) {
    out += format_double(v.real());
    out += ',';
    out += format_double(v.imag());
    out += '\n';
  }
  return out;
}

std::string region_descriptor_json(const ConvexRegion& region) {
  json doc;
  doc["kind"] = std::string(to_string(region.kind()));
  doc["tol"] = region.tol();
  return doc.dump(2) + "\n";
}

ConvexRegion region_from_csv(const std::string& csv,
                             const std::string& descriptor_json) {
  json doc;
  try {
    doc = json::parse(descriptor_json);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid region descriptor: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("tol"))
    throw std::runtime_error("region descriptor needs \"kind\" and \"tol\"");
  const std::string kind_name = doc["kind"].get<std::string>();
  RegionKind kind;
  if (kind_name == "point") kind = RegionKind::Point;
  else if (kind_name == "segment") kind = RegionKind::Segment;
  else if (kind_name == "polygon") kind = RegionKind::Polygon;
  else throw std::runtime_error("unknown region kind: " + kind_name);
  const double tol = doc["tol"].get<double>();

  std::vector<C> vertices;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      if (line != "re,im")
        throw std::runtime_error("region CSV must start with \"re,im\"");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("region CSV row lacks a comma: " + line);
    double re = 0.0;
    double im = 0.0;
    const char* b = line.data();
    auto r1 = std::from_chars(b, b + comma, re);
    auto r2 = std::from_chars(b + comma + 1, b + line.size(), im);
    if (r1.ec != std::errc{} || r1.ptr != b + comma || r2.ec != std::errc{} ||
        r2.ptr != b + line.size())
      throw std::runtime_error("region CSV row is not two numbers: " + line);
    vertices.emplace_back(re, im);
  }
  if (header) throw std::runtime_error("region CSV is empty");
  return ConvexRegion::from_vertices(kind, std::move(vertices), tol);
}

std::string cloud_to_csv(const SampleCloud& cloud) {
  std::string out = "a0,a1,a2,a3\n";
  for (const Quaternion& w : cloud.points) {
    out += format_double(w.a0);
    out += ',';
    out += format_double(w.a1);
    out += ',';
    out += format_double(w.a2);
    out += ',';
    out += format_double(w.a3);
    out += '\n';
  }
  return out;
}

std::string shape_to_json(const ShapeClass& shape) {
  json doc;
  doc["tag"] = std::string(to_string(shape.tag));
  switch (shape.tag) {
    case ShapeTag::Segment:
      doc["endpoint_a"] = {{"re", shape.endpoint_a.real()},
                           {"im", shape.endpoint_a.imag()}};
      doc["endpoint_b"] = {{"re", shape.endpoint_b.real()},
                           {"im", shape.endpoint_b.imag()}};
      break;
    case ShapeTag::PureDisk:
    case ShapeTag::QuaternionDisk:
      doc["center"] = shape.center;
      doc["radius"] = shape.radius;
      break;
    case ShapeTag::Ellipsoid4D:
      doc["center"] = shape.center;
      doc["semi_axis_re"] = shape.semi_axis_re;
      doc["semi_axis_im"] = shape.semi_axis_im;
      break;
    case ShapeTag::Ellipse: {
      doc["certificate"] = std::string(to_string(shape.certificate));
      json verts = json::array();
      for (const C& v : shape.region.vertices())
        verts.push_back({{"re", v.real()}, {"im", v.imag()}});
      doc["region"] = {{"kind", std::string(to_string(shape.region.kind()))},
                       {"vertices", std::move(verts)}};
      break;
    }
    case ShapeTag::Unclassified:
      break;
  }
  return doc.dump(2) + "\n";
}

namespace {

json report_json(const OracleReport& report) {
  json doc;
  doc["claim"] = report.claim;
  doc["matrix"] = report.matrix;
  doc["samples"] = report.samples;
  doc["seed"] = report.seed;
  doc["max_violation"] = report.max_violation;
  doc["pass"] = report.pass;
  doc["runtime_seconds"] = report.runtime_seconds;
  return doc;
}

}  // namespace

std::string report_to_json(const OracleReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<OracleReport>& reports) {
  json arr = json::array();
  for (const OracleReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace quatrange
