#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quatrange/convex_region.hpp"
#include "quatrange/oracle.hpp"
#include "quatrange/qmatrix.hpp"
#include "quatrange/quat_nr.hpp"
#include "quatrange/shapes.hpp"

namespace quatrange {

/// Malformed matrix file.  line/column are 1-based; 0 means the position
/// could not be attributed (e.g. a structural error in a JSON document).
class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Parse {"n": int, "entries": [[quaternion-string, ...], ...]}.
QMatrix parse_matrix_json(const std::string& text);

/// Parse a plain-text grid: one matrix row per line, entries separated by
/// whitespace (so an entry like "1+2i-j" contains no spaces).  Blank lines
/// and lines starting with '#' are skipped.
QMatrix parse_matrix_grid(const std::string& text);

/// Dispatch on the first non-whitespace byte: '{' selects JSON, anything
/// else the grid format.
QMatrix parse_matrix_text(const std::string& text);

/// Read and parse a matrix file; throws MatrixParseError on bad content and
/// std::runtime_error when the file cannot be read.
QMatrix read_matrix_file(const std::string& path);

/// Serialize in the schema parse_matrix_json accepts; round-trips exactly.
std::string matrix_to_json(const QMatrix& A);

/// "re,im" header plus one vertex per row, shortest round-trip decimals.
std::string region_to_csv(const ConvexRegion& region);

/// {"kind": ..., "tol": ...} companion to region_to_csv.
std::string region_descriptor_json(const ConvexRegion& region);

/// Rebuild a region from region_to_csv and region_descriptor_json output.
ConvexRegion region_from_csv(const std::string& csv,
                             const std::string& descriptor_json);

/// "a0,a1,a2,a3" header plus one sampled point per row.
std::string cloud_to_csv(const SampleCloud& cloud);

/// Shape as JSON: always "tag", plus the parameters that tag uses; Ellipse
/// carries its region vertices and certificate.
std::string shape_to_json(const ShapeClass& shape);

/// One verification report as JSON.
std::string report_to_json(const OracleReport& report);

/// Reports as a JSON array, in input order.
std::string reports_to_json(const std::vector<OracleReport>& reports);

}  // namespace quatrange
