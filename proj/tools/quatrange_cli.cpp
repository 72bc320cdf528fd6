// Command-line front end: numerical ranges of complex and quaternionic
// matrices, convexity certificates, closed-form shape classification,
// sampling, membership tests, and the self-verification suite.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatrange/complex_nr.hpp"
#include "quatrange/matrix_io.hpp"
#include "quatrange/oracle.hpp"
#include "quatrange/quat_nr.hpp"
#include "quatrange/shapes.hpp"

namespace {

using namespace quatrange;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write output file: " + path);
}

std::string describe_shape(const ShapeClass& s) {
  const auto num = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  };
  std::string out{to_string(s.tag)};
  switch (s.tag) {
    case ShapeTag::Segment:
      out += " [" + to_string(Quaternion{s.endpoint_a}) + ", " +
             to_string(Quaternion{s.endpoint_b}) + "]";
      break;
    case ShapeTag::PureDisk:
    case ShapeTag::QuaternionDisk:
      out += " center=" + num(s.center) + " radius=" + num(s.radius);
      break;
    case ShapeTag::Ellipsoid4D:
      out += " center=" + num(s.center) + " semi_axis_re=" + num(s.semi_axis_re) +
             " semi_axis_im=" + num(s.semi_axis_im);
      break;
    case ShapeTag::Ellipse:
      out += " (" + std::to_string(s.region.vertices().size()) +
             "-vertex complex range, certificate " +
             std::string(to_string(s.certificate)) + ")";
      break;
    case ShapeTag::Unclassified:
      break;
  }
  return out;
}

std::vector<OracleReport> run_suite(const std::string& suite, int angles,
                                    std::int64_t count, std::uint64_t seed,
                                    double tol) {
  std::vector<OracleReport> reports;
  const bool all = suite == "all";
  if (all || suite == "remark") reports.push_back(check_remark_disk(count, seed));
  if (all || suite == "chi") {
    GaussianStream stream(seed);
    for (int n = 2; n <= 4; ++n)
      reports.push_back(check_prop_chi(random_complex_matrix(n, stream), angles,
                                       count, seed + static_cast<std::uint64_t>(n),
                                       tol));
  }
  if (all || suite == "bild") {
    GaussianStream stream(seed + 1);
    for (int n = 2; n <= 4; ++n)
      reports.push_back(check_real_bild(random_real_matrix(n, stream), angles,
                                        count,
                                        seed + 10 + static_cast<std::uint64_t>(n),
                                        tol));
  }
  if (all || suite == "certificate") {
    GaussianStream stream(seed + 2);
    std::vector<QMatrix> batch;
    for (int n = 2; n <= 4; ++n) batch.push_back(random_real_matrix(n, stream));
    batch.push_back(QMatrix::diagonal({Quaternion::i(), 2.0 * Quaternion::i()}));
    reports.push_back(check_certificate_soundness(batch, angles, count, seed + 20, tol));
  }
  return reports;
}

int run(int argc, char** argv) {
  std::uint64_t default_seed = 42;
  if (const char* env = std::getenv("QUATRANGE_SEED")) {
    const std::string s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), default_seed);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      std::cerr << "error: QUATRANGE_SEED is not an unsigned integer: " << s << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Numerical ranges of complex and quaternionic matrices"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string out_path;
  std::string meta_path;
  std::string q_text;
  std::string suite = "all";
  int angles = 720;
  std::int64_t count = 100000;
  std::uint64_t seed = default_seed;
  double tol = 1e-7;
  bool as_json = false;

  CLI::App* cmd_boundary =
      app.add_subcommand("boundary", "Sweep the complex numerical range; emit vertex CSV");
  cmd_boundary->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_boundary->add_option("--angles", angles, "sweep directions (>= 16)")
      ->capture_default_str();
  cmd_boundary->add_option("--out", out_path, "CSV output path (default stdout)");
  cmd_boundary->add_option("--meta", meta_path, "also write a JSON region descriptor here");

  CLI::App* cmd_chi =
      app.add_subcommand("chi", "Emit the complex adjoint matrix chi(A) as JSON");
  cmd_chi->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_chi->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_certify =
      app.add_subcommand("certify", "Certify convexity of the quaternionic numerical range");
  cmd_certify->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_certify->add_option("--angles", angles, "sweep directions")->capture_default_str();
  cmd_certify->add_option("--tol", tol, "comparison tolerance")->capture_default_str();

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Closed-form shape of the quaternionic numerical range");
  cmd_classify->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_classify->add_option("--tol", tol, "structure detection tolerance")->capture_default_str();
  cmd_classify->add_option("--angles", angles, "sweep directions for swept shapes")
      ->capture_default_str();
  cmd_classify->add_flag("--json", as_json, "emit the full shape record as JSON");
  cmd_classify->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* cmd_sample =
      app.add_subcommand("sample", "Sample the quaternionic numerical range; emit CSV");
  cmd_sample->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_sample->add_option("--count", count, "number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_sample->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_sample->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI::App* cmd_member =
      app.add_subcommand("member", "Test quaternion membership for a real matrix");
  cmd_member->add_option("--matrix", matrix_path, "matrix file (JSON or grid)")->required();
  cmd_member->add_option("--q", q_text, "quaternion literal, e.g. \"1+2i-j+0.5k\"")->required();
  cmd_member->add_option("--angles", angles, "sweep directions")->capture_default_str();
  cmd_member->add_option("--tol", tol, "membership tolerance")->capture_default_str();

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "Run the self-verification suite");
  cmd_oracle->add_option("--suite", suite, "which checks to run")
      ->check(CLI::IsMember({"all", "remark", "chi", "bild", "certificate"}))
      ->capture_default_str();
  cmd_oracle->add_option("--angles", angles, "sweep directions")->capture_default_str();
  cmd_oracle->add_option("--count", count, "samples per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_oracle->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_oracle->add_option("--tol", tol, "containment tolerance")->capture_default_str();
  cmd_oracle->add_flag("--json", as_json, "emit reports as a JSON array");
  cmd_oracle->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*cmd_boundary) {
    const QMatrix A = read_matrix_file(matrix_path);
    const NRApprox nr = boundary(A, angles);
    write_output(out_path, region_to_csv(nr.region));
    if (!meta_path.empty()) write_output(meta_path, region_descriptor_json(nr.region));
    return kExitOk;
  }

  if (*cmd_chi) {
    const QMatrix A = read_matrix_file(matrix_path);
    write_output(out_path, matrix_to_json(chi(A)));
    return kExitOk;
  }

  if (*cmd_certify) {
    const QMatrix A = read_matrix_file(matrix_path);
    const Certificate cert = certify_convexity(A, angles, tol);
    std::cout << to_string(cert) << "\n";
    return cert == Certificate::Certified ? kExitOk : kExitNegative;
  }

  if (*cmd_classify) {
    const QMatrix A = read_matrix_file(matrix_path);
    const ShapeClass shape = classify(A, tol, angles);
    write_output(out_path, as_json ? shape_to_json(shape) : describe_shape(shape) + "\n");
    return kExitOk;
  }

  if (*cmd_sample) {
    const QMatrix A = read_matrix_file(matrix_path);
    write_output(out_path, cloud_to_csv(sample(A, count, seed)));
    return kExitOk;
  }

  if (*cmd_member) {
    const QMatrix A = read_matrix_file(matrix_path);
    Quaternion q;
    try {
      q = parse_quaternion(q_text);
    } catch (const ParseError& e) {
      std::cerr << "error: bad quaternion literal at offset " << e.offset()
                << ": " << e.what() << "\n";
      return kExitUsage;
    }
    const bool in = member_real(A, q, angles, tol);
    std::cout << (in ? "member" : "non-member") << "\n";
    return in ? kExitOk : kExitNegative;
  }

  // oracle
  const std::vector<OracleReport> reports = run_suite(suite, angles, count, seed, tol);
  bool all_pass = true;
  for (const OracleReport& r : reports) all_pass = all_pass && r.pass;
  if (as_json) {
    write_output(out_path, reports_to_json(reports));
  } else {
    std::string text;
    for (const OracleReport& r : reports) {
      text += r.pass ? "PASS  " : "FAIL  ";
      text += r.claim + "  [" + r.matrix + "]  max_violation=";
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof(buf), r.max_violation);
      text.append(buf, res.ptr);
      text += "\n";
    }
    write_output(out_path, text);
  }
  return all_pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MatrixParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
