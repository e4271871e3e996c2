#include "pldiv/csv.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "pldiv/errors.hpp"

namespace pldiv {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    std::string token = line.substr(pos, comma - pos);
    const std::string where =
        "line " + std::to_string(line_no) + ", column " + std::to_string(row.size() + 1);
    // Trim surrounding whitespace (including a trailing \r).
    const auto first = token.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      throw ParseError(where + ": empty field");
    }
    const auto last = token.find_last_not_of(" \t\r");
    token = token.substr(first, last - first + 1);

    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      throw ParseError(where + ": malformed number '" + token + "'");
    }
    row.push_back(v);
    pos = comma + 1;
    if (comma == line.size()) break;
  }
  return row;
}

Eigen::MatrixXd load_numeric_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<double> row = parse_row(line, line_no);
    if (width == 0) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(width) + " columns, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("'" + path.string() + "' contains no data rows");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace

PointCloud load_points_csv(const std::filesystem::path& path) {
  return PointCloud(load_numeric_csv(path));
}

Eigen::MatrixXd load_matrix_csv(const std::filesystem::path& path) {
  return load_numeric_csv(path);
}

void write_points_csv(const std::filesystem::path& path, const PointCloud& cloud,
                      const std::string& comment) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  if (!comment.empty()) out << "# " << comment << "\n";
  const Eigen::MatrixXd& pts = cloud.points();
  for (Eigen::Index i = 0; i < pts.rows(); ++i) {
    for (Eigen::Index j = 0; j < pts.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(pts(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace pldiv
