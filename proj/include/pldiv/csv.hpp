#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>

#include "pldiv/point_cloud.hpp"

namespace pldiv {

// Formats with 17 significant digits so a decimal round trip is exact.
std::string format_double(double v);

// One point per line, comma-separated decimals; lines starting with '#'
// and blank lines are skipped. Throws ParseError with the 1-based line
// number on ragged rows or malformed numbers.
PointCloud load_points_csv(const std::filesystem::path& path);

// Square numeric CSV in the same dialect; the caller validates semantics.
Eigen::MatrixXd load_matrix_csv(const std::filesystem::path& path);

void write_points_csv(const std::filesystem::path& path, const PointCloud& cloud,
                      const std::string& comment = "");

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m);

}  // namespace pldiv
