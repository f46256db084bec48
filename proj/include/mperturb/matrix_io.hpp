#pragma once

// Text matrix formats. Lines starting with '#' (after optional whitespace)
// and blank lines are skipped; line numbers in errors count every physical
// line.
//
//   dense-text       first line "n", then n lines of n reals
//   coordinate-text  first line "n nnz", then nnz lines "i j value",
//                    1-based, unlisted entries zero, no duplicates

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "mperturb/matrix.hpp"

namespace mperturb {

enum class MatrixFormat { Dense, Coordinate };

std::optional<MatrixFormat> parse_format_name(std::string_view name);

// All read functions throw ParseError. With no format given it is detected
// from the token count of the header line.
Matrix read_matrix(std::istream& in, std::optional<MatrixFormat> format = std::nullopt);
Matrix read_matrix_file(const std::filesystem::path& path,
                        std::optional<MatrixFormat> format = std::nullopt);

// 17 significant digits, so read_matrix(write_dense(A)) == A.
void write_dense(std::ostream& out, const Matrix& a);
void write_coordinate(std::ostream& out, const Matrix& a);

}  // namespace mperturb
