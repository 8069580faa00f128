#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mqtc/distance_matrix.hpp"

namespace mqtc {

enum class MatrixFormat { csv, phylip, nexus };

std::string_view to_string(MatrixFormat f) noexcept;
std::optional<MatrixFormat> parse_matrix_format(std::string_view name) noexcept;

/// Guesses the format: "#NEXUS" header, a lone integer on the first line
/// (PHYLIP), otherwise CSV.
MatrixFormat detect_matrix_format(std::string_view text);

/// CSV: square block of numbers, comma separated, with an optional header row
/// of names (a leading empty cell is allowed) and optional row names in the
/// first column. Double-quoted fields are supported.
///
/// PHYLIP: the entry count, then one row per entry: a name followed by n
/// numbers (rows may wrap across lines).
///
/// Nexus: a DISTANCES block with TRIANGLE=BOTH|LOWER|UPPER,
/// DIAGONAL|NODIAGONAL and LABELS=LEFT|NO. Labels may also come from a TAXA
/// block.
///
/// Syntax errors throw parse_error with the line and column; a matrix that
/// is not a valid distance matrix throws invalid_input_error.
DistanceMatrix read_matrix(std::string_view text, MatrixFormat format);

/// Reads a file, detecting the format when none is given. Throws
/// invalid_input_error when the file cannot be read.
DistanceMatrix read_matrix_file(const std::filesystem::path& path,
                                std::optional<MatrixFormat> format = std::nullopt);

/// Values are written with 17 significant digits. PHYLIP rejects names
/// containing whitespace.
std::string write_matrix(const DistanceMatrix& dm, MatrixFormat format);

/// Decimal text with 17 significant digits; reads back as the same double.
std::string format_real(double value);

}  // namespace mqtc
