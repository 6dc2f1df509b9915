#ifndef SPSLICE_LINALG_MATRIX_IO_HPP
#define SPSLICE_LINALG_MATRIX_IO_HPP

#include "spslice/linalg/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace spslice {

/// Matrix text format: a JSON array of rows, each row an array of scalar
/// strings in GaussRat textual form, e.g. [["0","1"],["-1/2+i","0"]].
/// Throws ParseError on malformed input.
QMatrix parse_matrix(std::string_view text);
QMatrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const QMatrix& m);

} // namespace spslice

#endif
