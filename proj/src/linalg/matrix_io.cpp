#include "spslice/linalg/matrix_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace spslice {

QMatrix parse_matrix(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("matrix file must contain an array of rows");
    const std::size_t rows = doc.size();
    const std::size_t cols = rows ? doc.front().size() : 0;
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = doc[r];
        if (!row.is_array() || row.size() != cols) throw ParseError("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = row[c];
            if (cell.is_string()) {
                m(r, c) = GaussRat::parse(cell.get<std::string>());
            } else if (cell.is_number_integer()) {
                m(r, c) = GaussRat(cell.get<long>());
            } else {
                throw ParseError("matrix entries must be scalar strings");
            }
        }
    }
    return m;
}

QMatrix read_matrix_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const QMatrix& m)
{
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        doc.push_back(row);
    }
    return doc.dump();
}

} // namespace spslice
