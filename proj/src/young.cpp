#include "ada/young.hpp"

#include <algorithm>
#include <numeric>

#include "ada/errors.hpp"

namespace ada {

namespace {

void check_columns(const std::vector<int>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 1)
            throw MalformedDiagram("column height " + std::to_string(cols[i]) +
                                   " is not positive");
        if (i + 1 < cols.size() && cols[i] < cols[i + 1])
            throw MalformedDiagram("column heights must be weakly decreasing");
    }
}

} // namespace

YoungDiagram::YoungDiagram(std::vector<int> columns) : cols_(std::move(columns)) {
    check_columns(cols_);
}

YoungDiagram YoungDiagram::from_rows(const std::vector<int>& rows) {
    check_columns(rows); // a row reading must itself be a partition
    if (rows.empty()) return {};
    // Conjugate partition: column c (1-based) has height #{rows >= c}.
    std::vector<int> cols(static_cast<std::size_t>(rows.front()), 0);
    for (int r : rows)
        for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
    return YoungDiagram(std::move(cols));
}

std::vector<int> YoungDiagram::rows() const {
    if (cols_.empty()) return {};
    std::vector<int> rows(static_cast<std::size_t>(cols_.front()), 0);
    for (int h : cols_)
        for (int r = 0; r < h; ++r) ++rows[static_cast<std::size_t>(r)];
    return rows;
}

std::string YoungDiagram::str() const {
    std::string out;
    for (std::size_t i = 0; i < cols_.size();) {
        std::size_t j = i;
        while (j < cols_.size() && cols_[j] == cols_[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(cols_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
    std::vector<int> cols;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseFailure("expected integer in diagram '" + text + "'");
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    while (pos < text.size()) {
        int h = read_int();
        int count = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            count = read_int();
            skip_ws();
        }
        for (int i = 0; i < count; ++i) cols.push_back(h);
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseFailure("expected ',' in diagram '" + text + "'");
            ++pos;
            skip_ws();
        }
    }
    return YoungDiagram(std::move(cols));
}

int rank(const YoungDiagram& y) {
    const auto& c = y.columns();
    return std::accumulate(c.begin(), c.end(), 0);
}

int first_column_height(const YoungDiagram& y) {
    return y.is_empty() ? 0 : y.columns().front();
}

YoungDiagram truncate(const YoungDiagram& y) {
    if (y.is_empty()) return y;
    return YoungDiagram(std::vector<int>(y.columns().begin() + 1, y.columns().end()));
}

YoungDiagram prepend_column(const YoungDiagram& y, int h) {
    if (h == 0) return y;
    if (h < 0)
        throw MalformedDiagram("cannot prepend a column of negative height " +
                               std::to_string(h));
    if (h < first_column_height(y))
        throw MalformedDiagram("prepended column of height " + std::to_string(h) +
                               " is shorter than the first column (" +
                               std::to_string(first_column_height(y)) + ")");
    std::vector<int> cols;
    cols.reserve(y.columns().size() + 1);
    cols.push_back(h);
    cols.insert(cols.end(), y.columns().begin(), y.columns().end());
    return YoungDiagram(std::move(cols));
}

YoungDiagram complement(const YoungDiagram& y, int box_height) {
    if (box_height < first_column_height(y))
        throw BoxTooSmall("box height " + std::to_string(box_height) +
                          " is smaller than the first column (" +
                          std::to_string(first_column_height(y)) + ")");
    std::vector<int> cols;
    cols.reserve(y.columns().size());
    for (auto it = y.columns().rbegin(); it != y.columns().rend(); ++it)
        if (box_height - *it > 0) cols.push_back(box_height - *it);
    return YoungDiagram(std::move(cols));
}

} // namespace ada
