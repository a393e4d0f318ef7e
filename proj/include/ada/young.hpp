#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ada {

// Young diagram in the bracket-as-column-heights convention: a weakly
// decreasing list of positive column heights, possibly empty. [h, Y]
// prepends a column of height h, [N] is a single column of height N
// (trivial unipotent monodromy of rank N).
class YoungDiagram {
public:
    YoungDiagram() = default;

    // Validates weak decrease and positivity; throws MalformedDiagram.
    explicit YoungDiagram(std::vector<int> columns);

    static YoungDiagram empty() { return YoungDiagram{}; }

    // Conversion to/from the conjugate (row-length) reading, provided for
    // external I/O only; internal arithmetic is always on columns.
    static YoungDiagram from_rows(const std::vector<int>& rows);
    std::vector<int> rows() const;

    const std::vector<int>& columns() const noexcept { return cols_; }
    bool is_empty() const noexcept { return cols_.empty(); }
    int column_count() const noexcept { return static_cast<int>(cols_.size()); }

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend std::strong_ordering operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
        return a.cols_ <=> b.cols_;
    }

    // Exponent shorthand, e.g. "5,3,2^2,1"; "" is the empty diagram.
    std::string str() const;
    static YoungDiagram parse(const std::string& text);

private:
    std::vector<int> cols_;
};

// Sum of column heights; 0 for the empty diagram.
int rank(const YoungDiagram& y);

// Height of the first (tallest) column; 0 for the empty diagram.
int first_column_height(const YoungDiagram& y);

// Deletes the first column; the empty diagram stays empty.
YoungDiagram truncate(const YoungDiagram& y);

// Realizes [h, Y]. h == 0 is the identity; otherwise h must dominate the
// current first column (throws MalformedDiagram).
YoungDiagram prepend_column(const YoungDiagram& y, int h);

// Columns (b - h_L), ..., (b - h_1) inside a height-b box, dropping zero
// columns. Throws BoxTooSmall if b < h_1.
YoungDiagram complement(const YoungDiagram& y, int box_height);

} // namespace ada
