#include "svt/shapes.hpp"

#include <charconv>
#include <stdexcept>

namespace svt {

BigRational rational_pow(const BigRational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("rational_pow: negative exponent");
    BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                            static_cast<unsigned>(exp));
    BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                            static_cast<unsigned>(exp));
    return BigRational(num, den);
}

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition part is negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    for (int p : parts_) size_ += p;
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("partition rows are 1-based");
    return row <= length() ? parts_[row - 1] : 0;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    int width = parts_.empty() ? 0 : parts_[0];
    std::vector<int> cols;
    cols.reserve(width);
    for (int j = 1; j <= width; ++j) {
        int h = 0;
        for (int p : parts_)
            if (p >= j) ++h;
        cols.push_back(h);
    }
    return Partition(std::move(cols));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner partition is not contained in the outer one");
}

bool SkewShape::contains(Cell c) const {
    if (c.row < 1 || c.row > outer_.length()) return false;
    return inner_.part(c.row) < c.col && c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::cells_row_major() const {
    std::vector<Cell> cells;
    cells.reserve(cell_count());
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) cells.push_back({i, j});
    return cells;
}

std::vector<Cell> SkewShape::cells_column_major() const {
    std::vector<Cell> cells;
    cells.reserve(cell_count());
    for (int j = 1; j <= width(); ++j)
        for (int i = 1; i <= outer_.length(); ++i)
            if (contains({i, j})) cells.push_back({i, j});
    return cells;
}

int SkewShape::row_major_index(Cell c) const {
    if (!contains(c)) return -1;
    int idx = 0;
    for (int i = 1; i < c.row; ++i) idx += outer_.part(i) - inner_.part(i);
    return idx + (c.col - inner_.part(c.row) - 1);
}

int SkewShape::column_height(int col) const {
    int h = 0;
    for (int i = 1; i <= outer_.length(); ++i)
        if (contains({i, col})) ++h;
    return h;
}

int SkewShape::max_column_height() const {
    int best = 0;
    for (int j = 1; j <= width(); ++j) best = std::max(best, column_height(j));
    return best;
}

int hook_length(const Partition& lambda, Cell cell) {
    if (cell.row < 1 || cell.row > lambda.length() || cell.col < 1 ||
        cell.col > lambda.part(cell.row))
        throw std::invalid_argument("cell lies outside the partition");
    int arm = lambda.part(cell.row) - cell.col;
    int leg = lambda.conjugate().part(cell.col) - cell.row;
    return arm + leg + 1;
}

BigInt sst_count_hook(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("alphabet size must be nonnegative");
    Partition conj = lambda.conjugate();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int content = n + j - i;
            if (content <= 0) return 0;
            num *= content;
            den *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
        }
    }
    if (num % den != 0)
        throw std::logic_error("hook-length product did not divide exactly");
    return num / den;
}

Partition parse_partition(std::string_view text) {
    if (text.empty() || text == "()") return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
            throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

SkewShape parse_shape(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
    std::string_view outer = text.substr(0, slash);
    std::string_view inner = text.substr(slash + 1);
    if (inner.find('/') != std::string_view::npos)
        throw std::invalid_argument("shape text has more than one '/'");
    return SkewShape(parse_partition(outer), parse_partition(inner));
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "()";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string format_shape(const SkewShape& shape) {
    std::string out = format_partition(shape.outer());
    if (!shape.inner().empty()) {
        out += '/';
        out += format_partition(shape.inner());
    }
    return out;
}

}  // namespace svt
