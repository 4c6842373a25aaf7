#include "svt/tableaux.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace svt {

uint64_t full_mask(int n) {
    if (n < 0 || n > kMaxAlphabet) throw std::invalid_argument("alphabet out of range");
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

int mask_min(uint64_t mask) {
    if (mask == 0) throw std::invalid_argument("empty entry set");
    return std::countr_zero(mask) + 1;
}

int mask_max(uint64_t mask) {
    if (mask == 0) throw std::invalid_argument("empty entry set");
    return std::bit_width(mask);
}

int mask_size(uint64_t mask) { return std::popcount(mask); }

std::vector<int> mask_letters(uint64_t mask) {
    std::vector<int> out;
    for (int i = 1; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

uint64_t letters_mask(const std::vector<int>& letters, int n) {
    uint64_t m = 0;
    for (int l : letters) {
        if (l < 1 || l > n) throw std::invalid_argument("letter outside the alphabet");
        m |= uint64_t{1} << (l - 1);
    }
    return m;
}

SetValuedTableau::SetValuedTableau(SkewShape shape, int n, std::vector<uint64_t> entries)
    : shape_(std::move(shape)), n_(n), entries_(std::move(entries)) {
    if (n_ < 0 || n_ > kMaxAlphabet) throw std::invalid_argument("alphabet out of range");
    if (static_cast<int>(entries_.size()) != shape_.cell_count())
        throw std::invalid_argument("entry list does not cover the shape's cells");
    uint64_t full = full_mask(n_);
    for (uint64_t m : entries_) {
        if (m == 0) throw std::invalid_argument("empty entry set");
        if (m & ~full) throw std::invalid_argument("entry set leaves the alphabet");
    }
}

uint64_t SetValuedTableau::entry(Cell c) const {
    int idx = shape_.row_major_index(c);
    if (idx < 0) throw std::invalid_argument("cell lies outside the shape");
    return entries_[idx];
}

int SetValuedTableau::letter_count() const {
    int total = 0;
    for (uint64_t m : entries_) total += mask_size(m);
    return total;
}

bool is_valid_svt(const SetValuedTableau& t) {
    const SkewShape& sh = t.shape();
    for (Cell c : sh.cells_row_major()) {
        uint64_t here = t.entry(c);
        Cell right{c.row, c.col + 1};
        if (sh.contains(right) && mask_max(here) > mask_min(t.entry(right))) return false;
        Cell below{c.row + 1, c.col};
        if (sh.contains(below) && mask_max(here) >= mask_min(t.entry(below))) return false;
    }
    return true;
}

namespace {

struct CellLinks {
    std::vector<Cell> cells;
    std::vector<int> above;     // row-major index of (i-1,j), -1 when absent
    std::vector<bool> has_left; // whether (i,j-1) is a cell (then it is index k-1)
};

CellLinks link_cells(const SkewShape& shape) {
    CellLinks ln;
    ln.cells = shape.cells_row_major();
    ln.above.reserve(ln.cells.size());
    ln.has_left.reserve(ln.cells.size());
    for (const Cell& c : ln.cells) {
        ln.above.push_back(shape.row_major_index({c.row - 1, c.col}));
        ln.has_left.push_back(shape.contains({c.row, c.col - 1}));
    }
    return ln;
}

// Smallest letter allowed at cell k given the already filled prefix.
int lower_bound_at(const CellLinks& ln, const std::vector<uint64_t>& masks, std::size_t k) {
    int a = 1;
    if (ln.has_left[k]) a = std::max(a, mask_max(masks[k - 1]));
    if (ln.above[k] >= 0) a = std::max(a, mask_max(masks[ln.above[k]]) + 1);
    return a;
}

struct Enumerator {
    const SkewShape& shape;
    int n;
    bool singletons;
    const std::function<bool(const SetValuedTableau&)>& yield;
    CellLinks ln;
    std::vector<uint64_t> masks;

    bool dfs(std::size_t k) {
        if (k == ln.cells.size())
            return yield(SetValuedTableau(shape, n, masks));
        int a = lower_bound_at(ln, masks, k);
        if (a > n) return true;
        if (singletons) {
            for (int m = a; m <= n; ++m) {
                masks[k] = uint64_t{1} << (m - 1);
                if (!dfs(k + 1)) return false;
            }
        } else {
            // Ascending submask walk over the letters {a..n}.
            uint64_t avail = full_mask(n) & ~(full_mask(a - 1));
            uint64_t s = 0;
            while (true) {
                s = (s - avail) & avail;
                if (s == 0) break;
                masks[k] = s;
                if (!dfs(k + 1)) return false;
            }
        }
        return true;
    }
};

void enumerate_impl(const SkewShape& shape, int n, bool singletons,
                    const std::function<bool(const SetValuedTableau&)>& yield) {
    if (n < 0) throw std::invalid_argument("alphabet size must be nonnegative");
    if (shape.max_column_height() > n) return;
    Enumerator e{shape, n, singletons, yield, link_cells(shape), {}};
    e.masks.assign(e.ln.cells.size(), 0);
    e.dfs(0);
}

// Column-profile recursion: the memo key carries only the per-column maxima
// that some later cell will still read before they get overwritten.
struct ProfileCounter {
    int n;
    bool singletons;
    CellLinks ln;
    std::vector<std::vector<int>> relevant;  // per position: filled indices still live
    std::vector<int> vals;                   // max letter of each filled cell
    std::map<std::vector<int>, BigInt> memo;

    BigInt count(std::size_t k) {
        if (k == ln.cells.size()) return 1;
        std::vector<int> key;
        key.reserve(relevant[k].size() + 2);
        key.push_back(static_cast<int>(k));
        key.push_back(ln.has_left[k] ? vals[k - 1] : 0);
        for (int t : relevant[k]) key.push_back(vals[t]);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        int a = 1;
        if (ln.has_left[k]) a = std::max(a, vals[k - 1]);
        if (ln.above[k] >= 0) a = std::max(a, vals[ln.above[k]] + 1);
        BigInt total = 0;
        for (int m = a; m <= n; ++m) {
            vals[k] = m;
            BigInt ways = singletons ? BigInt(1) : BigInt(1) << (m - a);
            total += ways * count(k + 1);
        }
        vals[k] = 0;
        memo.emplace(std::move(key), total);
        return total;
    }
};

BigInt profile_count(const SkewShape& shape, int n, bool singletons) {
    if (n < 0) throw std::invalid_argument("alphabet size must be nonnegative");
    if (shape.max_column_height() > n) return 0;
    ProfileCounter pc{n, singletons, link_cells(shape), {}, {}, {}};
    std::size_t cell_total = pc.ln.cells.size();
    pc.relevant.assign(cell_total, {});
    for (std::size_t k = 0; k < cell_total; ++k)
        for (std::size_t kp = k; kp < cell_total; ++kp)
            if (pc.ln.above[kp] >= 0 && pc.ln.above[kp] < static_cast<int>(k))
                pc.relevant[k].push_back(pc.ln.above[kp]);
    pc.vals.assign(cell_total, 0);
    return pc.count(0);
}

}  // namespace

void enumerate_svt(const SkewShape& shape, int n,
                   const std::function<bool(const SetValuedTableau&)>& yield) {
    enumerate_impl(shape, n, false, yield);
}

void enumerate_sst(const SkewShape& shape, int n,
                   const std::function<bool(const SetValuedTableau&)>& yield) {
    enumerate_impl(shape, n, true, yield);
}

std::vector<SetValuedTableau> collect_svt(const SkewShape& shape, int n) {
    std::vector<SetValuedTableau> out;
    enumerate_svt(shape, n, [&](const SetValuedTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<SetValuedTableau> collect_sst(const SkewShape& shape, int n) {
    std::vector<SetValuedTableau> out;
    enumerate_sst(shape, n, [&](const SetValuedTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

BigInt count_svt(const SkewShape& shape, int n) { return profile_count(shape, n, false); }

BigInt count_svt_enumerate(const SkewShape& shape, int n) {
    BigInt c = 0;
    enumerate_svt(shape, n, [&](const SetValuedTableau&) {
        ++c;
        return true;
    });
    return c;
}

BigInt count_sst(const SkewShape& shape, int n) { return profile_count(shape, n, true); }

WeightVector weight(const SetValuedTableau& t) {
    WeightVector w;
    w.counts.assign(t.alphabet(), 0);
    for (uint64_t m : t.entries())
        for (int l : mask_letters(m)) ++w.counts[l - 1];
    return w;
}

BigInt signed_excess_count(const SkewShape& shape, int n) {
    BigInt sum = 0;
    int base = shape.cell_count();
    enumerate_svt(shape, n, [&](const SetValuedTableau& t) {
        sum += ((t.letter_count() - base) % 2 == 0) ? 1 : -1;
        return true;
    });
    return sum;
}

namespace {

std::string entry_text(uint64_t mask, int n) {
    std::vector<int> ls = mask_letters(mask);
    std::string out;
    if (n <= 9) {
        for (int l : ls) out += static_cast<char>('0' + l);
    } else {
        out += '{';
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(ls[i]);
        }
        out += '}';
    }
    return out;
}

}  // namespace

std::string render_text(const SetValuedTableau& t) {
    const SkewShape& sh = t.shape();
    std::string out;
    for (int i = 1; i <= sh.row_count(); ++i) {
        if (i > 1) out += '\n';
        bool first = true;
        for (int j = 1; j <= sh.inner().part(i); ++j) {
            if (!first) out += ' ';
            out += '.';
            first = false;
        }
        for (int j = sh.inner().part(i) + 1; j <= sh.outer().part(i); ++j) {
            if (!first) out += ' ';
            out += entry_text(t.entry({i, j}), t.alphabet());
            first = false;
        }
    }
    return out;
}

std::string tableau_json(const SetValuedTableau& t) {
    nlohmann::ordered_json j;
    j["outer"] = t.shape().outer().parts();
    j["inner"] = t.shape().inner().parts();
    j["n"] = t.alphabet();
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    int idx = 0;
    for (Cell c : t.shape().cells_row_major()) {
        nlohmann::ordered_json jc;
        jc["row"] = c.row;
        jc["col"] = c.col;
        jc["entries"] = mask_letters(t.entry(idx++));
        cells.push_back(std::move(jc));
    }
    return j.dump();
}

}  // namespace svt
