#include "svt/involutions.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace svt {

CornerRemoval corner_box(const SkewShape& shape) {
    if (shape.cell_count() == 0) throw std::invalid_argument("empty shape has no corner box");
    // Row-major order puts the lowest row last, its rightmost box last of all.
    Cell box = shape.cells_row_major().back();
    std::vector<int> outer = shape.outer().parts();
    outer[box.row - 1] -= 1;
    return {CornerBox{box}, SkewShape(Partition(std::move(outer)), shape.inner())};
}

bool FillSet::contains(uint64_t fill) const {
    return std::binary_search(fills.begin(), fills.end(), fill);
}

FillSet admissible_fill_set(const SetValuedTableau& t, const CornerBox& box, int n) {
    if (t.alphabet() != n) throw std::invalid_argument("alphabet mismatch");
    const SkewShape& reduced = t.shape();
    int a = 1;
    Cell above{box.cell.row - 1, box.cell.col};
    Cell left{box.cell.row, box.cell.col - 1};
    if (reduced.contains(above)) a = std::max(a, mask_max(t.entry(above)) + 1);
    if (reduced.contains(left)) a = std::max(a, mask_max(t.entry(left)));
    FillSet fs;
    fs.lower_bound = a;
    if (a <= n) {
        uint64_t avail = full_mask(n) & ~full_mask(a - 1);
        uint64_t s = 0;
        while (true) {
            s = (s - avail) & avail;
            if (s == 0) break;
            fs.fills.push_back(s);
        }
    }
    return fs;
}

SetValuedTableau attach_cell(const SetValuedTableau& t, const CornerBox& box, uint64_t fill) {
    const SkewShape& reduced = t.shape();
    Cell c = box.cell;
    if (reduced.contains(c)) throw std::invalid_argument("corner box already lies in the shape");
    // The box must extend the shape at the end of its row-major cell order.
    auto cells = reduced.cells_row_major();
    if (!cells.empty() && !(cells.back() < c))
        throw std::invalid_argument("box is not the corner of the extended shape");

    std::vector<int> outer = reduced.outer().parts();
    if (static_cast<int>(outer.size()) < c.row) outer.resize(c.row, 0);
    outer[c.row - 1] += 1;
    if (outer[c.row - 1] != c.col)
        throw std::invalid_argument("box does not extend the shape by one cell");
    if (reduced.inner().part(c.row) >= c.col)
        throw std::invalid_argument("box lies inside the inner partition");
    SkewShape extended(Partition(std::move(outer)), reduced.inner());

    std::vector<uint64_t> entries = t.entries();
    entries.push_back(fill);
    SetValuedTableau out(extended, t.alphabet(), std::move(entries));
    if (!is_valid_svt(out))
        throw std::invalid_argument("fill violates the semi-standard conditions");
    return out;
}

int h_statistic(const SetValuedTableau& t, const CornerBox& box, int n) {
    if (t.alphabet() != n) throw std::invalid_argument("alphabet mismatch");
    const SkewShape& reduced = t.shape();
    int h = 0;
    while (true) {
        Cell c{box.cell.row - h - 1, box.cell.col};
        int letter = n - h;
        if (c.row < 1 || letter < 1 || !reduced.contains(c)) break;
        if (!((t.entry(c) >> (letter - 1)) & 1)) break;
        ++h;
    }
    if (h > n - 1)
        throw std::logic_error("membership chain longer than n-1; column exceeds the alphabet");
    return h;
}

SetValuedTableau f_map(const SetValuedTableau& t, const CornerBox& box, int n) {
    int h = h_statistic(t, box, n);
    if (h == 0) throw std::invalid_argument("f is defined only on classes with h != 0");
    Cell target{box.cell.row - h, box.cell.col};
    int idx = t.shape().row_major_index(target);
    std::vector<uint64_t> entries = t.entries();
    entries[idx] ^= uint64_t{1} << (n - h - 1);
    if (entries[idx] == 0) throw std::logic_error("f emptied a cell");
    SetValuedTableau out(t.shape(), n, std::move(entries));
    if (!is_valid_svt(out)) throw std::logic_error("f produced an invalid tableau");
    if (h_statistic(out, box, n) != h) throw std::logic_error("f left its h-class");
    return out;
}

std::map<int, std::vector<SetValuedTableau>> partition_by_h(const SkewShape& reduced,
                                                            const CornerBox& box, int n) {
    std::map<int, std::vector<SetValuedTableau>> classes;
    enumerate_svt(reduced, n, [&](const SetValuedTableau& t) {
        classes[h_statistic(t, box, n)].push_back(t);
        return true;
    });
    return classes;
}

SetValuedTableau minimal_tableau(const SkewShape& shape, int n) {
    if (shape.max_column_height() > n)
        throw std::invalid_argument("a column is taller than the alphabet");
    Partition inner_conj = shape.inner().conjugate();
    std::vector<uint64_t> entries;
    entries.reserve(shape.cell_count());
    for (Cell c : shape.cells_row_major()) {
        int top_row = (c.col <= inner_conj.length() ? inner_conj.part(c.col) : 0) + 1;
        int value = c.row - top_row + 1;
        entries.push_back(uint64_t{1} << (value - 1));
    }
    SetValuedTableau t0(shape, n, std::move(entries));
    if (!is_valid_svt(t0)) throw std::logic_error("minimal tableau is not semi-standard");
    return t0;
}

SetValuedTableau g_map(const SetValuedTableau& t) {
    const SkewShape& sh = t.shape();
    SetValuedTableau t0 = minimal_tableau(sh, t.alphabet());
    if (t == t0) throw std::invalid_argument("g is undefined on the minimal tableau");
    for (Cell c : sh.cells_column_major()) {
        int idx = sh.row_major_index(c);
        uint64_t locator = t0.entry(idx);
        if (t.entry(idx) == locator) continue;
        std::vector<uint64_t> entries = t.entries();
        entries[idx] ^= locator;
        if (entries[idx] == 0) throw std::logic_error("g emptied a cell");
        SetValuedTableau out(sh, t.alphabet(), std::move(entries));
        if (!is_valid_svt(out)) throw std::logic_error("g produced an invalid tableau");
        return out;
    }
    throw std::logic_error("no cell differs from the minimal tableau");
}

namespace {

long long entry_sum(const SetValuedTableau& t) {
    long long sum = 0;
    for (uint64_t m : t.entries())
        for (int l : mask_letters(m)) sum += l;
    return sum;
}

}  // namespace

GReport verify_g_with(const SkewShape& shape, int n,
                      const std::function<SetValuedTableau(const SetValuedTableau&)>& g) {
    GReport r;
    r.shape = shape;
    r.n = n;
    std::vector<SetValuedTableau> all = collect_svt(shape, n);
    r.count = all.size();
    if (all.empty()) return r;

    SetValuedTableau t0 = minimal_tableau(shape, n);
    long long t0_sum = entry_sum(t0);
    bool t0_found = false;
    r.minimal_unique_ok = true;
    for (const auto& t : all) {
        if (t == t0) {
            t0_found = true;
            continue;
        }
        if (entry_sum(t) <= t0_sum) r.minimal_unique_ok = false;
    }
    r.minimal_unique_ok = r.minimal_unique_ok && t0_found;

    std::map<std::vector<uint64_t>, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].entries(), i);

    r.pairing_ok = t0_found;
    BigInt pairs = 0;
    for (const auto& t : all) {
        if (t == t0) continue;
        try {
            SetValuedTableau u = g(t);
            bool ok = u != t && index.count(u.entries()) > 0 && u != t0 &&
                      std::abs(u.letter_count() - t.letter_count()) == 1 && g(u) == t;
            if (!ok) {
                r.pairing_ok = false;
                break;
            }
        } catch (const std::exception&) {
            r.pairing_ok = false;
            break;
        }
        ++pairs;
    }
    if (r.pairing_ok && pairs % 2 != 0) r.pairing_ok = false;
    r.orbits = pairs / 2;
    return r;
}

GReport verify_g(const SkewShape& shape, int n) {
    return verify_g_with(shape, n, [](const SetValuedTableau& t) { return g_map(t); });
}

bool ClaimsReport::ok() const {
    return claim1 && claim2 && f_involution_ok && fill_closed_form_ok && h0_has_singleton_n &&
           counting_identity_ok;
}

ClaimsReport verify_claims(const SkewShape& shape, int n) {
    if (n < 1) throw std::invalid_argument("need at least one letter");
    ClaimsReport r;
    r.shape = shape;
    r.n = n;
    CornerRemoval cr = corner_box(shape);
    r.corner = cr.box.cell;
    r.reduced = cr.reduced;

    auto classes = partition_by_h(cr.reduced, cr.box, n);
    r.claim1 = true;
    r.claim2 = true;
    r.f_involution_ok = true;
    r.fill_closed_form_ok = true;
    r.h0_has_singleton_n = true;
    r.fill_sum = 0;
    uint64_t singleton_n = uint64_t{1} << (n - 1);

    for (const auto& [h, members] : classes) {
        r.class_sizes[h] = members.size();
        if ((members.size() % 2 == 0) != (h != 0)) r.claim2 = false;

        std::map<std::vector<uint64_t>, std::size_t> index;
        for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i].entries(), i);

        for (const auto& t : members) {
            FillSet fs = admissible_fill_set(t, cr.box, n);

            // The closed form against the attach-validity contract.
            uint64_t all_fills = full_mask(n);
            for (uint64_t s = 1; s <= all_fills; ++s) {
                bool attachable;
                try {
                    attach_cell(t, cr.box, s);
                    attachable = true;
                } catch (const std::invalid_argument&) {
                    attachable = false;
                }
                if (attachable != fs.contains(s)) r.fill_closed_form_ok = false;
            }

            if (h != 0) {
                if (!fs.fills.empty()) r.claim1 = false;
                try {
                    SetValuedTableau u = f_map(t, cr.box, n);
                    auto it = index.find(u.entries());
                    if (u == t || it == index.end() || f_map(u, cr.box, n) != t)
                        r.f_involution_ok = false;
                } catch (const std::exception&) {
                    r.f_involution_ok = false;
                }
            } else {
                if (!fs.contains(singleton_n)) r.h0_has_singleton_n = false;
                r.fill_sum += fs.fills.size();
            }
        }
    }

    r.counting_identity_ok = r.fill_sum == count_svt(shape, n);
    return r;
}

bool ParityReport::consistent() const {
    return count == count_enumerated && odd && signed_count == 1 && g_ok &&
           count - 1 == 2 * g_orbits;
}

ParityReport verify_parity(const SkewShape& shape, int n) {
    ParityReport r;
    r.shape = shape;
    r.n = n;
    r.count = count_svt(shape, n);
    r.count_enumerated = count_svt_enumerate(shape, n);
    r.odd = r.count % 2 == 1;
    r.signed_count = signed_excess_count(shape, n);
    GReport g = verify_g(shape, n);
    r.g_orbits = g.orbits;
    r.g_ok = g.ok();
    return r;
}

std::string parity_report_json(const ParityReport& r) {
    nlohmann::ordered_json j;
    j["shape"] = format_shape(r.shape);
    j["n"] = r.n;
    j["count"] = r.count.str();
    j["parity"] = r.odd ? "odd" : "even";
    j["g_orbits"] = r.g_orbits.str();
    j["signed_count"] = r.signed_count.str();
    j["consistent"] = r.consistent();
    return j.dump();
}

}  // namespace svt
