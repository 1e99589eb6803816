#include "gyro/gyrogroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace gyro {

namespace {

std::string tuple_str(const std::vector<int>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// CayleyTable

CayleyTable::CayleyTable(const std::vector<std::vector<int>>& rows)
    : n_(static_cast<int>(rows.size())) {
    if (n_ == 0) throw GyroError("empty operation table");
    flat_.reserve(static_cast<size_t>(n_) * n_);
    for (int r = 0; r < n_; ++r) {
        if (static_cast<int>(rows[r].size()) != n_)
            throw GyroError("row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(n_));
        for (int v : rows[r]) {
            if (v < 0 || v >= n_)
                throw GyroError("table entry " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
            flat_.push_back(v);
        }
    }
}

int CayleyTable::entry(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::out_of_range("table index (" + std::to_string(a) + "," + std::to_string(b) +
                                ") out of range for order " + std::to_string(n_));
    return flat_[a * n_ + b];
}

// ---------------------------------------------------------------------------
// GyrationTable

GyrationTableBuilder::GyrationTableBuilder(int order) {
    table_.n_ = order;
    table_.pool_.push_back(Permutation::identity(order));
    table_.ids_.reserve(static_cast<size_t>(order) * order);
}

void GyrationTableBuilder::push(const Permutation& p) {
    if (p.degree() != table_.n_) throw GyroError("gyration degree does not match table order");
    int id = -1;
    for (size_t i = 0; i < table_.pool_.size(); ++i) {
        if (table_.pool_[i] == p) {
            id = static_cast<int>(i);
            break;
        }
    }
    if (id < 0) {
        id = static_cast<int>(table_.pool_.size());
        table_.pool_.push_back(p);
    }
    table_.ids_.push_back(id);
}

GyrationTable GyrationTableBuilder::finish() {
    const size_t want = static_cast<size_t>(table_.n_) * table_.n_;
    if (table_.ids_.size() != want)
        throw GyroError("gyration table has " + std::to_string(table_.ids_.size()) +
                        " entries, expected " + std::to_string(want));
    return std::move(table_);
}

GyrationTable::GyrationTable(int order, const std::vector<std::vector<Permutation>>& grid) {
    if (static_cast<int>(grid.size()) != order)
        throw GyroError("gyration grid has wrong number of rows");
    GyrationTableBuilder builder(order);
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != order)
            throw GyroError("gyration grid has a row of wrong length");
        for (const auto& p : row) builder.push(p);
    }
    *this = builder.finish();
}

const Permutation& GyrationTable::at(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::out_of_range("gyration index (" + std::to_string(a) + "," + std::to_string(b) +
                                ") out of range for order " + std::to_string(n_));
    return (*this)(a, b);
}

bool GyrationTable::operator==(const GyrationTable& other) const {
    if (n_ != other.n_) return false;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if ((*this)(a, b) != other(a, b)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Axioms

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::latin_row: return "latin-row";
        case Axiom::latin_col: return "latin-column";
        case Axiom::identity_element: return "identity-element";
        case Axiom::inverse_element: return "inverse-element";
        case Axiom::gyration_mismatch: return "gyration-table-mismatch";
        case Axiom::gyration_bijective: return "gyration-bijective";
        case Axiom::gyration_automorphism: return "gyration-automorphism";
        case Axiom::left_gyroassociative: return "left-gyroassociative";
        case Axiom::left_loop: return "left-loop";
        case Axiom::cancel_left_general: return "general-left-cancellation";
        case Axiom::cancel_left: return "left-cancellation";
        case Axiom::cancel_right_coadd: return "right-cancellation-coadd";
        case Axiom::cancel_right_cosub: return "right-cancellation-cosub";
        case Axiom::right_gyroassociative: return "right-gyroassociative";
        case Axiom::gyration_of_inverse: return "gyration-of-inverse";
    }
    return "unknown";
}

namespace {

void add_violation(VerificationReport& report, Axiom axiom, std::vector<int> witness,
                   std::string what) {
    report.violations.push_back({axiom, std::move(witness), std::move(what)});
}

// Latin-square scan. Witness {i, j, k}: line i repeats a value at
// positions j < k.
bool check_latin(const CayleyTable& t, VerificationReport& report) {
    const int n = t.order();
    std::vector<int> first(n);
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
        std::fill(first.begin(), first.end(), -1);
        for (int c = 0; c < n; ++c) {
            const int v = t(r, c);
            if (first[v] >= 0) {
                add_violation(report, Axiom::latin_row, {r, first[v], c},
                              "row " + std::to_string(r) + " repeats " + std::to_string(v));
                ok = false;
                break;
            }
            first[v] = c;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(first.begin(), first.end(), -1);
        for (int r = 0; r < n; ++r) {
            const int v = t(r, c);
            if (first[v] >= 0) {
                add_violation(report, Axiom::latin_col, {c, first[v], r},
                              "column " + std::to_string(c) + " repeats " + std::to_string(v));
                return false;
            }
            first[v] = r;
        }
    }
    return ok;
}

int find_identity(const CayleyTable& t) {
    const int n = t.order();
    for (int e = 0; e < n; ++e) {
        bool good = true;
        for (int x = 0; x < n && good; ++x) good = t(e, x) == x && t(x, e) == x;
        if (good) return e;
    }
    return -1;
}

// Two-sided inverses; -1 marks a missing one.
std::vector<int> find_inverses(const CayleyTable& t, int e) {
    const int n = t.order();
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            if (t(x, a) == e && t(a, x) == e) {
                inv[a] = x;
                break;
            }
    return inv;
}

// Raw pointwise derivation gyr[a,b](c) = -(a+b) + (a+(b+c)); the caller
// guarantees identity and inverses exist.
std::vector<std::vector<int>> derive_raw(const CayleyTable& t, const std::vector<int>& inv) {
    const int n = t.order();
    std::vector<std::vector<int>> gyr(static_cast<size_t>(n) * n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int neg_ab = inv[t(a, b)];
            auto& images = gyr[a * n + b];
            for (int c = 0; c < n; ++c) images[c] = t(neg_ab, t(a, t(b, c)));
        }
    return gyr;
}

}  // namespace

GyrationTable derive_gyrations(const CayleyTable& table) {
    VerificationReport latin;
    if (!check_latin(table, latin))
        throw GyroError("not a Latin square: " + latin.violations.front().detail);
    const int e = find_identity(table);
    if (e < 0) throw GyroError("table has no two-sided identity element");
    const auto inv = find_inverses(table, e);
    for (int a = 0; a < table.order(); ++a)
        if (inv[a] < 0)
            throw GyroError("element " + std::to_string(a) + " has no two-sided inverse");

    const auto raw = derive_raw(table, inv);
    GyrationTableBuilder builder(table.order());
    for (const auto& images : raw) builder.push(Permutation(images));
    return builder.finish();
}

ValidationResult verify_axioms(const CayleyTable& table,
                               const std::optional<GyrationTable>& gyrations, std::string name) {
    ValidationResult result;
    VerificationReport& report = result.report;
    const int n = table.order();

    if (!check_latin(table, report)) return result;

    if (gyrations && gyrations->order() != n) {
        add_violation(report, Axiom::gyration_mismatch, {},
                      "gyration table order does not match addition table");
        return result;
    }

    const int e = find_identity(table);
    if (e < 0) {
        add_violation(report, Axiom::identity_element, {}, "no two-sided identity element");
        return result;
    }

    auto inv = find_inverses(table, e);
    for (int a = 0; a < n; ++a)
        if (inv[a] < 0) {
            add_violation(report, Axiom::inverse_element, {a},
                          "element " + std::to_string(a) + " has no two-sided inverse");
            return result;
        }

    const auto raw = derive_raw(table, inv);

    // A supplied gyration table must agree with the derivation; the
    // derived table is the one all later checks run against.
    if (gyrations) {
        bool mismatch = false;
        for (int a = 0; a < n && !mismatch; ++a)
            for (int b = 0; b < n && !mismatch; ++b)
                for (int c = 0; c < n && !mismatch; ++c)
                    if ((*gyrations)(a, b)(c) != raw[a * n + b][c]) {
                        add_violation(report, Axiom::gyration_mismatch, {a, b, c},
                                      "supplied gyr" + tuple_str({a, b}) + " sends " +
                                          std::to_string(c) + " to " +
                                          std::to_string((*gyrations)(a, b)(c)) +
                                          ", derivation gives " +
                                          std::to_string(raw[a * n + b][c]));
                        mismatch = true;
                    }
    }

    {  // each gyration is a bijection
        bool bad = false;
        std::vector<int> first(n);
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b) {
                std::fill(first.begin(), first.end(), -1);
                for (int c = 0; c < n; ++c) {
                    const int v = raw[a * n + b][c];
                    if (first[v] >= 0) {
                        add_violation(report, Axiom::gyration_bijective, {a, b, first[v], c},
                                      "gyr" + tuple_str({a, b}) + " maps both " +
                                          std::to_string(first[v]) + " and " + std::to_string(c) +
                                          " to " + std::to_string(v));
                        bad = true;
                        break;
                    }
                    first[v] = c;
                }
            }
    }

    {  // each gyration respects the operation
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b) {
                const auto& p = raw[a * n + b];
                for (int x = 0; x < n && !bad; ++x)
                    for (int y = 0; y < n && !bad; ++y)
                        if (p[table(x, y)] != table(p[x], p[y])) {
                            add_violation(report, Axiom::gyration_automorphism, {a, b, x, y},
                                          "gyr" + tuple_str({a, b}) + " is not an automorphism at " +
                                              tuple_str({x, y}));
                            bad = true;
                        }
            }
    }

    {  // x+(y+z) = (x+y) + gyr[x,y](z)
        bool bad = false;
        for (int x = 0; x < n && !bad; ++x)
            for (int y = 0; y < n && !bad; ++y)
                for (int z = 0; z < n && !bad; ++z)
                    if (table(x, table(y, z)) != table(table(x, y), raw[x * n + y][z])) {
                        add_violation(report, Axiom::left_gyroassociative, {x, y, z},
                                      "left gyroassociative law fails at " + tuple_str({x, y, z}));
                        bad = true;
                    }
    }

    {  // gyr[x+y, y] = gyr[x, y]
        bool bad = false;
        for (int x = 0; x < n && !bad; ++x)
            for (int y = 0; y < n && !bad; ++y)
                if (raw[table(x, y) * n + y] != raw[x * n + y]) {
                    add_violation(report, Axiom::left_loop, {x, y},
                                  "left loop property fails at " + tuple_str({x, y}));
                    bad = true;
                }
    }

    if (!report.passed()) return result;

    GyrationTableBuilder builder(n);
    for (const auto& images : raw) builder.push(Permutation(images));
    result.group = Gyrogroup(table, builder.finish(), e, std::move(inv), std::move(name));
    return result;
}

// ---------------------------------------------------------------------------
// Gyrogroup

Gyrogroup::Gyrogroup(CayleyTable table, GyrationTable gyrations, int identity,
                     std::vector<int> inverse, std::string name)
    : table_(std::move(table)),
      gyrations_(std::move(gyrations)),
      identity_(identity),
      inverse_(std::move(inverse)),
      name_(std::move(name)) {}

void Gyrogroup::require_element(int a) const {
    if (a < 0 || a >= order())
        throw GyroError("element " + std::to_string(a) + " out of range [0," +
                        std::to_string(order()) + ")");
}

int Gyrogroup::add(int a, int b) const {
    require_element(a);
    require_element(b);
    return table_(a, b);
}

int Gyrogroup::neg(int a) const {
    require_element(a);
    return inverse_[a];
}

const Permutation& Gyrogroup::gyr(int a, int b) const {
    require_element(a);
    require_element(b);
    return gyrations_(a, b);
}

int Gyrogroup::gyr_apply(int a, int b, int c) const {
    require_element(c);
    return gyr(a, b)(c);
}

int Gyrogroup::coadd(int a, int b) const {
    require_element(a);
    require_element(b);
    return table_(a, gyrations_(a, inverse_[b])(b));
}

int Gyrogroup::cosub(int a, int b) const { return coadd(a, neg(b)); }

int Gyrogroup::left_nested_product(std::span<const int> seq) const {
    if (seq.empty()) throw GyroError("empty product");
    for (int a : seq) require_element(a);
    int acc = seq.back();
    for (size_t i = seq.size() - 1; i-- > 0;) acc = table_(seq[i], acc);
    return acc;
}

int Gyrogroup::right_nested_product(std::span<const int> seq) const {
    if (seq.empty()) throw GyroError("empty product");
    for (int a : seq) require_element(a);
    int acc = seq.front();
    for (size_t i = 1; i < seq.size(); ++i) acc = table_(acc, seq[i]);
    return acc;
}

VerificationReport check_identities(const Gyrogroup& g) {
    VerificationReport report;
    const int n = g.order();

    {  // a+b = a+c implies b = c
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                for (int c = 0; c < n && !bad; ++c)
                    if (b != c && g.op(a, b) == g.op(a, c)) {
                        add_violation(report, Axiom::cancel_left_general, {a, b, c},
                                      "general left cancellation fails at " + tuple_str({a, b, c}));
                        bad = true;
                    }
    }
    {  // -a+(a+b) = b
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                if (g.op(g.neg(a), g.op(a, b)) != b) {
                    add_violation(report, Axiom::cancel_left, {a, b},
                                  "left cancellation fails at " + tuple_str({a, b}));
                    bad = true;
                }
    }
    {  // (a-b) coadd b = a
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                if (g.coadd(g.op(a, g.neg(b)), b) != a) {
                    add_violation(report, Axiom::cancel_right_coadd, {a, b},
                                  "right cancellation (coadd) fails at " + tuple_str({a, b}));
                    bad = true;
                }
    }
    {  // (a cosub b) + b = a
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                if (g.op(g.cosub(a, b), b) != a) {
                    add_violation(report, Axiom::cancel_right_cosub, {a, b},
                                  "right cancellation (cosub) fails at " + tuple_str({a, b}));
                    bad = true;
                }
    }
    {  // (a+b)+c = a+(b+gyr[b,a](c))
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                for (int c = 0; c < n && !bad; ++c)
                    if (g.op(g.op(a, b), c) != g.op(a, g.op(b, g.gyr_image(b, a, c)))) {
                        add_violation(report, Axiom::right_gyroassociative, {a, b, c},
                                      "right gyroassociative law fails at " + tuple_str({a, b, c}));
                        bad = true;
                    }
    }
    {  // gyr[a,b](-c) = -gyr[a,b](c)
        bool bad = false;
        for (int a = 0; a < n && !bad; ++a)
            for (int b = 0; b < n && !bad; ++b)
                for (int c = 0; c < n && !bad; ++c)
                    if (g.gyr_image(a, b, g.neg(c)) != g.neg(g.gyr_image(a, b, c))) {
                        add_violation(report, Axiom::gyration_of_inverse, {a, b, c},
                                      "gyration does not commute with inversion at " +
                                          tuple_str({a, b, c}));
                        bad = true;
                    }
    }
    return report;
}

}  // namespace gyro
