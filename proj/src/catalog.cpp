#include "fusionkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <numeric>

namespace fusionkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

[[noreturn]] void bad_label(std::string_view text, const std::string& ring) {
    throw FusionError(ErrorKind::InvalidLabel, "cannot parse \"" + std::string(text) + "\" as a label of " + ring);
}

/// Splits on commas that are not nested inside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (s[i] == ',' && depth == 0) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    parts.push_back(trim(s.substr(start)));
    return parts;
}

std::string_view strip_parens(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        return trim(s.substr(1, s.size() - 2));
    }
    return s;
}

// ---------------------------------------------------------------------------

class ZdRules final : public FusionRules {
public:
    explicit ZdRules(int d) : d_(d) {}

    std::string description() const override { return "Z^" + std::to_string(d_) + " group ring"; }
    Label unit() const override { return Label(std::vector<std::int64_t>(d_, 0)); }
    bool is_valid(const Label& l) const override { return l.size() == static_cast<std::size_t>(d_); }
    Label conjugate(const Label& l) const override {
        std::vector<std::int64_t> v(l.parts().begin(), l.parts().end());
        for (auto& x : v) {
            x = -x;
        }
        return Label(std::move(v));
    }
    Quantity dimension(const Label&) const override { return Quantity(1); }
    ProductMap product(const Label& a, const Label& b) const override {
        std::vector<std::int64_t> v(d_);
        for (int i = 0; i < d_; ++i) {
            v[i] = a[i] + b[i];
        }
        return {{Label(std::move(v)), Integer(1)}};
    }
    std::string render(const Label& l) const override {
        if (d_ == 1) {
            return std::to_string(l[0]);
        }
        std::string s = "(";
        for (int i = 0; i < d_; ++i) {
            s += (i ? "," : "") + std::to_string(l[i]);
        }
        return s + ")";
    }
    Label parse(std::string_view text) const override {
        auto parts = split_top_level(strip_parens(text));
        if (parts.size() != static_cast<std::size_t>(d_)) {
            bad_label(text, description());
        }
        std::vector<std::int64_t> v;
        for (auto p : parts) {
            auto x = parse_int(p);
            if (!x) {
                bad_label(text, description());
            }
            v.push_back(*x);
        }
        return Label(std::move(v));
    }
    std::vector<Label> generators() const override {
        std::vector<Label> g;
        for (int i = 0; i < d_; ++i) {
            std::vector<std::int64_t> v(d_, 0);
            v[i] = 1;
            g.emplace_back(v);
            v[i] = -1;
            g.emplace_back(v);
        }
        return g;
    }
    std::optional<Label> from_integer(std::int64_t k) const override {
        if (d_ != 1) {
            return std::nullopt;
        }
        return Label{k};
    }

private:
    int d_;
};

// ---------------------------------------------------------------------------

class FreeGroupRules final : public FusionRules {
public:
    explicit FreeGroupRules(int rank) : rank_(rank) {}

    std::string description() const override { return "free group F_" + std::to_string(rank_) + " group ring"; }
    Label unit() const override { return Label{}; }
    bool is_valid(const Label& l) const override {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] == 0 || std::abs(l[i]) > rank_) {
                return false;
            }
            if (i > 0 && l[i] == -l[i - 1]) {
                return false;
            }
        }
        return true;
    }
    Label conjugate(const Label& l) const override {
        std::vector<std::int64_t> v(l.parts().rbegin(), l.parts().rend());
        for (auto& x : v) {
            x = -x;
        }
        return Label(std::move(v));
    }
    Quantity dimension(const Label&) const override { return Quantity(1); }
    ProductMap product(const Label& a, const Label& b) const override {
        return {{reduce(a.parts(), b.parts()), Integer(1)}};
    }
    std::string render(const Label& l) const override {
        if (l.empty()) {
            return "e";
        }
        std::string s;
        for (auto x : l.parts()) {
            s += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
        }
        return s;
    }
    Label parse(std::string_view text) const override {
        text = trim(text);
        if (text == "e" || text.empty()) {
            return Label{};
        }
        std::vector<std::int64_t> letters;
        for (char c : text) {
            std::int64_t x = 0;
            if (c >= 'a' && c <= 'z') {
                x = c - 'a' + 1;
            } else if (c >= 'A' && c <= 'Z') {
                x = -(c - 'A' + 1);
            }
            if (x == 0 || std::abs(x) > rank_) {
                bad_label(text, description());
            }
            letters.push_back(x);
        }
        return reduce(letters, {});
    }
    std::vector<Label> generators() const override {
        std::vector<Label> g;
        for (std::int64_t i = 1; i <= rank_; ++i) {
            g.push_back(Label{i});
            g.push_back(Label{-i});
        }
        return g;
    }

private:
    static Label reduce(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
        std::vector<std::int64_t> out;
        out.reserve(a.size() + b.size());
        for (auto part : {a, b}) {
            for (auto x : part) {
                if (!out.empty() && out.back() == -x) {
                    out.pop_back();
                } else {
                    out.push_back(x);
                }
            }
        }
        return Label(std::move(out));
    }

    int rank_;
};

// ---------------------------------------------------------------------------

class FiniteGroupRules final : public FusionRules {
public:
    FiniteGroupRules(std::vector<std::vector<int>> table, std::vector<std::string> names, std::string description,
                     std::vector<Label> generators)
        : table_(std::move(table)), names_(std::move(names)), description_(std::move(description)),
          generators_(std::move(generators)) {
        const int n = static_cast<int>(table_.size());
        if (n == 0) {
            throw FusionError(ErrorKind::InvalidTable, "empty group table");
        }
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n ||
                std::any_of(row.begin(), row.end(), [n](int v) { return v < 0 || v >= n; })) {
                throw FusionError(ErrorKind::InvalidTable, "group table must be square with entries in [0, n)");
            }
        }
        unit_ = -1;
        for (int i = 0; i < n && unit_ < 0; ++i) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                ok = table_[i][j] == j && table_[j][i] == j;
            }
            if (ok) {
                unit_ = i;
            }
        }
        if (unit_ < 0) {
            throw FusionError(ErrorKind::InvalidTable, "group table has no identity");
        }
        inverse_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (table_[i][j] == unit_ && table_[j][i] == unit_) {
                    inverse_[i] = j;
                }
            }
            if (inverse_[i] < 0) {
                throw FusionError(ErrorKind::InvalidTable, "element " + std::to_string(i) + " has no inverse");
            }
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw FusionError(ErrorKind::InvalidTable, "group table is not associative at (" +
                                                                       std::to_string(a) + "," + std::to_string(b) +
                                                                       "," + std::to_string(c) + ")");
                    }
                }
            }
        }
        if (!names_.empty() && names_.size() != table_.size()) {
            throw FusionError(ErrorKind::InvalidTable, "group element names do not match table size");
        }
        if (generators_.empty()) {
            for (int i = 0; i < n; ++i) {
                if (i != unit_) {
                    generators_.push_back(Label{i});
                }
            }
            if (generators_.empty()) {
                generators_.push_back(Label{unit_});
            }
        }
    }

    std::string description() const override { return description_; }
    Label unit() const override { return Label{unit_}; }
    bool is_valid(const Label& l) const override {
        return l.size() == 1 && l[0] >= 0 && l[0] < static_cast<std::int64_t>(table_.size());
    }
    Label conjugate(const Label& l) const override { return Label{inverse_[l[0]]}; }
    Quantity dimension(const Label&) const override { return Quantity(1); }
    ProductMap product(const Label& a, const Label& b) const override {
        return {{Label{table_[a[0]][b[0]]}, Integer(1)}};
    }
    std::string render(const Label& l) const override {
        return names_.empty() ? std::to_string(l[0]) : names_[l[0]];
    }
    Label parse(std::string_view text) const override {
        text = trim(text);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == text) {
                return Label{static_cast<std::int64_t>(i)};
            }
        }
        if (names_.empty()) {
            if (auto v = parse_int(text); v && is_valid(Label{*v})) {
                return Label{*v};
            }
        }
        bad_label(text, description_);
    }
    std::vector<Label> generators() const override { return generators_; }
    std::optional<std::vector<Label>> finite_basis() const override {
        std::vector<Label> all;
        for (std::size_t i = 0; i < table_.size(); ++i) {
            all.push_back(Label{static_cast<std::int64_t>(i)});
        }
        return all;
    }
    std::optional<Label> from_integer(std::int64_t k) const override {
        if (!names_.empty() || !is_valid(Label{k})) {
            return std::nullopt;
        }
        return Label{k};
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::string description_;
    std::vector<Label> generators_;
    int unit_ = 0;
    std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------

/// SU(2) fusion rules with either the classical or a deformed dimension function.
class Su2Rules final : public FusionRules {
public:
    explicit Su2Rules(std::optional<int> deformation) : deformation_(deformation) {
        if (deformation_) {
            dims_ = {Integer(1), Integer(*deformation_)};
        }
    }

    std::string description() const override {
        return deformation_ ? "SU(2) fusion rules with deformed dimensions n=" + std::to_string(*deformation_)
                            : "SU(2) corepresentation ring";
    }
    Label unit() const override { return Label{0}; }
    bool is_valid(const Label& l) const override { return l.size() == 1 && l[0] >= 0; }
    Label conjugate(const Label& l) const override { return l; }
    Quantity dimension(const Label& l) const override {
        if (!deformation_) {
            return Quantity::exact(Integer(l[0] + 1));
        }
        std::lock_guard lock(mutex_);
        const auto k = static_cast<std::size_t>(l[0]);
        while (dims_.size() <= k) {
            const std::size_t m = dims_.size();
            dims_.push_back(Integer(*deformation_) * dims_[m - 1] - dims_[m - 2]);
        }
        return Quantity::exact(dims_[k]);
    }
    ProductMap product(const Label& a, const Label& b) const override {
        ProductMap out;
        const std::int64_t m = a[0];
        const std::int64_t n = b[0];
        for (std::int64_t k = std::abs(m - n); k <= m + n; k += 2) {
            out.emplace_hint(out.end(), Label{k}, Integer(1));
        }
        return out;
    }
    std::string render(const Label& l) const override { return std::to_string(l[0]); }
    Label parse(std::string_view text) const override {
        auto v = parse_int(text);
        if (!v || *v < 0) {
            bad_label(text, description());
        }
        return Label{*v};
    }
    std::vector<Label> generators() const override { return {Label{1}}; }
    std::optional<Label> from_integer(std::int64_t k) const override {
        if (k < 0) {
            return std::nullopt;
        }
        return Label{k};
    }

private:
    std::optional<int> deformation_;
    mutable std::mutex mutex_;
    mutable std::vector<Integer> dims_;
};

// ---------------------------------------------------------------------------

class TensorRules final : public FusionRules {
public:
    TensorRules(FusionRing left, FusionRing right) : left_(std::move(left)), right_(std::move(right)) {}

    std::string description() const override {
        return "(" + left_.description() + ") x (" + right_.description() + ")";
    }
    Label unit() const override { return make_tensor_label(left_.unit(), right_.unit()); }
    bool is_valid(const Label& l) const override {
        if (l.empty() || l[0] < 0 || static_cast<std::size_t>(l[0]) + 1 > l.size()) {
            return false;
        }
        auto [a, b] = split_tensor_label(l);
        return left_.is_valid(a) && right_.is_valid(b);
    }
    Label conjugate(const Label& l) const override {
        auto [a, b] = split_tensor_label(l);
        return make_tensor_label(left_.conjugate(a), right_.conjugate(b));
    }
    Quantity dimension(const Label& l) const override {
        auto [a, b] = split_tensor_label(l);
        return left_.dim(a) * right_.dim(b);
    }
    ProductMap product(const Label& x, const Label& y) const override {
        auto [a, b] = split_tensor_label(x);
        auto [c, d] = split_tensor_label(y);
        ProductMap out;
        const auto& p = left_.product(a, c);
        const auto& q = right_.product(b, d);
        for (const auto& [u, n] : p) {
            for (const auto& [v, m] : q) {
                out.emplace(make_tensor_label(u, v), n * m);
            }
        }
        return out;
    }
    std::string render(const Label& l) const override {
        auto [a, b] = split_tensor_label(l);
        return "(" + left_.render(a) + "," + right_.render(b) + ")";
    }
    Label parse(std::string_view text) const override {
        auto inner = trim(text);
        if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')') {
            bad_label(text, description());
        }
        auto parts = split_top_level(inner.substr(1, inner.size() - 2));
        if (parts.size() != 2) {
            bad_label(text, description());
        }
        return make_tensor_label(left_.parse(parts[0]), right_.parse(parts[1]));
    }
    std::vector<Label> generators() const override {
        std::vector<Label> g;
        for (const auto& a : left_.generators()) {
            g.push_back(make_tensor_label(a, right_.unit()));
        }
        for (const auto& b : right_.generators()) {
            g.push_back(make_tensor_label(left_.unit(), b));
        }
        return g;
    }
    std::optional<std::vector<Label>> finite_basis() const override {
        auto a = left_.rules().finite_basis();
        auto b = right_.rules().finite_basis();
        if (!a || !b) {
            return std::nullopt;
        }
        std::vector<Label> all;
        for (const auto& x : *a) {
            for (const auto& y : *b) {
                all.push_back(make_tensor_label(x, y));
            }
        }
        return all;
    }

private:
    FusionRing left_;
    FusionRing right_;
};

// ---------------------------------------------------------------------------

class TableRules final : public FusionRules {
public:
    explicit TableRules(const TableSpec& spec) : names_(spec.labels), description_(spec.description) {
        const std::size_t n = names_.size();
        if (n == 0) {
            throw FusionError(ErrorKind::InvalidTable, "table ring has no labels");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (names_[i].find('|') != std::string::npos) {
                throw FusionError(ErrorKind::InvalidTable, "label \"" + names_[i] + "\" contains reserved '|'");
            }
            if (!index_.emplace(names_[i], static_cast<std::int64_t>(i)).second) {
                throw FusionError(ErrorKind::InvalidTable, "duplicate label \"" + names_[i] + "\"");
            }
        }
        unit_ = lookup(spec.unit, "unit");
        conj_.resize(n);
        dims_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = spec.conjugate.find(names_[i]);
            if (c == spec.conjugate.end()) {
                throw FusionError(ErrorKind::InvalidTable, "no conjugate given for \"" + names_[i] + "\"");
            }
            conj_[i] = lookup(c->second, "conjugate");
            auto d = spec.dim.find(names_[i]);
            if (d == spec.dim.end()) {
                throw FusionError(ErrorKind::InvalidTable, "no dimension given for \"" + names_[i] + "\"");
            }
            dims_[i] = d->second;
        }
        products_.resize(n * n);
        for (const auto& [key, coeffs] : spec.products) {
            const auto a = lookup(key.first, "product key");
            const auto b = lookup(key.second, "product key");
            ProductMap m;
            for (const auto& [name, k] : coeffs) {
                if (k != 0) {
                    m.emplace(Label{lookup(name, "product coefficient")}, k);
                }
            }
            products_[a * n + b] = std::move(m);
        }
    }

    std::string description() const override { return description_; }
    Label unit() const override { return Label{unit_}; }
    bool is_valid(const Label& l) const override {
        return l.size() == 1 && l[0] >= 0 && l[0] < static_cast<std::int64_t>(names_.size());
    }
    Label conjugate(const Label& l) const override { return Label{conj_[l[0]]}; }
    Quantity dimension(const Label& l) const override { return dims_[l[0]]; }
    ProductMap product(const Label& a, const Label& b) const override {
        const auto& entry = products_[a[0] * names_.size() + b[0]];
        if (!entry) {
            throw FusionError(ErrorKind::IncompleteTable,
                              "no product entry for \"" + names_[a[0]] + "|" + names_[b[0]] + "\"");
        }
        return *entry;
    }
    std::string render(const Label& l) const override { return names_[l[0]]; }
    Label parse(std::string_view text) const override {
        auto it = index_.find(std::string(trim(text)));
        if (it == index_.end()) {
            bad_label(text, description_);
        }
        return Label{it->second};
    }
    std::vector<Label> generators() const override {
        std::vector<Label> g;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (static_cast<std::int64_t>(i) != unit_) {
                g.push_back(Label{static_cast<std::int64_t>(i)});
            }
        }
        if (g.empty()) {
            g.push_back(Label{unit_});
        }
        return g;
    }
    std::optional<std::vector<Label>> finite_basis() const override {
        std::vector<Label> all;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            all.push_back(Label{static_cast<std::int64_t>(i)});
        }
        return all;
    }

private:
    std::int64_t lookup(const std::string& name, const char* what) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            throw FusionError(ErrorKind::InvalidTable, std::string(what) + " \"" + name + "\" is not a declared label");
        }
        return it->second;
    }

    std::vector<std::string> names_;
    std::string description_;
    std::map<std::string, std::int64_t> index_;
    std::int64_t unit_ = 0;
    std::vector<std::int64_t> conj_;
    std::vector<Quantity> dims_;
    std::vector<std::optional<ProductMap>> products_;
};

}  // namespace

// ---------------------------------------------------------------------------

Label make_tensor_label(const Label& a, const Label& b) {
    std::vector<std::int64_t> parts;
    parts.reserve(1 + a.size() + b.size());
    parts.push_back(static_cast<std::int64_t>(a.size()));
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Label(std::move(parts));
}

std::pair<Label, Label> split_tensor_label(const Label& label) {
    const auto parts = label.parts();
    const auto n = static_cast<std::size_t>(parts[0]);
    return {Label(std::vector<std::int64_t>(parts.begin() + 1, parts.begin() + 1 + n)),
            Label(std::vector<std::int64_t>(parts.begin() + 1 + n, parts.end()))};
}

FusionRing build_zd_ring(int d) {
    if (d < 1) {
        throw FusionError(ErrorKind::InvalidParam, "Z^d needs d >= 1");
    }
    return FusionRing(std::make_shared<ZdRules>(d));
}

FusionRing build_free_group_ring(int rank) {
    if (rank < 1 || rank > 26) {
        throw FusionError(ErrorKind::InvalidParam, "free group rank must be in [1, 26]");
    }
    return FusionRing(std::make_shared<FreeGroupRules>(rank));
}

FusionRing build_finite_group_ring(const std::vector<std::vector<int>>& table, std::vector<std::string> names) {
    const std::string desc = "finite group ring of order " + std::to_string(table.size());
    return FusionRing(std::make_shared<FiniteGroupRules>(table, std::move(names), desc, std::vector<Label>{}));
}

FusionRing build_cyclic_ring(int n) {
    if (n < 1) {
        throw FusionError(ErrorKind::InvalidParam, "cyclic group order must be >= 1");
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            table[i][j] = (i + j) % n;
        }
    }
    std::vector<Label> gens{Label{n > 1 ? 1 : 0}};
    return FusionRing(std::make_shared<FiniteGroupRules>(std::move(table), std::vector<std::string>{},
                                                         "Z/" + std::to_string(n) + " group ring", std::move(gens)));
}

FusionRing build_trivial_ring() {
    return FusionRing(std::make_shared<FiniteGroupRules>(std::vector<std::vector<int>>{{0}},
                                                         std::vector<std::string>{"e"}, "trivial ring",
                                                         std::vector<Label>{Label{0}}));
}

FusionRing build_group_ring(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::group_Zd: return build_zd_ring(spec.rank);
        case RingKind::group_free: return build_free_group_ring(spec.rank);
        case RingKind::group_finite_table: return build_finite_group_ring(spec.group_table, spec.group_names);
        default: throw FusionError(ErrorKind::InvalidParam, "build_group_ring needs a group kind");
    }
}

FusionRing build_su2_ring() { return FusionRing(std::make_shared<Su2Rules>(std::nullopt)); }

FusionRing build_deformed_su2_ring(int n) {
    if (n < 2) {
        throw FusionError(ErrorKind::InvalidParam, "deformed SU(2) needs n >= 2");
    }
    return FusionRing(std::make_shared<Su2Rules>(n));
}

FusionRing tensor_product(const FusionRing& left, const FusionRing& right) {
    return FusionRing(std::make_shared<TensorRules>(left, right));
}

FusionRing build_table_ring(const TableSpec& spec) { return FusionRing(std::make_shared<TableRules>(spec)); }

FusionRing build_ring(const RingSpec& spec) {
    switch (spec.kind) {
        case RingKind::group_Zd:
        case RingKind::group_free:
        case RingKind::group_finite_table: return build_group_ring(spec);
        case RingKind::su2: return build_su2_ring();
        case RingKind::deformed_su2: return build_deformed_su2_ring(spec.n);
        case RingKind::tensor_product:
            if (!spec.left || !spec.right) {
                throw FusionError(ErrorKind::InvalidParam, "tensor product needs two factor specs");
            }
            return tensor_product(build_ring(*spec.left), build_ring(*spec.right));
        case RingKind::table: return build_table_ring(spec.table);
        case RingKind::trivial: return build_trivial_ring();
    }
    throw FusionError(ErrorKind::InvalidParam, "unknown ring kind");
}

std::map<Label, Quantity> decomposition_weights(const FusionRing& ring, const std::map<Label, Integer>& decomposition) {
    if (decomposition.empty()) {
        throw FusionError(ErrorKind::InvalidParam, "empty decomposition");
    }
    Quantity total;
    for (const auto& [label, k] : decomposition) {
        if (k < 1) {
            throw FusionError(ErrorKind::InvalidParam, "multiplicity of " + ring.render(label) + " must be >= 1");
        }
        total += Quantity::exact(k) * ring.dim(label);
    }
    std::map<Label, Quantity> weights;
    const Quantity half = Quantity::exact(Rational(1, 2));
    for (const auto& [label, k] : decomposition) {
        const Quantity w = Quantity::exact(k) * ring.dim(label) / total * half;
        weights[label] += w;
        weights[ring.conjugate(label)] += w;
    }
    return weights;
}

ProbMeasure measure_from_decomposition(const FusionRing& ring, const std::map<Label, Integer>& decomposition) {
    std::map<Label, double> w;
    for (const auto& [label, q] : decomposition_weights(ring, decomposition)) {
        w.emplace(label, q.value());
    }
    return ProbMeasure(ring, w);
}

ProbMeasure uniform_generator_measure(const FusionRing& ring) {
    LabelSet support;
    for (const auto& g : ring.generators()) {
        support.insert(g);
        support.insert(ring.conjugate(g));
    }
    return ProbMeasure::uniform(ring, support);
}

}  // namespace fusionkit
