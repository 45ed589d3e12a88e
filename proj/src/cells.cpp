#include "adc/cells.hpp"
#include "adc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>

namespace adc {

Cell Cell::normalized() const
{
    Cell out = *this;
    while (out.rows.size() > 1 && out.rows.back().minus.is_zero() && out.rows.back().plus.is_zero())
        out.rows.pop_back();
    return out;
}

Cell Cell::padded(int n) const
{
    Cell out = *this;
    while (out.dim() < n) {
        const int q = out.dim() + 1;
        out.rows.push_back({Chain(q), Chain(q)});
    }
    return out;
}

Cell Cell::from_atom(const Atom& a, Side)
{
    Cell out;
    for (int q = 0; q <= a.degree; ++q)
        out.rows.push_back({a.minus[q], a.plus[q]});
    return out;
}

Cell Cell::point(const Id& id)
{
    return Cell{{{Chain::basis(0, id), Chain::basis(0, id)}}};
}

std::string Cell::str() const
{
    std::string out;
    for (int q = 0; q <= dim(); ++q) {
        if (q)
            out += "; ";
        out += fmt::format("{}: ({} | {})", q, rows[q].minus.str(), rows[q].plus.str());
    }
    return out;
}

ValidationReport validate_cell(const Complex& k, const Cell& c)
{
    ValidationReport report;
    auto flag = [&](std::string code, std::string message) {
        report.violations.push_back({std::move(code), "", std::move(message)});
    };
    if (c.rows.empty()) {
        flag("empty", "cell has no rows");
        return report;
    }
    for (int q = 0; q <= c.dim(); ++q) {
        for (Side side : {Side::Minus, Side::Plus}) {
            const Chain& x = c.row(q, side);
            const char* s = side == Side::Minus ? "-" : "+";
            if (x.degree() != q)
                flag("degree", fmt::format("x_{}^{} has degree {}", q, s, x.degree()));
            if (!x.is_nonnegative())
                flag("sign", fmt::format("x_{}^{} has a negative coefficient", q, s));
            for (const auto& [id, coef] : x.terms()) {
                auto deg = k.find_degree(id);
                if (!deg || *deg != q)
                    flag("unknown", fmt::format("x_{}^{} references {} which is not a degree-{} generator", q, s, id, q));
            }
        }
    }
    if (!report.ok())
        return report;
    if (c.rows.back().minus != c.rows.back().plus)
        flag("top", fmt::format("top row mismatch: x_{}^- ≠ x_{}^+", c.dim(), c.dim()));
    for (int q = 1; q <= c.dim(); ++q) {
        const Chain expected = c.rows[q - 1].plus - c.rows[q - 1].minus;
        for (Side side : {Side::Minus, Side::Plus})
            if (k.d(c.row(q, side)) != expected)
                flag("d", fmt::format("d(x_{}^{}) ≠ x_{}^+ - x_{}^-", q, side == Side::Minus ? "-" : "+", q - 1, q - 1));
    }
    if (k.aug(c.rows[0].minus) != 1)
        flag("aug", "aug(x_0^-) ≠ 1");
    if (k.aug(c.rows[0].plus) != 1)
        flag("aug", "aug(x_0^+) ≠ 1");
    return report;
}

Cell boundary_restrict(const Cell& c, int p, Side side)
{
    if (p < 0)
        throw Error(ErrorKind::InvalidCell, fmt::format("boundary_restrict at negative p = {}", p));
    if (p >= c.dim())
        return c;
    Cell out;
    out.rows.assign(c.rows.begin(), c.rows.begin() + p);
    const Chain& top = c.row(p, side);
    out.rows.push_back({top, top});
    return out.normalized();
}

bool composable(const Cell& x, const Cell& y, int p)
{
    return p >= 0 && boundary_restrict(x, p, Side::Plus) == boundary_restrict(y, p, Side::Minus);
}

Cell compose(const Complex& k, const Cell& x, const Cell& y, int p)
{
    if (p < 0)
        throw Error(ErrorKind::NotComposable, fmt::format("negative composition level {}", p));
    const Cell tx = boundary_restrict(x, p, Side::Plus);
    const Cell sy = boundary_restrict(y, p, Side::Minus);
    if (tx != sy) {
        const int n = std::max(tx.dim(), sy.dim());
        const Cell a = tx.padded(n), b = sy.padded(n);
        int q = 0;
        while (q <= n && a.rows[q] == b.rows[q])
            ++q;
        throw Error(ErrorKind::NotComposable,
                    fmt::format("t_{0}(x) and s_{0}(y) first differ in row {1}", p, q));
    }
    const int n = std::max({x.dim(), y.dim(), p});
    const Cell a = x.padded(n), b = y.padded(n);
    Cell out;
    for (int q = 0; q <= n; ++q) {
        if (q < p)
            out.rows.push_back(a.rows[q]);
        else if (q == p)
            out.rows.push_back({a.rows[q].minus, b.rows[q].plus});
        else
            out.rows.push_back({a.rows[q].minus + b.rows[q].minus, a.rows[q].plus + b.rows[q].plus});
    }
    out = out.normalized();
    auto report = validate_cell(k, out);
    if (!report.ok())
        throw Error(ErrorKind::InvalidCell, fmt::format("composite is not a cell: {}", report.str()));
    return out;
}

std::uint64_t default_enum_limit()
{
    if (const char* env = std::getenv("ADC_ENUM_LIMIT")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 2'000'000;
}

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t to_small(const Integer& v)
{
    if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
        throw Error(ErrorKind::BoundExceeded, "coefficient too large for bounded enumeration");
    return static_cast<std::int64_t>(v);
}

// Dense per-degree view of a complex used by the Diophantine search.
class DenseComplex {
public:
    explicit DenseComplex(const Complex& k) : k_(k)
    {
        const int top = k.dimension();
        ids_.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
        for (int q = 0; q <= top; ++q) {
            ids_[q] = k.ids_of_degree(q);
            std::sort(ids_[q].begin(), ids_[q].end());
            for (std::size_t i = 0; i < ids_[q].size(); ++i)
                pos_[ids_[q][i]] = i;
        }
        // matrix_[q][row][col]: coefficient of row (degree q-1, or the
        // single augmentation row for q = 0) in d(col).
        matrix_.resize(ids_.size());
        for (int q = 0; q <= top; ++q) {
            const std::size_t cols = ids_[q].size();
            if (q == 0) {
                matrix_[0].assign(1, Vec(cols, 0));
                for (std::size_t j = 0; j < cols; ++j)
                    matrix_[0][0][j] = to_small(k.aug(ids_[0][j]));
            } else {
                matrix_[q].assign(ids_[q - 1].size(), Vec(cols, 0));
                for (std::size_t j = 0; j < cols; ++j)
                    for (const Chain chain = k.d(ids_[q][j]); const auto& [t, coef] : chain.terms())
                        matrix_[q][pos_.at(t)][j] = to_small(coef);
            }
        }
    }

    int top() const { return static_cast<int>(ids_.size()) - 1; }
    std::size_t width(int q) const { return q >= 0 && q <= top() ? ids_[q].size() : 0; }

    Vec vec(const Chain& c) const
    {
        Vec out(width(c.degree()), 0);
        for (const auto& [id, coef] : c.terms())
            out[pos_.at(id)] = to_small(coef);
        return out;
    }

    Chain chain(int q, const Vec& v) const
    {
        Chain out(q);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i])
                out.add(ids_[q][i], v[i]);
        return out;
    }

    // All z in [0, bound]^width(q) with M_q z = target.
    const std::vector<Vec>& solve(int q, const Vec& target, int bound, std::uint64_t& budget, std::uint64_t limit)
    {
        auto key = std::make_pair(q, target);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        std::vector<Vec> found;
        const std::size_t cols = width(q);
        if (cols == 0) {
            bool zero = std::all_of(target.begin(), target.end(), [](auto v) { return v == 0; });
            if (zero)
                found.push_back(Vec());
            return memo_.emplace(key, std::move(found)).first->second;
        }
        const auto& m = matrix_[q];
        const std::size_t rows = m.size();
        // Suffix bounds on what columns j.. can still contribute per row.
        std::vector<Vec> lo(cols + 1, Vec(rows, 0)), hi(cols + 1, Vec(rows, 0));
        for (std::size_t j = cols; j-- > 0;)
            for (std::size_t i = 0; i < rows; ++i) {
                const std::int64_t c = m[i][j] * bound;
                lo[j][i] = lo[j + 1][i] + std::min<std::int64_t>(0, c);
                hi[j][i] = hi[j + 1][i] + std::max<std::int64_t>(0, c);
            }
        Vec residual = target;
        Vec z(cols, 0);
        std::function<void(std::size_t)> go = [&](std::size_t j) {
            for (std::size_t i = 0; i < rows; ++i)
                if (residual[i] < lo[j][i] || residual[i] > hi[j][i])
                    return;
            if (j == cols) {
                found.push_back(z);
                if (++budget > limit)
                    throw Error(ErrorKind::BoundExceeded,
                                fmt::format("cell enumeration in {} exceeded {} solutions", k_.name(), limit));
                return;
            }
            for (int v = 0; v <= bound; ++v) {
                z[j] = v;
                if (v)
                    for (std::size_t i = 0; i < rows; ++i)
                        residual[i] -= m[i][j];
                go(j + 1);
            }
            for (std::size_t i = 0; i < rows; ++i)
                residual[i] += m[i][j] * bound;
            z[j] = 0;
        };
        go(0);
        return memo_.emplace(key, std::move(found)).first->second;
    }

private:
    const Complex& k_;
    std::vector<std::vector<Id>> ids_;
    std::map<Id, std::size_t> pos_;
    std::vector<std::vector<Vec>> matrix_;
    std::map<std::pair<int, Vec>, std::vector<Vec>> memo_;
};

} // namespace

std::vector<Chain> solve_boundary(const Complex& k, int q, const Chain& target, int coeff_bound,
                                  const EnumOptions& options)
{
    DenseComplex dense(k);
    const std::uint64_t limit = options.limit ? options.limit : default_enum_limit();
    std::uint64_t budget = 0;
    if (q < 0 || q > dense.top())
        return target.is_zero() && q >= 1 ? std::vector<Chain>{Chain(q)} : std::vector<Chain>{};
    Vec t = q == 0 ? Vec{1} : dense.vec(target);
    std::vector<Chain> out;
    for (const Vec& z : dense.solve(q, t, coeff_bound, budget, limit))
        out.push_back(dense.chain(q, z));
    return out;
}

std::vector<Cell> enumerate_cells(const Complex& k, int max_dim, int coeff_bound, const EnumOptions& options)
{
    std::set<Cell> cells;
    if (k.empty() || max_dim < 0)
        return {};
    DenseComplex dense(k);
    const std::uint64_t limit = options.limit ? options.limit : default_enum_limit();
    std::uint64_t budget = 0;

    struct Prefix {
        std::vector<std::pair<Vec, Vec>> rows;
    };
    auto to_cell = [&](const Prefix& p) {
        Cell c;
        for (std::size_t q = 0; q < p.rows.size(); ++q)
            c.rows.push_back({dense.chain(static_cast<int>(q), p.rows[q].first),
                              dense.chain(static_cast<int>(q), p.rows[q].second)});
        return c.normalized();
    };

    std::vector<Prefix> level;
    const auto& points = dense.solve(0, Vec{1}, coeff_bound, budget, limit);
    for (const Vec& a : points)
        for (const Vec& b : points) {
            level.push_back({{{a, b}}});
            if (a == b)
                cells.insert(to_cell(level.back()));
            if (++budget > limit)
                throw Error(ErrorKind::BoundExceeded, fmt::format("cell enumeration in {} exceeded {}", k.name(), limit));
        }

    const int reach = std::min(max_dim, dense.top());
    for (int q = 0; q < reach; ++q) {
        std::vector<Prefix> next;
        const bool last = q + 1 == reach;
        for (const Prefix& p : level) {
            const auto& [minus, plus] = p.rows.back();
            Vec target(plus.size());
            for (std::size_t i = 0; i < plus.size(); ++i)
                target[i] = plus[i] - minus[i];
            const bool closed = minus == plus;
            const auto& sols = dense.solve(q + 1, target, coeff_bound, budget, limit);
            for (const Vec& zm : sols) {
                for (const Vec& zp : sols) {
                    const bool zero = std::all_of(zm.begin(), zm.end(), [](auto v) { return v == 0; }) &&
                                      std::all_of(zp.begin(), zp.end(), [](auto v) { return v == 0; });
                    if (closed && zero)
                        continue; // same cell as the prefix
                    if (last && zm != zp)
                        continue;
                    Prefix ext = p;
                    ext.rows.emplace_back(zm, zp);
                    if (zm == zp)
                        cells.insert(to_cell(ext));
                    if (!last)
                        next.push_back(std::move(ext));
                    if (++budget > limit)
                        throw Error(ErrorKind::BoundExceeded,
                                    fmt::format("cell enumeration in {} exceeded {}", k.name(), limit));
                }
            }
        }
        level = std::move(next);
    }
    // Every table built above satisfies the cell laws by construction;
    // validation only filters malformed input complexes.
    std::vector<Cell> out;
    for (const Cell& c : cells)
        if (validate_cell(k, c).ok())
            out.push_back(c);
    std::stable_sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.dim() < b.dim(); });
    return out;
}

std::vector<std::size_t> cell_counts(const std::vector<Cell>& cells)
{
    std::vector<std::size_t> out;
    for (const Cell& c : cells) {
        if (out.size() <= static_cast<std::size_t>(c.dim()))
            out.resize(static_cast<std::size_t>(c.dim()) + 1, 0);
        ++out[static_cast<std::size_t>(c.dim())];
    }
    return out;
}

Cell total_cell(const Complex& k)
{
    const int top = k.dimension();
    if (top < 0)
        throw Error(ErrorKind::InvalidCell, "the empty complex has no total cell");
    std::vector<std::set<Id>> in_plus(static_cast<std::size_t>(top + 1)), in_minus(static_cast<std::size_t>(top + 1));
    for (const auto& b : k.basis()) {
        if (b.degree == 0)
            continue;
        auto parts = pos_neg_parts(k.d(b.id));
        for (const auto& [id, coef] : parts.positive.terms())
            in_plus[b.degree - 1].insert(id);
        for (const auto& [id, coef] : parts.negative.terms())
            in_minus[b.degree - 1].insert(id);
    }
    Cell out;
    for (int q = 0; q <= top; ++q) {
        Chain minus(q), plus(q);
        for (const Id& id : k.ids_of_degree(q)) {
            if (!in_plus[q].count(id))
                minus.add(id, 1);
            if (!in_minus[q].count(id))
                plus.add(id, 1);
        }
        out.rows.push_back({minus, plus});
    }
    return out.normalized();
}

} // namespace adc
