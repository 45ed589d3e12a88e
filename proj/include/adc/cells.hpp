#pragma once

#include "adc/basis.hpp"
#include "adc/complex.hpp"

#include <cstdint>
#include <vector>

namespace adc {

struct CellRow {
    Chain minus;
    Chain plus;

    friend bool operator==(const CellRow&, const CellRow&) = default;
    friend bool operator<(const CellRow& a, const CellRow& b)
    {
        if (a.minus != b.minus)
            return a.minus < b.minus;
        return a.plus < b.plus;
    }
};

enum class Side { Minus, Plus };

/// Steiner double sequence (x_q^-, x_q^+), 0 <= q <= dim.
///
/// Normal form: no trailing all-zero rows, so the dimension is the largest
/// q with a nonzero row. Higher rows are implicitly zero.
struct Cell {
    std::vector<CellRow> rows;

    int dim() const noexcept { return static_cast<int>(rows.size()) - 1; }
    const Chain& row(int q, Side side) const
    {
        return side == Side::Minus ? rows[static_cast<std::size_t>(q)].minus : rows[static_cast<std::size_t>(q)].plus;
    }

    /// Trailing zero rows removed (a lone zero row 0 is kept).
    Cell normalized() const;
    /// Zero rows appended up to dimension n (no-op if already higher).
    Cell padded(int n) const;

    static Cell from_atom(const Atom& a, Side side_for_top = Side::Minus);
    static Cell point(const Id& id);

    std::string str() const;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend bool operator<(const Cell& a, const Cell& b) { return a.rows < b.rows; }
};

ValidationReport validate_cell(const Complex& k, const Cell& c);

/// s_p (Minus) or t_p (Plus): rows below p kept, row p set to x_p^side on
/// both sides. For p >= dim the cell itself.
Cell boundary_restrict(const Cell& c, int p, Side side);

/// x ∘_p y. Throws NotComposable naming the first differing row.
Cell compose(const Complex& k, const Cell& x, const Cell& y, int p);

bool composable(const Cell& x, const Cell& y, int p);

struct EnumOptions {
    /// Cap on solutions/prefixes explored; 0 means the default
    /// (ADC_ENUM_LIMIT environment variable, else 2'000'000).
    std::uint64_t limit = 0;
};

std::uint64_t default_enum_limit();

/// All cells of dimension <= max_dim whose coefficients are all at most
/// coeff_bound, deduplicated and sorted. Throws BoundExceeded.
std::vector<Cell> enumerate_cells(const Complex& k, int max_dim, int coeff_bound, const EnumOptions& options = {});

/// Nonnegative chains z of degree q with d z = target and coefficients at
/// most coeff_bound (for q = 0: aug z = 1). Throws BoundExceeded.
std::vector<Chain> solve_boundary(const Complex& k, int q, const Chain& target, int coeff_bound,
                                  const EnumOptions& options = {});

/// counts[q] = number of cells of dimension q.
std::vector<std::size_t> cell_counts(const std::vector<Cell>& cells);

/// The composite of the whole complex seen as a pasting diagram: top row is
/// the sum of top generators, x_q^- (x_q^+) the sum of degree-q generators
/// not in the positive (negative) part of any degree-(q+1) differential.
Cell total_cell(const Complex& k);

} // namespace adc
