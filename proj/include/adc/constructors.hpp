#pragma once

#include "adc/complex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace adc {

/// The empty complex (S^{-1}).
Complex empty_complex();
/// One point "*", bipointed at itself.
Complex point();

/// The n-globe; with `boundary` the top generator is dropped.
/// Ids e0-, e0+, ..., e{n-1}-, e{n-1}+, e{n}.
Complex globe(int n, bool boundary = false);

/// The Gray cube, the n-fold Gray tensor power of the arrow {-, +, ι}.
Complex cube(int n, bool boundary = false);

/// Drops every basis element of top degree.
Complex boundary(const Complex& k);

/// Ids o-, o+ and s.<id>; d(s.b) = aug(b)(o+ - o-) in degree 1.
Complex suspension(const Complex& k);

/// Identifies a.target with b.source; ids are prefixed "l." and "r.".
/// Throws MissingBipointing.
Complex wedge(const Complex& a, const Complex& b);

/// Total dual: every positive-degree differential negated, marks swapped.
Complex dual(const Complex& k);

/// Planar tree presenting a Θ-object. A leaf is the point; a node with
/// children t1..tr is Σt1 ∨ ... ∨ Σtr.
struct ThetaExpr {
    std::vector<ThetaExpr> children;

    bool is_leaf() const noexcept { return children.empty(); }
    int dimension() const;
    /// Number of basis elements of the presented complex.
    std::size_t generator_count() const;
    std::string str() const;

    /// "0" or "(e1,...,er)"; whitespace ignored. Throws ParseError.
    static ThetaExpr parse(std::string_view text);

    friend bool operator==(const ThetaExpr&, const ThetaExpr&) = default;
};

Complex theta_from_expr(const ThetaExpr& t);

/// Every expression of dimension <= max_dim with at most max_generators
/// basis elements, once each, ordered by (generator count, text).
std::vector<ThetaExpr> enumerate_theta(int max_dim, std::size_t max_generators);

} // namespace adc
