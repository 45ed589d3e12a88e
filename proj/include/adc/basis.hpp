#pragma once

#include "adc/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace adc {

/// Atom table of a basis element b of degree n: for 0 <= k <= n the pair
/// (<b>_k^-, <b>_k^+), obtained by taking negative/positive parts of the
/// differential going down from <b>_n^- = <b>_n^+ = b.
struct Atom {
    Id generator;
    int degree = 0;
    std::vector<Chain> minus; // indexed by k
    std::vector<Chain> plus;
};

/// Throws UnknownBasisElement.
Atom atom(const Complex& k, const Id& b);

struct UnitalResult {
    bool ok = true;
    std::optional<Id> counterexample;
};

/// Every atom has augmentation 1 on both degree-0 entries.
UnitalResult is_unital(const Complex& k);

struct LoopFreeResult {
    bool ok = true;
    /// Lexicographically least cycle (as a sequence starting at its least id)
    /// of the one-step relation; empty when ok.
    std::vector<Id> cycle;
};

/// Acyclicity of x -> y whenever x is in supp(d y)^- or y is in supp(d x)^+.
LoopFreeResult is_strongly_loop_free(const Complex& k);

/// Membership in the site used throughout: unital and strongly loop-free.
bool is_site_member(const Complex& k);

struct Subcomplex {
    std::set<Id> members;

    friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
};

bool is_subcomplex(const Complex& k, const Subcomplex& s);

/// Smallest subcomplex containing the seed. Throws UnknownBasisElement.
Subcomplex subcomplex_closure(const Complex& k, const std::set<Id>& seed);

/// The subcomplex as a standalone complex. Throws NotASubcomplex.
Complex extract(const Complex& k, const Subcomplex& s);

using Bijection = std::map<Id, Id>;

struct IsoOptions {
    /// Maximum number of candidate assignments tried; 0 means the default
    /// (ADC_SEARCH_BUDGET environment variable, else 2'000'000).
    std::uint64_t node_budget = 0;
};

std::uint64_t default_search_budget();

/// Exhaustive search for a basis bijection commuting with d, aug and marks
/// (when both sides carry marks). nullopt is a proof that none exists.
/// Throws SearchBudgetExceeded when the budget runs out.
std::optional<Bijection> find_isomorphism(const Complex& a, const Complex& b, const IsoOptions& options = {});

/// Checks that `map` is a basis isomorphism a -> b.
bool is_isomorphism(const Complex& a, const Complex& b, const Bijection& map);

} // namespace adc
