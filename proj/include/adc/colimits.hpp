#pragma once

#include "adc/basis.hpp"
#include "adc/cells.hpp"
#include "adc/complex.hpp"

#include <functional>
#include <string>
#include <vector>

namespace adc {

/// Prefixes applied to the ids of each side before gluing.
struct GluePrefixes {
    std::string left;
    std::string right;
};

/// Pushout of a ⊇ sa ≅ sb ⊆ b along `ident` (sa ids -> sb ids). Identified
/// elements keep their (prefixed) id from a. Marks are taken from a.
/// Throws NotASubcomplex, IncompatibleIdentification, IdCollision.
Complex glue(const Complex& a, const Complex& b, const Subcomplex& sa, const Subcomplex& sb, const Bijection& ident,
             const GluePrefixes& prefixes = {});

struct Collapse {
    Complex result;
    ChainMap quotient;
};

/// Each connected component of s (shared differential support) becomes one
/// fresh point "[<first member>]". Throws NotASubcomplex.
Collapse collapse_components(const Complex& a, const Subcomplex& s);

/// One cell attachment. For m = 0 both cells are empty tables and a point
/// is added; otherwise both are cells of dimension <= m-1 which agree below
/// row m-1.
struct AttachStep {
    int m = 0;
    Cell source;
    Cell target;
    Id new_id;
};

struct AttachResult {
    Complex result;
    bool site_member = false;
};

/// Throws StaleId, NotParallel, InvalidCell.
AttachResult attach_cell(const Complex& base, const AttachStep& step);

/// Replaces s ⊆ b by f(s): basis(f.target) then basis(b) \ s, with every
/// s-term of a differential replaced by its f-image.
/// Throws NotASubcomplex, InvalidChainMap.
Complex pushout_along_chain_map(const Complex& b, const Subcomplex& s, const ChainMap& f);

/// Steps rebuilding k from s, ordered by (degree, id); each uses the atom
/// boundary of its generator. Throws NotUnital.
std::vector<AttachStep> attachment_sequence(const Complex& k, const Subcomplex& s);

/// Applies `steps` starting from the extracted subcomplex.
Complex replay(const Complex& k, const Subcomplex& s, const std::vector<AttachStep>& steps);

/// One J_S generator, presented by its span (base, step, result).
struct JsGenerator {
    Complex base;
    AttachStep step;
    Complex result;
    bool site_member = false;
};

struct JsOptions {
    std::size_t max_generators = 4;
    int max_dim = 2;
    int coeff_bound = 2;
    /// Suppress emissions whose result is isomorphic to an earlier one
    /// from the same base.
    bool dedupe = false;
    /// Emit attachments that leave the site too (flagged false).
    bool include_non_members = false;
    EnumOptions enum_options;
};

/// Explores site objects reachable from the seeds by attachments (bases up
/// to max_generators, one representative per isomorphism class) and emits
/// every attachment of dimension <= max_dim along a parallel pair of cells.
/// Throws BoundExceeded.
void enumerate_js(const std::vector<Complex>& seeds, const JsOptions& options,
                  const std::function<void(const JsGenerator&)>& emit);

std::vector<JsGenerator> enumerate_js(const std::vector<Complex>& seeds, const JsOptions& options);

} // namespace adc
