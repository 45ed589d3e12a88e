#pragma once

#include "adc/basis.hpp"
#include "adc/cells.hpp"
#include "adc/constructors.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adc {

enum class Status { Pass, Fail, Skipped, Error };

const char* to_string(Status s);

/// One named sub-assertion of a checker.
struct Part {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

/// Result of one checker on one input. Failures of the checked statement
/// are Fail; resource limits are Skipped or Error, never Fail.
struct CheckReport {
    CheckReport() = default;
    CheckReport(std::string check_name, std::string subject_name)
        : check(std::move(check_name)), subject(std::move(subject_name)) {}

    std::string check;
    std::string subject;
    Status status = Status::Pass;
    std::vector<Part> parts;
    std::vector<std::string> notes;
    std::optional<Bijection> bijection;
    std::vector<Cell> matches;

    bool passed() const noexcept { return status == Status::Pass; }
    /// Appends a part and folds its status into the overall one
    /// (Error over Fail over Skipped over Pass).
    void add(std::string name, Status s, std::string detail = {});
    void add(std::string name, bool ok, std::string detail = {});
    std::string str() const;
};

/// □¹⊗C with ∂□¹⊗C collapsed onto ∂□¹ is the suspension of C.
CheckReport check_susp_tensor(const Complex& c);

/// □¹⊗ΣC is the funny square with Σ(□¹⊗C) attached along Σ(∂□¹⊗C).
CheckReport check_decomp(const Complex& c);

struct BigCellOptions {
    int coeff_bound = 3;
    /// Bound compared against coeff_bound; the count must not change.
    int stabilization_bound = 4;
    /// Complexes with at most this many basis elements are checked by full
    /// enumeration of cells, larger ones by solving for the top row.
    std::size_t full_enumeration_max = 16;
    EnumOptions enum_options;
};

/// The big cell of □¹⊗θ is the only cell with its boundary.
CheckReport check_big_cell_unique(const ThetaExpr& theta, const BigCellOptions& options = {});

struct CubeGlobeOptions {
    /// Node budget of the split epimorphism search; 0 means the default.
    std::uint64_t search_budget = 0;
};

/// Monic half: □^m = ∂□^m with its top cell attached. Epi half: a chain map
/// r: □^m → 𝔾_m split by the big-cell section, whose pushout along ∂□^m is
/// 𝔾_m. The epi half is Skipped when the budget runs out.
CheckReport check_cube_globe(int m, const CubeGlobeOptions& options = {});

/// A chain map cube(m) -> globe(m) with coefficients in {0,1} and r∘s = id
/// for the big-cell section s, if the search finds one within budget.
/// Throws SearchBudgetExceeded.
std::optional<ChainMap> find_cube_globe_retraction(int m, std::uint64_t budget = 0);

/// The section globe(m) -> cube(m) sending e_k^∓ to the atom rows of the
/// top cube generator.
ChainMap cube_globe_section(int m);

/// Every complex and every pairwise Gray tensor is unital and strongly
/// loop-free.
CheckReport check_site_closure(const std::vector<Complex>& corpus);

/// Count convolution and exact unit laws for all pairs; associativity up to
/// isomorphism for triples whose product has at most max_product basis
/// elements.
CheckReport check_tensor_laws(const std::vector<Complex>& corpus, std::size_t max_product = 60);

/// Replaying attachment_sequence(k, ∅) rebuilds k.
CheckReport check_filtration(const Complex& k);

struct OmegaOptions {
    int coeff_bound = 3;
    int stabilization_bound = 4;
    EnumOptions enum_options;
};

/// Associativity, unit and interchange laws over all enumerated cells.
CheckReport check_omega_laws(const Complex& k, const OmegaOptions& options = {});

struct SuiteConfig {
    std::vector<Complex> corpus;
    std::vector<ThetaExpr> thetas;
    int max_m = 3;
    bool properties = true;

    static SuiteConfig defaults();
};

struct TimedReport {
    CheckReport report;
    double seconds = 0;
};

struct SuiteReport {
    std::vector<TimedReport> reports;
    std::vector<std::string> warnings;

    bool passed() const;
    bool resource_limited() const;
    /// Fixed-width table, one line per report.
    std::string table() const;
};

/// Runs every checker over the configured inputs in configuration order.
SuiteReport run_suite(const SuiteConfig& config);

} // namespace adc
