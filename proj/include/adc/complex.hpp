#pragma once

#include "adc/chain.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace adc {

struct BasisElement {
    Id id;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Bipointing: a distinguished source and target object.
struct Marks {
    Id source;
    Id target;

    friend bool operator==(const Marks&, const Marks&) = default;
};

/// A finitely based augmented directed complex.
///
/// The object holds arbitrary data; use validate_adc() to check the chain
/// complex laws. Only id uniqueness is enforced on insertion. Basis order is
/// insertion order and is preserved by serialization.
class Complex {
public:
    Complex() = default;
    explicit Complex(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool empty() const noexcept { return basis_.empty(); }
    bool contains(const Id& id) const { return index_.count(id) != 0; }

    /// Throws UnknownBasisElement.
    int degree_of(const Id& id) const;
    std::optional<int> find_degree(const Id& id) const;

    /// Largest degree present, or -1 for the empty complex.
    int dimension() const;
    std::vector<Id> ids_of_degree(int degree) const;
    /// counts()[k] is the number of basis elements of degree k.
    std::vector<std::size_t> counts() const;

    /// Throws IdCollision if `id` already exists.
    void add(const Id& id, int degree);
    void add(const Id& id, int degree, Chain boundary);

    /// Stores the differential of `id`; a zero chain clears the entry.
    void set_d(const Id& id, Chain boundary);
    void set_aug(const Id& id, Integer value);
    void set_marks(std::optional<Marks> marks) { marks_ = std::move(marks); }

    /// Differential of a basis element (zero chain if absent).
    Chain d(const Id& id) const;
    /// Linear extension of d.
    Chain d(const Chain& c) const;
    /// Augmentation of a degree-0 element (default 1).
    Integer aug(const Id& id) const;
    Integer aug(const Chain& c) const;

    const std::optional<Marks>& marks() const noexcept { return marks_; }
    const std::map<Id, Chain>& differentials() const noexcept { return d_; }
    const std::map<Id, Integer>& augmentations() const noexcept { return aug_; }

    /// Restriction to a member set; marks survive only if both marks do.
    Complex restricted(const std::set<Id>& members) const;
    /// Copy with every id prefixed (differentials, augmentations, marks too).
    Complex prefixed(const std::string& prefix) const;

    friend bool operator==(const Complex& a, const Complex& b);

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::unordered_map<Id, std::size_t> index_;
    std::map<Id, Chain> d_;
    std::map<Id, Integer> aug_;
    std::optional<Marks> marks_;
};

Chain prefix_chain(const Chain& c, const std::string& prefix);

struct Violation {
    std::string code;
    Id id;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool mentions(const std::string& text) const;
    std::string str() const;
};

ValidationReport validate_adc(const Complex& k);

/// Degree-preserving assignment of target chains to source basis elements.
/// Missing entries map to zero.
struct ChainMap {
    Complex source;
    Complex target;
    std::map<Id, Chain> values;

    Chain value(const Id& id) const;
    Chain apply(const Chain& c) const;
};

ValidationReport validate_chain_map(const ChainMap& f);

/// g after f. Requires f.target and g.source to agree.
ChainMap compose(const ChainMap& f, const ChainMap& g);

ChainMap identity_map(const Complex& k);

} // namespace adc
