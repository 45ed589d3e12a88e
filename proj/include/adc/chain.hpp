#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adc {

using Integer = boost::multiprecision::cpp_int;
using Id = std::string;

/// Integer linear combination of basis elements of one fixed degree.
///
/// Terms are kept sorted by id with no zero coefficients, so two chains are
/// equal iff they are structurally equal.
class Chain {
public:
    using Terms = std::map<Id, Integer>;

    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}
    Chain(int degree, std::initializer_list<std::pair<const Id, Integer>> terms);

    static Chain basis(int degree, const Id& id) { return Chain(degree, {{id, 1}}); }

    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const Id& id) const;
    std::set<Id> support() const;

    /// Adds `coef * id`; a resulting zero coefficient is erased.
    void add(const Id& id, const Integer& coef);
    void add(const Chain& other, const Integer& scale = 1);

    bool is_nonnegative() const;

    Chain operator-() const;
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Integer& k, const Chain& c);

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const Chain& a, const Chain& b) {
        if (a.degree_ != b.degree_)
            return a.degree_ < b.degree_;
        return a.terms_ < b.terms_;
    }

    std::string str() const;

private:
    int degree_ = 0;
    Terms terms_;
};

/// Sign decomposition: c = positive - negative with disjoint supports.
struct SignParts {
    Chain positive;
    Chain negative;
};

SignParts pos_neg_parts(const Chain& c);

} // namespace adc
