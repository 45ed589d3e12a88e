#include "adc/complex.hpp"
#include "adc/error.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace adc {

int Complex::degree_of(const Id& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        throw Error(ErrorKind::UnknownBasisElement, fmt::format("'{}' not in {}", id, name_));
    return basis_[it->second].degree;
}

std::optional<int> Complex::find_degree(const Id& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return basis_[it->second].degree;
}

int Complex::dimension() const
{
    int dim = -1;
    for (const auto& b : basis_)
        dim = std::max(dim, b.degree);
    return dim;
}

std::vector<Id> Complex::ids_of_degree(int degree) const
{
    std::vector<Id> out;
    for (const auto& b : basis_)
        if (b.degree == degree)
            out.push_back(b.id);
    return out;
}

std::vector<std::size_t> Complex::counts() const
{
    std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& b : basis_)
        if (b.degree >= 0)
            ++out[static_cast<std::size_t>(b.degree)];
    return out;
}

void Complex::add(const Id& id, int degree)
{
    if (index_.count(id))
        throw Error(ErrorKind::IdCollision, fmt::format("duplicate id '{}' in {}", id, name_));
    index_.emplace(id, basis_.size());
    basis_.push_back({id, degree});
}

void Complex::add(const Id& id, int degree, Chain boundary)
{
    add(id, degree);
    set_d(id, std::move(boundary));
}

void Complex::set_d(const Id& id, Chain boundary)
{
    if (boundary.is_zero())
        d_.erase(id);
    else
        d_[id] = std::move(boundary);
}

void Complex::set_aug(const Id& id, Integer value)
{
    aug_[id] = std::move(value);
}

Chain Complex::d(const Id& id) const
{
    auto it = d_.find(id);
    if (it != d_.end())
        return it->second;
    auto deg = find_degree(id);
    return Chain(deg ? *deg - 1 : -1);
}

Chain Complex::d(const Chain& c) const
{
    Chain out(c.degree() - 1);
    for (const auto& [id, coef] : c.terms()) {
        auto it = d_.find(id);
        if (it != d_.end())
            out.add(it->second, coef);
    }
    return out;
}

Integer Complex::aug(const Id& id) const
{
    auto it = aug_.find(id);
    return it == aug_.end() ? Integer(1) : it->second;
}

Integer Complex::aug(const Chain& c) const
{
    Integer total = 0;
    for (const auto& [id, coef] : c.terms())
        total += coef * aug(id);
    return total;
}

Complex Complex::restricted(const std::set<Id>& members) const
{
    Complex out(name_);
    for (const auto& b : basis_) {
        if (!members.count(b.id))
            continue;
        out.add(b.id, b.degree);
        auto dit = d_.find(b.id);
        if (dit != d_.end())
            out.set_d(b.id, dit->second);
        auto ait = aug_.find(b.id);
        if (ait != aug_.end())
            out.set_aug(b.id, ait->second);
    }
    if (marks_ && members.count(marks_->source) && members.count(marks_->target))
        out.set_marks(marks_);
    return out;
}

Chain prefix_chain(const Chain& c, const std::string& prefix)
{
    Chain out(c.degree());
    for (const auto& [id, coef] : c.terms())
        out.add(prefix + id, coef);
    return out;
}

Complex Complex::prefixed(const std::string& prefix) const
{
    Complex out(name_);
    for (const auto& b : basis_)
        out.add(prefix + b.id, b.degree);
    for (const auto& [id, c] : d_)
        out.set_d(prefix + id, prefix_chain(c, prefix));
    for (const auto& [id, a] : aug_)
        out.set_aug(prefix + id, a);
    if (marks_)
        out.set_marks(Marks{prefix + marks_->source, prefix + marks_->target});
    return out;
}

bool operator==(const Complex& a, const Complex& b)
{
    if (a.name_ != b.name_ || a.basis_ != b.basis_ || a.d_ != b.d_ || a.marks_ != b.marks_)
        return false;
    // Augmentation: explicit 1 and absent are the same.
    for (const auto& e : a.basis_)
        if (e.degree == 0 && a.aug(e.id) != b.aug(e.id))
            return false;
    return true;
}

bool ValidationReport::mentions(const std::string& text) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
        return v.message.find(text) != std::string::npos;
    });
}

std::string ValidationReport::str() const
{
    if (violations.empty())
        return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty())
            out += "\n";
        out += v.message;
    }
    return out;
}

ValidationReport validate_adc(const Complex& k)
{
    ValidationReport report;
    auto flag = [&](std::string code, const Id& id, std::string message) {
        report.violations.push_back({std::move(code), id, std::move(message)});
    };

    for (const auto& b : k.basis())
        if (b.degree < 0)
            flag("degree", b.id, fmt::format("negative degree at {}", b.id));

    bool references_ok = true;
    for (const auto& [id, c] : k.differentials()) {
        auto deg = k.find_degree(id);
        if (!deg) {
            flag("unknown", id, fmt::format("d given for unknown id {}", id));
            references_ok = false;
            continue;
        }
        if (c.degree() != *deg - 1)
            flag("d-degree", id, fmt::format("d({}) has degree {} but should have {}", id, c.degree(), *deg - 1));
        for (const auto& [t, coef] : c.terms()) {
            auto tdeg = k.find_degree(t);
            if (!tdeg) {
                flag("unknown", id, fmt::format("d({}) references unknown id {}", id, t));
                references_ok = false;
            } else if (*tdeg != *deg - 1) {
                flag("d-degree", id, fmt::format("d({}) references {} of degree {}", id, t, *tdeg));
                references_ok = false;
            }
        }
    }
    for (const auto& [id, a] : k.augmentations()) {
        auto deg = k.find_degree(id);
        if (!deg)
            flag("unknown", id, fmt::format("aug given for unknown id {}", id));
        else if (*deg != 0)
            flag("aug-degree", id, fmt::format("aug given for {} of degree {}", id, *deg));
    }
    if (const auto& m = k.marks()) {
        for (const Id* id : {&m->source, &m->target}) {
            auto deg = k.find_degree(*id);
            if (!deg)
                flag("marks", *id, fmt::format("mark references unknown id {}", *id));
            else if (*deg != 0)
                flag("marks", *id, fmt::format("mark {} is not of degree 0", *id));
        }
    }
    if (!references_ok)
        return report;

    for (const auto& b : k.basis()) {
        if (b.degree >= 2) {
            Chain dd = k.d(k.d(b.id));
            if (!dd.is_zero())
                flag("dd", b.id, fmt::format("d∘d ≠ 0 at {}", b.id));
        }
        if (b.degree == 1 && k.aug(k.d(b.id)) != 0)
            flag("aug-d", b.id, fmt::format("aug(d {}) ≠ 0 at {}", b.id, b.id));
    }
    return report;
}

Chain ChainMap::value(const Id& id) const
{
    auto it = values.find(id);
    if (it != values.end())
        return it->second;
    auto deg = source.find_degree(id);
    return Chain(deg ? *deg : 0);
}

Chain ChainMap::apply(const Chain& c) const
{
    Chain out(c.degree());
    for (const auto& [id, coef] : c.terms())
        out.add(value(id), coef);
    return out;
}

ValidationReport validate_chain_map(const ChainMap& f)
{
    ValidationReport report;
    auto flag = [&](std::string code, const Id& id, std::string message) {
        report.violations.push_back({std::move(code), id, std::move(message)});
    };

    for (const auto& [id, v] : f.values)
        if (!f.source.contains(id)) {
            flag("unknown", id, fmt::format("value given for unknown source id {}", id));
            return report;
        }

    bool degree_failed = false;
    for (const auto& b : f.source.basis()) {
        Chain v = f.value(b.id);
        bool bad = v.degree() != b.degree;
        for (const auto& [t, coef] : v.terms()) {
            auto tdeg = f.target.find_degree(t);
            if (!tdeg || *tdeg != b.degree)
                bad = true;
        }
        if (bad) {
            flag("degree", b.id, fmt::format("value of {} is not a degree-{} chain of the target", b.id, b.degree));
            degree_failed = true;
            break;
        }
    }
    if (degree_failed)
        return report;

    for (const auto& b : f.source.basis()) {
        if (b.degree == 0)
            continue;
        Chain lhs = f.apply(f.source.d(b.id));
        Chain rhs = f.target.d(f.value(b.id));
        if (lhs != rhs) {
            flag("d", b.id, fmt::format("d-incompatible at {}: f(d {}) = {} but d(f {}) = {}", b.id, b.id, lhs.str(), b.id, rhs.str()));
            break;
        }
    }
    for (const auto& b : f.source.basis()) {
        if (b.degree != 0)
            continue;
        if (f.target.aug(f.value(b.id)) != f.source.aug(b.id)) {
            flag("aug", b.id, fmt::format("aug-incompatible at {}", b.id));
            break;
        }
    }
    return report;
}

ChainMap compose(const ChainMap& f, const ChainMap& g)
{
    ChainMap out{f.source, g.target, {}};
    for (const auto& b : f.source.basis()) {
        Chain v = g.apply(f.value(b.id));
        if (!v.is_zero())
            out.values[b.id] = std::move(v);
    }
    return out;
}

ChainMap identity_map(const Complex& k)
{
    ChainMap out{k, k, {}};
    for (const auto& b : k.basis())
        out.values[b.id] = Chain::basis(b.degree, b.id);
    return out;
}

} // namespace adc
