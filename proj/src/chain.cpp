#include "adc/chain.hpp"
#include "adc/debug.hpp"

#include <fmt/format.h>

namespace adc {

Chain::Chain(int degree, std::initializer_list<std::pair<const Id, Integer>> terms) : degree_(degree)
{
    for (const auto& [id, coef] : terms)
        add(id, coef);
}

Integer Chain::coefficient(const Id& id) const
{
    auto it = terms_.find(id);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::set<Id> Chain::support() const
{
    std::set<Id> out;
    for (const auto& [id, coef] : terms_)
        out.insert(id);
    return out;
}

void Chain::add(const Id& id, const Integer& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(id, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Chain::add(const Chain& other, const Integer& scale)
{
    for (const auto& [id, coef] : other.terms_)
        add(id, coef * scale);
}

bool Chain::is_nonnegative() const
{
    for (const auto& [id, coef] : terms_)
        if (coef < 0)
            return false;
    return true;
}

Chain Chain::operator-() const
{
    Chain out(degree_);
    for (const auto& [id, coef] : terms_)
        out.terms_.emplace(id, -coef);
    return out;
}

Chain& Chain::operator+=(const Chain& other)
{
    add(other, 1);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    add(other, -1);
    return *this;
}

Chain operator*(const Integer& k, const Chain& c)
{
    Chain out(c.degree_);
    if (k == 0)
        return out;
    for (const auto& [id, coef] : c.terms_)
        out.terms_.emplace(id, coef * k);
    return out;
}

std::string Chain::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, coef] : terms_) {
        if (coef < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        Integer mag = coef < 0 ? Integer(-coef) : coef;
        if (mag != 1)
            out += mag.str() + "*";
        out += id;
        first = false;
    }
    return out;
}

SignParts pos_neg_parts(const Chain& c)
{
    SignParts parts{Chain(c.degree()), Chain(c.degree())};
    const bool corrupt = debug::corrupt_pos_neg_parts();
    for (const auto& [id, coef] : c.terms()) {
        if (corrupt)
            parts.positive.add(id, coef < 0 ? Integer(-coef) : coef);
        else if (coef > 0)
            parts.positive.add(id, coef);
        else
            parts.negative.add(id, -coef);
    }
    return parts;
}

} // namespace adc
