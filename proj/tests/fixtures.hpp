#pragma once

#include "adc/basis.hpp"
#include "adc/constructors.hpp"
#include "adc/gray.hpp"

#include <string>
#include <vector>

namespace fixtures {

// The arrow with ids a, b, f.
inline adc::Complex arrow()
{
    adc::Complex k("arrow");
    k.add("a", 0);
    k.add("b", 0);
    k.add("f", 1, adc::Chain(0, {{"b", 1}, {"a", -1}}));
    k.set_marks(adc::Marks{"a", "b"});
    return k;
}

// d f = b - a, d g = a - b.
inline adc::Complex loop()
{
    adc::Complex k("loop");
    k.add("a", 0);
    k.add("b", 0);
    k.add("f", 1, adc::Chain(0, {{"b", 1}, {"a", -1}}));
    k.add("g", 1, adc::Chain(0, {{"a", 1}, {"b", -1}}));
    return k;
}

inline adc::Complex theta(const std::string& text)
{
    return adc::theta_from_expr(adc::ThetaExpr::parse(text));
}

// ∅, pt, 𝔾₁, 𝔾₂, [2], □¹, □²
inline std::vector<adc::Complex> corpus()
{
    return {adc::empty_complex(), adc::point(), adc::globe(1), adc::globe(2), theta("(0,0)"), adc::cube(1), adc::cube(2)};
}

inline adc::Bijection identity_ids(const adc::Complex& k)
{
    adc::Bijection m;
    for (const auto& e : k.basis())
        m[e.id] = e.id;
    return m;
}

inline std::vector<std::size_t> counts(std::initializer_list<std::size_t> c)
{
    return c;
}

} // namespace fixtures
