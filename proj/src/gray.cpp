#include "adc/gray.hpp"
#include "adc/colimits.hpp"
#include "adc/constructors.hpp"
#include "adc/debug.hpp"
#include "adc/error.hpp"

#include <fmt/format.h>

namespace adc {

namespace {

Id tensor_id(const Id& x, const Id& y) { return x + kTensorSeparator + y; }

Chain tensor_left(const Chain& c, const Id& y, int degree)
{
    Chain out(degree);
    for (const auto& [x, coef] : c.terms())
        out.add(tensor_id(x, y), coef);
    return out;
}

Chain tensor_right(const Id& x, const Chain& c, int degree)
{
    Chain out(degree);
    for (const auto& [y, coef] : c.terms())
        out.add(tensor_id(x, y), coef);
    return out;
}

} // namespace

Complex gray_tensor(const Complex& k, const Complex& l)
{
    Complex out(fmt::format("({}⊗{})", k.name(), l.name()));
    const int top = k.dimension() + l.dimension();
    const bool flip = debug::flip_leibniz_sign();
    for (int n = 0; n <= top; ++n) {
        for (const auto& x : k.basis()) {
            for (const auto& y : l.basis()) {
                if (x.degree + y.degree != n)
                    continue;
                const Id id = tensor_id(x.id, y.id);
                out.add(id, n); // throws IdCollision
                Chain d = tensor_left(k.d(x.id), y.id, n - 1);
                Integer sign = (x.degree % 2 == 0) ? 1 : -1;
                if (flip)
                    sign = -sign;
                d.add(tensor_right(x.id, l.d(y.id), n - 1), sign);
                out.set_d(id, std::move(d));
                if (n == 0) {
                    Integer a = k.aug(x.id) * l.aug(y.id);
                    if (a != 1)
                        out.set_aug(id, a);
                }
            }
        }
    }
    if (k.marks() && l.marks())
        out.set_marks(Marks{tensor_id(k.marks()->source, l.marks()->source),
                            tensor_id(k.marks()->target, l.marks()->target)});
    return out;
}

Complex funny_square1(const Complex& c)
{
    const Complex s = suspension(c);
    const Complex arrow = cube(1);
    const Complex upper = wedge(s, arrow);
    const Complex lower = wedge(arrow, s);
    const auto& um = *upper.marks();
    const auto& lm = *lower.marks();
    Subcomplex su{{um.source, um.target}};
    Subcomplex sl{{lm.source, lm.target}};
    Bijection ident{{um.source, lm.source}, {um.target, lm.target}};
    Complex out = glue(upper, lower, su, sl, ident, {"t.", "b."});
    out.set_name(fmt::format("funny({})", c.name()));
    out.set_marks(Marks{"t." + um.source, "t." + um.target});
    return out;
}

} // namespace adc
