#include "adc/constructors.hpp"
#include "adc/error.hpp"
#include "adc/gray.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include <fmt/format.h>

namespace adc {

Complex empty_complex()
{
    return Complex("empty");
}

Complex point()
{
    Complex out("pt");
    out.add("*", 0);
    out.set_marks(Marks{"*", "*"});
    return out;
}

Complex globe(int n, bool boundary)
{
    Complex out(fmt::format("{}G{}", boundary ? "d" : "", n));
    for (int k = 0; k < n; ++k) {
        for (const char* side : {"-", "+"}) {
            const Id id = fmt::format("e{}{}", k, side);
            if (k == 0)
                out.add(id, 0);
            else
                out.add(id, k, Chain(k - 1, {{fmt::format("e{}+", k - 1), 1}, {fmt::format("e{}-", k - 1), -1}}));
        }
    }
    if (!boundary) {
        const Id top = fmt::format("e{}", n);
        if (n == 0)
            out.add(top, 0);
        else
            out.add(top, n, Chain(n - 1, {{fmt::format("e{}+", n - 1), 1}, {fmt::format("e{}-", n - 1), -1}}));
    }
    if (n >= 1)
        out.set_marks(Marks{"e0-", "e0+"});
    else if (!boundary)
        out.set_marks(Marks{"e0", "e0"});
    return out;
}

Complex cube(int n, bool boundary)
{
    Complex out;
    if (n == 0) {
        out = point();
    } else {
        Complex arrow("Box1");
        arrow.add("-", 0);
        arrow.add("+", 0);
        arrow.add("ι", 1, Chain(0, {{"+", 1}, {"-", -1}}));
        arrow.set_marks(Marks{"-", "+"});
        out = arrow;
        for (int i = 1; i < n; ++i)
            out = gray_tensor(out, arrow);
    }
    out.set_name(fmt::format("Box{}", n));
    if (boundary) {
        out = adc::boundary(out);
        out.set_name(fmt::format("dBox{}", n));
    }
    return out;
}

Complex boundary(const Complex& k)
{
    const int top = k.dimension();
    std::set<Id> keep;
    for (const auto& b : k.basis())
        if (b.degree != top)
            keep.insert(b.id);
    Complex out = k.restricted(keep);
    out.set_name("d" + k.name());
    return out;
}

Complex suspension(const Complex& k)
{
    Complex out(fmt::format("S({})", k.name()));
    out.add("o-", 0);
    out.add("o+", 0);
    for (const auto& b : k.basis()) {
        const Id id = "s." + b.id;
        if (b.degree == 0) {
            const Integer a = k.aug(b.id);
            out.add(id, 1, Chain(0, {{"o+", a}, {"o-", -a}}));
        } else {
            Chain d(b.degree);
            for (const Chain chain = k.d(b.id); const auto& [t, coef] : chain.terms())
                d.add("s." + t, coef);
            out.add(id, b.degree + 1, std::move(d));
        }
    }
    out.set_marks(Marks{"o-", "o+"});
    return out;
}

namespace {

// Identifies a.target with b.source, keeping a's id for the shared point.
// Ids must otherwise be disjoint.
Complex wedge_raw(const Complex& a, const Complex& b, std::string name)
{
    if (!a.marks() || !b.marks())
        throw Error(ErrorKind::MissingBipointing, fmt::format("wedge of {} and {}", a.name(), b.name()));
    const Id& joint = a.marks()->target;
    const Id& dropped = b.marks()->source;
    auto rename = [&](const Id& id) { return id == dropped ? joint : id; };

    Complex out(std::move(name));
    for (const auto& e : a.basis()) {
        out.add(e.id, e.degree, a.d(e.id));
        if (e.degree == 0 && a.aug(e.id) != 1)
            out.set_aug(e.id, a.aug(e.id));
    }
    for (const auto& e : b.basis()) {
        if (e.id == dropped)
            continue;
        Chain d(e.degree - 1);
        for (const Chain chain = b.d(e.id); const auto& [t, coef] : chain.terms())
            d.add(rename(t), coef);
        out.add(e.id, e.degree, std::move(d));
        if (e.degree == 0 && b.aug(e.id) != 1)
            out.set_aug(e.id, b.aug(e.id));
    }
    out.set_marks(Marks{a.marks()->source, rename(b.marks()->target)});
    return out;
}

} // namespace

Complex wedge(const Complex& a, const Complex& b)
{
    if (!a.marks() || !b.marks())
        throw Error(ErrorKind::MissingBipointing, fmt::format("wedge of {} and {}", a.name(), b.name()));
    return wedge_raw(a.prefixed("l."), b.prefixed("r."), fmt::format("({}∨{})", a.name(), b.name()));
}

Complex dual(const Complex& k)
{
    Complex out(fmt::format("dual({})", k.name()));
    for (const auto& b : k.basis()) {
        out.add(b.id, b.degree, -k.d(b.id));
        if (b.degree == 0 && k.aug(b.id) != 1)
            out.set_aug(b.id, k.aug(b.id));
    }
    if (k.marks())
        out.set_marks(Marks{k.marks()->target, k.marks()->source});
    return out;
}

int ThetaExpr::dimension() const
{
    int dim = 0;
    for (const auto& c : children)
        dim = std::max(dim, c.dimension() + 1);
    return dim;
}

std::size_t ThetaExpr::generator_count() const
{
    if (is_leaf())
        return 1;
    std::size_t total = 1;
    for (const auto& c : children)
        total += c.generator_count() + 1;
    return total;
}

std::string ThetaExpr::str() const
{
    if (is_leaf())
        return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i)
            out += ",";
        out += children[i].str();
    }
    return out + ")";
}

ThetaExpr ThetaExpr::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, fmt::format("theta expression '{}' at column {}: {}", text, pos + 1, what));
    };
    std::function<ThetaExpr()> expr = [&]() -> ThetaExpr {
        if (pos >= s.size())
            fail("unexpected end");
        if (s[pos] == '0') {
            ++pos;
            return {};
        }
        if (s[pos] != '(')
            fail("expected '0' or '('");
        ++pos;
        ThetaExpr node;
        node.children.push_back(expr());
        while (pos < s.size() && s[pos] == ',') {
            ++pos;
            node.children.push_back(expr());
        }
        if (pos >= s.size() || s[pos] != ')')
            fail("expected ')'");
        ++pos;
        return node;
    };
    ThetaExpr out = expr();
    if (pos != s.size())
        fail("trailing characters");
    return out;
}

Complex theta_from_expr(const ThetaExpr& t)
{
    if (t.is_leaf())
        return point();
    const std::size_t r = t.children.size();
    Complex acc;
    for (std::size_t i = 0; i < r; ++i) {
        Complex summand = suspension(theta_from_expr(t.children[i]));
        if (r > 1)
            summand = summand.prefixed(fmt::format("{}.", i + 1));
        acc = i == 0 ? summand : wedge_raw(acc, summand, "");
    }
    acc.set_name(t.str());
    return acc;
}

namespace {

std::vector<ThetaExpr> trees(int max_dim, std::size_t budget)
{
    std::vector<ThetaExpr> out;
    if (budget < 1)
        return out;
    out.push_back({});
    if (max_dim < 1 || budget < 3)
        return out;
    const std::vector<ThetaExpr> kids = trees(max_dim - 1, budget - 2);
    // A node costs 1 plus (size + 1) per child.
    std::vector<ThetaExpr> prefix;
    std::function<void(std::size_t)> grow = [&](std::size_t remaining) {
        for (const auto& k : kids) {
            const std::size_t cost = k.generator_count() + 1;
            if (cost > remaining)
                continue;
            prefix.push_back(k);
            out.push_back(ThetaExpr{prefix});
            grow(remaining - cost);
            prefix.pop_back();
        }
    };
    grow(budget - 1);
    return out;
}

} // namespace

std::vector<ThetaExpr> enumerate_theta(int max_dim, std::size_t max_generators)
{
    if (max_dim < 0)
        return {};
    std::vector<ThetaExpr> out = trees(max_dim, max_generators);
    std::sort(out.begin(), out.end(), [](const ThetaExpr& a, const ThetaExpr& b) {
        const auto ga = a.generator_count(), gb = b.generator_count();
        if (ga != gb)
            return ga < gb;
        return a.str() < b.str();
    });
    return out;
}

} // namespace adc
