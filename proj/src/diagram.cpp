#include "adc/diagram.hpp"
#include "adc/basis.hpp"
#include "adc/cells.hpp"

#include <fmt/format.h>

#include <map>
#include <set>

namespace adc {

namespace {

struct Panel {
    std::string prefix;
    std::string label;
    std::vector<Id> points, arrows, cells2;
};

struct Layout {
    std::vector<Panel> panels;
    std::vector<Id> higher;
    bool schematic = false;
};

Id first_id(const Chain& c)
{
    return c.terms().empty() ? Id() : c.terms().begin()->first;
}

std::pair<Id, Id> endpoints(const Complex& k, const Id& id)
{
    const Atom a = atom(k, id);
    return {first_id(a.minus[0]), first_id(a.plus[0])};
}

Panel panel_of(const Complex& k, const std::set<Id>& members, std::string prefix, std::string label)
{
    Panel p{std::move(prefix), std::move(label), {}, {}, {}};
    for (const auto& e : k.basis()) {
        if (!members.count(e.id))
            continue;
        if (e.degree == 0)
            p.points.push_back(e.id);
        else if (e.degree == 1)
            p.arrows.push_back(e.id);
        else if (e.degree == 2)
            p.cells2.push_back(e.id);
    }
    return p;
}

Layout layout(const Complex& k)
{
    Layout out;
    std::set<Id> all;
    for (const auto& e : k.basis())
        all.insert(e.id);
    if (k.dimension() <= 2) {
        out.panels.push_back(panel_of(k, all, "", ""));
        return out;
    }
    out.schematic = true;
    const Cell total = total_cell(k);
    auto closure = [&](const Chain& c) { return subcomplex_closure(k, c.support()).members; };
    out.panels.push_back(panel_of(k, closure(total.row(2, Side::Minus)), "s:", "source"));
    out.panels.push_back(panel_of(k, closure(total.row(2, Side::Plus)), "t:", "target"));
    for (const auto& e : k.basis())
        if (e.degree >= 3)
            out.higher.push_back(e.id);
    return out;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string tex(const std::string& id)
{
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"ι", "\\iota "}, {"⊗", "\\otimes "}, {"*", "\\ast "}, {"_", "\\_"}, {"#", "\\#"}, {"$", "\\$"},
        {"%", "\\%"},     {"&", "\\&"},       {"{", "\\{"},     {"}", "\\}"}, {"∨", "\\vee "}};
    std::string out;
    for (std::size_t i = 0; i < id.size();) {
        bool hit = false;
        for (const auto& [from, to] : table)
            if (id.compare(i, from.size(), from) == 0) {
                out += to;
                i += from.size();
                hit = true;
                break;
            }
        if (!hit)
            out += id[i++];
    }
    return out;
}

} // namespace

std::string emit_dot(const Complex& k)
{
    const Layout lay = layout(k);
    std::string out = fmt::format("digraph {} {{\n  rankdir=LR;\n", quoted(k.name()));
    if (lay.schematic)
        out += "  label=\"schematic\";\n";
    for (const Panel& p : lay.panels) {
        std::string indent = "  ";
        if (lay.schematic) {
            out += fmt::format("  subgraph {} {{\n    label={};\n", quoted("cluster_" + p.label), quoted(p.label));
            indent = "    ";
        }
        for (const Id& id : p.points)
            out += fmt::format("{}{} [label={}, class=\"point\"];\n", indent, quoted(p.prefix + id), quoted(id));
        for (const Id& id : p.arrows) {
            auto [s, t] = endpoints(k, id);
            out += fmt::format("{}{} -> {} [label={}, class=\"arrow\"];\n", indent, quoted(p.prefix + s),
                               quoted(p.prefix + t), quoted(id));
        }
        for (const Id& id : p.cells2) {
            auto [s, t] = endpoints(k, id);
            out += fmt::format("{}{} -> {} [label={}, class=\"cell2\", color=\"black:invis:black\", "
                               "constraint=false];\n",
                               indent, quoted(p.prefix + s), quoted(p.prefix + t), quoted(id));
        }
        if (lay.schematic)
            out += "  }\n";
    }
    for (const Id& id : lay.higher) {
        auto [s, t] = endpoints(k, id);
        out += fmt::format("  {} -> {} [label={}, class=\"cell3\", style=dashed, constraint=false];\n",
                           quoted("s:" + s), quoted("t:" + t), quoted(id));
    }
    return out + "}\n";
}

std::string emit_tikz(const Complex& k)
{
    const Layout lay = layout(k);
    std::string out = fmt::format("% {}\n", k.name());
    out += "\\begin{tikzpicture}[point/.style={inner sep=1pt}, arrow/.style={->}, "
           "cell2/.style={double, ->}, cell3/.style={dashed, ->}]\n";
    if (lay.schematic)
        out += "  \\node at (0, 1) {schematic};\n";

    double x_offset = 0;
    std::map<std::string, std::pair<double, double>> where;
    std::map<std::string, std::string> name;
    auto node = [&](const std::string& key) {
        auto it = name.find(key);
        return it == name.end() ? std::string("missing") : it->second;
    };
    for (const Panel& p : lay.panels) {
        // Rank each point by the longest arrow path reaching it.
        std::map<Id, int> rank;
        for (const Id& id : p.points)
            rank[id] = 0;
        for (std::size_t round = 0; round < p.points.size(); ++round)
            for (const Id& id : p.arrows) {
                auto [s, t] = endpoints(k, id);
                if (rank.count(s) && rank.count(t) && rank[t] < rank[s] + 1 &&
                    rank[s] + 1 < static_cast<int>(p.points.size()))
                    rank[t] = rank[s] + 1;
            }
        std::map<int, int> used;
        int width = 0;
        for (const Id& id : p.points) {
            const int r = rank[id];
            const int slot = used[r]++;
            width = std::max(width, r);
            const double x = x_offset + 2.0 * r, y = -1.5 * slot;
            where[p.prefix + id] = {x, y};
            name.emplace(p.prefix + id, fmt::format("n{}", name.size()));
            out += fmt::format("  \\node[point] ({}) at ({:.2f}, {:.2f}) {{${}$}};\n", node(p.prefix + id), x, y,
                               tex(id));
        }
        if (!p.label.empty())
            out += fmt::format("  \\node at ({:.2f}, 1) {{{}}};\n", x_offset + width, p.label);
        std::map<std::pair<Id, Id>, int> parallel;
        for (const Id& id : p.arrows) {
            auto [s, t] = endpoints(k, id);
            const int n = parallel[{s, t}]++;
            const int bend = (n % 2 ? -1 : 1) * 20 * ((n + 1) / 2);
            out += fmt::format("  \\draw[arrow] ({}) to[bend left={}] node[auto] {{${}$}} ({});\n",
                               node(p.prefix + s), bend, tex(id), node(p.prefix + t));
        }
        for (const Id& id : p.cells2) {
            auto [s, t] = endpoints(k, id);
            auto [sx, sy] = where[p.prefix + s];
            auto [tx, ty] = where[p.prefix + t];
            const double mx = (sx + tx) / 2, my = (sy + ty) / 2;
            out += fmt::format("  \\draw[cell2] ({:.2f}, {:.2f}) -- node[right] {{${}$}} ({:.2f}, {:.2f});\n", mx,
                               my + 0.3, tex(id), mx, my - 0.3);
        }
        x_offset += 2.0 * width + 4;
    }
    for (const Id& id : lay.higher) {
        auto [s, t] = endpoints(k, id);
        out += fmt::format("  \\draw[cell3] ({}) to[bend left=10] node[auto] {{${}$}} ({});\n", node("s:" + s),
                           tex(id), node("t:" + t));
    }
    return out + "\\end{tikzpicture}\n";
}

} // namespace adc
