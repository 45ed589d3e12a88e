#include "adc/basis.hpp"
#include "adc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>

#include <fmt/format.h>

namespace adc {

Atom atom(const Complex& k, const Id& b)
{
    const int n = k.degree_of(b);
    Atom out;
    out.generator = b;
    out.degree = n;
    out.minus.assign(static_cast<std::size_t>(n + 1), Chain());
    out.plus.assign(static_cast<std::size_t>(n + 1), Chain());
    out.minus[n] = out.plus[n] = Chain::basis(n, b);
    for (int q = n - 1; q >= 0; --q) {
        out.minus[q] = pos_neg_parts(k.d(out.minus[q + 1])).negative;
        out.plus[q] = pos_neg_parts(k.d(out.plus[q + 1])).positive;
    }
    return out;
}

UnitalResult is_unital(const Complex& k)
{
    for (const auto& b : k.basis()) {
        Atom a = atom(k, b.id);
        if (k.aug(a.minus[0]) != 1 || k.aug(a.plus[0]) != 1)
            return {false, b.id};
    }
    return {};
}

namespace {

using Graph = std::map<Id, std::set<Id>>;

Graph relation_graph(const Complex& k)
{
    Graph g;
    for (const auto& b : k.basis())
        g[b.id];
    for (const auto& b : k.basis()) {
        auto parts = pos_neg_parts(k.d(b.id));
        for (const auto& [x, coef] : parts.negative.terms())
            g[x].insert(b.id);
        for (const auto& [y, coef] : parts.positive.terms())
            g[b.id].insert(y);
    }
    return g;
}

// Vertices reachable from `from` without passing through `blocked`.
bool reaches(const Graph& g, const Id& from, const Id& goal, const std::set<Id>& blocked)
{
    std::set<Id> seen{from};
    std::deque<Id> queue{from};
    while (!queue.empty()) {
        Id cur = queue.front();
        queue.pop_front();
        if (cur == goal)
            return true;
        for (const Id& nxt : g.at(cur)) {
            if (blocked.count(nxt) && nxt != goal)
                continue;
            if (seen.insert(nxt).second)
                queue.push_back(nxt);
        }
    }
    return false;
}

} // namespace

LoopFreeResult is_strongly_loop_free(const Complex& k)
{
    Graph g = relation_graph(k);

    // Kahn's algorithm; whatever is left over lies on or behind a cycle.
    std::map<Id, int> indegree;
    for (const auto& [v, succ] : g) {
        indegree[v];
        for (const Id& w : succ)
            ++indegree[w];
    }
    std::deque<Id> queue;
    for (const auto& [v, deg] : indegree)
        if (deg == 0)
            queue.push_back(v);
    std::size_t removed = 0;
    while (!queue.empty()) {
        Id v = queue.front();
        queue.pop_front();
        ++removed;
        for (const Id& w : g.at(v))
            if (--indegree[w] == 0)
                queue.push_back(w);
    }
    if (removed == g.size())
        return {};

    // Least vertex lying on a cycle, then the greedy lexicographically least
    // simple cycle through it.
    Id start;
    for (const auto& [v, succ] : g) {
        bool on_cycle = false;
        for (const Id& w : succ)
            if (reaches(g, w, v, {})) {
                on_cycle = true;
                break;
            }
        if (on_cycle) {
            start = v;
            break;
        }
    }
    std::vector<Id> cycle{start};
    std::set<Id> used{start};
    Id cur = start;
    while (true) {
        const auto& succ = g.at(cur);
        if (succ.count(start))
            break;
        bool advanced = false;
        for (const Id& w : succ) {
            if (used.count(w))
                continue;
            if (reaches(g, w, start, used)) {
                cycle.push_back(w);
                used.insert(w);
                cur = w;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break; // unreachable: start lies on a cycle
    }
    return {false, cycle};
}

bool is_site_member(const Complex& k)
{
    return validate_adc(k).ok() && is_unital(k).ok && is_strongly_loop_free(k).ok;
}

bool is_subcomplex(const Complex& k, const Subcomplex& s)
{
    for (const Id& id : s.members) {
        if (!k.contains(id))
            return false;
        for (const Chain chain = k.d(id); const auto& [t, coef] : chain.terms())
            if (!s.members.count(t))
                return false;
    }
    return true;
}

Subcomplex subcomplex_closure(const Complex& k, const std::set<Id>& seed)
{
    Subcomplex out;
    std::vector<Id> stack;
    for (const Id& id : seed) {
        k.degree_of(id);
        if (out.members.insert(id).second)
            stack.push_back(id);
    }
    while (!stack.empty()) {
        Id cur = stack.back();
        stack.pop_back();
        for (const Chain chain = k.d(cur); const auto& [t, coef] : chain.terms())
            if (out.members.insert(t).second)
                stack.push_back(t);
    }
    return out;
}

Complex extract(const Complex& k, const Subcomplex& s)
{
    if (!is_subcomplex(k, s))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("member set is not closed in {}", k.name()));
    return k.restricted(s.members);
}

std::uint64_t default_search_budget()
{
    if (const char* env = std::getenv("ADC_SEARCH_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 2'000'000;
}

namespace {

struct Node {
    int degree = 0;
    std::string aug;
    int role = 0; // bit 0: source mark, bit 1: target mark
    std::vector<std::pair<std::string, int>> down; // (coef, node)
    std::vector<std::pair<std::string, int>> up;
};

// Joint colour refinement over both complexes; equal colours are a
// necessary condition for being matched by an isomorphism.
std::vector<int> refine_colours(const std::vector<Node>& nodes)
{
    std::vector<int> colour(nodes.size());
    {
        std::map<std::string, int> ids;
        std::vector<std::string> sigs(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sigs[i] = fmt::format("{}|{}|{}|{}|{}", nodes[i].degree, nodes[i].aug, nodes[i].role,
                                  nodes[i].down.size(), nodes[i].up.size());
            ids.emplace(sigs[i], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            colour[i] = ids.at(sigs[i]);
    }
    std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
    while (true) {
        std::vector<std::string> sigs(nodes.size());
        std::map<std::string, int> ids;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            std::vector<std::string> down, up;
            for (const auto& [coef, j] : nodes[i].down)
                down.push_back(fmt::format("{}:{}", coef, colour[j]));
            for (const auto& [coef, j] : nodes[i].up)
                up.push_back(fmt::format("{}:{}", coef, colour[j]));
            std::sort(down.begin(), down.end());
            std::sort(up.begin(), up.end());
            sigs[i] = fmt::format("{}|{}|{}", colour[i], fmt::join(down, ","), fmt::join(up, ","));
            ids.emplace(sigs[i], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids)
            id = next++;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            colour[i] = ids.at(sigs[i]);
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return colour;
}

void append_nodes(const Complex& k, bool use_marks, std::vector<Node>& nodes, std::map<Id, int>& index)
{
    const int offset = static_cast<int>(nodes.size());
    for (const auto& b : k.basis()) {
        index[b.id] = static_cast<int>(nodes.size());
        Node n;
        n.degree = b.degree;
        n.aug = b.degree == 0 ? k.aug(b.id).str() : "";
        if (use_marks && k.marks()) {
            if (k.marks()->source == b.id)
                n.role |= 1;
            if (k.marks()->target == b.id)
                n.role |= 2;
        }
        nodes.push_back(std::move(n));
    }
    for (const auto& b : k.basis()) {
        int i = index.at(b.id);
        for (const Chain chain = k.d(b.id); const auto& [t, coef] : chain.terms()) {
            auto it = index.find(t);
            if (it == index.end() || it->second < offset)
                continue;
            nodes[i].down.emplace_back(coef.str(), it->second);
            nodes[it->second].up.emplace_back(coef.str(), i);
        }
    }
}

bool degree_order(const BasisElement& x, const BasisElement& y)
{
    return std::tie(x.degree, x.id) < std::tie(y.degree, y.id);
}

} // namespace

std::optional<Bijection> find_isomorphism(const Complex& a, const Complex& b, const IsoOptions& options)
{
    if (a.size() != b.size() || a.counts() != b.counts())
        return std::nullopt;
    const bool use_marks = a.marks().has_value() && b.marks().has_value();

    std::vector<Node> nodes;
    std::map<Id, int> index_a, index_b;
    append_nodes(a, use_marks, nodes, index_a);
    append_nodes(b, use_marks, nodes, index_b);
    std::vector<int> colour = refine_colours(nodes);

    std::map<int, int> balance;
    for (const auto& [id, i] : index_a)
        ++balance[colour[i]];
    for (const auto& [id, i] : index_b)
        --balance[colour[i]];
    for (const auto& [c, n] : balance)
        if (n != 0)
            return std::nullopt;

    std::vector<BasisElement> order_a = a.basis();
    std::vector<BasisElement> order_b = b.basis();
    std::sort(order_a.begin(), order_a.end(), degree_order);
    std::sort(order_b.begin(), order_b.end(), degree_order);

    std::map<int, std::vector<Id>> candidates; // colour -> B ids in order
    for (const auto& e : order_b)
        candidates[colour[index_b.at(e.id)]].push_back(e.id);

    const std::uint64_t budget = options.node_budget ? options.node_budget : default_search_budget();
    std::uint64_t nodes_used = 0;
    Bijection map;
    std::set<Id> used;

    std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
        if (pos == order_a.size())
            return true;
        const BasisElement& x = order_a[pos];
        Chain image(x.degree - 1);
        for (const Chain chain = a.d(x.id); const auto& [t, coef] : chain.terms())
            image.add(map.at(t), coef);
        for (const Id& y : candidates.at(colour[index_a.at(x.id)])) {
            if (used.count(y))
                continue;
            if (++nodes_used > budget)
                throw Error(ErrorKind::SearchBudgetExceeded,
                            fmt::format("isomorphism search {} -> {} exceeded {} nodes", a.name(), b.name(), budget));
            if (b.d(y) != image)
                continue;
            if (x.degree == 0 && a.aug(x.id) != b.aug(y))
                continue;
            map[x.id] = y;
            used.insert(y);
            if (extend(pos + 1))
                return true;
            map.erase(x.id);
            used.erase(y);
        }
        return false;
    };

    if (!extend(0))
        return std::nullopt;
    if (use_marks && (map.at(a.marks()->source) != b.marks()->source || map.at(a.marks()->target) != b.marks()->target))
        return std::nullopt; // colour roles already force this
    return map;
}

bool is_isomorphism(const Complex& a, const Complex& b, const Bijection& map)
{
    if (a.size() != b.size() || map.size() != a.size())
        return false;
    std::set<Id> image;
    for (const auto& e : a.basis()) {
        auto it = map.find(e.id);
        if (it == map.end())
            return false;
        auto deg = b.find_degree(it->second);
        if (!deg || *deg != e.degree || !image.insert(it->second).second)
            return false;
        Chain mapped(e.degree - 1);
        for (const Chain chain = a.d(e.id); const auto& [t, coef] : chain.terms()) {
            auto jt = map.find(t);
            if (jt == map.end())
                return false;
            mapped.add(jt->second, coef);
        }
        if (mapped != b.d(it->second))
            return false;
        if (e.degree == 0 && a.aug(e.id) != b.aug(it->second))
            return false;
    }
    if (a.marks() && b.marks())
        return map.at(a.marks()->source) == b.marks()->source && map.at(a.marks()->target) == b.marks()->target;
    return true;
}

} // namespace adc
