#include "adc/colimits.hpp"
#include "adc/error.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace adc {

Complex glue(const Complex& a, const Complex& b, const Subcomplex& sa, const Subcomplex& sb, const Bijection& ident,
             const GluePrefixes& prefixes)
{
    if (!is_subcomplex(a, sa))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("left member set in {}", a.name()));
    if (!is_subcomplex(b, sb))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("right member set in {}", b.name()));
    if (ident.size() != sa.members.size() || ident.size() != sb.members.size())
        throw Error(ErrorKind::IncompatibleIdentification, "identification is not a bijection of the subcomplexes");
    std::map<Id, Id> inverse;
    for (const auto& [x, y] : ident) {
        if (!sa.members.count(x) || !sb.members.count(y) || !inverse.emplace(y, x).second)
            throw Error(ErrorKind::IncompatibleIdentification, fmt::format("bad pair {} ↔ {}", x, y));
        if (a.degree_of(x) != b.degree_of(y))
            throw Error(ErrorKind::IncompatibleIdentification, fmt::format("degrees differ at {} ↔ {}", x, y));
        Chain mapped(a.degree_of(x) - 1);
        for (const Chain chain = a.d(x); const auto& [t, coef] : chain.terms())
            mapped.add(ident.at(t), coef);
        if (mapped != b.d(y))
            throw Error(ErrorKind::IncompatibleIdentification, fmt::format("differentials differ at {} ↔ {}", x, y));
        if (a.degree_of(x) == 0 && a.aug(x) != b.aug(y))
            throw Error(ErrorKind::IncompatibleIdentification, fmt::format("augmentations differ at {} ↔ {}", x, y));
    }

    auto rename_b = [&](const Id& id) {
        auto it = inverse.find(id);
        return it == inverse.end() ? prefixes.right + id : prefixes.left + it->second;
    };

    Complex out = a.prefixed(prefixes.left);
    out.set_name(fmt::format("glue({},{})", a.name(), b.name()));
    for (const auto& e : b.basis()) {
        if (sb.members.count(e.id))
            continue;
        Chain d(e.degree - 1);
        for (const Chain chain = b.d(e.id); const auto& [t, coef] : chain.terms())
            d.add(rename_b(t), coef);
        const Id id = rename_b(e.id);
        out.add(id, e.degree, std::move(d));
        if (e.degree == 0 && b.aug(e.id) != 1)
            out.set_aug(id, b.aug(e.id));
    }
    return out;
}

Collapse collapse_components(const Complex& a, const Subcomplex& s)
{
    if (!is_subcomplex(a, s))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("member set in {}", a.name()));

    // Union-find over the members, in basis order.
    std::vector<Id> members;
    std::map<Id, std::size_t> slot;
    for (const auto& e : a.basis())
        if (s.members.count(e.id)) {
            slot[e.id] = members.size();
            members.push_back(e.id);
        }
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Id& x : members)
        for (const Chain chain = a.d(x); const auto& [t, coef] : chain.terms()) {
            std::size_t rx = find(slot.at(x)), rt = find(slot.at(t));
            if (rx != rt)
                parent[std::max(rx, rt)] = std::min(rx, rt);
        }

    std::map<std::size_t, Id> point_of_root;
    Complex out(fmt::format("{}/~", a.name()));
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::size_t r = find(i);
        if (point_of_root.count(r))
            continue;
        const Id pt = "[" + members[r] + "]";
        point_of_root[r] = pt;
        out.add(pt, 0);
    }
    // Augmentation of a fresh point: that of the component's first point.
    std::set<Id> assigned;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (a.degree_of(members[i]) != 0)
            continue;
        const Id& pt = point_of_root.at(find(i));
        if (assigned.insert(pt).second && a.aug(members[i]) != 1)
            out.set_aug(pt, a.aug(members[i]));
    }

    ChainMap q{a, Complex(), {}};
    for (const Id& x : members) {
        const int deg = a.degree_of(x);
        q.values[x] = deg == 0 ? Chain::basis(0, point_of_root.at(find(slot.at(x)))) : Chain(deg);
    }
    for (const auto& e : a.basis())
        if (!s.members.count(e.id))
            q.values[e.id] = Chain::basis(e.degree, e.id);

    for (const auto& e : a.basis()) {
        if (s.members.count(e.id))
            continue;
        out.add(e.id, e.degree, q.apply(a.d(e.id)));
        if (e.degree == 0 && a.aug(e.id) != 1)
            out.set_aug(e.id, a.aug(e.id));
    }
    if (const auto& m = a.marks()) {
        auto image = [&](const Id& id) { return q.value(id).terms().begin()->first; };
        out.set_marks(Marks{image(m->source), image(m->target)});
    }
    for (auto it = q.values.begin(); it != q.values.end();)
        it = it->second.is_zero() ? q.values.erase(it) : std::next(it);
    q.target = out;
    return {std::move(out), std::move(q)};
}

AttachResult attach_cell(const Complex& base, const AttachStep& step)
{
    if (base.contains(step.new_id))
        throw Error(ErrorKind::StaleId, fmt::format("'{}' already in {}", step.new_id, base.name()));
    Complex out = base;
    out.set_name(fmt::format("{}+{}", base.name(), step.new_id));
    if (step.m < 0)
        throw Error(ErrorKind::NotParallel, "negative attachment dimension");
    if (step.m == 0) {
        if (!step.source.rows.empty() || !step.target.rows.empty())
            throw Error(ErrorKind::NotParallel, "degree-0 attachments take empty cells");
        out.add(step.new_id, 0);
    } else {
        for (const Cell* c : {&step.source, &step.target}) {
            auto report = validate_cell(base, *c);
            if (!report.ok())
                throw Error(ErrorKind::InvalidCell, report.str());
            if (c->dim() > step.m - 1)
                throw Error(ErrorKind::NotParallel, fmt::format("cell of dimension {} for a {}-cell attachment", c->dim(), step.m));
        }
        const Cell src = step.source.padded(step.m - 1);
        const Cell tgt = step.target.padded(step.m - 1);
        for (int q = 0; q < step.m - 1; ++q)
            if (src.rows[q] != tgt.rows[q])
                throw Error(ErrorKind::NotParallel, fmt::format("boundary cells differ in row {}", q));
        out.add(step.new_id, step.m, tgt.row(step.m - 1, Side::Minus) - src.row(step.m - 1, Side::Minus));
    }
    const bool member = is_site_member(out);
    return {std::move(out), member};
}

Complex pushout_along_chain_map(const Complex& b, const Subcomplex& s, const ChainMap& f)
{
    if (!is_subcomplex(b, s))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("member set in {}", b.name()));
    if (f.source.size() != s.members.size())
        throw Error(ErrorKind::InvalidChainMap, "chain map source is not the subcomplex");
    for (const auto& e : f.source.basis())
        if (!s.members.count(e.id) || b.degree_of(e.id) != e.degree)
            throw Error(ErrorKind::InvalidChainMap, fmt::format("chain map source element {} not in the subcomplex", e.id));
    auto report = validate_chain_map(f);
    if (!report.ok())
        throw Error(ErrorKind::InvalidChainMap, report.str());

    Complex out = f.target;
    out.set_name(fmt::format("po({},{})", b.name(), f.target.name()));
    for (const auto& e : b.basis()) {
        if (s.members.count(e.id))
            continue;
        Chain d(e.degree - 1);
        for (const Chain chain = b.d(e.id); const auto& [t, coef] : chain.terms()) {
            if (s.members.count(t))
                d.add(f.value(t), coef);
            else
                d.add(t, coef);
        }
        out.add(e.id, e.degree, std::move(d));
        if (e.degree == 0 && b.aug(e.id) != 1)
            out.set_aug(e.id, b.aug(e.id));
    }
    return out;
}

std::vector<AttachStep> attachment_sequence(const Complex& k, const Subcomplex& s)
{
    auto unital = is_unital(k);
    if (!unital.ok)
        throw Error(ErrorKind::NotUnital, fmt::format("atom of {} is not a cell", *unital.counterexample));
    if (!is_subcomplex(k, s))
        throw Error(ErrorKind::NotASubcomplex, fmt::format("member set in {}", k.name()));
    std::vector<BasisElement> order;
    for (const auto& e : k.basis())
        if (!s.members.count(e.id))
            order.push_back(e);
    std::sort(order.begin(), order.end(),
              [](const BasisElement& x, const BasisElement& y) { return std::tie(x.degree, x.id) < std::tie(y.degree, y.id); });
    std::vector<AttachStep> steps;
    for (const auto& e : order) {
        AttachStep step;
        step.m = e.degree;
        step.new_id = e.id;
        if (e.degree > 0) {
            const Cell whole = Cell::from_atom(atom(k, e.id));
            step.source = boundary_restrict(whole, e.degree - 1, Side::Minus);
            step.target = boundary_restrict(whole, e.degree - 1, Side::Plus);
        }
        steps.push_back(std::move(step));
    }
    return steps;
}

Complex replay(const Complex& k, const Subcomplex& s, const std::vector<AttachStep>& steps)
{
    Complex cur = extract(k, s);
    for (const auto& step : steps) {
        cur = attach_cell(cur, step).result;
        if (k.contains(step.new_id) && k.degree_of(step.new_id) == 0 && k.aug(step.new_id) != 1)
            cur.set_aug(step.new_id, k.aug(step.new_id));
    }
    if (const auto& marks = k.marks(); marks && cur.contains(marks->source) && cur.contains(marks->target))
        cur.set_marks(marks);
    return cur;
}

namespace {

Id fresh_id(const Complex& k)
{
    for (std::size_t n = k.size();; ++n) {
        Id id = fmt::format("g{}", n);
        if (!k.contains(id))
            return id;
    }
}

bool isomorphic(const Complex& a, const Complex& b)
{
    return find_isomorphism(a, b).has_value();
}

} // namespace

void enumerate_js(const std::vector<Complex>& seeds, const JsOptions& options,
                  const std::function<void(const JsGenerator&)>& emit)
{
    std::vector<Complex> queue;
    auto admit = [&](const Complex& c) {
        if (c.size() > options.max_generators)
            return;
        for (const Complex& seen : queue)
            if (isomorphic(seen, c))
                return;
        queue.push_back(c);
    };
    for (const Complex& s : seeds)
        admit(s);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Complex base = queue[head];
        const Id id = fresh_id(base);
        std::vector<Complex> emitted;
        auto offer = [&](AttachStep step) {
            AttachResult r = attach_cell(base, step);
            if (!r.site_member && !options.include_non_members)
                return;
            if (options.dedupe) {
                for (const Complex& e : emitted)
                    if (isomorphic(e, r.result))
                        return;
                emitted.push_back(r.result);
            }
            emit(JsGenerator{base, std::move(step), r.result, r.site_member});
            if (r.site_member)
                admit(r.result);
        };

        if (options.max_dim >= 0)
            offer(AttachStep{0, {}, {}, id});
        if (options.max_dim < 1 || base.empty())
            continue;
        const std::vector<Cell> cells =
            enumerate_cells(base, options.max_dim - 1, options.coeff_bound, options.enum_options);
        for (int m = 1; m <= options.max_dim; ++m) {
            for (const Cell& x : cells) {
                if (x.dim() > m - 1)
                    continue;
                const Cell px = x.padded(m - 1);
                for (const Cell& y : cells) {
                    if (y.dim() > m - 1)
                        continue;
                    const Cell py = y.padded(m - 1);
                    bool parallel = true;
                    for (int q = 0; q < m - 1 && parallel; ++q)
                        parallel = px.rows[q] == py.rows[q];
                    if (parallel)
                        offer(AttachStep{m, x, y, id});
                }
            }
        }
    }
}

std::vector<JsGenerator> enumerate_js(const std::vector<Complex>& seeds, const JsOptions& options)
{
    std::vector<JsGenerator> out;
    enumerate_js(seeds, options, [&](const JsGenerator& g) { out.push_back(g); });
    return out;
}

} // namespace adc
