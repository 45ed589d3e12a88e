#include "adc/verify.hpp"
#include "adc/colimits.hpp"
#include "adc/error.hpp"
#include "adc/gray.hpp"

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <set>

namespace adc {

const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Error: return "ERROR";
    }
    return "?";
}

namespace {

int severity(Status s)
{
    switch (s) {
    case Status::Pass: return 0;
    case Status::Skipped: return 1;
    case Status::Fail: return 2;
    case Status::Error: return 3;
    }
    return 3;
}

std::string detail(const ValidationReport& v)
{
    return v.ok() ? std::string() : v.str();
}

std::string counts_str(const Complex& k)
{
    return fmt::format("({})", fmt::join(k.counts(), ","));
}

// Runs a checker body, turning library errors into report parts.
void guarded(CheckReport& r, const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        r.add(e.is_resource_limit() ? "resources" : "error", e.is_resource_limit() ? Status::Skipped : Status::Error,
              e.what());
    }
}

// Values of both end copies ∓⊗b (or b⊗∓) collapsed onto the endpoints of the arrow.
ChainMap collapse_ends(const Complex& t, const Subcomplex& ends, const Complex& c, bool arrow_left)
{
    ChainMap f{extract(t, ends), boundary(cube(1)), {}};
    for (const auto& b : c.basis()) {
        if (b.degree != 0)
            continue;
        for (const char* side : {"-", "+"}) {
            const Id id = arrow_left ? std::string(side) + kTensorSeparator + b.id : b.id + kTensorSeparator + side;
            f.values[id] = c.aug(b.id) * Chain::basis(0, side);
        }
    }
    return f;
}

Subcomplex end_copies(const Complex& c, bool arrow_left)
{
    Subcomplex s;
    for (const auto& b : c.basis())
        for (const char* side : {"-", "+"}) {
            s.members.insert(arrow_left ? std::string(side) + kTensorSeparator + b.id
                                        : b.id + kTensorSeparator + side);
        }
    return s;
}

} // namespace

void CheckReport::add(std::string name, Status s, std::string detail)
{
    parts.push_back(Part{std::move(name), s, std::move(detail)});
    if (severity(s) > severity(status))
        status = s;
}

void CheckReport::add(std::string name, bool ok, std::string detail)
{
    add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail));
}

std::string CheckReport::str() const
{
    std::string out = fmt::format("{} {} [{}]\n", check, subject, to_string(status));
    for (const auto& p : parts)
        out += fmt::format("  {:<8} {}{}\n", to_string(p.status), p.name, p.detail.empty() ? "" : ": " + p.detail);
    for (const auto& n : notes)
        out += fmt::format("  note     {}\n", n);
    return out;
}

CheckReport check_susp_tensor(const Complex& c)
{
    CheckReport r{"susp-tensor", c.name()};
    guarded(r, [&] {
        const Complex arrow = cube(1);
        const Complex t = gray_tensor(arrow, c);
        auto valid = validate_adc(t);
        r.add("□¹⊗C is an ADC", valid.ok(), detail(valid));
        if (!valid.ok())
            return;
        auto unital = is_unital(t);
        auto loops = is_strongly_loop_free(t);
        r.add("□¹⊗C is a site member", unital.ok && loops.ok,
              !unital.ok ? "atom of " + *unital.counterexample + " is not unital"
              : !loops.ok ? fmt::format("cycle {}", fmt::join(loops.cycle, " → "))
                          : "");

        const Subcomplex ends = end_copies(c, true);
        const Complex p = pushout_along_chain_map(t, ends, collapse_ends(t, ends, c, true));
        const Complex sigma = suspension(c);
        auto valid_p = validate_adc(p);
        r.add("pushout is an ADC", valid_p.ok(), detail(valid_p));
        r.notes.push_back("pushout basis counts " + counts_str(p));

        auto iso = find_isomorphism(p, sigma);
        r.add("pushout ≅ ΣC", iso.has_value(), iso ? "" : "no basis bijection commutes with d, aug and marks");
        r.bijection = iso;

        Bijection natural{{"-", "o-"}, {"+", "o+"}};
        for (const auto& b : c.basis())
            natural["ι" + std::string(kTensorSeparator) + b.id] = "s." + b.id;
        r.add("ι⊗b ↦ s.b is an isomorphism onto Σ(dual C)", is_isomorphism(p, suspension(dual(c)), natural));

        const Complex t2 = gray_tensor(c, arrow);
        const Subcomplex ends2 = end_copies(c, false);
        const Complex p2 = pushout_along_chain_map(t2, ends2, collapse_ends(t2, ends2, c, false));
        Bijection natural2{{"-", "o-"}, {"+", "o+"}};
        for (const auto& b : c.basis())
            natural2[b.id + kTensorSeparator + "ι"] = "s." + b.id;
        r.add("b⊗ι ↦ s.b is an isomorphism C⊗□¹ / C⊗∂□¹ → ΣC", is_isomorphism(p2, sigma, natural2));

        if (!c.empty()) {
            Collapse col = collapse_components(t, ends);
            auto valid_q = validate_chain_map(col.quotient);
            r.add("component collapse quotient is a chain map", valid_q.ok(), detail(valid_q));
            const std::size_t points = col.result.ids_of_degree(0).size() - p.ids_of_degree(0).size() + 2;
            if (points == 2)
                r.add("component collapse agrees with the pushout", find_isomorphism(col.result, p).has_value());
            else
                r.notes.push_back(fmt::format("C is disconnected; component collapse has {} extra points", points - 2));
        }
    });
    return r;
}

CheckReport check_decomp(const Complex& c)
{
    CheckReport r{"decomp", c.name()};
    guarded(r, [&] {
        const Complex arrow = cube(1);
        const Complex lhs = gray_tensor(arrow, suspension(c));
        auto valid = validate_adc(lhs);
        r.add("□¹⊗ΣC is an ADC", valid.ok(), detail(valid));
        if (!valid.ok())
            return;

        const Complex funny = funny_square1(c);
        auto valid_f = validate_adc(funny);
        r.add("funny square is an ADC", valid_f.ok(), detail(valid_f));

        const Complex inner = gray_tensor(arrow, c);
        const Complex b = suspension(inner);
        const std::string sep = kTensorSeparator;
        Subcomplex s{{"o-", "o+"}};
        for (const auto& x : c.basis()) {
            s.members.insert("s.-" + sep + x.id);
            s.members.insert("s.+" + sep + x.id);
        }
        ChainMap f{extract(b, s), funny, {}};
        f.values["o-"] = Chain::basis(0, "t.l.o-");
        f.values["o+"] = Chain::basis(0, "t.r.+");
        for (const auto& x : c.basis()) {
            Chain upper = Chain::basis(x.degree + 1, "t.l.s." + x.id);
            Chain lower = Chain::basis(x.degree + 1, "b.r.s." + x.id);
            if (x.degree == 0) {
                upper.add("t.r.ι", c.aug(x.id));
                lower.add("b.l.ι", c.aug(x.id));
            }
            f.values["s.-" + sep + x.id] = upper;
            f.values["s.+" + sep + x.id] = lower;
        }
        auto valid_map = validate_chain_map(f);
        r.add("whiskered suspension map is a chain map", valid_map.ok(), detail(valid_map));
        if (!valid_map.ok())
            return;

        const Complex rhs = pushout_along_chain_map(b, s, f);
        auto valid_rhs = validate_adc(rhs);
        r.add("pushout is an ADC", valid_rhs.ok(), detail(valid_rhs));
        r.notes.push_back(fmt::format("basis counts {} and {}", counts_str(lhs), counts_str(rhs)));

        auto iso = find_isomorphism(lhs, rhs);
        r.add("□¹⊗ΣC ≅ funny ∪ Σ(□¹⊗C)", iso.has_value(), iso ? "" : "no basis bijection commutes with d, aug and marks");
        r.bijection = iso;

        Bijection natural{{"-" + sep + "o-", "t.l.o-"}, {"-" + sep + "o+", "t.l.o+"}, {"ι" + sep + "o+", "t.r.ι"},
                          {"+" + sep + "o+", "t.r.+"},  {"ι" + sep + "o-", "b.l.ι"},  {"+" + sep + "o-", "b.l.+"}};
        for (const auto& x : c.basis()) {
            natural["-" + sep + "s." + x.id] = "t.l.s." + x.id;
            natural["+" + sep + "s." + x.id] = "b.r.s." + x.id;
            natural["ι" + sep + "s." + x.id] = "s.ι" + sep + x.id;
        }
        r.add("ι⊗s.b ↦ s.(ι⊗b) extends to an isomorphism", is_isomorphism(lhs, rhs, natural));
    });
    return r;
}

CheckReport check_big_cell_unique(const ThetaExpr& theta, const BigCellOptions& options)
{
    CheckReport r{"big-cell", theta.str()};
    guarded(r, [&] {
        const Complex t = gray_tensor(cube(1), theta_from_expr(theta));
        auto valid = validate_adc(t);
        r.add("□¹⊗θ is an ADC", valid.ok(), detail(valid));
        if (!valid.ok())
            return;
        const Cell big = total_cell(t);
        auto valid_big = validate_cell(t, big);
        r.add("big cell is a cell", valid_big.ok(), detail(valid_big));
        if (!valid_big.ok())
            return;
        const int top = big.dim();

        // Lax orientation: the source of the big cell is −⊗μ followed by ι⊗(target of μ).
        const Complex shape = theta_from_expr(theta);
        const Cell mu = total_cell(shape);
        const std::string sep = kTensorSeparator;
        Chain expected(top - 1);
        for (const auto& [id, coef] : mu.row(top - 1, Side::Minus).terms())
            expected.add("-" + sep + id, coef);
        if (top >= 2)
            for (const auto& [id, coef] : mu.row(top - 2, Side::Plus).terms())
                expected.add("ι" + sep + id, coef);
        const Chain& actual = big.row(top - 1, Side::Minus);
        r.add("big cell source follows the lax orientation", actual == expected,
              actual == expected ? "" : fmt::format("source row {} is {}, expected {}", top - 1, actual.str(), expected.str()));

        const Cell source = boundary_restrict(big, top - 1, Side::Minus);
        const Cell target = boundary_restrict(big, top - 1, Side::Plus);

        auto matches_at = [&](int bound) {
            std::vector<Cell> out;
            if (t.size() <= options.full_enumeration_max) {
                for (const Cell& c : enumerate_cells(t, top, bound, options.enum_options))
                    if (c.dim() == top && boundary_restrict(c, top - 1, Side::Minus) == source &&
                        boundary_restrict(c, top - 1, Side::Plus) == target)
                        out.push_back(c);
            } else {
                const Chain gap = target.padded(top - 1).row(top - 1, Side::Minus) -
                                  source.padded(top - 1).row(top - 1, Side::Minus);
                for (const Chain& z : solve_boundary(t, top, gap, bound, options.enum_options)) {
                    Cell c = source.padded(top - 1);
                    c.rows[top - 1].plus = target.padded(top - 1).rows[top - 1].plus;
                    c.rows.push_back({z, z});
                    c = c.normalized();
                    if (validate_cell(t, c).ok())
                        out.push_back(c);
                }
            }
            return out;
        };
        const char* method = t.size() <= options.full_enumeration_max ? "full cell enumeration" : "top-row solving";
        std::vector<Cell> matches = matches_at(options.coeff_bound);
        std::vector<Cell> stable = matches_at(options.stabilization_bound);
        r.add("matches stable between coefficient bounds", matches == stable,
              fmt::format("{} at bound {}, {} at bound {}", matches.size(), options.coeff_bound, stable.size(),
                          options.stabilization_bound));
        const bool unique = matches.size() == 1 && matches.front() == big;
        r.add("exactly one cell has the big cell's boundary", unique,
              fmt::format("{} match(es) in dimension {} by {}", matches.size(), top, method));
        r.notes.push_back("□¹⊗θ basis counts " + counts_str(t));
        r.matches = std::move(matches);
    });
    return r;
}

ChainMap cube_globe_section(int m)
{
    const Complex box = cube(m);
    const Complex globe_m = globe(m);
    const Id top = box.ids_of_degree(m).front();
    const Atom a = atom(box, top);
    ChainMap s{globe_m, box, {}};
    if (m == 0) {
        s.values[globe_m.basis().front().id] = Chain::basis(0, top);
        return s;
    }
    for (int k = 0; k < m; ++k) {
        s.values[fmt::format("e{}-", k)] = a.minus[k];
        s.values[fmt::format("e{}+", k)] = a.plus[k];
    }
    s.values[fmt::format("e{}", m)] = Chain::basis(m, top);
    return s;
}

std::optional<ChainMap> find_cube_globe_retraction(int m, std::uint64_t budget)
{
    const Complex box = cube(m);
    const Complex globe_m = globe(m);
    const ChainMap s = cube_globe_section(m);
    if (budget == 0)
        budget = default_search_budget();

    // Nonnegative 0/1 chains of each degree of the globe.
    std::vector<std::vector<Chain>> candidates(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) {
        const auto ids = globe_m.ids_of_degree(k);
        for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
            Chain c(k);
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (mask >> i & 1)
                    c.add(ids[i], 1);
            candidates[k].push_back(c);
        }
    }
    // r∘s = id pins a linear constraint once the last support element of s(y) is assigned.
    const auto& order = box.basis();
    std::map<Id, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i].id] = i;
    std::vector<std::vector<Id>> due(order.size());
    for (const auto& y : globe_m.basis()) {
        std::size_t last = 0;
        for (const Chain chain = s.value(y.id); const auto& [id, coef] : chain.terms())
            last = std::max(last, position.at(id));
        due[last].push_back(y.id);
    }

    ChainMap r{box, globe_m, {}};
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == order.size())
            return true;
        const auto& x = order[i];
        const Chain boundary_image = r.apply(box.d(x.id));
        for (const Chain& c : candidates[x.degree]) {
            if (++nodes > budget)
                throw Error(ErrorKind::SearchBudgetExceeded, fmt::format("retraction search for m = {}", m));
            if (x.degree == 0 ? globe_m.aug(c) != box.aug(x.id) : globe_m.d(c) != boundary_image)
                continue;
            r.values[x.id] = c;
            bool ok = true;
            for (const Id& y : due[i])
                ok = ok && r.apply(s.value(y)) == Chain::basis(globe_m.degree_of(y), y);
            if (ok && search(i + 1))
                return true;
        }
        r.values.erase(x.id);
        return false;
    };
    if (!search(0))
        return std::nullopt;
    for (auto it = r.values.begin(); it != r.values.end();)
        it = it->second.is_zero() ? r.values.erase(it) : std::next(it);
    return r;
}

CheckReport check_cube_globe(int m, const CubeGlobeOptions& options)
{
    CheckReport r{"cube-globe", fmt::format("m={}", m)};
    guarded(r, [&] {
        if (m < 1)
            throw Error(ErrorKind::InvalidCell, fmt::format("m = {} is below 1", m));
        const Complex box = cube(m);
        const Id top = box.ids_of_degree(m).front();
        const Cell whole = Cell::from_atom(atom(box, top));
        AttachStep step{m, boundary_restrict(whole, m - 1, Side::Minus), boundary_restrict(whole, m - 1, Side::Plus), top};
        AttachResult attached = attach_cell(boundary(box), step);
        Bijection same;
        for (const auto& e : box.basis())
            same[e.id] = e.id;
        r.add("monic: ∂□^m with the top cell attached is □^m",
              is_isomorphism(attached.result, box, same) && attached.site_member);

        const ChainMap s = cube_globe_section(m);
        auto valid_s = validate_chain_map(s);
        r.add("big-cell section 𝔾_m → □^m is a chain map", valid_s.ok(), detail(valid_s));
        std::optional<ChainMap> retraction;
        try {
            retraction = find_cube_globe_retraction(m, options.search_budget);
        } catch (const Error& e) {
            if (!e.is_resource_limit())
                throw;
            r.add("epi: split retraction □^m → 𝔾_m", Status::Skipped, e.what());
            return;
        }
        if (!retraction) {
            r.add("epi: split retraction □^m → 𝔾_m", false, "no 0/1 retraction exists");
            return;
        }
        auto valid_r = validate_chain_map(*retraction);
        r.add("epi: split retraction □^m → 𝔾_m", valid_r.ok(), detail(valid_r));

        const Complex dbox = boundary(box);
        Subcomplex sub;
        for (const auto& e : dbox.basis())
            sub.members.insert(e.id);
        ChainMap f{dbox, globe(m, true), {}};
        for (const auto& [id, value] : retraction->values)
            if (sub.members.count(id))
                f.values[id] = value;
        const Complex p = pushout_along_chain_map(box, sub, f);
        r.add("epi: □^m ∪_{∂□^m} ∂𝔾_m ≅ 𝔾_m", find_isomorphism(p, globe(m)).has_value(), "pushout counts " + counts_str(p));
    });
    return r;
}

CheckReport check_site_closure(const std::vector<Complex>& corpus)
{
    CheckReport r{"site-closure", fmt::format("{} complexes", corpus.size())};
    guarded(r, [&] {
        auto member = [&](const Complex& k) -> std::string {
            auto valid = validate_adc(k);
            if (!valid.ok())
                return detail(valid);
            auto unital = is_unital(k);
            if (!unital.ok)
                return "atom of " + *unital.counterexample + " is not unital";
            auto loops = is_strongly_loop_free(k);
            if (!loops.ok)
                return fmt::format("cycle {}", fmt::join(loops.cycle, " → "));
            return {};
        };
        std::vector<std::string> bad;
        std::size_t checked = 0;
        for (const Complex& k : corpus) {
            ++checked;
            if (auto why = member(k); !why.empty())
                bad.push_back(k.name() + ": " + why);
        }
        for (const Complex& k : corpus)
            for (const Complex& l : corpus) {
                ++checked;
                const Complex t = gray_tensor(k, l);
                if (auto why = member(t); !why.empty())
                    bad.push_back(t.name() + ": " + why);
            }
        r.add("unital and strongly loop-free", bad.empty(),
              bad.empty() ? fmt::format("{} complexes", checked) : bad.front());
        for (std::size_t i = 1; i < bad.size() && i < 10; ++i)
            r.notes.push_back(bad[i]);
    });
    return r;
}

CheckReport check_tensor_laws(const std::vector<Complex>& corpus, std::size_t max_product)
{
    CheckReport r{"tensor-laws", fmt::format("{} complexes", corpus.size())};
    guarded(r, [&] {
        std::vector<std::string> count_bad, unit_bad, assoc_bad;
        std::size_t triples = 0, by_identity = 0;
        const Complex pt = point();
        const std::string sep = kTensorSeparator;
        for (const Complex& k : corpus) {
            Bijection left, right;
            for (const auto& e : k.basis()) {
                left[pt.basis().front().id + sep + e.id] = e.id;
                right[e.id + sep + pt.basis().front().id] = e.id;
            }
            if (!is_isomorphism(gray_tensor(pt, k), k, left) || !is_isomorphism(gray_tensor(k, pt), k, right))
                unit_bad.push_back(k.name());
            for (const Complex& l : corpus) {
                const auto ck = k.counts(), cl = l.counts();
                std::vector<std::size_t> expected;
                for (std::size_t i = 0; i < ck.size(); ++i)
                    for (std::size_t j = 0; j < cl.size(); ++j) {
                        if (expected.size() < i + j + 1)
                            expected.resize(i + j + 1, 0);
                        expected[i + j] += ck[i] * cl[j];
                    }
                if (gray_tensor(k, l).counts() != expected)
                    count_bad.push_back(k.name() + "⊗" + l.name());
                for (const Complex& n : corpus) {
                    if (k.size() * l.size() * n.size() > max_product)
                        continue;
                    ++triples;
                    const Complex a = gray_tensor(gray_tensor(k, l), n);
                    const Complex b = gray_tensor(k, gray_tensor(l, n));
                    Bijection same;
                    for (const auto& e : a.basis())
                        same[e.id] = e.id;
                    if (is_isomorphism(a, b, same))
                        ++by_identity;
                    else if (!find_isomorphism(a, b))
                        assoc_bad.push_back(fmt::format("({}⊗{})⊗{}", k.name(), l.name(), n.name()));
                }
            }
        }
        r.add("basis counts convolve", count_bad.empty(), count_bad.empty() ? "" : count_bad.front());
        r.add("point is a strict unit", unit_bad.empty(), unit_bad.empty() ? "" : unit_bad.front());
        r.add("associative up to isomorphism", assoc_bad.empty(),
              assoc_bad.empty() ? fmt::format("{} triples, {} by the identity relabeling", triples, by_identity)
                                : assoc_bad.front());
    });
    return r;
}

CheckReport check_filtration(const Complex& k)
{
    CheckReport r{"filtration", k.name()};
    guarded(r, [&] {
        const auto steps = attachment_sequence(k, Subcomplex{});
        r.add("one step per generator", steps.size() == k.size(), fmt::format("{} steps", steps.size()));
        const Complex rebuilt = replay(k, Subcomplex{}, steps);
        Bijection same;
        for (const auto& e : k.basis())
            same[e.id] = e.id;
        r.add("replay rebuilds K", is_isomorphism(rebuilt, k, same) || find_isomorphism(rebuilt, k).has_value());
    });
    return r;
}

CheckReport check_omega_laws(const Complex& k, const OmegaOptions& options)
{
    CheckReport r{"omega-laws", k.name()};
    guarded(r, [&] {
        const int n = std::max(k.dimension(), 0);
        const auto cells = enumerate_cells(k, n, options.coeff_bound, options.enum_options);
        const auto wider = enumerate_cells(k, n, options.stabilization_bound, options.enum_options);
        r.add("cells stable between coefficient bounds", cells == wider,
              fmt::format("{} cells at bound {}, {} at bound {}", cells.size(), options.coeff_bound, wider.size(),
                          options.stabilization_bound));
        const std::set<Cell> known(cells.begin(), cells.end());

        auto bounded = [&](const Cell& c) {
            for (const auto& row : c.rows)
                for (const Chain* ch : {&row.minus, &row.plus})
                    for (const auto& [id, coef] : ch->terms())
                        if (coef > options.coeff_bound)
                            return false;
            return true;
        };

        std::size_t unit_checks = 0, unit_bad = 0, closure_bad = 0;
        std::size_t assoc_checks = 0, assoc_bad = 0, inter_checks = 0, inter_bad = 0;
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            for (const Cell& x : cells) {
                if (x.dim() <= p)
                    continue;
                ++unit_checks;
                if (compose(k, boundary_restrict(x, p, Side::Minus), x, p) != x ||
                    compose(k, x, boundary_restrict(x, p, Side::Plus), p) != x)
                    ++unit_bad;
            }
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (std::size_t j = 0; j < cells.size(); ++j)
                    if (composable(cells[i], cells[j], p)) {
                        pairs[p].emplace_back(i, j);
                        const Cell c = compose(k, cells[i], cells[j], p);
                        if (bounded(c) && !known.count(c))
                            ++closure_bad;
                    }
            for (const auto& [i, j] : pairs[p]) {
                const Cell xy = compose(k, cells[i], cells[j], p);
                for (const Cell& z : cells) {
                    if (!composable(cells[j], z, p))
                        continue;
                    ++assoc_checks;
                    if (compose(k, xy, z, p) != compose(k, cells[i], compose(k, cells[j], z, p), p))
                        ++assoc_bad;
                }
            }
        }
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p)
                for (const auto& [x, y] : pairs[q])
                    for (const auto& [z, w] : pairs[q]) {
                        const Cell top = compose(k, cells[x], cells[y], q);
                        const Cell bottom = compose(k, cells[z], cells[w], q);
                        if (!composable(top, bottom, p))
                            continue;
                        ++inter_checks;
                        const Cell lhs = compose(k, top, bottom, p);
                        if (!composable(cells[x], cells[z], p) || !composable(cells[y], cells[w], p)) {
                            ++inter_bad;
                            continue;
                        }
                        const Cell xz = compose(k, cells[x], cells[z], p);
                        const Cell yw = compose(k, cells[y], cells[w], p);
                        if (!composable(xz, yw, q) || compose(k, xz, yw, q) != lhs)
                            ++inter_bad;
                    }
        r.add("units", unit_bad == 0, fmt::format("{} violations in {} checks", unit_bad, unit_checks));
        r.add("composites are enumerated cells", closure_bad == 0, fmt::format("{} missing", closure_bad));
        r.add("associativity", assoc_bad == 0, fmt::format("{} violations in {} triples", assoc_bad, assoc_checks));
        r.add("interchange", inter_bad == 0, fmt::format("{} violations in {} quadruples", inter_bad, inter_checks));
    });
    return r;
}

SuiteConfig SuiteConfig::defaults()
{
    SuiteConfig c;
    const Complex two = theta_from_expr(ThetaExpr::parse("(0,0)"));
    Complex sigma_two = suspension(two);
    c.corpus = {empty_complex(), point(), globe(1), globe(2), two, cube(2), sigma_two};
    std::set<std::string> seen;
    for (const ThetaExpr& t : enumerate_theta(2, 9))
        if (seen.insert(t.str()).second)
            c.thetas.push_back(t);
    for (const char* text : {"(0,0)", "((0),0)", "(0,(0))"})
        if (seen.insert(text).second)
            c.thetas.push_back(ThetaExpr::parse(text));
    return c;
}

bool SuiteReport::passed() const
{
    for (const auto& t : reports)
        if (t.report.status != Status::Pass)
            return false;
    return true;
}

bool SuiteReport::resource_limited() const
{
    for (const auto& t : reports)
        if (t.report.status == Status::Skipped)
            return true;
    return false;
}

std::string SuiteReport::table() const
{
    std::string out = fmt::format("{:<14} {:<28} {:<8} {:>9}\n", "check", "subject", "status", "seconds");
    for (const auto& t : reports) {
        out += fmt::format("{:<14} {:<28} {:<8} {:>9.3f}\n", t.report.check, t.report.subject, to_string(t.report.status),
                           t.seconds);
        for (const auto& p : t.report.parts)
            if (p.status != Status::Pass)
                out += fmt::format("    {} {}: {}\n", to_string(p.status), p.name, p.detail);
    }
    for (const auto& w : warnings)
        out += "warning: " + w + "\n";
    out += fmt::format("{} of {} checks passed\n",
                       std::count_if(reports.begin(), reports.end(), [](const TimedReport& t) { return t.report.passed(); }),
                       reports.size());
    return out;
}

SuiteReport run_suite(const SuiteConfig& config)
{
    SuiteReport out;
    auto timed = [&](const std::function<CheckReport()>& run) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r = run();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        out.reports.push_back({std::move(r), took.count()});
    };
    for (const Complex& c : config.corpus)
        timed([&] { return check_susp_tensor(c); });
    for (const Complex& c : config.corpus)
        timed([&] { return check_decomp(c); });
    for (const ThetaExpr& t : config.thetas)
        timed([&] { return check_big_cell_unique(t); });
    for (int m = 1; m <= config.max_m; ++m)
        timed([&] { return check_cube_globe(m); });
    if (config.properties && !config.corpus.empty()) {
        timed([&] { return check_site_closure(config.corpus); });
        std::vector<Complex> laws = config.corpus;
        laws.push_back(cube(1));
        timed([&] { return check_tensor_laws(laws); });
        for (const Complex& c : config.corpus)
            timed([&] { return check_filtration(c); });
    }
    if (config.properties) {
        for (const Complex& k : {globe(2), theta_from_expr(ThetaExpr::parse("(0,0)")), cube(2),
                                 gray_tensor(cube(1), globe(1))})
            timed([&] { return check_omega_laws(k); });
    }
    if (config.corpus.empty() && config.thetas.empty())
        out.warnings.push_back("empty corpus: no lemma checks ran");
    return out;
}

} // namespace adc
