#include "adc/basis.hpp"
#include "adc/cells.hpp"
#include "adc/colimits.hpp"
#include "adc/constructors.hpp"
#include "adc/error.hpp"
#include "adc/gray.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using adc::AttachStep;
using adc::Cell;
using adc::CellRow;
using adc::Chain;
using adc::Complex;
using adc::Side;
using adc::Subcomplex;
using fixtures::counts;

namespace {

Subcomplex whole(const Complex& k)
{
    Subcomplex s;
    for (const auto& e : k.basis())
        s.members.insert(e.id);
    return s;
}

Cell one_cell(const adc::Id& from, const adc::Id& to, const Chain& top)
{
    return Cell{{CellRow{Chain::basis(0, from), Chain::basis(0, to)}, CellRow{top, top}}};
}

Cell composite_of_two()
{
    return one_cell("1.o-", "2.o+", Chain(1, {{"1.s.*", 1}, {"2.s.*", 1}}));
}

adc::ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const adc::Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return adc::ErrorKind::SchemaError;
}

} // namespace

TEST(Glue, TwoArrowsEndToEnd)
{
    const Complex g = adc::globe(1);
    const Complex r = adc::glue(g, g, Subcomplex{{"e0+"}}, Subcomplex{{"e0-"}}, {{"e0+", "e0-"}}, {"l.", "r."});
    EXPECT_EQ(r.counts(), counts({3, 2}));
    EXPECT_TRUE(adc::validate_adc(r).ok());
    Complex unmarked = fixtures::theta("(0,0)");
    unmarked.set_marks(std::nullopt);
    EXPECT_TRUE(adc::find_isomorphism(r, unmarked).has_value());
}

TEST(Glue, ParallelPair)
{
    const Complex c = adc::cube(1);
    const Subcomplex ends{{"-", "+"}};
    const Complex r = adc::glue(c, c, ends, ends, {{"-", "-"}, {"+", "+"}}, {"l.", "r."});
    EXPECT_EQ(r.counts(), counts({2, 2}));
    EXPECT_TRUE(adc::find_isomorphism(r, adc::globe(2, true)).has_value());
}

TEST(Glue, CodiagonalIsIdentity)
{
    for (const Complex& k : fixtures::corpus()) {
        const Complex r = adc::glue(k, k, whole(k), whole(k), fixtures::identity_ids(k));
        EXPECT_TRUE(adc::is_isomorphism(r, k, fixtures::identity_ids(k))) << k.name();
    }
}

TEST(Glue, Errors)
{
    const Complex g = adc::globe(1);
    EXPECT_EQ(kind_of([&] { adc::glue(g, g, Subcomplex{{"e1"}}, Subcomplex{{"e1"}}, {{"e1", "e1"}}, {"l.", "r."}); }),
              adc::ErrorKind::NotASubcomplex);
    const Complex p = adc::point();
    EXPECT_EQ(kind_of([&] { adc::glue(p, g, Subcomplex{{"*"}}, Subcomplex{{"e0-", "e0+"}}, {{"*", "e0-"}}, {"l.", "r."}); }),
              adc::ErrorKind::IncompatibleIdentification);
}

TEST(Collapse, SidesOfSquare)
{
    const Subcomplex sides{{"-⊗-", "-⊗ι", "-⊗+", "+⊗-", "+⊗ι", "+⊗+"}};
    const auto c = adc::collapse_components(adc::cube(2), sides);
    EXPECT_EQ(c.result.counts(), counts({2, 2, 1}));
    EXPECT_TRUE(adc::find_isomorphism(c.result, adc::globe(2)).has_value());
    EXPECT_TRUE(adc::validate_chain_map(c.quotient).ok());
}

TEST(Collapse, DegenerateCases)
{
    for (const Complex& k : fixtures::corpus()) {
        const auto none = adc::collapse_components(k, Subcomplex{});
        EXPECT_TRUE(adc::is_isomorphism(none.result, k, fixtures::identity_ids(k))) << k.name();
    }
    const Complex two = fixtures::theta("(0,0)");
    const auto all = adc::collapse_components(two, whole(two));
    EXPECT_EQ(all.result.counts(), counts({1}));
    EXPECT_TRUE(adc::validate_chain_map(all.quotient).ok());
}

TEST(Collapse, RejectsNonSubcomplex)
{
    EXPECT_EQ(kind_of([] { adc::collapse_components(adc::globe(1), Subcomplex{{"e1"}}); }),
              adc::ErrorKind::NotASubcomplex);
}

TEST(Attach, RebuildsGlobe)
{
    const Complex base = adc::globe(2, true);
    const auto r = adc::attach_cell(base, AttachStep{2, one_cell("e0-", "e0+", Chain::basis(1, "e1-")),
                                                     one_cell("e0-", "e0+", Chain::basis(1, "e1+")), "e2"});
    EXPECT_TRUE(r.site_member);
    EXPECT_TRUE(adc::is_isomorphism(r.result, adc::globe(2), fixtures::identity_ids(adc::globe(2))));
}

TEST(Attach, RebuildsSquare)
{
    const Cell big = adc::total_cell(adc::cube(2));
    const auto r = adc::attach_cell(adc::cube(2, true), AttachStep{2, adc::boundary_restrict(big, 1, Side::Minus),
                                                                   adc::boundary_restrict(big, 1, Side::Plus), "ι⊗ι"});
    EXPECT_TRUE(r.site_member);
    EXPECT_TRUE(adc::is_isomorphism(r.result, adc::cube(2), fixtures::identity_ids(adc::cube(2))));
}

TEST(Attach, EndoCellOnCompositeLeavesTheSite)
{
    const Complex two = fixtures::theta("(0,0)");
    const auto r = adc::attach_cell(two, AttachStep{2, composite_of_two(), composite_of_two(), "z"});
    EXPECT_TRUE(r.result.d("z").is_zero());
    EXPECT_TRUE(adc::validate_adc(r.result).ok());
    EXPECT_EQ(r.site_member, adc::is_site_member(r.result));
    EXPECT_FALSE(r.site_member);
}

TEST(Attach, PointsAndDeletion)
{
    for (const Complex& k : fixtures::corpus()) {
        const auto r = adc::attach_cell(k, AttachStep{0, {}, {}, "new"});
        EXPECT_EQ(r.result.size(), k.size() + 1);
        EXPECT_TRUE(r.site_member);
        EXPECT_TRUE(adc::is_isomorphism(r.result.restricted(whole(k).members), k, fixtures::identity_ids(k)));
    }
}

TEST(Attach, Errors)
{
    const Complex two = fixtures::theta("(0,0)");
    const Cell f = one_cell("1.o-", "1.o+", Chain::basis(1, "1.s.*"));
    const Cell g = one_cell("1.o+", "2.o+", Chain::basis(1, "2.s.*"));
    EXPECT_EQ(kind_of([&] { adc::attach_cell(two, AttachStep{2, f, f, "1.s.*"}); }), adc::ErrorKind::StaleId);
    EXPECT_EQ(kind_of([&] { adc::attach_cell(two, AttachStep{2, f, g, "z"}); }), adc::ErrorKind::NotParallel);
    const Cell bad = one_cell("1.o+", "1.o-", Chain::basis(1, "1.s.*"));
    EXPECT_EQ(kind_of([&] { adc::attach_cell(two, AttachStep{2, bad, bad, "z"}); }), adc::ErrorKind::InvalidCell);
}

TEST(Pushout, ParallelPairOntoComposites)
{
    const Complex b = adc::globe(2);
    const Subcomplex s{{"e0-", "e0+", "e1-", "e1+"}};
    const Complex two = fixtures::theta("(0,0)");
    const Chain path(1, {{"1.s.*", 1}, {"2.s.*", 1}});
    adc::ChainMap f{adc::extract(b, s), two,
                    {{"e0-", Chain::basis(0, "1.o-")}, {"e0+", Chain::basis(0, "2.o+")}, {"e1-", path}, {"e1+", path}}};
    const Complex po = adc::pushout_along_chain_map(b, s, f);
    const auto attached = adc::attach_cell(two, AttachStep{2, composite_of_two(), composite_of_two(), "z"});
    EXPECT_TRUE(adc::find_isomorphism(po, attached.result).has_value());
}

TEST(Pushout, AlongIdentityOfBoundary)
{
    const Complex b = adc::globe(1);
    const Subcomplex s{{"e0-", "e0+"}};
    const Complex ends = adc::extract(b, s);
    const Complex po = adc::pushout_along_chain_map(b, s, adc::identity_map(ends));
    EXPECT_TRUE(adc::is_isomorphism(po, b, fixtures::identity_ids(b)));
}

TEST(Pushout, RejectsInvalidMap)
{
    const Complex b = adc::globe(1);
    const Subcomplex s{{"e0-", "e0+"}};
    adc::ChainMap f{adc::extract(b, s), adc::point(), {{"e0-", Chain(0, {{"*", 2}})}}};
    EXPECT_EQ(kind_of([&] { adc::pushout_along_chain_map(b, s, f); }), adc::ErrorKind::InvalidChainMap);
}

TEST(AttachmentSequence, Square)
{
    const Complex k = adc::cube(2);
    const auto steps = adc::attachment_sequence(k, Subcomplex{});
    ASSERT_EQ(steps.size(), 9u);
    for (std::size_t i = 0; i < steps.size(); ++i)
        EXPECT_EQ(steps[i].m, i < 4 ? 0 : i < 8 ? 1 : 2);
    EXPECT_EQ(steps.back().new_id, "ι⊗ι");
    const Complex rebuilt = adc::replay(k, Subcomplex{}, steps);
    EXPECT_EQ(rebuilt.marks(), k.marks());
    EXPECT_TRUE(adc::find_isomorphism(rebuilt, k).has_value());
}

TEST(AttachmentSequence, RelativeCases)
{
    const Complex k = fixtures::theta("((0),0)");
    EXPECT_TRUE(adc::attachment_sequence(k, whole(k)).empty());
    const Subcomplex g2{{"1.o-", "1.o+", "1.s.o-", "1.s.o+", "1.s.s.*"}};
    const auto steps = adc::attachment_sequence(k, g2);
    ASSERT_EQ(steps.size(), 2u);
    EXPECT_EQ(steps[0].m, 0);
    EXPECT_EQ(steps[1].m, 1);
    const Complex rebuilt = adc::replay(k, g2, steps);
    EXPECT_TRUE(adc::is_isomorphism(rebuilt, k, fixtures::identity_ids(k)));
}

TEST(AttachmentSequence, ReplaysEveryClosure)
{
    for (const Complex& k : fixtures::corpus())
        for (const auto& e : k.basis()) {
            const Subcomplex s = adc::subcomplex_closure(k, {e.id});
            const auto steps = adc::attachment_sequence(k, s);
            EXPECT_EQ(steps.size(), k.size() - s.members.size());
            EXPECT_TRUE(adc::is_isomorphism(adc::replay(k, s, steps), k, fixtures::identity_ids(k)))
                << k.name() << " from " << e.id;
        }
}

TEST(AttachmentSequence, RequiresUnital)
{
    Complex k;
    for (const char* id : {"a", "b", "c"})
        k.add(id, 0);
    k.add("f", 1, Chain(0, {{"b", 1}, {"c", 1}, {"a", -1}}));
    EXPECT_EQ(kind_of([&] { adc::attachment_sequence(k, Subcomplex{}); }), adc::ErrorKind::NotUnital);
}

TEST(EnumerateJs, ArrowFromEmpty)
{
    adc::JsOptions opts;
    opts.max_generators = 3;
    opts.max_dim = 1;
    bool found = false;
    for (const auto& g : adc::enumerate_js({adc::empty_complex()}, opts)) {
        EXPECT_EQ(g.site_member, adc::is_site_member(g.result));
        EXPECT_LE(g.step.m, 1);
        if (g.step.m == 1 && adc::find_isomorphism(g.base, adc::globe(1, true)) &&
            adc::find_isomorphism(g.result, adc::globe(1)))
            found = true;
    }
    EXPECT_TRUE(found);
}

TEST(EnumerateJs, GlobeFromParallelPair)
{
    adc::JsOptions opts;
    opts.max_generators = 4;
    opts.max_dim = 2;
    bool found = false;
    for (const auto& g : adc::enumerate_js({adc::globe(2, true)}, opts))
        if (g.step.m == 2 && adc::find_isomorphism(g.base, adc::globe(2, true)) &&
            adc::find_isomorphism(g.result, adc::globe(2)))
            found = true;
    EXPECT_TRUE(found);
}

TEST(EnumerateJs, NonMembersAreFlagged)
{
    adc::JsOptions opts;
    opts.max_generators = 5;
    opts.max_dim = 2;
    opts.include_non_members = true;
    const Complex two = fixtures::theta("(0,0)");
    const auto endo = adc::attach_cell(two, AttachStep{2, composite_of_two(), composite_of_two(), "z"}).result;
    bool found = false;
    std::size_t members = 0, others = 0;
    for (const auto& g : adc::enumerate_js({two}, opts)) {
        EXPECT_EQ(g.site_member, adc::is_site_member(g.result));
        (g.site_member ? members : others)++;
        if (adc::find_isomorphism(g.result, endo)) {
            found = true;
            EXPECT_FALSE(g.site_member);
        }
    }
    EXPECT_TRUE(found);
    EXPECT_GT(members, 0u);
    EXPECT_GT(others, 0u);
}

TEST(EnumerateJs, DedupeOnlyRemovesRepeats)
{
    adc::JsOptions opts;
    opts.max_generators = 3;
    opts.max_dim = 1;
    const auto all = adc::enumerate_js({adc::empty_complex()}, opts);
    opts.dedupe = true;
    const auto unique = adc::enumerate_js({adc::empty_complex()}, opts);
    EXPECT_LE(unique.size(), all.size());
    for (const auto& g : all) {
        bool covered = false;
        for (const auto& u : unique)
            covered = covered || adc::find_isomorphism(g.result, u.result).has_value();
        EXPECT_TRUE(covered);
    }
}
