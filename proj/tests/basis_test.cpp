#include "adc/basis.hpp"
#include "adc/constructors.hpp"
#include "adc/error.hpp"
#include "adc/gray.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using adc::Chain;
using adc::Complex;

TEST(Atom, GlobeIsItsOwnAtom)
{
    const auto a = adc::atom(adc::globe(2), "e2");
    ASSERT_EQ(a.degree, 2);
    EXPECT_EQ(a.minus[2], Chain::basis(2, "e2"));
    EXPECT_EQ(a.plus[2], Chain::basis(2, "e2"));
    EXPECT_EQ(a.minus[1], Chain::basis(1, "e1-"));
    EXPECT_EQ(a.plus[1], Chain::basis(1, "e1+"));
    EXPECT_EQ(a.minus[0], Chain::basis(0, "e0-"));
    EXPECT_EQ(a.plus[0], Chain::basis(0, "e0+"));
}

TEST(Atom, SquareTopGenerator)
{
    const auto a = adc::atom(adc::cube(2), "ι⊗ι");
    EXPECT_EQ(a.minus[1], Chain(1, {{"-⊗ι", 1}, {"ι⊗+", 1}}));
    EXPECT_EQ(a.plus[1], Chain(1, {{"+⊗ι", 1}, {"ι⊗-", 1}}));
    EXPECT_EQ(a.minus[0], Chain::basis(0, "-⊗-"));
    EXPECT_EQ(a.plus[0], Chain::basis(0, "+⊗+"));
}

TEST(Atom, DegreeZero)
{
    const auto a = adc::atom(fixtures::arrow(), "a");
    ASSERT_EQ(a.minus.size(), 1u);
    EXPECT_EQ(a.minus[0], Chain::basis(0, "a"));
    EXPECT_EQ(a.plus[0], Chain::basis(0, "a"));
}

TEST(Unital, Examples)
{
    EXPECT_TRUE(adc::is_unital(adc::cube(3)).ok);
    EXPECT_TRUE(adc::is_unital(adc::empty_complex()).ok);

    Complex k;
    for (const char* id : {"a", "b", "c"})
        k.add(id, 0);
    k.add("f", 1, Chain(0, {{"b", 1}, {"c", 1}, {"a", -1}}));
    const auto r = adc::is_unital(k);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.counterexample, "f");
}

TEST(LoopFree, Examples)
{
    EXPECT_TRUE(adc::is_strongly_loop_free(adc::cube(2)).ok);
    for (int n = 0; n <= 4; ++n)
        EXPECT_TRUE(adc::is_strongly_loop_free(adc::globe(n)).ok) << n;

    const auto r = adc::is_strongly_loop_free(fixtures::loop());
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.cycle, (std::vector<adc::Id>{"a", "f", "b", "g"}));
}

TEST(SiteMembership, InvariantUnderRelabeling)
{
    for (const Complex& k : fixtures::corpus()) {
        EXPECT_EQ(adc::is_site_member(k), adc::is_site_member(k.prefixed("q:"))) << k.name();
        EXPECT_TRUE(adc::is_site_member(k)) << k.name();
    }
    EXPECT_FALSE(adc::is_site_member(fixtures::loop().prefixed("q:")));
}

TEST(Closure, Examples)
{
    EXPECT_EQ(adc::subcomplex_closure(adc::cube(2), {"ι⊗ι"}).members.size(), 9u);
    EXPECT_EQ(adc::subcomplex_closure(adc::globe(2), {"e1-"}).members, (std::set<adc::Id>{"e1-", "e0-", "e0+"}));
    EXPECT_TRUE(adc::subcomplex_closure(adc::cube(2), {}).members.empty());
}

TEST(Closure, IdempotentMonotoneAndClosed)
{
    for (const Complex& k : fixtures::corpus()) {
        for (const auto& e : k.basis()) {
            const auto c = adc::subcomplex_closure(k, {e.id});
            EXPECT_TRUE(adc::is_subcomplex(k, c));
            EXPECT_EQ(adc::subcomplex_closure(k, c.members), c);
            EXPECT_TRUE(c.members.count(e.id));
            // Subcomplexes of site members stay in the site.
            EXPECT_TRUE(adc::is_site_member(adc::extract(k, c))) << k.name() << " " << e.id;
        }
    }
}

TEST(Closure, UnknownSeed)
{
    EXPECT_THROW((void)adc::subcomplex_closure(adc::globe(1), {"nope"}), adc::Error);
}

TEST(Extract, RejectsNonSubcomplex)
{
    try {
        (void)adc::extract(adc::globe(1), adc::Subcomplex{{"e1"}});
        FAIL();
    } catch (const adc::Error& e) {
        EXPECT_EQ(e.kind(), adc::ErrorKind::NotASubcomplex);
    }
}

TEST(Isomorphism, Examples)
{
    EXPECT_TRUE(adc::find_isomorphism(adc::globe(2), adc::suspension(adc::globe(1))).has_value());
    EXPECT_TRUE(adc::find_isomorphism(adc::cube(2), adc::gray_tensor(adc::cube(1), adc::cube(1))).has_value());

    Complex extra = adc::globe(1);
    extra.add("c", 0);
    EXPECT_FALSE(adc::find_isomorphism(adc::globe(1), extra).has_value());
}

TEST(Isomorphism, FoundBijectionIsVerified)
{
    for (const Complex& k : fixtures::corpus()) {
        const auto m = adc::find_isomorphism(k, k.prefixed("p."));
        ASSERT_TRUE(m.has_value()) << k.name();
        EXPECT_TRUE(adc::is_isomorphism(k, k.prefixed("p."), *m));
    }
}

TEST(Isomorphism, OrientationMatters)
{
    // 𝔾₂∨𝔾₁ and 𝔾₁∨𝔾₂ differ only by direction.
    const Complex a = fixtures::theta("((0),0)");
    const Complex b = fixtures::theta("(0,(0))");
    EXPECT_FALSE(adc::find_isomorphism(a, b).has_value());
    EXPECT_FALSE(adc::is_isomorphism(adc::globe(1), adc::globe(1), {{"e0-", "e0+"}, {"e0+", "e0-"}, {"e1", "e1"}}));
}

TEST(Isomorphism, BudgetIsReported)
{
    try {
        (void)adc::find_isomorphism(adc::cube(3), adc::cube(3).prefixed("p."), adc::IsoOptions{1});
        FAIL();
    } catch (const adc::Error& e) {
        EXPECT_EQ(e.kind(), adc::ErrorKind::SearchBudgetExceeded);
        EXPECT_TRUE(e.is_resource_limit());
    }
}
