#include "adc/basis.hpp"
#include "adc/cells.hpp"
#include "adc/constructors.hpp"
#include "adc/debug.hpp"
#include "adc/gray.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using adc::Chain;
using adc::Complex;
using fixtures::counts;

namespace {

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

TEST(GrayTensor, SquareDifferential)
{
    const Complex sq = adc::gray_tensor(adc::cube(1), adc::cube(1));
    EXPECT_EQ(sq.d("ι⊗ι"), Chain(1, {{"+⊗ι", 1}, {"ι⊗-", 1}, {"-⊗ι", -1}, {"ι⊗+", -1}}));
    EXPECT_EQ(sq.d("ι⊗+"), Chain(0, {{"+⊗+", 1}, {"-⊗+", -1}}));
    EXPECT_EQ(sq.marks()->source, "-⊗-");
    EXPECT_EQ(sq.marks()->target, "+⊗+");
}

TEST(GrayTensor, CubeThreePanels)
{
    // Each panel of the 3-cube is a hexagon around one inner vertex. In the source panel the inner
    // vertex has a single incoming edge, from the source corner; in the target panel a single
    // outgoing edge, into the target corner.
    const Complex k = adc::cube(3);
    const adc::Cell mu = adc::total_cell(k);
    std::set<adc::Id> rim_seed;
    for (const auto side : {adc::Side::Minus, adc::Side::Plus})
        for (const auto& [id, coef] : mu.row(1, side).terms())
            rim_seed.insert(id);
    const auto rim = adc::subcomplex_closure(k, rim_seed).members;

    struct Panel {
        adc::Id inner;
        std::vector<adc::Id> in, out;
    };
    auto panel = [&](adc::Side side) {
        std::set<adc::Id> seed;
        for (const auto& [id, coef] : mu.row(2, side).terms())
            seed.insert(id);
        EXPECT_EQ(seed.size(), 3u);
        Panel p;
        const auto members = adc::subcomplex_closure(k, seed).members;
        for (const auto& id : members)
            if (k.degree_of(id) == 0 && !rim.count(id)) {
                EXPECT_TRUE(p.inner.empty()) << "second inner vertex " << id;
                p.inner = id;
            }
        for (const auto& id : members) {
            if (k.degree_of(id) != 1)
                continue;
            const Chain d = k.d(id);
            if (d.coefficient(p.inner) == 1)
                p.in.push_back(d.terms().begin()->second < 0 ? d.terms().begin()->first : d.terms().rbegin()->first);
            if (d.coefficient(p.inner) == -1)
                p.out.push_back(d.terms().begin()->second > 0 ? d.terms().begin()->first : d.terms().rbegin()->first);
        }
        return p;
    };
    const Panel src = panel(adc::Side::Minus);
    const Panel tgt = panel(adc::Side::Plus);
    EXPECT_EQ(rim.size(), 12u);
    EXPECT_EQ(src.in, std::vector<adc::Id>{k.marks()->source});
    EXPECT_EQ(src.out.size(), 2u);
    EXPECT_EQ(tgt.out, std::vector<adc::Id>{k.marks()->target});
    EXPECT_EQ(tgt.in.size(), 2u);
}

TEST(GrayTensor, GlobeSquare)
{
    const Complex g = adc::gray_tensor(adc::globe(1), adc::globe(1));
    EXPECT_EQ(g.counts(), counts({4, 4, 1}));
    EXPECT_TRUE(adc::find_isomorphism(g, adc::cube(2)).has_value());
}

TEST(GrayTensor, CountsConvolveAndLawsHold)
{
    const auto corpus = fixtures::corpus();
    for (const Complex& a : corpus)
        for (const Complex& b : corpus) {
            const Complex t = adc::gray_tensor(a, b);
            EXPECT_EQ(t.counts(), convolve(a.counts(), b.counts())) << a.name() << " " << b.name();
            EXPECT_TRUE(adc::validate_adc(t).ok()) << a.name() << " " << b.name();
            EXPECT_TRUE(adc::is_site_member(t)) << a.name() << " " << b.name();
        }
}

TEST(GrayTensor, ExactUnits)
{
    for (const Complex& k : fixtures::corpus()) {
        adc::Bijection left, right;
        for (const auto& e : k.basis()) {
            left["*⊗" + e.id] = e.id;
            right[e.id + "⊗*"] = e.id;
        }
        EXPECT_TRUE(adc::is_isomorphism(adc::gray_tensor(adc::point(), k), k, left)) << k.name();
        EXPECT_TRUE(adc::is_isomorphism(adc::gray_tensor(k, adc::point()), k, right)) << k.name();
    }
}

TEST(GrayTensor, AssociativeOnIds)
{
    const Complex a = adc::globe(1), b = adc::globe(2), c = fixtures::theta("(0,0)");
    const Complex left = adc::gray_tensor(adc::gray_tensor(a, b), c);
    const Complex right = adc::gray_tensor(a, adc::gray_tensor(b, c));
    EXPECT_TRUE(adc::is_isomorphism(left, right, fixtures::identity_ids(left)));
}

TEST(GrayTensor, EmptyIsAbsorbing)
{
    EXPECT_TRUE(adc::gray_tensor(adc::empty_complex(), adc::cube(2)).empty());
    EXPECT_TRUE(adc::gray_tensor(adc::cube(2), adc::empty_complex()).empty());
}

TEST(GrayTensor, NotSymmetric)
{
    // 𝔾₂⊗𝔾₁ and 𝔾₁⊗𝔾₂ agree in counts; the swap of factors is not an isomorphism of bipointed complexes.
    const Complex a = adc::gray_tensor(adc::globe(2), adc::globe(1));
    const Complex b = adc::gray_tensor(adc::globe(1), adc::globe(2));
    EXPECT_EQ(a.counts(), b.counts());
    adc::Bijection swap;
    for (const auto& e : a.basis()) {
        const auto cut = e.id.find("⊗");
        swap[e.id] = e.id.substr(cut + std::string("⊗").size()) + "⊗" + e.id.substr(0, cut);
    }
    EXPECT_FALSE(adc::is_isomorphism(a, b, swap));
}

TEST(GrayTensor, FlippedSignIsTensorWithDual)
{
    const Complex k = adc::globe(2), l = fixtures::theta("(0,0)");
    const Complex plain = adc::gray_tensor(k, l);
    const Complex expected = adc::gray_tensor(k, adc::dual(l));
    adc::debug::MutationGuard guard(true, false);
    const Complex flipped = adc::gray_tensor(k, l);
    EXPECT_TRUE(adc::validate_adc(flipped).ok());
    std::size_t changed = 0;
    for (const auto& e : flipped.basis()) {
        EXPECT_EQ(flipped.d(e.id), expected.d(e.id)) << e.id;
        changed += flipped.d(e.id) != plain.d(e.id);
    }
    EXPECT_GT(changed, 0u);
}

TEST(FunnySquare, Counts)
{
    const Complex p = adc::funny_square1(adc::point());
    EXPECT_EQ(p.counts(), counts({4, 4}));
    EXPECT_TRUE(adc::find_isomorphism(p, adc::cube(2, true)).has_value());
    EXPECT_EQ(adc::funny_square1(adc::globe(1)).counts(), counts({4, 6, 2}));
    EXPECT_EQ(adc::funny_square1(adc::empty_complex()).counts(), counts({4, 2}));
}

TEST(FunnySquare, CountFormula)
{
    // Four corners; two copies of each positive-degree element of ΣC plus the two ι.
    for (const Complex& c : fixtures::corpus()) {
        auto expected = adc::suspension(c).counts();
        expected[0] = 4;
        for (std::size_t k = 1; k < expected.size(); ++k)
            expected[k] *= 2;
        if (expected.size() < 2)
            expected.push_back(0);
        expected[1] += 2;
        EXPECT_EQ(adc::funny_square1(c).counts(), expected) << c.name();
    }
}

TEST(FunnySquare, CornersAndValidity)
{
    for (const Complex& c : fixtures::corpus()) {
        const Complex f = adc::funny_square1(c);
        EXPECT_TRUE(adc::validate_adc(f).ok()) << c.name();
        EXPECT_TRUE(adc::is_site_member(f)) << c.name();
        for (const char* corner : {"t.l.o-", "t.l.o+", "b.l.+", "t.r.+"})
            EXPECT_TRUE(f.contains(corner)) << c.name() << " " << corner;
        EXPECT_EQ(f.marks()->source, "t.l.o-");
        EXPECT_EQ(f.marks()->target, "t.r.+");
    }
}
