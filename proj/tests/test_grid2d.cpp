#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "tda/grid2d.hpp"

using namespace tda;
using namespace testutil;

namespace {

GeneratorMultiset gens(std::initializer_list<std::pair<long long, long long>> pts) {
    GeneratorMultiset g;
    for (auto [x, y] : pts) g.push_back({Rational(x), Rational(y)});
    return g;
}

// Indicator module of the integer rectangle [a,b] x [a,b] inside w.
GridModule2D square_indicator(const Window& w, long long a, long long b, std::uint32_t p = 2) {
    GridModule2D m;
    m.field = p;
    m.window = w;
    auto in = [&](long long x, long long y) { return a <= x && x <= b && a <= y && y <= b; };
    m.dims.resize(w.nx() * w.ny());
    m.hmaps.resize((w.nx() - 1) * w.ny(), Matrix(0, 0, p));
    m.vmaps.resize(w.nx() * (w.ny() - 1), Matrix(0, 0, p));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j) {
            m.dims[m.idx(i, j)] = in(i, j) ? 1 : 0;
            if (i < w.x1) {
                Matrix h(in(i + 1, j) ? 1 : 0, in(i, j) ? 1 : 0, p);
                if (in(i, j) && in(i + 1, j)) h.at(0, 0) = 1;
                m.hmaps[m.hidx(i, j)] = h;
            }
            if (j < w.y1) {
                Matrix v(in(i, j + 1) ? 1 : 0, in(i, j) ? 1 : 0, p);
                if (in(i, j) && in(i, j + 1)) v.at(0, 0) = 1;
                m.vmaps[m.vidx(i, j)] = v;
            }
        }
    m.validate();
    return m;
}

// Canonical morphism free(src) -> free(tgt) sending generator k to the image
// of target generator k; requires tgt[k] <= src[k] coordinatewise.
GridMorphism2D canonical_free_morphism(const GeneratorMultiset& src, const GeneratorMultiset& tgt,
                                       const Window& w, std::uint32_t p = 2) {
    REQUIRE(src.size() == tgt.size());
    GridMorphism2D f;
    f.source = free_grid_module(src, w, p);
    f.target = free_grid_module(tgt, w, p);
    f.components.resize(w.nx() * w.ny(), Matrix(0, 0, p));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j) {
            std::vector<std::size_t> sb, tb;
            for (std::size_t k = 0; k < src.size(); ++k) {
                if (src[k].first <= Rational(i) && src[k].second <= Rational(j)) sb.push_back(k);
                if (tgt[k].first <= Rational(i) && tgt[k].second <= Rational(j)) tb.push_back(k);
            }
            Matrix c(tb.size(), sb.size(), p);
            for (std::size_t cc = 0; cc < sb.size(); ++cc)
                for (std::size_t r = 0; r < tb.size(); ++r)
                    if (tb[r] == sb[cc]) c.at(r, cc) = 1;
            f.components[f.source.idx(i, j)] = c;
        }
    f.validate();
    return f;
}

Rational linf(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    Rational dx = (a.first - b.first).abs(), dy = (a.second - b.second).abs();
    return dx > dy ? dx : dy;
}

Ext brute_free_bottleneck(const GeneratorMultiset& a, const GeneratorMultiset& b) {
    if (a.size() != b.size()) return Ext::pos_inf();
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    Ext best = a.empty() ? Ext(Rational(0)) : Ext::pos_inf();
    do {
        Rational worst(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rational d = linf(a[i], b[perm[i]]);
            if (d > worst) worst = d;
        }
        if (!a.empty() && Ext(worst) < best) best = Ext(worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("free module dimension counting") {
    Window w{-1, -1, 2, 2};
    GridModule2D one = free_grid_module(gens({{0, 0}}), w);
    one.validate();
    for (long long i = -1; i <= 2; ++i)
        for (long long j = -1; j <= 2; ++j)
            CHECK(one.dim_at(i, j) == ((i >= 0 && j >= 0) ? 1u : 0u));
    GridModule2D zero = free_grid_module({}, w);
    for (long long i = -1; i <= 2; ++i)
        for (long long j = -1; j <= 2; ++j) CHECK(zero.dim_at(i, j) == 0);
    GridModule2D two = free_grid_module(gens({{0, 0}, {1, 1}}), w);
    CHECK(two.dim_at(2, 2) == 2);
    CHECK(two.dim_at(2, 0) == 1);
    CHECK(two.dim_at(0, 2) == 1);
    CHECK(two.dim_at(-1, 2) == 0);
    CHECK_THROWS_AS(free_grid_module({{Rational(1, 2), Rational(0)}}, w), input_error);
}

TEST_CASE("koszul obstruction vanishes exactly on free modules") {
    Window w{-1, -1, 3, 3};
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<long long> c(-1, 2);
    std::uniform_int_distribution<std::size_t> cnt(0, 4);
    for (int t = 0; t < 20; ++t) {
        GeneratorMultiset g;
        for (std::size_t k = cnt(rng); k > 0; --k) g.push_back({Rational(c(rng)), Rational(c(rng))});
        GridModule2D m = free_grid_module(g, w);
        for (long long zx = 0; zx <= 3; ++zx)
            for (long long zy = 0; zy <= 3; ++zy) CHECK(koszul_xi1(m, zx, zy) == 0);
    }
    // the square indicator is not free: obstruction at the inner corner
    GridModule2D sq = square_indicator(w, 0, 2);
    CHECK(koszul_xi1(sq, 0, 3) == 1);
    CHECK(koszul_xi1(sq, 1, 1) == 0);
    CHECK_THROWS_AS(koszul_xi1(sq, -1, 0), input_error);
}

TEST_CASE("interpolant of the shifted free inclusion") {
    Window w{0, 0, 3, 3};
    GridMorphism2D f = canonical_free_morphism(gens({{1, 1}}), gens({{0, 0}}), w);
    Submodule2D l = interpolant(f, 1);
    l.module.validate();
    GridModule2D expect = free_grid_module(gens({{0, 1}}), w);
    for (long long i = 0; i <= 3; ++i)
        for (long long j = 0; j <= 3; ++j) CHECK(l.module.dim_at(i, j) == expect.dim_at(i, j));
    for (long long zx = 1; zx <= 3; ++zx)
        for (long long zy = 1; zy <= 3; ++zy) CHECK(koszul_xi1(l.module, zx, zy) == 0);
}

TEST_CASE("interpolant of identity and zero morphisms") {
    Window w{0, 0, 2, 2};
    GridModule2D n = free_grid_module(gens({{0, 0}, {1, 0}}), w);
    GridMorphism2D ident{n, n, {}};
    for (std::size_t k = 0; k < w.nx() * w.ny(); ++k)
        ident.components.push_back(Matrix::identity(n.dims[k], 2));
    ident.validate();
    Submodule2D l = interpolant(ident, 1);
    for (long long i = 0; i <= 2; ++i)
        for (long long j = 0; j <= 2; ++j) CHECK(l.module.dim_at(i, j) == n.dim_at(i, j));
    GridModule2D zsrc = free_grid_module({}, w);
    GridMorphism2D zf{zsrc, n, {}};
    for (std::size_t k = 0; k < w.nx() * w.ny(); ++k)
        zf.components.push_back(Matrix(n.dims[k], 0, 2));
    zf.validate();
    Submodule2D lz = interpolant(zf, 1);
    // the horizontal step maps of a free module are injective, so the
    // preimage of zero is zero everywhere
    for (long long i = 0; i <= 2; ++i)
        for (long long j = 0; j <= 2; ++j) CHECK(lz.module.dim_at(i, j) == 0);
}

TEST_CASE("directional triviality of an isomorphism is zero") {
    Window w{0, 0, 2, 2};
    GridModule2D n = free_grid_module(gens({{0, 0}}), w);
    GridMorphism2D ident{n, n, {}};
    for (std::size_t k = 0; k < w.nx() * w.ny(); ++k)
        ident.components.push_back(Matrix::identity(n.dims[k], 2));
    CHECK(directional_coker_triviality(ident, 0) == Ext(Rational(0)));
    CHECK(directional_coker_triviality(ident, 1) == Ext(Rational(0)));
}

TEST_CASE("interpolant sandwich bounds on random shifted inclusions") {
    std::mt19937_64 rng(109);
    Window w{0, 0, 4, 4};
    std::uniform_int_distribution<long long> base(0, 2), shift(0, 1);
    for (int t = 0; t < 30; ++t) {
        std::size_t eps = 1;
        std::uniform_int_distribution<std::size_t> cnt(1, 4);
        GeneratorMultiset tgt, src;
        for (std::size_t k = cnt(rng); k > 0; --k) {
            long long x = base(rng), y = base(rng);
            tgt.push_back({Rational(x), Rational(y)});
            src.push_back({Rational(x + shift(rng)), Rational(y + shift(rng))});
        }
        GridMorphism2D f = canonical_free_morphism(src, tgt, w);
        Submodule2D l = interpolant(f, eps);
        Submodule2D imf = image_submodule(f);
        // im f sits inside the interpolant; its cokernel dies along axis 0
        GridMorphism2D inc_im = submodule_inclusion(imf, l);
        inc_im.validate();
        CHECK(directional_coker_triviality(inc_im, 0) <= Ext(Rational((long long)eps)));
        // interpolant sits inside N; cokernel dies along axis 1 (shifts <= eps)
        GridMorphism2D inc_n = inclusion_morphism(l, f.target);
        inc_n.validate();
        CHECK(directional_coker_triviality(inc_n, 1) <= Ext(Rational((long long)eps)));
        // freeness of the interpolant of a monomorphism between free modules
        for (long long zx = 1; zx <= 4; ++zx)
            for (long long zy = 1; zy <= 4; ++zy) CHECK(koszul_xi1(l.module, zx, zy) == 0);
    }
}

TEST_CASE("generator bijection with one-sided distance bound exists") {
    // for monomorphisms with eps-trivial cokernel built by shifting, some
    // bijection pairs b with b' where b - eps <= b' <= b coordinatewise
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<long long> base(0, 3), shift(0, 2);
    for (int t = 0; t < 50; ++t) {
        long long eps = 2;
        std::uniform_int_distribution<std::size_t> cnt(1, 5);
        GeneratorMultiset tgt, src;
        for (std::size_t k = cnt(rng); k > 0; --k) {
            long long x = base(rng), y = base(rng);
            tgt.push_back({Rational(x), Rational(y)});
            src.push_back({Rational(x + shift(rng)), Rational(y + shift(rng))});
        }
        std::shuffle(src.begin(), src.end(), rng);
        // brute-force feasibility of a perfect matching with the edge rule
        std::vector<std::size_t> perm(src.size());
        std::iota(perm.begin(), perm.end(), 0);
        bool ok = false;
        do {
            bool all = true;
            for (std::size_t i = 0; i < src.size() && all; ++i) {
                const auto& b = src[i];
                const auto& bp = tgt[perm[i]];
                all = bp.first <= b.first && b.first <= bp.first + Rational(eps) &&
                      bp.second <= b.second && b.second <= bp.second + Rational(eps);
            }
            ok = ok || all;
        } while (!ok && std::next_permutation(perm.begin(), perm.end()));
        CHECK(ok);
    }
}

TEST_CASE("free bottleneck examples") {
    CHECK(free_bottleneck(gens({{0, 0}}), gens({{1, 1}})) == Ext(Rational(1)));
    CHECK(free_bottleneck(gens({{0, 0}}), {}) == Ext::pos_inf());
    CHECK(free_bottleneck(gens({{0, 0}, {0, 0}}), gens({{0, 1}, {1, 0}})) == Ext(Rational(1)));
    CHECK(free_bottleneck({}, {}) == Ext(Rational(0)));
}

TEST_CASE("free bottleneck agrees with assignment brute force") {
    std::mt19937_64 rng(127);
    std::uniform_int_distribution<std::size_t> cnt(0, 7);
    for (int t = 0; t < 40; ++t) {
        GeneratorMultiset a, b;
        std::size_t n = cnt(rng);
        std::size_t m = t % 5 == 0 ? n + 1 : n;  // sometimes unequal sizes
        for (std::size_t i = 0; i < n; ++i) a.push_back({rand_rational(rng, -4, 4), rand_rational(rng, -4, 4)});
        for (std::size_t i = 0; i < m; ++i) b.push_back({rand_rational(rng, -4, 4), rand_rational(rng, -4, 4)});
        Ext fast = free_bottleneck(a, b);
        CHECK(fast == brute_free_bottleneck(a, b));
        CHECK(free_bottleneck(b, a) == fast);
    }
}
