#include "tda/grid2d.hpp"

#include <stdexcept>

#include "tda/matching_util.hpp"

namespace tda {

void GridModule2D::validate() const {
    if (!is_prime(field)) throw input_error("grid module field must be prime");
    if (window.x0 > window.x1 || window.y0 > window.y1)
        throw input_error("grid module window empty");
    std::size_t nx = window.nx(), ny = window.ny();
    if (dims.size() != nx * ny) throw input_error("grid module dims size mismatch");
    if (hmaps.size() != (nx - 1) * ny) throw input_error("grid module hmaps size mismatch");
    if (vmaps.size() != nx * (ny - 1)) throw input_error("grid module vmaps size mismatch");
    for (long long i = window.x0; i <= window.x1; ++i)
        for (long long j = window.y0; j <= window.y1; ++j) {
            if (i < window.x1) {
                const Matrix& h = hmap(i, j);
                if (h.field() != field || h.cols() != dim_at(i, j) ||
                    h.rows() != dim_at(i + 1, j))
                    throw input_error("grid module hmap shape mismatch");
            }
            if (j < window.y1) {
                const Matrix& v = vmap(i, j);
                if (v.field() != field || v.cols() != dim_at(i, j) ||
                    v.rows() != dim_at(i, j + 1))
                    throw input_error("grid module vmap shape mismatch");
            }
            if (i < window.x1 && j < window.y1 &&
                vmap(i + 1, j) * hmap(i, j) != hmap(i, j + 1) * vmap(i, j))
                throw input_error("grid module square does not commute");
        }
}

void GridMorphism2D::validate() const {
    source.validate();
    target.validate();
    if (!(source.window == target.window) || source.field != target.field)
        throw input_error("grid morphism window/field mismatch");
    std::size_t n = source.window.nx() * source.window.ny();
    if (components.size() != n) throw input_error("grid morphism component count");
    for (long long i = source.window.x0; i <= source.window.x1; ++i)
        for (long long j = source.window.y0; j <= source.window.y1; ++j) {
            const Matrix& c = components[source.idx(i, j)];
            if (c.field() != source.field || c.cols() != source.dim_at(i, j) ||
                c.rows() != target.dim_at(i, j))
                throw input_error("grid morphism component shape mismatch");
            if (i < source.window.x1 &&
                target.hmap(i, j) * c != components[source.idx(i + 1, j)] * source.hmap(i, j))
                throw input_error("grid morphism does not commute with horizontal maps");
            if (j < source.window.y1 &&
                target.vmap(i, j) * c != components[source.idx(i, j + 1)] * source.vmap(i, j))
                throw input_error("grid morphism does not commute with vertical maps");
        }
}

namespace {

std::vector<std::size_t> gens_below(const GeneratorMultiset& gens, long long x, long long y) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (gens[k].first <= Rational(x) && gens[k].second <= Rational(y)) out.push_back(k);
    return out;
}

Matrix gen_inclusion(const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt,
                     std::uint32_t p) {
    Matrix m(tgt.size(), src.size(), p);
    for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t r = 0; r < tgt.size(); ++r)
            if (tgt[r] == src[c]) m.at(r, c) = 1;
    return m;
}

}  // namespace

GridModule2D free_grid_module(const GeneratorMultiset& gens, const Window& w, std::uint32_t p) {
    for (const auto& g : gens)
        if (g.first.den() != 1 || g.second.den() != 1)
            throw input_error("free module generators must sit on the lattice");
    GridModule2D m;
    m.field = p;
    m.window = w;
    m.dims.resize(w.nx() * w.ny());
    m.hmaps.resize((w.nx() - 1) * w.ny(), Matrix(0, 0, p));
    m.vmaps.resize(w.nx() * (w.ny() - 1), Matrix(0, 0, p));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j) {
            auto here = gens_below(gens, i, j);
            m.dims[m.idx(i, j)] = here.size();
            if (i < w.x1) m.hmaps[m.hidx(i, j)] = gen_inclusion(here, gens_below(gens, i + 1, j), p);
            if (j < w.y1) m.vmaps[m.vidx(i, j)] = gen_inclusion(here, gens_below(gens, i, j + 1), p);
        }
    return m;
}

std::size_t koszul_xi1(const GridModule2D& m, long long zx, long long zy) {
    if (!m.window.contains(zx, zy) || !m.window.contains(zx - 1, zy - 1))
        throw input_error("koszul point leaves the window");
    Matrix kappa = Matrix::vcat(-m.vmap(zx - 1, zy - 1), m.hmap(zx - 1, zy - 1));
    Matrix gamma = Matrix::hcat(m.hmap(zx - 1, zy), m.vmap(zx, zy - 1));
    if (!(gamma * kappa).is_zero()) throw std::logic_error("koszul composite nonzero");
    return (gamma.cols() - rank(gamma)) - rank(kappa);
}

namespace {

Submodule2D submodule_from_bases(const GridModule2D& ambient, std::vector<Matrix> bases) {
    Submodule2D s;
    s.module.field = ambient.field;
    s.module.window = ambient.window;
    const Window& w = ambient.window;
    s.module.dims.resize(w.nx() * w.ny());
    s.module.hmaps.resize((w.nx() - 1) * w.ny(), Matrix(0, 0, ambient.field));
    s.module.vmaps.resize(w.nx() * (w.ny() - 1), Matrix(0, 0, ambient.field));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j)
            s.module.dims[ambient.idx(i, j)] = bases[ambient.idx(i, j)].cols();
    auto induced = [&](const Matrix& amb_map, const Matrix& src_b, const Matrix& tgt_b) {
        auto x = solve(tgt_b, amb_map * src_b);
        if (!x) throw std::logic_error("subspace family not closed under the maps");
        return *x;
    };
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j) {
            if (i < w.x1)
                s.module.hmaps[ambient.hidx(i, j)] =
                    induced(ambient.hmap(i, j), bases[ambient.idx(i, j)],
                            bases[ambient.idx(i + 1, j)]);
            if (j < w.y1)
                s.module.vmaps[ambient.vidx(i, j)] =
                    induced(ambient.vmap(i, j), bases[ambient.idx(i, j)],
                            bases[ambient.idx(i, j + 1)]);
        }
    s.basis = std::move(bases);
    return s;
}

}  // namespace

Submodule2D image_submodule(const GridMorphism2D& f) {
    f.validate();
    std::vector<Matrix> bases;
    for (const Matrix& c : f.components) bases.push_back(column_basis(c));
    return submodule_from_bases(f.target, std::move(bases));
}

Submodule2D interpolant(const GridMorphism2D& f, std::size_t eps) {
    f.validate();
    const GridModule2D& n = f.target;
    const Window& w = n.window;
    std::vector<Matrix> bases(w.nx() * w.ny(), Matrix(0, 0, n.field));
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j) {
            long long t = i + (long long)eps;
            if (t > w.x1) t = w.x1;  // shift clamped at the window edge
            Matrix comp = Matrix::identity(n.dim_at(i, j), n.field);
            for (long long s = i; s < t; ++s) comp = n.hmap(s, j) * comp;
            Matrix proj = quotient_projection(f.components[n.idx(t, j)], n.dim_at(t, j), n.field);
            bases[n.idx(i, j)] = kernel_basis(proj * comp);
        }
    return submodule_from_bases(n, std::move(bases));
}

GridMorphism2D inclusion_morphism(const Submodule2D& sub, const GridModule2D& ambient) {
    GridMorphism2D f;
    f.source = sub.module;
    f.target = ambient;
    f.components = sub.basis;
    return f;
}

GridMorphism2D submodule_inclusion(const Submodule2D& inner, const Submodule2D& outer) {
    GridMorphism2D f;
    f.source = inner.module;
    f.target = outer.module;
    for (std::size_t k = 0; k < inner.basis.size(); ++k) {
        auto x = solve(outer.basis[k], inner.basis[k]);
        if (!x) throw std::logic_error("claimed submodule containment fails");
        f.components.push_back(*x);
    }
    return f;
}

Ext directional_coker_triviality(const GridMorphism2D& f, int axis) {
    f.validate();
    const GridModule2D& n = f.target;
    const Window& w = n.window;
    std::vector<Matrix> proj;
    for (long long i = w.x0; i <= w.x1; ++i)
        for (long long j = w.y0; j <= w.y1; ++j)
            proj.push_back(quotient_projection(f.components[n.idx(i, j)], n.dim_at(i, j),
                                               n.field));
    long long maxk = axis == 0 ? w.x1 - w.x0 : w.y1 - w.y0;
    for (long long k = 0; k <= maxk; ++k) {
        bool all_zero = true;
        for (long long i = w.x0; i <= w.x1 && all_zero; ++i)
            for (long long j = w.y0; j <= w.y1 && all_zero; ++j) {
                long long ti = axis == 0 ? i + k : i;
                long long tj = axis == 0 ? j : j + k;
                if (!w.contains(ti, tj)) continue;
                Matrix comp = Matrix::identity(n.dim_at(i, j), n.field);
                for (long long s = 0; s < k; ++s)
                    comp = (axis == 0 ? n.hmap(i + s, j) : n.vmap(i, j + s)) * comp;
                if (!(proj[n.idx(ti, tj)] * comp).is_zero()) all_zero = false;
            }
        if (all_zero) return Ext(Rational(k));
    }
    return Ext::pos_inf();
}

Ext free_bottleneck(const GeneratorMultiset& a, const GeneratorMultiset& b) {
    if (a.size() != b.size()) return Ext::pos_inf();
    std::size_t n = a.size();
    if (n == 0) return Ext(0);
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    std::vector<Rational> cands;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational dx = (a[i].first - b[j].first).abs();
            Rational dy = (a[i].second - b[j].second).abs();
            dist[i][j] = dx < dy ? dy : dx;
            cands.push_back(dist[i][j]);
        }
    auto feasible = [&](const Ext& eps) {
        std::vector<std::vector<std::size_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le_limit(Ext(dist[i][j]), eps)) adj[i].push_back(j);
        return has_perfect_matching(adj, n);
    };
    return infimum_over_candidates(std::move(cands), feasible);
}

}  // namespace tda
