#pragma once
// Persistence modules on a finite integer 2-D grid: free modules on a
// generator multiset, the Koszul-complex freeness obstruction, the
// interpolant submodule L^eps(f), directional cokernel triviality and the
// bottleneck distance between free modules via their generators.

#include <cstdint>
#include <utility>
#include <vector>

#include "tda/linalg.hpp"
#include "tda/rational.hpp"

namespace tda {

struct Window {
    long long x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive

    bool operator==(const Window& o) const {
        return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
    }
    bool contains(long long x, long long y) const {
        return x0 <= x && x <= x1 && y0 <= y && y <= y1;
    }
    std::size_t nx() const { return std::size_t(x1 - x0 + 1); }
    std::size_t ny() const { return std::size_t(y1 - y0 + 1); }
};

struct GridModule2D {
    std::uint32_t field = 2;
    Window window;
    std::vector<std::size_t> dims;  // indexed by point, see idx()
    std::vector<Matrix> hmaps;      // (i,j) -> (i+1,j), i < x1
    std::vector<Matrix> vmaps;      // (i,j) -> (i,j+1), j < y1

    std::size_t idx(long long i, long long j) const {
        return std::size_t(i - window.x0) * window.ny() + std::size_t(j - window.y0);
    }
    std::size_t hidx(long long i, long long j) const {
        return std::size_t(i - window.x0) * window.ny() + std::size_t(j - window.y0);
    }
    std::size_t vidx(long long i, long long j) const {
        return std::size_t(i - window.x0) * (window.ny() - 1) + std::size_t(j - window.y0);
    }
    std::size_t dim_at(long long i, long long j) const { return dims[idx(i, j)]; }
    const Matrix& hmap(long long i, long long j) const { return hmaps[hidx(i, j)]; }
    const Matrix& vmap(long long i, long long j) const { return vmaps[vidx(i, j)]; }

    void validate() const;  // shapes plus commuting unit squares
};

struct GridMorphism2D {
    GridModule2D source, target;     // equal windows
    std::vector<Matrix> components;  // per point, source -> target

    void validate() const;
};

// Multiset of generator positions; free_grid_module requires integer
// coordinates, free_bottleneck takes arbitrary rationals.
using GeneratorMultiset = std::vector<std::pair<Rational, Rational>>;

// Free module on the generators: dim at p counts generators <= p, maps are
// the coordinate inclusions.
GridModule2D free_grid_module(const GeneratorMultiset& gens, const Window& w, std::uint32_t p = 2);

// dim ker gamma_z - rank kappa_z for the Koszul maps
//   kappa: M_{z-e1-e2} -> M_{z-e1} + M_{z-e2},  m -> (-vstep m, hstep m)
//   gamma: M_{z-e1} + M_{z-e2} -> M_z,          (m1,m2) -> hstep m1 + vstep m2.
// Zero at every z exactly when M is free on the window.
std::size_t koszul_xi1(const GridModule2D& m, long long zx, long long zy);

// A submodule of an ambient grid module, carried as per-point coordinate
// bases (columns express submodule basis vectors in ambient coordinates).
struct Submodule2D {
    GridModule2D module;
    std::vector<Matrix> basis;
};

Submodule2D image_submodule(const GridMorphism2D& f);

// L^eps(f): the points of the target that land in im f after eps horizontal
// steps (clamped at the window edge).
Submodule2D interpolant(const GridMorphism2D& f, std::size_t eps);

// Inclusion of a submodule into its ambient module as a morphism.
GridMorphism2D inclusion_morphism(const Submodule2D& sub, const GridModule2D& ambient);

// Inclusion of a submodule into a larger submodule of the same ambient
// module, expressed in the larger one's coordinates.
GridMorphism2D submodule_inclusion(const Submodule2D& inner, const Submodule2D& outer);

// Smallest k with every in-window k-step composite coker f -> coker f zero;
// +inf if no such k fits in the window.  axis: 0 horizontal, 1 vertical.
Ext directional_coker_triviality(const GridMorphism2D& f, int axis);

// l-infinity minimax perfect assignment between the multisets; +inf when the
// cardinalities differ.
Ext free_bottleneck(const GeneratorMultiset& a, const GeneratorMultiset& b);

}  // namespace tda
