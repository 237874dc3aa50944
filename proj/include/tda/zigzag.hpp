#pragma once
// Finite zigzag modules over GF(p) and their decomposition into interval
// summands.  The decomposition computes, for every segment [p,q], the rank
// of the canonical map lim V|[p,q] -> colim V|[p,q]; interval multiplicities
// then follow by inclusion-exclusion.  For an interval summand the canonical
// map has rank 1 exactly when the bar covers the whole segment, so the rank
// counts bars containing [p,q].

#include <cstdint>
#include <vector>

#include "tda/linalg.hpp"

namespace tda {

enum class Dir { fwd, bwd };  // fwd: V_i -> V_{i+1}; bwd: V_{i+1} -> V_i

struct Arrow {
    Dir dir;
    Matrix map;
};

struct ZigzagModule {
    std::uint32_t field = 2;
    std::vector<std::size_t> dims;
    std::vector<Arrow> arrows;  // arrows[i] joins positions i+1 and i+2 (1-based)

    std::size_t n() const { return dims.size(); }
    void validate() const;
};

struct ZigzagInterval {
    std::size_t first, last;  // 1-based, inclusive

    bool operator==(const ZigzagInterval& o) const { return first == o.first && last == o.last; }
    bool operator<(const ZigzagInterval& o) const {
        return first != o.first ? first < o.first : last < o.last;
    }
};

using ZigzagBarcode = std::vector<ZigzagInterval>;

// Interval module I^J with the given ambient length and arrow directions.
ZigzagModule interval_module_zz(const ZigzagInterval& j, std::size_t n,
                                const std::vector<Dir>& orientation, std::uint32_t p = 2);

ZigzagModule direct_sum(const std::vector<ZigzagModule>& vs);

// Conjugate every position by a seeded random invertible matrix; the result
// is isomorphic to the input.  Used by construct-then-recover tests.
ZigzagModule shuffle_basis(const ZigzagModule& v, std::uint64_t seed);

std::size_t generalized_rank(const ZigzagModule& v, std::size_t p, std::size_t q);

ZigzagBarcode decompose_zz(const ZigzagModule& v);

// dim colim of a consecutive slice [first,last] of v (used by the block
// extension functor's pointwise evaluation).
std::size_t colim_dim_slice(const ZigzagModule& v, std::size_t first, std::size_t last);

}  // namespace tda
