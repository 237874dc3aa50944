#include "tda/zigzag.hpp"

#include <random>
#include <stdexcept>

namespace tda {

void ZigzagModule::validate() const {
    if (!is_prime(field)) throw input_error("zigzag field must be prime");
    if (!dims.empty() && arrows.size() != dims.size() - 1)
        throw input_error("zigzag needs one arrow per adjacent pair");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const Matrix& m = arrows[i].map;
        if (m.field() != field) throw input_error("zigzag arrow field mismatch");
        std::size_t src = arrows[i].dir == Dir::fwd ? dims[i] : dims[i + 1];
        std::size_t tgt = arrows[i].dir == Dir::fwd ? dims[i + 1] : dims[i];
        if (m.cols() != src || m.rows() != tgt)
            throw input_error("zigzag arrow shape mismatch at position " + std::to_string(i + 1));
    }
}

ZigzagModule interval_module_zz(const ZigzagInterval& j, std::size_t n,
                                const std::vector<Dir>& orientation, std::uint32_t p) {
    if (j.first < 1 || j.first > j.last || j.last > n)
        throw input_error("zigzag interval out of range");
    if (orientation.size() + 1 != n) throw input_error("orientation length mismatch");
    ZigzagModule v;
    v.field = p;
    v.dims.assign(n, 0);
    for (std::size_t i = j.first; i <= j.last; ++i) v.dims[i - 1] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t src = orientation[i] == Dir::fwd ? v.dims[i] : v.dims[i + 1];
        std::size_t tgt = orientation[i] == Dir::fwd ? v.dims[i + 1] : v.dims[i];
        Matrix m(tgt, src, p);
        if (src == 1 && tgt == 1 && i + 1 >= j.first && i + 1 < j.last) m.at(0, 0) = 1;
        v.arrows.push_back({orientation[i], m});
    }
    return v;
}

ZigzagModule direct_sum(const std::vector<ZigzagModule>& vs) {
    if (vs.empty()) throw input_error("direct_sum of empty list needs a declared shape");
    ZigzagModule out = vs[0];
    out.validate();
    for (std::size_t k = 1; k < vs.size(); ++k) {
        const ZigzagModule& v = vs[k];
        v.validate();
        if (v.field != out.field || v.n() != out.n())
            throw input_error("direct_sum shape/field mismatch");
        for (std::size_t i = 0; i + 1 < out.n(); ++i)
            if (v.arrows[i].dir != out.arrows[i].dir)
                throw input_error("direct_sum orientation mismatch");
        for (std::size_t i = 0; i < out.n(); ++i) out.dims[i] += v.dims[i];
        for (std::size_t i = 0; i + 1 < out.n(); ++i)
            out.arrows[i].map = Matrix::block_diag(out.arrows[i].map, v.arrows[i].map);
    }
    return out;
}

namespace {

Matrix random_invertible(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    Matrix g = Matrix::identity(n, p);
    if (n == 0) return g;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (std::size_t k = 0; k < 3 * n * n; ++k) {
        std::size_t i = row(rng), jj = row(rng);
        if (i == jj) continue;
        Fp c = coef(rng);
        for (std::size_t col = 0; col < n; ++col)
            g.at(jj, col) = (g.at(jj, col) + std::uint64_t(c) * g.at(i, col)) % p;
    }
    // A couple of swaps for good measure.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = row(rng), jj = row(rng);
        for (std::size_t col = 0; col < n; ++col) std::swap(g.at(i, col), g.at(jj, col));
    }
    return g;
}

Matrix inverse(const Matrix& g) {
    auto inv = solve(g, Matrix::identity(g.rows(), g.field()));
    if (!inv) throw std::logic_error("matrix expected invertible");
    return *inv;
}

}  // namespace

ZigzagModule shuffle_basis(const ZigzagModule& v, std::uint64_t seed) {
    v.validate();
    std::mt19937_64 rng(seed);
    std::vector<Matrix> g, ginv;
    for (std::size_t i = 0; i < v.n(); ++i) {
        g.push_back(random_invertible(v.dims[i], v.field, rng));
        ginv.push_back(inverse(g.back()));
    }
    ZigzagModule out = v;
    for (std::size_t i = 0; i + 1 < v.n(); ++i) {
        if (v.arrows[i].dir == Dir::fwd)
            out.arrows[i].map = g[i + 1] * v.arrows[i].map * ginv[i];
        else
            out.arrows[i].map = g[i] * v.arrows[i].map * ginv[i + 1];
    }
    return out;
}

namespace {

// Sweep state for a fixed left end p: a parametrization of lim V|[p,cur]
// (T_p, T_cur share parameter space) and a presentation of colim V|[p,cur]
// (S_p, S_cur land in the same quotient).  rank(S_p * T_p) is the rank of
// the canonical map lim -> colim.
struct SweepState {
    Matrix t_p, t_cur;  // dims[p] x r and dims[cur] x r
    Matrix s_p, s_cur;  // c x dims[p] and c x dims[cur]
};

void sweep_step(SweepState& st, const Arrow& ar, std::uint32_t /*p*/) {
    if (ar.dir == Dir::fwd) {
        const Matrix& m = ar.map;  // V_cur -> V_next
        st.t_cur = m * st.t_cur;
        // colim' = (C + V_next) / <inj_C(S_cur e) - inj_new(M e)>
        Matrix rel = Matrix::vcat(st.s_cur, -m);
        std::size_t c = st.s_cur.rows(), dn = m.rows();
        Matrix proj = quotient_projection(rel, c + dn, m.field());
        st.s_p = proj.submatrix(0, 0, proj.rows(), c) * st.s_p;
        st.s_cur = proj.submatrix(0, c, proj.rows(), dn);
    } else {
        const Matrix& m = ar.map;  // V_next -> V_cur
        // lim: pairs (lambda, y) with T_cur(lambda) = M y.
        Matrix k = kernel_basis(Matrix::hcat(st.t_cur, -m));
        std::size_t r = st.t_cur.cols(), dn = m.cols();
        st.t_p = st.t_p * k.submatrix(0, 0, r, k.cols());
        st.t_cur = k.submatrix(r, 0, dn, k.cols());
        st.s_cur = st.s_cur * m;
    }
}

// r(p,q) for all p <= q; r[p][q] is 1-based into a (n+2)^2 table padded with
// zeros so the inclusion-exclusion below needs no bounds checks.
std::vector<std::vector<std::size_t>> rank_table(const ZigzagModule& v) {
    std::size_t n = v.n();
    std::vector<std::vector<std::size_t>> r(n + 2, std::vector<std::size_t>(n + 2, 0));
    for (std::size_t p = 1; p <= n; ++p) {
        SweepState st;
        st.t_p = Matrix::identity(v.dims[p - 1], v.field);
        st.t_cur = st.t_p;
        st.s_p = st.t_p;
        st.s_cur = st.t_p;
        r[p][p] = v.dims[p - 1];
        for (std::size_t q = p + 1; q <= n; ++q) {
            sweep_step(st, v.arrows[q - 2], v.field);
            r[p][q] = rank(st.s_p * st.t_p);
        }
    }
    return r;
}

}  // namespace

std::size_t generalized_rank(const ZigzagModule& v, std::size_t p, std::size_t q) {
    v.validate();
    if (p < 1 || p > q || q > v.n()) throw input_error("generalized_rank positions out of range");
    SweepState st;
    st.t_p = Matrix::identity(v.dims[p - 1], v.field);
    st.t_cur = st.t_p;
    st.s_p = st.t_p;
    st.s_cur = st.t_p;
    for (std::size_t cur = p; cur < q; ++cur) sweep_step(st, v.arrows[cur - 1], v.field);
    return rank(st.s_p * st.t_p);
}

ZigzagBarcode decompose_zz(const ZigzagModule& v) {
    v.validate();
    std::size_t n = v.n();
    ZigzagBarcode bars;
    if (n == 0) return bars;
    auto r = rank_table(v);
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = p; q <= n; ++q) {
            long long m = (long long)r[p][q] - (long long)(p > 1 ? r[p - 1][q] : 0) -
                          (long long)(q < n ? r[p][q + 1] : 0) +
                          (long long)(p > 1 && q < n ? r[p - 1][q + 1] : 0);
            if (m < 0) throw std::logic_error("negative interval multiplicity");
            for (long long k = 0; k < m; ++k) bars.push_back({p, q});
        }
    return bars;
}

std::size_t colim_dim_slice(const ZigzagModule& v, std::size_t first, std::size_t last) {
    if (first < 1 || first > last || last > v.n()) throw input_error("colim slice out of range");
    std::size_t total = 0;
    std::vector<std::size_t> offset(last - first + 1, 0);
    for (std::size_t i = first; i <= last; ++i) {
        offset[i - first] = total;
        total += v.dims[i - 1];
    }
    std::size_t rel_cols = 0;
    for (std::size_t i = first; i < last; ++i)
        rel_cols += v.arrows[i - 1].dir == Dir::fwd ? v.dims[i - 1] : v.dims[i];
    Matrix rel(total, rel_cols, v.field);
    std::size_t col = 0;
    for (std::size_t i = first; i < last; ++i) {
        const Arrow& ar = v.arrows[i - 1];
        std::size_t src_pos = ar.dir == Dir::fwd ? i : i + 1;
        std::size_t tgt_pos = ar.dir == Dir::fwd ? i + 1 : i;
        std::size_t sdim = v.dims[src_pos - 1];
        for (std::size_t e = 0; e < sdim; ++e, ++col) {
            rel.at(offset[src_pos - first] + e, col) = 1;
            for (std::size_t t = 0; t < ar.map.rows(); ++t) {
                Fp val = ar.map.at(t, e);
                if (val) rel.at(offset[tgt_pos - first] + t, col) = v.field - val;
            }
        }
    }
    return total - rank(rel);
}

}  // namespace tda
