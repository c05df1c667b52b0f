#include "graphalg/ktheory.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace graphalg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

namespace {

// Working state of the reduction. Every elementary operation is mirrored on
// U (row ops) or V (column ops) so that s == u * m * v stays true throughout.
struct SnfWork {
    IntMatrix s, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[t] += k * row[src]
    void add_row(std::size_t t, std::size_t src, const mpz_class& k) {
        for (std::size_t j = 0; j < s.cols; ++j) s.at(t, j) += k * s.at(src, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(t, j) += k * u.at(src, j);
    }
    // col[t] += k * col[src]
    void add_col(std::size_t t, std::size_t src, const mpz_class& k) {
        for (std::size_t i = 0; i < s.rows; ++i) s.at(i, t) += k * s.at(i, src);
        for (std::size_t i = 0; i < v.rows; ++i) v.at(i, t) += k * v.at(i, src);
    }
    void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < s.cols; ++j) s.at(t, j) = -s.at(t, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
    }
};

// Nearest-integer quotient: the remainder a - q*b satisfies 2|a - q*b| <= |b|.
mpz_class round_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q = a / b;
    const mpz_class r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (sgn(r) == sgn(b)) ? 1 : -1;
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
    IntMatrix& s = w.s;

    std::size_t t = 0;
    while (t < m.rows && t < m.cols) {
        // Re-select the smallest-magnitude nonzero pivot in the trailing
        // submatrix before every sweep. Sweeping against a stale pivot lets
        // quotients — and with them every entry of s, u, v — blow up
        // geometrically; re-scanning keeps quotients small. The scan starts
        // at (t, t), so on ties an already-placed pivot stays put.
        std::size_t bi = t, bj = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                const mpz_class& x = s.at(i, j);
                if (x == 0) continue;
                if (!found || cmp(abs(x), abs(s.at(bi, bj))) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found) break;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);

        // One rounded-division sweep. Any surviving remainder is at most half
        // the pivot, so re-pivoting strictly shrinks the pivot: the sweeps at
        // a fixed t terminate after O(log |pivot|) rounds.
        bool dirty = false;
        for (std::size_t i = t + 1; i < m.rows; ++i) {
            if (s.at(i, t) == 0) continue;
            const mpz_class q = round_quotient(s.at(i, t), s.at(t, t));
            if (q != 0) w.add_row(i, t, -q);
            if (s.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < m.cols; ++j) {
            if (s.at(t, j) == 0) continue;
            const mpz_class q = round_quotient(s.at(t, j), s.at(t, t));
            if (q != 0) w.add_col(j, t, -q);
            if (s.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // Divisibility: fold one bad row into the (clean) pivot row; the next
        // sweep leaves a remainder there, which again shrinks the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m.rows && divisible; ++i)
            for (std::size_t j = t + 1; j < m.cols && divisible; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    w.add_row(t, i, 1);
                    divisible = false;
                }
        if (!divisible) continue;

        if (s.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    if (matmul(matmul(w.u, m), w.v) != s)
        throw std::logic_error("smith_normal_form: U*M*V != S");
    for (std::size_t i = 0; i + 1 < t; ++i)
        if (s.at(i + 1, i + 1) % s.at(i, i) != 0)
            throw std::logic_error("smith_normal_form: divisibility chain broken");

    return {std::move(w.s), std::move(w.u), std::move(w.v), t};
}

std::string group_str(const AbelianGroupPresentation& g) {
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (g.free_rank == 1) append("Z");
    if (g.free_rank > 1) append("Z^" + std::to_string(g.free_rank));
    for (const auto& d : g.invariant_factors) append("Z/" + d.get_str());
    return out.empty() ? "0" : out;
}

IntMatrix delta_matrix(const Graph& g) {
    const auto cls = classify_vertices(g);
    IntMatrix m(g.num_vertices(), cls.rg.size());
    for (std::size_t j = 0; j < cls.rg.size(); ++j) {
        const std::string& v = cls.rg[j];
        m.at(g.vertex_index(v), j) += 1;
        for (const auto& e : g.edges())
            if (e.ran == v)
                m.at(g.vertex_index(e.dom), j) -=
                    mpz_class(static_cast<unsigned long>(e.mult.count()));
    }
    return m;
}

KGroups k_groups(const Graph& g) {
    const IntMatrix d = delta_matrix(g);
    const SnfResult snf = smith_normal_form(d);

    KGroups out;
    out.k0.free_rank = d.rows - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.s.at(i, i) > 1) out.k0.invariant_factors.push_back(snf.s.at(i, i));
    out.k1.free_rank = d.cols - snf.rank;
    for (std::size_t j = snf.rank; j < d.cols; ++j) {
        std::vector<mpz_class> col(d.cols);
        for (std::size_t i = 0; i < d.cols; ++i) col[i] = snf.v.at(i, j);
        out.k1_basis.push_back(std::move(col));
    }
    return out;
}

}  // namespace graphalg
