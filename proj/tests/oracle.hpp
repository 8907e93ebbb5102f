// Brute-force cross-check engine, independent of the folcoh library.
//
// Everything here is deliberately primitive: monomials are bitmasks, forms are
// dense coefficient vectors, operators are dense matrices built by expanding
// the Leibniz rule term by term, and every dimension is a rank or nullity of a
// dense matrix under naive Gauss-Jordan elimination. Test files compare the
// engine's answers against these.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

struct QC {
    mpq_class re, im;
    QC() : re(0), im(0) {}
    QC(long r) : re(r), im(0) {}
    QC(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    static QC imag(long i) { return QC(mpq_class(0), mpq_class(i)); }
    bool zero() const { return re == 0 && im == 0; }
    QC operator+(const QC& o) const { return QC(re + o.re, im + o.im); }
    QC operator-(const QC& o) const { return QC(re - o.re, im - o.im); }
    QC operator*(const QC& o) const {
        return QC(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    QC operator/(const QC& o) const {
        mpq_class n = o.re * o.re + o.im * o.im;
        return QC((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }
    QC operator-() const { return QC(-re, -im); }
};

using Mask = uint32_t;
using Matrix = std::vector<std::vector<QC>>;

inline int popcount_below(Mask m, int bit) {
    return __builtin_popcount(m & ((1u << bit) - 1u));
}

struct Term {
    QC coef;
    Mask mask;
};

// One generator's derivation image as a list of terms.
using GenImage = std::vector<Term>;

struct Algebra {
    int n_gens = 0;
    std::vector<GenImage> d;  // d on each generator
};

// All monomials of the given cardinality, ascending as integers.
inline std::vector<Mask> degree_basis(int n_gens, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (1u << n_gens); ++m) {
        if (__builtin_popcount(m) == k) out.push_back(m);
    }
    return out;
}

inline int index_in(const std::vector<Mask>& basis, Mask m) {
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == m) return static_cast<int>(i);
    }
    return -1;
}

// d applied to a single monomial: sum over factors, Koszul sign from the
// factors passed, then the image wedged back in with insertion signs.
inline std::vector<Term> apply_d(const Algebra& alg, Mask mono) {
    std::vector<Term> out;
    for (int j = 0; j < alg.n_gens; ++j) {
        if (!(mono & (1u << j))) continue;
        int lead_sign = (popcount_below(mono, j) % 2 == 0) ? 1 : -1;
        Mask rest = mono & ~(1u << j);
        for (const Term& t : alg.d[static_cast<size_t>(j)]) {
            if (t.mask & rest) continue;  // repeated factor
            // Sign of interleaving t.mask into rest, factor by factor. The
            // loop sorts (image, rest); moving the image block from the far
            // left into the j-th slot costs |image| * |below| transpositions.
            int sign = lead_sign;
            if ((__builtin_popcount(t.mask) * popcount_below(mono, j)) % 2 != 0) sign = -sign;
            Mask placed = rest;
            for (int b = alg.n_gens - 1; b >= 0; --b) {
                if (!(t.mask & (1u << b))) continue;
                if (popcount_below(placed, b) % 2 != 0) sign = -sign;
                placed |= (1u << b);
            }
            out.push_back({sign > 0 ? t.coef : -t.coef, placed});
        }
    }
    return out;
}

// Dense matrix of d from degree k to k+1.
inline Matrix d_matrix(const Algebra& alg, const std::vector<Mask>& from,
                       const std::vector<Mask>& to) {
    Matrix m(to.size(), std::vector<QC>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
        for (const Term& t : apply_d(alg, from[c])) {
            int r = index_in(to, t.mask);
            if (r >= 0) m[static_cast<size_t>(r)][c] = m[static_cast<size_t>(r)][c] + t.coef;
        }
    }
    return m;
}

inline int row_reduce(Matrix& m) {
    int rank = 0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col].zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        QC inv = QC(1) / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].zero()) continue;
            QC f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int rank(Matrix m) { return row_reduce(m); }

inline size_t cols_of(const Matrix& m) { return m.empty() ? 0 : m[0].size(); }

inline int nullity(const Matrix& m, size_t cols) {
    Matrix copy = m;
    return static_cast<int>(cols) - row_reduce(copy);
}

// Kernel basis as columns stacked into rows (one vector per row).
inline Matrix kernel_basis(Matrix m, size_t cols) {
    size_t rows = m.size();
    std::vector<int> pivot_of_col(cols, -1);
    {
        int r = 0;
        Matrix& mm = m;
        size_t row = 0;
        for (size_t col = 0; col < cols && row < rows; ++col) {
            size_t pivot = row;
            while (pivot < rows && mm[pivot][col].zero()) ++pivot;
            if (pivot == rows) continue;
            std::swap(mm[pivot], mm[row]);
            QC inv = QC(1) / mm[row][col];
            for (size_t c = col; c < cols; ++c) mm[row][c] = mm[row][c] * inv;
            for (size_t rr = 0; rr < rows; ++rr) {
                if (rr == row || mm[rr][col].zero()) continue;
                QC f = mm[rr][col];
                for (size_t c = col; c < cols; ++c) mm[rr][c] = mm[rr][c] - f * mm[row][c];
            }
            pivot_of_col[col] = r;
            ++row;
            ++r;
        }
    }
    Matrix basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<QC> v(cols);
        v[free_col] = QC(1);
        for (size_t col = 0; col < cols; ++col) {
            if (pivot_of_col[col] >= 0 && col < free_col) {
                v[col] = -m[static_cast<size_t>(pivot_of_col[col])][free_col];
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    size_t rows = a.size();
    size_t inner = b.size();
    size_t colsb = cols_of(b);
    Matrix out(rows, std::vector<QC>(colsb));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t k = 0; k < inner; ++k) {
            if (a[r][k].zero()) continue;
            for (size_t c = 0; c < colsb; ++c) {
                out[r][c] = out[r][c] + a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Matrix out = a;
    for (size_t r = 0; r < out.size(); ++r) {
        out[r].insert(out[r].end(), b[r].begin(), b[r].end());
    }
    return out;
}

inline Matrix transpose(const Matrix& m) {
    size_t rows = m.size();
    size_t cols = cols_of(m);
    Matrix out(cols, std::vector<QC>(rows));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) out[c][r] = m[r][c];
    }
    return out;
}

// ---- bundled model data, entered by hand from the structure equations ----

// s6: generators 0=b1, 1=b2, 2=b1bar, 3=b2bar; types (1,0),(1,0),(0,1),(0,1).
inline Algebra s6_algebra() {
    Algebra alg;
    alg.n_gens = 4;
    alg.d.resize(4);
    alg.d[0] = {{QC::imag(1), 0b0011}, {QC::imag(1), 0b1001}};
    alg.d[1] = {{QC::imag(-1), 0b0101}};
    alg.d[2] = {{QC::imag(1), 0b0110}, {QC::imag(-1), 0b1100}};
    alg.d[3] = {{QC::imag(-1), 0b0101}};
    return alg;
}

inline int s6_gen_p(int g) { return g < 2 ? 1 : 0; }

inline void s6_monomial_type(Mask m, int* p, int* q) {
    *p = 0;
    *q = 0;
    for (int g = 0; g < 4; ++g) {
        if (m & (1u << g)) (s6_gen_p(g) ? *p : *q) += 1;
    }
}

inline std::vector<Mask> s6_bidegree_basis(int p, int q) {
    std::vector<Mask> out;
    for (Mask m = 0; m < 16; ++m) {
        int mp, mq;
        s6_monomial_type(m, &mp, &mq);
        if (mp == p && mq == q) out.push_back(m);
    }
    return out;
}

// Component of d landing in a fixed target bidegree.
inline Matrix s6_component(const std::vector<Mask>& from, int tp, int tq) {
    Algebra alg = s6_algebra();
    std::vector<Mask> to = s6_bidegree_basis(tp, tq);
    Matrix m(to.size(), std::vector<QC>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
        for (const Term& t : apply_d(alg, from[c])) {
            int r = index_in(to, t.mask);
            if (r >= 0) m[static_cast<size_t>(r)][c] = m[static_cast<size_t>(r)][c] + t.coef;
        }
    }
    return m;
}

inline Matrix s6_del(int p, int q) { return s6_component(s6_bidegree_basis(p, q), p + 1, q); }
inline Matrix s6_dbar(int p, int q) { return s6_component(s6_bidegree_basis(p, q), p, q + 1); }

inline int s6_h_dolbeault(int p, int q) {
    auto basis = s6_bidegree_basis(p, q);
    int ker = nullity(s6_dbar(p, q), basis.size());
    int im = (q == 0) ? 0 : rank(s6_dbar(p, q - 1));
    return ker - im;
}

inline int s6_h_dolbeault_conj(int p, int q) {
    auto basis = s6_bidegree_basis(p, q);
    int ker = nullity(s6_del(p, q), basis.size());
    int im = (p == 0) ? 0 : rank(s6_del(p - 1, q));
    return ker - im;
}

inline int s6_h_bc(int p, int q) {
    auto basis = s6_bidegree_basis(p, q);
    int ker_both = nullity(vstack(s6_del(p, q), s6_dbar(p, q)), basis.size());
    int im = 0;
    if (p > 0 && q > 0) {
        im = rank(multiply(s6_del(p - 1, q), s6_dbar(p - 1, q - 1)));
    }
    return ker_both - im;
}

inline int s6_h_aeppli(int p, int q) {
    auto basis = s6_bidegree_basis(p, q);
    int ker = nullity(multiply(s6_del(p, q + 1), s6_dbar(p, q)), basis.size());
    Matrix images;
    if (p > 0) images = hstack(images, s6_del(p - 1, q));
    if (q > 0) images = hstack(images, s6_dbar(p, q - 1));
    int im = images.empty() ? 0 : rank(images);
    return ker - im;
}

inline std::vector<int> s6_de_rham() {
    Algebra alg = s6_algebra();
    std::vector<int> dims;
    for (int k = 0; k <= 4; ++k) {
        auto from = degree_basis(4, k);
        auto to = degree_basis(4, k + 1);
        int ker = nullity(d_matrix(alg, from, to), from.size());
        int im = 0;
        if (k > 0) im = rank(d_matrix(alg, degree_basis(4, k - 1), from));
        dims.push_back(ker - im);
    }
    return dims;
}

// hopf family: generators 0=gamma, 1..4=alpha1..alpha4; iota(gamma)=s,
// iota(alpha3)=1-s.
inline Algebra hopf_algebra() {
    Algebra alg;
    alg.n_gens = 5;
    alg.d.resize(5);
    alg.d[1] = {{QC(-2), 0b01100}};
    alg.d[2] = {{QC(2), 0b01010}};
    alg.d[3] = {{QC(-2), 0b00110}};
    return alg;
}

// Contraction matrix from degree k to k-1 at parameter value s.
inline Matrix hopf_iota_matrix(const mpq_class& s, const std::vector<Mask>& from,
                               const std::vector<Mask>& to) {
    std::vector<QC> iota(5);
    iota[0] = QC(s, mpq_class(0));
    iota[3] = QC(mpq_class(1) - s, mpq_class(0));
    Matrix m(to.size(), std::vector<QC>(from.size()));
    for (size_t c = 0; c < from.size(); ++c) {
        for (int j = 0; j < 5; ++j) {
            if (!(from[c] & (1u << j)) || iota[static_cast<size_t>(j)].zero()) continue;
            int sign = (popcount_below(from[c], j) % 2 == 0) ? 1 : -1;
            Mask rest = from[c] & ~(1u << j);
            int r = index_in(to, rest);
            if (r >= 0) {
                QC v = sign > 0 ? iota[static_cast<size_t>(j)] : -iota[static_cast<size_t>(j)];
                m[static_cast<size_t>(r)][c] = m[static_cast<size_t>(r)][c] + v;
            }
        }
    }
    return m;
}

// Basic subspace in degree k: kernel of [iota; iota(d .)] stacked, as rows.
inline Matrix hopf_basic_basis(const mpq_class& s, int k) {
    Algebra alg = hopf_algebra();
    auto basis_k = degree_basis(5, k);
    auto basis_km1 = k > 0 ? degree_basis(5, k - 1) : std::vector<Mask>{};
    auto basis_kp1 = k < 5 ? degree_basis(5, k + 1) : std::vector<Mask>{};
    Matrix stacked = hopf_iota_matrix(s, basis_k, basis_km1);
    if (!basis_kp1.empty()) {
        Matrix d_k = d_matrix(alg, basis_k, basis_kp1);
        stacked = vstack(stacked, multiply(hopf_iota_matrix(s, basis_kp1, basis_k), d_k));
    }
    if (stacked.empty()) stacked = Matrix(1, std::vector<QC>(basis_k.size()));
    return kernel_basis(stacked, basis_k.size());
}

inline std::vector<int> hopf_basic_dims(const mpq_class& s) {
    std::vector<int> out;
    for (int k = 0; k <= 5; ++k) out.push_back(static_cast<int>(hopf_basic_basis(s, k).size()));
    return out;
}

// Basic cohomology dims at parameter s, computed from restricted ranks.
inline std::vector<int> hopf_basic_cohomology(const mpq_class& s) {
    Algebra alg = hopf_algebra();
    std::vector<int> out;
    std::vector<Matrix> bases;
    for (int k = 0; k <= 5; ++k) bases.push_back(hopf_basic_basis(s, k));
    for (int k = 0; k <= 4; ++k) {
        auto from = degree_basis(5, k);
        auto to = degree_basis(5, k + 1);
        Matrix dk = d_matrix(alg, from, to);
        Matrix d_on_basic = multiply(dk, transpose(bases[static_cast<size_t>(k)]));
        int ker = static_cast<int>(bases[static_cast<size_t>(k)].size()) -
                  rank(d_on_basic);
        int im = 0;
        if (k > 0) {
            auto prev = degree_basis(5, k - 1);
            Matrix dkm1 = d_matrix(alg, prev, from);
            im = rank(multiply(dkm1, transpose(bases[static_cast<size_t>(k - 1)])));
        }
        out.push_back(ker - im);
    }
    return out;
}

}  // namespace oracle
