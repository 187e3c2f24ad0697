#include "lrc/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace lrc {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t s = a ^ (0x9e3779b97f4a7c15ull + (b << 1));
    splitmix64(s);
    uint64_t t = s ^ b;
    return splitmix64(t);
}

Int igcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

IVec ivec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec ivec_neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IVec ivec_scale(const IVec& a, Int c) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Int ivec_dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool ivec_is_zero(const IVec& a) {
    for (Int x : a)
        if (x) return false;
    return true;
}

Int ivec_content(const IVec& a) {
    Int g = 0;
    for (Int x : a) g = igcd(g, x);
    return g;
}

IVec ivec_primitive(const IVec& a) {
    Int g = ivec_content(a);
    if (g <= 1) return a;
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

std::string ivec_str(const IVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

IMat imat_identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), mm = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(mm, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            Int aij = a[i][j];
            if (!aij) continue;
            for (size_t l = 0; l < mm; ++l) r[i][l] += aij * b[j][l];
        }
    return r;
}

IVec imat_apply(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = ivec_dot(m[i], v);
    return r;
}

IMat imat_transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat r(m[0].size(), IVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

QVec qvec_from(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = QQ((long)v[i]);
    return r;
}

QMat qmat_from(const IMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = qvec_from(m[i]);
    return r;
}

int qmat_rank(QMat m) {
    int rows = (int)m.size();
    if (!rows) return 0;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            QQ f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), mm = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(mm, QQ(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (sgn(a[i][j]) == 0) continue;
            for (size_t l = 0; l < mm; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
    QVec r(m.size(), QQ(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (sgn(m[i][j])) r[i] += m[i][j] * v[j];
    return r;
}

QMat qmat_transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat r(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

QMat qmat_inverse(const QMat& m) {
    int n = (int)m.size();
    QMat a = m;
    QMat inv(n, QVec(n, QQ(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (sgn(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) throw DimensionError("qmat_inverse: singular");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        QQ p = a[c][c];
        for (int cc = 0; cc < n; ++cc) {
            a[c][cc] /= p;
            inv[c][cc] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            QQ f = a[r][c];
            for (int cc = 0; cc < n; ++cc) {
                a[r][cc] -= f * a[c][cc];
                inv[r][cc] -= f * inv[c][cc];
            }
        }
    }
    return inv;
}

std::vector<QVec> qmat_kernel(const QMat& m) {
    if (m.empty()) return {};
    int rows = (int)m.size(), cols = (int)m[0].size();
    QMat a = m;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        QQ p = a[rank][c];
        for (int cc = 0; cc < cols; ++cc) a[rank][cc] /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][c]) == 0) continue;
            QQ f = a[r][c];
            for (int cc = 0; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec x(cols, QQ(0));
        x[c] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][c];
        basis.push_back(x);
    }
    return basis;
}

IVec qvec_primitive_int(const QVec& v) {
    ZZ l(1);
    for (const QQ& q : v) {
        ZZ d = q.get_den();
        l = l / gcd(l, d) * d;
    }
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        QQ s = v[i] * QQ(l);
        z[i] = s.get_num();
    }
    z = zvec_primitive(z);
    return zvec_to_ivec(z);
}

ZVec zvec_from(const IVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = ZZ((long)v[i]);
    return r;
}

IVec zvec_to_ivec(const ZVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) throw DimensionError("zvec_to_ivec: entry too large");
        r[i] = v[i].get_si();
    }
    return r;
}

ZZ zvec_content(const ZVec& v) {
    ZZ g(0);
    for (const ZZ& x : v) g = gcd(g, x);
    return g;
}

ZVec zvec_primitive(const ZVec& v) {
    ZZ g = zvec_content(v);
    if (g == 0 || g == 1) return v;
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

ZZ zvec_dot(const ZVec& a, const ZVec& b) {
    ZZ s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ZMat zmat_from(const IMat& m) {
    ZMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = zvec_from(m[i]);
    return r;
}

static ZMat zmat_identity(int n) {
    ZMat m(n, ZVec(n, ZZ(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

SmithResult smith_normal_form(const ZMat& M) {
    int rows = (int)M.size();
    int cols = rows ? (int)M[0].size() : 0;
    SmithResult res;
    res.D = M;
    res.U = zmat_identity(rows);
    res.V = zmat_identity(cols);
    ZMat& D = res.D;
    ZMat& U = res.U;
    ZMat& V = res.V;

    auto swap_rows = [&](int a, int b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](int a, int b) {
        for (int r = 0; r < rows; ++r) std::swap(D[r][a], D[r][b]);
        for (int r = 0; r < cols; ++r) std::swap(V[r][a], V[r][b]);
    };
    auto add_row = [&](int dst, int src, const ZZ& f) {  // row dst += f*row src
        for (int c = 0; c < cols; ++c) D[dst][c] += f * D[src][c];
        for (int c = 0; c < rows; ++c) U[dst][c] += f * U[src][c];
    };
    auto add_col = [&](int dst, int src, const ZZ& f) {
        for (int r = 0; r < rows; ++r) D[r][dst] += f * D[r][src];
        for (int r = 0; r < cols; ++r) V[r][dst] += f * V[r][src];
    };
    auto negate_row = [&](int r) {
        for (int c = 0; c < cols; ++c) D[r][c] = -D[r][c];
        for (int c = 0; c < rows; ++c) U[r][c] = -U[r][c];
    };

    int n = std::min(rows, cols);

    // diagonalize the trailing block starting at position t
    auto diagonalize_from = [&](int t0) {
        for (int t = t0; t < n; ++t) {
            int pr = -1, pc = -1;
            ZZ best(0);
            for (int r = t; r < rows; ++r)
                for (int c = t; c < cols; ++c) {
                    if (D[r][c] == 0) continue;
                    ZZ a = abs(D[r][c]);
                    if (pr < 0 || a < best) {
                        best = a;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) return;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int r = t + 1; r < rows; ++r) {
                    if (D[r][t] == 0) continue;
                    ZZ q = D[r][t] / D[t][t];
                    if (q != 0) add_row(r, t, -q);
                    if (D[r][t] != 0) {  // remainder strictly smaller: promote it
                        swap_rows(t, r);
                        dirty = true;
                    }
                }
                for (int c = t + 1; c < cols; ++c) {
                    if (D[t][c] == 0) continue;
                    ZZ q = D[t][c] / D[t][t];
                    if (q != 0) add_col(c, t, -q);
                    if (D[t][c] != 0) {
                        swap_cols(t, c);
                        dirty = true;
                    }
                }
            }
            if (D[t][t] < 0) negate_row(t);
        }
    };

    diagonalize_from(0);
    // divisibility chain: fold offending entries back and re-diagonalize
    bool fixed = true;
    while (fixed) {
        fixed = false;
        for (int t = 0; t + 1 < n; ++t) {
            if (D[t][t] == 0) continue;
            if (D[t + 1][t + 1] % D[t][t] == 0) continue;
            add_col(t, t + 1, ZZ(1));
            diagonalize_from(t);
            fixed = true;
            break;
        }
    }
    return res;
}

ZMat zmat_kernel(const ZMat& M) {
    if (M.empty()) return {};
    int cols = (int)M[0].size();
    SmithResult s = smith_normal_form(M);
    int n = std::min((int)M.size(), cols);
    ZMat basis;
    for (int j = 0; j < cols; ++j) {
        bool zero_diag = j >= n || s.D[j][j] == 0;
        if (!zero_diag) continue;
        ZVec col(cols);
        for (int r = 0; r < cols; ++r) col[r] = s.V[r][j];
        basis.push_back(col);
    }
    return basis;
}

ZMat lattice_row_basis(const ZMat& generators, int cols) {
    // Hermite-style row reduction (deterministic, exact).
    ZMat rows = generators;
    ZMat basis;
    int pivot_col = 0;
    size_t start = 0;
    while (pivot_col < cols) {
        // gather rows with nonzero entry at pivot_col, reduce them together
        int found = -1;
        for (size_t r = start; r < rows.size(); ++r)
            if (rows[r][pivot_col] != 0) {
                found = (int)r;
                break;
            }
        if (found < 0) {
            ++pivot_col;
            continue;
        }
        std::swap(rows[start], rows[found]);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t r = start + 1; r < rows.size(); ++r) {
                if (rows[r][pivot_col] == 0) continue;
                if (abs(rows[r][pivot_col]) < abs(rows[start][pivot_col]))
                    std::swap(rows[start], rows[r]);
                ZZ q = rows[r][pivot_col] / rows[start][pivot_col];
                if (q != 0) {
                    for (int c = 0; c < cols; ++c) rows[r][c] -= q * rows[start][c];
                }
                if (rows[r][pivot_col] != 0) changed = true;
            }
        }
        if (rows[start][pivot_col] < 0)
            for (int c = 0; c < cols; ++c) rows[start][c] = -rows[start][c];
        basis.push_back(rows[start]);
        ++start;
        ++pivot_col;
    }
    // reduce entries above pivots for a canonical form
    for (int i = (int)basis.size() - 1; i >= 0; --i) {
        int pc = 0;
        while (pc < cols && basis[i][pc] == 0) ++pc;
        if (pc >= cols) continue;
        for (int j = 0; j < i; ++j) {
            ZZ q = basis[j][pc];
            // floor division reduction
            ZZ f;
            mpz_fdiv_q(f.get_mpz_t(), q.get_mpz_t(), basis[i][pc].get_mpz_t());
            if (f != 0)
                for (int c = 0; c < cols; ++c) basis[j][c] -= f * basis[i][c];
        }
    }
    return basis;
}

ZZ zmat_abs_det(ZMat m) {
    int n = (int)m.size();
    if (n == 0) return ZZ(1);
    // Bareiss fraction-free elimination
    ZZ prev(1);
    ZZ sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return ZZ(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return abs(m[n - 1][n - 1]);
}

std::string matrix_to_text(const ZMat& m) {
    std::ostringstream os;
    size_t cols = m.empty() ? 0 : m[0].size();
    os << m.size() << " " << cols << "\n";
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j].get_str();
        }
        os << "\n";
    }
    return os.str();
}

ZMat matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    size_t rows, cols;
    if (!(is >> rows >> cols)) throw DimensionError("matrix_from_text: bad header");
    ZMat m(rows, ZVec(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw DimensionError("matrix_from_text: truncated");
            m[i][j] = ZZ(tok);
        }
    return m;
}

void matrix_write_file(const std::string& path, const ZMat& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << matrix_to_text(m);
}

ZMat matrix_read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return matrix_from_text(ss.str());
}

}  // namespace lrc
