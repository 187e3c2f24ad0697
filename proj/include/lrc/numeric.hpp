#ifndef LRC_NUMERIC_HPP
#define LRC_NUMERIC_HPP

/*
  Exact arithmetic substrate: 64-bit integer vectors/matrices for root and
  weight combinatorics, GMP integers/rationals for everything where
  intermediate growth is possible (polyhedral kernel, Smith normal form,
  rational spans).  No floating point anywhere.
*/

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

using Int = long long;
using ZZ = mpz_class;
using QQ = mpq_class;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row major
using ZVec = std::vector<ZZ>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<QQ>;
using QMat = std::vector<QVec>;

struct IVecHash {
    size_t operator()(const IVec& v) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ (uint64_t)v.size();
        for (Int x : v) {
            uint64_t z = (uint64_t)x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            h ^= z ^ (z >> 31);
        }
        return (size_t)h;
    }
};

// Deterministic 64-bit mixer used wherever seeded randomness is required.
uint64_t splitmix64(uint64_t& state);
uint64_t mix_seed(uint64_t a, uint64_t b);

Int igcd(Int a, Int b);

// ---- small integer vector helpers ----
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& a);
IVec ivec_scale(const IVec& a, Int c);
Int ivec_dot(const IVec& a, const IVec& b);
bool ivec_is_zero(const IVec& a);
Int ivec_content(const IVec& a);              // gcd of entries, 0 for zero vector
IVec ivec_primitive(const IVec& a);           // divide by content (zero vector stays zero)
std::string ivec_str(const IVec& a);

// ---- int matrices ----
IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& m, const IVec& v);  // column-vector convention
IMat imat_transpose(const IMat& m);

// ---- rational helpers ----
QVec qvec_from(const IVec& v);
QMat qmat_from(const IMat& m);
int qmat_rank(QMat m);                          // destructive Gaussian elimination on a copy
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& m, const QVec& v);
QMat qmat_inverse(const QMat& m);               // throws if singular
QMat qmat_transpose(const QMat& m);
std::vector<QVec> qmat_kernel(const QMat& m);   // basis of {x : m x = 0}

// Scale a rational vector by the positive constant making it a primitive
// integer vector.  Zero vector maps to zero.
IVec qvec_primitive_int(const QVec& v);

// ---- arbitrary precision matrices ----
ZVec zvec_from(const IVec& v);
IVec zvec_to_ivec(const ZVec& v);               // throws on overflow
ZZ zvec_content(const ZVec& v);
ZVec zvec_primitive(const ZVec& v);
ZZ zvec_dot(const ZVec& a, const ZVec& b);
ZMat zmat_from(const IMat& m);

// Smith normal form: returns U, D, V with U*M*V = D, U,V unimodular, and the
// diagonal of D a divisibility chain d1 | d2 | ...
struct SmithResult {
    ZMat U, D, V;
};
SmithResult smith_normal_form(const ZMat& M);

// Basis of the integer kernel {x : M x = 0}.
ZMat zmat_kernel(const ZMat& M);

// Row-style lattice basis from a generating set: returns a full-rank set of
// rows generating the same lattice (row Hermite form, deterministic).
ZMat lattice_row_basis(const ZMat& generators, int cols);

// |det| of a square ZMat (fraction-free elimination).
ZZ zmat_abs_det(ZMat m);

// Plain text matrix exchange format: first line "rows cols", then one row of
// whitespace separated integers per line.
std::string matrix_to_text(const ZMat& m);
ZMat matrix_from_text(const std::string& text);
void matrix_write_file(const std::string& path, const ZMat& m);
ZMat matrix_read_file(const std::string& path);

// ---- error types ----
struct InvalidType : std::runtime_error {
    explicit InvalidType(const std::string& s) : std::runtime_error(s) {}
};
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& s) : std::runtime_error(s) {}
};
struct NotDominant : std::runtime_error {
    explicit NotDominant(const std::string& s) : std::runtime_error(s) {}
};
struct UnknownPair : std::runtime_error {
    explicit UnknownPair(const std::string& s) : std::runtime_error(s) {}
};
struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& s) : std::runtime_error(s) {}
};
struct NotPointed : std::runtime_error {
    explicit NotPointed(const std::string& s) : std::runtime_error(s) {}
};

}  // namespace lrc

#endif
