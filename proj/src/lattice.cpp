#include "mckay/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

namespace mckay {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(std::abs(a) / gcd(a, b), std::abs(b));
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int dot(const IVec3& a, const IVec3& b) {
  Int r = 0;
  for (int i = 0; i < 3; ++i) r = checked_add(r, checked_mul(a[i], b[i]));
  return r;
}

IVec3 cross(const IVec3& a, const IVec3& b) {
  return {checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
          checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
          checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))};
}

Int det3(const IVec3& a, const IVec3& b, const IVec3& c) { return dot(a, cross(b, c)); }

IVec3 add(const IVec3& a, const IVec3& b) {
  return {checked_add(a[0], b[0]), checked_add(a[1], b[1]), checked_add(a[2], b[2])};
}

IVec3 sub(const IVec3& a, const IVec3& b) {
  return {checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])};
}

IVec3 scale(const IVec3& a, Int k) {
  return {checked_mul(a[0], k), checked_mul(a[1], k), checked_mul(a[2], k)};
}

Int sum(const IVec3& a) { return checked_add(checked_add(a[0], a[1]), a[2]); }

Int content(const IVec3& a) { return gcd(gcd(a[0], a[1]), a[2]); }

IVec3 primitive_integer(const IVec3& a) {
  Int g = content(a);
  if (g == 0) return a;
  return {a[0] / g, a[1] / g, a[2] / g};
}

std::string to_string(const IVec3& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

RatVec3 RatVec3::make(const IVec3& num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  RatVec3 r{num, den};
  if (r.den < 0) {
    r.den = -r.den;
    r.num = scale(r.num, -1);
  }
  Int g = gcd(content(r.num), r.den);
  if (g > 1) {
    r.num = {r.num[0] / g, r.num[1] / g, r.num[2] / g};
    r.den /= g;
  }
  return r;
}

bool RatVec3::integral_at(Int denominator) const { return denominator % den == 0; }

IVec3 RatVec3::scaled_to(Int denominator) const {
  if (!integral_at(denominator)) {
    throw std::invalid_argument("point " + mckay::to_string(*this) + " is not integral at denominator " +
                                std::to_string(denominator));
  }
  return scale(num, denominator / den);
}

std::string to_string(const RatVec3& v) {
  if (v.den == 1) return to_string(v.num);
  return to_string(v.num) + "/" + std::to_string(v.den);
}

// ---------------------------------------------------------------------------
// Hermite / Smith normal forms

IMat3 hermite_normal_form(const std::vector<IVec3>& input) {
  std::vector<IVec3> rows;
  for (const auto& r : input) {
    if (r != IVec3{0, 0, 0}) rows.push_back(r);
  }
  IMat3 out{};
  std::size_t top = 0;
  for (int col = 0; col < 3; ++col) {
    // Euclid on column `col` over rows[top..]: leaves one row with a
    // non-zero entry there.
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (pivot == rows.size() || std::abs(rows[i][col]) < std::abs(rows[pivot][col]))) {
          pivot = i;
        }
      }
      if (pivot == rows.size()) throw std::invalid_argument("hermite_normal_form: rank deficient generators");
      std::swap(rows[top], rows[pivot]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        Int q = rows[i][col] / rows[top][col];
        if (q != 0) rows[i] = sub(rows[i], scale(rows[top], q));
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] < 0) rows[top] = scale(rows[top], -1);
    out[col] = rows[top];
    ++top;
    // Drop rows that became zero to keep the loop short.
    std::vector<IVec3> kept(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(top));
    for (std::size_t i = top; i < rows.size(); ++i) {
      if (rows[i] != IVec3{0, 0, 0}) kept.push_back(rows[i]);
    }
    rows = std::move(kept);
  }
  // Reduce entries above each pivot into [0, pivot).
  for (int col = 1; col < 3; ++col) {
    for (int r = 0; r < col; ++r) {
      Int a = out[r][col], p = out[col][col];
      Int q = (a - floor_mod(a, p)) / p;
      if (q != 0) out[r] = sub(out[r], scale(out[col], q));
    }
  }
  return out;
}

IMat3 identity3() { return {IVec3{1, 0, 0}, IVec3{0, 1, 0}, IVec3{0, 0, 1}}; }

IMat3 mat_mul(const IMat3& a, const IMat3& b) {
  IMat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s = checked_add(s, checked_mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  }
  return r;
}

Int mat_det(const IMat3& m) { return det3(m[0], m[1], m[2]); }

IMat3 unimodular_inverse(const IMat3& m) {
  Int d = mat_det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: determinant is not ±1");
  IMat3 inv{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of m[j][i]
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      Int cof = checked_sub(checked_mul(m[r0][c0], m[r1][c1]), checked_mul(m[r0][c1], m[r1][c0]));
      inv[i][j] = cof * d;
    }
  }
  return inv;
}

namespace {

void swap_rows(IMat3& m, int a, int b) { std::swap(m[a], m[b]); }

void swap_cols(IMat3& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row[dst] -= q * row[src]
void row_axpy(IMat3& m, int dst, int src, Int q) {
  for (int j = 0; j < 3; ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
}

void col_axpy(IMat3& m, int dst, int src, Int q) {
  for (int i = 0; i < 3; ++i) m[i][dst] = checked_sub(m[i][dst], checked_mul(q, m[i][src]));
}

}  // namespace

SmithForm smith_normal_form(const IMat3& input) {
  IMat3 s = input;
  IMat3 u = identity3();
  IMat3 v = identity3();
  for (int t = 0; t < 3; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < 3; ++i) {
        for (int j = t; j < 3; ++j) {
          if (s[i][j] != 0 && (pi < 0 || std::abs(s[i][j]) < std::abs(s[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;  // trailing block is zero
      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < 3; ++i) {
        Int q = s[i][t] / s[t][t];
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (s[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < 3; ++j) {
        Int q = s[t][j] / s[t][t];
        col_axpy(s, j, t, q);
        col_axpy(v, j, t, q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      int bad = -1;
      for (int i = t + 1; i < 3 && bad < 0; ++i) {
        for (int j = t + 1; j < 3; ++j) {
          if (s[i][j] % s[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      row_axpy(s, t, bad, -1);
      row_axpy(u, t, bad, -1);
    }
    if (s[t][t] < 0) {
      for (int j = 0; j < 3; ++j) {
        s[t][j] = -s[t][j];
        u[t][j] = -u[t][j];
      }
    }
  }
  return {s, u, v};
}

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(Int denominator, IMat3 basis) : denominator_(denominator), basis_(basis) {
  covolume_ = std::abs(mat_det(basis_));
}

Lattice Lattice::integer() { return Lattice(1, identity3()); }

Lattice Lattice::overlattice(Int denominator, const std::vector<IVec3>& scaled_generators) {
  if (denominator <= 0) throw std::invalid_argument("lattice denominator must be positive");
  std::vector<IVec3> rows = {IVec3{denominator, 0, 0}, IVec3{0, denominator, 0}, IVec3{0, 0, denominator}};
  for (const auto& g : scaled_generators) rows.push_back(g);
  IMat3 basis = hermite_normal_form(rows);
  // Shrink the denominator to the smallest one that still makes the basis
  // integral, so equal lattices compare equal.
  Int g = denominator;
  for (const auto& row : basis) g = gcd(g, content(row));
  if (g > 1) {
    denominator /= g;
    for (auto& row : basis) row = {row[0] / g, row[1] / g, row[2] / g};
  }
  return Lattice(denominator, basis);
}

Int Lattice::index() const {
  Int d3 = checked_mul(checked_mul(denominator_, denominator_), denominator_);
  return d3 / covolume_;
}

IVec3 Lattice::coordinates(const IVec3& scaled) const {
  IVec3 rest = scaled;
  IVec3 c{};
  for (int col = 0; col < 3; ++col) {
    if (rest[col] % basis_[col][col] != 0) {
      throw std::invalid_argument("point " + to_string(scaled) + " is not in the lattice");
    }
    c[col] = rest[col] / basis_[col][col];
    rest = sub(rest, scale(basis_[col], c[col]));
  }
  return c;
}

bool Lattice::contains_scaled(const IVec3& scaled) const {
  IVec3 rest = scaled;
  for (int col = 0; col < 3; ++col) {
    if (rest[col] % basis_[col][col] != 0) return false;
    rest = sub(rest, scale(basis_[col], rest[col] / basis_[col][col]));
  }
  return true;
}

bool Lattice::contains(const RatVec3& v) const {
  if (!v.integral_at(denominator_)) return false;
  return contains_scaled(v.scaled_to(denominator_));
}

bool Lattice::operator==(const Lattice& other) const {
  return denominator_ == other.denominator_ && basis_ == other.basis_;
}

bool is_unimodular(const RatVec3& v1, const RatVec3& v2, const RatVec3& v3, const Lattice& lattice) {
  if (v1 == v2 || v2 == v3 || v1 == v3) throw std::invalid_argument("is_unimodular: repeated point");
  if (!lattice.contains(v1) || !lattice.contains(v2) || !lattice.contains(v3)) return false;
  Int d = lattice.denominator();
  Int det = det3(v1.scaled_to(d), v2.scaled_to(d), v3.scaled_to(d));
  return std::abs(det) == lattice.scaled_covolume();
}

RatVec3 primitive(const RatVec3& v, const Lattice& lattice) {
  if (v.is_zero()) throw std::invalid_argument("primitive: zero vector");
  IVec3 w = primitive_integer(v.num);
  Int d = lattice.denominator();
  // w ∈ Z^3 ⊆ L, and w/k ∈ L ⊆ (1/d)Z^3 forces k | d.
  for (Int k = d; k >= 1; --k) {
    if (d % k != 0) continue;
    if (lattice.contains_scaled(scale(w, d / k))) return RatVec3::make(w, k);
  }
  return RatVec3::make(w, 1);
}

}  // namespace mckay
